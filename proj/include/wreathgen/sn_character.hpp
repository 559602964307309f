#pragma once

#include "wreathgen/numeric.hpp"
#include "wreathgen/partition.hpp"

namespace wreathgen {

// Character of the Specht module S^lam at a class of cycle type `type`, by
// border-strip (Murnaghan-Nakayama) recursion.  Both partitions must have the
// same size.  Memoized; safe for concurrent callers.
Int sn_character(const Partition& lam, const Partition& type);

}  // namespace wreathgen
