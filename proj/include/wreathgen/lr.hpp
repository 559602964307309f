#pragma once

#include <map>

#include "wreathgen/numeric.hpp"
#include "wreathgen/partition.hpp"

namespace wreathgen {

// Littlewood-Richardson coefficient c_{lam,mu}^{nu}.  Degenerate inputs
// (size mismatch, lam not contained in nu) give 0.  Memoized; safe for
// concurrent callers.
Int lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Full product expansion s_lam * s_mu = sum_nu c_{lam,mu}^nu s_nu.
std::map<Partition, Int> lr_expand(const Partition& lam, const Partition& mu);

// Is nu/lam a horizontal (resp. vertical) strip?  Preconditions: lam inside nu.
bool is_horizontal_strip(const Partition& lam, const Partition& nu);
bool is_vertical_strip(const Partition& lam, const Partition& nu);

namespace detail {
// Direct enumeration of LR skew tableaux, bypassing the Pieri fast path and
// the cache.  Exposed so tests can cross-check the fast path against it.
Int lr_count_tableaux(const Partition& lam, const Partition& mu, const Partition& nu);
}  // namespace detail

}  // namespace wreathgen
