#pragma once

#include <optional>
#include <vector>

#include "wreathgen/numeric.hpp"

namespace wreathgen {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Row-style Hermite normal form of the span of the input rows: pivot columns
// strictly increasing, pivots positive, entries above each pivot reduced into
// [0, pivot).  Canonical for the row span; zero rows are dropped.
IntMat hnf(IntMat rows);

// Incremental HNF: absorbs one row into an HNF basis, keeping it in HNF.
// Returns true if the span grew.
bool hnf_absorb(IntMat& basis, IntVec row);

// Exact membership of v in the integer row span of an HNF basis.
bool in_span(const IntMat& basis, IntVec v);

// Product of the pivots when the basis has full rank r (= lattice index in
// Z^r); nullopt when rank < r.
std::optional<Int> lattice_index(const IntMat& basis, int r);

// Determinant by fraction-free (Bareiss) elimination.
Int bareiss_determinant(IntMat m);

}  // namespace wreathgen
