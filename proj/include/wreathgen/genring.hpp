#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wreathgen/intmatrix.hpp"
#include "wreathgen/numeric.hpp"

namespace wreathgen {

struct GenerationReport {
    std::string group;
    std::string theorem;
    std::string eps = "-";
    int n = 0;
    int generator_count = 0;
    bool generates = false;
    std::optional<Int> index;  // lattice index of the closure; nullopt = infinite
    int rounds = 0;
    long long elapsed_ms = 0;

    std::string index_str() const { return index ? index->str() : "inf"; }
};

// Multiplies a lattice row (integer vector over the irreducible basis) by
// generator #g of the family.
using RowMultiply = std::function<IntVec(const IntVec&, size_t g)>;

struct ClosureResult {
    IntMat basis;  // HNF of the Z-span of all monomials in the generators
    GenerationReport report;
};

// Iterates L <- HNF(L u L*gens) from {unit} u gens until the span stops
// growing.  Generates iff the HNF is the identity of the given rank.  Every
// multiplied row's membership in the new span is re-verified by exact back-
// substitution, and the lattice index must divide the previous round's index.
ClosureResult subring_closure(int rank, const IntVec& unit, const std::vector<IntVec>& generators,
                              const RowMultiply& multiply);

}  // namespace wreathgen
