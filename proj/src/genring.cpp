#include "wreathgen/genring.hpp"

#include <chrono>

#include "wreathgen/error.hpp"

namespace wreathgen {

ClosureResult subring_closure(int rank, const IntVec& unit, const std::vector<IntVec>& generators,
                              const RowMultiply& multiply) {
    const auto start = std::chrono::steady_clock::now();
    ClosureResult result;
    result.report.generator_count = static_cast<int>(generators.size());

    IntMat basis;
    hnf_absorb(basis, unit);
    for (const IntVec& g : generators) hnf_absorb(basis, g);

    std::optional<Int> prev_index = lattice_index(basis, rank);
    bool grew = true;
    while (grew) {
        grew = false;
        ++result.report.rounds;
        IntMat snapshot = basis;  // multiply this round's rows, not the moving target
        for (const IntVec& row : snapshot)
            for (size_t g = 0; g < generators.size(); ++g) {
                IntVec product = multiply(row, g);
                grew = hnf_absorb(basis, product) || grew;
                if (!in_span(basis, std::move(product)))
                    throw Error("internal-inconsistency", "closure row escaped its own span");
            }
        std::optional<Int> index = lattice_index(basis, rank);
        if (prev_index && index && *prev_index % *index != 0)
            throw Error("internal-inconsistency",
                        "lattice index " + index->str() + " does not divide " + prev_index->str());
        prev_index = index;
    }

    result.report.index = prev_index;
    result.report.generates = prev_index && *prev_index == 1;
    result.report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
    result.basis = std::move(basis);
    return result;
}

}  // namespace wreathgen
