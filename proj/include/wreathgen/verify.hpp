#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wreathgen/genring.hpp"
#include "wreathgen/wreath.hpp"

namespace wreathgen {

// Per-degree wreath rings over a fixed base group; built once, shared
// read-only afterwards.
class RingCache {
public:
    explicit RingCache(const GroupData& base) : base_(&base) {}

    const GroupData& base() const { return *base_; }
    const WreathRing& get(int n);

private:
    const GroupData* base_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<WreathRing>> rings_;
};

// Lattice-closure verdict for an explicit generator list.
GenerationReport verify_generation(const WreathRing& ring, const std::vector<RepRingElement>& gens,
                                   const std::string& theorem, const std::string& eps_desc);

// Builds the theorem's family and runs the closure.
GenerationReport verify_theorem(const WreathRing& ring, const FamilySpec& spec);

// ---- classical shadows of the stable-range relations ----

// Tensor products of padded labels: top-filtration-degree coefficients must
// match the componentwise LR products, everything else sits strictly lower.
struct TensorLeadReport {
    MultiPartition lambda, mu;
    int window_lo = 0, window_hi = 0;
    std::optional<int> onset;  // first n from which the relation holds through window_hi
    bool holds = false;
};

// Restriction of a padded label: lead term 1 (x) V(mu_{n-k}) with multiplicity
// exactly one, all other right factors strictly smaller as stable labels.
struct RestrictionLeadReport {
    MultiPartition mu;
    int k = 0;
    int window_lo = 0, window_hi = 0;
    std::optional<int> onset;
    bool holds = false;
};

// Stable tensor multiplicities: constant over the top half of the window.
struct StabilityReport {
    MultiPartition lambda, mu;
    int window_lo = 0, window_hi = 0;
    bool constant = false;
    std::vector<std::pair<MultiPartition, Int>> stable_multiplicities;
};

TensorLeadReport check_tensor_lead(RingCache& rings, const MultiPartition& lambda, const MultiPartition& mu);
RestrictionLeadReport check_restriction_lead(RingCache& rings, const MultiPartition& mu, int k);
StabilityReport check_stability(RingCache& rings, const MultiPartition& lambda,
                                const MultiPartition& mu, int nu_size_cap);

}  // namespace wreathgen
