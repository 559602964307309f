#include "wreathgen/verify.hpp"

#include <algorithm>

#include "wreathgen/error.hpp"
#include "wreathgen/lr.hpp"

namespace wreathgen {

const WreathRing& RingCache::get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = rings_.find(n);
    if (it == rings_.end())
        it = rings_.emplace(n, std::make_unique<WreathRing>(*base_, n)).first;
    return *it->second;
}

GenerationReport verify_generation(const WreathRing& ring, const std::vector<RepRingElement>& gens,
                                   const std::string& theorem, const std::string& eps_desc) {
    const int rank = ring.num_irreps();

    // structure-constant matrix per generator: row lam -> V(lam) (x) gen
    std::vector<IntMat> mats;
    mats.reserve(gens.size());
    for (const auto& g : gens) {
        IntMat mat;
        mat.reserve(static_cast<size_t>(rank));
        for (const auto& lam : ring.irreps())
            mat.push_back(ring.to_vector(ring.tensor(RepRingElement::basis(lam), g)));
        mats.push_back(std::move(mat));
    }

    auto multiply = [&](const IntVec& row, size_t g) {
        IntVec out(static_cast<size_t>(rank), Int(0));
        for (int lam = 0; lam < rank; ++lam) {
            if (row[static_cast<size_t>(lam)] == 0) continue;
            const IntVec& line = mats[g][static_cast<size_t>(lam)];
            for (int nu = 0; nu < rank; ++nu)
                out[static_cast<size_t>(nu)] += row[static_cast<size_t>(lam)] * line[static_cast<size_t>(nu)];
        }
        return out;
    };

    MultiPartition trivial = MultiPartition::empty(ring.base().num_irreps());
    if (ring.n() > 0) trivial.at(0) = Partition({ring.n()});
    std::vector<IntVec> gen_vectors;
    for (const auto& g : gens) gen_vectors.push_back(ring.to_vector(g));

    ClosureResult closure =
        subring_closure(rank, ring.to_vector(RepRingElement::basis(trivial)), gen_vectors, multiply);
    closure.report.group = ring.base().name();
    closure.report.theorem = theorem;
    closure.report.eps = eps_desc;
    closure.report.n = ring.n();
    return closure.report;
}

GenerationReport verify_theorem(const WreathRing& ring, const FamilySpec& spec) {
    return verify_generation(ring, generator_family(ring, spec), spec.theorem,
                             spec.eps_str(ring.base()));
}

namespace {

Int lr_product(const MultiPartition& lambda, const MultiPartition& mu, const MultiPartition& nu) {
    Int prod = 1;
    for (int u = 0; u < lambda.num_components(); ++u) {
        prod *= lr_coefficient(lambda.at(u), mu.at(u), nu.at(u));
        if (prod == 0) break;
    }
    return prod;
}

}  // namespace

TensorLeadReport check_tensor_lead(RingCache& rings, const MultiPartition& lambda, const MultiPartition& mu) {
    TensorLeadReport report;
    report.lambda = lambda;
    report.mu = mu;
    const int s = lambda.total() + mu.total();
    report.window_lo = s;
    report.window_hi = s + 4;
    const int m = rings.base().num_irreps();
    const std::vector<MultiPartition> stable_nus = multipartitions_of(s, m);

    std::optional<int> onset;
    for (int n = report.window_lo; n <= report.window_hi; ++n) {
        auto ln = pad(lambda, n), mn = pad(mu, n);
        if (!ln || !mn) {
            onset.reset();  // not yet applicable
            continue;
        }
        const WreathRing& ring = rings.get(n);
        RepRingElement product =
            ring.tensor(RepRingElement::basis(*ln), RepRingElement::basis(*mn));

        bool ok = true;
        for (const auto& [label, coeff] : product.coeffs)
            if (filtration_degree(label) > s) ok = false;
        for (const auto& nu : stable_nus) {
            auto nun = pad(nu, n);
            if (!nun) continue;
            Int expected = lr_product(lambda, mu, nu);
            auto it = product.coeffs.find(*nun);
            Int actual = it == product.coeffs.end() ? Int(0) : it->second;
            if (actual != expected) ok = false;
        }
        if (ok) {
            if (!onset) onset = n;
        } else {
            onset.reset();
        }
    }
    report.onset = onset;
    report.holds = onset.has_value();
    return report;
}

RestrictionLeadReport check_restriction_lead(RingCache& rings, const MultiPartition& mu, int k) {
    RestrictionLeadReport report;
    report.mu = mu;
    report.k = k;
    report.window_lo = mu.total() + k;
    report.window_hi = report.window_lo + 4;
    const int m = rings.base().num_irreps();

    std::optional<int> onset;
    for (int n = report.window_lo; n <= report.window_hi; ++n) {
        auto mn = pad(mu, n), m_rest = pad(mu, n - k);
        if (!mn || !m_rest) {
            onset.reset();
            continue;
        }
        const WreathRing& full = rings.get(n);
        const WreathRing& left = rings.get(k);
        const WreathRing& right = rings.get(n - k);
        auto restriction = restrict_element(full, left, right, RepRingElement::basis(*mn));

        MultiPartition trivial_left = MultiPartition::empty(m);
        if (k > 0) trivial_left.at(0) = Partition({k});

        bool ok = true;
        bool lead_seen = false;
        for (const auto& [key, coeff] : restriction) {
            const auto& [left_label, right_label] = key;
            if (left_label == trivial_left && right_label == *m_rest) {
                lead_seen = true;
                if (coeff != 1) ok = false;
            } else if (filtration_degree(right_label) >= mu.total()) {
                ok = false;
            }
        }
        if (!lead_seen) ok = false;
        if (ok) {
            if (!onset) onset = n;
        } else {
            onset.reset();
        }
    }
    report.onset = onset;
    report.holds = onset.has_value();
    return report;
}

StabilityReport check_stability(RingCache& rings, const MultiPartition& lambda,
                                const MultiPartition& mu, int nu_size_cap) {
    StabilityReport report;
    report.lambda = lambda;
    report.mu = mu;
    const int s = lambda.total() + mu.total();
    report.window_lo = s;
    report.window_hi = s + 4;
    const int top_lo = s + 2;  // upper half of the window, midpoint included
    const int m = rings.base().num_irreps();

    std::vector<MultiPartition> nus;
    for (int size = 0; size <= nu_size_cap; ++size)
        for (const auto& nu : multipartitions_of(size, m)) nus.push_back(nu);

    report.constant = true;
    for (const auto& nu : nus) {
        std::optional<Int> stable_value;
        bool constant_for_nu = true;
        for (int n = top_lo; n <= report.window_hi; ++n) {
            auto ln = pad(lambda, n), mn = pad(mu, n), nun = pad(nu, n);
            if (!ln || !mn || !nun) continue;
            const WreathRing& ring = rings.get(n);
            RepRingElement product =
                ring.tensor(RepRingElement::basis(*ln), RepRingElement::basis(*mn));
            auto it = product.coeffs.find(*nun);
            Int value = it == product.coeffs.end() ? Int(0) : it->second;
            if (stable_value && *stable_value != value) constant_for_nu = false;
            stable_value = value;
        }
        if (!constant_for_nu) report.constant = false;
        if (stable_value && *stable_value != 0)
            report.stable_multiplicities.emplace_back(nu, *stable_value);
    }
    return report;
}

}  // namespace wreathgen
