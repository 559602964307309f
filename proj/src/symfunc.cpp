#include "wreathgen/symfunc.hpp"

#include <algorithm>

#include "wreathgen/error.hpp"
#include "wreathgen/lr.hpp"

namespace wreathgen {

GradedRingElement GradedRingElement::basis(const MultiPartition& label) {
    GradedRingElement e(label.num_components());
    e.terms_.emplace(label, Int(1));
    return e;
}

GradedRingElement GradedRingElement::one(int num_components) {
    return basis(MultiPartition::empty(num_components));
}

Int GradedRingElement::coefficient(const MultiPartition& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Int(0) : it->second;
}

GradedRingElement& GradedRingElement::add(const MultiPartition& label, const Int& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

GradedRingElement GradedRingElement::operator+(const GradedRingElement& o) const {
    GradedRingElement out = *this;
    for (const auto& [label, c] : o.terms_) out.add(label, c);
    return out;
}

GradedRingElement GradedRingElement::operator-(const GradedRingElement& o) const {
    GradedRingElement out = *this;
    for (const auto& [label, c] : o.terms_) out.add(label, -c);
    return out;
}

GradedRingElement GradedRingElement::operator*(const Int& c) const {
    GradedRingElement out(ncomps_);
    if (c == 0) return out;
    for (const auto& [label, x] : terms_) out.terms_.emplace(label, x * c);
    return out;
}

namespace {

// Product of two basis labels: cartesian product of the componentwise LR
// expansions.
void basis_product_into(const MultiPartition& a, const MultiPartition& b, const Int& coeff,
                        GradedRingElement& out) {
    const int m = a.num_components();
    std::vector<std::map<Partition, Int>> factors;
    factors.reserve(static_cast<size_t>(m));
    for (int u = 0; u < m; ++u) factors.push_back(lr_expand(a.at(u), b.at(u)));

    std::vector<Partition> cur(static_cast<size_t>(m));
    auto rec = [&](auto&& self, int u, const Int& c) -> void {
        if (u == m) {
            out.add(MultiPartition(cur), c);
            return;
        }
        for (const auto& [p, cp] : factors[static_cast<size_t>(u)]) {
            cur[static_cast<size_t>(u)] = p;
            self(self, u + 1, c * cp);
        }
    };
    rec(rec, 0, coeff);
}

}  // namespace

GradedRingElement induction_product(const GradedRingElement& a, const GradedRingElement& b) {
    if (a.num_components() != b.num_components())
        throw Error("index-mismatch", "operands have " + std::to_string(a.num_components()) + " and " +
                                          std::to_string(b.num_components()) + " components");
    GradedRingElement out(a.num_components());
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms()) basis_product_into(la, lb, ca * cb, out);
    return out;
}

namespace {

// Permanent-style expansion of det(g_{mu_i - i + j}) over permutations; each
// surviving term is a multiset of positive degrees.
std::map<Partition, Int> jacobi_trudi_expansion(const Partition& mu) {
    const int l = mu.length();
    std::map<Partition, Int> out;
    if (l == 0) {
        out.emplace(Partition(), Int(1));
        return out;
    }
    std::vector<int> cols(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) cols[static_cast<size_t>(i)] = i;
    // iterate over permutations with parity
    std::sort(cols.begin(), cols.end());
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (cols[static_cast<size_t>(i)] > cols[static_cast<size_t>(j)]) ++inversions;
        std::vector<int> degrees;
        bool dead = false;
        for (int i = 0; i < l && !dead; ++i) {
            int d = mu.part(i) - i + cols[static_cast<size_t>(i)];
            if (d < 0) dead = true;
            else if (d > 0) degrees.push_back(d);
        }
        if (dead) continue;
        std::sort(degrees.begin(), degrees.end(), std::greater<int>());
        Int sign = inversions % 2 == 0 ? 1 : -1;
        auto [it, inserted] = out.emplace(Partition(degrees), sign);
        if (!inserted) {
            it->second += sign;
            if (it->second == 0) out.erase(it);
        }
    } while (std::next_permutation(cols.begin(), cols.end()));
    return out;
}

}  // namespace

std::map<Partition, Int> schur_to_elementary(const Partition& lam) {
    return jacobi_trudi_expansion(conjugate(lam));
}

std::map<Partition, Int> schur_to_homogeneous(const Partition& lam) {
    return jacobi_trudi_expansion(lam);
}

namespace {

// Generator of degree k at one component: e_k = s_(1^k), h_k = s_(k).
Partition generator_shape(Flavor flavor, int k) {
    return flavor == Flavor::Elementary ? Partition(std::vector<int>(static_cast<size_t>(k), 1))
                                        : Partition({k});
}

}  // namespace

IntMat generator_transition_matrix(const std::vector<Flavor>& flavors, int degree) {
    const int m = static_cast<int>(flavors.size());
    const std::vector<MultiPartition> basis = multipartitions_of(degree, m);
    const size_t dim = basis.size();
    std::map<MultiPartition, size_t> row_of;
    for (size_t i = 0; i < dim; ++i) row_of.emplace(basis[i], i);

    IntMat matrix(dim, IntVec(dim, Int(0)));
    for (size_t col = 0; col < dim; ++col) {
        // expand the monomial whose degree multisets are basis[col]
        GradedRingElement prod = GradedRingElement::one(m);
        for (int u = 0; u < m; ++u)
            for (int k : basis[col].at(u).parts()) {
                MultiPartition gen = MultiPartition::empty(m);
                gen.at(u) = generator_shape(flavors[static_cast<size_t>(u)], k);
                prod = induction_product(prod, GradedRingElement::basis(gen));
            }
        for (const auto& [label, c] : prod.terms()) matrix[row_of.at(label)][col] = c;
    }
    return matrix;
}

IntMat schur_to_monomial_matrix(const std::vector<Flavor>& flavors, int degree) {
    const int m = static_cast<int>(flavors.size());
    const std::vector<MultiPartition> basis = multipartitions_of(degree, m);
    const size_t dim = basis.size();
    std::map<MultiPartition, size_t> row_of;
    for (size_t i = 0; i < dim; ++i) row_of.emplace(basis[i], i);

    IntMat matrix(dim, IntVec(dim, Int(0)));
    for (size_t col = 0; col < dim; ++col) {
        std::vector<std::map<Partition, Int>> factors;
        for (int u = 0; u < m; ++u)
            factors.push_back(flavors[static_cast<size_t>(u)] == Flavor::Elementary
                                  ? schur_to_elementary(basis[col].at(u))
                                  : schur_to_homogeneous(basis[col].at(u)));
        std::vector<Partition> cur(static_cast<size_t>(m));
        auto rec = [&](auto&& self, int u, const Int& c) -> void {
            if (u == m) {
                matrix[row_of.at(MultiPartition(cur))][col] += c;
                return;
            }
            for (const auto& [p, cp] : factors[static_cast<size_t>(u)]) {
                cur[static_cast<size_t>(u)] = p;
                self(self, u + 1, c * cp);
            }
        };
        rec(rec, 0, Int(1));
    }
    return matrix;
}

GradedCheckReport graded_generation_check(const std::vector<Flavor>& flavors, int d_max) {
    if (d_max < 1) throw Error("bad-degree", "degree bound must be >= 1");
    GradedCheckReport report;
    report.flavors = flavors;
    for (int d = 1; d <= d_max; ++d) {
        IntMat matrix = generator_transition_matrix(flavors, d);
        GradedDegreeReport deg;
        deg.degree = d;
        deg.dimension = static_cast<int>(matrix.size());
        deg.determinant = bareiss_determinant(std::move(matrix));
        deg.unimodular = deg.determinant == 1 || deg.determinant == -1;
        report.all_unimodular = report.all_unimodular && deg.unimodular;
        report.degrees.push_back(std::move(deg));
    }
    return report;
}

}  // namespace wreathgen
