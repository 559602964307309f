#include "wreathgen/wreath.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wreathgen/error.hpp"
#include "wreathgen/lr.hpp"
#include "wreathgen/sn_character.hpp"
#include "wreathgen/symfunc.hpp"

namespace wreathgen {

WreathElement wreath_identity(int n) {
    WreathElement e;
    e.components.assign(static_cast<size_t>(n), 0);
    e.permutation.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e.permutation[static_cast<size_t>(i)] = i;
    return e;
}

WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& a, const WreathElement& b) {
    const int n = static_cast<int>(a.components.size());
    WreathElement out;
    out.components.resize(static_cast<size_t>(n));
    out.permutation.resize(static_cast<size_t>(n));
    std::vector<int> a_perm_inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a_perm_inv[static_cast<size_t>(a.permutation[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        out.components[static_cast<size_t>(i)] =
            g.mul(a.components[static_cast<size_t>(i)],
                  b.components[static_cast<size_t>(a_perm_inv[static_cast<size_t>(i)])]);
        out.permutation[static_cast<size_t>(i)] =
            a.permutation[static_cast<size_t>(b.permutation[static_cast<size_t>(i)])];
    }
    return out;
}

WreathElement wreath_inverse(const FiniteGroup& g, const WreathElement& a) {
    const int n = static_cast<int>(a.components.size());
    WreathElement out;
    out.components.resize(static_cast<size_t>(n));
    out.permutation.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out.permutation[static_cast<size_t>(a.permutation[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; ++i)
        out.components[static_cast<size_t>(i)] =
            g.inverse(a.components[static_cast<size_t>(a.permutation[static_cast<size_t>(i)])]);
    return out;
}

WreathElement wreath_power(const FiniteGroup& g, const WreathElement& a, int k) {
    WreathElement out = wreath_identity(static_cast<int>(a.components.size()));
    for (int i = 0; i < k; ++i) out = wreath_mul(g, out, a);
    return out;
}

int WreathClassLabel::total() const {
    int t = 0;
    for (const auto& p : cycles_) t += p.size();
    return t;
}

Partition WreathClassLabel::cycle_type() const {
    std::vector<int> parts;
    for (const auto& p : cycles_)
        parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::strong_ordering WreathClassLabel::operator<=>(const WreathClassLabel& o) const {
    if (auto c = total() <=> o.total(); c != 0) return c;
    return cycles_ <=> o.cycles_;
}

std::string WreathClassLabel::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int c = 0; c < num_classes(); ++c) {
        if (cycles_[static_cast<size_t>(c)].empty()) continue;
        if (!first) os << ", ";
        os << 'c' << c << ":(" << cycles_[static_cast<size_t>(c)].str() << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

WreathClassLabel merge(const WreathClassLabel& a, const WreathClassLabel& b) {
    WreathClassLabel out = a;
    for (int c = 0; c < a.num_classes(); ++c) {
        std::vector<int> parts = out.at(c).parts();
        parts.insert(parts.end(), b.at(c).parts().begin(), b.at(c).parts().end());
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.at(c) = Partition(std::move(parts));
    }
    return out;
}

int WreathClasses::index_of(const WreathClassLabel& label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || !(*it == label)) return -1;
    return static_cast<int>(it - labels.begin());
}

Int wreath_centralizer_order(const GroupData& base, const WreathClassLabel& label) {
    Int z = 1;
    for (int c = 0; c < label.num_classes(); ++c) {
        Int zg = Int(base.group().order()) / base.classes().size[static_cast<size_t>(c)];
        const Partition& p = label.at(c);
        int i = 0;
        while (i < p.length()) {
            int j = i;
            while (j < p.length() && p.part(j) == p.part(i)) ++j;
            int mult = j - i;
            Int factor = Int(p.part(i)) * zg;
            for (int t = 0; t < mult; ++t) z *= factor;
            z *= factorial(mult);
            i = j;
        }
    }
    return z;
}

WreathClasses wreath_classes(const GroupData& base, int n) {
    if (n < 0) throw Error("bad-config", "n must be nonnegative");
    const int r = base.num_classes();
    WreathClasses out;
    out.n = n;

    // labels = tuples of partitions over G-classes with total size n
    std::vector<Partition> cur(static_cast<size_t>(r));
    auto rec = [&](auto&& self, int slot, int rest) -> void {
        if (slot == r - 1) {
            for (auto& p : partitions_of(rest)) {
                cur[static_cast<size_t>(slot)] = p;
                out.labels.emplace_back(cur);
            }
            cur[static_cast<size_t>(slot)] = Partition();
            return;
        }
        for (int a = 0; a <= rest; ++a)
            for (auto& p : partitions_of(a)) {
                cur[static_cast<size_t>(slot)] = p;
                self(self, slot + 1, rest - a);
            }
        cur[static_cast<size_t>(slot)] = Partition();
    };
    rec(rec, 0, n);
    std::sort(out.labels.begin(), out.labels.end());

    Int group_order = 1;
    for (int i = 0; i < n; ++i) group_order *= base.group().order();
    group_order *= factorial(n);

    Int total = 0;
    for (const auto& label : out.labels) {
        Int size = exact_div(group_order, wreath_centralizer_order(base, label));
        total += size;
        out.sizes.push_back(std::move(size));
    }
    if (total != group_order)
        throw Error("internal-inconsistency", "wreath class sizes sum to " + total.str() +
                                                  " instead of " + group_order.str());

    WreathClassLabel id = WreathClassLabel::empty(r);
    if (n > 0) id.at(base.classes().identity_class) = Partition(std::vector<int>(static_cast<size_t>(n), 1));
    out.identity_class = out.index_of(id);
    return out;
}

WreathClassLabel classify(const GroupData& base, const WreathElement& w) {
    const int n = static_cast<int>(w.permutation.size());
    const int r = base.num_classes();
    std::vector<std::vector<int>> parts(static_cast<size_t>(r));
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        // walk the cycle start -> sigma(start) -> ...; the cycle product is
        // taken in decreasing visit order, matching the tensor-trace identity
        int product = base.group().identity();
        int len = 0;
        int i = start;
        do {
            seen[static_cast<size_t>(i)] = true;
            product = base.group().mul(w.components[static_cast<size_t>(i)], product);
            i = w.permutation[static_cast<size_t>(i)];
            ++len;
        } while (i != start);
        int cls = base.classes().class_of[static_cast<size_t>(product)];
        parts[static_cast<size_t>(cls)].push_back(len);
    }
    WreathClassLabel label = WreathClassLabel::empty(r);
    for (int c = 0; c < r; ++c) {
        std::sort(parts[static_cast<size_t>(c)].begin(), parts[static_cast<size_t>(c)].end(),
                  std::greater<int>());
        label.at(c) = Partition(std::move(parts[static_cast<size_t>(c)]));
    }
    return label;
}

WreathElement class_representative(const GroupData& base, const WreathClassLabel& label) {
    const int n = label.total();
    WreathElement w = wreath_identity(n);
    int pos = 0;
    for (int c = 0; c < label.num_classes(); ++c)
        for (int p : label.at(c).parts()) {
            for (int j = 0; j < p - 1; ++j)
                w.permutation[static_cast<size_t>(pos + j)] = pos + j + 1;
            w.permutation[static_cast<size_t>(pos + p - 1)] = pos;
            w.components[static_cast<size_t>(pos + p - 1)] =
                base.classes().representative[static_cast<size_t>(c)];
            pos += p;
        }
    return w;
}

RepRingElement RepRingElement::basis(const MultiPartition& label) {
    RepRingElement x;
    x.n = label.total();
    x.coeffs.emplace(label, Int(1));
    return x;
}

RepRingElement& RepRingElement::add(const MultiPartition& label, const Int& c) {
    if (coeffs.empty() && n == 0) n = label.total();
    if (label.total() != n)
        throw Error("size-mismatch", "label " + label.str() + " has size " +
                                         std::to_string(label.total()) + ", element lives in degree " +
                                         std::to_string(n));
    if (c == 0) return *this;
    auto [it, inserted] = coeffs.emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
    return *this;
}

bool RepRingElement::is_genuine() const {
    for (const auto& [label, c] : coeffs)
        if (c < 0) return false;
    return true;
}

std::string RepRingElement::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [label, c] : coeffs) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        Int a = c < 0 ? Int(-c) : c;
        if (a != 1) os << a.str() << '*';
        os << 'V' << label.str();
        first = false;
    }
    return os.str();
}

Int wreath_dimension(const GroupData& base, const MultiPartition& label) {
    const int n = label.total();
    Int num = factorial(n);
    Int den = 1;
    for (int u = 0; u < label.num_components(); ++u) {
        const Partition& rho = label.at(u);
        Int d = base.dim(u);
        for (int i = 0; i < rho.size(); ++i) num *= d;
        num *= standard_tableau_count(rho);
        den *= factorial(rho.size());
    }
    return exact_div(num, den);
}

int filtration_degree(const MultiPartition& label) { return label.total() - label.at(0).part(0); }

RepRingElement induce(const RepRingElement& a, const RepRingElement& b) {
    RepRingElement out;
    out.n = a.n + b.n;
    for (const auto& [la, ca] : a.coeffs)
        for (const auto& [lb, cb] : b.coeffs) {
            GradedRingElement prod =
                induction_product(GradedRingElement::basis(la), GradedRingElement::basis(lb));
            for (const auto& [nu, c] : prod.terms()) out.add(nu, c * ca * cb);
        }
    return out;
}

WreathRing::WreathRing(const GroupData& base, int n)
    : base_(&base), n_(n), classes_(wreath_classes(base, n)) {
    if (n < 0) throw Error("bad-config", "n must be nonnegative");
    order_ = 1;
    for (int i = 0; i < n; ++i) order_ *= base.group().order();
    order_ *= factorial(n);

    irreps_ = multipartitions_of(n, base.num_irreps());
    for (int i = 0; i < num_irreps(); ++i) irrep_index_.emplace(irreps_[static_cast<size_t>(i)], i);
    for (const auto& label : irreps_) dims_.push_back(wreath_dimension(base, label));

    build_character_table();
    certify();
}

int WreathRing::irrep_index(const MultiPartition& label) const {
    auto it = irrep_index_.find(label);
    return it == irrep_index_.end() ? -1 : it->second;
}

int WreathRing::class_power(int cls, int k) const {
    WreathElement rep = class_representative(*base_, classes_.labels[static_cast<size_t>(cls)]);
    WreathElement powered = wreath_power(base_->group(), rep, k);
    int idx = classes_.index_of(classify(*base_, powered));
    if (idx < 0) throw Error("internal-inconsistency", "power class not found");
    return idx;
}

// Character of the single-block representation U^{(x) k} (x) Specht(rho) of
// S_k(G) at a block class: product over cycles of chi_U at the cycle-product
// class, times the Specht character at the underlying cycle type.
namespace {

Cyclotomic block_character(const GroupData& base, int u, const Partition& rho,
                           const WreathClassLabel& cls) {
    Cyclotomic value(Rat(1), base.field());
    for (int c = 0; c < cls.num_classes(); ++c) {
        int cycles = cls.at(c).length();
        for (int t = 0; t < cycles; ++t) value *= base.chi(u, c);
    }
    return value * Rat(sn_character(rho, cls.cycle_type()));
}

}  // namespace

void WreathRing::build_character_table() {
    const int m = base_->num_irreps();
    const int num_cls = num_classes();
    values_.assign(static_cast<size_t>(num_irreps()),
                   std::vector<Cyclotomic>(static_cast<size_t>(num_cls), Cyclotomic(Rat(0), base_->field())));

    // block class systems for all sizes up to n
    std::vector<WreathClasses> block_classes;
    for (int k = 0; k <= n_; ++k) block_classes.push_back(wreath_classes(*base_, k));

    // group irreps by their composition (sizes per component)
    std::map<std::vector<int>, std::vector<int>> by_composition;
    for (int i = 0; i < num_irreps(); ++i) {
        std::vector<int> sizes;
        for (int u = 0; u < m; ++u) sizes.push_back(irreps_[static_cast<size_t>(i)].at(u).size());
        by_composition[sizes].push_back(i);
    }

    for (const auto& [sizes, irrep_ids] : by_composition) {
        // |H| for the Young-type subgroup prod_u S_{sizes[u]}(G)
        Int subgroup_order = 1;
        for (int i = 0; i < n_; ++i) subgroup_order *= base_->group().order();
        for (int u = 0; u < m; ++u) subgroup_order *= factorial(sizes[static_cast<size_t>(u)]);

        // iterate over tuples of block classes; accumulate
        //   sum over tuples merging to a W-class of
        //     prod_u size(l_u) * blockchar_u(l_u)
        std::vector<int> tuple(static_cast<size_t>(m), 0);
        auto rec = [&](auto&& self, int u, const Int& weight, const WreathClassLabel& merged) -> void {
            if (u == m) {
                int cls = classes_.index_of(merged);
                if (cls < 0) throw Error("internal-inconsistency", "merged class not found");
                for (int id : irrep_ids) {
                    Cyclotomic v(Rat(weight), base_->field());
                    for (int t = 0; t < m; ++t) {
                        const Partition& rho = irreps_[static_cast<size_t>(id)].at(t);
                        const WreathClasses& bc = block_classes[static_cast<size_t>(sizes[static_cast<size_t>(t)])];
                        v *= block_character(*base_, t, rho, bc.labels[static_cast<size_t>(tuple[static_cast<size_t>(t)])]);
                    }
                    values_[static_cast<size_t>(id)][static_cast<size_t>(cls)] += v;
                }
                return;
            }
            const WreathClasses& bc = block_classes[static_cast<size_t>(sizes[static_cast<size_t>(u)])];
            for (int c = 0; c < bc.count(); ++c) {
                tuple[static_cast<size_t>(u)] = c;
                self(self, u + 1, weight * bc.sizes[static_cast<size_t>(c)],
                     merge(merged, bc.labels[static_cast<size_t>(c)]));
            }
        };
        rec(rec, 0, Int(1), WreathClassLabel::empty(base_->num_classes()));

        // scale: |W| / (|H| * class size)
        for (int id : irrep_ids)
            for (int c = 0; c < num_cls; ++c) {
                Rat scale(order_, subgroup_order * classes_.sizes[static_cast<size_t>(c)]);
                values_[static_cast<size_t>(id)][static_cast<size_t>(c)] =
                    values_[static_cast<size_t>(id)][static_cast<size_t>(c)] * scale;
            }
    }

    conj_values_.resize(values_.size());
    for (size_t i = 0; i < values_.size(); ++i) {
        conj_values_[i].reserve(values_[i].size());
        for (const auto& v : values_[i]) conj_values_[i].push_back(v.complex_conjugate());
    }
}

void WreathRing::certify() const {
    const Cyclotomic zero(Rat(0), base_->field());
    // identity column must match the dimension formula; dims sum to |W|
    Int dim_square_sum = 0;
    for (int i = 0; i < num_irreps(); ++i) {
        const Cyclotomic& v = character(i, identity_class());
        if (!v.is_rational() || v.rational() != Rat(dims_[static_cast<size_t>(i)]))
            throw Error("internal-inconsistency",
                        "character of " + irreps_[static_cast<size_t>(i)].str() +
                            " at the identity is " + v.str() + ", dimension formula gives " +
                            dims_[static_cast<size_t>(i)].str());
        dim_square_sum += dims_[static_cast<size_t>(i)] * dims_[static_cast<size_t>(i)];
    }
    if (dim_square_sum != order_)
        throw Error("internal-inconsistency", "sum of squared dimensions " + dim_square_sum.str() +
                                                  " != group order " + order_.str());

    // exact row orthogonality
    for (int i = 0; i < num_irreps(); ++i)
        for (int j = i; j < num_irreps(); ++j) {
            Cyclotomic sum = zero;
            for (int c = 0; c < num_classes(); ++c)
                sum += character(i, c) * character_conj(j, c) * Rat(classes_.sizes[static_cast<size_t>(c)]);
            if (!(sum == Cyclotomic(Rat(i == j ? order_ : 0), base_->field())))
                throw Error("internal-inconsistency",
                            "row orthogonality fails for " + irreps_[static_cast<size_t>(i)].str() +
                                ", " + irreps_[static_cast<size_t>(j)].str());
        }

    // exact column orthogonality
    for (int c = 0; c < num_classes(); ++c)
        for (int d = c; d < num_classes(); ++d) {
            Cyclotomic sum = zero;
            for (int i = 0; i < num_irreps(); ++i)
                sum += character(i, c) * character_conj(i, d);
            Rat expected = c == d ? Rat(order_, classes_.sizes[static_cast<size_t>(c)]) : Rat(0);
            if (!(sum == Cyclotomic(expected, base_->field())))
                throw Error("internal-inconsistency",
                            "column orthogonality fails for classes " +
                                classes_.labels[static_cast<size_t>(c)].str() + ", " +
                                classes_.labels[static_cast<size_t>(d)].str());
        }
}

IntVec WreathRing::to_vector(const RepRingElement& x) const {
    IntVec v(static_cast<size_t>(num_irreps()), Int(0));
    for (const auto& [label, c] : x.coeffs) {
        int idx = irrep_index(label);
        if (idx < 0)
            throw Error("size-mismatch", "label " + label.str() + " does not live in degree " +
                                             std::to_string(n_));
        v[static_cast<size_t>(idx)] = c;
    }
    return v;
}

RepRingElement WreathRing::from_vector(const IntVec& v) const {
    RepRingElement x;
    x.n = n_;
    for (int i = 0; i < num_irreps(); ++i)
        if (v[static_cast<size_t>(i)] != 0) x.coeffs.emplace(irreps_[static_cast<size_t>(i)], v[static_cast<size_t>(i)]);
    return x;
}

std::vector<Cyclotomic> WreathRing::class_values(const RepRingElement& x) const {
    std::vector<Cyclotomic> values(static_cast<size_t>(num_classes()), Cyclotomic(Rat(0), base_->field()));
    for (const auto& [label, coeff] : x.coeffs) {
        int idx = irrep_index(label);
        if (idx < 0)
            throw Error("size-mismatch", "label " + label.str() + " does not live in degree " +
                                             std::to_string(n_));
        for (int c = 0; c < num_classes(); ++c)
            values[static_cast<size_t>(c)] += character(idx, c) * Rat(coeff);
    }
    return values;
}

RepRingElement WreathRing::decompose_class_function(const std::vector<Cyclotomic>& values) const {
    RepRingElement out;
    out.n = n_;
    for (int i = 0; i < num_irreps(); ++i) {
        Cyclotomic sum(Rat(0), base_->field());
        for (int c = 0; c < num_classes(); ++c)
            sum += values[static_cast<size_t>(c)] * character_conj(i, c) * Rat(classes_.sizes[static_cast<size_t>(c)]);
        Cyclotomic coeff = sum / Rat(order_);
        if (!coeff.is_rational() || !is_integer(coeff.rational()))
            throw Error("internal-inconsistency",
                        "multiplicity of " + irreps_[static_cast<size_t>(i)].str() +
                            " is not an integer: " + coeff.str());
        out.add(irreps_[static_cast<size_t>(i)], to_integer(coeff.rational()));
    }
    return out;
}

RepRingElement WreathRing::tensor(const RepRingElement& a, const RepRingElement& b) const {
    if (a.n != n_ || b.n != n_)
        throw Error("size-mismatch", "tensor operands must live in degree " + std::to_string(n_));
    std::vector<Cyclotomic> va = class_values(a), vb = class_values(b);
    for (int c = 0; c < num_classes(); ++c) va[static_cast<size_t>(c)] *= vb[static_cast<size_t>(c)];
    return decompose_class_function(va);
}

Int WreathRing::dimension_of(const RepRingElement& x) const {
    Int d = 0;
    for (const auto& [label, c] : x.coeffs) {
        int idx = irrep_index(label);
        if (idx < 0) throw Error("size-mismatch", "label " + label.str() + " out of ring");
        d += c * dims_[static_cast<size_t>(idx)];
    }
    return d;
}

RepRingElement WreathRing::exterior_power(const RepRingElement& x, int k) const {
    if (!x.is_genuine())
        throw Error("requires-genuine-element",
                    "exterior powers are defined for genuine representations only");
    if (k < 0) throw Error("bad-config", "exterior power index must be >= 0");
    RepRingElement zero_elt;
    zero_elt.n = n_;
    if (Int(k) > dimension_of(x)) return zero_elt;

    // Newton's identity: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i, with
    // p_i(w) = chi_x(w^i) evaluated classwise.
    const Cyclotomic one(Rat(1), base_->field());
    std::vector<Cyclotomic> base_values = class_values(x);
    std::vector<std::vector<Cyclotomic>> power_values;  // [i-1][class]
    for (int i = 1; i <= k; ++i) {
        std::vector<Cyclotomic> pv(static_cast<size_t>(num_classes()), Cyclotomic(Rat(0), base_->field()));
        for (int c = 0; c < num_classes(); ++c)
            pv[static_cast<size_t>(c)] = base_values[static_cast<size_t>(class_power(c, i))];
        power_values.push_back(std::move(pv));
    }

    std::vector<std::vector<Cyclotomic>> e;  // e[j][class]
    e.push_back(std::vector<Cyclotomic>(static_cast<size_t>(num_classes()), one));
    for (int j = 1; j <= k; ++j) {
        std::vector<Cyclotomic> ej(static_cast<size_t>(num_classes()), Cyclotomic(Rat(0), base_->field()));
        for (int i = 1; i <= j; ++i) {
            const int sign = i % 2 == 1 ? 1 : -1;
            for (int c = 0; c < num_classes(); ++c) {
                Cyclotomic term = e[static_cast<size_t>(j - i)][static_cast<size_t>(c)] *
                                  power_values[static_cast<size_t>(i - 1)][static_cast<size_t>(c)];
                ej[static_cast<size_t>(c)] += sign == 1 ? term : -term;
            }
        }
        for (int c = 0; c < num_classes(); ++c)
            ej[static_cast<size_t>(c)] = ej[static_cast<size_t>(c)] / Rat(j);
        e.push_back(std::move(ej));
    }

    RepRingElement out = decompose_class_function(e[static_cast<size_t>(k)]);
    if (!out.is_genuine())
        throw Error("internal-inconsistency", "exterior power of a genuine element came out virtual");
    return out;
}

std::map<std::pair<MultiPartition, MultiPartition>, Int> restrict_element(
    const WreathRing& full, const WreathRing& left, const WreathRing& right,
    const RepRingElement& x) {
    if (left.n() + right.n() != full.n())
        throw Error("size-mismatch", "restriction blocks must add up to n");
    const CyclotomicField& field = full.base().field();

    // restricted class function F(l1, l2) = chi_x(merge(l1, l2))
    std::vector<Cyclotomic> xv = full.class_values(x);
    const int c1 = left.num_classes(), c2 = right.num_classes();
    std::vector<std::vector<Cyclotomic>> f(
        static_cast<size_t>(c1), std::vector<Cyclotomic>(static_cast<size_t>(c2), Cyclotomic(Rat(0), field)));
    for (int a = 0; a < c1; ++a)
        for (int b = 0; b < c2; ++b) {
            int merged = full.classes().index_of(
                merge(left.classes().labels[static_cast<size_t>(a)], right.classes().labels[static_cast<size_t>(b)]));
            if (merged < 0) throw Error("internal-inconsistency", "merged class not found");
            f[static_cast<size_t>(a)][static_cast<size_t>(b)] = xv[static_cast<size_t>(merged)];
        }

    // decompose factorwise: first against the left irreps, then the right
    std::map<std::pair<MultiPartition, MultiPartition>, Int> out;
    for (int i = 0; i < left.num_irreps(); ++i) {
        std::vector<Cyclotomic> partial(static_cast<size_t>(c2), Cyclotomic(Rat(0), field));
        for (int b = 0; b < c2; ++b) {
            Cyclotomic sum(Rat(0), field);
            for (int a = 0; a < c1; ++a)
                sum += f[static_cast<size_t>(a)][static_cast<size_t>(b)] * left.character_conj(i, a) *
                       Rat(left.class_size(a));
            partial[static_cast<size_t>(b)] = sum / Rat(left.order());
        }
        for (int j = 0; j < right.num_irreps(); ++j) {
            Cyclotomic sum(Rat(0), field);
            for (int b = 0; b < c2; ++b)
                sum += partial[static_cast<size_t>(b)] * right.character_conj(j, b) * Rat(right.class_size(b));
            Cyclotomic coeff = sum / Rat(right.order());
            if (!coeff.is_rational() || !is_integer(coeff.rational()))
                throw Error("internal-inconsistency", "restriction multiplicity is not an integer");
            Int c = to_integer(coeff.rational());
            if (c != 0)
                out.emplace(std::make_pair(left.irreps()[static_cast<size_t>(i)],
                                           right.irreps()[static_cast<size_t>(j)]),
                            std::move(c));
        }
    }
    return out;
}

std::string FamilySpec::eps_str(const GroupData& base) const {
    if (theorem != "4.1") return "-";
    std::ostringstream os;
    os << (unit_flavor == UnitFlavor::Hooks ? "hooks" : "two-rows");
    for (const auto& [idx, e] : eps)
        os << ',' << base.table().irrep_names[static_cast<size_t>(idx)] << ':'
           << (e == Eps::Sign ? "sign" : "triv");
    return os.str();
}

namespace {

// Ind_{S_k(G) x S_{n-k}(G)}(V^{k,eps} (x) 1) for the irrep u of G.
RepRingElement induced_ladder_element(const WreathRing& ring, int u, int k, Eps eps) {
    const int m = ring.base().num_irreps();
    MultiPartition top = MultiPartition::empty(m);
    top.at(u) = eps == Eps::Sign ? Partition(std::vector<int>(static_cast<size_t>(k), 1))
                                 : Partition({k});
    MultiPartition unit_rest = MultiPartition::empty(m);
    if (ring.n() - k > 0) unit_rest.at(0) = Partition({ring.n() - k});
    return induce(RepRingElement::basis(top), RepRingElement::basis(unit_rest));
}

void push_unique(std::vector<RepRingElement>& family, RepRingElement x) {
    if (x.coeffs.empty()) return;
    for (const auto& y : family)
        if (y == x) return;
    family.push_back(std::move(x));
}

}  // namespace

std::vector<RepRingElement> generator_family(const WreathRing& ring, const FamilySpec& spec) {
    const GroupData& base = ring.base();
    const int n = ring.n();
    const int m = base.num_irreps();
    std::vector<RepRingElement> family;

    auto unit_elements = [&](UnitFlavor flavor) {
        if (flavor == UnitFlavor::Hooks) {
            for (int k = 0; k <= n - 1; ++k) {
                MultiPartition label = MultiPartition::empty(m);
                label.at(0) = hook(n, k);
                push_unique(family, RepRingElement::basis(label));
            }
        } else {
            for (int k = 0; 2 * k <= n; ++k) {
                MultiPartition label = MultiPartition::empty(m);
                label.at(0) = two_row(n, k);
                push_unique(family, RepRingElement::basis(label));
            }
        }
    };

    if (spec.theorem == "marin-hooks" || spec.theorem == "marin-two-row") {
        if (m != 1)
            throw Error("inapplicable-theorem",
                        "the Marin families are statements about S_n itself; use the trivial group");
        if (n < 1) throw Error("inapplicable-theorem", "need n >= 1");
        unit_elements(spec.theorem == "marin-hooks" ? UnitFlavor::Hooks : UnitFlavor::TwoRows);
        return family;
    }

    if (spec.theorem == "4.1") {
        if (n < 1) throw Error("inapplicable-theorem", "need n >= 1");
        unit_elements(spec.unit_flavor);
        for (int u = 0; u < m; ++u) {
            Eps eps = Eps::Sign;
            if (auto it = spec.eps.find(u); it != spec.eps.end()) eps = it->second;
            else if (u == 0) continue;  // induced ladder at the unit object only on request
            for (int k = 1; k <= n; ++k) push_unique(family, induced_ladder_element(ring, u, k, eps));
        }
        return family;
    }

    if (spec.theorem == "4.2" || spec.theorem == "4.3") {
        if (spec.theorem == "4.2" && !base.is_abelian())
            throw Error("inapplicable-theorem", "hook-like generating sets need an abelian group");
        if (spec.theorem == "4.3" && base.group().order() != 2)
            throw Error("inapplicable-theorem", "type B means the cyclic group of order 2");
        if (n < 2) throw Error("inapplicable-theorem", "reflection representations need n >= 2");

        std::vector<RepRingElement> seeds;
        // reflection representation of S_n, G acting trivially
        MultiPartition refl = MultiPartition::empty(m);
        refl.at(0) = Partition({n - 1, 1});
        seeds.push_back(RepRingElement::basis(refl));
        // Ind(chi (x) 1) for every nontrivial character chi
        for (int u = 1; u < m; ++u) seeds.push_back(induced_ladder_element(ring, u, 1, Eps::Sign));

        for (const auto& seed : seeds) {
            Int d = ring.dimension_of(seed);
            for (int k = 0; Int(k) <= d; ++k) push_unique(family, ring.exterior_power(seed, k));
        }
        return family;
    }

    throw Error("inapplicable-theorem", "unknown theorem id '" + spec.theorem + "'");
}

}  // namespace wreathgen
