#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wreathgen/group.hpp"
#include "wreathgen/intmatrix.hpp"
#include "wreathgen/numeric.hpp"
#include "wreathgen/partition.hpp"

namespace wreathgen {

// Element of S_n(G) = G^n x| S_n.  permutation[i] = sigma(i);
// (g, sigma)(h, tau) = (g * sigma.h, sigma tau) with (sigma.h)_i = h_{sigma^-1(i)}.
struct WreathElement {
    std::vector<int> components;
    std::vector<int> permutation;

    bool operator==(const WreathElement&) const = default;
    auto operator<=>(const WreathElement&) const = default;
};

WreathElement wreath_identity(int n);
WreathElement wreath_mul(const FiniteGroup& g, const WreathElement& a, const WreathElement& b);
WreathElement wreath_inverse(const FiniteGroup& g, const WreathElement& a);
WreathElement wreath_power(const FiniteGroup& g, const WreathElement& a, int k);  // k >= 0

// Conjugacy class data of an element: for each conjugacy class of G, the
// partition formed by the lengths of the permutation cycles whose cycle
// product lies in that class.
class WreathClassLabel {
public:
    WreathClassLabel() = default;
    explicit WreathClassLabel(std::vector<Partition> cycles) : cycles_(std::move(cycles)) {}
    static WreathClassLabel empty(int num_classes) {
        return WreathClassLabel(std::vector<Partition>(static_cast<size_t>(num_classes)));
    }

    const Partition& at(int g_class) const { return cycles_.at(static_cast<size_t>(g_class)); }
    Partition& at(int g_class) { return cycles_.at(static_cast<size_t>(g_class)); }
    int num_classes() const { return static_cast<int>(cycles_.size()); }
    int total() const;
    Partition cycle_type() const;  // all parts pooled

    bool operator==(const WreathClassLabel&) const = default;
    std::strong_ordering operator<=>(const WreathClassLabel& o) const;

    std::string str() const;

private:
    std::vector<Partition> cycles_;
};

// Disjoint union: classwise concatenation of the part multisets.
WreathClassLabel merge(const WreathClassLabel& a, const WreathClassLabel& b);

// Conjugacy classes of S_n(G): canonical label order, exact sizes via the
// centralizer-order formula (validated against brute force in the tests and
// by the sum-of-sizes identity here).
struct WreathClasses {
    int n = 0;
    std::vector<WreathClassLabel> labels;
    std::vector<Int> sizes;
    int identity_class = 0;

    int count() const { return static_cast<int>(labels.size()); }
    int index_of(const WreathClassLabel& label) const;  // -1 if unknown
};

WreathClasses wreath_classes(const GroupData& base, int n);
Int wreath_centralizer_order(const GroupData& base, const WreathClassLabel& label);
WreathClassLabel classify(const GroupData& base, const WreathElement& w);
WreathElement class_representative(const GroupData& base, const WreathClassLabel& label);

// Integer combination of irreducibles of R(S_n(G)); virtual elements allowed.
struct RepRingElement {
    int n = 0;
    std::map<MultiPartition, Int> coeffs;

    static RepRingElement basis(const MultiPartition& label);
    RepRingElement& add(const MultiPartition& label, const Int& c);  // drops zeros
    bool is_genuine() const;  // all coefficients >= 0
    bool operator==(const RepRingElement&) const = default;
    std::string str() const;
};

// dim V(lam) = n! * prod_U dim(U)^{|lam(U)|} f^{lam(U)} / |lam(U)|!
Int wreath_dimension(const GroupData& base, const MultiPartition& label);

// Filtration level of V(lam) in W_n: n minus the first part of the unit
// component.
int filtration_degree(const MultiPartition& label);

// Induction from S_k(G) x S_{n-k}(G): coefficients are products of
// Littlewood-Richardson coefficients, extended bilinearly.
RepRingElement induce(const RepRingElement& a, const RepRingElement& b);

// R(S_n(G)) with its exact character table.  Construction computes the
// irreducible characters by the class-level induced-character formula from
// the Young-type base representations and certifies the result: identity
// column = dimension formula, sum of squared dimensions = |G|^n n!, exact row
// and column orthogonality.  Immutable afterwards; safe to share across
// threads.
class WreathRing {
public:
    WreathRing(const GroupData& base, int n);

    const GroupData& base() const { return *base_; }
    int n() const { return n_; }
    Int order() const { return order_; }

    const std::vector<MultiPartition>& irreps() const { return irreps_; }
    int num_irreps() const { return static_cast<int>(irreps_.size()); }
    int irrep_index(const MultiPartition& label) const;  // -1 if unknown
    const Int& dimension(int irrep) const { return dims_[static_cast<size_t>(irrep)]; }

    const WreathClasses& classes() const { return classes_; }
    int num_classes() const { return classes_.count(); }
    Int class_size(int cls) const { return classes_.sizes[static_cast<size_t>(cls)]; }
    int identity_class() const { return classes_.identity_class; }
    // class of w^k for w in the given class, by powering a representative
    int class_power(int cls, int k) const;

    const Cyclotomic& character(int irrep, int cls) const {
        return values_[static_cast<size_t>(irrep)][static_cast<size_t>(cls)];
    }
    const Cyclotomic& character_conj(int irrep, int cls) const {
        return conj_values_[static_cast<size_t>(irrep)][static_cast<size_t>(cls)];
    }

    // dense coefficient vector over irreps() order
    IntVec to_vector(const RepRingElement& x) const;
    RepRingElement from_vector(const IntVec& v) const;

    // class-function values of an integer combination of irreducibles
    std::vector<Cyclotomic> class_values(const RepRingElement& x) const;

    // exact tensor decomposition via class-weighted character inner products;
    // non-integral multiplicities signal Error("internal-inconsistency").
    RepRingElement tensor(const RepRingElement& a, const RepRingElement& b) const;

    // exterior power by Newton's identity over the power-map class values;
    // requires a genuine element.
    RepRingElement exterior_power(const RepRingElement& x, int k) const;

    Int dimension_of(const RepRingElement& x) const;

    // Re-runs the construction-time certificate: identity column = dimension
    // formula, sum of squared dimensions = |W|, exact row and column
    // orthogonality.  Throws Error("internal-inconsistency") on any violation.
    void certify() const;

private:
    const GroupData* base_;
    int n_;
    Int order_;
    std::vector<MultiPartition> irreps_;
    std::map<MultiPartition, int> irrep_index_;
    std::vector<Int> dims_;
    WreathClasses classes_;
    std::vector<std::vector<Cyclotomic>> values_;
    std::vector<std::vector<Cyclotomic>> conj_values_;

    void build_character_table();
    RepRingElement decompose_class_function(const std::vector<Cyclotomic>& values) const;
};

// Restriction to S_k(G) x S_{n-k}(G), computed as the exact adjoint of
// induction on characters.  Keys are (label over k, label over n-k).
std::map<std::pair<MultiPartition, MultiPartition>, Int> restrict_element(
    const WreathRing& full, const WreathRing& left, const WreathRing& right,
    const RepRingElement& x);

enum class UnitFlavor { Hooks, TwoRows };
enum class Eps { Sign, Trivial };

struct FamilySpec {
    std::string theorem;              // marin-hooks | marin-two-row | 4.1 | 4.2 | 4.3
    UnitFlavor unit_flavor = UnitFlavor::Hooks;      // 4.1 unit-object choice
    std::map<int, Eps> eps;           // irrep index -> twist for the induced ladders (4.1)

    std::string eps_str(const GroupData& base) const;
};

// The generating families of the generator theorems.  Inapplicable
// (theorem, group, n) combinations signal Error("inapplicable-theorem").
std::vector<RepRingElement> generator_family(const WreathRing& ring, const FamilySpec& spec);

}  // namespace wreathgen
