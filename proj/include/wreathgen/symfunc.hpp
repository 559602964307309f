#pragma once

#include <map>
#include <string>
#include <vector>

#include "wreathgen/intmatrix.hpp"
#include "wreathgen/numeric.hpp"
#include "wreathgen/partition.hpp"

namespace wreathgen {

// Integer combination of multipartition basis labels: the Schur-basis model
// of the induction ring (one copy of the symmetric functions per irreducible
// of the base group).
class GradedRingElement {
public:
    explicit GradedRingElement(int num_components) : ncomps_(num_components) {}
    static GradedRingElement basis(const MultiPartition& label);
    static GradedRingElement one(int num_components);

    int num_components() const { return ncomps_; }
    const std::map<MultiPartition, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const MultiPartition& label) const;

    GradedRingElement& add(const MultiPartition& label, const Int& c);  // drops zeros
    GradedRingElement operator+(const GradedRingElement& o) const;
    GradedRingElement operator-(const GradedRingElement& o) const;
    GradedRingElement operator*(const Int& c) const;

    bool operator==(const GradedRingElement&) const = default;

private:
    int ncomps_;
    std::map<MultiPartition, Int> terms_;
};

// Componentwise Littlewood-Richardson product, extended bilinearly.
// Mismatched component counts signal Error("index-mismatch", ...).
GradedRingElement induction_product(const GradedRingElement& a, const GradedRingElement& b);

enum class Flavor { Elementary, Homogeneous };

// s_lam as an integer polynomial in e_1, e_2, ... (dual Jacobi-Trudi) or in
// h_1, h_2, ... (Jacobi-Trudi).  A monomial is its multiset of degrees,
// stored as a partition.
std::map<Partition, Int> schur_to_elementary(const Partition& lam);
std::map<Partition, Int> schur_to_homogeneous(const Partition& lam);

struct GradedDegreeReport {
    int degree = 0;
    int dimension = 0;
    Int determinant;
    bool unimodular = false;
};

struct GradedCheckReport {
    std::vector<Flavor> flavors;
    std::vector<GradedDegreeReport> degrees;
    bool all_unimodular = true;
};

// Transition matrix, in basis order, from degree-d monomials in the chosen
// generators (e_k or h_k per component) to the Schur basis.  Columns are
// indexed by multipartitions of d via "degree multiset per component".
IntMat generator_transition_matrix(const std::vector<Flavor>& flavors, int degree);

// Inverse route via Jacobi-Trudi: each Schur basis element expanded as a
// polynomial in the generators.  generator_transition_matrix * this = I.
IntMat schur_to_monomial_matrix(const std::vector<Flavor>& flavors, int degree);

// Degree-by-degree free-generation certificate: the transition matrix of
// every degree <= d_max must be unimodular.
GradedCheckReport graded_generation_check(const std::vector<Flavor>& flavors, int d_max);

}  // namespace wreathgen
