#include "doctest.h"

#include "wreathgen/error.hpp"
#include "wreathgen/symfunc.hpp"

using namespace wreathgen;

namespace {

MultiPartition mp1(const char* s) { return parse_multipartition(s, 1); }
MultiPartition mp2(const char* s) { return parse_multipartition(s, 2); }

GradedRingElement basis1(const char* s) { return GradedRingElement::basis(mp1(s)); }

}  // namespace

TEST_CASE("induction product, one component") {
    GradedRingElement square = induction_product(basis1("[1]"), basis1("[1]"));
    CHECK(square.terms().size() == 2);
    CHECK(square.coefficient(mp1("[2]")) == 1);
    CHECK(square.coefficient(mp1("[1,1]")) == 1);
}

TEST_CASE("unit law") {
    GradedRingElement x = basis1("[3,1]") + basis1("[2]") * Int(-4);
    CHECK(induction_product(x, GradedRingElement::one(1)) == x);
    GradedRingElement y = GradedRingElement::basis(mp2("[2,1|1]"));
    CHECK(induction_product(GradedRingElement::one(2), y) == y);
}

TEST_CASE("disjoint components multiply componentwise") {
    GradedRingElement p =
        induction_product(GradedRingElement::basis(mp2("[|1]")), GradedRingElement::basis(mp2("[1|]")));
    CHECK(p.terms().size() == 1);
    CHECK(p.coefficient(mp2("[1|1]")) == 1);
}

TEST_CASE("component count mismatch") {
    CHECK_THROWS_WITH_AS(induction_product(GradedRingElement::one(1), GradedRingElement::one(2)),
                         doctest::Contains("index-mismatch"), Error);
}

TEST_CASE("commutative and associative on all basis triples of total degree <= 6, two components") {
    std::vector<MultiPartition> basis;
    for (int d = 0; d <= 6; ++d)
        for (const auto& label : multipartitions_of(d, 2)) basis.push_back(label);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            if (a.total() + b.total() > 6 || b < a) continue;
            GradedRingElement ab =
                induction_product(GradedRingElement::basis(a), GradedRingElement::basis(b));
            CHECK(ab == induction_product(GradedRingElement::basis(b), GradedRingElement::basis(a)));
            for (const auto& c : basis) {
                if (a.total() + b.total() + c.total() > 6) continue;
                GradedRingElement left = induction_product(ab, GradedRingElement::basis(c));
                GradedRingElement right = induction_product(
                    GradedRingElement::basis(a),
                    induction_product(GradedRingElement::basis(b), GradedRingElement::basis(c)));
                CHECK(left == right);
            }
        }
}

TEST_CASE("Jacobi-Trudi expansions") {
    auto e1 = schur_to_elementary(parse_partition("1"));
    CHECK(e1.size() == 1);
    CHECK(e1.at(parse_partition("1")) == 1);

    for (int k = 1; k <= 5; ++k) {
        auto ek = schur_to_elementary(Partition(std::vector<int>(static_cast<size_t>(k), 1)));
        CHECK(ek.size() == 1);
        CHECK(ek.at(parse_partition(std::to_string(k).c_str())) == 1);
    }

    auto s21 = schur_to_elementary(parse_partition("2,1"));
    CHECK(s21.size() == 2);
    CHECK(s21.at(parse_partition("2,1")) == 1);   // e2 e1
    CHECK(s21.at(parse_partition("3")) == -1);    // -e3

    for (int k = 1; k <= 5; ++k) {
        auto hk = schur_to_homogeneous(parse_partition(std::to_string(k).c_str()));
        CHECK(hk.size() == 1);
        CHECK(hk.at(parse_partition(std::to_string(k).c_str())) == 1);
    }
}

TEST_CASE("re-expanding the elementary polynomial recovers the Schur function, |lam| <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            GradedRingElement total(1);
            for (const auto& [mono, coeff] : schur_to_elementary(lam)) {
                GradedRingElement term = GradedRingElement::one(1);
                for (int k : mono.parts()) {
                    MultiPartition ek = MultiPartition::empty(1);
                    ek.at(0) = Partition(std::vector<int>(static_cast<size_t>(k), 1));
                    term = induction_product(term, GradedRingElement::basis(ek));
                }
                total = total + term * coeff;
            }
            MultiPartition expect = MultiPartition::empty(1);
            expect.at(0) = lam;
            CHECK(total == GradedRingElement::basis(expect));
        }
}

TEST_CASE("transition matrix times its Jacobi-Trudi inverse is the identity") {
    std::vector<std::vector<Flavor>> assignments = {
        {Flavor::Elementary},
        {Flavor::Homogeneous},
        {Flavor::Elementary, Flavor::Homogeneous},
        {Flavor::Homogeneous, Flavor::Elementary},
    };
    for (const auto& flavors : assignments)
        for (int d = 1; d <= 5; ++d) {
            IntMat m = generator_transition_matrix(flavors, d);
            IntMat inv = schur_to_monomial_matrix(flavors, d);
            const size_t dim = m.size();
            REQUIRE(inv.size() == dim);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j = 0; j < dim; ++j) {
                    Int sum = 0;
                    for (size_t k = 0; k < dim; ++k) sum += m[i][k] * inv[k][j];
                    CHECK(sum == (i == j ? 1 : 0));
                }
        }
}

TEST_CASE("degree-1 transition matrix is the identity") {
    for (int m = 1; m <= 3; ++m) {
        std::vector<Flavor> flavors(static_cast<size_t>(m), Flavor::Elementary);
        auto report = graded_generation_check(flavors, 1);
        CHECK(report.degrees[0].dimension == m);
        IntMat matrix = generator_transition_matrix(flavors, 1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                CHECK(matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] == (i == j ? 1 : 0));
    }
}

TEST_CASE("unimodularity through degree 4 for every flavor assignment, up to 3 components") {
    for (int m = 1; m <= 3; ++m)
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<Flavor> flavors;
            for (int u = 0; u < m; ++u)
                flavors.push_back((mask >> u) & 1 ? Flavor::Homogeneous : Flavor::Elementary);
            auto report = graded_generation_check(flavors, 4);
            CHECK(report.all_unimodular);
            for (const auto& deg : report.degrees)
                CHECK((deg.determinant == 1 || deg.determinant == -1));
        }
}

TEST_CASE("degree bound must be positive") {
    CHECK_THROWS_WITH_AS(graded_generation_check({Flavor::Elementary}, 0),
                         doctest::Contains("bad-degree"), Error);
}
