// Acceptance suite: one pass/fail line per criterion, exit 0 only if every
// criterion holds.  All checks are exact; the only tolerances are the wall-
// clock budgets stated with criteria 1 and 2.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/brute_wreath.hpp"
#include "wreathgen/error.hpp"
#include "wreathgen/lr.hpp"
#include "wreathgen/symfunc.hpp"
#include "wreathgen/verify.hpp"
#include "wreathgen/wreath.hpp"

using namespace wreathgen;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << detail << "\n";
    if (!ok) ++g_failures;
}

long long seconds_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start).count();
}

// ---- criterion 1: hooks and two-row families generate R(S_n), n = 2..7 ----
void criterion_1() {
    const auto start = Clock::now();
    GroupData triv = builtin_group("trivial");
    RingCache rings(triv);
    bool ok = true;
    std::ostringstream detail;
    for (const char* theorem : {"marin-hooks", "marin-two-row"})
        for (int n = 2; n <= 7; ++n) {
            GenerationReport r = verify_theorem(rings.get(n), FamilySpec{.theorem = theorem});
            if (!r.generates || r.index != Int(1)) {
                ok = false;
                detail << " " << theorem << " n=" << n << " verdict=fails";
            }
        }
    long long elapsed = seconds_since(start);
    if (elapsed >= 60) {
        ok = false;
        detail << " runtime " << elapsed << "s exceeds 60s";
    }
    report(1, ok, "hooks and two-rows generate R(S_n) for n=2..7, index 1, " +
                      std::to_string(elapsed) + "s of 60s budget" + detail.str());
}

// ---- criterion 2: thm 4.3 for B_2..B_5 ----
void criterion_2() {
    const auto start = Clock::now();
    GroupData z2 = builtin_group("z2");
    RingCache rings(z2);
    bool ok = true;
    std::ostringstream detail;
    for (int n = 2; n <= 5; ++n) {
        GenerationReport r = verify_theorem(rings.get(n), FamilySpec{.theorem = "4.3"});
        if (!r.generates) {
            ok = false;
            detail << " n=" << n << " fails";
        }
    }
    long long elapsed = seconds_since(start);
    if (elapsed >= 300) {
        ok = false;
        detail << " runtime " << elapsed << "s exceeds 300s";
    }
    report(2, ok, "thm 4.3 families generate R(B_n) for n=2..5 (rank up to 36), " +
                      std::to_string(elapsed) + "s of 300s budget" + detail.str());
}

// ---- criterion 3: thm 4.2 for z3, z4, klein ----
void criterion_3() {
    bool ok = true;
    std::ostringstream detail;
    struct Case {
        const char* group;
        int n_max;
    };
    for (auto [name, n_max] : {Case{"z3", 4}, Case{"z4", 3}, Case{"klein", 3}}) {
        GroupData base = builtin_group(name);
        RingCache rings(base);
        for (int n = 2; n <= n_max; ++n) {
            GenerationReport r = verify_theorem(rings.get(n), FamilySpec{.theorem = "4.2"});
            if (!r.generates) {
                ok = false;
                detail << " " << name << " n=" << n << " fails";
            }
        }
    }
    report(3, ok, "thm 4.2 families generate R(S_n(G)) for z3 n=2..4, z4 and klein n=2..3" +
                      detail.str());
}

// ---- criterion 4: thm 4.1 for S_3, all 16 combinations per n ----
void criterion_4() {
    GroupData s3 = builtin_group("s3");
    RingCache rings(s3);
    bool ok = true;
    int combinations = 0;
    std::ostringstream detail;
    for (int n = 2; n <= 3; ++n) {
        int per_n = 0;
        for (UnitFlavor flavor : {UnitFlavor::Hooks, UnitFlavor::TwoRows})
            for (int mask = 0; mask < 8; ++mask) {
                // one epsilon bit per irreducible of S_3; the unit bit adds the
                // (redundant) induced ladder at the trivial irreducible
                FamilySpec spec{.theorem = "4.1", .unit_flavor = flavor, .eps = {}};
                for (int u = 0; u < 3; ++u)
                    if ((mask >> u) & 1) spec.eps[u] = Eps::Trivial;
                    else if (u > 0) spec.eps[u] = Eps::Sign;
                GenerationReport r = verify_theorem(rings.get(n), spec);
                ++per_n;
                ++combinations;
                if (!r.generates) {
                    ok = false;
                    detail << " n=" << n << " eps=" << spec.eps_str(s3) << " fails";
                }
            }
        if (per_n != 16) ok = false;
    }
    report(4, ok, "thm 4.1 generates R(S_n(S_3)) for n=2..3 in all " +
                      std::to_string(combinations) + " flavor/epsilon combinations" + detail.str());
}

// ---- criterion 5: graded free generation, every flavor assignment, d <= 6 ----
void criterion_5() {
    bool ok = true;
    std::ostringstream detail;
    for (int m = 1; m <= 3; ++m)
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<Flavor> flavors;
            for (int u = 0; u < m; ++u)
                flavors.push_back((mask >> u) & 1 ? Flavor::Homogeneous : Flavor::Elementary);
            GradedCheckReport r = graded_generation_check(flavors, 6);
            for (const auto& deg : r.degrees)
                if (!deg.unimodular) {
                    ok = false;
                    detail << " m=" << m << " mask=" << mask << " degree=" << deg.degree
                           << " det=" << deg.determinant.str();
                }
        }
    report(5, ok,
           "transition matrices unimodular (det exactly +-1) through degree 6 for every e/h "
           "assignment, 1..3 irreducibles" +
               detail.str());
}

// ---- criterion 6: character-table integrity for every ring used above ----
void criterion_6() {
    bool ok = true;
    std::ostringstream detail;
    struct Case {
        const char* group;
        int n_lo, n_hi;
    };
    for (auto [name, n_lo, n_hi] : {Case{"trivial", 2, 7}, Case{"z2", 2, 5}, Case{"z3", 2, 4},
                                    Case{"z4", 2, 3}, Case{"klein", 2, 3}, Case{"s3", 2, 3}}) {
        GroupData base = builtin_group(name);
        for (int n = n_lo; n <= n_hi; ++n) {
            try {
                WreathRing ring(base, n);
                ring.certify();  // identity column, sum of dim^2, row+column orthogonality
                Int order = factorial(n);
                for (int i = 0; i < n; ++i) order *= base.group().order();
                if (ring.order() != order) throw Error("internal-inconsistency", "order mismatch");
            } catch (const Error& e) {
                ok = false;
                detail << " " << name << " n=" << n << ": " << e.what();
            }
        }
    }
    report(6, ok,
           "exact row+column orthogonality and sum dim^2 = |G|^n n! for every (G, n) in "
           "criteria 1-4" +
               detail.str());
}

// ---- criterion 7: B_2 tensor products vs the signed-permutation matrix model ----
void criterion_7() {
    GroupData z2 = builtin_group("z2");
    WreathRing b2(z2, 2);
    oracle::BruteWreath brute(z2, 2);
    const auto& field = z2.field();
    bool ok = true;
    std::ostringstream detail;

    // matrix models: four monomial characters and the reflection representation
    auto sgn = [](const std::vector<int>& perm) { return perm[0] == 0 ? 1 : -1; };  // n = 2
    auto delta = [](const std::vector<int>& comps) {
        return (comps[0] + comps[1]) % 2 == 0 ? 1 : -1;
    };
    auto reflection_trace = [](const WreathElement& w) {
        int tr = 0;
        for (size_t i = 0; i < 2; ++i)
            if (w.permutation[i] == static_cast<int>(i)) tr += w.components[i] == 1 ? -1 : 1;
        return tr;
    };
    std::vector<std::vector<Cyclotomic>> traces;  // element-indexed
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            std::vector<Cyclotomic> t;
            for (const auto& w : brute.elements())
                t.push_back(Cyclotomic(Rat((a ? delta(w.components) : 1) * (b ? sgn(w.permutation) : 1)),
                                       field));
            traces.push_back(std::move(t));
        }
    {
        std::vector<Cyclotomic> t;
        for (const auto& w : brute.elements())
            t.push_back(Cyclotomic(Rat(reflection_trace(w)), field));
        traces.push_back(std::move(t));
    }

    // identify each oracle model with a production label by trace equality
    std::vector<int> model_of(static_cast<size_t>(b2.num_irreps()), -1);
    for (int i = 0; i < b2.num_irreps(); ++i) {
        std::vector<Cyclotomic> production;
        for (const auto& w : brute.elements())
            production.push_back(
                b2.character(i, b2.classes().index_of(classify(z2, w))));
        for (size_t t = 0; t < traces.size(); ++t)
            if (traces[t] == production) model_of[static_cast<size_t>(i)] = static_cast<int>(t);
        if (model_of[static_cast<size_t>(i)] < 0) {
            ok = false;
            detail << " no matrix model matches " << b2.irreps()[static_cast<size_t>(i)].str();
        }
    }

    // all 15 unordered products, decomposed from raw matrix traces
    int products = 0;
    for (int i = 0; i < b2.num_irreps() && ok; ++i)
        for (int j = i; j < b2.num_irreps(); ++j) {
            ++products;
            const auto &ti = traces[static_cast<size_t>(model_of[static_cast<size_t>(i)])],
                       &tj = traces[static_cast<size_t>(model_of[static_cast<size_t>(j)])];
            std::vector<Cyclotomic> product;
            for (size_t e = 0; e < brute.size(); ++e) product.push_back(ti[e] * tj[e]);

            RepRingElement expected;
            expected.n = 2;
            for (int k = 0; k < b2.num_irreps(); ++k) {
                Cyclotomic mult = brute.inner_product(
                    product, traces[static_cast<size_t>(model_of[static_cast<size_t>(k)])]);
                if (!mult.is_rational() || !is_integer(mult.rational())) {
                    ok = false;
                    detail << " non-integral oracle multiplicity";
                    continue;
                }
                expected.add(b2.irreps()[static_cast<size_t>(k)], to_integer(mult.rational()));
            }
            RepRingElement actual =
                b2.tensor(RepRingElement::basis(b2.irreps()[static_cast<size_t>(i)]),
                          RepRingElement::basis(b2.irreps()[static_cast<size_t>(j)]));
            if (!(actual == expected)) {
                ok = false;
                detail << " mismatch at " << b2.irreps()[static_cast<size_t>(i)].str() << " x "
                       << b2.irreps()[static_cast<size_t>(j)].str();
            }
        }
    if (products != 15) ok = false;
    report(7, ok, "all 15 unordered B_2 tensor products match the signed-permutation matrix "
                  "model exactly" +
                      detail.str());
}

// ---- criterion 8: tensor/restriction lead terms and tensor stability ----
void criterion_8() {
    bool ok = true;
    std::ostringstream onsets, detail;
    for (const char* name : {"trivial", "z2"}) {
        GroupData base = builtin_group(name);
        RingCache rings(base);
        std::vector<MultiPartition> labels;
        for (int s = 0; s <= 2; ++s)
            for (const auto& l : multipartitions_of(s, base.num_irreps())) labels.push_back(l);

        for (size_t i = 0; i < labels.size(); ++i) {
            for (int k = 1; k <= 2; ++k) {
                RestrictionLeadReport r4 = check_restriction_lead(rings, labels[i], k);
                if (!r4.holds) {
                    ok = false;
                    detail << " restriction-lead " << name << " mu=" << labels[i].str() << " k=" << k;
                } else {
                    onsets << " restriction-lead(" << name << "," << labels[i].str() << ",k=" << k
                           << ")@n=" << *r4.onset;
                }
            }
            for (size_t j = i; j < labels.size(); ++j) {
                TensorLeadReport r3 = check_tensor_lead(rings, labels[i], labels[j]);
                if (!r3.holds) {
                    ok = false;
                    detail << " tensor-lead " << name << " (" << labels[i].str() << "," << labels[j].str()
                           << ")";
                } else {
                    onsets << " tensor-lead(" << name << "," << labels[i].str() << ","
                           << labels[j].str() << ")@n=" << *r3.onset;
                }
                StabilityReport rs = check_stability(rings, labels[i], labels[j], 2);
                if (!rs.constant) {
                    ok = false;
                    detail << " stability " << name << " (" << labels[i].str() << ","
                           << labels[j].str() << ")";
                }
            }
        }
    }
    report(8, ok, "tensor/restriction lead-term relations and top-half tensor stability, |lambda|,|mu| <= 2 over "
                  "trivial and z2 (exact integers)" +
                      detail.str());
    std::cout << "       onsets:" << onsets.str() << "\n";
}

// ---- criterion 9: negative controls ----
// At least one of the two named drops must break generation with its index
// reported (the checker's verdicts are not vacuous).  Both outcomes are
// reported truthfully: the S4 drop in fact keeps generating, because
// sign (x) V(2,1,1) = V(3,1) recovers the dropped hook.
void criterion_9() {
    std::ostringstream detail;

    GroupData z2 = builtin_group("z2");
    WreathRing b2(z2, 2);
    auto family43 = generator_family(b2, FamilySpec{.theorem = "4.3"});
    MultiPartition lambda2v = parse_multipartition("[|1,1]", 2);
    std::vector<RepRingElement> without_l2v;
    for (const auto& g : family43)
        if (!(g == RepRingElement::basis(lambda2v))) without_l2v.push_back(g);
    GenerationReport drop_b2 = verify_generation(b2, without_l2v, "custom", "-");
    detail << " B2 drop Lambda^2 V: " << (drop_b2.generates ? "generates" : "fails") << " with index "
           << drop_b2.index_str() << ";";

    GroupData triv = builtin_group("trivial");
    WreathRing s4(triv, 4);
    auto hooks = generator_family(s4, FamilySpec{.theorem = "marin-hooks"});
    MultiPartition h31 = parse_multipartition("[3,1]", 1);
    std::vector<RepRingElement> without_31;
    for (const auto& g : hooks)
        if (!(g == RepRingElement::basis(h31))) without_31.push_back(g);
    GenerationReport drop_s4 = verify_generation(s4, without_31, "custom", "-");
    detail << " S4 drop (3,1): " << (drop_s4.generates ? "generates" : "fails") << " with index "
           << drop_s4.index_str();
    if (drop_s4.generates) detail << " (sign-twist redundancy, see notes)";

    bool ok = !drop_b2.generates || !drop_s4.generates;
    report(9, ok, "negative controls:" + detail.str());
}

}  // namespace

int main() {
    const auto start = Clock::now();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(g_failures) + " CRITERIA FAILED")
              << " (total " << seconds_since(start) << "s)\n";
    return g_failures == 0 ? 0 : 1;
}
