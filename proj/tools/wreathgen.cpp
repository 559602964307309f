// Command-line front end: theorem verification runs, tensor decompositions,
// graded-ring checks and stable-range reports over a chosen base group.

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <optional>
#include <semaphore>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreathgen/error.hpp"
#include "wreathgen/group.hpp"
#include "wreathgen/symfunc.hpp"
#include "wreathgen/verify.hpp"
#include "wreathgen/wreath.hpp"

using json = nlohmann::json;
using namespace wreathgen;

namespace {

constexpr int kExitAllPass = 0;
constexpr int kExitVerdictFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const Error& e) {
    if (e.code() == "inapplicable-theorem") return kExitInapplicable;
    if (e.code() == "internal-inconsistency") return kExitInternal;
    return kExitInvalidInput;
}

GroupData resolve_group(const std::string& name, const std::string& file) {
    if (!file.empty()) return load_group_file(file);
    return builtin_group(name.empty() ? "trivial" : name);
}

std::pair<int, int> parse_n_range(int n, const std::string& range) {
    if (range.empty()) {
        if (n < 0) throw Error("bad-config", "give --n or --n-range");
        return {n, n};
    }
    size_t dots = range.find("..");
    if (dots == std::string::npos)
        throw Error("bad-config", "--n-range wants the form A..B, got '" + range + "'");
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
    } catch (const std::exception&) {
        throw Error("bad-config", "--n-range wants integers, got '" + range + "'");
    }
    if (lo > hi || lo < 0) throw Error("bad-config", "empty or negative range '" + range + "'");
    return {lo, hi};
}

int worker_count(int jobs_flag) {
    if (const char* env = std::getenv("WREATHGEN_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    if (jobs_flag >= 1) return jobs_flag;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::map<int, Eps> parse_eps(const GroupData& base, const std::string& eps, bool allow_unit) {
    std::map<int, Eps> out;
    if (eps.empty() || eps == "all") return out;
    std::istringstream is(eps);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw Error("bad-config", "--eps wants name:sign or name:triv entries, got '" + item + "'");
        std::string name = item.substr(0, colon), value = item.substr(colon + 1);
        int idx = base.irrep_index(name);
        if (idx < 0) throw Error("bad-config", "unknown irreducible '" + name + "' in --eps");
        if (idx == 0 && !allow_unit)
            throw Error("bad-config", "--eps names only nontrivial irreducibles; see --unit-flavor");
        if (value == "sign" || value == "sgn")
            out[idx] = Eps::Sign;
        else if (value == "triv" || value == "trivial")
            out[idx] = Eps::Trivial;
        else
            throw Error("bad-config", "epsilon must be sign or triv, got '" + value + "'");
    }
    return out;
}

std::string theorem_id(std::string t) {
    if (t.rfind("thm", 0) == 0) t = t.substr(3);
    return t;
}

json report_json(const GenerationReport& r) {
    return json{{"group", r.group},       {"n", r.n},
                {"theorem", r.theorem},   {"eps", r.eps},
                {"verdict", r.generates ? "generates" : "fails"},
                {"index", r.index_str()}, {"rounds", r.rounds},
                {"generators", r.generator_count}, {"elapsed_ms", r.elapsed_ms}};
}

void print_report(const GenerationReport& r, bool as_json) {
    if (as_json) {
        std::cout << report_json(r).dump() << "\n";
        return;
    }
    std::cout << "group=" << r.group << " n=" << r.n << " theorem=" << r.theorem << " eps=" << r.eps
              << " verdict=" << (r.generates ? "generates" : "fails") << " index=" << r.index_str()
              << " rounds=" << r.rounds << " generators=" << r.generator_count
              << " elapsed_ms=" << r.elapsed_ms << "\n";
}

struct VerifyOptions {
    std::string group, group_file, theorem, eps, gens, gen_list, unit_flavor = "hooks";
    int n = -1;
    std::string n_range;
    std::string format = "text";
    int jobs = 0;
};

int run_verify(const VerifyOptions& opt) {
    GroupData base = resolve_group(opt.group, opt.group_file);
    auto [lo, hi] = parse_n_range(opt.n, opt.n_range);
    const bool as_json = opt.format == "json";

    // custom generator lists bypass the theorem machinery
    if (opt.gens == "custom" || !opt.gen_list.empty()) {
        if (opt.gen_list.empty()) throw Error("bad-config", "--gens custom needs --gen-list");
        RingCache rings(base);
        bool all_ok = true;
        for (int n = lo; n <= hi; ++n) {
            std::vector<RepRingElement> gens;
            std::istringstream is(opt.gen_list);
            std::string item;
            while (std::getline(is, item, ';')) {
                MultiPartition label =
                    item == "1" ? [&] {
                        MultiPartition l = MultiPartition::empty(base.num_irreps());
                        if (n > 0) l.at(0) = Partition({n});
                        return l;
                    }()
                                : parse_multipartition(item, base.num_irreps());
                if (label.total() != n)
                    throw Error("bad-label", "generator " + label.str() + " does not live in degree " +
                                                 std::to_string(n));
                gens.push_back(RepRingElement::basis(label));
            }
            GenerationReport report = verify_generation(rings.get(n), gens, "custom", "-");
            print_report(report, as_json);
            all_ok = all_ok && report.generates;
        }
        return all_ok ? kExitAllPass : kExitVerdictFailed;
    }

    if (opt.theorem.empty()) throw Error("bad-config", "give --theorem or --gens custom");
    const std::string theorem = theorem_id(opt.theorem);

    // assemble the family specs: explicit eps, or every assignment with --eps all
    std::vector<FamilySpec> specs;
    std::vector<UnitFlavor> flavors;
    if (opt.unit_flavor == "hooks") flavors = {UnitFlavor::Hooks};
    else if (opt.unit_flavor == "two-rows") flavors = {UnitFlavor::TwoRows};
    else if (opt.unit_flavor == "both") flavors = {UnitFlavor::Hooks, UnitFlavor::TwoRows};
    else throw Error("bad-config", "--unit-flavor is hooks, two-rows or both");
    if (theorem != "4.1") flavors.resize(1);  // the unit-object choice only exists for 4.1

    if (opt.eps == "all" && theorem == "4.1") {
        std::vector<int> nontrivial;
        for (int u = 1; u < base.num_irreps(); ++u) nontrivial.push_back(u);
        for (UnitFlavor uf : flavors)
            for (int mask = 0; mask < (1 << nontrivial.size()); ++mask) {
                FamilySpec spec{.theorem = theorem, .unit_flavor = uf, .eps = {}};
                for (size_t b = 0; b < nontrivial.size(); ++b)
                    spec.eps[nontrivial[b]] = (mask >> b) & 1 ? Eps::Trivial : Eps::Sign;
                specs.push_back(std::move(spec));
            }
    } else {
        for (UnitFlavor uf : flavors)
            specs.push_back(FamilySpec{.theorem = theorem, .unit_flavor = uf,
                                       .eps = parse_eps(base, opt.eps, false)});
    }
    std::sort(specs.begin(), specs.end(), [&](const FamilySpec& a, const FamilySpec& b) {
        return a.eps_str(base) < b.eps_str(base);
    });

    RingCache rings(base);
    struct Task {
        int n;
        const FamilySpec* spec;
    };
    std::vector<Task> tasks;
    for (int n = lo; n <= hi; ++n)
        for (const auto& spec : specs) tasks.push_back({n, &spec});

    // bounded pool; results are printed in task order as soon as the next one
    // in line has finished
    std::counting_semaphore<256> slots(worker_count(opt.jobs));
    std::vector<std::future<GenerationReport>> futures;
    futures.reserve(tasks.size());
    for (const Task& task : tasks)
        futures.push_back(std::async(std::launch::async, [&rings, task, &slots] {
            slots.acquire();
            struct Release {
                std::counting_semaphore<256>& s;
                ~Release() { s.release(); }
            } release{slots};
            return verify_theorem(rings.get(task.n), *task.spec);
        }));

    bool all_ok = true;
    for (auto& future : futures) {
        GenerationReport report = future.get();
        print_report(report, as_json);
        all_ok = all_ok && report.generates;
    }
    return all_ok ? kExitAllPass : kExitVerdictFailed;
}

struct DecomposeOptions {
    std::string group, group_file, a, b, format = "text";
    int n = -1;
};

int run_decompose(const DecomposeOptions& opt) {
    GroupData base = resolve_group(opt.group, opt.group_file);
    if (opt.n < 0) throw Error("bad-config", "give --n");
    MultiPartition la = parse_multipartition(opt.a, base.num_irreps());
    MultiPartition lb = parse_multipartition(opt.b, base.num_irreps());
    RingCache rings(base);
    const WreathRing& ring = rings.get(opt.n);
    if (ring.irrep_index(la) < 0)
        throw Error("bad-label", la.str() + " is not an irreducible label for n=" + std::to_string(opt.n));
    if (ring.irrep_index(lb) < 0)
        throw Error("bad-label", lb.str() + " is not an irreducible label for n=" + std::to_string(opt.n));

    RepRingElement product = ring.tensor(RepRingElement::basis(la), RepRingElement::basis(lb));
    if (opt.format == "json") {
        json terms = json::array();
        for (const auto& [label, mult] : product.coeffs)
            terms.push_back(json{{"label", label.str()},
                                 {"multiplicity", mult.str()},
                                 {"dim", wreath_dimension(base, label).str()},
                                 {"filtration_degree", filtration_degree(label)}});
        std::cout << json{{"group", base.name()},
                          {"n", opt.n},
                          {"a", la.str()},
                          {"b", lb.str()},
                          {"terms", terms}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "V" << la.str() << " (x) V" << lb.str() << " over " << base.name()
                  << ", n=" << opt.n << "\n";
        for (const auto& [label, mult] : product.coeffs)
            std::cout << "  " << mult.str() << " x V" << label.str() << "  dim "
                      << wreath_dimension(base, label).str() << "  filtration degree "
                      << filtration_degree(label) << "\n";
    }
    return kExitAllPass;
}

struct GradedOptions {
    std::string group, group_file, flavors, format = "text";
    int degree = 6;
};

int run_graded(const GradedOptions& opt) {
    GroupData base = resolve_group(opt.group, opt.group_file);
    const int m = base.num_irreps();
    std::vector<Flavor> flavor_vec;
    if (opt.flavors.empty() || opt.flavors == "e") {
        flavor_vec.assign(static_cast<size_t>(m), Flavor::Elementary);
    } else if (opt.flavors == "h") {
        flavor_vec.assign(static_cast<size_t>(m), Flavor::Homogeneous);
    } else {
        std::istringstream is(opt.flavors);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item == "e") flavor_vec.push_back(Flavor::Elementary);
            else if (item == "h") flavor_vec.push_back(Flavor::Homogeneous);
            else throw Error("bad-config", "--flavors entries are e or h, got '" + item + "'");
        }
        if (static_cast<int>(flavor_vec.size()) != m)
            throw Error("bad-config", "--flavors needs one entry per irreducible (" +
                                          std::to_string(m) + ")");
    }

    GradedCheckReport report = graded_generation_check(flavor_vec, opt.degree);
    std::string flavor_str;
    for (size_t i = 0; i < flavor_vec.size(); ++i) {
        if (i) flavor_str += ',';
        flavor_str += flavor_vec[i] == Flavor::Elementary ? 'e' : 'h';
    }
    if (opt.format == "json") {
        json degrees = json::array();
        for (const auto& d : report.degrees)
            degrees.push_back(json{{"degree", d.degree},
                                   {"dimension", d.dimension},
                                   {"determinant", d.determinant.str()},
                                   {"unimodular", d.unimodular}});
        std::cout << json{{"group", base.name()},
                          {"flavors", flavor_str},
                          {"verdict", report.all_unimodular ? "unimodular" : "fails"},
                          {"degrees", degrees}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "group=" << base.name() << " flavors=" << flavor_str << "\n";
        for (const auto& d : report.degrees)
            std::cout << "  degree " << d.degree << ": dimension " << d.dimension << " determinant "
                      << d.determinant.str() << (d.unimodular ? " (unimodular)" : " (NOT unimodular)")
                      << "\n";
    }
    return report.all_unimodular ? kExitAllPass : kExitVerdictFailed;
}

struct StabilityOptions {
    std::string group, group_file, lambda, mu, format = "text";
    int max_size = 2;
};

int run_stability(const StabilityOptions& opt) {
    GroupData base = resolve_group(opt.group, opt.group_file);
    const int m = base.num_irreps();
    RingCache rings(base);

    std::vector<std::pair<MultiPartition, MultiPartition>> pairs;
    if (!opt.lambda.empty() || !opt.mu.empty()) {
        if (opt.lambda.empty() || opt.mu.empty())
            throw Error("bad-config", "give both --lambda and --mu, or neither");
        pairs.emplace_back(parse_multipartition(opt.lambda, m), parse_multipartition(opt.mu, m));
    } else {
        std::vector<MultiPartition> labels;
        for (int s = 0; s <= opt.max_size; ++s)
            for (const auto& l : multipartitions_of(s, m)) labels.push_back(l);
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i; j < labels.size(); ++j) pairs.emplace_back(labels[i], labels[j]);
    }

    bool all_ok = true;
    const bool as_json = opt.format == "json";
    for (const auto& [lambda, mu] : pairs) {
        TensorLeadReport e3 = check_tensor_lead(rings, lambda, mu);
        StabilityReport st = check_stability(rings, lambda, mu, opt.max_size);
        all_ok = all_ok && e3.holds && st.constant;
        if (as_json) {
            std::cout << json{{"relation", "tensor-lead"},
                              {"group", base.name()},
                              {"lambda", lambda.str()},
                              {"mu", mu.str()},
                              {"window", {e3.window_lo, e3.window_hi}},
                              {"onset", e3.onset ? json(*e3.onset) : json(nullptr)},
                              {"holds", e3.holds}}
                             .dump()
                      << "\n";
            json mults = json::array();
            for (const auto& [nu, c] : st.stable_multiplicities)
                mults.push_back(json{{"nu", nu.str()}, {"multiplicity", c.str()}});
            std::cout << json{{"relation", "stability"},
                              {"group", base.name()},
                              {"lambda", lambda.str()},
                              {"mu", mu.str()},
                              {"window", {st.window_lo, st.window_hi}},
                              {"constant", st.constant},
                              {"stable_multiplicities", mults}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "tensor-lead lambda=" << lambda.str() << " mu=" << mu.str() << " window=["
                      << e3.window_lo << "," << e3.window_hi << "]"
                      << " onset=" << (e3.onset ? std::to_string(*e3.onset) : std::string("none"))
                      << " holds=" << (e3.holds ? "yes" : "NO") << "\n";
            std::cout << "stability lambda=" << lambda.str() << " mu=" << mu.str()
                      << " constant=" << (st.constant ? "yes" : "NO") << " multiplicities:";
            for (const auto& [nu, c] : st.stable_multiplicities)
                std::cout << " " << nu.str() << ":" << c.str();
            std::cout << "\n";
        }
    }

    // restriction lead terms for each single label
    std::vector<MultiPartition> mus;
    if (!opt.mu.empty()) {
        mus.push_back(parse_multipartition(opt.mu, m));
    } else {
        for (int s = 0; s <= opt.max_size; ++s)
            for (const auto& l : multipartitions_of(s, m)) mus.push_back(l);
    }
    for (const auto& mu : mus)
        for (int k = 1; k <= 2; ++k) {
            RestrictionLeadReport e4 = check_restriction_lead(rings, mu, k);
            all_ok = all_ok && e4.holds;
            if (as_json) {
                std::cout << json{{"relation", "restriction-lead"},
                                  {"group", base.name()},
                                  {"mu", mu.str()},
                                  {"k", k},
                                  {"window", {e4.window_lo, e4.window_hi}},
                                  {"onset", e4.onset ? json(*e4.onset) : json(nullptr)},
                                  {"holds", e4.holds}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << "restriction-lead mu=" << mu.str() << " k=" << k
                          << " onset=" << (e4.onset ? std::to_string(*e4.onset) : std::string("none"))
                          << " holds=" << (e4.holds ? "yes" : "NO") << "\n";
            }
        }
    return all_ok ? kExitAllPass : kExitVerdictFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in representation rings of wreath products"};
    app.require_subcommand(1);

    VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "run a generator-theorem verification");
    verify->add_option("--group", vo.group, "built-in group name (trivial, z2..z6, klein, s3, axb)");
    verify->add_option("--group-file", vo.group_file, "group description file")
        ->excludes(verify->get_option("--group"));
    verify->add_option("--n", vo.n, "single degree n");
    verify->add_option("--n-range", vo.n_range, "inclusive range A..B");
    verify->add_option("--theorem", vo.theorem,
                       "marin-hooks | marin-two-row | 4.1 | 4.2 | 4.3");
    verify->add_option("--eps", vo.eps, "epsilon choices 'name:sign,name:triv', or 'all'");
    verify->add_option("--unit-flavor", vo.unit_flavor, "hooks | two-rows | both (thm 4.1)");
    verify->add_option("--gens", vo.gens, "'custom' to verify an explicit generator list");
    verify->add_option("--gen-list", vo.gen_list, "';'-separated labels, '1' for the unit");
    verify->add_option("--format", vo.format, "text | json");
    verify->add_option("--jobs", vo.jobs, "worker count (env WREATHGEN_JOBS overrides)");

    DecomposeOptions dopt;
    CLI::App* decompose = app.add_subcommand("decompose", "tensor-decompose two irreducibles");
    decompose->add_option("--group", dopt.group, "built-in group name");
    decompose->add_option("--group-file", dopt.group_file, "group description file")
        ->excludes(decompose->get_option("--group"));
    decompose->add_option("--n", dopt.n, "degree n")->required();
    decompose->add_option("--a", dopt.a, "left label, e.g. [1|1]")->required();
    decompose->add_option("--b", dopt.b, "right label")->required();
    decompose->add_option("--format", dopt.format, "text | json");

    GradedOptions gopt;
    CLI::App* graded = app.add_subcommand("graded-check", "unimodularity of the graded transition matrices");
    graded->add_option("--group", gopt.group, "built-in group name");
    graded->add_option("--group-file", gopt.group_file, "group description file")
        ->excludes(graded->get_option("--group"));
    graded->add_option("--degree", gopt.degree, "degree bound (default 6)");
    graded->add_option("--flavors", gopt.flavors, "e | h | per-irreducible list like e,h,e");
    graded->add_option("--format", gopt.format, "text | json");

    StabilityOptions sopt;
    CLI::App* stability = app.add_subcommand("stability", "stable-range shadows and onsets");
    stability->add_option("--group", sopt.group, "built-in group name");
    stability->add_option("--group-file", sopt.group_file, "group description file")
        ->excludes(stability->get_option("--group"));
    stability->add_option("--max-size", sopt.max_size, "stable label size bound (default 2)");
    stability->add_option("--lambda", sopt.lambda, "single stable label");
    stability->add_option("--mu", sopt.mu, "single stable label");
    stability->add_option("--format", sopt.format, "text | json");

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return run_verify(vo);
        if (decompose->parsed()) return run_decompose(dopt);
        if (graded->parsed()) return run_graded(gopt);
        if (stability->parsed()) return run_stability(sopt);
        return kExitInvalidInput;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInvalidInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
