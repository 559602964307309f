#include "wreathgen/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "wreathgen/error.hpp"

namespace wreathgen {

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

FiniteGroup FiniteGroup::from_cayley(std::vector<std::vector<int>> cayley) {
    FiniteGroup g;
    g.order_ = static_cast<int>(cayley.size());
    const int m = g.order_;
    if (m == 0) throw Error("not-a-group", "empty Cayley table");
    for (const auto& row : cayley) {
        if (static_cast<int>(row.size()) != m)
            throw Error("not-a-group", "Cayley table is not square");
        for (int v : row)
            if (v < 0 || v >= m) throw Error("not-a-group", "entry out of range");
    }
    g.cayley_ = std::move(cayley);

    // rows and columns must be permutations (cancellation)
    for (int a = 0; a < m; ++a) {
        std::vector<bool> seen_row(static_cast<size_t>(m)), seen_col(static_cast<size_t>(m));
        for (int b = 0; b < m; ++b) {
            int r = g.mul(a, b), c = g.mul(b, a);
            if (seen_row[static_cast<size_t>(r)] || seen_col[static_cast<size_t>(c)])
                throw Error("not-a-group", "cancellation fails at row/column " + std::to_string(a));
            seen_row[static_cast<size_t>(r)] = seen_col[static_cast<size_t>(c)] = true;
        }
    }

    // unique two-sided identity
    g.identity_ = -1;
    for (int e = 0; e < m; ++e) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) {
            if (g.identity_ != -1) throw Error("not-a-group", "identity is not unique");
            g.identity_ = e;
        }
    }
    if (g.identity_ == -1) throw Error("not-a-group", "no identity element");

    // associativity: exhaustive at small orders, sampled above
    auto check = [&](int a, int b, int c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw Error("not-a-group", "associativity fails at (" + std::to_string(a) + "," +
                                           std::to_string(b) + "," + std::to_string(c) + ")");
    };
    if (m <= 48) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) check(a, b, c);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, m - 1);
        for (int t = 0; t < 20000; ++t) check(pick(rng), pick(rng), pick(rng));
    }

    g.inverse_.assign(static_cast<size_t>(m), -1);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (g.mul(a, b) == g.identity_) g.inverse_[static_cast<size_t>(a)] = b;
    for (int a = 0; a < m; ++a)
        if (g.inverse_[static_cast<size_t>(a)] == -1)
            throw Error("not-a-group", "element " + std::to_string(a) + " has no inverse");

    g.exponent_ = 1;
    for (int a = 0; a < m; ++a) g.exponent_ = lcm_int(g.exponent_, g.element_order(a));
    return g;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != identity_) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    const int m = g.order();
    ConjugacyClasses cc;
    cc.class_of.assign(static_cast<size_t>(m), -1);
    for (int x = 0; x < m; ++x) {
        if (cc.class_of[static_cast<size_t>(x)] != -1) continue;
        std::vector<int> orbit;
        int idx = cc.count();
        for (int h = 0; h < m; ++h) {
            int y = g.mul(g.mul(h, x), g.inverse(h));
            if (cc.class_of[static_cast<size_t>(y)] == -1) {
                cc.class_of[static_cast<size_t>(y)] = idx;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        cc.representative.push_back(orbit.front());
        cc.size.push_back(static_cast<int>(orbit.size()));
        cc.members.push_back(std::move(orbit));
    }
    cc.inverse_class.resize(static_cast<size_t>(cc.count()));
    for (int c = 0; c < cc.count(); ++c)
        cc.inverse_class[static_cast<size_t>(c)] =
            cc.class_of[static_cast<size_t>(g.inverse(cc.representative[static_cast<size_t>(c)]))];
    cc.identity_class = cc.class_of[static_cast<size_t>(g.identity())];
    return cc;
}

void validate_character_table(const FiniteGroup& g, const ConjugacyClasses& classes,
                              const CharacterTable& table) {
    const int k = classes.count();
    if (table.num_irreps() != k)
        throw Error("invalid-character-table",
                    "expected " + std::to_string(k) + " rows, got " + std::to_string(table.num_irreps()));
    for (const auto& row : table.values)
        if (static_cast<int>(row.size()) != k)
            throw Error("invalid-character-table", "row length does not match class count");

    const CyclotomicField& field = table.values.at(0).at(0).field();
    const Cyclotomic one(Rat(1), field);
    for (int c = 0; c < k; ++c)
        if (!(table.values[0][static_cast<size_t>(c)] == one))
            throw Error("invalid-character-table", "first row must be the trivial character");

    Int dim_square_sum = 0;
    for (int i = 0; i < k; ++i) {
        const Cyclotomic& d = table.values[static_cast<size_t>(i)][static_cast<size_t>(classes.identity_class)];
        if (!d.is_rational() || !is_integer(d.rational()) || d.rational() <= 0)
            throw Error("invalid-character-table",
                        "dimension of row " + std::to_string(i) + " is not a positive integer");
        Int dim = to_integer(d.rational());
        dim_square_sum += dim * dim;
    }
    if (dim_square_sum != g.order())
        throw Error("invalid-character-table", "sum of squared dimensions is " + dim_square_sum.str() +
                                                   ", group order is " + std::to_string(g.order()));

    // row orthogonality: <chi_i, chi_j> = delta_ij under class-size weighting
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            Cyclotomic sum(Rat(0), field);
            for (int c = 0; c < k; ++c)
                sum += table.values[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                       table.values[static_cast<size_t>(j)][static_cast<size_t>(c)].complex_conjugate() *
                       Rat(classes.size[static_cast<size_t>(c)]);
            sum = sum / Rat(g.order());
            Cyclotomic expected(Rat(i == j ? 1 : 0), field);
            if (!(sum == expected))
                throw Error("invalid-character-table", "row orthogonality fails for rows (" +
                                                           std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |C_G|
    for (int c = 0; c < k; ++c)
        for (int d = c; d < k; ++d) {
            Cyclotomic sum(Rat(0), field);
            for (int i = 0; i < k; ++i)
                sum += table.values[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                       table.values[static_cast<size_t>(i)][static_cast<size_t>(d)].complex_conjugate();
            Rat expected = c == d ? Rat(g.order()) / Rat(classes.size[static_cast<size_t>(c)]) : Rat(0);
            if (!(sum == Cyclotomic(expected, field)))
                throw Error("invalid-character-table", "column orthogonality fails for classes (" +
                                                           std::to_string(c) + "," + std::to_string(d) + ")");
        }
}

GroupData::GroupData(std::string name, FiniteGroup group, CharacterTable table)
    : name_(std::move(name)),
      group_(std::move(group)),
      classes_(conjugacy_classes(group_)),
      table_(std::move(table)),
      field_(&CyclotomicField::get(group_.exponent())) {
    validate_character_table(group_, classes_, table_);
}

Int GroupData::dim(int irrep) const { return to_integer(chi(irrep, classes_.identity_class).rational()); }

bool GroupData::is_abelian() const {
    for (int i = 0; i < num_irreps(); ++i)
        if (dim(i) != 1) return false;
    return true;
}

int GroupData::irrep_index(const std::string& name) const {
    for (int i = 0; i < num_irreps(); ++i)
        if (table_.irrep_names[static_cast<size_t>(i)] == name) return i;
    return -1;
}

Cyclotomic embed(const Cyclotomic& value, const CyclotomicField& target) {
    int m = value.field().modulus(), n = target.modulus();
    if (n % m != 0) throw Error("field-mismatch", "cannot embed Q(zeta_" + std::to_string(m) +
                                                      ") into Q(zeta_" + std::to_string(n) + ")");
    int stretch = n / m;
    Cyclotomic out(Rat(0), target);
    const auto& coeffs = value.coefficients();
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) {
        if (coeffs[static_cast<size_t>(j)] == 0) continue;
        out += Cyclotomic::zeta_power(j * stretch, target) * coeffs[static_cast<size_t>(j)];
    }
    return out;
}

namespace {

GroupData make_cyclic(int m) {
    std::vector<std::vector<int>> cayley(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) cayley[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % m;
    FiniteGroup g = FiniteGroup::from_cayley(std::move(cayley));
    const CyclotomicField& field = CyclotomicField::get(g.exponent());
    // classes are singletons {0},...,{m-1} in element order
    CharacterTable table;
    for (int j = 0; j < m; ++j) {
        table.irrep_names.push_back("chi" + std::to_string(j));
        std::vector<Cyclotomic> row;
        for (int k = 0; k < m; ++k) row.push_back(Cyclotomic::zeta_power(j * k, field));
        table.values.push_back(std::move(row));
    }
    return GroupData(m == 1 ? "trivial" : "z" + std::to_string(m), std::move(g), std::move(table));
}

GroupData make_s3() {
    // permutations of {0,1,2} in lexicographic one-line order
    const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                 {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const std::vector<int>& p) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    };
    std::vector<std::vector<int>> cayley(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::vector<int> comp(3);
            for (int x = 0; x < 3; ++x)
                comp[static_cast<size_t>(x)] =
                    perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
            cayley[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(comp);
        }
    FiniteGroup g = FiniteGroup::from_cayley(std::move(cayley));
    const CyclotomicField& field = CyclotomicField::get(g.exponent());
    // classes by minimal element: {e}, transpositions, 3-cycles
    auto value = [&](int v) { return Cyclotomic(Rat(v), field); };
    CharacterTable table;
    table.irrep_names = {"triv", "sgn", "std"};
    table.values = {{value(1), value(1), value(1)},
                    {value(1), value(-1), value(1)},
                    {value(2), value(0), value(-1)}};
    return GroupData("s3", std::move(g), std::move(table));
}

}  // namespace

GroupData direct_product(const GroupData& a, const GroupData& b) {
    const int ma = a.group().order(), mb = b.group().order();
    const int m = ma * mb;
    std::vector<std::vector<int>> cayley(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
    auto id = [&](int x, int y) { return x * mb + y; };
    for (int x1 = 0; x1 < ma; ++x1)
        for (int y1 = 0; y1 < mb; ++y1)
            for (int x2 = 0; x2 < ma; ++x2)
                for (int y2 = 0; y2 < mb; ++y2)
                    cayley[static_cast<size_t>(id(x1, y1))][static_cast<size_t>(id(x2, y2))] =
                        id(a.group().mul(x1, x2), b.group().mul(y1, y2));
    FiniteGroup g = FiniteGroup::from_cayley(std::move(cayley));
    const CyclotomicField& field = CyclotomicField::get(g.exponent());
    ConjugacyClasses classes = conjugacy_classes(g);

    CharacterTable table;
    for (int i = 0; i < a.num_irreps(); ++i)
        for (int j = 0; j < b.num_irreps(); ++j) {
            table.irrep_names.push_back(a.table().irrep_names[static_cast<size_t>(i)] + "." +
                                        b.table().irrep_names[static_cast<size_t>(j)]);
            std::vector<Cyclotomic> row;
            for (int c = 0; c < classes.count(); ++c) {
                int rep = classes.representative[static_cast<size_t>(c)];
                int x = rep / mb, y = rep % mb;
                Cyclotomic va = a.chi(i, a.classes().class_of[static_cast<size_t>(x)]);
                Cyclotomic vb = b.chi(j, b.classes().class_of[static_cast<size_t>(y)]);
                row.push_back(embed(va, field) * embed(vb, field));
            }
            table.values.push_back(std::move(row));
        }
    return GroupData(a.name() + "x" + b.name(), std::move(g), std::move(table));
}

GroupData builtin_group(const std::string& name) {
    size_t x = name.find('x');
    if (x != std::string::npos && x > 0 && x + 1 < name.size())
        return direct_product(builtin_group(name.substr(0, x)), builtin_group(name.substr(x + 1)));
    if (name == "trivial" || name == "z1") return make_cyclic(1);
    if (name.size() >= 2 && name[0] == 'z') {
        int m = 0;
        try {
            m = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw Error("unknown-group", "no builtin group named '" + name + "'");
        }
        if (m >= 1 && m <= 6) return make_cyclic(m);
        throw Error("unknown-group", "builtin cyclic groups stop at z6 (use a group file)");
    }
    if (name == "klein") {
        GroupData k = direct_product(make_cyclic(2), make_cyclic(2));
        return GroupData("klein", k.group(), k.table());
    }
    if (name == "s3") return make_s3();
    throw Error("unknown-group", "no builtin group named '" + name + "'");
}

GroupData load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("bad-group-file", "cannot open '" + path + "'");

    std::string name;
    int declared_order = -1, declared_exponent = -1;
    std::vector<int> cayley_flat;
    std::vector<std::string> table_rows;
    enum class Section { None, Cayley, Table } section = Section::None;

    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        size_t a0 = trimmed.find_first_not_of(" \t\r");
        if (a0 == std::string::npos) continue;
        size_t b0 = trimmed.find_last_not_of(" \t\r");
        trimmed = trimmed.substr(a0, b0 - a0 + 1);
        if (trimmed.empty() || trimmed[0] == '#') continue;

        auto starts = [&](const char* key) {
            return trimmed.rfind(key, 0) == 0;
        };
        if (starts("name:")) {
            name = trimmed.substr(5);
            size_t p = name.find_first_not_of(" \t");
            name = p == std::string::npos ? "" : name.substr(p);
            section = Section::None;
        } else if (starts("order:")) {
            declared_order = std::stoi(trimmed.substr(6));
            section = Section::None;
        } else if (starts("exponent:")) {
            declared_exponent = std::stoi(trimmed.substr(9));
            section = Section::None;
        } else if (starts("cayley:")) {
            section = Section::Cayley;
        } else if (starts("character_table:")) {
            section = Section::Table;
        } else if (section == Section::Cayley) {
            std::istringstream is(trimmed);
            int v;
            while (is >> v) cayley_flat.push_back(v);
        } else if (section == Section::Table) {
            table_rows.push_back(trimmed);
        } else {
            throw Error("bad-group-file", "unexpected line '" + trimmed + "'");
        }
    }

    if (name.empty()) throw Error("bad-group-file", "missing 'name:' field");
    if (declared_order <= 0) throw Error("bad-group-file", "missing or bad 'order:' field");
    if (static_cast<int>(cayley_flat.size()) != declared_order * declared_order)
        throw Error("bad-group-file", "cayley table has " + std::to_string(cayley_flat.size()) +
                                          " entries, expected " + std::to_string(declared_order * declared_order));

    std::vector<std::vector<int>> cayley(static_cast<size_t>(declared_order),
                                         std::vector<int>(static_cast<size_t>(declared_order)));
    for (int i = 0; i < declared_order; ++i)
        for (int j = 0; j < declared_order; ++j)
            cayley[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                cayley_flat[static_cast<size_t>(i * declared_order + j)];

    FiniteGroup g = FiniteGroup::from_cayley(std::move(cayley));
    if (declared_exponent != -1 && declared_exponent != g.exponent())
        throw Error("bad-group-file", "declared exponent " + std::to_string(declared_exponent) +
                                          " but computed " + std::to_string(g.exponent()));
    const CyclotomicField& field = CyclotomicField::get(g.exponent());
    ConjugacyClasses classes = conjugacy_classes(g);
    if (static_cast<int>(table_rows.size()) != classes.count())
        throw Error("bad-group-file", "character table has " + std::to_string(table_rows.size()) +
                                          " rows, expected " + std::to_string(classes.count()));

    CharacterTable table;
    for (size_t r = 0; r < table_rows.size(); ++r) {
        table.irrep_names.push_back("chi" + std::to_string(r));
        std::vector<Cyclotomic> row;
        std::istringstream is(table_rows[r]);
        std::string cell;
        while (std::getline(is, cell, ',')) row.push_back(parse_cyclotomic(cell, field));
        table.values.push_back(std::move(row));
    }
    return GroupData(name, std::move(g), std::move(table));
}

}  // namespace wreathgen
