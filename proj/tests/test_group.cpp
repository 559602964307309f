#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "wreathgen/error.hpp"
#include "wreathgen/group.hpp"

using namespace wreathgen;

TEST_CASE("builtin groups validate") {
    for (const char* name : {"trivial", "z2", "z3", "z4", "z5", "z6", "klein", "s3", "z2xz2",
                             "z2xz3", "z2xs3"}) {
        GroupData g = builtin_group(name);
        CHECK(g.num_irreps() == g.num_classes());
        CHECK(g.dim(0) == 1);
    }
    CHECK_THROWS_WITH_AS(builtin_group("z7"), doctest::Contains("unknown-group"), Error);
    CHECK_THROWS_WITH_AS(builtin_group("sporadic"), doctest::Contains("unknown-group"), Error);
}

TEST_CASE("conjugacy classes") {
    GroupData triv = builtin_group("trivial");
    CHECK(triv.num_classes() == 1);
    CHECK(triv.classes().size[0] == 1);

    GroupData z2 = builtin_group("z2");
    CHECK(z2.num_classes() == 2);
    CHECK(z2.classes().size == std::vector<int>{1, 1});

    GroupData s3 = builtin_group("s3");
    REQUIRE(s3.num_classes() == 3);
    CHECK(s3.classes().size == std::vector<int>{1, 3, 2});
    CHECK(s3.classes().identity_class == 0);
    // transpositions are self-inverse; the 3-cycle class is too (inverse is the other 3-cycle,
    // same class)
    CHECK(s3.classes().inverse_class == std::vector<int>{0, 1, 2});
    CHECK(s3.group().exponent() == 6);
}

TEST_CASE("brute-force class sizes partition the group") {
    for (const char* name : {"z4", "klein", "s3", "z2xs3"}) {
        GroupData g = builtin_group(name);
        int total = 0;
        for (int c = 0; c < g.num_classes(); ++c) {
            total += g.classes().size[static_cast<size_t>(c)];
            // every member conjugates back into the class
            for (int x : g.classes().members[static_cast<size_t>(c)])
                CHECK(g.classes().class_of[static_cast<size_t>(x)] == c);
        }
        CHECK(total == g.group().order());
    }
}

TEST_CASE("bad Cayley tables are rejected") {
    CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley({{0, 1}, {0, 1}}), doctest::Contains("not-a-group"),
                         Error);
    CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley({{1, 0}, {0, 0}}), doctest::Contains("not-a-group"),
                         Error);
    // rows are permutations but composition is not associative:
    // this 5-element quasigroup has an identity yet fails associativity
    std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 4, 0, 1, 3},
                                          {3, 2, 4, 0, 1},
                                          {4, 3, 1, 2, 0}};
    CHECK_THROWS_WITH_AS(FiniteGroup::from_cayley(loop), doctest::Contains("not-a-group"), Error);
}

TEST_CASE("character table validation catches duplicate rows") {
    FiniteGroup z2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}});
    ConjugacyClasses classes = conjugacy_classes(z2);
    const auto& field = CyclotomicField::get(2);
    auto one = Cyclotomic(Rat(1), field);
    CharacterTable bad;
    bad.irrep_names = {"a", "b"};
    bad.values = {{one, one}, {one, one}};
    CHECK_THROWS_WITH_AS(validate_character_table(z2, classes, bad),
                         doctest::Contains("invalid-character-table"), Error);
}

TEST_CASE("character table validation accepts the cyclic tables") {
    FiniteGroup z3 = FiniteGroup::from_cayley({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    ConjugacyClasses classes = conjugacy_classes(z3);
    const auto& field = CyclotomicField::get(3);
    auto z = [&](int k) { return Cyclotomic::zeta_power(k, field); };
    CharacterTable table;
    table.irrep_names = {"chi0", "chi1", "chi2"};
    table.values = {{z(0), z(0), z(0)}, {z(0), z(1), z(2)}, {z(0), z(2), z(1)}};
    CHECK_NOTHROW(validate_character_table(z3, classes, table));

    // swapping a value breaks orthogonality
    table.values[1][1] = z(2);
    table.values[1][2] = z(2);
    CHECK_THROWS_WITH_AS(validate_character_table(z3, classes, table),
                         doctest::Contains("invalid-character-table"), Error);
}

TEST_CASE("trivial character must come first") {
    FiniteGroup z2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}});
    ConjugacyClasses classes = conjugacy_classes(z2);
    const auto& field = CyclotomicField::get(2);
    auto v = [&](int x) { return Cyclotomic(Rat(x), field); };
    CharacterTable swapped;
    swapped.irrep_names = {"sgn", "triv"};
    swapped.values = {{v(1), v(-1)}, {v(1), v(1)}};
    CHECK_THROWS_WITH_AS(validate_character_table(z2, classes, swapped),
                         doctest::Contains("invalid-character-table"), Error);
}

namespace {

std::string write_temp(const std::string& contents) {
    std::string path = std::string("wreathgen_test_group.tmp");
    std::ofstream out(path);
    out << contents;
    return path;
}

}  // namespace

TEST_CASE("group file round trip for z3") {
    std::string path = write_temp(
        "# cyclic group of order 3\n"
        "name: z3-from-file\n"
        "order: 3\n"
        "exponent: 3\n"
        "cayley:\n"
        "0 1 2\n"
        "1 2 0\n"
        "2 0 1\n"
        "character_table:\n"
        "1, 1, 1\n"
        "1, z^1, z^2\n"
        "1, z^2, z^1\n");
    GroupData g = load_group_file(path);
    CHECK(g.name() == "z3-from-file");
    CHECK(g.group().order() == 3);
    CHECK(g.group().exponent() == 3);
    CHECK(g.num_irreps() == 3);
    GroupData builtin = builtin_group("z3");
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) CHECK(g.chi(i, c) == builtin.chi(i, c));
    std::remove(path.c_str());
}

TEST_CASE("group file errors carry diagnostics") {
    std::string missing = write_temp("name: x\norder: 2\n");
    CHECK_THROWS_WITH_AS(load_group_file(missing), doctest::Contains("bad-group-file"), Error);

    std::string bad_exponent = write_temp(
        "name: x\norder: 2\nexponent: 3\ncayley:\n0 1\n1 0\ncharacter_table:\n1, 1\n1, -1\n");
    CHECK_THROWS_WITH_AS(load_group_file(bad_exponent), doctest::Contains("bad-group-file"), Error);

    std::string bad_table = write_temp(
        "name: x\norder: 2\ncayley:\n0 1\n1 0\ncharacter_table:\n1, 1\n1, 1\n");
    CHECK_THROWS_WITH_AS(load_group_file(bad_table), doctest::Contains("invalid-character-table"),
                         Error);
    CHECK_THROWS_WITH_AS(load_group_file("no_such_file.group"), doctest::Contains("bad-group-file"),
                         Error);
    std::remove(missing.c_str());
}

TEST_CASE("direct products") {
    GroupData k = builtin_group("klein");
    CHECK(k.group().order() == 4);
    CHECK(k.group().exponent() == 2);
    CHECK(k.num_irreps() == 4);
    for (int i = 0; i < 4; ++i) CHECK(k.dim(i) == 1);

    GroupData z6 = builtin_group("z2xz3");
    CHECK(z6.group().order() == 6);
    CHECK(z6.group().exponent() == 6);
    CHECK(z6.is_abelian());

    GroupData h = builtin_group("z2xs3");
    CHECK(h.group().order() == 12);
    CHECK_FALSE(h.is_abelian());
}

TEST_CASE("embedding into a larger cyclotomic field") {
    const auto& f3 = CyclotomicField::get(3);
    const auto& f6 = CyclotomicField::get(6);
    Cyclotomic z3 = Cyclotomic::zeta_power(1, f3);
    Cyclotomic image = embed(z3, f6);
    CHECK(image == Cyclotomic::zeta_power(2, f6));
    CHECK_THROWS_WITH_AS(embed(Cyclotomic::zeta_power(1, f6), CyclotomicField::get(4)),
                         doctest::Contains("field-mismatch"), Error);
}
