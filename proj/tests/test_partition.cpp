#include "doctest.h"

#include "wreathgen/error.hpp"
#include "wreathgen/partition.hpp"

using namespace wreathgen;

TEST_CASE("conjugate examples") {
    CHECK(conjugate(parse_partition("2,1")) == parse_partition("2,1"));
    CHECK(conjugate(parse_partition("3,1")) == parse_partition("2,1,1"));
    CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("conjugate is an involution up to size 12") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("hook shapes") {
    CHECK(hook(4, 0) == parse_partition("4"));
    CHECK(hook(4, 3) == parse_partition("1,1,1,1"));
    CHECK(hook(5, 2) == parse_partition("3,1,1"));
    CHECK_THROWS_WITH_AS(hook(4, 4), doctest::Contains("invalid-hook"), Error);
    CHECK_THROWS_WITH_AS(hook(4, -1), doctest::Contains("invalid-hook"), Error);
}

TEST_CASE("two-row shapes") {
    CHECK(two_row(5, 2) == parse_partition("3,2"));
    CHECK(two_row(4, 0) == parse_partition("4"));
    CHECK(two_row(6, 3) == parse_partition("3,3"));
    CHECK_THROWS_WITH_AS(two_row(5, 3), doctest::Contains("invalid-two-row"), Error);
}

TEST_CASE("partition order and invariants") {
    CHECK_THROWS_AS(Partition({1, 2}), Error);
    CHECK(Partition({2, 1, 0}) == parse_partition("2,1"));  // trailing zeros stripped
    CHECK(parse_partition("1,1") < parse_partition("2"));
    CHECK(parse_partition("2") < parse_partition("1,1,1"));
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("pad adds a long first row at the unit component") {
    MultiPartition stable = MultiPartition::empty(1);
    stable.at(0) = parse_partition("2,1");
    auto padded = pad(stable, 7);
    REQUIRE(padded.has_value());
    CHECK(padded->at(0) == parse_partition("4,2,1"));
    CHECK_FALSE(pad(stable, 4).has_value());  // 4 - 3 < 2

    MultiPartition empty = MultiPartition::empty(1);
    auto p3 = pad(empty, 3);
    REQUIRE(p3.has_value());
    CHECK(p3->at(0) == parse_partition("3"));
}

TEST_CASE("pad zero rule: zero exactly when n - |lam| < lam(1)_1") {
    for (int total = 0; total <= 4; ++total)
        for (const auto& stable : multipartitions_of(total, 2))
            for (int n = 0; n <= 8; ++n) {
                bool expect_zero = n - stable.total() < stable.at(0).part(0);
                CHECK(pad(stable, n).has_value() == !expect_zero);
            }
}

TEST_CASE("strip_first_row undoes pad") {
    for (int total = 0; total <= 5; ++total)
        for (const auto& stable : multipartitions_of(total, 2))
            for (int n = total; n <= total + 4; ++n) {
                auto padded = pad(stable, n);
                if (!padded) continue;
                CHECK(strip_first_row(*padded) == stable);
                CHECK(padded->total() == n);
            }
}

TEST_CASE("multipartition size and order") {
    MultiPartition two = MultiPartition::empty(2);
    CHECK(two.total() == 0);
    two.at(0) = parse_partition("1");
    two.at(1) = parse_partition("1");
    CHECK(two.total() == 2);
    CHECK(parse_multipartition("[2,1|]", 2).total() == 3);
    CHECK(multipartitions_of(2, 2).size() == 5);
    CHECK(multipartitions_of(0, 3).size() == 1);
    auto sorted = multipartitions_of(3, 2);
    for (size_t i = 1; i < sorted.size(); ++i) CHECK(sorted[i - 1] < sorted[i]);
}

TEST_CASE("tableau counts via hook lengths") {
    CHECK(standard_tableau_count(parse_partition("2,1")) == 2);
    CHECK(standard_tableau_count(parse_partition("3,2")) == 5);
    CHECK(standard_tableau_count(Partition()) == 1);
}

TEST_CASE("label parsing round-trips") {
    CHECK(parse_multipartition("[3,1|]", 2).at(0) == parse_partition("3,1"));
    CHECK(parse_multipartition("[|1,1]", 2).at(1) == parse_partition("1,1"));
    CHECK(parse_multipartition("[1|1]", 2).str() == "[1|1]");
    CHECK_THROWS_WITH_AS(parse_multipartition("[1|1]", 3), doctest::Contains("bad-label"), Error);
    CHECK_THROWS_WITH_AS(parse_partition("1,x"), doctest::Contains("bad-partition"), Error);
}
