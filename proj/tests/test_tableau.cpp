#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "ytab/tableau.hpp"

using namespace ytab;
using testutil::cols;
using testutil::rows;

TEST_SUITE("tableau") {

TEST_CASE("conjugate") {
    CHECK(Partition({4, 2, 2}).conjugate() == Partition({3, 3, 1, 1}));
    CHECK(Partition({1}).conjugate() == Partition({1}));
    CHECK(Partition({3, 3, 2}).conjugate() == Partition({3, 3, 2}));
    CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("conjugate is an involution up to size 8") {
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : testutil::all_partitions(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("content_of") {
    Filling f = rows({{1, 1, 2, 1}, {2, 2}, {1, 2}});
    CHECK(content_of(f) == Content({4, 4}));

    Filling single = rows({{3}});
    CHECK(content_of(single, 3) == Content({0, 0, 1}));

    testutil::DBasisExample ex;
    CHECK(content_of(ex.f) == Content({2, 2, 3, 2}));
}

TEST_CASE("row words") {
    Filling e = rows({{2, 1, 3, 4}, {3, 2}, {4, 3}});
    Filling f = rows({{2, 2, 4, 3}, {3, 1}, {3, 4}});
    CHECK(e.row_word() == std::vector<int>{2, 1, 3, 4, 3, 2, 4, 3});
    CHECK(f.row_word() == std::vector<int>{2, 2, 4, 3, 3, 1, 3, 4});
    CHECK(cols({{1, 2, 3}}).row_word() == std::vector<int>{1, 2, 3});
}

TEST_CASE("row word order") {
    Filling e = rows({{2, 1, 3, 4}, {3, 2}, {4, 3}});
    Filling f = rows({{2, 2, 4, 3}, {3, 1}, {3, 4}});
    CHECK(row_word_compare(e, f) == std::strong_ordering::less);
    CHECK(row_word_compare(f, f) == std::strong_ordering::equal);

    testutil::DBasisExample ex;
    CHECK(row_word_compare(ex.s[1], ex.s[0]) == std::strong_ordering::less);

    // Values above 9 compare as integers, not digit strings.
    Filling a = cols({{2}, {10}});
    Filling b = cols({{10}, {2}});
    CHECK(row_word_compare(a, b) == std::strong_ordering::less);

    CHECK_THROWS_AS(row_word_compare(e, rows({{1, 1, 1, 1}, {2, 2}, {3, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(row_word_compare(e, cols({{1, 2}})), std::invalid_argument);
}

TEST_CASE("row word order is total on a small space") {
    std::vector<Filling> space;
    for (const Filling& f : testutil::brute_all_fillings(Partition({2, 1}), 3))
        if (content_of(f, 3) == Content({1, 1, 1}))
            space.push_back(f);
    CHECK(space.size() == 6);
    for (const Filling& a : space)
        for (const Filling& b : space) {
            auto ab = row_word_compare(a, b);
            auto ba = row_word_compare(b, a);
            if (ab == std::strong_ordering::less)
                CHECK(ba == std::strong_ordering::greater);
            if (ab == std::strong_ordering::equal)
                CHECK(a == b);
            for (const Filling& c : space)
                if (ab == std::strong_ordering::less &&
                    row_word_compare(b, c) == std::strong_ordering::less)
                    CHECK(row_word_compare(a, c) == std::strong_ordering::less);
        }
}

TEST_CASE("sort_columns") {
    testutil::DBasisExample ex;
    auto [t, sign] = sort_columns(ex.f);
    CHECK(t == ex.f);
    CHECK(sign == 1);

    auto [t2, sign2] = sort_columns(cols({{2, 1}}));
    CHECK(t2 == cols({{1, 2}}));
    CHECK(sign2 == -1);

    auto [t3, sign3] = sort_columns(cols({{3, 1, 2}}));
    CHECK(t3 == cols({{1, 2, 3}}));
    CHECK(sign3 == 1);

    CHECK_THROWS_AS(sort_columns(cols({{1, 1}})), std::invalid_argument);
}

TEST_CASE("standardize") {
    Filling e = rows({{2, 1, 3, 4}, {3, 2}, {4, 3}});
    Filling f = rows({{2, 2, 4, 3}, {3, 1}, {3, 4}});
    Filling expected = rows({{1, 2, 3, 4}, {2, 3}, {3, 4}});
    CHECK(standardize(e) == expected);
    CHECK(standardize(f) == expected);

    testutil::DBasisExample ex;
    CHECK(standardize(ex.s[0]) == ex.s[0]);
    CHECK(standardize(ex.f) == ex.s[4]);
}

TEST_CASE("standardize of cardinal fillings is semistandard and idempotent") {
    for (const Filling& f : testutil::brute_all_fillings(Partition({3, 2}), 4)) {
        if (!f.is_cardinal())
            continue;
        Filling s = standardize(f);
        CHECK(s.is_semistandard());
        CHECK(standardize(s) == s);
    }
}

TEST_CASE("apply") {
    testutil::RcoeffExample ex;
    MultiPermutation pi({{2, 0, 1}, {0, 1, 2}, {0}, {0}});
    CHECK(apply(ex.f, pi) == rows({{4, 1, 4, 1}, {2, 2}, {3, 3}}));
    CHECK(pi.sign() == 1);

    MultiPermutation id = MultiPermutation::identity(ex.f.shape());
    CHECK(apply(ex.f, id) == ex.f);
    CHECK(id.sign() == 1);

    CHECK_THROWS_AS(apply(cols({{1, 2}}), pi), std::invalid_argument);
}

TEST_CASE("apply is a signed group action") {
    std::mt19937_64 gen(7);
    Partition shape({3, 2, 2});
    Content z({2, 2, 2, 1});
    auto group = testutil::enumerate_ycs(shape);
    for (int trial = 0; trial < 20; ++trial) {
        Filling f = testutil::random_cardinal_filling(shape, z, gen);
        const MultiPermutation& a = group[gen() % group.size()];
        const MultiPermutation& b = group[gen() % group.size()];
        CHECK(apply(apply(f, a), b) == apply(f, a.compose(b)));
        CHECK(apply(apply(f, a), a.inverse()) == f);
        CHECK(a.compose(b).sign() == a.sign() * b.sign());
        CHECK(a.inverse().sign() == a.sign());
        CHECK(content_of(apply(f, a)).same_values(content_of(f)));
    }
}

TEST_CASE("same_row_content") {
    testutil::RcoeffExample ex;
    MultiPermutation pi({{2, 0, 1}, {0, 1, 2}, {0}, {0}});
    CHECK(same_row_content(apply(ex.f, pi), ex.s));
    CHECK(same_row_content(ex.f, ex.f));
    CHECK_FALSE(same_row_content(ex.s, ex.f));
    CHECK_THROWS_AS(same_row_content(ex.s, cols({{1, 2}})), std::invalid_argument);
}

TEST_CASE("predicates") {
    CHECK(rows({{3, 1, 2, 2}, {2, 3}, {1, 2}}).is_cardinal());
    CHECK_FALSE(rows({{1, 1, 2, 1}, {2, 2}, {1, 2}}).is_cardinal());
    CHECK(rows({{2, 1, 4, 1}, {3, 2}, {4, 3}}).is_tableau());
    testutil::DBasisExample ex;
    for (const Filling& s : ex.s)
        CHECK(s.is_semistandard());
    CHECK_FALSE(ex.f.is_semistandard());
}

TEST_CASE("text format") {
    testutil::DBasisExample ex;
    CHECK(to_text(ex.f) == "2 1 1 3\n3 3 2\n4 4\n");
    CHECK(parse_filling("2 1 1 3\n3 3 2\n4 4\n") == ex.f);

    CHECK_THROWS_AS(parse_filling("1 2\n3 4 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filling("1 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_filling(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_filling("1 x\n"), std::invalid_argument);

    std::mt19937_64 gen(11);
    Partition shape({4, 2, 1});
    Content z({2, 2, 2, 1});
    for (int trial = 0; trial < 25; ++trial) {
        Filling f = testutil::random_cardinal_filling(shape, z, gen);
        CHECK(parse_filling(to_text(f)) == f);
    }
}

}
