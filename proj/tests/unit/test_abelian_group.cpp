#include "doctest.h"

#include "slab/abelian_group.hpp"

using slab::FiniteAbelianGroup;

TEST_CASE("invariant factor validation") {
    CHECK_NOTHROW(FiniteAbelianGroup({4, 2}));
    CHECK_NOTHROW(FiniteAbelianGroup({12, 6, 2}));
    CHECK_THROWS_AS(FiniteAbelianGroup({2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({6, 4}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteAbelianGroup({1}), std::invalid_argument);
}

TEST_CASE("order, exponent, prime detection") {
    FiniteAbelianGroup g({4, 2});
    CHECK(g.order() == 8);
    CHECK(g.exponent() == 4);
    REQUIRE(g.prime().has_value());
    CHECK(*g.prime() == 2);

    FiniteAbelianGroup mixed({12, 2});
    CHECK(mixed.order() == 24);
    CHECK_FALSE(mixed.prime().has_value());

    CHECK(FiniteAbelianGroup::trivial().order() == 1);
    CHECK(FiniteAbelianGroup::trivial().exponent() == 1);
    CHECK(FiniteAbelianGroup::cyclic(1) == FiniteAbelianGroup::trivial());
    CHECK(FiniteAbelianGroup::cyclic(9).factors() == std::vector<std::int64_t>{9});
}

TEST_CASE("element arithmetic") {
    FiniteAbelianGroup g({4, 2});
    auto a = g.element_at(5);  // (2, 1)
    CHECK(a == FiniteAbelianGroup::Element{2, 1});
    CHECK(g.index_of(a) == 5);
    CHECK(g.add(a, a) == FiniteAbelianGroup::Element{0, 0});
    CHECK(g.neg(a) == FiniteAbelianGroup::Element{2, 1});
    CHECK(g.scale(3, g.element_at(3)) == g.add(g.element_at(3), g.add(g.element_at(3), g.element_at(3))));
    CHECK(g.element_order(a) == 2);
    CHECK(g.element_order(g.element_at(2)) == 4);  // (1, 0)
    CHECK(g.element_order(g.zero()) == 1);
}

TEST_CASE("element enumeration covers the group") {
    FiniteAbelianGroup g({6, 2});
    std::set<FiniteAbelianGroup::Element> seen;
    for (std::int64_t i = 0; i < g.order(); ++i) seen.insert(g.element_at(i));
    CHECK(seen.size() == static_cast<std::size_t>(g.order()));
}
