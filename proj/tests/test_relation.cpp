#include "doctest.h"

#include <random>

#include "catlat/relation.hpp"

using namespace catlat;

namespace {

BinaryRelation chain(int n) {
    BinaryRelation r(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) r.add(x, y);
    return r;
}

BinaryRelation full(int n) {
    BinaryRelation r(n);
    for (int x = 1; x <= n; ++x) r.set_row(x, r.support_mask());
    return r;
}

// The running seven-element example: filters {3..7}, {3..7}, {}, {5,6,7},
// {}, {7}, {}.
BinaryRelation seven_example() {
    return BinaryRelation{7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                              {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
                              {4, 5}, {4, 6}, {4, 7}, {6, 7}}};
}

}  // namespace

TEST_CASE("compose") {
    BinaryRelation a(3, {{1, 2}});
    BinaryRelation b(3, {{2, 3}});
    CHECK(compose(a, b) == BinaryRelation(3, {{1, 3}}));

    CHECK(compose(BinaryRelation(3), b) == BinaryRelation(3));
    CHECK(compose(full(2), full(2)) == full(2));

    CHECK_THROWS_AS(compose(BinaryRelation(2), BinaryRelation(3)), std::invalid_argument);
}

TEST_CASE("symmetric closure") {
    CHECK(symmetric_closure(BinaryRelation(2, {{1, 2}})) == BinaryRelation(2, {{1, 2}, {2, 1}}));
    CHECK(symmetric_closure(BinaryRelation(3)) == BinaryRelation(3));
    BinaryRelation sym(3, {{1, 2}, {2, 1}});
    CHECK(symmetric_closure(sym) == sym);
}

TEST_CASE("complement includes the diagonal") {
    CHECK(complement(BinaryRelation(2)) == BinaryRelation(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
    CHECK(complement(full(2)) == BinaryRelation(2));
    CHECK(complement(BinaryRelation(2, {{1, 2}})) ==
          BinaryRelation(2, {{1, 1}, {2, 1}, {2, 2}}));
}

TEST_CASE("is_strict_order") {
    CHECK(is_strict_order(chain(3)));
    CHECK_FALSE(is_strict_order(BinaryRelation(3, {{1, 2}, {2, 3}})));  // not transitive
    CHECK_FALSE(is_strict_order(BinaryRelation(1, {{1, 1}})));          // not irreflexive
    CHECK(is_strict_order(BinaryRelation(0)));
}

TEST_CASE("principal filter and ideal") {
    const BinaryRelation ex = seven_example();
    CHECK(principal_filter(ex, 4) == std::vector<int>{5, 6, 7});
    CHECK(principal_filter(BinaryRelation(4), 2).empty());
    CHECK(principal_filter(chain(3), 1) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(principal_filter(chain(3), 4), std::out_of_range);

    CHECK(principal_ideal(chain(3), 3) == std::vector<int>{1, 2});
    CHECK(principal_ideal(BinaryRelation(4), 2).empty());
    CHECK(principal_ideal(ex, 7) == std::vector<int>{1, 2, 4, 6});

    // independent route: scan the definition directly
    std::vector<int> scanned;
    for (int y = 1; y <= 7; ++y)
        if (ex.contains(y, 7)) scanned.push_back(y);
    CHECK(scanned == principal_ideal(ex, 7));
}

TEST_CASE("seven-element example reconstructs from its covers") {
    const BinaryRelation covers(
        7, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 7}});
    CHECK(transitive_closure(covers) == seven_example());
}

TEST_CASE("contains_pattern") {
    CHECK(contains_pattern(pattern_relation(ForbiddenPattern::two_plus_two),
                           ForbiddenPattern::two_plus_two));
    CHECK(contains_pattern(pattern_relation(ForbiddenPattern::fence_four),
                           ForbiddenPattern::fence_four));
    for (int n = 1; n <= 6; ++n) {
        CHECK_FALSE(contains_pattern(chain(n), ForbiddenPattern::two_plus_two));
        CHECK_FALSE(contains_pattern(chain(n), ForbiddenPattern::fence_four));
    }
    // isolated fifth element leaves the induced 2+2 on {1,2,3,4}
    CHECK(contains_pattern(BinaryRelation(5, {{1, 2}, {3, 4}}), ForbiddenPattern::two_plus_two));
    CHECK_THROWS_AS(contains_pattern(BinaryRelation(1, {{1, 1}}), ForbiddenPattern::two_plus_two),
                    std::invalid_argument);
}

TEST_CASE("order equivalence") {
    BinaryRelation antichain(4);
    for (int x = 1; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y) CHECK(are_order_equivalent(antichain, x, y));
    for (int x = 1; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y) CHECK_FALSE(are_order_equivalent(chain(4), x, y));
    CHECK(are_order_equivalent(seven_example(), 1, 2));
    CHECK_FALSE(are_order_equivalent(seven_example(), 1, 4));
    CHECK_THROWS_AS(are_order_equivalent(chain(3), 0, 2), std::out_of_range);
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(chain(3), BinaryRelation(3, {{2, 1}, {2, 3}, {1, 3}})));
    CHECK_FALSE(are_isomorphic(chain(3), BinaryRelation(3)));
    CHECK_FALSE(are_isomorphic(pattern_relation(ForbiddenPattern::two_plus_two),
                               pattern_relation(ForbiddenPattern::fence_four)));
    CHECK(are_isomorphic(BinaryRelation(0), BinaryRelation(0)));
    CHECK_THROWS_AS(are_isomorphic(BinaryRelation(2, {{1, 1}}), chain(2)),
                    std::invalid_argument);
}

TEST_CASE("relation algebra properties on random relations") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 100; ++iter) {
        const int n = static_cast<int>(rng() % 7);
        auto random_relation = [&] {
            BinaryRelation r(n);
            for (int x = 1; x <= n; ++x) r.set_row(x, rng());
            return r;
        };
        const BinaryRelation a = random_relation();
        const BinaryRelation b = random_relation();
        const BinaryRelation c = random_relation();
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(symmetric_closure(symmetric_closure(a)) == symmetric_closure(a));
        CHECK(complement(complement(a)) == a);
        CHECK(inverse(inverse(a)) == a);
        CHECK(unite(difference(a, b), intersect(a, b)) == a);
    }
}

TEST_CASE("order equivalence matches the label-swap criterion exhaustively") {
    for (int n = 0; n <= 4; ++n)
        for (const BinaryRelation& r : enumerate_strict_orders(n))
            for (int x = 1; x <= n; ++x)
                for (int y = x + 1; y <= n; ++y)
                    CHECK(are_order_equivalent(r, x, y) == (swap_labels(r, x, y) == r));
}

TEST_CASE("enumerate_strict_orders basics") {
    CHECK(enumerate_strict_orders(0).size() == 1);
    CHECK(enumerate_strict_orders(1).size() == 1);
    CHECK(enumerate_strict_orders(2).size() == 3);
    for (const BinaryRelation& r : enumerate_strict_orders(4)) CHECK(is_strict_order(r));
    CHECK_THROWS_AS(enumerate_strict_orders(6), std::out_of_range);
}
