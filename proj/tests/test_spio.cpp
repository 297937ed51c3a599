#include "doctest.h"

#include <set>

#include "catlat/spio.hpp"

using namespace catlat;

namespace {

BinaryRelation chain(int n) {
    BinaryRelation r(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) r.add(x, y);
    return r;
}

Spio seven_example() {
    return Spio{BinaryRelation{7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                   {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
                                   {4, 5}, {4, 6}, {4, 7}, {6, 7}}}};
}

}  // namespace

TEST_CASE("is_spio") {
    CHECK_FALSE(is_spio(pattern_relation(ForbiddenPattern::two_plus_two)));
    CHECK_FALSE(is_spio(pattern_relation(ForbiddenPattern::fence_four)));
    CHECK(is_spio(seven_example().relation()));
    CHECK(is_spio(BinaryRelation(0)));
    CHECK_FALSE(is_spio(BinaryRelation(2, {{1, 2}, {2, 1}})));
    CHECK_THROWS_AS(Spio{pattern_relation(ForbiddenPattern::two_plus_two)}, std::invalid_argument);
    CHECK_THROWS_AS(Spio{pattern_relation(ForbiddenPattern::fence_four)}, std::invalid_argument);
}

TEST_CASE("z relation") {
    CHECK(z_relation(Spio{chain(4)}) == BinaryRelation(4));
    CHECK(z_relation(Spio{BinaryRelation(4)}) == BinaryRelation(4));

    // 2+1: bottom z, top y, isolated x; x goes before both
    const Spio two_plus_one{BinaryRelation(3, {{2, 3}})};
    CHECK(z_relation(two_plus_one) == BinaryRelation(3, {{1, 2}, {1, 3}}));

    // same poset with the isolated element labelled last
    const Spio scrambled{BinaryRelation(3, {{1, 2}})};
    CHECK(z_relation(scrambled) == BinaryRelation(3, {{3, 1}, {3, 2}}));

    for (int n = 0; n <= 5; ++n)
        for (const Spio& s : enumerate_spios(n))
            CHECK(z_relation(s.relation()) == z_relation_by_witness(s.relation()));
}

TEST_CASE("preorder linear extension") {
    const int n = 4;
    CHECK(preorder_linear_extension(Spio{chain(n)}) == LinearExtension{1, 2, 3, 4});
    CHECK(preorder_linear_extension(Spio{BinaryRelation(n)}) == LinearExtension{1, 2, 3, 4});

    const Spio reversed{BinaryRelation(3, {{3, 2}, {3, 1}, {2, 1}})};
    CHECK(preorder_linear_extension(reversed) == LinearExtension{3, 2, 1});
    CHECK_FALSE(reversed.is_canonical());
    CHECK(relabel_by_preorder(reversed).relation() == chain(3));

    CHECK(seven_example().is_canonical());
    CHECK(preorder_linear_extension(seven_example()) ==
          LinearExtension{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("relabel_by_preorder is idempotent") {
    for (int n = 0; n <= 5; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            const Spio once = relabel_by_preorder(s);
            CHECK(once == s);
            CHECK(relabel_by_preorder(once) == once);
        }
    // the isolated element of 2+1 must come first in canonical labels
    const Spio scrambled{BinaryRelation(3, {{1, 2}})};
    CHECK(relabel_by_preorder(scrambled).relation() == BinaryRelation(3, {{2, 3}}));
}

TEST_CASE("forbidden posets admit no preorder linear extension") {
    for (ForbiddenPattern p : {ForbiddenPattern::two_plus_two, ForbiddenPattern::fence_four}) {
        CHECK_FALSE(try_preorder_linear_extension(pattern_relation(p)).has_value());
        CHECK(all_preorder_linear_extensions(pattern_relation(p)).empty());
    }
}

TEST_CASE("all_preorder_linear_extensions") {
    CHECK(all_preorder_linear_extensions(Spio{chain(4)}).size() == 1);
    CHECK(all_preorder_linear_extensions(Spio{BinaryRelation(3)}).size() == 6);
    // uniqueness up to order equivalence, spot check
    for (int n = 0; n <= 4; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            const auto exts = all_preorder_linear_extensions(s);
            for (const auto& e1 : exts)
                for (const auto& e2 : exts)
                    for (int p = 0; p < n; ++p)
                        CHECK(are_order_equivalent(s.relation(), e1[static_cast<std::size_t>(p)],
                                                   e2[static_cast<std::size_t>(p)]));
        }
}

TEST_CASE("enumerate_spios") {
    CHECK(enumerate_spios(0).size() == 1);
    CHECK(enumerate_spios(3).size() == 5);
    CHECK(enumerate_spios(5).size() == 42);
    CHECK_THROWS_AS(enumerate_spios(9), std::out_of_range);
    CHECK_THROWS_AS(enumerate_spios(-1), std::out_of_range);

    // independent filter-everything cross-check
    for (int n = 0; n <= 4; ++n) {
        std::set<std::vector<std::pair<int, int>>> brute;
        for (const BinaryRelation& r : enumerate_strict_orders(n))
            if (is_spio(r) && Spio{r}.is_canonical()) brute.insert(r.pairs());
        std::set<std::vector<std::pair<int, int>>> via_trees;
        for (const Spio& s : enumerate_spios(n)) via_trees.insert(s.relation().pairs());
        CHECK(brute == via_trees);
    }
}

TEST_CASE("tree_to_spio") {
    // path tree: every pair joined by a directed path, so the antichain
    CHECK(tree_to_spio(PlanarTree::from_encoding("(((())))")).relation() == BinaryRelation(4));
    // star: leaves pairwise unrelated in the tree, chain in the order
    CHECK(tree_to_spio(PlanarTree::from_encoding("()()()()")).relation() == chain(4));

    // hand-expanded five-node instance: root 1 with children 2 and 5, node 2
    // with children 3 and 4
    const PlanarTree t{std::vector<int>{0, 1, 2, 2, 1}};
    CHECK(tree_to_spio(t).relation() ==
          BinaryRelation(4, {{1, 4}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST_CASE("spio_to_tree") {
    CHECK(spio_to_tree(Spio{BinaryRelation(4)}).encoding() == "(((())))");
    CHECK(spio_to_tree(Spio{chain(4)}).encoding() == "()()()()");
    CHECK_THROWS_AS(spio_to_tree(Spio{BinaryRelation(3, {{1, 2}})}), std::invalid_argument);
    for (int n = 0; n <= 5; ++n) {
        for (const Spio& s : enumerate_spios(n)) CHECK(tree_to_spio(spio_to_tree(s)) == s);
        for (const PlanarTree& t : enumerate_trees(n + 1))
            CHECK(spio_to_tree(tree_to_spio(t)) == t);
    }
}
