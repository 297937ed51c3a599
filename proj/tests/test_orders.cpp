#include "doctest.h"

#include <set>

#include "catlat/orders.hpp"

using namespace catlat;

namespace {

Spio chain_spio(int n) {
    BinaryRelation r(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) r.add(x, y);
    return Spio{std::move(r)};
}

Spio antichain_spio(int n) { return Spio{BinaryRelation(n)}; }

}  // namespace

TEST_CASE("leq_dyck") {
    const Spio c = chain_spio(3);
    const Spio a = antichain_spio(3);
    CHECK(leq_dyck(c, c));
    CHECK(leq_dyck(c, a));  // chain ideals (0,1,2) dominate antichain ideals (0,0,0)
    CHECK_FALSE(leq_dyck(a, c));
    CHECK_THROWS_AS(leq_dyck(c, antichain_spio(4)), std::invalid_argument);
    CHECK_THROWS_AS(leq_dyck(Spio{BinaryRelation(3, {{1, 2}})}, a), std::invalid_argument);

    // chain and antichain are the extremes of the n=3 lattice
    for (const Spio& s : enumerate_spios(3)) {
        CHECK(leq_dyck(c, s));
        CHECK(leq_dyck(s, a));
    }
}

TEST_CASE("leq_tamari") {
    const Spio c = chain_spio(3);
    const Spio a = antichain_spio(3);
    CHECK(leq_tamari(c, c));
    CHECK(leq_tamari(c, a));
    CHECK_FALSE(leq_tamari(a, c));
    for (const Spio& s : enumerate_spios(3)) {
        CHECK(leq_tamari(c, s));
        CHECK(leq_tamari(s, a));
    }
}

TEST_CASE("tree order forms") {
    const PlanarTree star = PlanarTree::from_encoding("()()()");
    const PlanarTree path = PlanarTree::from_encoding("((()))");
    CHECK(leq_dyck_tree(star, star));
    CHECK(leq_dyck_tree(star, path));
    CHECK_FALSE(leq_dyck_tree(path, star));
    CHECK(leq_tamari_tree(star, path));
    CHECK_FALSE(leq_tamari_tree(path, star));
    CHECK_THROWS_AS(leq_dyck_tree(star, PlanarTree::from_encoding("()")), std::invalid_argument);

    // the n=3 Tamari relation is the pentagon; check its cover set exactly
    const auto trees = enumerate_trees(4);
    std::set<std::pair<std::string, std::string>> covers;
    for (const PlanarTree& t1 : trees)
        for (const PlanarTree& t2 : trees) {
            if (t1 == t2 || !leq_tamari_tree(t1, t2)) continue;
            bool is_cover = true;
            for (const PlanarTree& mid : trees) {
                if (mid == t1 || mid == t2) continue;
                if (leq_tamari_tree(t1, mid) && leq_tamari_tree(mid, t2)) is_cover = false;
            }
            if (is_cover) covers.insert({t1.encoding(), t2.encoding()});
        }
    const std::set<std::pair<std::string, std::string>> expected{
        {"()()()", "(())()"}, {"()()()", "()(())"}, {"(())()", "(()())"},
        {"(()())", "((()))"}, {"()(())", "((()))"}};
    CHECK(covers == expected);
}

TEST_CASE("order equivalences across carriers") {
    for (int n = 0; n <= 4; ++n) {
        const auto trees = enumerate_trees(n + 1);
        std::vector<Spio> posets;
        std::vector<DyckPath> paths;
        for (const PlanarTree& t : trees) {
            posets.push_back(tree_to_spio(t));
            paths.push_back(tree_to_dyck(t));
        }
        for (std::size_t i = 0; i < trees.size(); ++i)
            for (std::size_t j = 0; j < trees.size(); ++j) {
                const bool dyck = leq_dyck(posets[i], posets[j]);
                CHECK(dyck == leq_dyck_tree(trees[i], trees[j]));
                CHECK(dyck == dyck_dominates(paths[i], paths[j]));
                const bool tamari = leq_tamari(posets[i], posets[j]);
                CHECK(tamari == leq_tamari_tree(trees[i], trees[j]));
                CHECK(tamari == leq_tamari_tree_subset(trees[i], trees[j]));
                CHECK(tamari == leq_tamari_tree_lineage(trees[i], trees[j]));
            }
    }
}

TEST_CASE("meet and join") {
    const auto elems = enumerate_spios(4);
    for (CatalanOrder order : {CatalanOrder::dyck, CatalanOrder::tamari}) {
        auto leq = order == CatalanOrder::dyck ? leq_dyck : leq_tamari;
        for (const Spio& x : elems) {
            CHECK(lattice_meet(order, x, x) == x);
            CHECK(lattice_join(order, x, x) == x);
        }
        const Spio bottom = chain_spio(4);
        const Spio top = antichain_spio(4);
        for (const Spio& x : elems) {
            CHECK(lattice_join(order, bottom, x) == x);
            CHECK(lattice_meet(order, top, x) == x);
        }
        for (const Spio& x : elems)
            for (const Spio& y : elems) {
                const Spio m = lattice_meet(order, x, y);
                const Spio j = lattice_join(order, x, y);
                CHECK(leq(m, x));
                CHECK(leq(m, y));
                CHECK(leq(x, j));
                CHECK(leq(y, j));
            }
    }
    CHECK_THROWS_AS(lattice_meet(CatalanOrder::weak_bruhat, chain_spio(3), antichain_spio(3)),
                    std::invalid_argument);
}

TEST_CASE("Dyck meet is the pointwise minimum of height profiles") {
    const auto elems = enumerate_spios(4);
    for (const Spio& x : elems)
        for (const Spio& y : elems) {
            const Spio m = lattice_meet(CatalanOrder::dyck, x, y);
            const auto hm = tree_to_dyck(spio_to_tree(m)).heights();
            const auto hx = tree_to_dyck(spio_to_tree(x)).heights();
            const auto hy = tree_to_dyck(spio_to_tree(y)).heights();
            for (std::size_t i = 0; i < hm.size(); ++i)
                CHECK(hm[i] == std::min(hx[i], hy[i]));
        }
}

TEST_CASE("check_refinement") {
    const RefinementReport r3 = check_refinement(3);
    CHECK(r3.pairs_checked == 25);
    CHECK(r3.order_counterexamples == 0);
    CHECK(r3.ideal_step_counterexamples == 0);
    CHECK(check_refinement(1).ok());
    CHECK(check_refinement(5).ok());
    CHECK_THROWS_AS(check_refinement(8), std::out_of_range);
}

TEST_CASE("hasse diagrams") {
    const HasseDiagram d3 = hasse(CatalanOrder::dyck, 3);
    CHECK(d3.elements ==
          std::vector<std::string>{"((()))", "(()())", "(())()", "()(())", "()()()"});
    CHECK(d3.covers == std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}});

    const HasseDiagram t3 = hasse(CatalanOrder::tamari, 3);
    CHECK(t3.elements.size() == 5);
    CHECK(t3.covers == std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 0}, {4, 2}, {4, 3}});
    CHECK(t3.covers.size() == d3.covers.size());

    const HasseDiagram one = hasse(CatalanOrder::tamari, 1);
    CHECK(one.elements == std::vector<std::string>{"()"});
    CHECK(one.covers.empty());

    CHECK_THROWS_AS(hasse(CatalanOrder::dyck, 8), std::out_of_range);
    CHECK_THROWS_AS(hasse(CatalanOrder::strong_bruhat, 7), std::out_of_range);
    CHECK_THROWS_AS(hasse(CatalanOrder::dyck, 0), std::out_of_range);
}

TEST_CASE("bruhat hasse diagrams match the transported lattices") {
    for (int n = 1; n <= 4; ++n) {
        // weak Bruhat on the avoiders is the Tamari lattice in permutation
        // clothing: same cover counts
        const HasseDiagram weak = hasse(CatalanOrder::weak_bruhat, n);
        const HasseDiagram tamari = hasse(CatalanOrder::tamari, n);
        CHECK(weak.covers.size() == tamari.covers.size());
        const HasseDiagram strong = hasse(CatalanOrder::strong_bruhat, n);
        const HasseDiagram dyck = hasse(CatalanOrder::dyck, n);
        CHECK(strong.covers.size() == dyck.covers.size());
        CHECK(weak.elements.size() == strong.elements.size());
    }
}

TEST_CASE("hasse DOT output is byte-stable and as expected") {
    const std::string expected =
        "digraph \"dyck_n3\" {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"((()))\"];\n"
        "  n1 [label=\"(()())\"];\n"
        "  n2 [label=\"(())()\"];\n"
        "  n3 [label=\"()(())\"];\n"
        "  n4 [label=\"()()()\"];\n"
        "  n1 -> n0;\n"
        "  n2 -> n1;\n"
        "  n3 -> n1;\n"
        "  n4 -> n2;\n"
        "  n4 -> n3;\n"
        "}\n";
    CHECK(hasse(CatalanOrder::dyck, 3).to_dot() == expected);
    CHECK(hasse(CatalanOrder::dyck, 3).to_dot() == hasse(CatalanOrder::dyck, 3).to_dot());
}
