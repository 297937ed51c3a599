#pragma once

#include <array>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catlat/orders.hpp"

namespace catlat::verify {

/// One verified structural claim: a stable id, the range it was exercised
/// over, a human-readable detail line and the verdict.
struct ClaimResult {
    std::string id;
    std::string range;
    std::string detail;
    bool pass = false;
};

namespace impl {

inline std::string n_upto(int cap) { return "n<=" + std::to_string(cap); }

/// Independent pattern-containment oracle: every 4-subset, every one of the
/// 24 label bijections, matched pair by pair.
inline bool contains_pattern_brute(const BinaryRelation& a, const BinaryRelation& pattern) {
    const int n = a.size();
    if (n < 4) return false;
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 1; j <= n - 2; ++j)
            for (int k = j + 1; k <= n - 1; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const std::array<int, 4> labels{i, j, k, l};
                    std::array<int, 4> sigma{1, 2, 3, 4};
                    do {
                        bool match = true;
                        for (int p = 0; p < 4 && match; ++p)
                            for (int q = 0; q < 4 && match; ++q) {
                                if (p == q) continue;
                                if (a.contains(labels[static_cast<std::size_t>(p)],
                                               labels[static_cast<std::size_t>(q)]) !=
                                    pattern.contains(sigma[static_cast<std::size_t>(p)],
                                                     sigma[static_cast<std::size_t>(q)]))
                                    match = false;
                            }
                        if (match) return true;
                    } while (std::next_permutation(sigma.begin(), sigma.end()));
                }
    return false;
}

/// The seven-element running example: filters {3,4,5,6,7}, {3,4,5,6,7},
/// {} , {5,6,7}, {}, {7}, {} for labels 1..7.
inline const Spio& seven_element_example() {
    static const Spio s{BinaryRelation{
        7, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7},
            {4, 5}, {4, 6}, {4, 7}, {6, 7}}}};
    return s;
}

inline std::uint64_t filter_mask(const Permutation& p, int v) {
    std::uint64_t m = 0;
    const int pv = p.position_of(v);
    for (int w = v + 1; w <= p.size(); ++w)
        if (p.position_of(w) > pv) m |= 1ULL << (w - 1);
    return m;
}

}  // namespace impl

/// Composition is associative; symmetric closure is idempotent and
/// extensive; complement is an involution; difference and intersection
/// partition. Randomized over small supports with a fixed seed.
inline ClaimResult claim_relation_algebra(int /*max_n*/) {
    std::mt19937_64 rng(0x5eed2024ULL);
    long long checks = 0;
    bool ok = true;
    for (int iter = 0; iter < 300 && ok; ++iter) {
        const int n = static_cast<int>(rng() % 7);
        auto random_relation = [&] {
            BinaryRelation r(n);
            for (int x = 1; x <= n; ++x) r.set_row(x, rng());
            return r;
        };
        const BinaryRelation a = random_relation();
        const BinaryRelation b = random_relation();
        const BinaryRelation c = random_relation();
        ok = ok && compose(compose(a, b), c) == compose(a, compose(b, c));
        ok = ok && symmetric_closure(symmetric_closure(a)) == symmetric_closure(a);
        ok = ok && difference(symmetric_closure(a), a) == difference(inverse(a), a);
        ok = ok && complement(complement(a)) == a;
        ok = ok && unite(difference(a, b), intersect(a, b)) == a;
        checks += 5;
    }
    return {"relation-algebra", "random n<=6", std::to_string(checks) + " randomized identities",
            ok};
}

/// Order equivalence of x and y holds exactly when transposing the two
/// labels leaves the relation unchanged; exhaustive over all strict orders.
inline ClaimResult claim_order_equivalence_swap(int max_n) {
    const int cap = std::min(max_n, 5);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const BinaryRelation& r : enumerate_strict_orders(n)) {
            for (int x = 1; x <= n && ok; ++x)
                for (int y = x + 1; y <= n && ok; ++y) {
                    ok = are_order_equivalent(r, x, y) == (swap_labels(r, x, y) == r);
                    ++checks;
                }
            if (!ok) break;
        }
    return {"order-equivalence-swap", impl::n_upto(cap),
            std::to_string(checks) + " label pairs over all strict orders", ok};
}

/// contains_pattern agrees with the brute-force 4-subset/24-map oracle on
/// every strict order.
inline ClaimResult claim_pattern_oracle(int max_n) {
    const int cap = std::min(max_n, 5);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const BinaryRelation& r : enumerate_strict_orders(n)) {
            for (ForbiddenPattern p : {ForbiddenPattern::two_plus_two, ForbiddenPattern::fence_four}) {
                if (contains_pattern(r, p) != impl::contains_pattern_brute(r, pattern_relation(p))) {
                    ok = false;
                    break;
                }
                ++checks;
            }
            if (!ok) break;
        }
    return {"pattern-oracle", impl::n_upto(cap),
            std::to_string(checks) + " pattern queries against the brute-force oracle", ok};
}

/// The composition formula for Z and its witness reading coincide on every
/// series parallel interval order.
inline ClaimResult claim_z_two_routes(int max_n) {
    const int cap = std::min(max_n, 7);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            if (!(z_relation(s.relation()) == z_relation_by_witness(s.relation()))) {
                ok = false;
                break;
            }
            ++checks;
        }
    return {"z-two-routes", impl::n_upto(cap),
            std::to_string(checks) + " posets, formula vs witness scan", ok};
}

/// R union Z is acyclic on every series parallel interval order, and the
/// produced sequence really extends both R and Z.
inline ClaimResult claim_extension_exists(int max_n) {
    const int cap = std::min(max_n, 7);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            const auto ext = try_preorder_linear_extension(s.relation());
            if (!ext) {
                ok = false;
                break;
            }
            std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
            for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>((*ext)[static_cast<std::size_t>(i)])] = i;
            const BinaryRelation z = z_relation(s.relation());
            for (int x = 1; x <= n && ok; ++x)
                for (int y = 1; y <= n && ok; ++y) {
                    if (s.relation().contains(x, y) || z.contains(x, y))
                        ok = rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)];
                }
            ++checks;
        }
    return {"extension-exists", impl::n_upto(cap),
            std::to_string(checks) + " posets admit a preorder linear extension", ok};
}

/// Any two preorder linear extensions agree position by position up to order
/// equivalence; extensions are enumerated by backtracking.
inline ClaimResult claim_extension_unique(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            const auto exts = all_preorder_linear_extensions(s);
            for (std::size_t i = 0; i < exts.size() && ok; ++i)
                for (std::size_t j = 0; j < exts.size() && ok; ++j) {
                    ++pairs;
                    for (int p = 0; p < n; ++p)
                        if (!are_order_equivalent(s.relation(), exts[i][static_cast<std::size_t>(p)],
                                                  exts[j][static_cast<std::size_t>(p)])) {
                            ok = false;
                            break;
                        }
                }
            if (!ok) break;
        }
    return {"extension-unique", impl::n_upto(cap),
            std::to_string(pairs) + " extension pairs agree positionwise up to equivalence", ok};
}

/// Elements ordered oppositely by two preorder linear extensions are always
/// order equivalent.
inline ClaimResult claim_opposite_order_equivalence(int max_n) {
    const int cap = std::min(max_n, 6);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            const auto exts = all_preorder_linear_extensions(s);
            std::vector<std::vector<int>> rank(exts.size(), std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
            for (std::size_t e = 0; e < exts.size(); ++e)
                for (int i = 0; i < n; ++i)
                    rank[e][static_cast<std::size_t>(exts[e][static_cast<std::size_t>(i)])] = i;
            for (std::size_t i = 0; i < exts.size() && ok; ++i)
                for (std::size_t j = 0; j < exts.size() && ok; ++j)
                    for (int x = 1; x <= n && ok; ++x)
                        for (int y = x + 1; y <= n && ok; ++y) {
                            const bool before_i = rank[i][static_cast<std::size_t>(x)] < rank[i][static_cast<std::size_t>(y)];
                            const bool before_j = rank[j][static_cast<std::size_t>(x)] < rank[j][static_cast<std::size_t>(y)];
                            if (before_i != before_j) {
                                ok = are_order_equivalent(s.relation(), x, y);
                                ++checks;
                            }
                        }
            if (!ok) break;
        }
    return {"opposite-order-equivalence", impl::n_upto(cap),
            std::to_string(checks) + " oppositely ordered pairs are order equivalent", ok};
}

/// Neither 2+2 nor the fence of order four admits a preorder linear
/// extension: R union Z is cyclic for both.
inline ClaimResult claim_non_spio_no_extension(int /*max_n*/) {
    bool ok = true;
    for (ForbiddenPattern p : {ForbiddenPattern::two_plus_two, ForbiddenPattern::fence_four}) {
        const BinaryRelation& r = pattern_relation(p);
        ok = ok && !try_preorder_linear_extension(r).has_value();
        ok = ok && all_preorder_linear_extensions(r).empty();
    }
    return {"non-spio-no-extension", "fixed n=4",
            "2+2 and the fence of order four admit no preorder linear extension", ok};
}

/// Trees with n+1 nodes, series parallel interval orders on n elements and
/// 312-avoiding permutations of length n are all counted by the closed
/// Catalan formula.
inline ClaimResult claim_catalan_count(int max_n) {
    const int cap = std::min(max_n, 8);
    static constexpr std::array<std::int64_t, 9> reference{1, 1, 2, 5, 14, 42, 132, 429, 1430};
    bool ok = true;
    std::string counts;
    for (int n = 0; n <= cap; ++n) {
        const std::int64_t c = catalan_number(n);
        ok = ok && c == reference[static_cast<std::size_t>(n)];
        ok = ok && static_cast<std::int64_t>(enumerate_trees(n + 1).size()) == c;
        ok = ok && static_cast<std::int64_t>(enumerate_spios(n).size()) == c;
        ok = ok && static_cast<std::int64_t>(enumerate_av312(n).size()) == c;
        if (n) counts += ',';
        counts += std::to_string(c);
    }
    return {"catalan-count", "n=" + std::to_string(cap),
            std::to_string(catalan_number(cap)) + " objects per family; counts " + counts +
                " match the closed formula",
            ok};
}

/// Filtering every strict order for pattern avoidance and canonical
/// labelling recovers exactly the tree-generated enumeration.
inline ClaimResult claim_spio_filter_cross_check(int max_n) {
    const int cap = std::min(max_n, 5);
    bool ok = true;
    long long total = 0;
    for (int n = 0; n <= cap && ok; ++n) {
        std::set<std::vector<std::pair<int, int>>> brute;
        for (const BinaryRelation& r : enumerate_strict_orders(n))
            if (is_spio(r) && Spio(r).is_canonical()) brute.insert(r.pairs());
        std::set<std::vector<std::pair<int, int>>> via_trees;
        for (const Spio& s : enumerate_spios(n)) via_trees.insert(s.relation().pairs());
        ok = brute == via_trees;
        total += static_cast<long long>(brute.size());
    }
    return {"spio-filter-cross-check", impl::n_upto(cap),
            std::to_string(total) + " canonical posets recovered by the filter-everything oracle",
            ok};
}

/// Relabelling by any preorder linear extension, or canonicalizing any
/// scrambled relabelling, lands on the same canonical relation; the induced
/// permutation never depends on the tie-break.
inline ClaimResult claim_canonical_form_unique(int max_n) {
    const int cap = std::min(max_n, 5);
    std::mt19937_64 rng(0xcafe2024ULL);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const Spio& s : enumerate_spios(n)) {
            for (const LinearExtension& ext : all_preorder_linear_extensions(s)) {
                if (!(relabelled(s.relation(), ext) == s.relation())) {
                    ok = false;
                    break;
                }
                ++checks;
            }
            std::vector<int> shuffle(static_cast<std::size_t>(n));
            std::iota(shuffle.begin(), shuffle.end(), 1);
            for (int rep = 0; rep < 3 && ok; ++rep) {
                std::shuffle(shuffle.begin(), shuffle.end(), rng);
                const Spio scrambled{relabelled(s.relation(), shuffle)};
                const Spio back = relabel_by_preorder(scrambled);
                ok = back == s && spio_to_perm(back) == spio_to_perm(s);
                ++checks;
            }
            if (!ok) break;
        }
    return {"canonical-form-unique", impl::n_upto(cap),
            std::to_string(checks) + " relabellings reach the same canonical form", ok};
}

/// Every tree maps to a valid series parallel interval order, distinct trees
/// map to distinct relations, and the image count is Catalan.
inline ClaimResult claim_tree_map_valid(int max_n) {
    const int cap = std::min(max_n, 7);
    long long trees = 0;
    bool ok = true;
    for (int m = 1; m <= cap + 1 && ok; ++m) {
        std::set<std::vector<std::pair<int, int>>> images;
        for (const PlanarTree& t : enumerate_trees(m)) {
            const Spio s = tree_to_spio(t);
            ok = ok && is_spio(s.relation()) && images.insert(s.relation().pairs()).second;
            ++trees;
        }
        ok = ok && static_cast<std::int64_t>(images.size()) == catalan_number(m - 1);
    }
    return {"tree-map-valid", impl::n_upto(cap),
            std::to_string(trees) + " trees map to distinct valid posets", ok};
}

/// The preorder labelling of a tree is the preorder linear extension of its
/// image: the image is already canonical.
inline ClaimResult claim_tree_map_preorder(int max_n) {
    const int cap = std::min(max_n, 7);
    long long trees = 0;
    bool ok = true;
    for (int m = 1; m <= cap + 1 && ok; ++m)
        for (const PlanarTree& t : enumerate_trees(m)) {
            const Spio s = tree_to_spio(t);
            ok = s.is_canonical() && relabel_by_preorder(s) == s;
            if (!ok) break;
            ++trees;
        }
    return {"tree-map-preorder", impl::n_upto(cap),
            std::to_string(trees) + " tree images carry their preorder labelling", ok};
}

/// The tree map and its inverse are mutually inverse in both directions.
inline ClaimResult claim_tree_map_roundtrip(int max_n) {
    const int cap = std::min(max_n, 7);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        for (const Spio& s : enumerate_spios(n)) {
            if (!(tree_to_spio(spio_to_tree(s)) == s)) {
                ok = false;
                break;
            }
            ++checks;
        }
        for (const PlanarTree& t : enumerate_trees(n + 1)) {
            if (!(spio_to_tree(tree_to_spio(t)) == t)) {
                ok = false;
                break;
            }
            ++checks;
        }
    }
    return {"tree-map-roundtrip", impl::n_upto(cap),
            std::to_string(checks) + " round trips are the identity", ok};
}

/// tree_to_dyck is a bijection onto Dyck paths of matching length.
inline ClaimResult claim_tree_dyck_bijection(int max_n) {
    const int cap = std::min(max_n, 7);
    long long checks = 0;
    bool ok = true;
    for (int m = 1; m <= cap + 1 && ok; ++m) {
        std::set<std::string> images;
        for (const PlanarTree& t : enumerate_trees(m)) {
            const DyckPath p = tree_to_dyck(t);
            ok = ok && p.length() == 2 * (m - 1) && images.insert(p.steps()).second &&
                 dyck_to_tree(p) == t;
            ++checks;
        }
        ok = ok && static_cast<std::int64_t>(images.size()) == catalan_number(m - 1);
    }
    return {"tree-dyck-bijection", impl::n_upto(cap),
            std::to_string(checks) + " trees map bijectively onto Dyck paths", ok};
}

/// The height reached by the U step that first visits node k equals the
/// number of ancestors of k.
inline ClaimResult claim_height_ancestor_link(int max_n) {
    const int cap = std::min(max_n, 6);
    long long checks = 0;
    bool ok = true;
    for (int m = 1; m <= cap + 1 && ok; ++m)
        for (const PlanarTree& t : enumerate_trees(m)) {
            const DyckPath p = tree_to_dyck(t);
            int height = 0;
            int ups = 0;
            for (char c : p.steps()) {
                if (c == 'U') {
                    ++height;
                    ++ups;
                    if (height != static_cast<int>(t.ancestors(ups + 1).size())) {
                        ok = false;
                        break;
                    }
                    ++checks;
                } else {
                    --height;
                }
            }
            if (!ok) break;
        }
    return {"height-ancestor-link", impl::n_upto(cap),
            std::to_string(checks) + " first visits reach ancestor-count height", ok};
}

/// Three routes to the Dyck order agree: ideal cardinalities on posets,
/// ancestor counts on trees, and weak path domination.
inline ClaimResult claim_dyck_equivalences(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const std::vector<PlanarTree> trees = enumerate_trees(n + 1);
        std::vector<Spio> posets;
        std::vector<DyckPath> paths;
        for (const PlanarTree& t : trees) {
            posets.push_back(tree_to_spio(t));
            paths.push_back(tree_to_dyck(t));
        }
        for (std::size_t i = 0; i < trees.size() && ok; ++i)
            for (std::size_t j = 0; j < trees.size() && ok; ++j) {
                const bool via_poset = leq_dyck(posets[i], posets[j]);
                const bool via_tree = leq_dyck_tree(trees[i], trees[j]);
                const bool via_path = dyck_dominates(paths[i], paths[j]);
                ok = via_poset == via_tree && via_tree == via_path;
                ++pairs;
            }
    }
    return {"dyck-equivalences", impl::n_upto(cap),
            std::to_string(pairs) + " pairs agree across poset, tree and path forms", ok};
}

/// Five routes to the Tamari order agree: filter containment and filter
/// cardinality on posets; descendant counts, descendant sets and lineage
/// sets on trees.
inline ClaimResult claim_tamari_equivalences(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const std::vector<PlanarTree> trees = enumerate_trees(n + 1);
        std::vector<Spio> posets;
        for (const PlanarTree& t : trees) posets.push_back(tree_to_spio(t));
        for (std::size_t i = 0; i < trees.size() && ok; ++i)
            for (std::size_t j = 0; j < trees.size() && ok; ++j) {
                const bool via_poset = leq_tamari(posets[i], posets[j]);
                const bool via_count = leq_tamari_tree(trees[i], trees[j]);
                const bool via_subset = leq_tamari_tree_subset(trees[i], trees[j]);
                const bool via_lineage = leq_tamari_tree_lineage(trees[i], trees[j]);
                ok = via_poset == via_count && via_count == via_subset && via_subset == via_lineage;
                ++pairs;
            }
    }
    return {"tamari-equivalences", impl::n_upto(cap),
            std::to_string(pairs) + " pairs agree across all four characterizations", ok};
}

/// Both orders are lattices: every pair has a unique greatest lower bound
/// and a unique least upper bound.
inline ClaimResult claim_lattice_meet_join(int max_n) {
    const int cap = std::min(max_n, 6);
    long long bounds = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const std::vector<Spio> elems = enumerate_spios(n);
        const int count = static_cast<int>(elems.size());
        for (CatalanOrder order : {CatalanOrder::dyck, CatalanOrder::tamari}) {
            auto leq = order == CatalanOrder::dyck ? leq_dyck : leq_tamari;
            const auto below = detail::build_below_table(count, [&](int i, int j) {
                return leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
            });
            const auto above = detail::build_below_table(count, [&](int i, int j) {
                return leq(elems[static_cast<std::size_t>(j)], elems[static_cast<std::size_t>(i)]);
            });
            for (int i = 0; i < count && ok; ++i)
                for (int j = 0; j < count && ok; ++j) {
                    ok = detail::table_meet(below, i, j) >= 0 && detail::table_meet(above, i, j) >= 0;
                    bounds += 2;
                }
            if (!ok) break;
        }
    }
    return {"lattice-meet-join", impl::n_upto(cap),
            std::to_string(bounds) + " meets and joins exist and are unique", ok};
}

/// The brute-force Dyck meet coincides with the pointwise minimum of the two
/// height profiles.
inline ClaimResult claim_dyck_meet_profile(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const std::vector<Spio> elems = enumerate_spios(n);
        const int count = static_cast<int>(elems.size());
        std::vector<std::vector<int>> profiles;
        for (const Spio& s : elems) profiles.push_back(tree_to_dyck(spio_to_tree(s)).heights());
        const auto below = detail::build_below_table(count, [&](int i, int j) {
            return leq_dyck(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
        });
        for (int i = 0; i < count && ok; ++i)
            for (int j = 0; j < count && ok; ++j) {
                const int m = detail::table_meet(below, i, j);
                if (m < 0) {
                    ok = false;
                    break;
                }
                for (std::size_t h = 0; h < profiles[static_cast<std::size_t>(m)].size(); ++h)
                    if (profiles[static_cast<std::size_t>(m)][h] !=
                        std::min(profiles[static_cast<std::size_t>(i)][h],
                                 profiles[static_cast<std::size_t>(j)][h])) {
                        ok = false;
                        break;
                    }
                ++pairs;
            }
    }
    return {"dyck-meet-profile", impl::n_upto(cap),
            std::to_string(pairs) + " meets equal the pointwise minimum profile", ok};
}

/// The Dyck order refines the Tamari order, and filter containment forces
/// ideal containment (the one-line proof step); zero counterexamples.
inline ClaimResult claim_refinement(int max_n) {
    const int cap = std::min(max_n, 7);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const RefinementReport rep = check_refinement(n);
        ok = rep.ok();
        pairs += rep.pairs_checked;
    }
    return {"refinement", impl::n_upto(cap),
            std::to_string(pairs) + " ordered pairs, 0 counterexamples", ok};
}

/// spio_to_perm is a bijection onto the 312 avoiders with perm_to_spio as
/// two-sided inverse.
inline ClaimResult claim_perm_bijection(int max_n) {
    const int cap = std::min(max_n, 7);
    long long checks = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        std::set<std::string> image;
        for (const Spio& s : enumerate_spios(n)) {
            const Permutation p = spio_to_perm(s);
            ok = ok && avoids_312(p) && image.insert(p.to_string()).second && perm_to_spio(p) == s;
            ++checks;
        }
        std::set<std::string> avoiders;
        for (const Permutation& p : enumerate_av312(n)) {
            avoiders.insert(p.to_string());
            ok = ok && spio_to_perm(perm_to_spio(p)) == p;
            ++checks;
        }
        ok = ok && image == avoiders;
    }
    return {"perm-bijection", impl::n_upto(cap),
            std::to_string(checks) + " objects round-trip across the bijection", ok};
}

/// Inversion-set containment is equivalent to pointwise filter containment;
/// exhaustive over the whole symmetric group at small n and over the
/// avoiders one size further.
inline ClaimResult claim_inversion_filter_duality(int max_n) {
    long long pairs = 0;
    bool ok = true;
    auto agree = [&](const Permutation& p1, const Permutation& p2) {
        const auto e1 = inversions(p1);
        const auto e2 = inversions(p2);
        const bool inv_subset = std::includes(e2.begin(), e2.end(), e1.begin(), e1.end());
        bool filter_superset = true;
        for (int k = 1; k <= p1.size() && filter_superset; ++k)
            if (impl::filter_mask(p2, k) & ~impl::filter_mask(p1, k)) filter_superset = false;
        return inv_subset == filter_superset;
    };
    const int full_cap = std::min(max_n, 5);
    for (int n = 0; n <= full_cap && ok; ++n) {
        const auto perms = all_permutations(n);
        for (const Permutation& p1 : perms)
            for (const Permutation& p2 : perms) {
                if (!agree(p1, p2)) {
                    ok = false;
                    break;
                }
                ++pairs;
            }
    }
    const int av_cap = std::min(max_n, 6);
    for (int n = 0; n <= av_cap && ok; ++n) {
        const auto perms = enumerate_av312(n);
        for (const Permutation& p1 : perms)
            for (const Permutation& p2 : perms) {
                if (!agree(p1, p2)) {
                    ok = false;
                    break;
                }
                ++pairs;
            }
    }
    return {"inversion-filter-duality", "S_n n<=" + std::to_string(full_cap) + ", avoiders n<=" + std::to_string(av_cap),
            std::to_string(pairs) + " pairs, inversion containment equals filter containment", ok};
}

/// The bijection carries the Tamari order to the weak Bruhat order.
inline ClaimResult claim_tamari_weak_iso(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const std::vector<Spio> elems = enumerate_spios(n);
        std::vector<Permutation> perms;
        for (const Spio& s : elems) perms.push_back(spio_to_perm(s));
        for (std::size_t i = 0; i < elems.size() && ok; ++i)
            for (std::size_t j = 0; j < elems.size() && ok; ++j) {
                ok = leq_tamari(elems[i], elems[j]) == leq_weak_bruhat(perms[i], perms[j]);
                ++pairs;
            }
    }
    return {"tamari-weak-iso", impl::n_upto(cap),
            std::to_string(pairs) + " pairs transported order-faithfully", ok};
}

/// On avoiders, pointwise ideal-size domination is equivalent to pointwise
/// prefix-maximum domination.
inline ClaimResult claim_ideal_max_duality(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const auto perms = enumerate_av312(n);
        std::vector<std::vector<int>> ideal_sizes, maxima;
        for (const Permutation& p : perms) {
            std::vector<int> sizes;
            for (int k = 1; k <= n; ++k) sizes.push_back(static_cast<int>(ideal_set(p, k).size()));
            ideal_sizes.push_back(std::move(sizes));
            maxima.push_back(max_vector(p));
        }
        for (std::size_t i = 0; i < perms.size() && ok; ++i)
            for (std::size_t j = 0; j < perms.size() && ok; ++j) {
                bool ideal_dom = true, max_dom = true;
                for (int k = 0; k < n; ++k) {
                    if (ideal_sizes[i][static_cast<std::size_t>(k)] < ideal_sizes[j][static_cast<std::size_t>(k)])
                        ideal_dom = false;
                    if (maxima[i][static_cast<std::size_t>(k)] > maxima[j][static_cast<std::size_t>(k)])
                        max_dom = false;
                }
                ok = ideal_dom == max_dom;
                ++pairs;
            }
    }
    return {"ideal-max-duality", impl::n_upto(cap),
            std::to_string(pairs) + " pairs, ideal sizes vs prefix maxima", ok};
}

/// The bijection carries the Dyck order to the strong Bruhat order, with the
/// reduction-closure table over the full symmetric group as ground truth.
inline ClaimResult claim_dyck_strong_iso(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    std::string table_note;
    for (int n = 0; n <= cap && ok; ++n) {
        const BruhatTable table(n, BruhatTable::Kind::strong);
        table_note = "table over " + std::to_string(table.elements().size()) + " permutations";
        const std::vector<Spio> elems = enumerate_spios(n);
        std::vector<Permutation> perms;
        for (const Spio& s : elems) perms.push_back(spio_to_perm(s));
        for (std::size_t i = 0; i < elems.size() && ok; ++i)
            for (std::size_t j = 0; j < elems.size() && ok; ++j) {
                ok = leq_dyck(elems[i], elems[j]) == table.leq(perms[i], perms[j]);
                ++pairs;
            }
    }
    return {"dyck-strong-iso", impl::n_upto(cap),
            std::to_string(pairs) + " pairs against the reduction BFS " + table_note, ok};
}

/// The inversion-set criterion and simple-reduction reachability define the
/// same weak Bruhat order on the whole symmetric group.
inline ClaimResult claim_weak_routes_agree(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const BruhatTable table(n, BruhatTable::Kind::weak);
        const auto& perms = table.elements();
        for (const Permutation& p1 : perms) {
            for (const Permutation& p2 : perms) {
                if (leq_weak_bruhat(p1, p2) != table.leq(p1, p2)) {
                    ok = false;
                    break;
                }
                ++pairs;
            }
            if (!ok) break;
        }
    }
    return {"weak-routes-agree", impl::n_upto(cap),
            std::to_string(pairs) + " pairs, inversion criterion vs simple-reduction closure", ok};
}

/// On avoiders the prefix-maximum characterization matches reduction
/// reachability exactly.
inline ClaimResult claim_strong_max_agree(int max_n) {
    const int cap = std::min(max_n, 6);
    long long pairs = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n) {
        const BruhatTable table(n, BruhatTable::Kind::strong);
        const auto perms = enumerate_av312(n);
        for (const Permutation& p1 : perms) {
            for (const Permutation& p2 : perms) {
                if (leq_strong_bruhat_max(p1, p2) != table.leq(p1, p2)) {
                    ok = false;
                    break;
                }
                ++pairs;
            }
            if (!ok) break;
        }
    }
    return {"strong-max-agree", impl::n_upto(cap),
            std::to_string(pairs) + " avoider pairs, prefix maxima vs reduction closure", ok};
}

/// The five structural properties of consecutive noninversions hold for
/// every avoider: the ideal-size change criterion, monotone ideal sizes, the
/// placement rule, the preceded-only-by-lesser description, and the match
/// with the components of the prefix-maximum vector including first-occurrence
/// indices.
inline ClaimResult claim_noninversion_properties(int max_n) {
    const int cap = std::min(max_n, 7);
    long long perms_checked = 0;
    bool ok = true;
    for (int n = 0; n <= cap && ok; ++n)
        for (const Permutation& p : enumerate_av312(n)) {
            const std::vector<int> cn = consecutive_noninversions(p);
            const std::set<int> cn_set(cn.begin(), cn.end());
            std::vector<int> ideal_sizes(static_cast<std::size_t>(n) + 1, 0);
            for (int k = 1; k <= n; ++k)
                ideal_sizes[static_cast<std::size_t>(k)] = static_cast<int>(ideal_set(p, k).size());
            // i) membership criterion via ideal sizes
            for (int m = 1; m <= n && ok; ++m) {
                const bool member = cn_set.count(m) > 0;
                const bool criterion =
                    m == n || ideal_sizes[static_cast<std::size_t>(m)] != ideal_sizes[static_cast<std::size_t>(m) + 1];
                ok = member == criterion;
            }
            // ii) ideal sizes weakly increase in the value
            for (int j = 1; j < n && ok; ++j)
                ok = ideal_sizes[static_cast<std::size_t>(j)] <= ideal_sizes[static_cast<std::size_t>(j) + 1];
            // iii) a consecutive noninversion m with k smaller entries before
            // it sits at position k+1
            for (int m : cn) {
                if (!ok) break;
                ok = p.value_at(ideal_sizes[static_cast<std::size_t>(m)] + 1) == m;
            }
            // iv) consecutive noninversions = entries preceded only by lesser
            // entries
            for (int m = 1; m <= n && ok; ++m) {
                bool only_lesser = true;
                for (int pos = 1; pos < p.position_of(m); ++pos)
                    if (p.value_at(pos) > m) only_lesser = false;
                ok = (cn_set.count(m) > 0) == only_lesser;
            }
            // v) they are the components of the prefix-maximum vector, first
            // occurrences matching positions
            if (ok) {
                const std::vector<int> maxima = max_vector(p);
                const std::set<int> components(maxima.begin(), maxima.end());
                ok = components == cn_set;
                for (int m : cn) {
                    if (!ok) break;
                    const auto first =
                        std::find(maxima.begin(), maxima.end(), m) - maxima.begin();
                    ok = static_cast<int>(first) + 1 == p.position_of(m);
                }
            }
            ++perms_checked;
            if (!ok) break;
        }
    return {"noninversion-properties", impl::n_upto(cap),
            std::to_string(perms_checked) + " avoiders satisfy all five properties", ok};
}

/// The seven-element example works out exactly: permutation 2146753, the
/// stated filter chain, the stated ideal, and the noninversion structure.
inline ClaimResult claim_example_poset_filters(int /*max_n*/) {
    bool ok = true;
    const Spio& s = impl::seven_element_example();
    ok = ok && is_spio(s.relation()) && s.is_canonical();
    const Permutation p = spio_to_perm(s);
    ok = ok && p.to_string() == "2146753";
    const std::vector<int> big{3, 4, 5, 6, 7};
    ok = ok && principal_filter(s.relation(), 1) == big && principal_filter(s.relation(), 2) == big;
    ok = ok && principal_filter(s.relation(), 4) == std::vector<int>{5, 6, 7};
    ok = ok && principal_filter(s.relation(), 6) == std::vector<int>{7};
    for (int k : {3, 5, 7}) ok = ok && principal_filter(s.relation(), k).empty();
    // filter chain R(2)=R(1) > R(4) > R(6) > R(7)=R(5)=R(3)
    ok = ok && s.relation().row(2) == s.relation().row(1);
    ok = ok && (s.relation().row(4) & ~s.relation().row(1)) == 0 &&
         s.relation().row(4) != s.relation().row(1);
    ok = ok && (s.relation().row(6) & ~s.relation().row(4)) == 0 &&
         s.relation().row(6) != s.relation().row(4);
    ok = ok && s.relation().row(7) == 0 && s.relation().row(5) == 0 && s.relation().row(3) == 0;
    ok = ok && principal_ideal(s.relation(), 7) == std::vector<int>{1, 2, 4, 6};
    ok = ok && are_order_equivalent(s.relation(), 1, 2);
    ok = ok && perm_to_spio(p) == s;
    // consecutive noninversions coincide with the components of the
    // prefix-maximum vector (2,2,4,6,7,7,7)
    ok = ok && consecutive_noninversions(p) == std::vector<int>{2, 4, 6, 7};
    ok = ok && max_vector(p) == std::vector<int>{2, 2, 4, 6, 7, 7, 7};
    return {"example-poset-filters", "fixed n=7", "seven-element poset maps to 2146753 with the stated filters", ok};
}

/// The nine-element reduction example works out exactly: the two prefix
/// maximum vectors, a valid two-step reduction chain passing through a
/// non-avoider, and the resulting strong-order comparison.
inline ClaimResult claim_example_reduction_chain(int /*max_n*/) {
    bool ok = true;
    const Permutation lo = Permutation::parse("468753921");
    const Permutation hi = Permutation::parse("768543921");
    const Permutation mid = Permutation::parse("768453921");
    ok = ok && avoids_312(lo) && avoids_312(hi) && !avoids_312(mid);
    ok = ok && max_vector(lo) == std::vector<int>{4, 6, 8, 8, 8, 8, 9, 9, 9};
    ok = ok && max_vector(hi) == std::vector<int>{7, 7, 8, 8, 8, 8, 9, 9, 9};
    ok = ok && is_reduction_of(mid, hi) && is_reduction_of(lo, mid);
    ok = ok && leq_strong_bruhat(lo, hi);
    ok = ok && leq_strong_bruhat_max(lo, hi) && !leq_strong_bruhat_max(hi, lo);
    return {"example-reduction-chain", "fixed n=9",
            "468753921 <= 768543921 via the two-step reduction chain", ok};
}

/// The two diagrams at n=3 have five vertices each, the Tamari
/// comparabilities sit strictly inside the Dyck ones, and DOT output is
/// byte-stable across runs.
inline ClaimResult claim_hasse_shape(int /*max_n*/) {
    bool ok = true;
    const HasseDiagram dyck = hasse(CatalanOrder::dyck, 3);
    const HasseDiagram tamari = hasse(CatalanOrder::tamari, 3);
    ok = ok && dyck.elements.size() == 5 && tamari.elements.size() == 5;
    const std::vector<Spio> elems = enumerate_spios(3);
    std::set<std::pair<int, int>> dyck_pairs, tamari_pairs;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            if (leq_dyck(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]))
                dyck_pairs.insert({i, j});
            if (leq_tamari(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]))
                tamari_pairs.insert({i, j});
        }
    ok = ok && std::includes(dyck_pairs.begin(), dyck_pairs.end(), tamari_pairs.begin(),
                             tamari_pairs.end());
    ok = ok && tamari_pairs.size() < dyck_pairs.size();
    ok = ok && hasse(CatalanOrder::dyck, 3).to_dot() == dyck.to_dot();
    ok = ok && hasse(CatalanOrder::tamari, 3).to_dot() == tamari.to_dot();
    return {"hasse-shape", "fixed n=3",
            "five vertices each; Tamari comparabilities strictly inside Dyck; stable DOT", ok};
}

/// Every claim suite, in a fixed report order.
inline std::vector<ClaimResult> run_all(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw std::out_of_range("verification: max_n must be between 1 and 7");
    std::vector<ClaimResult> out;
    out.push_back(claim_relation_algebra(max_n));
    out.push_back(claim_order_equivalence_swap(max_n));
    out.push_back(claim_pattern_oracle(max_n));
    out.push_back(claim_z_two_routes(max_n));
    out.push_back(claim_extension_exists(max_n));
    out.push_back(claim_extension_unique(max_n));
    out.push_back(claim_opposite_order_equivalence(max_n));
    out.push_back(claim_non_spio_no_extension(max_n));
    out.push_back(claim_catalan_count(max_n));
    out.push_back(claim_spio_filter_cross_check(max_n));
    out.push_back(claim_canonical_form_unique(max_n));
    out.push_back(claim_tree_map_valid(max_n));
    out.push_back(claim_tree_map_preorder(max_n));
    out.push_back(claim_tree_map_roundtrip(max_n));
    out.push_back(claim_tree_dyck_bijection(max_n));
    out.push_back(claim_height_ancestor_link(max_n));
    out.push_back(claim_dyck_equivalences(max_n));
    out.push_back(claim_tamari_equivalences(max_n));
    out.push_back(claim_lattice_meet_join(max_n));
    out.push_back(claim_dyck_meet_profile(max_n));
    out.push_back(claim_refinement(max_n));
    out.push_back(claim_perm_bijection(max_n));
    out.push_back(claim_inversion_filter_duality(max_n));
    out.push_back(claim_tamari_weak_iso(max_n));
    out.push_back(claim_ideal_max_duality(max_n));
    out.push_back(claim_dyck_strong_iso(max_n));
    out.push_back(claim_weak_routes_agree(max_n));
    out.push_back(claim_strong_max_agree(max_n));
    out.push_back(claim_noninversion_properties(max_n));
    out.push_back(claim_example_poset_filters(max_n));
    out.push_back(claim_example_reduction_chain(max_n));
    out.push_back(claim_hasse_shape(max_n));
    return out;
}

}  // namespace catlat::verify
