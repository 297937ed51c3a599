#pragma once

#include <cassert>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catlat/catalan.hpp"
#include "catlat/relation.hpp"
#include "catlat/tree.hpp"

namespace catlat {

/// A strict order avoids both forbidden subposets exactly when it is a
/// series parallel interval order.
inline bool is_spio(const BinaryRelation& a) {
    return is_strict_order(a) && !contains_pattern(a, ForbiddenPattern::two_plus_two) &&
           !contains_pattern(a, ForbiddenPattern::fence_four);
}

/// Z = ((R-bar)^c o R-bar) \ R-bar, where R-bar = R union R^{-1}.
inline BinaryRelation z_relation(const BinaryRelation& r) {
    const BinaryRelation rbar = symmetric_closure(r);
    return difference(compose(complement(rbar), rbar), rbar);
}

/// The same relation computed from the witness reading: x Z y iff x and y are
/// unrelated under R-bar and some z satisfies z R-bar y but not z R-bar x.
/// Kept as an independent route; the two must always agree.
inline BinaryRelation z_relation_by_witness(const BinaryRelation& r) {
    const BinaryRelation rbar = symmetric_closure(r);
    const int n = r.size();
    BinaryRelation out(n);
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (x == y || rbar.contains(x, y)) continue;
            for (int z = 1; z <= n; ++z)
                if (rbar.contains(z, y) && !rbar.contains(z, x)) {
                    out.add(x, y);
                    break;
                }
        }
    return out;
}

/// A linear extension as the element sequence: position i holds the i-th
/// element of the order.
using LinearExtension = std::vector<int>;

/// Topological order of R union Z, ties broken toward the smallest label.
/// Empty when R union Z has a cycle, which no series parallel interval order
/// produces.
inline std::optional<LinearExtension> try_preorder_linear_extension(const BinaryRelation& r) {
    const int n = r.size();
    const BinaryRelation combined = unite(r, z_relation(r));
    std::vector<std::uint64_t> preds(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) preds[static_cast<std::size_t>(v) - 1] = combined.column(v);
    LinearExtension order;
    order.reserve(static_cast<std::size_t>(n));
    std::uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int chosen = 0;
        for (int v = 1; v <= n; ++v) {
            if ((placed >> (v - 1)) & 1ULL) continue;
            if ((preds[static_cast<std::size_t>(v) - 1] & ~placed) == 0) {
                chosen = v;
                break;
            }
        }
        if (chosen == 0) return std::nullopt;
        order.push_back(chosen);
        placed |= 1ULL << (chosen - 1);
    }
    return order;
}

/// Every topological order of R union Z, by backtracking, in lexicographic
/// order of the label sequences. Exhaustive-check machinery for small n.
inline std::vector<LinearExtension> all_preorder_linear_extensions(const BinaryRelation& r) {
    const int n = r.size();
    const BinaryRelation combined = unite(r, z_relation(r));
    std::vector<std::uint64_t> preds(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) preds[static_cast<std::size_t>(v) - 1] = combined.column(v);
    std::vector<LinearExtension> out;
    LinearExtension cur;
    std::uint64_t placed = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if ((placed >> (v - 1)) & 1ULL) continue;
            if ((preds[static_cast<std::size_t>(v) - 1] & ~placed) != 0) continue;
            placed |= 1ULL << (v - 1);
            cur.push_back(v);
            self(self);
            cur.pop_back();
            placed &= ~(1ULL << (v - 1));
        }
    };
    rec(rec);
    return out;
}

/// Series parallel interval order: a strict order with no induced 2+2 and no
/// induced fence of order four. Construction validates both exclusions and
/// records whether the labels already follow the preorder linear extension.
class Spio {
public:
    explicit Spio(BinaryRelation relation) : rel_(std::move(relation)) {
        if (!is_strict_order(rel_))
            throw std::invalid_argument("Spio: relation is not a strict order");
        if (contains_pattern(rel_, ForbiddenPattern::two_plus_two))
            throw std::invalid_argument("Spio: contains an induced 2+2");
        if (contains_pattern(rel_, ForbiddenPattern::fence_four))
            throw std::invalid_argument("Spio: contains an induced fence of order four");
        const auto ext = try_preorder_linear_extension(rel_);
        if (!ext)
            throw std::logic_error("Spio: no preorder linear extension exists");
        canonical_ = true;
        for (int i = 0; i < size(); ++i)
            if ((*ext)[static_cast<std::size_t>(i)] != i + 1) {
                canonical_ = false;
                break;
            }
    }

    const BinaryRelation& relation() const { return rel_; }
    int size() const { return rel_.size(); }

    /// True when label order and preorder linear extension coincide.
    bool is_canonical() const { return canonical_; }

    bool operator==(const Spio& other) const { return rel_ == other.rel_; }

private:
    BinaryRelation rel_;
    bool canonical_ = false;
};

inline BinaryRelation z_relation(const Spio& a) {
    BinaryRelation z = z_relation(a.relation());
    assert(z == z_relation_by_witness(a.relation()));
    return z;
}

inline LinearExtension preorder_linear_extension(const Spio& a) {
    const auto ext = try_preorder_linear_extension(a.relation());
    if (!ext)
        throw std::logic_error("preorder_linear_extension: the relation admits no preorder linear extension");
    return *ext;
}

inline std::vector<LinearExtension> all_preorder_linear_extensions(const Spio& a) {
    return all_preorder_linear_extensions(a.relation());
}

/// Rename labels so that position i of the extension becomes label i.
inline BinaryRelation relabelled(const BinaryRelation& r, const LinearExtension& order) {
    if (static_cast<int>(order.size()) != r.size())
        throw std::invalid_argument("relabelled: extension length differs from support");
    BinaryRelation out(r.size());
    for (int i = 1; i <= r.size(); ++i)
        for (int j = 1; j <= r.size(); ++j)
            if (i != j && r.contains(order[static_cast<std::size_t>(i) - 1],
                                     order[static_cast<std::size_t>(j) - 1]))
                out.add(i, j);
    return out;
}

inline Spio relabel_by_preorder(const Spio& a) {
    if (a.is_canonical()) return a;
    Spio out{relabelled(a.relation(), preorder_linear_extension(a))};
    if (!out.is_canonical())
        throw std::logic_error("relabel_by_preorder: relabelling did not reach a fixed point");
    return out;
}

/// Order the non-root nodes of a planar tree: x R y when no directed path
/// joins x and y and x lies to the left of y. Non-root node k+1 becomes label
/// k, so preorder position is preserved.
inline Spio tree_to_spio(const PlanarTree& t) {
    const int n = t.node_count() - 1;
    BinaryRelation rel(n);
    for (int a = 1; a <= n; ++a) {
        const int node = a + 1;
        const int subtree_end = node + t.subtree_size(node) - 1;
        for (int b = a + 1; b <= n; ++b)
            if (b + 1 > subtree_end) rel.add(a, b);
    }
    return Spio(std::move(rel));
}

/// Inverse of tree_to_spio on canonically labelled inputs. Tree ancestors of
/// a node are exactly the smaller labels incomparable with it, so the parent
/// of node k+1 is the nearest such label (the root when there is none). The
/// construction is validated by a full round trip.
inline PlanarTree spio_to_tree(const Spio& a) {
    if (!a.is_canonical())
        throw std::invalid_argument("spio_to_tree: input must carry its preorder labelling");
    const int n = a.size();
    std::vector<int> parents{0};
    parents.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        int parent = 1;
        for (int j = k - 1; j >= 1; --j)
            if (!a.relation().contains(j, k) && !a.relation().contains(k, j)) {
                parent = j + 1;
                break;
            }
        parents.push_back(parent);
    }
    PlanarTree t{std::move(parents)};
    if (!(tree_to_spio(t) == a)) throw std::logic_error("spio_to_tree: round trip failed");
    return t;
}

/// All series parallel interval orders on n elements in canonical labelling,
/// obtained by mapping every planar tree with n+1 nodes through
/// tree_to_spio. Injectivity, canonicality and the Catalan count are
/// enforced on the way out.
inline std::vector<Spio> enumerate_spios(int n) {
    if (n < 0 || n > 8) throw std::out_of_range("enumerate_spios: supported for 0 <= n <= 8");
    std::vector<Spio> out;
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const PlanarTree& t : enumerate_trees(n + 1)) {
        Spio s = tree_to_spio(t);
        if (!s.is_canonical())
            throw std::logic_error("enumerate_spios: tree image is not canonically labelled");
        if (!seen.insert(s.relation().pairs()).second)
            throw std::logic_error("enumerate_spios: tree map is not injective");
        out.push_back(std::move(s));
    }
    if (static_cast<std::int64_t>(out.size()) != catalan_number(n))
        throw std::logic_error("enumerate_spios: count is not Catalan");
    return out;
}

}  // namespace catlat
