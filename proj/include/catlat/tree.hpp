#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catlat/catalan.hpp"

namespace catlat {

/// Rooted planar tree with nodes labelled 1..m in preorder: the root is 1,
/// each node's label precedes every label in its subtree, and children sit in
/// consecutive label blocks from left to right. The parent vector pins the
/// shape; the labels carry the planar embedding.
class PlanarTree {
public:
    /// parents[k-1] is the parent of node k; the root's entry is 0.
    explicit PlanarTree(std::vector<int> parents) : parents_(std::move(parents)) {
        const int m = node_count();
        if (m < 1) throw std::invalid_argument("PlanarTree: at least one node required");
        if (parents_[0] != 0) throw std::invalid_argument("PlanarTree: node 1 must be the root");
        children_.assign(static_cast<std::size_t>(m) + 1, {});
        // Replay the preorder walk; each new node must attach to the current
        // right spine, otherwise the labelling is not a preorder.
        std::vector<int> spine{1};
        for (int k = 2; k <= m; ++k) {
            const int p = parents_[static_cast<std::size_t>(k) - 1];
            if (p < 1 || p >= k) throw std::invalid_argument("PlanarTree: labels are not a preorder");
            while (!spine.empty() && spine.back() != p) spine.pop_back();
            if (spine.empty()) throw std::invalid_argument("PlanarTree: labels are not a preorder");
            children_[static_cast<std::size_t>(p)].push_back(k);
            spine.push_back(k);
        }
        sizes_.assign(static_cast<std::size_t>(m) + 1, 1);
        for (int k = m; k >= 1; --k)
            for (int c : children_[static_cast<std::size_t>(k)])
                sizes_[static_cast<std::size_t>(k)] += sizes_[static_cast<std::size_t>(c)];
    }

    /// Parse the balanced-parentheses encoding; "" is the single-node tree.
    static PlanarTree from_encoding(const std::string& text) {
        std::vector<int> parents{0};
        std::vector<int> stack{1};
        int next = 2;
        for (char ch : text) {
            if (ch == '(') {
                parents.push_back(stack.back());
                stack.push_back(next++);
            } else if (ch == ')') {
                if (stack.size() <= 1)
                    throw std::invalid_argument("PlanarTree: unbalanced encoding");
                stack.pop_back();
            } else {
                throw std::invalid_argument("PlanarTree: encoding may contain only parentheses");
            }
        }
        if (stack.size() != 1) throw std::invalid_argument("PlanarTree: unbalanced encoding");
        return PlanarTree(std::move(parents));
    }

    /// Children left to right, each rendered as "(" + subtree + ")".
    std::string encoding() const {
        std::string out;
        encode(1, out);
        return out;
    }

    int node_count() const { return static_cast<int>(parents_.size()); }

    int parent(int k) const {
        check_node(k);
        return parents_[static_cast<std::size_t>(k) - 1];
    }

    const std::vector<int>& children(int k) const {
        check_node(k);
        return children_[static_cast<std::size_t>(k)];
    }

    /// Number of nodes in the subtree rooted at k, k included.
    int subtree_size(int k) const {
        check_node(k);
        return sizes_[static_cast<std::size_t>(k)];
    }

    /// h(k): every node on the path from k up to (and including) the root.
    std::vector<int> ancestors(int k) const {
        check_node(k);
        std::vector<int> out;
        for (int v = parents_[static_cast<std::size_t>(k) - 1]; v != 0;
             v = parents_[static_cast<std::size_t>(v) - 1])
            out.push_back(v);
        std::reverse(out.begin(), out.end());
        return out;
    }

    int depth(int k) const {
        check_node(k);
        int d = 0;
        for (int v = parents_[static_cast<std::size_t>(k) - 1]; v != 0;
             v = parents_[static_cast<std::size_t>(v) - 1])
            ++d;
        return d;
    }

    /// u(k): all proper descendants, collected by walking the subtree.
    std::vector<int> descendants(int k) const {
        check_node(k);
        std::vector<int> out;
        collect(k, out);
        return out;
    }

    /// d(k) = u(k) union h(k), sorted ascending.
    std::vector<int> lineage(int k) const {
        std::vector<int> anc = ancestors(k);
        std::vector<int> des = descendants(k);
        anc.insert(anc.end(), des.begin(), des.end());
        std::sort(anc.begin(), anc.end());
        return anc;
    }

    bool operator==(const PlanarTree& other) const { return parents_ == other.parents_; }

private:
    void encode(int v, std::string& out) const {
        for (int c : children_[static_cast<std::size_t>(v)]) {
            out.push_back('(');
            encode(c, out);
            out.push_back(')');
        }
    }

    void collect(int v, std::vector<int>& out) const {
        for (int c : children_[static_cast<std::size_t>(v)]) {
            out.push_back(c);
            collect(c, out);
        }
    }

    void check_node(int k) const {
        if (k < 1 || k > node_count()) throw std::out_of_range("PlanarTree: node out of range");
    }

    std::vector<int> parents_;
    std::vector<std::vector<int>> children_;
    std::vector<int> sizes_;
};

namespace detail {

inline void gen_balanced(int open_left, int close_due, std::string& cur,
                         std::vector<std::string>& out) {
    if (open_left == 0 && close_due == 0) {
        out.push_back(cur);
        return;
    }
    if (open_left > 0) {
        cur.push_back('(');
        gen_balanced(open_left - 1, close_due + 1, cur, out);
        cur.pop_back();
    }
    if (close_due > 0) {
        cur.push_back(')');
        gen_balanced(open_left, close_due - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All planar rooted trees with m nodes, preorder-labelled, in lexicographic
/// order of their encodings.
inline std::vector<PlanarTree> enumerate_trees(int m) {
    if (m < 1 || m > 9) throw std::out_of_range("enumerate_trees: supported for 1 <= m <= 9");
    std::vector<std::string> words;
    std::string cur;
    detail::gen_balanced(m - 1, 0, cur, words);
    std::vector<PlanarTree> out;
    out.reserve(words.size());
    for (const std::string& w : words) out.push_back(PlanarTree::from_encoding(w));
    if (static_cast<std::int64_t>(out.size()) != catalan_number(m - 1))
        throw std::logic_error("enumerate_trees: generated count is not Catalan");
    return out;
}

}  // namespace catlat
