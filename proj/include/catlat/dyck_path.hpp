#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catlat/tree.hpp"

namespace catlat {

/// Balanced sequence of U/D steps whose every prefix has at least as many U
/// as D steps.
class DyckPath {
public:
    DyckPath() = default;

    explicit DyckPath(std::string steps) : steps_(std::move(steps)) {
        int h = 0;
        for (char c : steps_) {
            if (c == 'U')
                ++h;
            else if (c == 'D')
                --h;
            else
                throw std::invalid_argument("DyckPath: steps must be 'U' or 'D'");
            if (h < 0) throw std::invalid_argument("DyckPath: a prefix drops below zero");
        }
        if (h != 0) throw std::invalid_argument("DyckPath: unbalanced steps");
    }

    int length() const { return static_cast<int>(steps_.size()); }
    int semilength() const { return length() / 2; }
    const std::string& steps() const { return steps_; }

    /// Height profile: length()+1 values beginning and ending at 0.
    std::vector<int> heights() const {
        std::vector<int> out{0};
        out.reserve(steps_.size() + 1);
        for (char c : steps_) out.push_back(out.back() + (c == 'U' ? 1 : -1));
        return out;
    }

    bool operator==(const DyckPath&) const = default;

private:
    std::string steps_;
};

/// p <= q in the Dyck (Stanley) order: p lies weakly below q.
inline bool dyck_dominates(const DyckPath& p, const DyckPath& q) {
    if (p.length() != q.length()) throw std::invalid_argument("dyck_dominates: lengths differ");
    const std::vector<int> hp = p.heights();
    const std::vector<int> hq = q.heights();
    for (std::size_t i = 0; i < hp.size(); ++i)
        if (hp[i] > hq[i]) return false;
    return true;
}

/// Preorder traversal of the tree, writing U when descending an edge and D
/// when climbing back; 2(m-1) steps for m nodes.
inline DyckPath tree_to_dyck(const PlanarTree& t) {
    std::string steps;
    steps.reserve(2 * static_cast<std::size_t>(t.node_count() - 1));
    auto walk = [&](auto&& self, int v) -> void {
        for (int c : t.children(v)) {
            steps.push_back('U');
            self(self, c);
            steps.push_back('D');
        }
    };
    walk(walk, 1);
    return DyckPath(std::move(steps));
}

inline PlanarTree dyck_to_tree(const DyckPath& p) {
    std::string enc = p.steps();
    for (char& c : enc) c = (c == 'U') ? '(' : ')';
    return PlanarTree::from_encoding(enc);
}

/// All Dyck paths of length 2n, sorted by their step strings.
inline std::vector<DyckPath> enumerate_dyck_paths(int n) {
    if (n < 0 || n > 8) throw std::out_of_range("enumerate_dyck_paths: supported for 0 <= n <= 8");
    std::vector<std::string> words;
    std::string cur;
    detail::gen_balanced(n, 0, cur, words);
    for (std::string& w : words)
        for (char& c : w) c = (c == '(') ? 'U' : 'D';
    std::sort(words.begin(), words.end());
    std::vector<DyckPath> out;
    out.reserve(words.size());
    for (std::string& w : words) out.push_back(DyckPath(std::move(w)));
    return out;
}

}  // namespace catlat
