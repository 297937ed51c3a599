#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catlat {

inline constexpr int max_support = 64;

/// Binary relation on the labels {1..n}, n <= 64, stored as one 64-bit row
/// mask per element. Values are treated as immutable once built; every
/// operation below returns a fresh relation instead of mutating its inputs.
class BinaryRelation {
public:
    BinaryRelation() = default;

    explicit BinaryRelation(int n)
        : n_(checked_size(n)), rows_(static_cast<std::size_t>(n_), 0) {}

    BinaryRelation(int n, std::initializer_list<std::pair<int, int>> pairs) : BinaryRelation(n) {
        for (const auto& [x, y] : pairs) add(x, y);
    }

    BinaryRelation(int n, const std::vector<std::pair<int, int>>& pairs) : BinaryRelation(n) {
        for (const auto& [x, y] : pairs) add(x, y);
    }

    int size() const { return n_; }

    std::uint64_t support_mask() const { return n_ == 64 ? ~0ULL : (1ULL << n_) - 1ULL; }

    bool contains(int x, int y) const {
        check_label(x);
        check_label(y);
        return (rows_[static_cast<std::size_t>(x - 1)] >> (y - 1)) & 1ULL;
    }

    void add(int x, int y) {
        check_label(x);
        check_label(y);
        rows_[static_cast<std::size_t>(x - 1)] |= 1ULL << (y - 1);
    }

    void remove(int x, int y) {
        check_label(x);
        check_label(y);
        rows_[static_cast<std::size_t>(x - 1)] &= ~(1ULL << (y - 1));
    }

    /// Out-neighbour mask of x: bit (y-1) set iff x R y.
    std::uint64_t row(int x) const {
        check_label(x);
        return rows_[static_cast<std::size_t>(x - 1)];
    }

    void set_row(int x, std::uint64_t bits) {
        check_label(x);
        rows_[static_cast<std::size_t>(x - 1)] = bits & support_mask();
    }

    /// In-neighbour mask of y: bit (x-1) set iff x R y.
    std::uint64_t column(int y) const {
        check_label(y);
        std::uint64_t c = 0;
        for (int x = 1; x <= n_; ++x)
            c |= ((rows_[static_cast<std::size_t>(x - 1)] >> (y - 1)) & 1ULL) << (x - 1);
        return c;
    }

    std::size_t pair_count() const {
        std::size_t c = 0;
        for (std::uint64_t r : rows_) c += static_cast<std::size_t>(std::popcount(r));
        return c;
    }

    /// All pairs in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(pair_count());
        for (int x = 1; x <= n_; ++x) {
            std::uint64_t r = rows_[static_cast<std::size_t>(x - 1)];
            while (r) {
                out.emplace_back(x, std::countr_zero(r) + 1);
                r &= r - 1;
            }
        }
        return out;
    }

    bool operator==(const BinaryRelation&) const = default;

private:
    static int checked_size(int n) {
        if (n < 0 || n > max_support)
            throw std::invalid_argument("BinaryRelation: support size must be in [0, 64]");
        return n;
    }

    void check_label(int x) const {
        if (x < 1 || x > n_) throw std::out_of_range("BinaryRelation: label out of range");
    }

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

namespace detail {

template <typename Fn>
void for_each_label(std::uint64_t mask, Fn&& fn) {
    while (mask) {
        fn(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
}

inline std::vector<int> labels_of(std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    for_each_label(mask, [&](int v) { out.push_back(v); });
    return out;
}

inline void require_same_size(const BinaryRelation& a, const BinaryRelation& b, const char* what) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": mismatched supports");
}

}  // namespace detail

/// x (a o b) y iff there is a z with x a z and z b y.
inline BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b) {
    detail::require_same_size(a, b, "compose");
    BinaryRelation out(a.size());
    for (int x = 1; x <= a.size(); ++x) {
        std::uint64_t acc = 0;
        detail::for_each_label(a.row(x), [&](int z) { acc |= b.row(z); });
        out.set_row(x, acc);
    }
    return out;
}

inline BinaryRelation inverse(const BinaryRelation& a) {
    BinaryRelation out(a.size());
    for (int y = 1; y <= a.size(); ++y) out.set_row(y, a.column(y));
    return out;
}

inline BinaryRelation unite(const BinaryRelation& a, const BinaryRelation& b) {
    detail::require_same_size(a, b, "unite");
    BinaryRelation out(a.size());
    for (int x = 1; x <= a.size(); ++x) out.set_row(x, a.row(x) | b.row(x));
    return out;
}

inline BinaryRelation intersect(const BinaryRelation& a, const BinaryRelation& b) {
    detail::require_same_size(a, b, "intersect");
    BinaryRelation out(a.size());
    for (int x = 1; x <= a.size(); ++x) out.set_row(x, a.row(x) & b.row(x));
    return out;
}

inline BinaryRelation difference(const BinaryRelation& a, const BinaryRelation& b) {
    detail::require_same_size(a, b, "difference");
    BinaryRelation out(a.size());
    for (int x = 1; x <= a.size(); ++x) out.set_row(x, a.row(x) & ~b.row(x));
    return out;
}

inline BinaryRelation symmetric_closure(const BinaryRelation& a) { return unite(a, inverse(a)); }

/// Complement over the full square {1..n} x {1..n}, diagonal included.
inline BinaryRelation complement(const BinaryRelation& a) {
    BinaryRelation out(a.size());
    for (int x = 1; x <= a.size(); ++x) out.set_row(x, ~a.row(x));
    return out;
}

inline bool is_irreflexive(const BinaryRelation& a) {
    for (int x = 1; x <= a.size(); ++x)
        if (a.contains(x, x)) return false;
    return true;
}

inline bool is_transitive(const BinaryRelation& a) {
    for (int x = 1; x <= a.size(); ++x) {
        bool ok = true;
        detail::for_each_label(a.row(x), [&](int y) {
            if (a.row(y) & ~a.row(x)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

inline bool is_strict_order(const BinaryRelation& a) {
    return is_irreflexive(a) && is_transitive(a);
}

inline BinaryRelation transitive_closure(const BinaryRelation& a) {
    BinaryRelation out = a;
    for (int k = 1; k <= a.size(); ++k)
        for (int x = 1; x <= a.size(); ++x)
            if (out.contains(x, k)) out.set_row(x, out.row(x) | out.row(k));
    return out;
}

/// Principal filter R(k) = {y : k R y}. Irreflexivity keeps the generator
/// itself out of the set. The relation must be a strict order.
inline std::vector<int> principal_filter(const BinaryRelation& a, int k) {
    return detail::labels_of(a.row(k));
}

/// Principal ideal R^{-1}(k) = {y : y R k}, generator excluded.
inline std::vector<int> principal_ideal(const BinaryRelation& a, int k) {
    return detail::labels_of(a.column(k));
}

/// The two subposets whose absence characterises series parallel interval
/// orders: 2+2 is the disjoint union of two 2-chains, the fence of order four
/// is the zigzag x1 < x2 > x3 < x4.
enum class ForbiddenPattern { two_plus_two, fence_four };

inline const BinaryRelation& pattern_relation(ForbiddenPattern p) {
    static const BinaryRelation two_plus_two{4, {{1, 2}, {3, 4}}};
    static const BinaryRelation fence_four{4, {{1, 2}, {3, 2}, {3, 4}}};
    return p == ForbiddenPattern::two_plus_two ? two_plus_two : fence_four;
}

/// Subrelation induced on the given labels, relabelled 1..k in list order.
inline BinaryRelation induced_relation(const BinaryRelation& a, const std::vector<int>& labels) {
    BinaryRelation out(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (i != j && a.contains(labels[i], labels[j]))
                out.add(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

/// Order isomorphism test by backtracking with degree-signature pruning.
/// Intended for the small supports this library works with (n <= 8 on every
/// verification path).
inline bool are_isomorphic(const BinaryRelation& a, const BinaryRelation& b) {
    if (!is_strict_order(a) || !is_strict_order(b))
        throw std::invalid_argument("are_isomorphic: inputs must be strict orders");
    const int n = a.size();
    if (n != b.size() || a.pair_count() != b.pair_count()) return false;
    std::vector<std::pair<int, int>> da(n), db(n);
    for (int x = 1; x <= n; ++x) {
        da[x - 1] = {std::popcount(a.row(x)), std::popcount(a.column(x))};
        db[x - 1] = {std::popcount(b.row(x)), std::popcount(b.column(x))};
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t used = 0;
    auto rec = [&](auto&& self, int x) -> bool {
        if (x > n) return true;
        for (int y = 1; y <= n; ++y) {
            if ((used >> (y - 1)) & 1ULL) continue;
            if (da[x - 1] != db[y - 1]) continue;
            bool ok = true;
            for (int u = 1; u < x && ok; ++u) {
                int v = image[u];
                if (a.contains(u, x) != b.contains(v, y) || a.contains(x, u) != b.contains(y, v))
                    ok = false;
            }
            if (!ok) continue;
            image[x] = y;
            used |= 1ULL << (y - 1);
            if (self(self, x + 1)) return true;
            used &= ~(1ULL << (y - 1));
        }
        return false;
    };
    return rec(rec, 1);
}

/// Does some 4-element subset of the support induce a subposet isomorphic to
/// the pattern? The input must be a strict order.
inline bool contains_pattern(const BinaryRelation& a, ForbiddenPattern p) {
    if (!is_strict_order(a))
        throw std::invalid_argument("contains_pattern: relation is not a strict order");
    const int n = a.size();
    if (n < 4) return false;
    const BinaryRelation& pat = pattern_relation(p);
    for (int i = 1; i <= n - 3; ++i)
        for (int j = i + 1; j <= n - 2; ++j)
            for (int k = j + 1; k <= n - 1; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (are_isomorphic(induced_relation(a, {i, j, k, l}), pat)) return true;
    return false;
}

/// Exchangeability of x and y: they are incomparable and agree on their
/// relations to every other element, so swapping them is an order
/// automorphism. The relation is expected to be a strict order.
inline bool are_order_equivalent(const BinaryRelation& a, int x, int y) {
    if (x == y) {
        a.row(x);  // label check
        return true;
    }
    if (a.contains(x, y) || a.contains(y, x)) return false;
    const std::uint64_t keep = ~((1ULL << (x - 1)) | (1ULL << (y - 1)));
    return (a.row(x) & keep) == (a.row(y) & keep) &&
           (a.column(x) & keep) == (a.column(y) & keep);
}

inline BinaryRelation swap_labels(const BinaryRelation& a, int x, int y) {
    a.row(x);
    a.row(y);
    auto m = [&](int v) { return v == x ? y : (v == y ? x : v); };
    BinaryRelation out(a.size());
    for (const auto& [p, q] : a.pairs()) out.add(m(p), m(q));
    return out;
}

/// Every strict order on {1..n}, generated by choosing one of
/// {incomparable, x<y, y<x} per unordered pair and filtering for
/// transitivity. Brute-force oracle territory, so n is capped at 5.
inline std::vector<BinaryRelation> enumerate_strict_orders(int n) {
    if (n < 0 || n > 5)
        throw std::out_of_range("enumerate_strict_orders: supported for 0 <= n <= 5");
    std::vector<std::pair<int, int>> slots;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) slots.emplace_back(x, y);
    std::vector<BinaryRelation> out;
    BinaryRelation cur(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == slots.size()) {
            if (is_strict_order(cur)) out.push_back(cur);
            return;
        }
        const auto [x, y] = slots[i];
        self(self, i + 1);
        cur.add(x, y);
        self(self, i + 1);
        cur.remove(x, y);
        cur.add(y, x);
        self(self, i + 1);
        cur.remove(y, x);
    };
    rec(rec, 0);
    return out;
}

}  // namespace catlat
