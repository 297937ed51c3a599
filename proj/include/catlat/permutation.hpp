#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "catlat/spio.hpp"

namespace catlat {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : vals_(std::move(one_line)) {
        const int n = size();
        pos_.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            const int v = vals_[static_cast<std::size_t>(i)];
            if (v < 1 || v > n || pos_[static_cast<std::size_t>(v) - 1] != 0)
                throw std::invalid_argument("Permutation: values are not a bijection on {1..n}");
            pos_[static_cast<std::size_t>(v) - 1] = i + 1;
        }
    }

    int size() const { return static_cast<int>(vals_.size()); }

    int value_at(int pos) const {
        check_range(pos);
        return vals_[static_cast<std::size_t>(pos) - 1];
    }

    int position_of(int v) const {
        check_range(v);
        return pos_[static_cast<std::size_t>(v) - 1];
    }

    const std::vector<int>& values() const { return vals_; }

    /// Contiguous digits up to n = 9 (e.g. "2146753"), comma-separated beyond.
    std::string to_string() const {
        std::string out;
        if (size() <= 9) {
            for (int v : vals_) out.push_back(static_cast<char>('0' + v));
        } else {
            for (std::size_t i = 0; i < vals_.size(); ++i) {
                if (i) out.push_back(',');
                out += std::to_string(vals_[i]);
            }
        }
        return out;
    }

    static Permutation parse(const std::string& text) {
        std::vector<int> vals;
        if (text.empty()) return Permutation{};
        if (text.find(',') != std::string::npos) {
            std::size_t start = 0;
            while (start <= text.size()) {
                const std::size_t comma = text.find(',', start);
                const std::string tok = text.substr(start, comma - start);
                if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("Permutation: bad comma-separated entry '" + tok + "'");
                vals.push_back(std::stoi(tok));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else {
            for (char c : text) {
                if (c < '1' || c > '9')
                    throw std::invalid_argument("Permutation: digit string may contain only 1-9");
                vals.push_back(c - '0');
            }
        }
        return Permutation{std::move(vals)};
    }

    bool operator==(const Permutation&) const = default;

private:
    void check_range(int v) const {
        if (v < 1 || v > size()) throw std::out_of_range("Permutation: index out of range");
    }

    std::vector<int> vals_;
    std::vector<int> pos_;
};

/// No indices i < j < k with a_j < a_k < a_i.
inline bool avoids_312(const Permutation& p) {
    const auto& a = p.values();
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (a[static_cast<std::size_t>(j)] < a[static_cast<std::size_t>(k)] &&
                    a[static_cast<std::size_t>(k)] < a[static_cast<std::size_t>(i)])
                    return false;
    return true;
}

/// Inversions as value pairs (a_i, a_j) with i < j and a_i > a_j, sorted.
inline std::vector<std::pair<int, int>> inversions(const Permutation& p) {
    std::vector<std::pair<int, int>> out;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.value_at(i) > p.value_at(j)) out.emplace_back(p.value_at(i), p.value_at(j));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t inversion_count(const Permutation& p) {
    std::size_t c = 0;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.value_at(i) > p.value_at(j)) ++c;
    return c;
}

/// Weak Bruhat order: the inversion set of p1 is contained in that of p2.
inline bool leq_weak_bruhat(const Permutation& p1, const Permutation& p2) {
    if (p1.size() != p2.size()) throw std::invalid_argument("leq_weak_bruhat: sizes differ");
    const int n = p1.size();
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (p1.position_of(y) < p1.position_of(x) && p2.position_of(y) > p2.position_of(x))
                return false;
    return true;
}

/// All permutations obtained by swapping one inverted pair a_i > a_j, i < j.
inline std::vector<Permutation> reductions_of(const Permutation& p) {
    std::vector<Permutation> out;
    const int n = p.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (p.value_at(i) > p.value_at(j)) {
                std::vector<int> v = p.values();
                std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(j) - 1]);
                out.push_back(Permutation{std::move(v)});
            }
    return out;
}

/// Reductions restricted to adjacent positions.
inline std::vector<Permutation> simple_reductions_of(const Permutation& p) {
    std::vector<Permutation> out;
    const int n = p.size();
    for (int i = 1; i < n; ++i)
        if (p.value_at(i) > p.value_at(i + 1)) {
            std::vector<int> v = p.values();
            std::swap(v[static_cast<std::size_t>(i) - 1], v[static_cast<std::size_t>(i)]);
            out.push_back(Permutation{std::move(v)});
        }
    return out;
}

/// Is `smaller` produced from `larger` by exactly one reduction?
inline bool is_reduction_of(const Permutation& smaller, const Permutation& larger) {
    if (smaller.size() != larger.size())
        throw std::invalid_argument("is_reduction_of: sizes differ");
    std::vector<int> diff;
    for (int i = 1; i <= larger.size(); ++i)
        if (smaller.value_at(i) != larger.value_at(i)) diff.push_back(i);
    if (diff.size() != 2) return false;
    const int i = diff[0], j = diff[1];
    return larger.value_at(i) > larger.value_at(j) && smaller.value_at(i) == larger.value_at(j) &&
           smaller.value_at(j) == larger.value_at(i);
}

namespace detail {

/// 4 bits per position; enough for n <= 15.
inline std::uint64_t perm_key(const Permutation& p) {
    std::uint64_t k = 0;
    for (int i = 0; i < p.size(); ++i)
        k |= static_cast<std::uint64_t>(p.values()[static_cast<std::size_t>(i)] - 1) << (4 * i);
    return k;
}

inline bool bruhat_reachable(const Permutation& lo, const Permutation& hi, bool simple_only) {
    if (lo.size() != hi.size()) throw std::invalid_argument("bruhat_reachable: sizes differ");
    if (lo.size() > 10) throw std::out_of_range("bruhat_reachable: supported for n <= 10");
    if (lo == hi) return true;
    if (inversion_count(lo) >= inversion_count(hi)) return false;
    const std::uint64_t target = perm_key(lo);
    std::unordered_set<std::uint64_t> visited{perm_key(hi)};
    std::vector<Permutation> frontier{hi};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& p : frontier) {
            const auto steps = simple_only ? simple_reductions_of(p) : reductions_of(p);
            for (const Permutation& q : steps) {
                const std::uint64_t key = perm_key(q);
                if (key == target) return true;
                if (visited.insert(key).second) next.push_back(q);
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace detail

/// Reachability of `lo` from `hi` by reductions, breadth-first with early
/// exit. The ground-truth route for the strong Bruhat order; intermediate
/// permutations range over the whole symmetric group.
inline bool strong_bruhat_reachable(const Permutation& lo, const Permutation& hi) {
    return detail::bruhat_reachable(lo, hi, false);
}

/// Reachability by simple reductions only; cross-check route for the weak
/// Bruhat order.
inline bool weak_bruhat_reachable(const Permutation& lo, const Permutation& hi) {
    return detail::bruhat_reachable(lo, hi, true);
}

inline bool leq_strong_bruhat(const Permutation& p1, const Permutation& p2) {
    return strong_bruhat_reachable(p1, p2);
}

/// Prefix maxima of the one-line notation.
inline std::vector<int> max_vector(const Permutation& p) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    int m = 0;
    for (int v : p.values()) {
        m = std::max(m, v);
        out.push_back(m);
    }
    return out;
}

/// Prefix-maximum characterization of the strong Bruhat order; valid on
/// 312-avoiding permutations only, which is enforced.
inline bool leq_strong_bruhat_max(const Permutation& p1, const Permutation& p2) {
    if (p1.size() != p2.size()) throw std::invalid_argument("leq_strong_bruhat_max: sizes differ");
    if (!avoids_312(p1) || !avoids_312(p2))
        throw std::invalid_argument("leq_strong_bruhat_max: inputs must avoid 312");
    const std::vector<int> m1 = max_vector(p1);
    const std::vector<int> m2 = max_vector(p2);
    for (std::size_t i = 0; i < m1.size(); ++i)
        if (m1[i] > m2[i]) return false;
    return true;
}

/// All m with m = n or m placed before m+1.
inline std::vector<int> consecutive_noninversions(const Permutation& p) {
    std::vector<int> out;
    const int n = p.size();
    for (int m = 1; m < n; ++m)
        if (p.position_of(m) < p.position_of(m + 1)) out.push_back(m);
    if (n >= 1) out.push_back(n);
    return out;
}

/// f_pi(v): values greater than v placed after v.
inline std::vector<int> filter_set(const Permutation& p, int v) {
    std::vector<int> out;
    const int pv = p.position_of(v);
    for (int w = v + 1; w <= p.size(); ++w)
        if (p.position_of(w) > pv) out.push_back(w);
    return out;
}

/// i_pi(v): values smaller than v placed before v.
inline std::vector<int> ideal_set(const Permutation& p, int v) {
    std::vector<int> out;
    const int pv = p.position_of(v);
    for (int w = 1; w < v; ++w)
        if (p.position_of(w) < pv) out.push_back(w);
    return out;
}

/// Labels sorted by strictly shrinking principal filters, equal filters
/// broken toward the larger label; the image always avoids 312. The filters
/// of a canonical series parallel interval order form a chain under
/// inclusion, which is re-checked on every call.
inline Permutation spio_to_perm(const Spio& a) {
    if (!a.is_canonical())
        throw std::invalid_argument("spio_to_perm: input must carry its preorder labelling");
    const int n = a.size();
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::sort(labels.begin(), labels.end(), [&](int k, int j) {
        const int ck = std::popcount(a.relation().row(k));
        const int cj = std::popcount(a.relation().row(j));
        if (ck != cj) return ck > cj;
        return k > j;
    });
    for (int i = 0; i + 1 < n; ++i) {
        const std::uint64_t big = a.relation().row(labels[static_cast<std::size_t>(i)]);
        const std::uint64_t small = a.relation().row(labels[static_cast<std::size_t>(i) + 1]);
        if ((small & ~big) != 0)
            throw std::logic_error("spio_to_perm: principal filters are not nested");
    }
    Permutation out{std::move(labels)};
    if (!avoids_312(out)) throw std::logic_error("spio_to_perm: image contains a 312 pattern");
    return out;
}

/// x R y iff y > x and y follows x in the permutation; defined on 312
/// avoiders, lands on canonical series parallel interval orders, and the
/// round trip through spio_to_perm is asserted.
inline Spio perm_to_spio(const Permutation& p) {
    if (!avoids_312(p)) throw std::invalid_argument("perm_to_spio: permutation contains a 312 pattern");
    const int n = p.size();
    BinaryRelation rel(n);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if (p.position_of(x) < p.position_of(y)) rel.add(x, y);
    Spio out{std::move(rel)};
    if (!out.is_canonical())
        throw std::logic_error("perm_to_spio: image is not canonically labelled");
    if (!(spio_to_perm(out) == p)) throw std::logic_error("perm_to_spio: round trip failed");
    return out;
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    if (n < 0 || n > 8) throw std::out_of_range("all_permutations: supported for 0 <= n <= 8");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// All 312-avoiding permutations of length n, lexicographically sorted; the
/// Catalan count is enforced.
inline std::vector<Permutation> enumerate_av312(int n) {
    if (n < 0 || n > 8) throw std::out_of_range("enumerate_av312: supported for 0 <= n <= 8");
    std::vector<Permutation> out;
    for (Permutation& p : all_permutations(n))
        if (avoids_312(p)) out.push_back(std::move(p));
    if (static_cast<std::int64_t>(out.size()) != catalan_number(n))
        throw std::logic_error("enumerate_av312: count is not Catalan");
    return out;
}

/// Immutable reachability table for a Bruhat order over the whole symmetric
/// group, built by closing the one-step reduction relation in increasing
/// order of inversion count. Shareable across threads once built.
class BruhatTable {
public:
    enum class Kind { weak, strong };

    BruhatTable(int n, Kind kind) : n_(n), kind_(kind) {
        if (n < 0 || n > 7) throw std::out_of_range("BruhatTable: supported for 0 <= n <= 7");
        perms_ = all_permutations(n);
        const int count = static_cast<int>(perms_.size());
        words_ = (count + 63) / 64;
        index_.reserve(perms_.size() * 2);
        for (int i = 0; i < count; ++i) index_.emplace(detail::perm_key(perms_[static_cast<std::size_t>(i)]), i);
        std::vector<int> order(static_cast<std::size_t>(count));
        std::iota(order.begin(), order.end(), 0);
        std::vector<std::size_t> inv(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) inv[static_cast<std::size_t>(i)] = inversion_count(perms_[static_cast<std::size_t>(i)]);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return inv[static_cast<std::size_t>(a)] < inv[static_cast<std::size_t>(b)]; });
        reach_.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(words_), 0);
        for (int idx : order) {
            std::uint64_t* row = &reach_[static_cast<std::size_t>(idx) * static_cast<std::size_t>(words_)];
            row[idx / 64] |= 1ULL << (idx % 64);
            const auto smaller = kind_ == Kind::strong ? reductions_of(perms_[static_cast<std::size_t>(idx)])
                                                       : simple_reductions_of(perms_[static_cast<std::size_t>(idx)]);
            for (const Permutation& q : smaller) {
                const int qi = index_.at(detail::perm_key(q));
                const std::uint64_t* qrow = &reach_[static_cast<std::size_t>(qi) * static_cast<std::size_t>(words_)];
                for (int w = 0; w < words_; ++w) row[w] |= qrow[w];
            }
        }
    }

    int n() const { return n_; }
    Kind kind() const { return kind_; }
    const std::vector<Permutation>& elements() const { return perms_; }

    bool leq(const Permutation& p1, const Permutation& p2) const {
        if (p1.size() != n_ || p2.size() != n_)
            throw std::invalid_argument("BruhatTable: size mismatch");
        const int i = index_.at(detail::perm_key(p1));
        const int j = index_.at(detail::perm_key(p2));
        return (reach_[static_cast<std::size_t>(j) * static_cast<std::size_t>(words_) + static_cast<std::size_t>(i / 64)] >>
                (i % 64)) &
               1ULL;
    }

    /// Cover pairs (i, j): elements()[i] is covered by elements()[j].
    std::vector<std::pair<int, int>> covers() const {
        const int count = static_cast<int>(perms_.size());
        std::vector<std::pair<int, int>> out;
        for (int j = 0; j < count; ++j) {
            const std::uint64_t* row = &reach_[static_cast<std::size_t>(j) * static_cast<std::size_t>(words_)];
            for (int i = 0; i < count; ++i) {
                if (i == j || !((row[i / 64] >> (i % 64)) & 1ULL)) continue;
                bool covered = true;
                for (int k = 0; k < count && covered; ++k) {
                    if (k == i || k == j) continue;
                    if (!((row[k / 64] >> (k % 64)) & 1ULL)) continue;
                    const std::uint64_t* krow =
                        &reach_[static_cast<std::size_t>(k) * static_cast<std::size_t>(words_)];
                    if ((krow[i / 64] >> (i % 64)) & 1ULL) covered = false;
                }
                if (covered) out.emplace_back(i, j);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int n_;
    Kind kind_;
    int words_ = 0;
    std::vector<Permutation> perms_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<std::uint64_t> reach_;
};

}  // namespace catlat
