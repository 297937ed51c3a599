#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catlat/dyck_path.hpp"
#include "catlat/permutation.hpp"
#include "catlat/spio.hpp"

namespace catlat {

enum class CatalanOrder { dyck, tamari, weak_bruhat, strong_bruhat };

inline std::string to_string(CatalanOrder o) {
    switch (o) {
        case CatalanOrder::dyck: return "dyck";
        case CatalanOrder::tamari: return "tamari";
        case CatalanOrder::weak_bruhat: return "weak";
        case CatalanOrder::strong_bruhat: return "strong";
    }
    return "";
}

inline std::optional<CatalanOrder> parse_order(const std::string& name) {
    if (name == "dyck") return CatalanOrder::dyck;
    if (name == "tamari") return CatalanOrder::tamari;
    if (name == "weak") return CatalanOrder::weak_bruhat;
    if (name == "strong") return CatalanOrder::strong_bruhat;
    return std::nullopt;
}

namespace detail {

inline void require_comparable_spios(const Spio& a, const Spio& b, const char* what) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(what) + ": sizes differ");
    if (!a.is_canonical() || !b.is_canonical())
        throw std::invalid_argument(std::string(what) +
                                    ": inputs must carry their preorder labelling");
}

}  // namespace detail

/// Dyck order on canonically labelled series parallel interval orders:
/// a <= b iff every principal ideal of a is at least as large as the
/// matching ideal of b (larger ideals sit lower).
inline bool leq_dyck(const Spio& a, const Spio& b) {
    detail::require_comparable_spios(a, b, "leq_dyck");
    for (int k = 1; k <= a.size(); ++k)
        if (std::popcount(a.relation().column(k)) < std::popcount(b.relation().column(k)))
            return false;
    return true;
}

/// Tamari order: a <= b iff every principal filter of a contains the
/// matching filter of b. Filters of canonical inputs are final segments of
/// {1..n}, so the cardinality comparison must give the same answer; both
/// routes are computed and compared.
inline bool leq_tamari(const Spio& a, const Spio& b) {
    detail::require_comparable_spios(a, b, "leq_tamari");
    bool superset = true;
    bool cardinality = true;
    for (int k = 1; k <= a.size(); ++k) {
        const std::uint64_t fa = a.relation().row(k);
        const std::uint64_t fb = b.relation().row(k);
        if ((fb & ~fa) != 0) superset = false;
        if (std::popcount(fa) < std::popcount(fb)) cardinality = false;
    }
    if (superset != cardinality)
        throw std::logic_error("leq_tamari: filter-containment and cardinality routes disagree");
    return superset;
}

/// Dyck order on trees: pointwise comparison of ancestor counts.
inline bool leq_dyck_tree(const PlanarTree& t1, const PlanarTree& t2) {
    if (t1.node_count() != t2.node_count())
        throw std::invalid_argument("leq_dyck_tree: node counts differ");
    for (int k = 1; k <= t1.node_count(); ++k)
        if (t1.depth(k) > t2.depth(k)) return false;
    return true;
}

/// Tamari order on trees: pointwise comparison of descendant counts.
inline bool leq_tamari_tree(const PlanarTree& t1, const PlanarTree& t2) {
    if (t1.node_count() != t2.node_count())
        throw std::invalid_argument("leq_tamari_tree: node counts differ");
    for (int k = 1; k <= t1.node_count(); ++k)
        if (t1.subtree_size(k) > t2.subtree_size(k)) return false;
    return true;
}

/// Descendant-set containment form of the Tamari order.
inline bool leq_tamari_tree_subset(const PlanarTree& t1, const PlanarTree& t2) {
    if (t1.node_count() != t2.node_count())
        throw std::invalid_argument("leq_tamari_tree_subset: node counts differ");
    for (int k = 1; k <= t1.node_count(); ++k) {
        const std::vector<int> u1 = t1.descendants(k);
        const std::vector<int> u2 = t2.descendants(k);
        if (!std::includes(u2.begin(), u2.end(), u1.begin(), u1.end())) return false;
    }
    return true;
}

/// Lineage (ancestors-plus-descendants) containment form of the Tamari order.
inline bool leq_tamari_tree_lineage(const PlanarTree& t1, const PlanarTree& t2) {
    if (t1.node_count() != t2.node_count())
        throw std::invalid_argument("leq_tamari_tree_lineage: node counts differ");
    for (int k = 1; k <= t1.node_count(); ++k) {
        const std::vector<int> d1 = t1.lineage(k);
        const std::vector<int> d2 = t2.lineage(k);
        if (!std::includes(d2.begin(), d2.end(), d1.begin(), d1.end())) return false;
    }
    return true;
}

namespace detail {

/// Dense "below" table over an indexed element list: row j holds the mask of
/// all i with element i <= element j.
struct BelowTable {
    int count = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    const std::uint64_t* row(int j) const {
        return &bits[static_cast<std::size_t>(j) * static_cast<std::size_t>(words)];
    }
    std::uint64_t* row(int j) {
        return &bits[static_cast<std::size_t>(j) * static_cast<std::size_t>(words)];
    }
    bool get(int i, int j) const { return (row(j)[i / 64] >> (i % 64)) & 1ULL; }
    void set(int i, int j) { row(j)[i / 64] |= 1ULL << (i % 64); }

    bool row_subset(int j1, int j2) const {
        const std::uint64_t* a = row(j1);
        const std::uint64_t* b = row(j2);
        for (int w = 0; w < words; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }
};

template <typename Leq>
BelowTable build_below_table(int count, Leq&& leq) {
    BelowTable t;
    t.count = count;
    t.words = (count + 63) / 64;
    t.bits.assign(static_cast<std::size_t>(count) * static_cast<std::size_t>(t.words), 0);
    for (int j = 0; j < count; ++j)
        for (int i = 0; i < count; ++i)
            if (leq(i, j)) t.set(i, j);
    return t;
}

/// Reflexivity, antisymmetry and transitivity of the tabulated relation.
inline bool table_is_partial_order(const BelowTable& t) {
    for (int i = 0; i < t.count; ++i)
        if (!t.get(i, i)) return false;
    for (int j = 0; j < t.count; ++j)
        for (int i = 0; i < t.count; ++i) {
            if (i == j || !t.get(i, j)) continue;
            if (t.get(j, i)) return false;            // antisymmetry
            if (!t.row_subset(i, j)) return false;    // transitivity
        }
    return true;
}

/// Transitive reduction: (i, j) with i covered by j, sorted.
inline std::vector<std::pair<int, int>> table_covers(const BelowTable& t) {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < t.count; ++j)
        for (int i = 0; i < t.count; ++i) {
            if (i == j || !t.get(i, j)) continue;
            bool covered = true;
            for (int k = 0; k < t.count && covered; ++k) {
                if (k == i || k == j) continue;
                if (t.get(k, j) && t.get(i, k)) covered = false;
            }
            if (covered) out.emplace_back(i, j);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Index of the unique maximum of the lower-bound set of a and b, or -1 when
/// none dominates all lower bounds. Uniqueness follows from antisymmetry.
inline int table_meet(const BelowTable& t, int a, int b) {
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(t.words));
    for (int w = 0; w < t.words; ++w) cand[static_cast<std::size_t>(w)] = t.row(a)[w] & t.row(b)[w];
    for (int w = 0; w < t.words; ++w) {
        std::uint64_t m = cand[static_cast<std::size_t>(w)];
        while (m) {
            const int c = w * 64 + std::countr_zero(m);
            m &= m - 1;
            bool dominates = true;
            for (int v = 0; v < t.words && dominates; ++v)
                if (cand[static_cast<std::size_t>(v)] & ~t.row(c)[v]) dominates = false;
            if (dominates) return c;
        }
    }
    return -1;
}

}  // namespace detail

/// Greatest lower bound in the Dyck or Tamari lattice on n elements, found by
/// brute force over all canonical elements. Throws when no unique bound
/// exists, which would falsify the lattice property.
inline Spio lattice_meet(CatalanOrder order, const Spio& a, const Spio& b) {
    if (order != CatalanOrder::dyck && order != CatalanOrder::tamari)
        throw std::invalid_argument("lattice_meet: supported for the dyck and tamari orders");
    detail::require_comparable_spios(a, b, "lattice_meet");
    if (a.size() > 6) throw std::out_of_range("lattice_meet: supported for n <= 6");
    const std::vector<Spio> elems = enumerate_spios(a.size());
    auto leq = order == CatalanOrder::dyck ? leq_dyck : leq_tamari;
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
        if (elems[static_cast<std::size_t>(i)] == a) ia = i;
        if (elems[static_cast<std::size_t>(i)] == b) ib = i;
    }
    if (ia < 0 || ib < 0) throw std::logic_error("lattice_meet: input not found among canonical elements");
    const auto table = detail::build_below_table(
        static_cast<int>(elems.size()), [&](int i, int j) {
            return leq(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
        });
    const int m = detail::table_meet(table, ia, ib);
    if (m < 0) throw std::logic_error("lattice_meet: no greatest lower bound exists");
    return elems[static_cast<std::size_t>(m)];
}

/// Least upper bound, computed as the meet of the dual order.
inline Spio lattice_join(CatalanOrder order, const Spio& a, const Spio& b) {
    if (order != CatalanOrder::dyck && order != CatalanOrder::tamari)
        throw std::invalid_argument("lattice_join: supported for the dyck and tamari orders");
    detail::require_comparable_spios(a, b, "lattice_join");
    if (a.size() > 6) throw std::out_of_range("lattice_join: supported for n <= 6");
    const std::vector<Spio> elems = enumerate_spios(a.size());
    auto leq = order == CatalanOrder::dyck ? leq_dyck : leq_tamari;
    int ia = -1, ib = -1;
    for (int i = 0; i < static_cast<int>(elems.size()); ++i) {
        if (elems[static_cast<std::size_t>(i)] == a) ia = i;
        if (elems[static_cast<std::size_t>(i)] == b) ib = i;
    }
    if (ia < 0 || ib < 0) throw std::logic_error("lattice_join: input not found among canonical elements");
    const auto above = detail::build_below_table(
        static_cast<int>(elems.size()), [&](int i, int j) {
            return leq(elems[static_cast<std::size_t>(j)], elems[static_cast<std::size_t>(i)]);
        });
    const int m = detail::table_meet(above, ia, ib);
    if (m < 0) throw std::logic_error("lattice_join: no least upper bound exists");
    return elems[static_cast<std::size_t>(m)];
}

/// Exhaustive check that the Dyck order refines the Tamari order on n
/// elements, together with the ideal-containment step that proves it:
/// filter containment everywhere forces ideal containment everywhere.
struct RefinementReport {
    int n = 0;
    long long pairs_checked = 0;
    long long order_counterexamples = 0;
    long long ideal_step_counterexamples = 0;
    bool ok() const { return order_counterexamples == 0 && ideal_step_counterexamples == 0; }
};

inline RefinementReport check_refinement(int n) {
    if (n < 0 || n > 7) throw std::out_of_range("check_refinement: supported for 0 <= n <= 7");
    RefinementReport rep;
    rep.n = n;
    const std::vector<Spio> elems = enumerate_spios(n);
    for (const Spio& a : elems)
        for (const Spio& b : elems) {
            ++rep.pairs_checked;
            if (leq_tamari(a, b) && !leq_dyck(a, b)) ++rep.order_counterexamples;
            bool filters_nested = true;
            for (int k = 1; k <= n && filters_nested; ++k)
                if (b.relation().row(k) & ~a.relation().row(k)) filters_nested = false;
            if (filters_nested) {
                for (int k = 1; k <= n; ++k)
                    if (b.relation().column(k) & ~a.relation().column(k)) {
                        ++rep.ideal_step_counterexamples;
                        break;
                    }
            }
        }
    return rep;
}

/// Vertices plus cover edges of one of the four orders over all C_n
/// canonical elements. Elements are text encodings sorted lexicographically
/// (tree encodings for dyck/tamari, one-line permutations for the Bruhat
/// orders); covers hold index pairs (i, j) with element i covered by j.
struct HasseDiagram {
    std::string order;
    int n = 0;
    std::vector<std::string> elements;
    std::vector<std::pair<int, int>> covers;

    std::string to_dot() const {
        std::string out = "digraph \"" + order + "_n" + std::to_string(n) + "\" {\n";
        out += "  rankdir=BT;\n";
        for (std::size_t i = 0; i < elements.size(); ++i)
            out += "  n" + std::to_string(i) + " [label=\"" + elements[i] + "\"];\n";
        for (const auto& [lo, hi] : covers)
            out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
        out += "}\n";
        return out;
    }
};

inline HasseDiagram hasse(CatalanOrder order, int n) {
    const bool bruhat = order == CatalanOrder::weak_bruhat || order == CatalanOrder::strong_bruhat;
    if (n < 1 || n > (bruhat ? 6 : 7))
        throw std::out_of_range("hasse: n out of range for this order");

    HasseDiagram h;
    h.order = to_string(order);
    h.n = n;

    std::vector<std::string> encodings;
    std::vector<int> perm_index;  // position after sorting -> original index
    detail::BelowTable table;

    if (!bruhat) {
        const std::vector<Spio> elems = enumerate_spios(n);
        for (const Spio& s : elems) encodings.push_back(spio_to_tree(s).encoding());
        perm_index.resize(encodings.size());
        for (std::size_t i = 0; i < perm_index.size(); ++i) perm_index[i] = static_cast<int>(i);
        std::sort(perm_index.begin(), perm_index.end(),
                  [&](int x, int y) { return encodings[static_cast<std::size_t>(x)] < encodings[static_cast<std::size_t>(y)]; });
        auto leq = order == CatalanOrder::dyck ? leq_dyck : leq_tamari;
        table = detail::build_below_table(static_cast<int>(elems.size()), [&](int i, int j) {
            return leq(elems[static_cast<std::size_t>(perm_index[static_cast<std::size_t>(i)])],
                       elems[static_cast<std::size_t>(perm_index[static_cast<std::size_t>(j)])]);
        });
    } else {
        const std::vector<Permutation> elems = enumerate_av312(n);
        for (const Permutation& p : elems) encodings.push_back(p.to_string());
        perm_index.resize(encodings.size());
        for (std::size_t i = 0; i < perm_index.size(); ++i) perm_index[i] = static_cast<int>(i);
        std::sort(perm_index.begin(), perm_index.end(),
                  [&](int x, int y) { return encodings[static_cast<std::size_t>(x)] < encodings[static_cast<std::size_t>(y)]; });
        if (order == CatalanOrder::weak_bruhat) {
            table = detail::build_below_table(static_cast<int>(elems.size()), [&](int i, int j) {
                return leq_weak_bruhat(elems[static_cast<std::size_t>(perm_index[static_cast<std::size_t>(i)])],
                                       elems[static_cast<std::size_t>(perm_index[static_cast<std::size_t>(j)])]);
            });
        } else {
            const BruhatTable strong(n, BruhatTable::Kind::strong);
            table = detail::build_below_table(static_cast<int>(elems.size()), [&](int i, int j) {
                return strong.leq(elems[static_cast<std::size_t>(perm_index[static_cast<std::size_t>(i)])],
                                  elems[static_cast<std::size_t>(perm_index[static_cast<std::size_t>(j)])]);
            });
        }
    }

    if (!detail::table_is_partial_order(table))
        throw std::logic_error("hasse: comparison relation is not a partial order");

    h.elements.reserve(encodings.size());
    for (std::size_t i = 0; i < encodings.size(); ++i)
        h.elements.push_back(encodings[static_cast<std::size_t>(perm_index[i])]);
    h.covers = detail::table_covers(table);
    return h;
}

}  // namespace catlat
