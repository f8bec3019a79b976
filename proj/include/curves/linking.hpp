#pragma once

// Combinatorial self-intersection: cyclic lexicographic ordering on equal
// length words, linking pairs over all rotations, and the count of their
// equivalence classes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "curves/fgword.hpp"

namespace curves {

class NonPrimitiveError : public std::domain_error {
public:
    explicit NonPrimitiveError(const std::string& what) : std::domain_error(what) {}
};

enum class Ordering { Less, Equal, Greater };

namespace detail {

// Rank of a letter in the rotation of (a, b, a^-1, b^-1) starting at `start`.
inline int cl_rank(Letter x, Letter start) {
    return (static_cast<int>(x) - static_cast<int>(start)) & 3;
}

}  // namespace detail

// Letterwise comparison under the cyclic lexicographic ordering: the ranking
// starts as a < b < a^-1 < b^-1 and, after the words agree on a letter x, is
// re-based to start at x^-1.
inline Ordering cl_compare(const LetterSeq& u, const LetterSeq& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("cl_compare requires words of equal length");
    Letter start = Letter::a;
    for (std::size_t t = 0; t < u.size(); ++t) {
        if (u[t] != v[t]) {
            return detail::cl_rank(u[t], start) < detail::cl_rank(v[t], start)
                       ? Ordering::Less
                       : Ordering::Greater;
        }
        start = inverse(u[t]);
    }
    return Ordering::Equal;
}

inline Ordering cl_compare(const Word& u, const Word& v) {
    return cl_compare(u.letters(), v.letters());
}

enum class LinkingFlavor {
    interleaved,  // w_i < w_j < w_i^-1 < w_j^-1
    crossed,      // w_i < w_j^-1 < w_i^-1 < w_j
};

// Rotation indices are 0-based; i < j.
struct LinkingPair {
    int i = 0;
    int j = 0;
    LinkingFlavor flavor = LinkingFlavor::interleaved;
    auto operator<=>(const LinkingPair&) const = default;
};

namespace detail {

struct RotationTable {
    std::vector<LetterSeq> rotation;  // rotation[i] starts at letter i
    std::vector<LetterSeq> inverse_word;

    explicit RotationTable(const CyclicWord& w) {
        const std::size_t n = w.size();
        rotation.reserve(n);
        inverse_word.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            rotation.push_back(rotated(w.letters(), i));
            LetterSeq inv;
            inv.reserve(n);
            for (auto it = rotation.back().rbegin(); it != rotation.back().rend(); ++it)
                inv.push_back(curves::inverse(*it));
            inverse_word.push_back(std::move(inv));
        }
    }
};

inline bool cl_less(const LetterSeq& u, const LetterSeq& v) {
    return cl_compare(u, v) == Ordering::Less;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

// All linking pairs of a primitive cyclic word: both chains of strict
// inequalities are tested for every unordered pair of rotations.
inline std::vector<LinkingPair> linking_pairs(const CyclicWord& w) {
    if (!is_primitive(w))
        throw NonPrimitiveError("linking pairs require a primitive word: " + to_string(w) +
                                " = (" + to_string(primitive_root(w).first) + ")^" +
                                std::to_string(primitive_root(w).second));
    const detail::RotationTable table(w);
    const int n = static_cast<int>(w.size());
    std::vector<LinkingPair> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& wi = table.rotation[i];
            const auto& wj = table.rotation[j];
            const auto& vi = table.inverse_word[i];
            const auto& vj = table.inverse_word[j];
            // (i, j) is linking when {w_j, w_j^-1} separates {w_i, w_i^-1}
            // in the total order: exactly one of w_j, w_j^-1 lies strictly
            // between w_i and w_i^-1. All comparisons are strict, so
            // coinciding words never produce a pair.
            const auto& lo = detail::cl_less(wi, vi) ? wi : vi;
            const auto& hi = detail::cl_less(wi, vi) ? vi : wi;
            const bool j_between = detail::cl_less(lo, wj) && detail::cl_less(wj, hi);
            const bool jinv_between = detail::cl_less(lo, vj) && detail::cl_less(vj, hi);
            if (j_between != jinv_between)
                out.push_back(
                    {i, j, j_between ? LinkingFlavor::interleaved : LinkingFlavor::crossed});
        }
    }
    return out;
}

namespace detail {

// (i, j) ~ (i+1, j+1) when the i-th and j-th letters are equal, and
// (i+1, j) ~ (i, j+1) when they are mutually inverse; indices mod n.
inline std::vector<std::vector<LinkingPair>> group_linking_classes(
    const CyclicWord& w, const std::vector<LinkingPair>& pairs) {
    const int n = static_cast<int>(w.size());
    std::vector<int> pair_id(static_cast<std::size_t>(n) * n, -1);
    const auto id_of = [&](int i, int j) -> int {
        if (i == j) return -1;
        if (i > j) std::swap(i, j);
        return pair_id[static_cast<std::size_t>(i) * n + j];
    };
    for (std::size_t k = 0; k < pairs.size(); ++k)
        pair_id[static_cast<std::size_t>(pairs[k].i) * n + pairs[k].j] = static_cast<int>(k);

    UnionFind uf(static_cast<int>(pairs.size()));
    const auto& e = w.letters();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (e[i] == e[j]) {
                const int p = id_of(i, j);
                const int q = id_of((i + 1) % n, (j + 1) % n);
                if (p >= 0 && q >= 0) uf.unite(p, q);
            } else if (e[i] == inverse(e[j])) {
                const int p = id_of((i + 1) % n, j);
                const int q = id_of(i, (j + 1) % n);
                if (p >= 0 && q >= 0) uf.unite(p, q);
            }
        }
    }
    std::map<int, std::vector<LinkingPair>> by_root;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        by_root[uf.find(static_cast<int>(k))].push_back(pairs[k]);
    std::vector<std::vector<LinkingPair>> out;
    out.reserve(by_root.size());
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Equivalence classes of linking pairs, each sorted, classes sorted by their
// least member (primitive inputs only).
inline std::vector<std::vector<LinkingPair>> linking_classes(const CyclicWord& w) {
    return detail::group_linking_classes(w, linking_pairs(w));
}

// Number of equivalence classes of linking pairs: the self-intersection
// number of the curve represented by w (primitive inputs only).
inline int self_intersection(const CyclicWord& w) {
    return static_cast<int>(detail::group_linking_classes(w, linking_pairs(w)).size());
}

}  // namespace curves
