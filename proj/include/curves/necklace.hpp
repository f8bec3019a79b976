#pragma once

// Integer necklaces: circular sequences of positive integers up to rotation,
// the small-variation (balanced) and 2-variation conditions, the A reduction
// and B_m lifts, and the uniqueness constructions for both conditions.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace curves {

// Thrown when a necklace operation needs entries confined to {m, m+1} but the
// values are spread wider (or are not consecutive).
class SpreadError : public std::domain_error {
public:
    explicit SpreadError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

// Booth's least-rotation: index of the lexicographically least rotation.
template <typename Seq>
std::size_t least_rotation_index(const Seq& s) {
    const std::size_t n = s.size();
    if (n <= 1) return 0;
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        auto sj = s[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k;
}

template <typename Seq>
Seq rotated(const Seq& s, std::size_t k) {
    Seq out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[(i + k) % s.size()]);
    return out;
}

// Smallest p with s equal to its rotation by p; p == size() iff aperiodic.
template <typename Seq>
std::size_t smallest_period(const Seq& s) {
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i + p < n && ok; ++i) ok = (s[i] == s[i + p]);
        if (ok) return p;
    }
    return n;
}

}  // namespace detail

// Circular sequence of positive integers, stored in its least rotation.
class IntNecklace {
public:
    explicit IntNecklace(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("necklace must be nonempty");
        for (int e : entries_)
            if (e < 1) throw std::invalid_argument("necklace entries must be positive");
        const std::size_t k = detail::least_rotation_index(entries_);
        if (k != 0) entries_ = detail::rotated(entries_, k);
    }

    const std::vector<int>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i % entries_.size()]; }
    std::int64_t sum() const { return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0}); }
    bool aperiodic() const { return detail::smallest_period(entries_) == entries_.size(); }

    auto operator<=>(const IntNecklace&) const = default;

    // "[4,5,5,4,5,5,5,4,5,5]"
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[i]);
        }
        out += ']';
        return out;
    }

private:
    std::vector<int> entries_;
};

// (m, x, y): x entries equal to m and y entries equal to m+1.
struct Profile {
    int m = 0;
    int x = 0;
    int y = 0;
    auto operator<=>(const Profile&) const = default;
};

// Lengths of maximal circular constant blocks of value v, as a sorted multiset.
inline std::vector<int> runs(const IntNecklace& w, int v) {
    const auto& e = w.entries();
    const std::size_t k = e.size();
    if (std::all_of(e.begin(), e.end(), [&](int x) { return x == v; })) {
        return e.empty() ? std::vector<int>{} : std::vector<int>{static_cast<int>(k)};
    }
    std::vector<int> out;
    // start scanning at a position not equal to v so circular runs are whole
    std::size_t start = 0;
    while (e[start] == v) ++start;
    int cur = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        if (e[(start + i) % k] == v) {
            ++cur;
        } else if (cur > 0) {
            out.push_back(cur);
            cur = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Defining inequality checked directly: circular window sums of every size s
// differ by at most 1.
inline bool has_small_variation(const IntNecklace& w) {
    const auto& e = w.entries();
    const std::size_t k = e.size();
    for (std::size_t s = 1; s < k; ++s) {
        int lo = 0, hi = 0;
        for (std::size_t i = 0; i < k; ++i) {
            int sum = 0;
            for (std::size_t j = 0; j < s; ++j) sum += e[(i + j) % k];
            if (i == 0) {
                lo = hi = sum;
            } else {
                lo = std::min(lo, sum);
                hi = std::max(hi, sum);
            }
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

inline Profile profile(const IntNecklace& w) {
    int lo = *std::min_element(w.entries().begin(), w.entries().end());
    int hi = *std::max_element(w.entries().begin(), w.entries().end());
    if (hi - lo > 1)
        throw SpreadError("necklace values " + std::to_string(lo) + ".." + std::to_string(hi) +
                          " are not confined to a consecutive pair");
    Profile p;
    p.m = lo;
    for (int v : w.entries()) (v == lo ? p.x : p.y) += 1;
    if (hi == lo) {  // constant necklace: profile (v, size, 0)
        p.x += p.y;
        p.y = 0;
    }
    return p;
}

// A: drop the minority value and record the run lengths of the other one.
// A constant necklace of size k maps to [k]. Ties use the remove-m branch.
inline IntNecklace a_map(const IntNecklace& w) {
    const Profile p = profile(w);
    if (p.y == 0) return IntNecklace({static_cast<int>(w.size())});
    const int kept = (p.x <= p.y) ? p.m + 1 : p.m;
    const auto& e = w.entries();
    const std::size_t k = e.size();
    std::size_t start = 0;
    while (e[start] == kept) ++start;  // both values present, so this stops
    std::vector<int> out;
    int cur = 0;
    for (std::size_t i = 1; i <= k; ++i) {
        if (e[(start + i) % k] == kept) {
            ++cur;
        } else if (cur > 0) {
            out.push_back(cur);
            cur = 0;
        }
    }
    return IntNecklace(std::move(out));
}

enum class BVariant { plain, tilde };

// B_m: each entry becomes a run of m+1 of that length, with a single m between
// consecutive runs (tilde swaps the roles of m and m+1).
inline IntNecklace b_map(int m, const IntNecklace& w, BVariant variant = BVariant::plain) {
    const int run_value = (variant == BVariant::plain) ? m + 1 : m;
    const int separator = (variant == BVariant::plain) ? m : m + 1;
    std::vector<int> out;
    out.reserve(w.sum() + w.size());
    for (int n : w.entries()) {
        out.insert(out.end(), static_cast<std::size_t>(n), run_value);
        out.push_back(separator);
    }
    return IntNecklace(std::move(out));
}

namespace detail {

inline Profile reduced_profile(const Profile& p) {
    const int mx = std::max(p.x, p.y), mn = std::min(p.x, p.y);
    Profile q;
    q.m = mx / mn;
    q.x = mn - mx + mn * (mx / mn);
    q.y = mx - mn * (mx / mn);
    return q;
}

}  // namespace detail

// The unique small-variation necklace with profile p, via the Euclidean
// recursion: reduce the profile, recurse, lift with the matching B_m.
inline IntNecklace unique_sv_necklace(const Profile& p) {
    if (p.m < 1 || p.x < 0 || p.y < 0 || p.x + p.y < 1)
        throw std::invalid_argument("profile requires m >= 1 and x + y >= 1");
    if (p.y == 0) return IntNecklace(std::vector<int>(p.x, p.m));
    if (p.x == 0) return IntNecklace(std::vector<int>(p.y, p.m + 1));
    const IntNecklace inner = unique_sv_necklace(detail::reduced_profile(p));
    return b_map(p.m, inner, p.x <= p.y ? BVariant::plain : BVariant::tilde);
}

// A pair of circular block occurrences (m, u, m) at lo_index and
// (m+1, u, m+1) at hi_index, both of the given size, sharing the interior u.
struct EssentialPair {
    int size = 0;      // block length, 2..necklace size
    int lo_index = 0;  // start of the (m, u, m) occurrence
    int hi_index = 0;  // start of the (m+1, u, m+1) occurrence
    std::vector<int> interior;
    auto operator<=>(const EssentialPair&) const = default;
};

// All essential pairs of block occurrences. Blocks are capped at the
// necklace size (a circular block longer than the necklace wraps onto
// itself); each (start, size) occurrence counts once, so distinct positions
// with the same interior content are distinct pairs -- this is what puts the
// pairs in bijection with linking classes of the associated word.
inline std::vector<EssentialPair> essential_pairs(const IntNecklace& w) {
    const Profile p = profile(w);
    if (p.y == 0) throw SpreadError("essential pairs need both values m and m+1 present");
    const auto& e = w.entries();
    const std::size_t k = e.size();
    std::vector<EssentialPair> out;
    for (std::size_t s = 2; s <= k; ++s) {
        std::vector<std::pair<int, std::vector<int>>> lo, hi;
        for (std::size_t i = 0; i < k; ++i) {
            const int first = e[i], last = e[(i + s - 1) % k];
            if (first != last) continue;
            std::vector<int> interior;
            interior.reserve(s - 2);
            for (std::size_t j = 1; j + 1 < s; ++j) interior.push_back(e[(i + j) % k]);
            (first == p.m ? lo : hi).emplace_back(static_cast<int>(i), std::move(interior));
        }
        for (const auto& [li, lu] : lo)
            for (const auto& [hi_i, hu] : hi)
                if (lu == hu)
                    out.push_back({static_cast<int>(s), li, hi_i, lu});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool has_two_variation(const IntNecklace& w) { return essential_pairs(w).size() == 1; }

// The unique 2-variation necklace with profile p when gcd(x, y) = 2, nullopt
// otherwise. Same reduction as the small-variation case; the base case has
// two runs of the majority value, of sizes max/2 - 1 and max/2 + 1.
inline std::optional<IntNecklace> unique_2v_necklace(const Profile& p) {
    if (p.m < 1 || p.x < 1 || p.y < 1)
        throw std::invalid_argument("2-variation profile requires m, x, y >= 1");
    if (std::gcd(p.x, p.y) != 2) return std::nullopt;
    const int mn = std::min(p.x, p.y), mx = std::max(p.x, p.y);
    if (mn == 2) {
        const int run_value = (p.x <= p.y) ? p.m + 1 : p.m;
        const int separator = (p.x <= p.y) ? p.m : p.m + 1;
        std::vector<int> out;
        out.push_back(separator);
        out.insert(out.end(), static_cast<std::size_t>(mx / 2 - 1), run_value);
        out.push_back(separator);
        out.insert(out.end(), static_cast<std::size_t>(mx / 2 + 1), run_value);
        return IntNecklace(std::move(out));
    }
    const auto inner = unique_2v_necklace(detail::reduced_profile(p));
    return b_map(p.m, *inner, p.x <= p.y ? BVariant::plain : BVariant::tilde);
}

}  // namespace curves
