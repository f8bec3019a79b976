#pragma once

// Reduced words and circular words over the rank-2 free group F_2 = <a, b>,
// canonical forms, the 8 generator renamings, exponent necklaces, and the
// alpha_m / alpha~_m automorphism family.

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "curves/necklace.hpp"

namespace curves {

// Letters are encoded so that the canonicalization order a < b < a^-1 < b^-1
// is the numeric order, and inversion is xor with 2.
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

inline Letter inverse(Letter x) { return Letter(static_cast<std::uint8_t>(x) ^ 2u); }
inline Letter letter_base(Letter x) { return Letter(static_cast<std::uint8_t>(x) & 1u); }
inline int letter_sign(Letter x) { return (static_cast<std::uint8_t>(x) & 2u) ? -1 : +1; }
inline Letter make_letter(Letter base, int sign) {
    return sign > 0 ? base : inverse(base);
}
inline char letter_char(Letter x) { return "abAB"[static_cast<std::uint8_t>(x)]; }

using LetterSeq = std::vector<Letter>;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input conjugate to the identity; the trivial class has no CyclicWord.
class TrivialWordError : public std::domain_error {
public:
    TrivialWordError() : std::domain_error("word is conjugate to the identity") {}
};

namespace detail {

inline void push_reduced(LetterSeq& out, Letter x) {
    if (!out.empty() && out.back() == inverse(x))
        out.pop_back();
    else
        out.push_back(x);
}

}  // namespace detail

// A freely reduced word; reduction is applied on construction.
class Word {
public:
    Word() = default;
    explicit Word(LetterSeq raw) {
        letters_.reserve(raw.size());
        for (Letter x : raw) detail::push_reduced(letters_, x);
    }

    const LetterSeq& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverted() const {
        LetterSeq out;
        out.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(inverse(*it));
        Word w;
        w.letters_ = std::move(out);  // inverse of a reduced word is reduced
        return w;
    }

    auto operator<=>(const Word&) const = default;

private:
    LetterSeq letters_;
};

inline std::string to_string(const LetterSeq& letters) {
    std::string out;
    out.reserve(letters.size());
    for (Letter x : letters) out += letter_char(x);
    return out;
}
inline std::string to_string(const Word& w) { return to_string(w.letters()); }

// Grammar: token = letter | letter '^' signed-nonzero-integer, with letters
// a, b, A, B (A = a^-1, B = b^-1); whitespace ignored. Exponents expand and
// the result is freely reduced.
inline Word parse_word(const std::string& text) {
    LetterSeq out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        Letter base;
        switch (c) {
            case 'a': base = Letter::a; break;
            case 'b': base = Letter::b; break;
            case 'A': base = Letter::A; break;
            case 'B': base = Letter::B; break;
            default: throw ParseError(std::string("invalid character '") + c + "'", i);
        }
        ++i;
        long long exponent = 1;
        if (i < n && text[i] == '^') {
            const std::size_t caret = i;
            ++i;
            bool negative = false;
            if (i < n && (text[i] == '-' || text[i] == '+')) {
                negative = (text[i] == '-');
                ++i;
            }
            if (i >= n || text[i] < '0' || text[i] > '9')
                throw ParseError("malformed exponent", caret);
            long long mag = 0;
            while (i < n && text[i] >= '0' && text[i] <= '9') {
                mag = mag * 10 + (text[i] - '0');
                if (mag > 1'000'000) throw ParseError("exponent too large", caret);
                ++i;
            }
            if (mag == 0) throw ParseError("exponent must be nonzero", caret);
            exponent = negative ? -mag : mag;
        }
        const Letter x = exponent > 0 ? base : inverse(base);
        for (long long k = 0; k < (exponent > 0 ? exponent : -exponent); ++k)
            detail::push_reduced(out, x);
    }
    return Word(std::move(out));
}

// A cyclically reduced circular word in its least rotation: the canonical
// representative of a conjugacy class of F_2.
class CyclicWord {
public:
    explicit CyclicWord(const Word& w) : CyclicWord(w.letters()) {}
    explicit CyclicWord(LetterSeq letters) {
        // cyclic reduction: peel inverse first/last pairs
        std::size_t lo = 0, hi = letters.size();
        while (hi - lo >= 2 && letters[lo] == inverse(letters[hi - 1])) {
            ++lo;
            --hi;
        }
        letters_.assign(letters.begin() + lo, letters.begin() + hi);
        if (letters_.empty()) throw TrivialWordError();
        const std::size_t k = detail::least_rotation_index(letters_);
        if (k != 0) letters_ = detail::rotated(letters_, k);
    }

    // Trusted fast path for enumeration: seq must already be cyclically
    // reduced and in least rotation.
    static CyclicWord from_canonical(LetterSeq seq) {
        CyclicWord w;
        w.letters_ = std::move(seq);
        assert(!w.letters_.empty());
        assert(detail::least_rotation_index(w.letters_) == 0);
        return w;
    }

    const LetterSeq& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

    CyclicWord inverted() const {
        LetterSeq out;
        out.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(inverse(*it));
        return CyclicWord(std::move(out));
    }

    auto operator<=>(const CyclicWord&) const = default;

private:
    CyclicWord() = default;
    LetterSeq letters_;
};

inline std::string to_string(const CyclicWord& w) { return to_string(w.letters()); }

inline CyclicWord cyclic_canonical(const Word& w) { return CyclicWord(w); }

// (root, multiplicity): w is the multiplicity-th power of the aperiodic root.
inline std::pair<CyclicWord, int> primitive_root(const CyclicWord& w) {
    const std::size_t p = detail::smallest_period(w.letters());
    if (p == w.size()) return {w, 1};
    LetterSeq root(w.letters().begin(), w.letters().begin() + p);
    return {CyclicWord(std::move(root)), static_cast<int>(w.size() / p)};
}

inline bool is_primitive(const CyclicWord& w) {
    return detail::smallest_period(w.letters()) == w.size();
}

// One of the 8 generator renamings: a and b map to a^e, b^d or b^e, a^d.
struct Renaming {
    Letter image_of_a = Letter::a;
    Letter image_of_b = Letter::b;

    Letter apply(Letter x) const {
        const Letter img = (letter_base(x) == Letter::a) ? image_of_a : image_of_b;
        return letter_sign(x) > 0 ? img : inverse(img);
    }

    LetterSeq apply(const LetterSeq& seq) const {
        LetterSeq out;
        out.reserve(seq.size());
        for (Letter x : seq) out.push_back(apply(x));
        return out;
    }

    Renaming compose(const Renaming& inner) const {
        return Renaming{apply(inner.image_of_a), apply(inner.image_of_b)};
    }

    auto operator<=>(const Renaming&) const = default;
};

inline const std::array<Renaming, 8>& all_renamings() {
    static const std::array<Renaming, 8> table = {{
        {Letter::a, Letter::b},
        {Letter::a, Letter::B},
        {Letter::A, Letter::b},
        {Letter::A, Letter::B},
        {Letter::b, Letter::a},
        {Letter::b, Letter::A},
        {Letter::B, Letter::a},
        {Letter::B, Letter::A},
    }};
    return table;
}

// Canonical forms of all 8 renaming images; size divides 8.
inline std::set<CyclicWord> renaming_orbit(const CyclicWord& w) {
    std::set<CyclicWord> out;
    for (const Renaming& r : all_renamings()) out.insert(CyclicWord(r.apply(w.letters())));
    return out;
}

// The two conjugacy classes of the loop around the puncture: the commutator
// aba^-1b^-1 and its inverse.
inline bool is_puncture_class(const CyclicWord& w) {
    static const CyclicWord pos = CyclicWord(parse_word("abAB"));
    static const CyclicWord neg = CyclicWord(parse_word("baBA"));
    return w == pos || w == neg;
}

// Essential: not the point (rejected at the CyclicWord boundary) and not the
// loop around the puncture. Powers of the puncture class count as essential.
inline bool is_essential(const CyclicWord& w) { return !is_puncture_class(w); }

enum class AlphaVariant { plain, tilde };
enum class AlphaDirection { forward, inverse };

// alpha_m maps a^m b -> b and a^{m+1} b -> a; alpha~_m maps a^m b -> a and
// a^{m+1} b -> b. Letter images are derived from the block images:
//   alpha_m:  a -> a b^-1,        b -> (b a^-1)^m b
//   alpha~_m: a -> b a^-1,        b -> (a b^-1)^m a
// and the inverses send the generators back to the defining blocks.
inline Word apply_alpha(const Word& w, int m, AlphaVariant variant, AlphaDirection direction) {
    if (m < 1) throw std::invalid_argument("alpha_m requires m >= 1");
    LetterSeq image_a, image_b;
    const auto rep = [](Letter x, Letter y, int count, Letter tail) {
        LetterSeq out;
        for (int i = 0; i < count; ++i) {
            out.push_back(x);
            out.push_back(y);
        }
        out.push_back(tail);
        return out;
    };
    if (direction == AlphaDirection::forward) {
        if (variant == AlphaVariant::plain) {
            image_a = {Letter::a, Letter::B};
            image_b = rep(Letter::b, Letter::A, m, Letter::b);
        } else {
            image_a = {Letter::b, Letter::A};
            image_b = rep(Letter::a, Letter::B, m, Letter::a);
        }
    } else {
        // inverse images are the basis blocks a^m b / a^{m+1} b
        LetterSeq low(static_cast<std::size_t>(m), Letter::a);
        low.push_back(Letter::b);
        LetterSeq high(static_cast<std::size_t>(m) + 1, Letter::a);
        high.push_back(Letter::b);
        if (variant == AlphaVariant::plain) {
            image_a = std::move(high);
            image_b = std::move(low);
        } else {
            image_a = std::move(low);
            image_b = std::move(high);
        }
    }
    LetterSeq out;
    for (Letter x : w.letters()) {
        const LetterSeq& img = (letter_base(x) == Letter::a) ? image_a : image_b;
        if (letter_sign(x) > 0) {
            for (Letter y : img) detail::push_reduced(out, y);
        } else {
            for (auto it = img.rbegin(); it != img.rend(); ++it)
                detail::push_reduced(out, inverse(*it));
        }
    }
    return Word(std::move(out));
}

// Maximal-block decomposition failed: the word is not of the shape
// a^{n_1} b^e ... a^{n_k} b^e (or with the roles of a and b swapped).
class ShapeError : public std::domain_error {
public:
    explicit ShapeError(const std::string& what) : std::domain_error(what) {}
};

// Which base carries the exponents, and the fixed signs of exponents and of
// the single-letter separators.
struct NecklaceShape {
    Letter carrier = Letter::a;  // base whose |exponents| form the necklace
    int exponent_sign = +1;
    int separator_sign = +1;
    IntNecklace necklace;
};

namespace detail {

struct Block {
    Letter base;
    int exponent;  // signed
};

inline std::vector<Block> cyclic_blocks(const CyclicWord& w) {
    const auto& e = w.letters();
    const std::size_t n = e.size();
    std::size_t start = 0;
    while (start + 1 < n && letter_base(e[start]) == letter_base(e[(start + n - 1) % n])) ++start;
    // start==n-1 happens only for single-base words; blocks still come out whole
    std::vector<Block> out;
    for (std::size_t i = 0; i < n; ++i) {
        const Letter x = e[(start + i) % n];
        if (!out.empty() && letter_base(x) == out.back().base) {
            out.back().exponent += letter_sign(x);
        } else {
            out.push_back({letter_base(x), letter_sign(x)});
        }
    }
    return out;
}

inline std::optional<NecklaceShape> shape_with_carrier(const std::vector<Block>& blocks,
                                                       Letter carrier) {
    std::vector<int> exponents;
    int exp_sign = 0, sep_sign = 0;
    for (const Block& blk : blocks) {
        if (blk.base == carrier) {
            const int s = blk.exponent > 0 ? +1 : -1;
            if (exp_sign == 0) exp_sign = s;
            if (s != exp_sign) return std::nullopt;
            exponents.push_back(blk.exponent > 0 ? blk.exponent : -blk.exponent);
        } else {
            if (blk.exponent != 1 && blk.exponent != -1) return std::nullopt;
            if (sep_sign == 0) sep_sign = blk.exponent;
            if (blk.exponent != sep_sign) return std::nullopt;
        }
    }
    if (exponents.empty() || exponents.size() * 2 != blocks.size()) return std::nullopt;
    NecklaceShape shape{carrier, exp_sign, sep_sign, IntNecklace(std::move(exponents))};
    return shape;
}

}  // namespace detail

// Exponent necklace of a general-type word, if the word has that shape. The
// block decomposition must alternate carrier blocks of one sign with
// single-letter separator blocks of one sign.
inline std::optional<NecklaceShape> try_exponent_necklace(const CyclicWord& w) {
    const auto blocks = detail::cyclic_blocks(w);
    if (blocks.size() < 2 || blocks.size() % 2 != 0) return std::nullopt;
    if (auto s = detail::shape_with_carrier(blocks, Letter::a)) return s;
    return detail::shape_with_carrier(blocks, Letter::b);
}

inline NecklaceShape exponent_necklace(const CyclicWord& w) {
    auto s = try_exponent_necklace(w);
    if (!s) throw ShapeError("word " + to_string(w) + " is not of exponent-necklace shape");
    return *s;
}

// a^{±n_1} b^{±1} ... a^{±n_k} b^{±1} (or with b carrying the exponents).
inline Word word_from_exponents(const std::vector<int>& exponents, Letter carrier = Letter::a,
                                int exponent_sign = +1, int separator_sign = +1) {
    const Letter run = make_letter(carrier, exponent_sign);
    const Letter sep = make_letter(carrier == Letter::a ? Letter::b : Letter::a, separator_sign);
    LetterSeq out;
    for (int n : exponents) {
        if (n < 1) throw std::invalid_argument("exponents must be positive");
        out.insert(out.end(), static_cast<std::size_t>(n), run);
        out.push_back(sep);
    }
    return Word(std::move(out));
}

inline Word word_from_shape(const NecklaceShape& s) {
    return word_from_exponents(s.necklace.entries(), s.carrier, s.exponent_sign, s.separator_sign);
}

}  // namespace curves
