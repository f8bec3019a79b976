#pragma once

// Structural classification of cyclic words: the three simple types
// (generator power, puncture, general type with a small-variation exponent
// necklace) and the four single-self-intersection cases, plus constructive
// generators for both families.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curves/fgword.hpp"
#include "curves/linking.hpp"
#include "curves/necklace.hpp"

namespace curves {

struct SimpleType {
    enum class Tag { Generator, Puncture, General };
    Tag tag = Tag::Generator;
    int multiplicity = 1;
    std::optional<NecklaceShape> shape;  // General only
};

inline std::optional<SimpleType> classify_simple(const CyclicWord& w) {
    const auto& e = w.letters();
    if (std::all_of(e.begin(), e.end(), [&](Letter x) { return x == e[0]; }))
        return SimpleType{SimpleType::Tag::Generator, static_cast<int>(e.size()), std::nullopt};
    const auto [root, mult] = primitive_root(w);
    if (is_puncture_class(root))
        return SimpleType{SimpleType::Tag::Puncture, mult, std::nullopt};
    if (auto shape = try_exponent_necklace(w)) {
        if (has_small_variation(shape->necklace))
            return SimpleType{SimpleType::Tag::General, mult, std::move(shape)};
    }
    return std::nullopt;
}

struct Si1Case {
    enum class Tag { Exceptional, CommutatorInsertion, TwoVariation, GapTwo, NotSi1 };
    Tag tag = Tag::NotSi1;
    // Exceptional: which representative word the orbit belongs to.
    std::string exceptional_word;
    // CommutatorInsertion: sign of the inserted simple word's exponents and
    // its necklace.
    int insertion_sign = 0;
    std::optional<IntNecklace> necklace;  // CommutatorInsertion / TwoVariation
    int m = 0;                            // GapTwo
};

namespace detail {

struct ExceptionalOrbits {
    std::set<CyclicWord> aabb, abAb, aBAbb;
    ExceptionalOrbits()
        : aabb(renaming_orbit(CyclicWord(parse_word("a^2b^2")))),
          abAb(renaming_orbit(CyclicWord(parse_word("abAb")))),
          aBAbb(renaming_orbit(CyclicWord(parse_word("aBAbb")))) {}
};

inline const ExceptionalOrbits& exceptional_orbits() {
    static const ExceptionalOrbits orbits;
    return orbits;
}

// Decompose some rotation of w as abAB . sigma with sigma a positive- or
// negative-exponent word a^{n_1} b ... a^{n_k} b representing a primitive
// simple curve. Returns (sign, necklace of sigma) for the first admissible
// rotation, i.e. the one whose insertion has self-intersection one.
inline std::optional<std::pair<int, IntNecklace>> commutator_insertion_shape(
    const CyclicWord& w) {
    static const LetterSeq commutator = parse_word("aBAb").letters();
    const std::size_t n = w.size();
    if (n < 6) return std::nullopt;
    for (const Renaming& r : all_renamings()) {
        const CyclicWord img(r.apply(w.letters()));
        for (std::size_t rot = 0; rot < n; ++rot) {
            const LetterSeq word = rotated(img.letters(), rot);
            if (!std::equal(commutator.begin(), commutator.end(), word.begin())) continue;
            LetterSeq tail(word.begin() + 4, word.end());
            CyclicWord sigma{LetterSeq(tail)};
            const auto shape = try_exponent_necklace(sigma);
            if (!shape || shape->carrier != Letter::a || shape->separator_sign != +1) continue;
            if (!is_primitive(sigma) || !has_small_variation(shape->necklace)) continue;
            // admissibility: only one rotation of sigma makes the insertion
            // a single self-intersection, and w must be that insertion
            if (self_intersection(w) != 1) return std::nullopt;
            return std::make_pair(shape->exponent_sign, shape->necklace);
        }
    }
    return std::nullopt;
}

}  // namespace detail

// The four single-self-intersection cases; requires w primitive and
// essential. Returns tag NotSi1 when no case matches.
inline Si1Case classify_si1(const CyclicWord& w) {
    if (!is_primitive(w)) throw NonPrimitiveError("classify_si1 requires a primitive word");
    if (!is_essential(w)) throw std::invalid_argument("classify_si1 requires an essential word");

    const auto& orbits = detail::exceptional_orbits();
    if (orbits.aabb.count(w)) return {Si1Case::Tag::Exceptional, "a^2b^2", 0, std::nullopt, 0};
    if (orbits.abAb.count(w)) return {Si1Case::Tag::Exceptional, "aba^-1b", 0, std::nullopt, 0};
    if (orbits.aBAbb.count(w))
        return {Si1Case::Tag::Exceptional, "ab^-1a^-1b^2", 0, std::nullopt, 0};

    if (const auto shape = try_exponent_necklace(w)) {
        const auto& neck = shape->necklace;
        try {
            const Profile p = profile(neck);
            if (p.y > 0 && p.m >= 1 && has_two_variation(neck))
                return {Si1Case::Tag::TwoVariation, "", 0, neck, 0};
        } catch (const SpreadError&) {
            if (neck.size() == 2 && neck.entries()[1] - neck.entries()[0] == 2)
                return {Si1Case::Tag::GapTwo, "", 0, std::nullopt, neck.entries()[0]};
        }
        return {};
    }

    if (const auto ins = detail::commutator_insertion_shape(w))
        return {Si1Case::Tag::CommutatorInsertion, "", ins->first, ins->second, 0};
    return {};
}

// All primitive essential classes of word length L with self-intersection 0:
// the four generators at L = 1, otherwise the words of the aperiodic
// small-variation necklaces over all profile solutions of
// x(m+1) + y(m+2) = L, expanded through the 8 renamings.
inline std::set<CyclicWord> generate_simple_primitive(int L) {
    if (L < 1) throw std::invalid_argument("L must be positive");
    std::set<CyclicWord> out;
    if (L == 1) {
        for (Letter x : {Letter::a, Letter::b, Letter::A, Letter::B})
            out.insert(CyclicWord(LetterSeq{x}));
        return out;
    }
    for (int m = 1; m + 1 <= L; ++m) {
        for (int x = 1; static_cast<long long>(x) * (m + 1) <= L; ++x) {
            const long long rest = L - static_cast<long long>(x) * (m + 1);
            if (rest % (m + 2) != 0) continue;
            const int y = static_cast<int>(rest / (m + 2));
            const IntNecklace neck = unique_sv_necklace({m, x, y});
            if (!neck.aperiodic()) continue;
            const Word word = word_from_exponents(neck.entries());
            for (const Renaming& r : all_renamings())
                out.insert(CyclicWord(r.apply(word.letters())));
        }
    }
    return out;
}

// All primitive classes of word length L with self-intersection 1: the
// exceptional orbits at L = 4, 5, commutator insertions over simple
// necklaces of length L-4 (both signs, at the admissible rotation), the
// 2-variation necklace words, and a^m b a^{m+2} b for even L.
inline std::set<CyclicWord> generate_si1_primitive(int L) {
    if (L < 4) throw std::invalid_argument("generate_si1_primitive requires L >= 4");
    std::set<CyclicWord> out;
    const auto& orbits = detail::exceptional_orbits();
    if (L == 4) {
        out.insert(orbits.aabb.begin(), orbits.aabb.end());
        out.insert(orbits.abAb.begin(), orbits.abAb.end());
    }
    if (L == 5) out.insert(orbits.aBAbb.begin(), orbits.aBAbb.end());

    // commutator insertions: sigma runs over simple primitive necklace words
    // of length L - 4, in both sign variants
    static const LetterSeq commutator = parse_word("aBAb").letters();
    if (L - 4 >= 2) {
        for (const CyclicWord& neckword : generate_simple_primitive(L - 4)) {
            const auto shape = try_exponent_necklace(neckword);
            if (!shape || shape->carrier != Letter::a || shape->exponent_sign != +1 ||
                shape->separator_sign != +1)
                continue;  // one representative per necklace; renamings below
            for (int sign : {+1, -1}) {
                const Word sigma =
                    word_from_exponents(shape->necklace.entries(), Letter::a, sign, +1);
                std::set<CyclicWord> admissible;
                for (std::size_t rot = 0; rot < sigma.size(); ++rot) {
                    LetterSeq word = commutator;
                    const LetterSeq tail = detail::rotated(sigma.letters(), rot);
                    word.insert(word.end(), tail.begin(), tail.end());
                    const CyclicWord candidate{std::move(word)};
                    if (self_intersection(candidate) == 1) admissible.insert(candidate);
                }
                for (const CyclicWord& cand : admissible)
                    for (const Renaming& r : all_renamings())
                        out.insert(CyclicWord(r.apply(cand.letters())));
            }
        }
    }

    // 2-variation necklaces: gcd(x, y) = 2 solutions of x(m+1) + y(m+2) = L
    for (int m = 1; m + 1 <= L; ++m) {
        for (int x = 1; static_cast<long long>(x) * (m + 1) < L; ++x) {
            const long long rest = L - static_cast<long long>(x) * (m + 1);
            if (rest <= 0 || rest % (m + 2) != 0) continue;
            const int y = static_cast<int>(rest / (m + 2));
            if (y < 1) continue;
            const auto neck = unique_2v_necklace({m, x, y});
            if (!neck || !neck->aperiodic()) continue;
            const Word word = word_from_exponents(neck->entries());
            for (const Renaming& r : all_renamings())
                out.insert(CyclicWord(r.apply(word.letters())));
        }
    }

    // a^m b a^{m+2} b
    if (L >= 6 && L % 2 == 0) {
        const int m = (L - 4) / 2;
        const Word word = word_from_exponents({m, m + 2});
        for (const Renaming& r : all_renamings())
            out.insert(CyclicWord(r.apply(word.letters())));
    }
    return out;
}

}  // namespace curves
