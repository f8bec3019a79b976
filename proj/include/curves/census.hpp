#pragma once

// Exhaustive census of conjugacy classes by word length: depth-first
// enumeration of canonical cyclically reduced representatives, parallel
// sharding by prefix, per-class invariants (primitivity, essentiality,
// self-intersection of the primitive root), aggregate counts, and the TSV /
// manifest output format.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "curves/fgword.hpp"
#include "curves/linking.hpp"

namespace curves {

inline constexpr int kCensusLengthCap = 14;

// Number of cyclically reduced words of length L as positioned sequences
// (not up to rotation): 3^L + 2 + (-1)^L (L >= 1).
inline std::int64_t count_cyclically_reduced(int L) {
    if (L < 1) throw std::invalid_argument("L must be positive");
    std::int64_t p = 1;
    for (int i = 0; i < L; ++i) p *= 3;
    return p + 2 + (L % 2 == 0 ? 1 : -1);
}

namespace detail {

// Extend the partial word seq by every letter keeping it (a) freely reduced
// against the previous letter, (b) cyclically reduced against the first
// letter at the leaf, (c) no smaller than the first letter (a cheap
// lexicographic-minimality prune); emit canonical representatives at leaves.
inline void enumerate_from(LetterSeq& seq, std::size_t L,
                           const std::function<void(const CyclicWord&)>& emit) {
    if (seq.size() == L) {
        if (seq.size() > 1 && seq.back() == inverse(seq.front())) return;
        if (least_rotation_index(seq) != 0) return;
        emit(CyclicWord::from_canonical(seq));
        return;
    }
    for (int c = 0; c < 4; ++c) {
        const Letter x = static_cast<Letter>(c);
        if (!seq.empty() && x == inverse(seq.back())) continue;
        if (!seq.empty() && static_cast<int>(x) < static_cast<int>(seq.front())) continue;
        seq.push_back(x);
        enumerate_from(seq, L, emit);
        seq.pop_back();
    }
}

}  // namespace detail

// Every conjugacy class of word length exactly L, canonical representative
// each, in lexicographic order of the representative.
inline void enumerate_classes(int L, const std::function<void(const CyclicWord&)>& emit) {
    if (L < 1) throw std::invalid_argument("L must be positive");
    LetterSeq seq;
    seq.reserve(static_cast<std::size_t>(L));
    detail::enumerate_from(seq, static_cast<std::size_t>(L), emit);
}

struct CensusRecord {
    CyclicWord word;
    bool primitive = false;
    bool essential = false;       // the class itself (powers of the puncture count)
    bool root_essential = false;  // the primitive root
    int multiplicity = 1;         // power of the primitive root
    int si = 0;                   // self-intersection of the primitive root
};

struct CensusTable {
    int length = 0;
    std::vector<CensusRecord> records;  // sorted by canonical word

    std::int64_t total() const { return static_cast<std::int64_t>(records.size()); }

    std::int64_t count(bool primitive, bool essential, int si) const {
        std::int64_t n = 0;
        for (const auto& r : records)
            if (r.primitive == primitive && r.essential == essential && r.si == si) ++n;
        return n;
    }

    std::int64_t count_primitive() const {
        std::int64_t n = 0;
        for (const auto& r : records) n += r.primitive;
        return n;
    }

    // simple primitive essential curves
    std::int64_t count_simple() const { return count(true, true, 0); }
    std::int64_t count_si1() const { return count(true, true, 1); }

    // simple multicurves: primitive simple essential plus non-primitive
    // classes whose primitive root is simple and essential
    std::int64_t count_simple_multicurve() const {
        std::int64_t n = 0;
        for (const auto& r : records)
            if (r.root_essential && r.si == 0) ++n;
        return n;
    }

    // classes with exactly one self-intersection as curves: primitive with
    // one linking class, or squares of simple essential roots
    std::int64_t count_si1_all() const {
        std::int64_t n = 0;
        for (const auto& r : records) {
            if (!r.root_essential) continue;
            if (r.primitive ? r.si == 1 : (r.multiplicity == 2 && r.si == 0)) ++n;
        }
        return n;
    }
};

namespace detail {

inline CensusRecord make_record(const CyclicWord& w) {
    CensusRecord rec{w, false, false, false, 1, 0};
    const auto [root, mult] = primitive_root(w);
    rec.primitive = mult == 1;
    rec.multiplicity = mult;
    rec.essential = is_essential(w);
    rec.root_essential = is_essential(root);
    rec.si = self_intersection(root);
    return rec;
}

// Shard leader: with depth-3 prefixes the canonical-first-letter prune
// leaves at most 3 * 16 prefixes, enough granularity for any sane core
// count while keeping the merge deterministic (shards are emitted in
// lexicographic order, and each shard's output already is).
inline std::vector<LetterSeq> census_prefixes(int L) {
    std::vector<LetterSeq> out;
    const int depth = std::min(L, 3);
    LetterSeq seq;
    const std::function<void(int)> rec = [&](int d) {
        if (d == depth) {
            out.push_back(seq);
            return;
        }
        for (int c = 0; c < 4; ++c) {
            const Letter x = static_cast<Letter>(c);
            if (!seq.empty() && x == inverse(seq.back())) continue;
            if (!seq.empty() && static_cast<int>(x) < static_cast<int>(seq.front())) continue;
            seq.push_back(x);
            rec(d + 1);
            seq.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace detail

// Full census at length L. jobs <= 0 selects the hardware concurrency. The
// result is deterministic: records are sorted by canonical representative
// regardless of the worker count.
inline CensusTable census(int L, int jobs = 0, int length_cap = kCensusLengthCap) {
    if (L < 1) throw std::invalid_argument("L must be positive");
    if (L > length_cap)
        throw std::invalid_argument("census length " + std::to_string(L) +
                                    " exceeds the cap of " + std::to_string(length_cap));
    if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    const auto prefixes = detail::census_prefixes(L);
    std::vector<std::vector<CensusRecord>> shard(prefixes.size());

    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= prefixes.size()) return;
            LetterSeq seq = prefixes[k];
            seq.reserve(static_cast<std::size_t>(L));
            detail::enumerate_from(seq, static_cast<std::size_t>(L),
                                   [&](const CyclicWord& w) {
                                       shard[k].push_back(detail::make_record(w));
                                   });
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CensusTable table;
    table.length = L;
    for (auto& s : shard)
        table.records.insert(table.records.end(), std::make_move_iterator(s.begin()),
                             std::make_move_iterator(s.end()));
    std::sort(table.records.begin(), table.records.end(),
              [](const CensusRecord& p, const CensusRecord& q) { return p.word < q.word; });
    return table;
}

// One line per class: length, compact word, primitive/essential flags, and
// the self-intersection (written "-" for non-primitive classes, where the
// recorded value refers to the primitive root).
inline std::string census_tsv(const CensusTable& table) {
    std::string out = "length\tword\tprimitive\tessential\tsi\n";
    for (const auto& r : table.records) {
        out += std::to_string(table.length);
        out += '\t';
        out += to_string(r.word);
        out += '\t';
        out += r.primitive ? '1' : '0';
        out += '\t';
        out += r.essential ? '1' : '0';
        out += '\t';
        if (r.primitive)
            out += std::to_string(r.si);
        else
            out += '-';
        out += '\n';
    }
    return out;
}

inline std::string census_filename(int L) { return "census-L" + std::to_string(L) + ".tsv"; }

inline void write_census_file(const CensusTable& table, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream f(dir / census_filename(table.length), std::ios::binary);
    if (!f) throw std::runtime_error("cannot open census output file");
    f << census_tsv(table);
}

}  // namespace curves
