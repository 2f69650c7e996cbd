#pragma once

// The two-parameter Varshamov-Tenengolts code
//
//   VT_{a1,a2}(n) = { x in {0,1}^n : sum x_i = a1 (mod 3),
//                                    sum i*x_i = a2 (mod n+1) }.

#include "vtcode/core.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <vector>

namespace vtcode {

/// Default largest n for which 2^n enumeration is attempted.
inline constexpr std::size_t kDefaultEnumerationCap = 28;

/// Word weight sum x_i and weighted checksum sum i*x_i, without reduction.
struct Checksums {
    std::int64_t weight = 0;
    std::int64_t weighted = 0;
};

inline Checksums checksums(const Word& x) noexcept
{
    Checksums c;
    const auto& bits = x.bits();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        c.weight += bits[i];
        c.weighted += static_cast<std::int64_t>(i + 1) * bits[i];
    }
    return c;
}

/// The (a1, a2) class a word falls into.
inline CodeParams params_of(const Word& x)
{
    const auto n = x.size();
    const auto c = checksums(x);
    return CodeParams{n, static_cast<int>(mod_reduce(c.weight, 3)),
                      mod_reduce(c.weighted, static_cast<std::int64_t>(n) + 1)};
}

inline bool is_member(const Word& x, const CodeParams& params)
{
    if (x.size() != params.n) {
        throw std::invalid_argument("word length " + std::to_string(x.size()) +
                                    " does not match n = " + std::to_string(params.n));
    }
    const auto c = checksums(x);
    return mod_reduce(c.weight, 3) == params.a1 &&
           mod_reduce(c.weighted, static_cast<std::int64_t>(params.n) + 1) == params.a2;
}

struct Codebook {
    CodeParams params;
    std::vector<Word> words; // sorted lexicographically

    std::size_t size() const noexcept { return words.size(); }
    bool empty() const noexcept { return words.empty(); }
};

namespace detail {

inline void check_cap(std::size_t n, std::size_t cap)
{
    if (n > cap) {
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                          std::to_string(cap) + " (2^n words would be scanned)");
    }
}

// Bit j of the integer v holds x_{n-j}, so counting v upward visits words
// in lexicographic order. sum i*x_i = n*|v| - sum_j j*v_j, and the second
// term is a sum over bit planes of the index.
inline std::int64_t weighted_sum_msb_first(std::uint64_t v, std::size_t n) noexcept
{
    static constexpr std::array<std::uint64_t, 6> kPlanes = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    std::int64_t low = 0;
    for (std::size_t t = 0; t < kPlanes.size(); ++t) {
        low += static_cast<std::int64_t>(std::popcount(v & kPlanes[t])) << t;
    }
    return static_cast<std::int64_t>(n) * std::popcount(v) - low;
}

inline Word word_from_msb_first(std::uint64_t v, std::size_t n)
{
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    }
    return Word(std::move(bits));
}

} // namespace detail

/// All members of VT_{a1,a2}(n), sorted. Refuses n above `cap`.
inline Codebook enumerate(const CodeParams& params, std::size_t cap = kDefaultEnumerationCap)
{
    params.validate();
    detail::check_cap(params.n, cap);
    if (params.n >= 64) {
        throw CapExceeded("enumeration is limited to n < 64");
    }
    const auto n = params.n;
    const auto modulus = static_cast<std::int64_t>(n) + 1;
    Codebook book{params, {}};
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < total; ++v) {
        if (std::popcount(v) % 3 != params.a1) {
            continue;
        }
        if (detail::weighted_sum_msb_first(v, n) % modulus != params.a2) {
            continue;
        }
        book.words.push_back(detail::word_from_msb_first(v, n));
    }
    return book;
}

/// Size of every class: result[a1][a2] = #VT_{a1,a2}(n). Counted by dynamic
/// programming over prefixes, so nothing is enumerated.
inline std::vector<std::vector<std::uint64_t>> class_sizes(std::size_t n,
                                                          std::size_t cap = kDefaultEnumerationCap)
{
    if (n < kMinLength) {
        throw std::invalid_argument("n must be at least 3");
    }
    detail::check_cap(n, cap);
    if (n >= 64) {
        throw CapExceeded("class sizes overflow 64-bit counts for n >= 64");
    }
    const std::size_t m = n + 1;
    // count[w][s]: prefixes with weight = w (mod 3) and weighted sum = s (mod m)
    std::vector<std::vector<std::uint64_t>> count(3, std::vector<std::uint64_t>(m, 0));
    count[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        auto next = count;
        for (std::size_t w = 0; w < 3; ++w) {
            for (std::size_t s = 0; s < m; ++s) {
                next[(w + 1) % 3][(s + i) % m] += count[w][s];
            }
        }
        count = std::move(next);
    }
    return count;
}

/// Parameters of a largest class; ties go to the lexicographically smallest
/// (a1, a2). The pigeonhole principle guarantees at least 2^n / (3(n+1))
/// members.
inline CodeParams best_params(std::size_t n, std::size_t cap = kDefaultEnumerationCap)
{
    const auto sizes = class_sizes(n, cap);
    CodeParams best{n, 0, 0};
    std::uint64_t best_size = 0;
    for (int a1 = 0; a1 < 3; ++a1) {
        for (std::size_t a2 = 0; a2 <= n; ++a2) {
            if (sizes[a1][a2] > best_size) {
                best_size = sizes[a1][a2];
                best = CodeParams{n, a1, static_cast<std::int64_t>(a2)};
            }
        }
    }
    return best;
}

/// R(C) = n - log2 #C, in bits.
inline double redundancy(std::size_t n, std::size_t code_size)
{
    if (code_size == 0) {
        throw std::invalid_argument("redundancy of an empty code is undefined");
    }
    return static_cast<double>(n) - std::log2(static_cast<double>(code_size));
}

inline double redundancy(const Codebook& book) { return redundancy(book.params.n, book.size()); }

/// Header line `n=<n> a1=<a1> a2=<a2>` followed by one word per line.
inline void write_codebook(std::ostream& out, const Codebook& book)
{
    out << "n=" << book.params.n << " a1=" << book.params.a1 << " a2=" << book.params.a2
        << '\n';
    for (const auto& w : book.words) {
        out << w.to_string() << '\n';
    }
}

} // namespace vtcode
