#pragma once

// The ordered deletion-erasure channel F_{d,e}: delete x_d, then erase the
// bit that lands at position e of the shortened word (x_{e+1}). e = n means
// the deletion happens alone.

#include "vtcode/core.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace vtcode {

struct CorruptionPattern {
    std::size_t d = 1; ///< deleted position, 1 <= d <= n
    std::size_t e = 1; ///< erasure parameter, d <= e <= n

    bool valid_for(std::size_t n) const noexcept { return 1 <= d && d <= e && e <= n; }

    friend auto operator<=>(const CorruptionPattern&, const CorruptionPattern&) = default;
};

inline ReceivedWord corrupt(const Word& x, const CorruptionPattern& p)
{
    const auto n = x.size();
    if (!p.valid_for(n)) {
        throw std::invalid_argument("pattern (d=" + std::to_string(p.d) + ", e=" +
                                    std::to_string(p.e) + ") violates 1 <= d <= e <= " +
                                    std::to_string(n));
    }
    std::vector<Symbol> y(n - 1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        const auto source = i < p.d ? i : i + 1;
        y[i - 1] = static_cast<Symbol>(x.at(source));
    }
    std::optional<std::size_t> erasure;
    if (p.e <= n - 1) {
        y[p.e - 1] = Symbol::erased;
        erasure = p.e;
    }
    return ReceivedWord(std::move(y), erasure);
}

/// Every pattern 1 <= d <= e <= n, ordered by (d, e).
inline std::vector<CorruptionPattern> all_patterns(std::size_t n)
{
    std::vector<CorruptionPattern> out;
    out.reserve(n * (n + 1) / 2);
    for (std::size_t d = 1; d <= n; ++d) {
        for (std::size_t e = d; e <= n; ++e) {
            out.push_back({d, e});
        }
    }
    return out;
}

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection so the
/// result does not depend on the standard library's distribution code.
template <class Engine>
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound)
{
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine();
    } while (v >= limit);
    return v % bound;
}

/// Pattern with index `rank` in the (d, e) order of all_patterns(n).
inline CorruptionPattern unrank_pattern(std::size_t n, std::uint64_t rank)
{
    for (std::size_t d = 1; d <= n; ++d) {
        const std::size_t row = n - d + 1;
        if (rank < row) {
            return {d, d + static_cast<std::size_t>(rank)};
        }
        rank -= row;
    }
    throw std::out_of_range("pattern rank out of range");
}

template <class Engine>
CorruptionPattern random_pattern(std::size_t n, Engine& engine)
{
    return unrank_pattern(n, uniform_below(engine, n * (n + 1) / 2));
}

/// Uniform pattern for length n, drawn from std::mt19937_64 seeded with
/// `seed`.
inline CorruptionPattern random_pattern(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 engine(seed);
    return random_pattern(n, engine);
}

} // namespace vtcode
