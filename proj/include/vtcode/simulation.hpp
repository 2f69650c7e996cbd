#pragma once

// Seeded Monte Carlo round trips through the channel and the decoder.
//
// Randomness comes from one std::mt19937_64 stream seeded with the
// user's seed; bounded draws go through uniform_below(), so a given seed
// gives the same trials on every platform.

#include "vtcode/channel.hpp"
#include "vtcode/core.hpp"
#include "vtcode/decoder.hpp"
#include "vtcode/oracle.hpp"
#include "vtcode/vt_code.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace vtcode {

/// Uniform member of VT_{a1,a2}(n): draws uniform words until one satisfies
/// both congruences. Expected about 3(n+1) draws; each draw works on packed
/// 64-bit blocks. Throws for an empty class (only possible for small n).
template <class Engine>
Word sample_member(const CodeParams& params, Engine& engine, std::uint64_t* draws = nullptr)
{
    static constexpr std::array<std::uint64_t, 6> kPlanes = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    params.validate();
    const auto n = params.n;
    if (n <= kDefaultEnumerationCap && class_sizes(n)[params.a1][params.a2] == 0) {
        throw std::invalid_argument("VT_{" + std::to_string(params.a1) + "," +
                                    std::to_string(params.a2) + "}(" + std::to_string(n) +
                                    ") is empty");
    }
    const auto modulus = static_cast<std::int64_t>(n) + 1;
    const std::size_t blocks = (n + 63) / 64;
    const std::uint64_t tail_mask =
        n % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n % 64)) - 1;
    std::vector<std::uint64_t> packed(blocks);
    for (;;) {
        if (draws) {
            ++*draws;
        }
        std::int64_t weight = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            packed[b] = engine();
            if (b + 1 == blocks) {
                packed[b] &= tail_mask;
            }
            weight += std::popcount(packed[b]);
        }
        if (weight % 3 != params.a1) {
            continue;
        }
        // bit j of block b is x_{64b + j + 1}
        std::int64_t weighted = 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            weighted += static_cast<std::int64_t>(64 * b + 1) * std::popcount(packed[b]);
            for (std::size_t t = 0; t < kPlanes.size(); ++t) {
                weighted += static_cast<std::int64_t>(std::popcount(packed[b] & kPlanes[t])) << t;
            }
        }
        if (weighted % modulus != params.a2) {
            continue;
        }
        std::vector<std::uint8_t> bits(n);
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = static_cast<std::uint8_t>((packed[i / 64] >> (i % 64)) & 1u);
        }
        return Word(std::move(bits));
    }
}

/// Uniform sampler for VT_{a1,a2}(n) that only rejects prefixes.
///
/// The last `suffix_bits` positions are bucketed once by their contribution
/// to both checksums. A draw takes a uniform prefix, looks up the bucket of
/// suffixes that complete it to a member (c of them, at most c_max over all
/// buckets) and draws t uniform in [0, c_max): t < c accepts and picks
/// suffix t. Every member then has probability 2^-prefix / c_max per
/// attempt, so the result is exactly uniform, and an attempt succeeds with
/// probability (mean bucket size) / c_max instead of 1 / (3(n+1)).
class MemberSampler {
public:
    explicit MemberSampler(const CodeParams& params, std::size_t suffix_bits = 16)
        : params_(params)
    {
        params_.validate();
        const auto n = params_.n;
        if (suffix_bits < 1 || suffix_bits >= n || suffix_bits > 24) {
            throw std::invalid_argument("suffix length must be in [1, min(n-1, 24)]");
        }
        if (n <= kDefaultEnumerationCap && class_sizes(n)[params_.a1][params_.a2] == 0) {
            throw std::invalid_argument("VT_{" + std::to_string(params_.a1) + "," +
                                        std::to_string(params_.a2) + "}(" +
                                        std::to_string(n) + ") is empty");
        }
        suffix_bits_ = suffix_bits;
        prefix_bits_ = n - suffix_bits;
        const auto modulus = n + 1;
        const std::uint64_t count = std::uint64_t{1} << suffix_bits;

        // bit j of a suffix value is x_{prefix + 1 + j}
        std::vector<std::uint32_t> key(count);
        offsets_.assign(3 * modulus + 1, 0);
        for (std::uint64_t u = 0; u < count; ++u) {
            const auto ones = static_cast<std::uint64_t>(std::popcount(u));
            const std::uint64_t weighted = (prefix_bits_ + 1) * ones + plane_sum(u);
            key[u] = static_cast<std::uint32_t>((ones % 3) * modulus + weighted % modulus);
            ++offsets_[key[u] + 1];
        }
        for (std::size_t b = 1; b < offsets_.size(); ++b) {
            max_bucket_ = std::max<std::uint64_t>(max_bucket_, offsets_[b]);
            offsets_[b] += offsets_[b - 1];
        }
        suffixes_.resize(count);
        auto fill = offsets_;
        for (std::uint64_t u = 0; u < count; ++u) {
            suffixes_[fill[key[u]]++] = static_cast<std::uint32_t>(u);
        }
        prefix_.resize((prefix_bits_ + 63) / 64);
    }

    const CodeParams& params() const noexcept { return params_; }

    /// Number of prefix attempts made so far.
    std::uint64_t attempts() const noexcept { return attempts_; }

    template <class Engine>
    Word operator()(Engine& engine)
    {
        const auto n = params_.n;
        const auto modulus = static_cast<std::int64_t>(n) + 1;
        const std::size_t blocks = prefix_.size();
        const std::uint64_t tail_mask = prefix_bits_ % 64 == 0
                                            ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << (prefix_bits_ % 64)) - 1;
        for (;;) {
            ++attempts_;
            std::int64_t weight = 0;
            std::int64_t weighted = 0;
            for (std::size_t b = 0; b < blocks; ++b) {
                prefix_[b] = engine();
                if (b + 1 == blocks) {
                    prefix_[b] &= tail_mask;
                }
                const auto ones = std::popcount(prefix_[b]);
                weight += ones;
                weighted += static_cast<std::int64_t>(64 * b + 1) * ones +
                            static_cast<std::int64_t>(plane_sum(prefix_[b]));
            }
            const auto need_weight = static_cast<std::size_t>(mod_reduce(params_.a1 - weight, 3));
            const auto need_weighted =
                static_cast<std::size_t>(mod_reduce(params_.a2 - weighted, modulus));
            const auto bucket = need_weight * (n + 1) + need_weighted;
            const std::uint64_t size = offsets_[bucket + 1] - offsets_[bucket];
            const std::uint64_t t = uniform_below(engine, max_bucket_);
            if (t >= size) {
                continue;
            }
            const std::uint32_t suffix = suffixes_[offsets_[bucket] + t];
            std::vector<std::uint8_t> bits(n);
            for (std::size_t i = 0; i < prefix_bits_; ++i) {
                bits[i] = static_cast<std::uint8_t>((prefix_[i / 64] >> (i % 64)) & 1u);
            }
            for (std::size_t j = 0; j < suffix_bits_; ++j) {
                bits[prefix_bits_ + j] = static_cast<std::uint8_t>((suffix >> j) & 1u);
            }
            return Word(std::move(bits));
        }
    }

private:
    // sum of j over the set bits j of v
    static std::uint64_t plane_sum(std::uint64_t v) noexcept
    {
        static constexpr std::array<std::uint64_t, 6> kPlanes = {
            0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
            0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
        std::uint64_t sum = 0;
        for (std::size_t t = 0; t < kPlanes.size(); ++t) {
            sum += static_cast<std::uint64_t>(std::popcount(v & kPlanes[t])) << t;
        }
        return sum;
    }

    CodeParams params_;
    std::size_t suffix_bits_ = 0;
    std::size_t prefix_bits_ = 0;
    std::vector<std::uint64_t> offsets_; // bucket b holds suffixes_[offsets_[b], offsets_[b+1])
    std::vector<std::uint32_t> suffixes_;
    std::uint64_t max_bucket_ = 0;
    std::vector<std::uint64_t> prefix_;
    std::uint64_t attempts_ = 0;
};

struct SimulationReport {
    CodeParams params;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t failures = 0;
    std::uint64_t attempts = 0; ///< prefix attempts made by the sampler
    std::optional<Violation> first_failure;
};

/// `trials` independent round trips: uniform codeword, uniform pattern,
/// corrupt, decode, compare.
inline SimulationReport simulate(const CodeParams& params, std::uint64_t trials,
                                 std::uint64_t seed)
{
    params.validate();
    std::mt19937_64 engine(seed);
    MemberSampler sampler(params, std::min<std::size_t>(16, params.n / 2));
    SimulationReport report{params, trials, seed, 0, 0, std::nullopt};
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto x = sampler(engine);
        const auto p = random_pattern(params.n, engine);
        const auto outcome = decode(corrupt(x, p), params);
        if (!outcome || outcome.recovered().word != x) {
            ++report.failures;
            if (!report.first_failure) {
                report.first_failure =
                    Violation{x, outcome ? std::optional<Word>(outcome.recovered().word)
                                         : std::nullopt,
                              p};
            }
        }
    }
    report.attempts = sampler.attempts();
    return report;
}

} // namespace vtcode
