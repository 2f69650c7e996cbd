#pragma once

// Brute-force checks of the correction capability. Nothing here uses the
// decoder's checksum machinery: the capability checks only run the channel
// and compare outputs, so they stay an independent witness for decode().

#include "vtcode/analysis.hpp"
#include "vtcode/channel.hpp"
#include "vtcode/core.hpp"
#include "vtcode/decoder.hpp"
#include "vtcode/vt_code.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vtcode {

/// Default bound on #code^2 * n^2 for the exhaustive sweeps.
inline constexpr double kDefaultSweepLimit = 1e9;

struct PreimageSet {
    std::vector<std::pair<Word, CorruptionPattern>> candidates;

    /// Distinct candidate words, sorted.
    std::vector<Word> words() const
    {
        std::vector<Word> out;
        for (const auto& [w, p] : candidates) {
            out.push_back(w);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

/// Every (codeword, pattern) pair whose channel output equals y. Only
/// patterns with the erasure parameter of y are tried.
inline PreimageSet brute_force_decode(const ReceivedWord& y, std::span<const Word> code)
{
    PreimageSet set;
    const auto n = y.n();
    const auto e = y.erasure_index();
    for (const auto& x : code) {
        if (x.size() != n) {
            continue;
        }
        for (std::size_t d = 1; d <= e; ++d) {
            const CorruptionPattern p{d, e};
            if (corrupt(x, p) == y) {
                set.candidates.emplace_back(x, p);
            }
        }
    }
    return set;
}

inline PreimageSet brute_force_decode(const ReceivedWord& y, const Codebook& book)
{
    return brute_force_decode(y, std::span<const Word>(book.words));
}

/// A failing (x1, x2, d, e) record. For decoder checks x2 is what the
/// decoder produced (absent when it reported failure).
struct Violation {
    Word x1;
    std::optional<Word> x2;
    CorruptionPattern pattern;

    std::string render() const
    {
        return "FAIL x1=" + x1.to_string() + " x2=" + (x2 ? x2->to_string() : "none") +
               " d=" + std::to_string(pattern.d) + " e=" + std::to_string(pattern.e);
    }
};

struct Report {
    std::optional<Violation> violation;

    bool pass() const noexcept { return !violation.has_value(); }

    std::string render() const { return pass() ? "PASS" : violation->render(); }
};

namespace detail {

inline void check_sweep(std::size_t code_size, std::size_t n, double limit)
{
    const double steps = static_cast<double>(code_size) * static_cast<double>(code_size) *
                         static_cast<double>(n) * static_cast<double>(n);
    if (steps > limit) {
        throw CapExceeded("sweep of " + std::to_string(code_size) + " words at n = " +
                          std::to_string(n) + " exceeds the step limit");
    }
}

inline std::size_t common_length(std::span<const Word> code)
{
    if (code.empty()) {
        return 0;
    }
    const auto n = code.front().size();
    for (const auto& w : code) {
        if (w.size() != n) {
            throw std::invalid_argument("code words must share one length");
        }
    }
    return n;
}

} // namespace detail

/// Checks F_{d,e}(x1) != F_{d,e}(x2) for all distinct codewords and all
/// 1 <= d <= e <= n. Reports the first collision in (d, e) order.
inline Report verify_code(std::span<const Word> code, double limit = kDefaultSweepLimit)
{
    const auto n = detail::common_length(code);
    detail::check_sweep(code.size(), n, limit);
    if (code.size() < 2) {
        return {};
    }
    for (const auto& p : all_patterns(n)) {
        std::map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < code.size(); ++i) {
            auto [it, inserted] = seen.emplace(corrupt(code[i], p).to_string(), i);
            if (!inserted && code[it->second] != code[i]) {
                return {Violation{code[it->second], code[i], p}};
            }
        }
    }
    return {};
}

inline Report verify_code(const Codebook& book, double limit = kDefaultSweepLimit)
{
    return verify_code(std::span<const Word>(book.words), limit);
}

/// Runs decode(corrupt(x, p)) for every codeword and every pattern.
inline Report verify_decoder(const Codebook& book, double limit = kDefaultSweepLimit)
{
    detail::check_sweep(book.size(), book.params.n, limit);
    for (const auto& x : book.words) {
        for (const auto& p : all_patterns(book.params.n)) {
            const auto outcome = decode(corrupt(x, p), book.params);
            if (!outcome) {
                return {Violation{x, std::nullopt, p}};
            }
            if (outcome.recovered().word != x) {
                return {Violation{x, outcome.recovered().word, p}};
            }
        }
    }
    return {};
}

struct DeletionBallReport {
    Report disjoint;                                 ///< N(x1) and N(x2) never meet
    std::optional<Word> ball_size_mismatch;          ///< first x with #N(x) != Q(x)

    bool pass() const noexcept { return disjoint.pass() && !ball_size_mismatch; }

    std::string render() const
    {
        if (!disjoint.pass()) {
            return disjoint.render();
        }
        if (ball_size_mismatch) {
            return "FAIL ball-size x=" + ball_size_mismatch->to_string();
        }
        return "PASS";
    }
};

/// Single-deletion balls N(x) = { F_{d,n}(x) : 1 <= d <= n }: checks they
/// are pairwise disjoint over the code and that #N(x) equals the run count.
inline DeletionBallReport deletion_balls_disjoint(std::span<const Word> code,
                                                  double limit = kDefaultSweepLimit)
{
    const auto n = detail::common_length(code);
    detail::check_sweep(code.size(), n, limit);
    DeletionBallReport report;
    std::map<std::string, std::size_t> owner;
    for (std::size_t i = 0; i < code.size(); ++i) {
        std::map<std::string, std::size_t> ball; // image -> first d producing it
        for (std::size_t d = 1; d <= n; ++d) {
            ball.emplace(corrupt(code[i], {d, n}).to_string(), d);
        }
        if (!report.ball_size_mismatch && ball.size() != run_count(code[i])) {
            report.ball_size_mismatch = code[i];
        }
        for (const auto& [image, d] : ball) {
            auto [it, inserted] = owner.emplace(image, i);
            if (!inserted && report.disjoint.pass() && code[it->second] != code[i]) {
                report.disjoint.violation = Violation{code[it->second], code[i], {d, n}};
            }
        }
    }
    return report;
}

inline DeletionBallReport deletion_balls_disjoint(const Codebook& book,
                                                  double limit = kDefaultSweepLimit)
{
    return deletion_balls_disjoint(std::span<const Word>(book.words), limit);
}

} // namespace vtcode
