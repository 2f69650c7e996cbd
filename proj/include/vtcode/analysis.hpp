#pragma once

// Redundancy bounds and run statistics.
//
// All logarithms are base 2, including the log n inside the lower bound and
// the run threshold.

#include "vtcode/core.hpp"
#include "vtcode/vt_code.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <vector>

namespace vtcode {

/// log2(n+1) + log2(3): redundancy achieved by the best VT_{a1,a2}(n) class.
inline double upper_bound(std::size_t n)
{
    return std::log2(static_cast<double>(n) + 1.0) + std::log2(3.0);
}

/// log2(n - 1 - 2 sqrt((n-1) log2 n)), the redundancy any code correcting
/// ordered deletion-erasures needs for large n. Empty when the argument of
/// the outer log is not above 1.
inline std::optional<double> lower_bound(std::size_t n)
{
    const double m = static_cast<double>(n) - 1.0;
    const double arg = m - 2.0 * std::sqrt(m * std::log2(static_cast<double>(n)));
    if (!(arg > 1.0)) {
        return std::nullopt;
    }
    return std::log2(arg);
}

/// Number of maximal runs, 1 + #{i : x_i != x_{i+1}}.
inline std::size_t run_count(const Word& x) noexcept
{
    const auto& b = x.bits();
    std::size_t q = 1;
    for (std::size_t i = 1; i < b.size(); ++i) {
        q += b[i] != b[i - 1];
    }
    return q;
}

/// (n-1)/2 - sqrt(2 (n-1) log2 n). Words with at least this many runs form
/// the set U_n.
inline double run_threshold(std::size_t n)
{
    const double m = static_cast<double>(n) - 1.0;
    return m / 2.0 - std::sqrt(2.0 * m * std::log2(static_cast<double>(n)));
}

struct RunStatistics {
    std::size_t n = 0;
    std::uint64_t words = 0;      ///< 2^n
    std::uint64_t total_runs = 0; ///< sum of Q(x) over {0,1}^n
    std::uint64_t in_un = 0;      ///< #U_n
    double threshold = 0.0;

    double mean_runs() const { return static_cast<double>(total_runs) / static_cast<double>(words); }

    /// Mean of Q equals (n+1)/2, compared exactly in integers.
    bool mean_is_exact() const { return 2 * total_runs == (n + 1) * words; }

    double un_fraction() const { return static_cast<double>(in_un) / static_cast<double>(words); }

    /// 1 - 4/n^2, the large-n guarantee for the U_n fraction.
    double un_guarantee() const
    {
        const auto nd = static_cast<double>(n);
        return 1.0 - 4.0 / (nd * nd);
    }

    bool un_guarantee_holds() const { return un_fraction() >= un_guarantee(); }
};

/// Exhaustive run statistics over {0,1}^n.
inline RunStatistics run_statistics(std::size_t n, std::size_t cap = kDefaultEnumerationCap)
{
    if (n < kMinLength) {
        throw std::invalid_argument("n must be at least 3");
    }
    detail::check_cap(n, cap);
    RunStatistics stats;
    stats.n = n;
    stats.threshold = run_threshold(n);
    stats.words = std::uint64_t{1} << n;
    const std::uint64_t inner = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t v = 0; v < stats.words; ++v) {
        // adjacent unequal pairs are the set bits of v ^ (v >> 1) below bit n-1
        const auto q = 1 + static_cast<std::uint64_t>(std::popcount((v ^ (v >> 1)) & inner));
        stats.total_runs += q;
        stats.in_un += static_cast<double>(q) >= stats.threshold;
    }
    return stats;
}

/// #U_n / 2^n by exhaustive count.
inline double un_fraction(std::size_t n, std::size_t cap = kDefaultEnumerationCap)
{
    return run_statistics(n, cap).un_fraction();
}

struct BoundsRow {
    std::size_t n = 0;
    double upper_bits = 0.0;
    std::optional<double> lower_bits;
    std::optional<double> gap_bits;
};

inline BoundsRow bounds_row(std::size_t n)
{
    if (n < kMinLength) {
        throw std::invalid_argument("n must be at least 3");
    }
    BoundsRow row{n, upper_bound(n), lower_bound(n), std::nullopt};
    if (row.lower_bits) {
        row.gap_bits = row.upper_bits - *row.lower_bits;
    }
    return row;
}

inline std::vector<BoundsRow> bounds_table(const std::vector<std::size_t>& n_values)
{
    std::vector<BoundsRow> rows;
    rows.reserve(n_values.size());
    for (auto n : n_values) {
        rows.push_back(bounds_row(n));
    }
    return rows;
}

/// start, start*factor, start*factor^2, ... up to and including stop.
inline std::vector<std::size_t> geometric_grid(std::size_t start, std::size_t stop,
                                               std::size_t factor)
{
    if (start == 0 || factor < 2) {
        throw std::invalid_argument("geometric grid needs start >= 1 and factor >= 2");
    }
    std::vector<std::size_t> out;
    for (std::size_t n = start; n <= stop; n *= factor) {
        out.push_back(n);
        if (n > stop / factor) {
            break;
        }
    }
    return out;
}

/// CSV with header `n,upper_bits,lower_bits,gap_bits`; undefined values are
/// empty fields, numbers have 6 decimals.
inline void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows)
{
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << "n,upper_bits,lower_bits,gap_bits\n" << std::fixed << std::setprecision(6);
    for (const auto& r : rows) {
        out << r.n << ',' << r.upper_bits << ',';
        if (r.lower_bits) {
            out << *r.lower_bits;
        }
        out << ',';
        if (r.gap_bits) {
            out << *r.gap_bits;
        }
        out << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

} // namespace vtcode
