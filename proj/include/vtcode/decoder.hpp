#pragma once

// Decoder for one deletion followed by at most one erasure.
//
// The receiver knows the erasure position e but not the deletion position d.
// The mod-3 weight constraint reveals the values of the deleted and erased
// bits (up to the order in the mixed case); the decoder then slides a
// candidate insertion point k = 1, 2, ..., e and recomputes the weighted
// checksum of the candidate word
//
//   f_k(y) = sum_{i<k} i*y_i + k*xd + sum_{i>=k, i!=e} (i+1)*y_i + (e+1)*xe
//
// until it matches a2 modulo n+1. A match happens exactly when the hypothesis
// is right and k lies inside the run of x that contained the deleted bit, so
// inserting there reproduces x. f_{k+1} - f_k = xd - y_k, so each pass costs
// O(n).
//
// Checksums are exact 64-bit integers; f_k < (n+1)^2, so any n below about
// 3e9 is safe.

#include "vtcode/core.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace vtcode {

/// Guessed values of the deleted bit x_d and the erased bit x_{e+1}.
struct BitHypothesis {
    std::uint8_t xd_hat = 0;
    std::uint8_t xe1_hat = 0;

    friend bool operator==(const BitHypothesis&, const BitHypothesis&) = default;
};

/// Which hypothesis produced the result. Only the mixed case (one deleted
/// and one erased bit differing) ever needs the second pass.
enum class DecodePass { first, second };

enum class DecodeError { no_synchronization, invalid_discrepancy };

inline const char* to_string(DecodeError e) noexcept
{
    switch (e) {
    case DecodeError::no_synchronization: return "no synchronization";
    case DecodeError::invalid_discrepancy: return "invalid discrepancy";
    }
    return "unknown";
}

struct Recovered {
    Word word;
    std::size_t insertion_index = 0; ///< smallest synchronizing k, 1 <= k <= e
    DecodePass pass = DecodePass::first;
};

struct DecodeFailure {
    DecodeError reason = DecodeError::no_synchronization;
};

class DecodeOutcome {
public:
    DecodeOutcome(Recovered r) : value_(std::move(r)) {}
    DecodeOutcome(DecodeFailure f) : value_(f) {}

    bool ok() const noexcept { return std::holds_alternative<Recovered>(value_); }
    explicit operator bool() const noexcept { return ok(); }

    const Recovered& recovered() const { return std::get<Recovered>(value_); }
    const DecodeFailure& failure() const { return std::get<DecodeFailure>(value_); }

private:
    std::variant<Recovered, DecodeFailure> value_;
};

namespace detail {

inline void check_shape(const ReceivedWord& y, const CodeParams& params)
{
    if (y.n() != params.n) {
        throw std::invalid_argument("received word has length " +
                                    std::to_string(y.symbols().size()) + ", expected n-1 = " +
                                    std::to_string(params.n - 1));
    }
}

} // namespace detail

/// D(y) = (a1 - sum_{i != e} y_i) mod 3.
inline int discrepancy(const ReceivedWord& y, const CodeParams& params)
{
    detail::check_shape(y, params);
    std::int64_t sum = 0;
    for (auto s : y.symbols()) {
        sum += bit_value(s);
    }
    return static_cast<int>(mod_reduce(params.a1 - sum, 3));
}

/// f_k(y) for 1 <= k <= e, unreduced. Without an erasure e = n and the
/// erased-bit term is absent (xe1_hat is ignored).
inline std::int64_t checksum_fk(const ReceivedWord& y, std::size_t k, const BitHypothesis& hyp,
                                const CodeParams& params)
{
    detail::check_shape(y, params);
    const auto e = y.erasure_index();
    if (k < 1 || k > e) {
        throw std::out_of_range("k = " + std::to_string(k) + " outside [1, " +
                                std::to_string(e) + "]");
    }
    const auto n = params.n;
    std::int64_t f = static_cast<std::int64_t>(k) * hyp.xd_hat;
    for (std::size_t i = 1; i <= n - 1; ++i) {
        const auto weight = i < k ? i : i + 1;
        f += static_cast<std::int64_t>(weight) * bit_value(y.at(i));
    }
    if (y.has_erasure()) {
        f += static_cast<std::int64_t>(e + 1) * hyp.xe1_hat;
    }
    return f;
}

/// f_{k+1} from f_k: moving the insertion point past y_k lowers y_k's weight
/// by one and raises the inserted bit's weight by one.
constexpr std::int64_t checksum_step(std::int64_t fk, std::size_t /*k*/, Symbol y_k,
                                     const BitHypothesis& hyp) noexcept
{
    return fk + hyp.xd_hat - (y_k == Symbol::one ? 1 : 0);
}

namespace detail {

inline Word insert_estimate(const ReceivedWord& y, std::size_t k, const BitHypothesis& hyp)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(y.n());
    for (std::size_t i = 1; i <= y.n() - 1; ++i) {
        if (i == k) {
            bits.push_back(hyp.xd_hat);
        }
        const auto s = y.at(i);
        bits.push_back(s == Symbol::erased ? hyp.xe1_hat : static_cast<std::uint8_t>(s));
    }
    if (k == y.n()) {
        bits.push_back(hyp.xd_hat);
    }
    return Word(std::move(bits));
}

} // namespace detail

/// Recovers x from y = F_{d,e}(x) for x in VT_{a1,a2}(n). Inputs that no
/// codeword could have produced give a DecodeFailure (or, outside the
/// channel model, possibly a different codeword) but never throw; only a
/// length mismatch with `params` throws.
inline DecodeOutcome decode(const ReceivedWord& y, const CodeParams& params)
{
    params.validate();
    detail::check_shape(y, params);

    const int d = discrepancy(y, params);
    std::vector<BitHypothesis> passes;
    if (!y.has_erasure()) {
        // A lone deletion moves the weight by at most one.
        if (d == 2) {
            return DecodeFailure{DecodeError::invalid_discrepancy};
        }
        passes.push_back({static_cast<std::uint8_t>(d), 0});
    } else if (d == 0) {
        passes.push_back({0, 0});
    } else if (d == 2) {
        passes.push_back({1, 1});
    } else {
        passes.push_back({1, 0});
        passes.push_back({0, 1});
    }

    const auto e = y.erasure_index();
    const auto modulus = static_cast<std::int64_t>(params.n) + 1;
    for (std::size_t p = 0; p < passes.size(); ++p) {
        const auto& hyp = passes[p];
        auto f = checksum_fk(y, 1, hyp, params);
        for (std::size_t k = 1; k <= e; ++k) {
            if (mod_reduce(f - params.a2, modulus) == 0) {
                return Recovered{detail::insert_estimate(y, k, hyp), k,
                                 p == 0 ? DecodePass::first : DecodePass::second};
            }
            if (k < e) {
                f = checksum_step(f, k, y.at(k), hyp);
            }
        }
    }
    return DecodeFailure{DecodeError::no_synchronization};
}

} // namespace vtcode
