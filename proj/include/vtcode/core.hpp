#pragma once

// Basic value types shared by the whole library.
//
// Positions are 1-based everywhere in the public API: Word::at(1) is the
// first bit x_1, and a received word of an n-length codeword has symbols
// y_1 .. y_{n-1}. Storage is 0-based (bits()[i - 1] == at(i)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vtcode {

/// Smallest word length the code is defined for.
inline constexpr std::size_t kMinLength = 3;

/// Character used for the erasure symbol in all text I/O.
inline constexpr char kErasureChar = '?';

/// Canonical residue of `value` modulo `modulus`, always in [0, modulus).
constexpr std::int64_t mod_reduce(std::int64_t value, std::int64_t modulus) noexcept
{
    const std::int64_t r = value % modulus;
    return r < 0 ? r + modulus : r;
}

/// Binary word x = (x_1, ..., x_n), n >= 3.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<std::uint8_t> bits) : bits_(std::move(bits))
    {
        if (bits_.size() < kMinLength) {
            throw std::invalid_argument("word length must be at least 3, got " +
                                        std::to_string(bits_.size()));
        }
        for (auto b : bits_) {
            if (b > 1) {
                throw std::invalid_argument("word symbols must be 0 or 1");
            }
        }
    }

    std::size_t size() const noexcept { return bits_.size(); }

    /// x_i for 1 <= i <= n.
    std::uint8_t at(std::size_t i) const { return bits_.at(i - 1); }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::string to_string() const
    {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) {
            s.push_back(b ? '1' : '0');
        }
        return s;
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

enum class Symbol : std::uint8_t { zero = 0, one = 1, erased = 2 };

inline char to_char(Symbol s) noexcept
{
    switch (s) {
    case Symbol::zero: return '0';
    case Symbol::one: return '1';
    case Symbol::erased: break;
    }
    return kErasureChar;
}

/// Binary value of a symbol; the erasure contributes nothing to checksums.
inline std::int64_t bit_value(Symbol s) noexcept { return s == Symbol::one ? 1 : 0; }

/// Output of the channel: n-1 symbols with at most one erasure at a known
/// position e (1 <= e <= n-1). Without an erasure the erasure parameter is
/// taken to be e = n.
class ReceivedWord {
public:
    ReceivedWord() = default;

    ReceivedWord(std::vector<Symbol> symbols, std::optional<std::size_t> erasure_pos)
        : symbols_(std::move(symbols)), erasure_(erasure_pos)
    {
        if (symbols_.size() + 1 < kMinLength) {
            throw std::invalid_argument("received word must have at least 2 symbols");
        }
        if (erasure_ && (*erasure_ < 1 || *erasure_ > symbols_.size())) {
            throw std::invalid_argument("erasure position out of range");
        }
        for (std::size_t i = 1; i <= symbols_.size(); ++i) {
            const bool erased = symbols_[i - 1] == Symbol::erased;
            if (erased != (erasure_ && *erasure_ == i)) {
                throw std::invalid_argument(
                    "erasure symbol must appear exactly at the erasure position");
            }
        }
    }

    /// Length n of the transmitted word.
    std::size_t n() const noexcept { return symbols_.size() + 1; }

    /// y_i for 1 <= i <= n-1.
    Symbol at(std::size_t i) const { return symbols_.at(i - 1); }

    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    bool has_erasure() const noexcept { return erasure_.has_value(); }

    std::optional<std::size_t> erasure_pos() const noexcept { return erasure_; }

    /// The erasure parameter e, with e = n when nothing was erased.
    std::size_t erasure_index() const noexcept { return erasure_.value_or(n()); }

    std::string to_string() const
    {
        std::string s;
        s.reserve(symbols_.size());
        for (auto sym : symbols_) {
            s.push_back(to_char(sym));
        }
        return s;
    }

    friend bool operator==(const ReceivedWord&, const ReceivedWord&) = default;

private:
    std::vector<Symbol> symbols_;
    std::optional<std::size_t> erasure_;
};

/// (n, a1, a2) selecting the code VT_{a1,a2}(n): sum x_i = a1 (mod 3) and
/// sum i*x_i = a2 (mod n+1).
struct CodeParams {
    std::size_t n = kMinLength;
    int a1 = 0;
    std::int64_t a2 = 0;

    void validate() const
    {
        if (n < kMinLength) {
            throw std::invalid_argument("n must be at least 3, got " + std::to_string(n));
        }
        if (a1 < 0 || a1 > 2) {
            throw std::invalid_argument("a1 must be in {0,1,2}, got " + std::to_string(a1));
        }
        if (a2 < 0 || a2 > static_cast<std::int64_t>(n)) {
            throw std::invalid_argument("a2 must be in [0, n], got " + std::to_string(a2));
        }
    }

    friend auto operator<=>(const CodeParams&, const CodeParams&) = default;
};

inline Word parse_word(std::string_view text)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("invalid character '") + c + "' in word");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(std::move(bits));
}

/// Parses n-1 characters over {'0','1','?'}; the '?' (if any) fixes the
/// erasure position.
inline ReceivedWord parse_received(std::string_view text, std::size_t n)
{
    if (n < kMinLength) {
        throw std::invalid_argument("n must be at least 3");
    }
    if (text.size() != n - 1) {
        throw std::invalid_argument("received word must have length n-1 = " +
                                    std::to_string(n - 1) + ", got " +
                                    std::to_string(text.size()));
    }
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    std::optional<std::size_t> erasure;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
        case '0': symbols.push_back(Symbol::zero); break;
        case '1': symbols.push_back(Symbol::one); break;
        case kErasureChar:
            if (erasure) {
                throw std::invalid_argument("multiple erasures in received word");
            }
            erasure = i + 1;
            symbols.push_back(Symbol::erased);
            break;
        default:
            throw std::invalid_argument(std::string("invalid character '") + text[i] +
                                        "' in received word");
        }
    }
    return ReceivedWord(std::move(symbols), erasure);
}

/// Thrown when an exhaustive operation is asked to go past its size cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace vtcode
