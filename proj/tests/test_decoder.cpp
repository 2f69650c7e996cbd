#include "vtcode/channel.hpp"
#include "vtcode/decoder.hpp"
#include "vtcode/vt_code.hpp"

#include "brute_force.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vtcode;

TEST(Discrepancy, Examples)
{
    // codeword 1001 of (4,2,0), d=2, e=2
    EXPECT_EQ(discrepancy(parse_received("1?1", 4), {4, 2, 0}), 0);
    // 10110 has weight 3, so a1 = 0; deleting x_1 = 1 leaves weight 2
    EXPECT_EQ(discrepancy(parse_received("0110", 5), {5, 0, 2}), 1);
    EXPECT_EQ(discrepancy(parse_received("0000", 5), {5, 0, 0}), 0);
    EXPECT_EQ(discrepancy(parse_received("11?1", 5), {5, 1, 0}), 1);
    EXPECT_THROW(discrepancy(parse_received("0000", 5), {4, 0, 0}), std::invalid_argument);
}

TEST(ChecksumFk, Examples)
{
    const CodeParams params{4, 2, 0};
    const auto y = parse_received("1?1", 4);
    // 2*y_1 + 4*y_3
    EXPECT_EQ(checksum_fk(y, 1, {0, 0}, params), 6);
    // 1*y_1 + 4*y_3, which is 0 mod 5
    EXPECT_EQ(checksum_fk(y, 2, {0, 0}, params), 5);
    // inserted bit and erased bit weights
    EXPECT_EQ(checksum_fk(y, 1, {1, 1}, params), 6 + 1 + 3);

    const auto zeros = parse_received("000000", 7);
    for (std::size_t k = 1; k <= 7; ++k) {
        EXPECT_EQ(checksum_fk(zeros, k, {0, 0}, {7, 0, 0}), 0);
    }
    EXPECT_THROW(checksum_fk(y, 0, {0, 0}, params), std::out_of_range);
    EXPECT_THROW(checksum_fk(y, 3, {0, 0}, params), std::out_of_range);
}

TEST(ChecksumFk, NoErasureIgnoresErasedBitGuess)
{
    const auto y = parse_received("0110", 5);
    for (std::size_t k = 1; k <= 5; ++k) {
        EXPECT_EQ(checksum_fk(y, k, {1, 1}, {5, 0, 0}), checksum_fk(y, k, {1, 0}, {5, 0, 0}));
    }
}

TEST(ChecksumStep, Examples)
{
    EXPECT_EQ(checksum_step(6, 1, Symbol::one, {0, 0}), 5);
    EXPECT_EQ(checksum_step(6, 2, Symbol::erased, {1, 0}), 7);
    EXPECT_EQ(checksum_step(6, 2, Symbol::erased, {0, 1}), 6);
    EXPECT_EQ(checksum_step(9, 3, Symbol::one, {1, 0}), 9);
    EXPECT_EQ(checksum_step(9, 3, Symbol::zero, {0, 1}), 9);
}

TEST(ChecksumStep, MatchesDirectEvaluation)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 3 + rng() % 40;
        std::string text(n - 1, '0');
        for (auto& c : text) {
            c = (rng() & 1) ? '1' : '0';
        }
        if (rng() % 4 != 0) {
            text[rng() % (n - 1)] = '?';
        }
        const auto y = parse_received(text, n);
        const BitHypothesis hyp{static_cast<std::uint8_t>(rng() & 1),
                                static_cast<std::uint8_t>(rng() & 1)};
        const CodeParams params{n, 0, 0};
        auto f = checksum_fk(y, 1, hyp, params);
        for (std::size_t k = 1; k < y.erasure_index(); ++k) {
            f = checksum_step(f, k, y.at(k), hyp);
            ASSERT_EQ(f, checksum_fk(y, k + 1, hyp, params)) << text << " k=" << k + 1;
        }
    }
}

TEST(Decode, Examples)
{
    const auto out = decode(parse_received("1?1", 4), {4, 2, 0});
    ASSERT_TRUE(out);
    EXPECT_EQ(out.recovered().word.to_string(), "1001");
    EXPECT_EQ(out.recovered().insertion_index, 2u);
    EXPECT_EQ(out.recovered().pass, DecodePass::first);

    // 10110: weight 3 -> a1 = 0, 1+3+4 = 8 -> a2 = 2 mod 6
    const auto del = decode(parse_received("0110", 5), {5, 0, 2});
    ASSERT_TRUE(del);
    EXPECT_EQ(del.recovered().word.to_string(), "10110");
    EXPECT_EQ(del.recovered().insertion_index, 1u);
}

TEST(Decode, Failures)
{
    // Codewords of (4,2,0) are 0110 and 1001; neither ends in 00.
    const auto none = decode(parse_received("?00", 4), {4, 2, 0});
    ASSERT_FALSE(none);
    EXPECT_EQ(none.failure().reason, DecodeError::no_synchronization);

    // A single deletion cannot move the weight by 2 mod 3.
    const auto bad = decode(parse_received("000", 4), {4, 2, 0});
    ASSERT_FALSE(bad);
    EXPECT_EQ(bad.failure().reason, DecodeError::invalid_discrepancy);
    EXPECT_STREQ(to_string(bad.failure().reason), "invalid discrepancy");

    EXPECT_THROW(decode(parse_received("000", 4), {5, 2, 0}), std::invalid_argument);
    EXPECT_THROW(decode(parse_received("000", 4), {4, 2, 7}), std::invalid_argument);
}

namespace {

// Sweeps every codeword and pattern, checking recovery, the insertion point
// against the run of the deleted bit, and that the first pass never
// synchronizes when the mixed case is (x_d, x_{e+1}) = (0, 1).
void sweep(const CodeParams& params)
{
    const auto n = params.n;
    const auto modulus = static_cast<std::int64_t>(n) + 1;
    for (const auto& x : enumerate(params).words) {
        const auto s = x.to_string();
        for (const auto& p : all_patterns(n)) {
            const auto y = corrupt(x, p);
            const auto out = decode(y, params);
            ASSERT_TRUE(out) << s << " d=" << p.d << " e=" << p.e;
            const auto& r = out.recovered();
            ASSERT_EQ(r.word, x) << s << " d=" << p.d << " e=" << p.e;
            ASSERT_TRUE(is_member(r.word, params));

            const auto [d1, d2] = reference::run_containing(s, p.d);
            ASSERT_LE(d1, r.insertion_index);
            ASSERT_LE(r.insertion_index, d2);
            ASSERT_LE(r.insertion_index, p.e);
            ASSERT_EQ(r.insertion_index, d1);

            const bool mixed = p.e < n && x.at(p.d) != x.at(p.e + 1);
            const bool second = mixed && x.at(p.d) == 0;
            ASSERT_EQ(r.pass, second ? DecodePass::second : DecodePass::first);
            if (second) {
                ASSERT_EQ(discrepancy(y, params), 1);
                for (std::size_t k = 1; k <= p.e; ++k) {
                    ASSERT_NE(mod_reduce(checksum_fk(y, k, {1, 0}, params) - params.a2, modulus),
                              0);
                }
            }
        }
    }
}

} // namespace

TEST(Decode, ExhaustiveRoundTripBestParams)
{
    for (std::size_t n = 3; n <= 12; ++n) {
        SCOPED_TRACE("n=" + std::to_string(n));
        sweep(best_params(n));
    }
}

TEST(Decode, ExhaustiveRoundTripAllParams)
{
    for (std::size_t n = 3; n <= 8; ++n) {
        for (int a1 = 0; a1 < 3; ++a1) {
            for (std::int64_t a2 = 0; a2 <= static_cast<std::int64_t>(n); ++a2) {
                SCOPED_TRACE("n=" + std::to_string(n) + " a1=" + std::to_string(a1) +
                             " a2=" + std::to_string(a2));
                sweep({n, a1, a2});
            }
        }
    }
}

TEST(Decode, FlippedBitsDoNotCrash)
{
    const auto params = best_params(10);
    for (const auto& x : enumerate(params).words) {
        for (const auto& p : all_patterns(10)) {
            auto text = corrupt(x, p).to_string();
            for (auto& c : text) {
                if (c == '?') {
                    continue;
                }
                c = c == '0' ? '1' : '0';
                const auto out = decode(parse_received(text, 10), params);
                if (out) {
                    ASSERT_TRUE(is_member(out.recovered().word, params));
                }
                c = c == '0' ? '1' : '0';
            }
        }
    }
}
