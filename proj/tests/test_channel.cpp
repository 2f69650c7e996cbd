#include "vtcode/channel.hpp"

#include "brute_force.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace vtcode;

TEST(Corrupt, Examples)
{
    // delete x_2 = 0, erase x_4 = 1
    const auto y = corrupt(parse_word("10110"), {2, 3});
    EXPECT_EQ(y.to_string(), "11?0");
    EXPECT_EQ(y.erasure_pos(), std::optional<std::size_t>(3));

    const auto z = corrupt(parse_word("10110"), {1, 5});
    EXPECT_EQ(z.to_string(), "0110");
    EXPECT_FALSE(z.has_erasure());

    const auto w = corrupt(parse_word("101"), {2, 2});
    EXPECT_EQ(w.to_string(), "1?");
    EXPECT_EQ(w.erasure_index(), 2u);
}

TEST(Corrupt, RejectsInvalidPatterns)
{
    const auto x = parse_word("10110");
    EXPECT_THROW(corrupt(x, {0, 3}), std::invalid_argument);
    EXPECT_THROW(corrupt(x, {3, 2}), std::invalid_argument);
    EXPECT_THROW(corrupt(x, {2, 6}), std::invalid_argument);
}

TEST(Corrupt, MatchesDefinitionExhaustively)
{
    for (std::size_t n = 3; n <= 9; ++n) {
        for (const auto& s : reference::all_strings(n)) {
            const auto x = parse_word(s);
            for (const auto& p : all_patterns(n)) {
                const auto y = corrupt(x, p);
                ASSERT_EQ(y.symbols().size(), n - 1);
                ASSERT_EQ(y.has_erasure(), p.e <= n - 1);
                ASSERT_EQ(y.to_string(), reference::channel(s, p.d, p.e));
                if (p.e == n) {
                    ASSERT_EQ(y.to_string(), reference::remove_index(s, p.d));
                }
            }
        }
    }
}

TEST(Corrupt, DeletingAnywhereInARunGivesTheSameWord)
{
    for (std::size_t n = 3; n <= 10; ++n) {
        for (const auto& s : reference::all_strings(n)) {
            const auto x = parse_word(s);
            for (const auto& [first, last] : reference::runs(s)) {
                for (std::size_t e = last; e <= n; ++e) {
                    const auto expected = corrupt(x, {first, e});
                    for (std::size_t d = first + 1; d <= last; ++d) {
                        ASSERT_EQ(corrupt(x, {d, e}), expected) << s << " d=" << d;
                    }
                }
            }
        }
    }
}

TEST(AllPatterns, CountAndOrder)
{
    EXPECT_EQ(all_patterns(3), (std::vector<CorruptionPattern>{
                                   {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}));
    EXPECT_EQ(all_patterns(4).size(), 10u);
    const auto p10 = all_patterns(10);
    EXPECT_EQ(p10.size(), 55u);
    EXPECT_TRUE(std::is_sorted(p10.begin(), p10.end()));
    for (std::size_t r = 0; r < p10.size(); ++r) {
        EXPECT_EQ(unrank_pattern(10, r), p10[r]);
    }
    EXPECT_THROW(unrank_pattern(10, 55), std::out_of_range);
}

TEST(RandomPattern, DeterministicAndValid)
{
    EXPECT_EQ(random_pattern(10, 42u), random_pattern(10, 42u));
    std::mt19937_64 engine(3);
    for (int i = 0; i < 100000; ++i) {
        const auto p = random_pattern(10, engine);
        ASSERT_TRUE(p.valid_for(10));
        ASSERT_LE(p.d, p.e);
    }
}

TEST(RandomPattern, UniformOverAllPatterns)
{
    constexpr int kDraws = 1000000;
    std::mt19937_64 engine(2024);
    std::map<CorruptionPattern, int> counts;
    for (int i = 0; i < kDraws; ++i) {
        ++counts[random_pattern(10, engine)];
    }
    ASSERT_EQ(counts.size(), 55u);
    const double p = 1.0 / 55.0;
    const double mean = kDraws * p;
    const double sigma = std::sqrt(kDraws * p * (1.0 - p));
    double chi2 = 0.0;
    for (const auto& [pattern, c] : counts) {
        EXPECT_LT(std::abs(c - mean), 5.0 * sigma) << pattern.d << "," << pattern.e;
        chi2 += (c - mean) * (c - mean) / mean;
    }
    // 54 degrees of freedom; 99.9th percentile is about 94.5
    EXPECT_LT(chi2, 94.5);
}
