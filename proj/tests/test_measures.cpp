#include "oracles.hpp"

#include "wordcx/error.hpp"
#include "wordcx/measures.hpp"
#include "wordcx/words.hpp"

#include <doctest.h>

#include <limits>
#include <random>

using namespace wordcx;

namespace {

std::vector<Int> column(const CumulativeTable& t)
{
    std::vector<Int> out;
    for (std::size_t i = 0; i <= t.length(); ++i)
        out.push_back(t.at(i, 0));
    return out;
}

} // namespace

TEST_CASE("Parikh vectors")
{
    Alphabet s01(scalars({0, 1}));
    CHECK(mu_parikh(s01).apply(scalars({0, 1, 1})) == Vec{1, 2});
    CHECK(mu_parikh(s01).apply(scalars({0, 1})) == Vec{1, 1});

    Alphabet s0123(scalars({0, 1, 2, 3}));
    CHECK(mu_parikh(s0123).apply(scalars({1, 2, 0, 3})) == Vec{1, 1, 1, 1});
    CHECK(mu_parikh(s0123).target_dimension() == 4);
}

TEST_CASE("morphism validation")
{
    Alphabet s(scalars({0, 1}));
    CHECK_THROWS_AS(MorphismMu(s, {{1}}), InputError);
    CHECK_THROWS_AS(MorphismMu(s, {{1}, {1, 2}}), InputError);
    CHECK_THROWS_AS(mu_additive(s).image(Letter::scalar(5)), InputError);
    CHECK(mu_additive(Alphabet({Letter{{1, 2}}})).image(Letter{{1, 2}}) == Vec{1, 2});
}

TEST_CASE("cumulative tables")
{
    auto w = WordSource::periodic(scalars({0, 1})).prefix(4);
    CHECK(column(accumulate(mu_additive(Alphabet(scalars({0, 1}))), w)) == std::vector<Int>{0, 0, 1, 1, 2});

    FiniteWord t{scalars({1, 2, 0, 3})};
    CHECK(column(accumulate(mu_additive(Alphabet::sorted_from(t.letters)), t)) ==
          std::vector<Int>{0, 1, 3, 3, 6});
}

TEST_CASE("factor values")
{
    auto w = WordSource::periodic(scalars({0, 1})).prefix(10);
    auto table = accumulate(mu_additive(Alphabet(scalars({0, 1}))), w);
    CHECK(factor_value(table, {1, 2}) == Vec{1});
    CHECK(factor_value(table, {2, 2}) == Vec{1});
    CHECK(factor_value(table, {10, 1}) == Vec{1});
    CHECK_THROWS_AS(factor_value(table, {10, 2}), RangeError);
    CHECK_THROWS_AS(factor_value(table, {0, 1}), RangeError);

    auto c = WordSource::champernowne_binary().prefix(12);
    auto ct = accumulate(mu_additive(Alphabet(scalars({0, 1}))), c);
    CHECK(factor_value(ct, {1, 12}) == Vec{7});
}

TEST_CASE("tables agree with direct summation")
{
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        oracle::Word w;
        for (int i = 0; i < 60; ++i)
            w.push_back(Letter{{Int(gen() % 9) - 4, Int(gen() % 3)}});
        auto alphabet = Alphabet::sorted_from(w);
        oracle::Word letters = alphabet.letters();
        // A custom map to Z^3 with arbitrary images.
        std::vector<Vec> images;
        std::map<Letter, Vec> m;
        for (const auto& a : letters) {
            Vec v{Int(gen() % 11) - 5, Int(gen() % 11) - 5, Int(gen() % 11) - 5};
            images.push_back(v);
            m[a] = v;
        }
        MorphismMu mu(alphabet, images);
        auto table = accumulate(mu, FiniteWord{w});
        auto parikh = accumulate(mu_parikh(alphabet), FiniteWord{w});
        auto sums = accumulate(mu_additive(alphabet), FiniteWord{w});
        for (std::size_t start = 1; start <= w.size(); start += 3)
            for (std::size_t len = 1; start + len - 1 <= w.size(); len += 2) {
                REQUIRE(factor_value(table, {start, len}) == oracle::image(w, m, start - 1, len));
                REQUIRE(factor_value(parikh, {start, len}) == oracle::parikh(w, letters, start - 1, len));
                REQUIRE(factor_value(sums, {start, len}) == oracle::block_sum(w, start - 1, len));
            }
    }
}

TEST_CASE("mu is additive on concatenations")
{
    std::mt19937_64 gen(11);
    Alphabet s(scalars({-2, 0, 5}));
    MorphismMu mu(s, {{1, -1}, {0, 4}, {3, 3}});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Letter> a, b;
        for (int i = 0, n = int(gen() % 8); i < n; ++i)
            a.push_back(s[gen() % 3]);
        for (int i = 0, n = int(gen() % 8); i < n; ++i)
            b.push_back(s[gen() % 3]);
        auto ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        auto va = mu.apply(a), vb = mu.apply(b);
        REQUIRE(mu.apply(ab) == Vec{va[0] + vb[0], va[1] + vb[1]});
    }
}

TEST_CASE("prefix sums overflow loudly")
{
    const Int big = std::numeric_limits<Int>::max() / 2 + 1;
    FiniteWord w{scalars({big, big})};
    CHECK_THROWS_AS(accumulate(mu_additive(Alphabet::sorted_from(w.letters)), w), OverflowError);
}
