#include "oracles.hpp"

#include "wordcx/error.hpp"
#include "wordcx/powers.hpp"
#include "wordcx/words.hpp"

#include <doctest.h>

#include <random>

using namespace wordcx;

namespace {

SearchLimits limits_n(std::size_t n)
{
    SearchLimits l;
    l.max_prefix = n;
    return l;
}

WordSource random_word(std::uint64_t seed, std::size_t n, Int lo, Int hi)
{
    std::mt19937_64 gen(seed);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < n; ++i)
        letters.push_back(Letter::scalar(lo + Int(gen() % std::uint64_t(hi - lo + 1))));
    return WordSource::explicit_word(letters);
}

} // namespace

TEST_CASE("witness validation")
{
    auto w = WordSource::periodic(scalars({0, 1})).prefix(20);
    auto add = mu_additive(Alphabet(scalars({0, 1})));
    CHECK(validate_witness(w, add, {0, 2, 3, {1}}));
    CHECK_FALSE(validate_witness(w, add, {0, 1, 2, {0}}));
    CHECK_THROWS_AS(validate_witness(w, add, {15, 2, 3, {1}}), RangeError);

    FiniteWord x{scalars({0, 1, 1, 0})};
    CHECK(validate_witness(x, mu_parikh(Alphabet(scalars({0, 1}))), {0, 2, 2, {1, 1}}));
    CHECK_FALSE(validate_witness(x, add, {0, 2, 2, {2}}));
}

TEST_CASE("scan returns the minimal-end witness")
{
    auto w = WordSource::periodic(scalars({0, 1}));
    auto r = find_power_scan(w, mu_additive(w.alphabet()), 4, limits_n(100));
    REQUIRE(r.found());
    CHECK(*r.witness == PowerWitness{0, 2, 4, {1}});

    auto c = WordSource::champernowne_binary();
    auto rc = find_power_scan(c, mu_parikh(c.alphabet()), 4, limits_n(10000));
    REQUIRE(rc.found());
    CHECK(validate_witness(c.prefix(10000), mu_parikh(c.alphabet()), *rc.witness));
    // Four single 1s inside the run 1111 (binary 15).
    CHECK(rc.witness->value == Vec{0, 1});
}

TEST_CASE("scan agrees with the oracle")
{
    std::vector<WordSource> words{dekking_tau(), dekking_sigma(), WordSource::champernowne_binary()};
    for (std::uint64_t seed = 0; seed < 12; ++seed)
        words.push_back(random_word(seed, 150, -2, 3));
    for (const auto& src : words) {
        auto prefix = src.prefix(150);
        const oracle::Word letters = src.alphabet().letters();
        for (std::size_t k = 2; k <= 4; ++k) {
            for (bool abelian : {false, true}) {
                auto mu = abelian ? mu_parikh(src.alphabet()) : mu_additive(src.alphabet());
                auto m = abelian ? oracle::parikh_map(letters) : oracle::additive_map(letters);
                auto got = find_power_scan(src, mu, k, limits_n(150));
                auto want = oracle::first_power(prefix.letters, m, k);
                REQUIRE(got.found() == want.has_value());
                if (want) {
                    CHECK(got.witness->t == want->t);
                    CHECK(got.witness->s == want->s);
                    CHECK(got.witness->value == want->value);
                }
            }
        }
    }
}

TEST_CASE("Dekking word has no abelian 4th power")
{
    auto sigma = dekking_sigma();
    auto r = find_power_scan(sigma, mu_parikh(sigma.alphabet()), 4, limits_n(3000));
    CHECK(r.status == PowerStatus::not_found);
    CHECK(r.limits.max_prefix == 3000);
    // It does have abelian cubes.
    CHECK(find_power_scan(sigma, mu_parikh(sigma.alphabet()), 3, limits_n(3000)).found());
}

TEST_CASE("limits restrict the scan")
{
    auto w = WordSource::periodic(scalars({0, 1}));
    auto l = limits_n(100);
    l.max_block = 1;
    CHECK(find_power_scan(w, mu_additive(w.alphabet()), 4, l).status == PowerStatus::not_found);
    l = limits_n(100);
    l.allow_empty_anchor = false;
    auto r = find_power_scan(w, mu_additive(w.alphabet()), 4, l);
    REQUIRE(r.found());
    CHECK(r.witness->t >= 1);

    auto finite = WordSource::explicit_word(scalars({1, 1}));
    auto clamped = find_power_scan(finite, mu_additive(finite.alphabet()), 2, limits_n(50));
    CHECK(clamped.limits.max_prefix == 2);
    CHECK(clamped.found());

    SearchLimits bad;
    bad.max_prefix = 0;
    CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("residues")
{
    CHECK(residue(Vec{-1, 7, 0}, Vec{3, 3, 5}) == Vec{2, 1, 0});
    CHECK(residue(Vec{-6}, Vec{3}) == Vec{0});
    // Equal block sums imply equally spaced residues.
    auto src = dekking_tau();
    auto table = sum_table(src.prefix(500));
    const Vec q{5};
    for (std::size_t i = 0; i + 10 <= 500; i += 7) {
        auto a = residue(table.at(i), q), b = residue(table.at(i + 10), q);
        auto d = table.difference(i, i + 10);
        REQUIRE((a[0] + ((d[0] % 5) + 5) % 5) % 5 == b[0]);
    }
}

TEST_CASE("coloring search on words with bounded additive complexity")
{
    std::vector<WordSource> words{WordSource::periodic(scalars({0, 1})),
                                  WordSource::periodic(scalars({0, 0, 1, 1})), dekking_tau(),
                                  WordSource::periodic(scalars({2}))};
    for (const auto& src : words)
        for (std::size_t k = 2; k <= 5; ++k) {
            auto v = find_power_vdw(src, k, limits_n(1000));
            auto s = find_power_scan(src, mu_additive(src.alphabet()), k, limits_n(1000));
            REQUIRE(v.found());
            CHECK(s.found());
            CHECK(validate_witness(src.prefix(1000), mu_additive(src.alphabet()), *v.witness));
            CHECK(v.witness->k == k);
        }

    auto constant = WordSource::periodic(scalars({2}));
    for (std::size_t k = 2; k <= 6; ++k) {
        auto v = find_power_vdw(constant, k, limits_n(100));
        CHECK(*v.witness == PowerWitness{0, 1, k, {2}});
    }
}

TEST_CASE("(01)^w with modulus 1")
{
    auto w = WordSource::periodic(scalars({0, 1}));
    auto l = limits_n(200);
    l.initial_modulus = 1;
    auto r = find_power_vdw(w, 3, l);
    REQUIRE(r.found());
    CHECK(r.witness->s % 2 == 0);
    CHECK(validate_witness(w.prefix(200), mu_additive(w.alphabet()), *r.witness));
    CHECK(r.modulus.size() == 1);
}

TEST_CASE("tau 5-powers via the coloring")
{
    auto tau = dekking_tau();
    auto r = find_power_vdw(tau, 5, limits_n(5000));
    REQUIRE(r.found());
    CHECK(validate_witness(tau.prefix(5000), mu_additive(tau.alphabet()), *r.witness));
    auto table = sum_table(tau.prefix(5000));
    CHECK(r.modulus[0] % auto_modulus(table, 256)[0] == 0);
}

TEST_CASE("retry cap")
{
    // Modulus 1 colors everything alike; with no doubling allowed the first
    // inexact progression ends the search.
    auto src = WordSource::periodic(scalars({0, 1, 1}));
    auto table = sum_table(src.prefix(100));
    auto l = limits_n(100);
    l.retry_cap = 0;
    auto r = find_colored_progression(table, 2, Vec{1}, l);
    CHECK(r.status == PowerStatus::retry_exhausted);
    CHECK_FALSE(r.witness);

    l.retry_cap = 8;
    auto ok = find_colored_progression(table, 2, Vec{1}, l);
    REQUIRE(ok.found());
    CHECK(ok.retries >= 1);
    CHECK(validate_witness(table, *ok.witness));
}

TEST_CASE("modulo-mu search specializes")
{
    auto tau = dekking_tau();
    for (std::size_t k = 2; k <= 4; ++k) {
        auto generic = find_power_mod_mu(tau, mu_additive(tau.alphabet()), k, limits_n(1000));
        auto direct = find_power_vdw(tau, k, limits_n(1000));
        CHECK(generic.witness == direct.witness);
        auto ga = find_power_mod_mu(tau, mu_parikh(tau.alphabet()), k, limits_n(1000));
        auto da = find_power_abelian(tau, k, limits_n(1000));
        CHECK(ga.status == da.status);
        CHECK(ga.witness == da.witness);
    }

    auto w = WordSource::periodic(scalars({0, 1}));
    auto ab = find_power_mod_mu(w, mu_parikh(w.alphabet()), 3, limits_n(100));
    REQUIRE(ab.found());
    CHECK(validate_witness(w.prefix(100), mu_parikh(w.alphabet()), *ab.witness));

    auto c = WordSource::champernowne_binary();
    MorphismMu zero(c.alphabet(), {{0}, {0}});
    CHECK(*find_power_mod_mu(c, zero, 5, limits_n(100)).witness == PowerWitness{0, 1, 5, {0}});
    CHECK(*find_power_scan(c, zero, 3, limits_n(100)).witness == PowerWitness{0, 1, 3, {0}});
}

TEST_CASE("simultaneous powers")
{
    std::vector<WordSource> pair{WordSource::periodic(scalars({0, 1})), WordSource::periodic(scalars({0, 0, 1}))};
    for (std::size_t k = 2; k <= 3; ++k) {
        auto r = find_simultaneous(pair, k, limits_n(2000));
        REQUIRE(r.found());
        REQUIRE(r.witness->value.size() == 2);
        for (std::size_t j = 0; j < 2; ++j) {
            PowerWitness w{r.witness->t, r.witness->s, k, {r.witness->value[j]}};
            CHECK(validate_witness(pair[j].prefix(2000), mu_additive(pair[j].alphabet()), w));
        }
    }

    std::vector<WordSource> same{WordSource::periodic(scalars({4})), WordSource::periodic(scalars({4}))};
    auto r = find_simultaneous(same, 2, limits_n(50));
    REQUIRE(r.found());
    CHECK(r.witness->t == 0);
    CHECK(r.witness->s == 1);

    CHECK_THROWS_AS(find_simultaneous(std::span<const WordSource>{}, 2, limits_n(10)), InputError);
}

TEST_CASE("abelian powers transfer through the lift")
{
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        auto base = random_word(seed, 120, 1, 3);
        auto lifted = WordSource::lifted(base);
        auto parikh = parikh_table(base.prefix(120), base.alphabet());
        auto sums = sum_table(lifted.prefix(120));
        for (std::size_t k = 2; k <= 3; ++k)
            for (std::size_t s = 1; k * s <= 120; ++s)
                for (std::size_t t = 0; t + k * s <= 120; ++t) {
                    const bool a = validate_witness(parikh, {t, s, k, parikh.difference(t, t + s)});
                    const bool b = validate_witness(sums, {t, s, k, sums.difference(t, t + s)});
                    REQUIRE(a == b);
                }
    }
}
