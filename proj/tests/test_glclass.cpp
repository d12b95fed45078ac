#include "spinunitary/errors.hpp"
#include "spinunitary/glclass.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace spinunitary;

namespace {

RationalVec halves(std::initializer_list<int> doubled) {
    RationalVec out;
    for (int d : doubled) out.emplace_back(d, 2);
    return out;
}

RationalVec with_negative(RationalVec v) {
    RationalVec out = v;
    for (const auto& x : v) out.push_back(-x);
    return out;
}

bool valid_chain(const RationalVec& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rational d = c[i] - c[i + 1];
        if (!(d > 0 && d.denominator() == 1 && d.numerator() % 2 == 0)) return false;
    }
    return true;
}

// Every subsequence is tried; longest first, then lexicographically largest.
std::vector<RationalVec> brute_force_chains(RationalVec nu) {
    std::sort(nu.begin(), nu.end(), std::greater<>());
    std::vector<RationalVec> out;
    while (!nu.empty()) {
        std::size_t n = nu.size();
        RationalVec best;
        unsigned bestMask = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            RationalVec c;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) c.push_back(nu[i]);
            if (!valid_chain(c)) continue;
            if (c.size() > best.size() ||
                (c.size() == best.size() && std::lexicographical_compare(best.begin(), best.end(), c.begin(), c.end()))) {
                best = c;
                bestMask = mask;
            }
        }
        RationalVec rest;
        for (std::size_t i = 0; i < n; ++i)
            if (!(bestMask >> i & 1)) rest.push_back(nu[i]);
        out.push_back(best);
        nu = rest;
    }
    return out;
}

}  // namespace

TEST_CASE("decompose_chains: worked examples") {
    auto one = decompose_chains(RationalVec{6, 4, 2, 0});
    REQUIRE(one.chains.size() == 1);
    CHECK(one.chains[0].values == RationalVec{6, 4, 2, 0});

    auto two = decompose_chains(halves({9, 5, 5, 1, 1, -3, -7}));
    REQUIRE(two.chains.size() == 2);
    CHECK(two.chains[0].values == halves({9, 5, 1, -3, -7}));
    CHECK(two.chains[1].values == halves({5, 1}));

    auto zero = decompose_chains(RationalVec{0});
    REQUIRE(zero.chains.size() == 1);
    CHECK(zero.chains[0].values == RationalVec{0});
}

TEST_CASE("decompose_chains matches brute force up to length 8") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 1500; ++trial) {
        std::size_t n = 1 + rng() % 8;
        RationalVec nu;
        for (std::size_t i = 0; i < n; ++i) nu.emplace_back(static_cast<int>(rng() % 13) - 6, trial % 3 ? 2 : 1);
        std::shuffle(nu.begin(), nu.end(), rng);
        auto dec = decompose_chains(nu);
        auto expected = brute_force_chains(nu);
        REQUIRE(dec.chains.size() == expected.size());
        RationalVec all;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(dec.chains[i].values == expected[i]);
            CHECK(valid_chain(dec.chains[i].values));
            all.insert(all.end(), dec.chains[i].values.begin(), dec.chains[i].values.end());
            if (i) CHECK(dec.chains[i].values.size() <= dec.chains[i - 1].values.size());
        }
        std::sort(all.begin(), all.end());
        std::sort(nu.begin(), nu.end());
        CHECK(all == nu);
    }
}

TEST_CASE("comp_nu") {
    CHECK(comp_nu(2, Rational(1, 2)) == halves({3, -1}));
    CHECK(comp_nu(1, Rational(0)) == RationalVec{0});
    CHECK(comp_nu(3, Rational(-1, 2)) == halves({3, -1, -5}));
}

TEST_CASE("classify_gl: worked examples") {
    GLVerdict stein = classify_gl(with_negative(comp_nu(2, Rational(1, 2))));
    CHECK(stein.status == GLStatus::UnitaryFactors);
    REQUIRE(stein.factors.size() == 1);
    CHECK(stein.factors[0].kind == GLFactor::Kind::SteinPair);
    CHECK(stein.factors[0].a == 2);
    CHECK(abs_of(stein.factors[0].t) == Rational(1, 2));

    GLVerdict beyond = classify_gl(with_negative(comp_nu(2, Rational(3, 2))));
    CHECK(beyond.status == GLStatus::NonUnitary);
    CHECK(beyond.witnessOnes == 2);
    CHECK(beyond.witness == std::vector<int>{1, 1, -1, -1});

    GLVerdict gap = classify_gl(RationalVec{2, -2});
    CHECK(gap.status == GLStatus::NonUnitary);
    CHECK(gap.witness == std::vector<int>{1, -1});

    CHECK_THROWS_AS(classify_gl(RationalVec{3, 1}), NotHermitianError);
    GLVerdict trivial = classify_gl(RationalVec{2, 0, -2});
    CHECK(trivial.status == GLStatus::UnitaryFactors);
    CHECK(trivial.factors[0].kind == GLFactor::Kind::TrivialString);
}

TEST_CASE("classify_gl is invariant under permutation and negation") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 600; ++trial) {
        RationalVec nu;
        int pieces = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < pieces; ++k) {
            int a = 1 + static_cast<int>(rng() % 3);
            if (rng() % 2) {
                for (int i = 0; i < a; ++i) nu.emplace_back(a - 1 - 2 * i);
            } else {
                Rational t(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 4));
                auto c = with_negative(comp_nu(a, t));
                nu.insert(nu.end(), c.begin(), c.end());
            }
        }
        GLVerdict base;
        try {
            base = classify_gl(nu);
        } catch (const NotHermitianError&) {
            RationalVec negated = nu;
            for (auto& x : negated) x = -x;
            CHECK_THROWS_AS(classify_gl(negated), NotHermitianError);
            continue;
        }
        RationalVec shuffled = nu;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        RationalVec negated = nu;
        for (auto& x : negated) x = -x;
        for (const RationalVec& other : {shuffled, negated}) {
            GLVerdict v = classify_gl(other);
            CHECK(v.status == base.status);
            CHECK(v.witnessOnes == base.witnessOnes);
            CHECK(v.factors.size() == base.factors.size());
        }
        for (const auto& f : base.factors) {
            if (f.kind != GLFactor::Kind::SteinPair) continue;
            CHECK(abs_of(f.t) < 1);
        }
    }
}

TEST_CASE("stein pairs are exactly the |t| < 1 shifts") {
    for (int a = 1; a <= 4; ++a) {
        for (int den : {1, 2, 3, 4, 5, 7}) {
            for (int num = -3 * den; num <= 3 * den; ++num) {
                Rational t(num, den);
                GLVerdict v = stein_verdict(a, t);
                bool inside = abs_of(t) < 1;
                CHECK((v.status == GLStatus::UnitaryFactors) == inside);
                if (!inside) CHECK((v.status == GLStatus::Reducible) == is_integer(t));
            }
        }
    }
    CHECK(stein_verdict(3, Rational(1)).status == GLStatus::Reducible);
    CHECK(stein_verdict(3, Rational(99, 100)).status == GLStatus::UnitaryFactors);
    CHECK(stein_verdict(3, Rational(101, 100)).status == GLStatus::NonUnitary);
}

TEST_CASE("stein pairs reported by classify_gl reproduce their values") {
    for (int a = 1; a <= 4; ++a) {
        for (int num : {1, 2, 3}) {
            Rational t(num, 4);
            RationalVec nu = with_negative(comp_nu(a, t));
            GLVerdict v = classify_gl(nu);
            REQUIRE(v.status == GLStatus::UnitaryFactors);
            REQUIRE(v.factors.size() == 1);
            RationalVec rebuilt = with_negative(comp_nu(v.factors[0].a, v.factors[0].t));
            std::sort(rebuilt.begin(), rebuilt.end());
            std::sort(nu.begin(), nu.end());
            CHECK(rebuilt == nu);
        }
    }
}

TEST_CASE("genuine blocks") {
    GLVerdict rhoString = classify_gl_genuine_block({{Rational(1), 1}, {Rational(-1), 1}});
    CHECK(rhoString.status == GLStatus::UnitaryFactors);
    REQUIRE(rhoString.factors.size() == 1);
    CHECK(rhoString.factors[0].kind == GLFactor::Kind::TrivialString);
    CHECK(rhoString.factors[0].a == 2);

    GLVerdict quarter = classify_gl_genuine_block({{Rational(1, 4), 1}, {Rational(-1, 4), 1}});
    CHECK(quarter.status == GLStatus::UnitaryFactors);
    REQUIRE(quarter.factors.size() == 1);
    CHECK(quarter.factors[0].kind == GLFactor::Kind::SteinPair);
    CHECK(quarter.factors[0].a == 1);
    CHECK(abs_of(quarter.factors[0].t) == Rational(1, 4));

    CHECK_THROWS_AS(classify_gl_genuine_block({{Rational(1), 1}, {Rational(-1), -1}}), NotHermitianError);

    GLVerdict wide = classify_gl_genuine_block({{Rational(3), 1}, {Rational(-3), 1}});
    CHECK(wide.status == GLStatus::NonUnitary);
    CHECK(wide.witnessOnes == 1);
}
