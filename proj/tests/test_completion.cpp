#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gyrofuzz/completion.hpp"

#include <cmath>

using namespace gyrofuzz;

namespace {

const RationalAdditiveGroup& q_group() {
    static RationalAdditiveGroup q;
    return q;
}

CompletionSpace<RationalAdditiveGroup> q_space(TNorm star = TNorm::minimum()) {
    return CompletionSpace<RationalAdditiveGroup>(q_group(), rational_abs_interval_metric(),
                                                  std::move(star), /*both_invariant=*/true);
}

StdFuzzyMetric<RationalAdditiveGroup> q_std_metric(long scale_num = 1) {
    return {"scaled-abs", TNorm::minimum(),
            [scale_num](const Rational& x, const Rational& y) -> Rational {
                Rational d = (x - y) * scale_num;
                return d * d;
            }};
}

}  // namespace

TEST_CASE("embedded points behave like the base") {
    auto space = q_space();
    auto e = space.embed(Rational(0));
    // d_hat on embedded points equals d: the enclosure contains it at every
    // precision and its width obeys the request
    for (long k : {10L, 1000L, 100000L}) {
        RatInterval self = space.dist_hat(e, e, make_rational(1, k));
        CHECK(self.contains(Rational(0)));
        CHECK(self.width() <= make_rational(1, k));
    }

    auto third = space.embed(make_rational(1, 3));
    auto half = space.embed(make_rational(1, 2));
    RatInterval d = space.dist_hat(third, half, make_rational(1, 1000000));
    CHECK(d.contains(make_rational(1, 6)));
    CHECK(d.width() <= make_rational(1, 1000000));

    // lifted op on constants is the base op
    auto sum = space.hat_oplus(half, half);
    CHECK(sum.at(17) == Rational(1));
    CHECK(space.approx_eq(sum, space.embed(Rational(1)), make_rational(1, 1000000)));
}

TEST_CASE("convergents fixtures carry sound monotone moduli") {
    for (const char* name : {"sqrt2", "sqrt3", "sqrt5", "phi"}) {
        RationalFixture f = convergents_fixture(name);
        REQUIRE(f.declared_cauchy);
        // soundness: sampled i,k >= mu(eps) are within eps
        for (int k = 2; k <= 20; k += 6) {
            Rational eps(1, 1 << k);
            eps.canonicalize();
            std::size_t n = f.modulus(eps);
            for (std::size_t i = n; i < n + 4; ++i)
                for (std::size_t j = n; j < n + 4; ++j)
                    CHECK(rational_abs(f.seq(i) - f.seq(j)) < eps);
        }
        // monotone: smaller eps, later index
        CHECK(f.modulus(make_rational(1, 1024)) >= f.modulus(make_rational(1, 4)));
        // the oracle matches at modulus depth
        REQUIRE(f.oracle.has_value());
        CHECK(oracle_delta(f.point(), *f.oracle, make_rational(1, 1 << 24)) <= 1.0 / (1 << 24));
    }
}

TEST_CASE("hat_oplus of sqrt2 and sqrt3 convergents matches the real oracle") {
    auto space = q_space();
    auto p = convergents_fixture("sqrt2").point();
    auto q = convergents_fixture("sqrt3").point();
    auto sum = space.hat_oplus(p, q);
    Rational eps(1, 1000000000L);  // 1e-9
    double delta = oracle_delta(sum, std::sqrt(2.0) + std::sqrt(3.0), eps);
    CHECK(delta < 1e-9);

    auto neg = space.hat_neg(p);
    CHECK(oracle_delta(neg, -std::sqrt(2.0), eps) < 1e-9);
    // involution lifts
    CHECK(space.approx_eq(space.hat_neg(neg), p, make_rational(1, 1000000)));
}

TEST_CASE("approx_eq is one-sided equality at explicit eps") {
    auto space = q_space();
    auto p = convergents_fixture("sqrt2").point();
    CHECK(space.approx_eq(p, p, make_rational(1, 1000000000L)));
    // |sqrt2 - 1.414| ~ 2.1e-4 < 1e-2
    CHECK(space.approx_eq(p, space.embed(make_rational(1414, 1000)), make_rational(1, 100)));
    // |sqrt2 - 3/2| ~ 0.0858 > 1e-2
    CHECK(!space.approx_eq(p, space.embed(make_rational(3, 2)), make_rational(1, 100)));
}

TEST_CASE("lifted gyrogroup laws hold at eps = 1e-6 on fixture points") {
    auto space = q_space();
    const Rational eps(1, 1000000);
    auto fixtures = load_fixtures_file(std::string(GYROFUZZ_FIXTURES_DIR) + "/completion.json");

    std::vector<CauchyPoint<RationalAdditiveGroup>> pts;
    for (const auto& f : fixtures)
        if (f.declared_cauchy) pts.push_back(f.point());
    // derived points: sums and negations of the base fixtures
    pts.push_back(space.hat_oplus(pts[0], pts[1]));
    pts.push_back(space.hat_neg(pts[0]));
    REQUIRE(pts.size() >= 5);

    auto ident = space.embed(Rational(0));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        const auto& c = pts[(i + 2) % pts.size()];
        // G1, G2
        CHECK(space.approx_eq(space.hat_oplus(ident, a), a, eps));
        CHECK(space.approx_eq(space.hat_oplus(space.hat_neg(a), a), ident, eps));
        // G3
        auto lhs = space.hat_oplus(a, space.hat_oplus(b, c));
        auto rhs = space.hat_oplus(space.hat_oplus(a, b), space.hat_gyr(a, b, c));
        CHECK(space.approx_eq(lhs, rhs, eps));
        // G4
        CHECK(space.approx_eq(space.hat_gyr(space.hat_oplus(a, b), b, c),
                              space.hat_gyr(a, b, c), eps));
        // trivial gyration on a group base
        CHECK(space.approx_eq(space.hat_gyr(a, b, c), c, eps));
        // gyr[neg a, a] = id lifted
        CHECK(space.approx_eq(space.hat_gyr(space.hat_neg(a), a, b), b, eps));
        // left cancellation lifted
        CHECK(space.approx_eq(space.hat_oplus(space.hat_neg(a), space.hat_oplus(a, b)), b, eps));
    }
}

TEST_CASE("hat_gyr agrees with the componentwise gyration on embedded points") {
    auto space = q_space();
    auto a = space.embed(make_rational(2, 3));
    auto b = space.embed(make_rational(-1, 5));
    auto c = space.embed(make_rational(7, 4));
    CHECK(space.approx_eq(space.hat_gyr(a, b, c), space.embed(make_rational(7, 4)),
                          make_rational(1, 1000000000L)));
}

TEST_CASE("lifted operations are refused without two-sided invariance") {
    CompletionSpace<RationalAdditiveGroup> gated(q_group(), rational_abs_interval_metric(),
                                                 TNorm::minimum(), /*both_invariant=*/false);
    auto p = gated.embed(Rational(1));
    CHECK_THROWS_AS(gated.hat_oplus(p, p), std::logic_error);
    CHECK_THROWS_AS(gated.hat_neg(p), std::logic_error);
    // embed and distance evaluation stay available
    CHECK(gated.dist_hat(p, p, make_rational(1, 100)).contains(Rational(0)));
}

TEST_CASE("lifted fuzzy metric intervals") {
    auto space = q_space();
    auto p = convergents_fixture("sqrt2").point();
    auto zero = space.embed(Rational(0));

    RatInterval same = space.lifted_fuzzy_metric(p, p, Rational(1), make_rational(1, 1000));
    CHECK(same.hi == 1);
    CHECK(same.contains(Rational(1)));

    // M(sqrt2-point, 0, 1) = 1/(1+sqrt2) ~ 0.41421
    RatInterval m = space.lifted_fuzzy_metric(p, zero, Rational(1), make_rational(1, 1000000));
    CHECK(m.width() <= make_rational(1, 1000000));
    double mid = to_double((m.lo + m.hi) / 2);
    CHECK(mid == doctest::Approx(1.0 / (1.0 + std::sqrt(2.0))).epsilon(1e-5));
}

TEST_CASE("invariance of the lifted metric: interval overlap probes") {
    auto space = q_space();
    auto fixtures = load_fixtures_file(std::string(GYROFUZZ_FIXTURES_DIR) + "/completion.json");
    std::vector<CauchyPoint<RationalAdditiveGroup>> pts;
    for (const auto& f : fixtures)
        if (f.declared_cauchy) pts.push_back(f.point());

    Rng rng(55);
    RationalAdditiveGroup::Sampler sample;
    const Rational prec(1, 1000000);
    for (int iter = 0; iter < 60; ++iter) {
        const auto& p = pts[bounded(rng, pts.size())];
        const auto& q = pts[bounded(rng, pts.size())];
        auto a = space.embed(sample(rng));
        Rational t = make_rational(1 + (long)bounded(rng, 8), 2);
        RatInterval base = space.lifted_fuzzy_metric(p, q, t, prec);
        RatInterval left =
            space.lifted_fuzzy_metric(space.hat_oplus(a, p), space.hat_oplus(a, q), t, prec);
        RatInterval right =
            space.lifted_fuzzy_metric(space.hat_oplus(p, a), space.hat_oplus(q, a), t, prec);
        CHECK(base.overlaps(left));
        CHECK(base.overlaps(right));
    }
}

TEST_CASE("density: every fixture point is approximated by its own tail") {
    auto space = q_space();
    auto fixtures = load_fixtures_file(std::string(GYROFUZZ_FIXTURES_DIR) + "/completion.json");
    for (const auto& f : fixtures) {
        if (!f.declared_cauchy) continue;
        auto p = f.point();
        for (int k = 4; k <= 20; k += 8) {
            Rational eps(1, 1L << k);
            eps.canonicalize();
            auto tail = space.embed(p.at(p.modulus(eps / 4)));
            CHECK(space.approx_eq(p, tail, eps));
        }
    }
}

TEST_CASE("modulus splitting follows the eps/2 rule") {
    auto space = q_space();
    auto p = convergents_fixture("sqrt2").point();
    auto q = convergents_fixture("sqrt3").point();
    auto sum = space.hat_oplus(p, q);
    Rational eps(1, 1024);
    CHECK(sum.modulus(eps) == std::max(p.modulus(eps / 2), q.modulus(eps / 2)));
    CHECK(space.hat_neg(p).modulus(eps) == p.modulus(eps));
}

TEST_CASE("fixture loader rejects undeclared Cauchy status and bad kinds") {
    CHECK_THROWS(load_fixtures(nlohmann::json::parse(
        R"([{"name":"x","kind":"constant","params":{"value":"1"}}])")));
    CHECK_THROWS(load_fixtures(nlohmann::json::parse(
        R"([{"name":"x","kind":"mystery","params":{"cauchy":true}}])")));
    CHECK_THROWS(load_fixtures(nlohmann::json::parse(
        R"([{"name":"x","kind":"constant","params":{"value":"1/0","cauchy":true}}])")));
    auto ok = load_fixtures(nlohmann::json::parse(
        R"([{"name":"x","kind":"explicit","params":{"values":["1","2"],"cauchy":true}}])"));
    CHECK(ok.size() == 1);
    CHECK(ok[0].seq(5) == Rational(2));
}

TEST_CASE("completeness transfer: Nc from d, M from 2d") {
    const auto& q = q_group();
    auto fixtures = load_fixtures_file(std::string(GYROFUZZ_FIXTURES_DIR) + "/completion.json");
    auto Nc = q_std_metric(1);
    auto M = q_std_metric(2);
    RationalAdditiveGroup::Sampler sample;
    PropertyReport r = completeness_transfer_check(q, M, Nc, fixtures, sample, 40, 77);
    CHECK(r.passed());
}

TEST_CASE("fuzzy-Cauchy reduces to metric-Cauchy through d < t*eps/(1-eps)") {
    // the reduction itself, unit-tested on the standard form
    Rng rng(78);
    for (int i = 0; i < 1000; ++i) {
        Rational d = make_rational(bounded_signed(rng, 0, 60), bounded_signed(rng, 1, 12));
        Rational t = make_rational(bounded_signed(rng, 1, 24), bounded_signed(rng, 1, 6));
        Rational eps = make_rational(bounded_signed(rng, 1, 9), 10);
        StdFuzzyVal m{t, d * d};
        CHECK(std_exceeds(m, eps) == (d < t * eps / (1 - eps)));
    }
}
