#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gyrofuzz/norms.hpp"

#include <cmath>

using namespace gyrofuzz;

namespace {

MobiusExact::Element pt(long pn, long pd, long qn, long qd) {
    MobiusExact g;
    return g.make(make_rational(pn, pd), make_rational(qn, qd));
}

}  // namespace

TEST_CASE("mobius abs norm hand values") {
    auto nrm = mobius_norm_abs_exact();
    MobiusExact g;
    CHECK(nrm.norm_sq(g.identity()) == 0);
    CHECK(nrm.norm_sq(pt(1, 2, 0, 1)) == make_rational(1, 4));
    // gyrations leave the norm unchanged exactly
    auto a = pt(1, 2, 0, 1), b = pt(0, 1, 1, 2), c = pt(1, 3, 2, 5);
    CHECK(nrm.norm_sq(g.gyr(a, b, c)) == nrm.norm_sq(c));
}

TEST_CASE("rapidity norm on the float disk") {
    auto nrm = mobius_norm_rapidity();
    MobiusFloat g;
    CHECK(nrm.eval(g.identity()) == 0.0);
    double r = std::tanh(1.0);
    CHECK(nrm.eval(g.make(r, 0.0)) == doctest::Approx(1.0));
    auto z = g.make(0.3, -0.4);
    CHECK(nrm.eval(g.neg(z)) == doctest::Approx(nrm.eval(z)));
    CHECK_THROWS_AS(nrm.eval(MobiusFloat::Element{1.0 - 1e-13, 0.0}), std::domain_error);
}

TEST_CASE("mobius abs norm passes the gyronorm suite exactly") {
    MobiusExact g;
    MobiusExact::Sampler sample;
    PropertyReport r = verify_gyronorm(g, mobius_norm_abs_exact(), sample, 500, 21);
    CHECK(r.passed());
}

TEST_CASE("rapidity norm passes the gyronorm suite within float tolerance") {
    MobiusFloat g;
    MobiusFloat::Sampler sample{0.9};
    PropertyReport r = verify_gyronorm(g, mobius_norm_rapidity(), sample, 1000, 22, 1e-9);
    CHECK(r.passed());
    PropertyReport r2 = verify_gyronorm(g, mobius_norm_abs(), sample, 1000, 22, 1e-9);
    CHECK(r2.passed());
}

TEST_CASE("a constant-zero map fails positivity with a witness") {
    MobiusExact g;
    MobiusExact::Sampler sample;
    ExactGyronorm<MobiusExact> zero{"zero", [](const Cx<Rational>&) { return Rational(0); }};
    PropertyReport r = verify_gyronorm(g, zero, sample, 50, 23);
    const CheckResult* pos = r.find("positivity");
    REQUIRE(pos != nullptr);
    CHECK(!pos->pass);
    CHECK(!pos->witness.is_null());
}

TEST_CASE("standard fuzzy gyronorm hand values") {
    MobiusExact g;
    auto N = fuzzy_from_gyronorm(mobius_norm_abs_exact(), TNorm::minimum());
    // at the identity the value is 1 for every t
    CHECK(N.at(g.identity(), Rational(1)).is_one());
    CHECK(N.at(g.identity(), make_rational(1, 7)).is_one());
    // ||x|| = 1/2, t = 1  ->  1/(1 + 1/2) = 2/3
    StdFuzzyVal v = N.at(pt(1, 2, 0, 1), Rational(1));
    CHECK(cmp(v, StdFuzzyVal{Rational(2), Rational(1)}) == 0);  // 2/(2+1) = 2/3
    CHECK_THROWS_AS(N.at(g.identity(), Rational(0)), std::domain_error);
    CHECK_THROWS_AS((void)N.eval(g.identity(), -1.0), std::domain_error);
}

TEST_CASE("fuzzy gyronorm suite passes for all three built-in t-norms, exactly") {
    MobiusExact g;
    MobiusExact::Sampler sample;
    for (const TNorm& star : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        auto N = fuzzy_from_gyronorm(mobius_norm_abs_exact(), star);
        PropertyReport r = verify_fuzzy_gyronorm(g, N, sample, 150, 31);
        INFO(star.name());
        CHECK(r.passed());
    }
}

TEST_CASE("fuzzy gyronorm suite in float mode, including rapidity") {
    MobiusFloat g;
    MobiusFloat::Sampler sample{0.9};
    for (const TNorm& star : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        auto N = fuzzy_from_gyronorm(mobius_norm_rapidity(), star);
        PropertyReport r = verify_fuzzy_gyronorm(g, N, sample, 200, 32, 1e-9);
        INFO(star.name());
        CHECK(r.passed());
    }
}

TEST_CASE("a broken N3 is caught with a witness") {
    MobiusFloat g;
    MobiusFloat::Sampler sample{0.9};
    FuzzyGyronorm<MobiusFloat> bad{
        "bad-n3", TNorm::minimum(), [](const Cx<double>& z, double t) {
            double r = std::sqrt(norm_sq(z));
            if (z.im < 0) r *= 1.5;  // breaks N(neg x, t) = N(x, t)
            return t / (t + r);
        }};
    PropertyReport r = verify_fuzzy_gyronorm(g, bad, sample, 200, 33, 1e-9);
    const CheckResult* n3 = r.find("N3-inverse-invariance");
    REQUIRE(n3 != nullptr);
    CHECK(!n3->pass);
    CHECK(!n3->witness.is_null());
}

TEST_CASE("N4 spot check from the subadditivity bound") {
    // ||x|| = ||y|| = 1, t = s = 1 under min: whole >= 1/2 because
    // ||x+y|| <= 2 gives 2/(2+||x+y||) >= 1/2.
    StdFuzzyVal whole{Rational(2), Rational(4)};  // worst case ||x+y|| = 2
    StdFuzzyVal half{Rational(1), Rational(1)};
    CHECK(std_ge_min(whole, half, half));
    CHECK(cmp(whole, StdFuzzyVal{Rational(1), Rational(1)}) == 0);  // exactly 1/2
}

TEST_CASE("N is monotone: nonincreasing in the norm, nondecreasing in t") {
    Rng rng(41);
    for (int i = 0; i < 2000; ++i) {
        Rational r1 = make_rational(bounded_signed(rng, 0, 100), bounded_signed(rng, 1, 20));
        Rational r2 = r1 + make_rational(bounded_signed(rng, 1, 50), bounded_signed(rng, 1, 20));
        Rational t1 = make_rational(bounded_signed(rng, 1, 40), bounded_signed(rng, 1, 10));
        Rational t2 = t1 + make_rational(bounded_signed(rng, 1, 20), bounded_signed(rng, 1, 10));
        // larger norm, same t: value shrinks
        CHECK(cmp(StdFuzzyVal{t1, r2 * r2}, StdFuzzyVal{t1, r1 * r1}) <= 0);
        // larger t, same norm: value grows
        CHECK(cmp(StdFuzzyVal{t2, r1 * r1}, StdFuzzyVal{t1, r1 * r1}) >= 0);
    }
}

TEST_CASE("sharper Mobius bound ||a+b|| <= (||a||+||b||)/(1+||a|| ||b||)") {
    MobiusExact g;
    MobiusExact::Sampler sample;
    Rng rng(43);
    for (int i = 0; i < 400; ++i) {
        auto a = sample(rng), b = sample(rng);
        Rational U = norm_sq(a), V = norm_sq(b);
        Rational W = norm_sq(g.oplus(a, b));
        // ||a+b|| <= (u+v)/(1+uv), squares known: decide via
        // L = W(1+UV) - (U+V)  vs  R*sqrt(UV) with R = 2(1-W), noting W < 1.
        Rational L = W * (1 + U * V) - (U + V);
        Rational R = 2 * (1 - W);
        bool sharper = L <= 0 || L * L <= R * R * U * V;
        CHECK(sharper);
        // and the sharper bound implies plain subadditivity
        CHECK(sqrt_subadditive(W, U, V));
    }
}

TEST_CASE("q-add gyronorm |x| passes exactly") {
    RationalAdditiveGroup q;
    RationalAdditiveGroup::Sampler sample;
    CHECK(verify_gyronorm(q, rational_abs_norm_exact(), sample, 500, 51).passed());
    for (const TNorm& star : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        auto N = fuzzy_from_gyronorm(rational_abs_norm_exact(), star);
        CHECK(verify_fuzzy_gyronorm(q, N, sample, 150, 52).passed());
    }
}
