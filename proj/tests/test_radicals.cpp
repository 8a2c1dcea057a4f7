#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gyrofuzz/radicals.hpp"
#include "gyrofuzz/sampling.hpp"

#include <cmath>

using namespace gyrofuzz;

namespace {

// Direct floating evaluation of sum coeff[S] * prod sqrt(rad), the oracle for
// the exact kernel away from zero.
double eval_radical(const std::vector<Rational>& rad, const std::vector<Rational>& coeff) {
    double out = 0.0;
    for (std::size_t mask = 0; mask < coeff.size(); ++mask) {
        double term = to_double(coeff[mask]);
        for (std::size_t bit = 0; bit < rad.size(); ++bit)
            if (mask & (std::size_t{1} << bit)) term *= std::sqrt(to_double(rad[bit]));
        out += term;
    }
    return out;
}

Rational rnd_rational(Rng& rng, long num_range, long den_range) {
    return make_rational(bounded_signed(rng, -num_range, num_range),
                         bounded_signed(rng, 1, den_range));
}

}  // namespace

TEST_CASE("radical_sign agrees with floating evaluation away from zero") {
    Rng rng(42);
    for (int iter = 0; iter < 3000; ++iter) {
        std::size_t k = 1 + bounded(rng, 3);
        std::vector<Rational> rad;
        for (std::size_t i = 0; i < k; ++i)
            rad.push_back(make_rational(bounded_signed(rng, 0, 40), bounded_signed(rng, 1, 12)));
        std::vector<Rational> coeff(std::size_t{1} << k);
        for (auto& c : coeff) c = rnd_rational(rng, 20, 8);

        double value = eval_radical(rad, coeff);
        if (std::abs(value) < 1e-6) continue;  // too close to call in double
        CHECK(radical_sign(rad, coeff) == (value > 0 ? 1 : -1));
    }
}

TEST_CASE("radical_sign detects exact zeroes") {
    // sqrt(4) - 2 = 0
    CHECK(radical_sign({Rational(4)}, {Rational(-2), Rational(1)}) == 0);
    // sqrt(2)*sqrt(8) - 4 = 0
    CHECK(radical_sign({Rational(2), Rational(8)},
                       {Rational(-4), Rational(0), Rational(0), Rational(1)}) == 0);
    // (sqrt 2 + sqrt 3) - (sqrt 3 + sqrt 2) = 0 with duplicated radicands
    CHECK(radical_sign({Rational(2), Rational(3)},
                       {Rational(0), Rational(1), Rational(-1), Rational(0)}) != 0);
    // 2*sqrt(1/4) - 1 = 0
    CHECK(radical_sign({make_rational(1, 4)}, {Rational(-1), Rational(2)}) == 0);
    // zero radicand kills its basis element: 5*sqrt(0) = 0
    CHECK(radical_sign({Rational(0)}, {Rational(0), Rational(5)}) == 0);
}

TEST_CASE("radical_sign near-ties are decided correctly") {
    // 665857^2 - 2*470832^2 = +1, so this convergent sits just above sqrt 2
    Rational approx = make_rational(665857, 470832);
    CHECK(radical_sign({Rational(2)}, {-approx, Rational(1)}) == -1);
    // 8119^2 - 2*5741^2 = -1: just below
    Rational below = make_rational(8119, 5741);
    CHECK(radical_sign({Rational(2)}, {-below, Rational(1)}) == 1);
    // truncated decimal below sqrt 2
    auto trunc = *parse_rational("1.41421356237");
    CHECK(radical_sign({Rational(2)}, {-trunc, Rational(1)}) == 1);
}

TEST_CASE("cmp orders standard fuzzy values") {
    // 1/(1+sqrt(1/4)) = 2/3 vs 1/(1+sqrt(1)) = 1/2
    StdFuzzyVal a{Rational(1), make_rational(1, 4)};
    StdFuzzyVal b{Rational(1), Rational(1)};
    CHECK(cmp(a, b) > 0);
    CHECK(cmp(b, a) < 0);
    CHECK(cmp(a, a) == 0);
    // equal values with different presentations: 2/(2+2) vs 1/(1+1)
    StdFuzzyVal c{Rational(2), Rational(4)};
    StdFuzzyVal d{Rational(1), Rational(1)};
    CHECK(cmp(c, d) == 0);
}

TEST_CASE("std_exceeds matches the ball reduction d < t*eps/(1-eps)") {
    Rng rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        Rational d = make_rational(bounded_signed(rng, 0, 50), bounded_signed(rng, 1, 10));
        Rational t = make_rational(bounded_signed(rng, 1, 40), bounded_signed(rng, 1, 10));
        Rational eps = make_rational(bounded_signed(rng, 1, 9), 10);
        StdFuzzyVal v{t, d * d};
        bool via_kernel = std_exceeds(v, eps);
        bool via_reduction = d * (1 - eps) < t * eps;
        CHECK(via_kernel == via_reduction);
    }
}

TEST_CASE("triangle decisions match floating evaluation") {
    Rng rng(11);
    auto fval = [](const StdFuzzyVal& v) {
        double t = to_double(v.t);
        return t / (t + std::sqrt(to_double(v.sq)));
    };
    int checked = 0;
    for (int iter = 0; iter < 4000; ++iter) {
        StdFuzzyVal w{make_rational(bounded_signed(rng, 1, 8), bounded_signed(rng, 1, 4)),
                      make_rational(bounded_signed(rng, 0, 30), bounded_signed(rng, 1, 6))};
        StdFuzzyVal a{make_rational(bounded_signed(rng, 1, 8), bounded_signed(rng, 1, 4)),
                      make_rational(bounded_signed(rng, 0, 30), bounded_signed(rng, 1, 6))};
        StdFuzzyVal b{make_rational(bounded_signed(rng, 1, 8), bounded_signed(rng, 1, 4)),
                      make_rational(bounded_signed(rng, 0, 30), bounded_signed(rng, 1, 6))};

        double fw = fval(w), fa = fval(a), fb = fval(b);
        {
            double margin = fw - std::min(fa, fb);
            if (std::abs(margin) > 1e-9) {
                CHECK(std_ge_min(w, a, b) == (margin > 0));
                ++checked;
            }
        }
        {
            double margin = fw - fa * fb;
            if (std::abs(margin) > 1e-9) CHECK(std_ge_product(w, a, b) == (margin > 0));
        }
        {
            double margin = fw - std::max(fa + fb - 1.0, 0.0);
            if (std::abs(margin) > 1e-9) CHECK(std_ge_lukasiewicz(w, a, b) == (margin > 0));
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("sqrt_subadditive matches floating evaluation") {
    Rng rng(13);
    for (int iter = 0; iter < 3000; ++iter) {
        Rational x = make_rational(bounded_signed(rng, 0, 60), bounded_signed(rng, 1, 8));
        Rational y = make_rational(bounded_signed(rng, 0, 60), bounded_signed(rng, 1, 8));
        Rational z = make_rational(bounded_signed(rng, 0, 60), bounded_signed(rng, 1, 8));
        double margin =
            std::sqrt(to_double(y)) + std::sqrt(to_double(z)) - std::sqrt(to_double(x));
        if (std::abs(margin) < 1e-9) continue;
        CHECK(sqrt_subadditive(x, y, z) == (margin > 0));
    }
    // exact boundary: sqrt(4) <= sqrt(1) + sqrt(1)
    CHECK(sqrt_subadditive(Rational(4), Rational(1), Rational(1)));
    CHECK(!sqrt_subadditive(Rational(4) + make_rational(1, 1000000), Rational(1), Rational(1)));
}

TEST_CASE("sqrt_enclosure brackets the root tightly") {
    Rng rng(17);
    for (int iter = 0; iter < 500; ++iter) {
        Rational x = make_rational(bounded_signed(rng, 0, 1000), bounded_signed(rng, 1, 50));
        Rational eps = make_rational(1, 1 << (1 + bounded(rng, 20)));
        RatInterval iv = sqrt_enclosure(x, eps);
        CHECK(iv.width() <= eps);
        CHECK(iv.lo >= 0);
        CHECK(iv.lo * iv.lo <= x);
        CHECK(iv.hi * iv.hi >= x);
    }
    RatInterval exact = sqrt_enclosure(make_rational(9, 4), make_rational(1, 1000));
    CHECK(exact.lo == make_rational(3, 2));
    CHECK(exact.hi == make_rational(3, 2));
}
