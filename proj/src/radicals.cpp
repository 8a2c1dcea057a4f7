#include "gyrofuzz/radicals.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace gyrofuzz {

namespace {

int sign_of(const Rational& q) {
    return sgn(q);
}

// coeff has size 2^k over radicands rad[0..k-1].
int radical_sign_impl(const std::vector<Rational>& rad, const std::vector<Rational>& coeff, std::size_t k) {
    if (k == 0) return sign_of(coeff[0]);
    const std::size_t half = std::size_t{1} << (k - 1);
    std::vector<Rational> a(coeff.begin(), coeff.begin() + half);
    std::vector<Rational> b(coeff.begin() + half, coeff.end());
    const Rational& r = rad[k - 1];

    // sqrt(r) == 0 collapses the B part entirely.
    if (r == 0) return radical_sign_impl(rad, a, k - 1);

    const int sa = radical_sign_impl(rad, a, k - 1);
    const int sb = radical_sign_impl(rad, b, k - 1);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;

    // Opposite signs: |A| vs |B|*sqrt(r), i.e. sign(A^2 - B^2 r) carries sa.
    std::vector<Rational> diff(half, Rational(0));
    auto accumulate_square = [&](const std::vector<Rational>& v, const Rational& scale) {
        for (std::size_t i = 0; i < half; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < half; ++j) {
                if (v[j] == 0) continue;
                // basis_i * basis_j = (prod of shared radicands) * basis_{i xor j}
                Rational term = v[i] * v[j] * scale;
                std::size_t common = i & j;
                for (std::size_t bit = 0; bit + 1 < k; ++bit)
                    if (common & (std::size_t{1} << bit)) term *= rad[bit];
                diff[i ^ j] += term;
            }
        }
    };
    accumulate_square(a, Rational(1));
    accumulate_square(b, -r);
    const int sd = radical_sign_impl(rad, diff, k - 1);
    return sa * sd;
}

void require_valid(const StdFuzzyVal& v) {
    if (v.t <= 0) throw std::domain_error("fuzzy value needs t > 0");
    if (v.sq < 0) throw std::domain_error("fuzzy value needs sq >= 0");
}

}  // namespace

int radical_sign(const std::vector<Rational>& rad, const std::vector<Rational>& coeff) {
    const std::size_t k = rad.size();
    if (coeff.size() != (std::size_t{1} << k))
        throw std::invalid_argument("radical_sign: coeff size must be 2^k");
    for (const Rational& r : rad)
        if (r < 0) throw std::domain_error("radical_sign: negative radicand");
    return radical_sign_impl(rad, coeff, k);
}

double StdFuzzyVal::value() const {
    const double td = to_double(t);
    return td / (td + std::sqrt(to_double(sq)));
}

int cmp(const StdFuzzyVal& a, const StdFuzzyVal& b) {
    require_valid(a);
    require_valid(b);
    // a - b has the sign of  a.t*(b.t + sqrt(b.sq)) - b.t*(a.t + sqrt(a.sq))
    //                      = (a.t*b.t - b.t*a.t) + a.t*sqrt(b.sq) - b.t*sqrt(a.sq).
    return radical_sign({a.sq, b.sq}, {Rational(0), -b.t, a.t, Rational(0)});
}

bool std_exceeds(const StdFuzzyVal& a, const Rational& eps) {
    require_valid(a);
    if (eps <= 0 || eps > 1) throw std::domain_error("std_exceeds: eps must be in (0,1]");
    // t/(t+sqrt(sq)) > 1-eps  <=>  t*eps > (1-eps)*sqrt(sq).
    if (eps == 1) return true;
    const Rational c = 1 - eps;
    return radical_sign({a.sq}, {a.t * eps, -c}) > 0;
}

bool std_ge_min(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b) {
    const StdFuzzyVal& m = cmp(a, b) <= 0 ? a : b;
    return cmp(whole, m) >= 0;
}

bool std_ge_product(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b) {
    require_valid(whole);
    require_valid(a);
    require_valid(b);
    // whole >= a*b  <=>  T(t+sqrt U)(s+sqrt V) >= t s (T+sqrt W)
    //            <=>  T s sqrt U + T t sqrt V + T sqrt(UV) - t s sqrt W >= 0,
    // radicands (U, V, W) with bitmask order U=1, V=2, W=4.
    const Rational& T = whole.t;
    const Rational& t = a.t;
    const Rational& s = b.t;
    std::vector<Rational> coeff(8, Rational(0));
    coeff[1] = T * s;   // sqrt U
    coeff[2] = T * t;   // sqrt V
    coeff[3] = T;       // sqrt(UV)
    coeff[4] = -t * s;  // sqrt W
    return radical_sign({a.sq, b.sq, whole.sq}, coeff) >= 0;
}

bool std_ge_lukasiewicz(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b) {
    require_valid(whole);
    require_valid(a);
    require_valid(b);
    // a + b - 1 has the sign of t*s - sqrt(U V); non-positive means a*b = 0 < whole.
    const Rational& T = whole.t;
    const Rational& t = a.t;
    const Rational& s = b.t;
    if (radical_sign({a.sq, b.sq}, {t * s, Rational(0), Rational(0), Rational(-1)}) <= 0) return true;
    // whole >= (ts - sqrt(UV)) / ((t+sqrt U)(s+sqrt V))
    //   <=>  T s sqrt U + T t sqrt V + 2 T sqrt(UV) - t s sqrt W + sqrt(UVW) >= 0.
    std::vector<Rational> coeff(8, Rational(0));
    coeff[1] = T * s;
    coeff[2] = T * t;
    coeff[3] = 2 * T;
    coeff[4] = -t * s;
    coeff[7] = Rational(1);
    return radical_sign({a.sq, b.sq, whole.sq}, coeff) >= 0;
}

bool sqrt_subadditive(const Rational& x, const Rational& y, const Rational& z) {
    if (x < 0 || y < 0 || z < 0) throw std::domain_error("sqrt_subadditive: negative square");
    // sqrt x <= sqrt y + sqrt z  <=>  x - y - z <= 2 sqrt(y z).
    const Rational lhs = x - y - z;
    if (lhs <= 0) return true;
    return lhs * lhs <= 4 * y * z;
}

}  // namespace gyrofuzz
