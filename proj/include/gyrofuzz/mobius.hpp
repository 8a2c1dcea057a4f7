#pragma once

#include "gyrofuzz/rational.hpp"
#include "gyrofuzz/sampling.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace gyrofuzz {

/// Complex number over an exact or floating scalar.
template <typename S>
struct Cx {
    S re{};
    S im{};

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
};

template <typename S>
Cx<S> conj(const Cx<S>& z) {
    return {z.re, -z.im};
}

template <typename S>
S norm_sq(const Cx<S>& z) {
    return z.re * z.re + z.im * z.im;
}

template <typename S>
Cx<S> div(const Cx<S>& num, const Cx<S>& den) {
    S d = norm_sq(den);
    Cx<S> n = num * conj(den);
    return {n.re / d, n.im / d};
}

/// The Mobius gyrogroup on the open unit disk with exact Gaussian-rational
/// coordinates: a + b = (a+b)/(1 + conj(a) b), gyr[a,b] the unimodular factor
/// (1 + a conj(b))/(1 + conj(a) b). All law checks over this instance are
/// exact equalities of rationals.
class MobiusExact {
public:
    using Element = Cx<Rational>;

    std::string name() const { return "mobius-exact"; }

    Element make(Rational re, Rational im) const {
        Element z{std::move(re), std::move(im)};
        if (norm_sq(z) >= 1) throw std::domain_error("Mobius point outside the open unit disk");
        return z;
    }

    Element identity() const { return Element{}; }

    Element oplus(const Element& a, const Element& b) const {
        Element den = Element{Rational(1), Rational(0)} + conj(a) * b;
        // |conj(a) b| < 1 keeps the denominator away from zero
        assert(!(den.re == 0 && den.im == 0));
        Element out = div(a + b, den);
        assert(norm_sq(out) < 1);
        return out;
    }

    Element neg(const Element& a) const { return -a; }

    Element gyr(const Element& a, const Element& b, const Element& c) const {
        Element num = Element{Rational(1), Rational(0)} + a * conj(b);
        Element den = Element{Rational(1), Rational(0)} + conj(a) * b;
        return div(num, den) * c;
    }

    bool eq(const Element& a, const Element& b) const { return a == b; }

    double dist(const Element& a, const Element& b) const {
        return std::sqrt(to_double(norm_sq(a - b)));
    }

    std::string format(const Element& z) const {
        std::string im = format_rational(z.im);
        std::string sign = im.empty() || im[0] != '-' ? "+" : "";
        return format_rational(z.re) + sign + im + "i";
    }

    /// Seeded disk sampler drawing rational coordinates p/q with 1 <= q <= max_den,
    /// |p| <= q, rejected until strictly inside the disk.
    struct Sampler {
        long max_den = 64;

        Element operator()(Rng& rng) const {
            for (;;) {
                long q1 = bounded_signed(rng, 1, max_den);
                long p1 = bounded_signed(rng, -q1, q1);
                long q2 = bounded_signed(rng, 1, max_den);
                long p2 = bounded_signed(rng, -q2, q2);
                Cx<Rational> z{make_rational(p1, q1), make_rational(p2, q2)};
                if (norm_sq(z) < 1) return z;
            }
        }
    };
};

/// Floating-point Mobius disk with tolerance-based equality (default 1e-9).
class MobiusFloat {
public:
    using Element = Cx<double>;

    explicit MobiusFloat(double tol = 1e-9) : tol_(tol) {}

    std::string name() const { return "mobius-float"; }
    double tolerance() const { return tol_; }

    Element make(double re, double im) const {
        Element z{re, im};
        if (norm_sq(z) >= 1.0) throw std::domain_error("Mobius point outside the open unit disk");
        return z;
    }

    Element identity() const { return Element{0.0, 0.0}; }

    Element oplus(const Element& a, const Element& b) const {
        Element den = Element{1.0, 0.0} + conj(a) * b;
        return div(a + b, den);
    }

    Element neg(const Element& a) const { return -a; }

    Element gyr(const Element& a, const Element& b, const Element& c) const {
        Element num = Element{1.0, 0.0} + a * conj(b);
        Element den = Element{1.0, 0.0} + conj(a) * b;
        return div(num, den) * c;
    }

    bool eq(const Element& a, const Element& b) const { return dist(a, b) <= tol_; }

    double dist(const Element& a, const Element& b) const { return std::sqrt(norm_sq(a - b)); }

    std::string format(const Element& z) const {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.re, z.im);
        return buf;
    }

    struct Sampler {
        double max_radius = 0.95;

        Element operator()(Rng& rng) const {
            for (;;) {
                Element z{2.0 * unit_double(rng) - 1.0, 2.0 * unit_double(rng) - 1.0};
                if (std::sqrt(norm_sq(z)) < max_radius) return z;
            }
        }
    };

private:
    double tol_;
};

inline Cx<double> to_float(const Cx<Rational>& z) {
    return {to_double(z.re), to_double(z.im)};
}

}  // namespace gyrofuzz
