#pragma once

#include "gyrofuzz/rational.hpp"
#include "gyrofuzz/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace gyrofuzz {

// Groups are gyrogroups with identity gyrations; these adapters expose the
// gyrogroup surface for (Q,+), (R,+) and Z_n so every suite runs on them.

/// (Q, +) with exact equality.
class RationalAdditiveGroup {
public:
    using Element = Rational;

    std::string name() const { return "q-add"; }
    Element identity() const { return Rational(0); }
    Element oplus(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return -a; }
    Element gyr(const Element&, const Element&, const Element& c) const { return c; }
    bool eq(const Element& a, const Element& b) const { return a == b; }
    double dist(const Element& a, const Element& b) const { return std::abs(to_double(a - b)); }
    std::string format(const Element& x) const { return format_rational(x); }

    struct Sampler {
        long max_num = 1024;
        long max_den = 64;

        Element operator()(Rng& rng) const {
            long q = bounded_signed(rng, 1, max_den);
            long p = bounded_signed(rng, -max_num, max_num);
            return make_rational(p, q);
        }
    };
};

/// (R, +) in doubles with tolerance-based equality.
class RealAdditiveGroup {
public:
    using Element = double;

    explicit RealAdditiveGroup(double tol = 1e-12) : tol_(tol) {}

    std::string name() const { return "r-add"; }
    double tolerance() const { return tol_; }
    Element identity() const { return 0.0; }
    Element oplus(Element a, Element b) const { return a + b; }
    Element neg(Element a) const { return -a; }
    Element gyr(Element, Element, Element c) const { return c; }
    bool eq(Element a, Element b) const { return std::abs(a - b) <= tol_; }
    double dist(Element a, Element b) const { return std::abs(a - b); }

    std::string format(Element x) const {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }

    struct Sampler {
        double range = 8.0;

        Element operator()(Rng& rng) const { return (2.0 * unit_double(rng) - 1.0) * range; }
    };

private:
    double tol_;
};

/// Z_n under addition mod n.
class CyclicGroup {
public:
    using Element = std::uint32_t;

    explicit CyclicGroup(std::uint32_t n) : n_(n) {
        if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
    }

    std::string name() const { return "z" + std::to_string(n_); }
    std::size_t order() const { return n_; }
    Element element(std::size_t i) const { return static_cast<Element>(i % n_); }
    Element identity() const { return 0; }
    Element oplus(Element a, Element b) const { return (a + b) % n_; }
    Element neg(Element a) const { return static_cast<Element>((n_ - a) % n_); }
    Element gyr(Element, Element, Element c) const { return c; }
    bool eq(Element a, Element b) const { return a == b; }
    double dist(Element a, Element b) const { return a == b ? 0.0 : 1.0; }
    std::string format(Element x) const { return std::to_string(x); }

    struct Sampler {
        std::uint32_t n;

        Element operator()(Rng& rng) const { return static_cast<Element>(bounded(rng, n)); }
    };
    Sampler sampler() const { return Sampler{n_}; }

private:
    std::uint32_t n_;
};

}  // namespace gyrofuzz
