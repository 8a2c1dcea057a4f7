#pragma once

#include "gyrofuzz/group_adapter.hpp"
#include "gyrofuzz/gyro.hpp"
#include "gyrofuzz/mobius.hpp"
#include "gyrofuzz/radicals.hpp"
#include "gyrofuzz/tnorm.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace gyrofuzz {

/// Float-mode gyronorm on a gyrogroup instance.
template <typename G>
struct Gyronorm {
    std::string name;
    std::function<double(const typename G::Element&)> eval;
};

/// Exact gyronorm: the norm of x is sqrt(norm_sq(x)) with norm_sq rational,
/// which lets every Definition-3.1 law be decided with zero tolerance.
template <typename G>
struct ExactGyronorm {
    std::string name;
    std::function<Rational(const typename G::Element&)> norm_sq;
};

/// Float-mode fuzzy gyronorm N(x, t) paired with its t-norm.
template <typename G>
struct FuzzyGyronorm {
    std::string name;
    TNorm tnorm;
    std::function<double(const typename G::Element&, double)> eval;
};

/// Exact fuzzy gyronorm of the canonical shape N(x,t) = t / (t + ||x||).
template <typename G>
struct StdFuzzyGyronorm {
    std::string name;
    TNorm tnorm;
    std::function<Rational(const typename G::Element&)> norm_sq;

    StdFuzzyVal at(const typename G::Element& x, const Rational& t) const {
        if (t <= 0) throw std::domain_error("fuzzy gyronorm needs t > 0");
        return StdFuzzyVal{t, norm_sq(x)};
    }
    double eval(const typename G::Element& x, double t) const {
        if (t <= 0) throw std::domain_error("fuzzy gyronorm needs t > 0");
        return t / (t + std::sqrt(to_double(norm_sq(x))));
    }
};

inline ExactGyronorm<MobiusExact> mobius_norm_abs_exact() {
    return {"mobius-abs", [](const Cx<Rational>& z) { return norm_sq(z); }};
}

inline Gyronorm<MobiusFloat> mobius_norm_abs() {
    return {"mobius-abs", [](const Cx<double>& z) { return std::sqrt(norm_sq(z)); }};
}

/// artanh |a|, the hyperbolic (rapidity) norm; float mode only.
inline Gyronorm<MobiusFloat> mobius_norm_rapidity() {
    return {"mobius-rapidity", [](const Cx<double>& z) {
                double r = std::sqrt(norm_sq(z));
                if (r > 1.0 - 1e-12)
                    throw std::domain_error("rapidity norm undefined this close to the boundary");
                return std::atanh(r);
            }};
}

/// |x| on the rational additive group (norm square x^2).
inline ExactGyronorm<RationalAdditiveGroup> rational_abs_norm_exact() {
    return {"q-abs", [](const Rational& x) -> Rational { return x * x; }};
}

/// |x| on the real additive group.
inline Gyronorm<RealAdditiveGroup> real_abs_norm() {
    return {"r-abs", [](double x) { return std::abs(x); }};
}

/// N(x,t) = t / (t + ||x||); satisfies N1-N6 for every continuous t-norm.
template <typename G>
FuzzyGyronorm<G> fuzzy_from_gyronorm(const Gyronorm<G>& nrm, TNorm star) {
    auto eval = nrm.eval;
    return {nrm.name + "-standard", std::move(star),
            [eval](const typename G::Element& x, double t) {
                if (t <= 0) throw std::domain_error("fuzzy gyronorm needs t > 0");
                return t / (t + eval(x));
            }};
}

template <typename G>
StdFuzzyGyronorm<G> fuzzy_from_gyronorm(const ExactGyronorm<G>& nrm, TNorm star) {
    return {nrm.name + "-standard", std::move(star), nrm.norm_sq};
}

inline std::vector<Rational> default_t_grid() {
    return {make_rational(1, 4), make_rational(1, 2), Rational(1), Rational(2), Rational(4)};
}

inline std::vector<double> default_t_grid_float() {
    return {0.25, 0.5, 1.0, 2.0, 4.0};
}

/// Definition-3.1 suite, exact: positivity, inverse invariance, subadditivity,
/// gyration invariance, all decided on rational squares.
template <Gyrogroup G, typename Sampler>
PropertyReport verify_gyronorm(const G& g, const ExactGyronorm<G>& nrm, Sampler sample,
                               std::size_t n, std::uint64_t seed) {
    PropertyReport report("gyronorm:" + nrm.name + "@" + g.name(), seed, n);
    Rng rng(seed);
    const auto e = g.identity();

    auto& pos = report.add_check("positivity");
    auto& inv = report.add_check("inverse-invariance");
    auto& sub = report.add_check("subadditivity");
    auto& gyri = report.add_check("gyration-invariance");

    for (std::size_t i = 0; i < n; ++i) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        Rational nx = nrm.norm_sq(x);
        if (nx < 0 || (nx == 0) != g.eq(x, e))
            pos.fail(detail::tuple_witness(g, {&x}), to_double(nx));
        if (nrm.norm_sq(g.neg(x)) != nx)
            inv.fail(detail::tuple_witness(g, {&x}),
                     std::abs(to_double(nrm.norm_sq(g.neg(x)) - nx)));
        if (!sqrt_subadditive(nrm.norm_sq(g.oplus(x, y)), nx, nrm.norm_sq(y)))
            sub.fail(detail::tuple_witness(g, {&x, &y}));
        if (nrm.norm_sq(g.gyr(a, b, x)) != nx)
            gyri.fail(detail::tuple_witness(g, {&a, &b, &x}),
                      std::abs(to_double(nrm.norm_sq(g.gyr(a, b, x)) - nx)));
    }
    return report;
}

/// Definition-3.1 suite, float mode with tolerance.
template <Gyrogroup G, typename Sampler>
PropertyReport verify_gyronorm(const G& g, const Gyronorm<G>& nrm, Sampler sample, std::size_t n,
                               std::uint64_t seed, double tol) {
    PropertyReport report("gyronorm:" + nrm.name + "@" + g.name(), seed, n);
    Rng rng(seed);
    const auto e = g.identity();

    auto& pos = report.add_check("positivity");
    auto& inv = report.add_check("inverse-invariance");
    auto& sub = report.add_check("subadditivity");
    auto& gyri = report.add_check("gyration-invariance");

    for (std::size_t i = 0; i < n; ++i) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        double nx = nrm.eval(x);
        if (nx < 0 || (g.eq(x, e) && nx > tol) || (!g.eq(x, e) && nx == 0.0))
            pos.fail(detail::tuple_witness(g, {&x}), nx);
        if (std::abs(nrm.eval(g.neg(x)) - nx) > tol)
            inv.fail(detail::tuple_witness(g, {&x}), std::abs(nrm.eval(g.neg(x)) - nx));
        double lhs = nrm.eval(g.oplus(x, y));
        double rhs = nx + nrm.eval(y);
        if (lhs > rhs + tol) sub.fail(detail::tuple_witness(g, {&x, &y}), lhs - rhs);
        double gn = nrm.eval(g.gyr(a, b, x));
        if (std::abs(gn - nx) > tol)
            gyri.fail(detail::tuple_witness(g, {&a, &b, &x}), std::abs(gn - nx));
    }
    return report;
}

namespace detail {

/// Oscillation of u -> N(x, u) over a dyadic grid of the given step count on
/// [lo, hi]; used for the N5 refinement probe.
template <typename Eval>
double grid_oscillation_in_t(Eval&& value_at, double lo, double hi, std::size_t steps) {
    double osc = 0.0;
    double prev = value_at(lo);
    for (std::size_t k = 1; k <= steps; ++k) {
        double u = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps);
        double cur = value_at(u);
        osc = std::max(osc, std::abs(cur - prev));
        prev = cur;
    }
    return osc;
}

}  // namespace detail

/// Definition-3.2 suite for the exact standard form: N1-N4 and N6 decided
/// exactly over samples x t_grid (N4 over all ordered grid pairs), N5 via
/// oscillation shrinkage on a refining t-grid. Also re-walks the paper's
/// min-form chain for N4 as a separate law.
template <Gyrogroup G, typename Sampler>
PropertyReport verify_fuzzy_gyronorm(const G& g, const StdFuzzyGyronorm<G>& N, Sampler sample,
                                     std::size_t n, std::uint64_t seed,
                                     const std::vector<Rational>& t_grid = default_t_grid()) {
    PropertyReport report("fuzzy-gyronorm:" + N.name + "+" + N.tnorm.name() + "@" + g.name(), seed,
                          n);
    Rng rng(seed);
    const auto e = g.identity();

    auto& n1 = report.add_check("N1-positivity");
    auto& n2 = report.add_check("N2-identity");
    auto& n3 = report.add_check("N3-inverse-invariance");
    auto& n4 = report.add_check("N4-triangle");
    auto& n4min = report.add_check("N4-min-form-chain");
    auto& n5 = report.add_check("N5-t-continuity");
    auto& n6 = report.add_check("N6-gyration-invariance");

    const bool exact_kind = N.tnorm.kind() != TNormKind::tabulated;

    for (std::size_t i = 0; i < n; ++i) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        Rational U = N.norm_sq(x);
        Rational V = N.norm_sq(y);
        Rational W = N.norm_sq(g.oplus(x, y));

        if (U < 0) n1.fail(detail::tuple_witness(g, {&x}), to_double(U));
        if ((U == 0) != g.eq(x, e)) n2.fail(detail::tuple_witness(g, {&x}));
        if (N.norm_sq(g.neg(x)) != U) n3.fail(detail::tuple_witness(g, {&x}));
        if (N.norm_sq(g.gyr(a, b, x)) != U) n6.fail(detail::tuple_witness(g, {&a, &b, &x}));

        for (const Rational& t : t_grid) {
            for (const Rational& s : t_grid) {
                StdFuzzyVal whole{t + s, W};
                StdFuzzyVal left{t, U};
                StdFuzzyVal right{s, V};
                if (exact_kind) {
                    if (!N.tnorm.std_triangle_holds(whole, left, right)) {
                        auto w = detail::tuple_witness(g, {&x, &y});
                        w["t"] = format_rational(t);
                        w["s"] = format_rational(s);
                        n4.fail(std::move(w));
                    }
                } else {
                    double lhs = whole.value();
                    double rhs = N.tnorm.eval(left.value(), right.value());
                    if (lhs < rhs - 1e-9) {
                        auto w = detail::tuple_witness(g, {&x, &y});
                        w["t"] = format_rational(t);
                        w["s"] = format_rational(s);
                        n4.fail(std::move(w), rhs - lhs);
                    }
                }

                // The proof's route: ||x+y|| <= ||x|| + ||y||, then
                // (t+s)/(t+s+||x||+||y||) >= the min side, where the min is
                // picked by s||x|| <= t||y||  <=>  ||x||/t <= ||y||/s.
                bool subadd = sqrt_subadditive(W, U, V);
                bool x_side_larger = s * s * U <= t * t * V;  // N(x,t) >= N(y,s)
                const StdFuzzyVal& min_side = x_side_larger ? right : left;
                bool min_bound = cmp(whole, min_side) >= 0;
                if (!subadd || !min_bound || min_bound != std_ge_min(whole, left, right)) {
                    auto w = detail::tuple_witness(g, {&x, &y});
                    w["t"] = format_rational(t);
                    w["s"] = format_rational(s);
                    n4min.fail(std::move(w));
                }
            }
        }
    }

    // N5: t -> N(x,t) oscillation must (roughly) halve when the t-grid doubles.
    {
        const std::size_t probes = std::min<std::size_t>(n, 32);
        for (std::size_t i = 0; i < probes; ++i) {
            auto x = sample(rng);
            auto value_at = [&](double u) { return N.eval(x, u); };
            double osc1 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 64);
            double osc2 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 128);
            n5.note_deviation(osc2);
            if (osc2 > 0.8 * osc1 + 1e-12)
                n5.fail(detail::tuple_witness(g, {&x}), osc2 - 0.8 * osc1);
        }
    }
    return report;
}

/// Definition-3.2 suite in float mode with tolerance.
template <Gyrogroup G, typename Sampler>
PropertyReport verify_fuzzy_gyronorm(const G& g, const FuzzyGyronorm<G>& N, Sampler sample,
                                     std::size_t n, std::uint64_t seed, double tol,
                                     const std::vector<double>& t_grid = default_t_grid_float()) {
    PropertyReport report("fuzzy-gyronorm:" + N.name + "+" + N.tnorm.name() + "@" + g.name(), seed,
                          n);
    Rng rng(seed);
    const auto e = g.identity();

    auto& n1 = report.add_check("N1-positivity");
    auto& n2 = report.add_check("N2-identity");
    auto& n3 = report.add_check("N3-inverse-invariance");
    auto& n4 = report.add_check("N4-triangle");
    auto& n5 = report.add_check("N5-t-continuity");
    auto& n6 = report.add_check("N6-gyration-invariance");

    for (std::size_t i = 0; i < n; ++i) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        for (double t : t_grid) {
            double nx = N.eval(x, t);
            if (nx <= 0.0) n1.fail(detail::tuple_witness(g, {&x}), -nx);
            if (g.eq(x, e) ? std::abs(nx - 1.0) > tol : nx >= 1.0)
                n2.fail(detail::tuple_witness(g, {&x}));
            if (std::abs(N.eval(g.neg(x), t) - nx) > tol)
                n3.fail(detail::tuple_witness(g, {&x}), std::abs(N.eval(g.neg(x), t) - nx));
            if (std::abs(N.eval(g.gyr(a, b, x), t) - nx) > tol)
                n6.fail(detail::tuple_witness(g, {&a, &b, &x}),
                        std::abs(N.eval(g.gyr(a, b, x), t) - nx));
            for (double s : t_grid) {
                double lhs = N.eval(g.oplus(x, y), t + s);
                double rhs = N.tnorm.eval(N.eval(x, t), N.eval(y, s));
                if (lhs < rhs - tol) {
                    auto w = detail::tuple_witness(g, {&x, &y});
                    w["t"] = t;
                    w["s"] = s;
                    n4.fail(std::move(w), rhs - lhs);
                }
            }
        }
    }

    const std::size_t probes = std::min<std::size_t>(n, 32);
    for (std::size_t i = 0; i < probes; ++i) {
        auto x = sample(rng);
        auto value_at = [&](double u) { return N.eval(x, u); };
        double osc1 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 64);
        double osc2 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 128);
        n5.note_deviation(osc2);
        if (osc2 > 0.8 * osc1 + 1e-12) n5.fail(detail::tuple_witness(g, {&x}), osc2 - 0.8 * osc1);
    }
    return report;
}

}  // namespace gyrofuzz
