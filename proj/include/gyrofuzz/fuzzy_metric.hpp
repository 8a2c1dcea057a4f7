#pragma once

#include "gyrofuzz/norms.hpp"

#include <functional>
#include <optional>

namespace gyrofuzz {

/// Plain metric on a carrier, float mode.
template <typename C>
struct Metric {
    std::string name;
    std::function<double(const typename C::Element&, const typename C::Element&)> dist;
};

/// Exact metric: the distance of x,y is sqrt(dist_sq(x,y)) with dist_sq rational.
template <typename C>
struct ExactMetric {
    std::string name;
    std::function<Rational(const typename C::Element&, const typename C::Element&)> dist_sq;
};

/// General fuzzy metric in float mode.
template <typename C>
struct FuzzyMetric {
    std::string name;
    TNorm tnorm;
    std::function<double(const typename C::Element&, const typename C::Element&, double)> eval;
};

/// Exact fuzzy metric of the standard shape M(x,y,t) = t / (t + d(x,y)).
template <typename C>
struct StdFuzzyMetric {
    std::string name;
    TNorm tnorm;
    std::function<Rational(const typename C::Element&, const typename C::Element&)> dist_sq;

    StdFuzzyVal at(const typename C::Element& x, const typename C::Element& y,
                   const Rational& t) const {
        if (t <= 0) throw std::domain_error("fuzzy metric needs t > 0");
        return StdFuzzyVal{t, dist_sq(x, y)};
    }
    double eval(const typename C::Element& x, const typename C::Element& y, double t) const {
        if (t <= 0) throw std::domain_error("fuzzy metric needs t > 0");
        return t / (t + std::sqrt(to_double(dist_sq(x, y))));
    }
};

template <typename C>
FuzzyMetric<C> standard_fuzzy_metric(const Metric<C>& d, TNorm star) {
    auto dist = d.dist;
    return {"standard:" + d.name, std::move(star),
            [dist](const auto& x, const auto& y, double t) {
                if (t <= 0) throw std::domain_error("fuzzy metric needs t > 0");
                return t / (t + dist(x, y));
            }};
}

template <typename C>
StdFuzzyMetric<C> standard_fuzzy_metric(const ExactMetric<C>& d, TNorm star) {
    return {"standard:" + d.name, std::move(star), d.dist_sq};
}

/// M_N(x,y,t) = N(neg(x) + y, t).
template <Gyrogroup G>
FuzzyMetric<G> metric_from_fuzzy_gyronorm(const G& g, const FuzzyGyronorm<G>& N) {
    auto eval = N.eval;
    return {"M_N:" + N.name, N.tnorm, [&g, eval](const auto& x, const auto& y, double t) {
                return eval(g.oplus(g.neg(x), y), t);
            }};
}

template <Gyrogroup G>
StdFuzzyMetric<G> metric_from_fuzzy_gyronorm(const G& g, const StdFuzzyGyronorm<G>& N) {
    auto nsq = N.norm_sq;
    return {"M_N:" + N.name, N.tnorm, [&g, nsq](const auto& x, const auto& y) {
                return nsq(g.oplus(g.neg(x), y));
            }};
}

/// N_M(x,t) = M(e,x,t); the theorem requires M left-invariant, which the
/// caller establishes with check_invariance first.
template <Gyrogroup G>
StdFuzzyGyronorm<G> gyronorm_from_invariant_metric(const G& g, const StdFuzzyMetric<G>& M) {
    auto dsq = M.dist_sq;
    auto e = g.identity();
    return {"N_M:" + M.name, M.tnorm, [dsq, e](const auto& x) { return dsq(e, x); }};
}

template <Gyrogroup G>
FuzzyGyronorm<G> gyronorm_from_invariant_metric(const G& g, const FuzzyMetric<G>& M) {
    auto eval = M.eval;
    auto e = g.identity();
    return {"N_M:" + M.name, M.tnorm,
            [eval, e](const auto& x, double t) { return eval(e, x, t); }};
}

// ---------------------------------------------------------------------------
// Definition 1.1 law suite
// ---------------------------------------------------------------------------

/// Exact suite: (i) positivity, (ii) identity of indiscernibles, (iii)
/// symmetry, (iv) the *-triangle over all ordered t-grid pairs, (v) continuity
/// in t by oscillation refinement.
template <typename C, typename Sampler>
PropertyReport verify_fuzzy_metric(const C& carrier, const StdFuzzyMetric<C>& M, Sampler sample,
                                   std::size_t n, std::uint64_t seed,
                                   const std::vector<Rational>& t_grid = default_t_grid()) {
    PropertyReport report("fuzzy-metric:" + M.name + "+" + M.tnorm.name() + "@" + carrier.name(),
                          seed, n);
    Rng rng(seed);

    auto& i_pos = report.add_check("i-positivity");
    auto& ii_id = report.add_check("ii-identity");
    auto& iii_sym = report.add_check("iii-symmetry");
    auto& iv_tri = report.add_check("iv-triangle");
    auto& v_cont = report.add_check("v-t-continuity");

    const bool exact_kind = M.tnorm.kind() != TNormKind::tabulated;

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), z = sample(rng);
        Rational dxy = M.dist_sq(x, y);
        if (dxy < 0) i_pos.fail(detail::tuple_witness(carrier, {&x, &y}), to_double(dxy));
        if ((dxy == 0) != carrier.eq(x, y)) ii_id.fail(detail::tuple_witness(carrier, {&x, &y}));
        if (M.dist_sq(y, x) != dxy)
            iii_sym.fail(detail::tuple_witness(carrier, {&x, &y}),
                         std::abs(to_double(M.dist_sq(y, x) - dxy)));

        Rational dxz = M.dist_sq(x, z);
        Rational dzy = M.dist_sq(z, y);
        for (const Rational& t : t_grid) {
            for (const Rational& s : t_grid) {
                StdFuzzyVal whole{t + s, dxy};
                StdFuzzyVal left{t, dxz};
                StdFuzzyVal right{s, dzy};
                bool ok;
                if (exact_kind) {
                    ok = M.tnorm.std_triangle_holds(whole, left, right);
                } else {
                    ok = whole.value() >= M.tnorm.eval(left.value(), right.value()) - 1e-9;
                }
                if (!ok) {
                    auto w = detail::tuple_witness(carrier, {&x, &y, &z});
                    w["t"] = format_rational(t);
                    w["s"] = format_rational(s);
                    iv_tri.fail(std::move(w));
                }
            }
        }
    }

    const std::size_t probes = std::min<std::size_t>(n, 32);
    for (std::size_t k = 0; k < probes; ++k) {
        auto x = sample(rng), y = sample(rng);
        auto value_at = [&](double u) { return M.eval(x, y, u); };
        double osc1 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 64);
        double osc2 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 128);
        v_cont.note_deviation(osc2);
        if (osc2 > 0.8 * osc1 + 1e-12)
            v_cont.fail(detail::tuple_witness(carrier, {&x, &y}), osc2 - 0.8 * osc1);
    }
    return report;
}

/// Float-mode Definition 1.1 suite.
template <typename C, typename Sampler>
PropertyReport verify_fuzzy_metric(const C& carrier, const FuzzyMetric<C>& M, Sampler sample,
                                   std::size_t n, std::uint64_t seed, double tol,
                                   const std::vector<double>& t_grid = default_t_grid_float()) {
    PropertyReport report("fuzzy-metric:" + M.name + "+" + M.tnorm.name() + "@" + carrier.name(),
                          seed, n);
    Rng rng(seed);

    auto& i_pos = report.add_check("i-positivity");
    auto& ii_id = report.add_check("ii-identity");
    auto& iii_sym = report.add_check("iii-symmetry");
    auto& iv_tri = report.add_check("iv-triangle");
    auto& v_cont = report.add_check("v-t-continuity");

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), z = sample(rng);
        for (double t : t_grid) {
            double m = M.eval(x, y, t);
            if (m <= 0.0) i_pos.fail(detail::tuple_witness(carrier, {&x, &y}), -m);
            if (carrier.eq(x, y) ? std::abs(m - 1.0) > tol : m >= 1.0)
                ii_id.fail(detail::tuple_witness(carrier, {&x, &y}));
            if (std::abs(M.eval(y, x, t) - m) > tol)
                iii_sym.fail(detail::tuple_witness(carrier, {&x, &y}),
                             std::abs(M.eval(y, x, t) - m));
            for (double s : t_grid) {
                double lhs = M.eval(x, y, t + s);
                double rhs = M.tnorm.eval(M.eval(x, z, t), M.eval(z, y, s));
                if (lhs < rhs - tol) {
                    auto w = detail::tuple_witness(carrier, {&x, &y, &z});
                    w["t"] = t;
                    w["s"] = s;
                    iv_tri.fail(std::move(w), rhs - lhs);
                }
            }
        }
    }

    const std::size_t probes = std::min<std::size_t>(n, 32);
    for (std::size_t k = 0; k < probes; ++k) {
        auto x = sample(rng), y = sample(rng);
        auto value_at = [&](double u) { return M.eval(x, y, u); };
        double osc1 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 64);
        double osc2 = detail::grid_oscillation_in_t(value_at, 0.25, 4.0, 128);
        v_cont.note_deviation(osc2);
        if (osc2 > 0.8 * osc1 + 1e-12)
            v_cont.fail(detail::tuple_witness(carrier, {&x, &y}), osc2 - 0.8 * osc1);
    }
    return report;
}

/// The proof steps that make M_N symmetric and triangular, replayed as exact
/// element/norm identities at the proof's own instantiations.
template <Gyrogroup G, typename Sampler>
PropertyReport verify_induced_metric_proof_chain(const G& g, const StdFuzzyGyronorm<G>& N,
                                                 Sampler sample, std::size_t n,
                                                 std::uint64_t seed) {
    PropertyReport report("induced-metric-chain:" + N.name + "@" + g.name(), seed, n);
    Rng rng(seed);

    auto& sym_el = report.add_check("symmetry-step-gyr-element");
    auto& sym_nrm = report.add_check("symmetry-step-norms");
    auto& tri_el = report.add_check("triangle-step-decomposition");

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), z = sample(rng);
        auto nx = g.neg(x);
        // neg(neg(x) + y) = gyr[neg x, y](neg(y) + x)
        auto lhs = g.neg(g.oplus(nx, y));
        auto rhs = g.gyr(nx, y, g.oplus(g.neg(y), x));
        if (!g.eq(lhs, rhs)) sym_el.fail(detail::tuple_witness(g, {&x, &y}), g.dist(lhs, rhs));
        // the same step at the norm level: N3 then N6 collapse the chain
        Rational a = N.norm_sq(g.oplus(nx, y));
        if (N.norm_sq(lhs) != a || N.norm_sq(g.oplus(g.neg(y), x)) != a)
            sym_nrm.fail(detail::tuple_witness(g, {&x, &y}));
        // neg(x) + z = (neg(x) + y) + gyr[neg x, y](neg(y) + z)
        auto direct = g.oplus(nx, z);
        auto split = g.oplus(g.oplus(nx, y), g.gyr(nx, y, g.oplus(g.neg(y), z)));
        if (!g.eq(direct, split))
            tri_el.fail(detail::tuple_witness(g, {&x, &y, &z}), g.dist(direct, split));
    }
    return report;
}

// ---------------------------------------------------------------------------
// Invariance
// ---------------------------------------------------------------------------

enum class Side { left, right, both, gyration };

inline const char* side_name(Side s) {
    switch (s) {
        case Side::left: return "left";
        case Side::right: return "right";
        case Side::both: return "both";
        case Side::gyration: return "gyration";
    }
    return "?";
}

/// Exact invariance check: the standard form makes M-invariance equivalent to
/// dist_sq-invariance, so each side is one rational equality per sample.
template <Gyrogroup G, typename Sampler>
PropertyReport check_invariance(const G& g, const StdFuzzyMetric<G>& M, Side side, Sampler sample,
                                std::size_t n, std::uint64_t seed,
                                const std::vector<Rational>& t_grid = default_t_grid()) {
    PropertyReport report(
        "invariance:" + std::string(side_name(side)) + ":" + M.name + "@" + g.name(), seed, n);
    Rng rng(seed);

    CheckResult* left = nullptr;
    CheckResult* right = nullptr;
    CheckResult* gyr = nullptr;
    if (side == Side::left || side == Side::both) left = &report.add_check("left-invariance");
    if (side == Side::right || side == Side::both) right = &report.add_check("right-invariance");
    if (side == Side::gyration) gyr = &report.add_check("gyration-invariance");

    auto deviation = [&](const Rational& d1, const Rational& d2) {
        double v1 = std::sqrt(to_double(d1));
        double v2 = std::sqrt(to_double(d2));
        double worst = 0.0;
        for (const Rational& t : t_grid) {
            double td = to_double(t);
            worst = std::max(worst, std::abs(td / (td + v1) - td / (td + v2)));
        }
        return worst;
    };

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        Rational base = M.dist_sq(x, y);
        if (left) {
            Rational lhs = M.dist_sq(g.oplus(a, x), g.oplus(a, y));
            if (lhs != base)
                left->fail(detail::tuple_witness(g, {&a, &x, &y}), deviation(lhs, base));
        }
        if (right) {
            Rational lhs = M.dist_sq(g.oplus(x, a), g.oplus(y, a));
            if (lhs != base)
                right->fail(detail::tuple_witness(g, {&a, &x, &y}), deviation(lhs, base));
        }
        if (gyr) {
            Rational lhs = M.dist_sq(g.gyr(a, b, x), g.gyr(a, b, y));
            if (lhs != base)
                gyr->fail(detail::tuple_witness(g, {&a, &b, &x, &y}), deviation(lhs, base));
        }
    }
    return report;
}

/// Float-mode invariance check over the t-grid.
template <Gyrogroup G, typename Sampler>
PropertyReport check_invariance(const G& g, const FuzzyMetric<G>& M, Side side, Sampler sample,
                                std::size_t n, std::uint64_t seed, double tol,
                                const std::vector<double>& t_grid = default_t_grid_float()) {
    PropertyReport report(
        "invariance:" + std::string(side_name(side)) + ":" + M.name + "@" + g.name(), seed, n);
    Rng rng(seed);

    CheckResult* left = nullptr;
    CheckResult* right = nullptr;
    CheckResult* gyr = nullptr;
    if (side == Side::left || side == Side::both) left = &report.add_check("left-invariance");
    if (side == Side::right || side == Side::both) right = &report.add_check("right-invariance");
    if (side == Side::gyration) gyr = &report.add_check("gyration-invariance");

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        for (double t : t_grid) {
            double base = M.eval(x, y, t);
            if (left) {
                double lhs = M.eval(g.oplus(a, x), g.oplus(a, y), t);
                if (std::abs(lhs - base) > tol)
                    left->fail(detail::tuple_witness(g, {&a, &x, &y}), std::abs(lhs - base));
                else
                    left->note_deviation(std::abs(lhs - base));
            }
            if (right) {
                double lhs = M.eval(g.oplus(x, a), g.oplus(y, a), t);
                if (std::abs(lhs - base) > tol)
                    right->fail(detail::tuple_witness(g, {&a, &x, &y}), std::abs(lhs - base));
                else
                    right->note_deviation(std::abs(lhs - base));
            }
            if (gyr) {
                double lhs = M.eval(g.gyr(a, b, x), g.gyr(a, b, y), t);
                if (std::abs(lhs - base) > tol)
                    gyr->fail(detail::tuple_witness(g, {&a, &b, &x, &y}), std::abs(lhs - base));
                else
                    gyr->note_deviation(std::abs(lhs - base));
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Klee conditions
// ---------------------------------------------------------------------------

/// Evaluation of the four conditions of the Klee theorem plus per-sample
/// implication audits at the instantiations the proof licenses. Condition rows
/// may legitimately fail on an instance (they are hypotheses, not theorems);
/// the audit rows must never fail.
struct KleeReport {
    PropertyReport report;

    bool condition_holds(std::string_view law) const {
        const CheckResult* c = report.find(law);
        return c && c->pass;
    }
    bool all_conditions_hold() const {
        return condition_holds("I-right-gyrotranslation-inequality") &&
               condition_holds("I'-klee-condition") && condition_holds("II-commutative-like") &&
               condition_holds("II'-right-gyrotranslation-invariance");
    }
    bool audits_pass() const {
        for (const auto& c : report.checks())
            if (c.law.rfind("audit-", 0) == 0 && !c.pass) return false;
        return true;
    }
    nlohmann::json to_json() const { return report.to_json(); }
};

/// Exact Klee audit over the standard form. The commutative-like condition is
/// stated through the norm N; when only M is given, N is read off as N_M.
template <Gyrogroup G, typename Sampler>
KleeReport check_klee(const G& g, const StdFuzzyMetric<G>& M, Sampler sample, std::size_t n,
                      std::uint64_t seed, const std::vector<Rational>& t_grid = default_t_grid()) {
    PropertyReport report("klee:" + M.name + "@" + g.name(), seed, n);
    Rng rng(seed);
    const auto e = g.identity();
    auto nsq = [&](const typename G::Element& x) { return M.dist_sq(e, x); };

    auto& c1 = report.add_check("I-right-gyrotranslation-inequality");
    auto& c1p = report.add_check("I'-klee-condition");
    auto& c2 = report.add_check("II-commutative-like");
    auto& c2p = report.add_check("II'-right-gyrotranslation-invariance");
    auto& a_iff = report.add_check("audit-II-iff-II'");
    auto& a_2p1 = report.add_check("audit-II'-implies-I");
    auto& a_11p = report.add_check("audit-I-implies-I'");
    auto& a_shares = report.add_check("audit-I'-implies-I-shares");

    // Condition evaluators at explicit tuples; exact, t-free where the
    // standard form makes t cancel.
    auto cond_I = [&](const auto& x, const auto& y, const auto& a) {
        return M.dist_sq(g.oplus(x, a), g.oplus(y, a)) <= M.dist_sq(x, y);
    };
    auto cond_IIp = [&](const auto& x, const auto& y, const auto& a) {
        return M.dist_sq(g.oplus(x, a), g.oplus(y, a)) == M.dist_sq(x, y);
    };
    auto cond_II = [&](const auto& x, const auto& y, const auto& a) {
        auto lhs = g.oplus(g.oplus(a, x), g.gyr(a, x, g.oplus(y, g.neg(a))));
        return nsq(lhs) == nsq(g.oplus(x, y));
    };
    auto cond_Ip = [&](const auto& x, const auto& y, const auto& a, const auto& b,
                       const Rational& t, const Rational& s) {
        StdFuzzyVal whole{t + s, M.dist_sq(g.oplus(x, y), g.oplus(a, b))};
        StdFuzzyVal l{t, M.dist_sq(x, a)};
        StdFuzzyVal r{s, M.dist_sq(y, b)};
        return M.tnorm.std_triangle_holds(whole, l, r);
    };

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);

        const bool i_here = cond_I(x, y, a);
        const bool iip_here = cond_IIp(x, y, a);
        const bool ii_here = cond_II(x, y, a);
        if (!i_here) c1.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (!iip_here) c2p.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (!ii_here) c2.fail(detail::tuple_witness(g, {&x, &y, &a}));

        // (II) at tau holds iff (II') at (neg x, y, neg a); both directions
        // are proved through N6 and the even/inversive-symmetry properties.
        auto mx = g.neg(x);
        auto ma = g.neg(a);
        if (ii_here != cond_IIp(mx, y, ma)) a_iff.fail(detail::tuple_witness(g, {&x, &y, &a}));

        // (II') is an equality, (I) the matching inequality on the same tuple.
        if (iip_here && !i_here) a_2p1.fail(detail::tuple_witness(g, {&x, &y, &a}));

        bool ip_all = true;
        for (const Rational& t : t_grid) {
            for (const Rational& s : t_grid) {
                if (!cond_Ip(x, y, a, b, t, s)) {
                    ip_all = false;
                    auto w = detail::tuple_witness(g, {&x, &y, &a, &b});
                    w["t"] = format_rational(t);
                    w["s"] = format_rational(s);
                    c1p.fail(std::move(w));
                }
            }
        }

        // (I) at (x, a, b) + left-invariance + axiom (iv) forces (I') at
        // (x, y, a, b) for every split of t+s.
        if (cond_I(x, a, b) && !ip_all) {
            bool left_inv_here =
                M.dist_sq(g.oplus(x, y), g.oplus(x, b)) == M.dist_sq(y, b);
            if (left_inv_here) a_11p.fail(detail::tuple_witness(g, {&x, &y, &a, &b}));
        }

        // The b = a instantiation of (I)': M(a,a,s) = 1 makes the *-bound and
        // the direct share comparison the same statement; the two exact
        // decision paths must agree (this is the t->0 reading of the proof).
        for (const Rational& t : t_grid) {
            for (const Rational& s : t_grid) {
                if (!(s < t)) continue;
                Rational tr = t - s;
                StdFuzzyVal whole{t, M.dist_sq(g.oplus(x, a), g.oplus(y, a))};
                StdFuzzyVal l{tr, M.dist_sq(x, y)};
                StdFuzzyVal unit{s, Rational(0)};
                bool via_tnorm = M.tnorm.std_triangle_holds(whole, l, unit);
                bool direct = cmp(whole, l) >= 0;
                if (via_tnorm != direct) {
                    auto w = detail::tuple_witness(g, {&x, &y, &a});
                    w["t"] = format_rational(t);
                    w["s"] = format_rational(s);
                    a_shares.fail(std::move(w));
                }
            }
        }
    }
    return KleeReport{std::move(report)};
}

/// Float-mode Klee audit with tolerance.
template <Gyrogroup G, typename Sampler>
KleeReport check_klee(const G& g, const FuzzyMetric<G>& M, Sampler sample, std::size_t n,
                      std::uint64_t seed, double tol,
                      const std::vector<double>& t_grid = default_t_grid_float()) {
    PropertyReport report("klee:" + M.name + "@" + g.name(), seed, n);
    Rng rng(seed);
    const auto e = g.identity();
    auto Nval = [&](const typename G::Element& x, double t) { return M.eval(e, x, t); };

    auto& c1 = report.add_check("I-right-gyrotranslation-inequality");
    auto& c1p = report.add_check("I'-klee-condition");
    auto& c2 = report.add_check("II-commutative-like");
    auto& c2p = report.add_check("II'-right-gyrotranslation-invariance");
    auto& a_iff = report.add_check("audit-II-iff-II'");
    auto& a_2p1 = report.add_check("audit-II'-implies-I");
    auto& a_11p = report.add_check("audit-I-implies-I'");

    auto cond_I = [&](const auto& x, const auto& y, const auto& a) {
        for (double t : t_grid)
            if (M.eval(g.oplus(x, a), g.oplus(y, a), t) < M.eval(x, y, t) - tol) return false;
        return true;
    };
    auto cond_IIp = [&](const auto& x, const auto& y, const auto& a) {
        for (double t : t_grid)
            if (std::abs(M.eval(g.oplus(x, a), g.oplus(y, a), t) - M.eval(x, y, t)) > tol)
                return false;
        return true;
    };
    auto cond_II = [&](const auto& x, const auto& y, const auto& a) {
        auto lhs = g.oplus(g.oplus(a, x), g.gyr(a, x, g.oplus(y, g.neg(a))));
        for (double t : t_grid)
            if (std::abs(Nval(lhs, t) - Nval(g.oplus(x, y), t)) > tol) return false;
        return true;
    };
    auto cond_Ip = [&](const auto& x, const auto& y, const auto& a, const auto& b) {
        for (double t : t_grid)
            for (double s : t_grid) {
                double lhs = M.eval(g.oplus(x, y), g.oplus(a, b), t + s);
                double rhs = M.tnorm.eval(M.eval(x, a, t), M.eval(y, b, s));
                if (lhs < rhs - tol) return false;
            }
        return true;
    };

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng), a = sample(rng), b = sample(rng);
        const bool i_here = cond_I(x, y, a);
        const bool iip_here = cond_IIp(x, y, a);
        const bool ii_here = cond_II(x, y, a);
        const bool ip_here = cond_Ip(x, y, a, b);
        if (!i_here) c1.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (!iip_here) c2p.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (!ii_here) c2.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (!ip_here) c1p.fail(detail::tuple_witness(g, {&x, &y, &a, &b}));

        if (ii_here != cond_IIp(g.neg(x), y, g.neg(a)))
            a_iff.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (iip_here && !i_here) a_2p1.fail(detail::tuple_witness(g, {&x, &y, &a}));
        if (cond_I(x, a, b) && !ip_here) {
            bool left_inv_here = true;
            for (double t : t_grid)
                if (std::abs(M.eval(g.oplus(x, y), g.oplus(x, b), t) - M.eval(y, b, t)) > tol)
                    left_inv_here = false;
            if (left_inv_here) a_11p.fail(detail::tuple_witness(g, {&x, &y, &a, &b}));
        }
    }
    return KleeReport{std::move(report)};
}

// ---------------------------------------------------------------------------
// Balls, continuity witnesses, automorphism isometries
// ---------------------------------------------------------------------------

/// Open ball B_M(center, eps, t) = { y : M(center, y, t) > 1 - eps }.
template <typename C>
struct Ball {
    typename C::Element center;
    Rational eps;
    Rational t;
};

template <typename C>
Ball<C> make_ball(typename C::Element center, Rational eps, Rational t) {
    if (eps <= 0 || eps >= 1) throw std::domain_error("ball radius eps must lie in (0,1)");
    if (t <= 0) throw std::domain_error("ball scale t must be positive");
    return Ball<C>{std::move(center), std::move(eps), std::move(t)};
}

template <typename C>
struct BallF {
    typename C::Element center;
    double eps;
    double t;
};

template <typename C>
BallF<C> make_ball(typename C::Element center, double eps, double t) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("ball radius eps must lie in (0,1)");
    if (!(t > 0.0)) throw std::domain_error("ball scale t must be positive");
    return BallF<C>{std::move(center), eps, t};
}

template <typename C>
bool ball_membership(const StdFuzzyMetric<C>& M, const Ball<C>& ball,
                     const typename C::Element& y) {
    return std_exceeds(M.at(ball.center, y, ball.t), ball.eps);
}

template <typename C>
bool ball_membership(const FuzzyMetric<C>& M, const BallF<C>& ball,
                     const typename C::Element& y) {
    return M.eval(ball.center, y, ball.t) > 1.0 - ball.eps;
}

/// Rejection sampling of a ball member from a carrier sampler. Returns nullopt
/// when max_tries candidates all miss, which callers treat as "no sample".
template <typename C, typename Sampler>
std::optional<typename C::Element> sample_in_ball(const FuzzyMetric<C>& M, const BallF<C>& ball,
                                                  Sampler& sample, Rng& rng,
                                                  std::size_t max_tries = 500) {
    for (std::size_t i = 0; i < max_tries; ++i) {
        auto candidate = sample(rng);
        if (ball_membership(M, ball, candidate)) return candidate;
    }
    return std::nullopt;
}

/// Witness record of the topological-gyrogroup construction: around x, y the
/// balls of radius eps0 = tnorm_root(*, eps) at scale t/2 multiply into the
/// target ball around x+y at scale t.
struct ContinuityWitness {
    double eps0 = 0.0;
    double t_half = 0.0;
    bool sound = false;  // Klee (I)' verified for this metric
    std::size_t pairs_checked = 0;
    std::size_t pair_failures = 0;
    std::size_t inversion_checked = 0;
    std::size_t inversion_failures = 0;

    bool ok() const { return pair_failures == 0 && inversion_failures == 0; }

    nlohmann::json to_json() const {
        return {{"eps0", eps0},
                {"t_half", t_half},
                {"sound", sound},
                {"pairs_checked", pairs_checked},
                {"pair_failures", pair_failures},
                {"inversion_checked", inversion_checked},
                {"inversion_failures", inversion_failures}};
    }
};

/// Builds the (eps0, t/2) witness and validates it by sampling: a, b from the
/// two small balls must satisfy a+b in B(x+y, eps, t), and members of
/// B(x, eps, t) must invert into B(neg x, eps, t). `in_ball` draws a member of
/// a given float ball (or nullopt). The witness is flagged unsound unless the
/// caller verified Klee (I)'.
template <Gyrogroup G, typename BallSampler>
ContinuityWitness continuity_witness(const G& g, const FuzzyMetric<G>& M,
                                     const typename G::Element& x, const typename G::Element& y,
                                     double eps, double t, BallSampler in_ball,
                                     std::size_t n_pairs, std::uint64_t seed, bool klee_verified) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("continuity witness needs eps in (0,1)");
    if (!(t > 0.0)) throw std::domain_error("continuity witness needs t > 0");

    ContinuityWitness w;
    w.eps0 = tnorm_root(M.tnorm, eps, 1e-9);
    w.t_half = t / 2;
    w.sound = klee_verified;

    Rng rng(seed);
    auto bx = make_ball<G>(x, w.eps0, w.t_half);
    auto by = make_ball<G>(y, w.eps0, w.t_half);
    auto target = make_ball<G>(g.oplus(x, y), eps, t);
    for (std::size_t i = 0; i < n_pairs; ++i) {
        auto a = in_ball(rng, bx);
        auto b = in_ball(rng, by);
        if (!a || !b) continue;
        ++w.pairs_checked;
        if (!ball_membership(M, target, g.oplus(*a, *b))) ++w.pair_failures;
    }

    auto source = make_ball<G>(x, eps, t);
    auto neg_target = make_ball<G>(g.neg(x), eps, t);
    for (std::size_t i = 0; i < n_pairs; ++i) {
        auto p = in_ball(rng, source);
        if (!p) continue;
        ++w.inversion_checked;
        if (!ball_membership(M, neg_target, g.neg(*p))) ++w.inversion_failures;
    }
    return w;
}

/// Ball sampler for the real additive line under the standard fuzzy metric of
/// |x - y|: members are exactly the points within radius t*eps/(1-eps).
inline auto real_line_ball_sampler() {
    return [](Rng& rng, const BallF<RealAdditiveGroup>& ball) -> std::optional<double> {
        double radius = ball.t * ball.eps / (1.0 - ball.eps);
        double offset = (2.0 * unit_double(rng) - 1.0) * radius;
        if (std::abs(offset) >= radius) return std::nullopt;
        return ball.center + offset;
    };
}

/// Checks that alpha preserves the group operation and the norm, then that it
/// is an isometry of M_N. A failed norm precondition is reported as such and
/// the isometry row is skipped.
template <Gyrogroup G, typename Sampler>
PropertyReport automorphism_isometry_check(
    const G& g, const StdFuzzyGyronorm<G>& N,
    const std::function<typename G::Element(const typename G::Element&)>& alpha,
    const std::string& alpha_name, Sampler sample, std::size_t n, std::uint64_t seed) {
    PropertyReport report("automorphism-isometry:" + alpha_name + "@" + g.name(), seed, n);
    Rng rng(seed);

    CheckResult homo{"automorphism", true, nlohmann::json(), 0.0, 0};
    CheckResult precond{"norm-preservation-precondition", true, nlohmann::json(), 0.0, 0};
    CheckResult isometry{"isometry", true, nlohmann::json(), 0.0, 0};

    for (std::size_t k = 0; k < n; ++k) {
        auto x = sample(rng), y = sample(rng);
        auto lhs = alpha(g.oplus(x, y));
        auto rhs = g.oplus(alpha(x), alpha(y));
        if (!g.eq(lhs, rhs)) homo.fail(detail::tuple_witness(g, {&x, &y}), g.dist(lhs, rhs));
        if (N.norm_sq(alpha(x)) != N.norm_sq(x)) precond.fail(detail::tuple_witness(g, {&x}));
        // isometry of M_N: dist_sq is norm_sq(neg(.) + .)
        Rational orig = N.norm_sq(g.oplus(g.neg(x), y));
        Rational mapped = N.norm_sq(g.oplus(g.neg(alpha(x)), alpha(y)));
        if (mapped != orig) isometry.fail(detail::tuple_witness(g, {&x, &y}));
    }

    report.add_check(homo.law) = homo;
    report.add_check(precond.law) = precond;
    if (precond.pass) report.add_check(isometry.law) = isometry;
    return report;
}

/// Samples (a,b) pairs and runs the isometry check on each gyr[a,b]; the
/// corollary says every gyroautomorphism passes.
template <Gyrogroup G, typename Sampler>
std::vector<PropertyReport> gyroautomorphism_isometry_suite(const G& g,
                                                            const StdFuzzyGyronorm<G>& N,
                                                            Sampler sample, std::size_t n_autos,
                                                            std::size_t n, std::uint64_t seed) {
    std::vector<PropertyReport> reports;
    Rng rng(seed);
    for (std::size_t k = 0; k < n_autos; ++k) {
        auto a = sample(rng);
        auto b = sample(rng);
        auto alpha = [&g, a, b](const typename G::Element& z) { return g.gyr(a, b, z); };
        reports.push_back(automorphism_isometry_check<G>(
            g, N, alpha, "gyr[" + g.format(a) + "," + g.format(b) + "]", sample, n, seed + k + 1));
    }
    return reports;
}

}  // namespace gyrofuzz
