#pragma once

#include "gyrofuzz/fuzzy_metric.hpp"

#include <fstream>
#include <optional>

namespace gyrofuzz {

/// Invariant metric with rational-interval evaluation: dist_enclosure(x,y,eps)
/// returns an interval of width <= eps containing d(x,y).
template <typename G>
struct IntervalMetric {
    std::string name;
    std::function<RatInterval(const typename G::Element&, const typename G::Element&,
                              const Rational&)>
        dist_enclosure;
};

/// Exact |x - y| on the rational additive group.
inline IntervalMetric<RationalAdditiveGroup> rational_abs_interval_metric() {
    return {"abs-diff", [](const Rational& x, const Rational& y, const Rational&) {
                Rational d = rational_abs(x - y);
                return RatInterval{d, d};
            }};
}

/// A point of the completion: a sequence with an explicit Cauchy modulus,
/// d(seq(i), seq(k)) < eps whenever i,k >= modulus(eps).
template <typename G>
struct CauchyPoint {
    std::function<typename G::Element(std::size_t)> seq;
    std::function<std::size_t(const Rational&)> modulus;

    typename G::Element at(std::size_t i) const { return seq(i); }
};

/// The constructive completion of an invariant-metric gyrogroup: lifted
/// operations on Cauchy points with moduli following the completion proof's
/// eps/2 splittings, plus interval evaluation of the lifted metric.
///
/// Equality of completion points is only semi-decidable; approx_eq(p, q, eps)
/// guarantees d_hat(p, q) < eps when it returns true and guarantees nothing
/// when it returns false.
template <Gyrogroup G>
class CompletionSpace {
public:
    using Element = typename G::Element;
    using Point = CauchyPoint<G>;

    CompletionSpace(const G& base, IntervalMetric<G> metric, TNorm star, bool both_invariant)
        : base_(&base), metric_(std::move(metric)), star_(std::move(star)),
          both_invariant_(both_invariant) {}

    const G& base() const { return *base_; }
    const TNorm& tnorm() const { return star_; }
    bool both_invariant() const { return both_invariant_; }

    /// Constant sequence; the dense copy of the base.
    Point embed(Element x) const {
        return Point{[x](std::size_t) { return x; }, [](const Rational&) { return std::size_t{0}; }};
    }

    /// Componentwise sum; modulus max(mu_p(eps/2), mu_q(eps/2)) as in the
    /// well-definedness proof, valid because d is invariant on both sides.
    Point hat_oplus(const Point& p, const Point& q) const {
        require_invariant();
        const G* g = base_;
        auto ps = p.seq;
        auto qs = q.seq;
        auto pm = p.modulus;
        auto qm = q.modulus;
        return Point{[g, ps, qs](std::size_t i) { return g->oplus(ps(i), qs(i)); },
                     [pm, qm](const Rational& eps) {
                         Rational half = eps / 2;
                         return std::max(pm(half), qm(half));
                     }};
    }

    /// Componentwise inverse; the modulus carries over unchanged since
    /// d(neg a_i, neg a_k) = d(a_i, a_k) under invariance.
    Point hat_neg(const Point& p) const {
        require_invariant();
        const G* g = base_;
        auto ps = p.seq;
        return Point{[g, ps](std::size_t i) { return g->neg(ps(i)); }, p.modulus};
    }

    /// neg(a+b) + (a + (b+c)) composed from the lifted operations.
    Point hat_gyr(const Point& a, const Point& b, const Point& c) const {
        return hat_oplus(hat_neg(hat_oplus(a, b)), hat_oplus(a, hat_oplus(b, c)));
    }

    /// Evaluates both points at index max(mu_p(eps/4), mu_q(eps/4)) and tests
    /// d < eps/2 there. One-sided: true implies d_hat < eps.
    bool approx_eq(const Point& p, const Point& q, const Rational& eps) const {
        if (eps <= 0) throw std::domain_error("approx_eq needs eps > 0");
        Rational quarter = eps / 4;
        std::size_t n = std::max(p.modulus(quarter), q.modulus(quarter));
        RatInterval d = metric_.dist_enclosure(p.at(n), q.at(n), eps / 8);
        return d.hi < eps / 2;
    }

    /// Interval of width <= prec containing d_hat(p, q) = lim d(p_n, q_n).
    RatInterval dist_hat(const Point& p, const Point& q, const Rational& prec) const {
        if (prec <= 0) throw std::domain_error("dist_hat needs prec > 0");
        Rational delta = prec / 8;
        std::size_t n = std::max(p.modulus(delta), q.modulus(delta));
        RatInterval d = metric_.dist_enclosure(p.at(n), q.at(n), prec / 4);
        Rational lo = d.lo - 2 * delta;
        if (lo < 0) lo = 0;
        return RatInterval{lo, d.hi + 2 * delta};
    }

    /// Interval of width <= prec containing M_dhat(p,q,t) = t / (t + d_hat).
    RatInterval lifted_fuzzy_metric(const Point& p, const Point& q, const Rational& t,
                                    const Rational& prec) const {
        if (t <= 0) throw std::domain_error("lifted_fuzzy_metric needs t > 0");
        if (prec <= 0) throw std::domain_error("lifted_fuzzy_metric needs prec > 0");
        Rational dprec = prec * t;
        for (;;) {
            RatInterval d = dist_hat(p, q, dprec);
            RatInterval m{t / (t + d.hi), t / (t + d.lo)};
            if (m.width() <= prec) return m;
            dprec /= 2;
        }
    }

private:
    void require_invariant() const {
        if (!both_invariant_)
            throw std::logic_error(
                "lifted operations need a metric invariant on both sides; this base failed or "
                "skipped the invariance check");
    }

    const G* base_;
    IntervalMetric<G> metric_;
    TNorm star_;
    bool both_invariant_;
};

// ---------------------------------------------------------------------------
// Sequence fixtures
// ---------------------------------------------------------------------------

/// A named sequence in the base carrier, with declared Cauchy status, a
/// modulus that is meaningful only when declared_cauchy, and a closed-form
/// real limit when one is known.
template <typename G>
struct SequenceFixture {
    std::string name;
    bool declared_cauchy = false;
    std::function<typename G::Element(std::size_t)> seq;
    std::function<std::size_t(const Rational&)> modulus;
    std::optional<double> oracle;

    CauchyPoint<G> point() const {
        if (!declared_cauchy)
            throw std::logic_error("fixture " + name + " is not declared Cauchy");
        return CauchyPoint<G>{seq, modulus};
    }
};

using RationalFixture = SequenceFixture<RationalAdditiveGroup>;

/// Continued-fraction convergents of a named constant (sqrt2, sqrt3, sqrt5,
/// phi). The modulus comes from |x - h_n/k_n| <= 1/(k_n k_{n+1}).
RationalFixture convergents_fixture(const std::string& constant);

/// Fixture list from the JSON schema
/// [ { "name", "kind": "convergents"|"constant"|"explicit", "params": {...} } ].
/// Every fixture must declare its Cauchy status in params.cauchy.
std::vector<RationalFixture> load_fixtures(const nlohmann::json& spec);
std::vector<RationalFixture> load_fixtures_file(const std::string& path);

/// |seq(mu(eps/2)) - oracle| evaluated in double; bounded by eps when the
/// oracle is the true limit.
template <typename G>
double oracle_delta(const CauchyPoint<G>& p, double oracle, const Rational& eps) {
    std::size_t n = p.modulus(eps / 2);
    return std::abs(to_double(p.at(n)) - oracle);
}

// ---------------------------------------------------------------------------
// Completeness transfer
// ---------------------------------------------------------------------------

/// The key step of the completeness-transfer theorem, replayed per fixture:
/// for each target ball B_M(e, eps, t), a nested ball B_Nc(e, eps0, t0) is
/// located (validated by sampling), the fixture's tail is pushed inside it via
/// the fuzzy-Cauchy reduction d < t*eps/(1-eps), and the tail is then checked
/// to be M-Cauchy at (eps, t). Fixtures without a declared status are rejected
/// at load time.
template <Gyrogroup G, typename Sampler>
PropertyReport completeness_transfer_check(const G& g, const StdFuzzyMetric<G>& M,
                                           const StdFuzzyMetric<G>& Nc,
                                           const std::vector<SequenceFixture<G>>& fixtures,
                                           Sampler sample, std::size_t n_samples,
                                           std::uint64_t seed) {
    PropertyReport report("completeness-transfer:" + Nc.name + "->" + M.name + "@" + g.name(),
                          seed, n_samples);
    Rng rng(seed);
    const auto e = g.identity();

    auto& compat = report.add_check("fixture-status-compatibility");
    auto& transfer = report.add_check("nc-cauchy-implies-m-cauchy");

    const std::vector<Rational> eps_grid{make_rational(1, 2), make_rational(1, 4),
                                         make_rational(1, 16)};
    const std::vector<Rational> t_grid = default_t_grid();

    // Membership of z in B(e, eps, t) of a standard-form metric, exact.
    auto in_ball = [&](const StdFuzzyMetric<G>& metric, const typename G::Element& z,
                       const Rational& eps, const Rational& t) {
        return std_exceeds(metric.at(e, z, t), eps);
    };

    for (const auto& f : fixtures) {
        if (!f.declared_cauchy) {
            // Transfer is vacuous; confirm the sequence really wanders by
            // finding tail pairs that stay apart in both metrics.
            bool wanders_m = false, wanders_nc = false;
            for (std::size_t i = 0; i < 64; ++i) {
                Rational a = f.seq(i), b = f.seq(i + 1);
                if (!in_ball(M, g.oplus(g.neg(a), b), make_rational(1, 2), Rational(4)))
                    wanders_m = true;
                if (!in_ball(Nc, g.oplus(g.neg(a), b), make_rational(1, 2), Rational(4)))
                    wanders_nc = true;
            }
            if (wanders_m != wanders_nc) compat.fail({{"fixture", f.name}});
            continue;
        }

        for (const Rational& eps : eps_grid) {
            for (const Rational& t : t_grid) {
                // Locate a nested ball B_Nc(e, eps0, t0) inside B_M(e, eps, t),
                // validated on sampled carrier elements.
                std::optional<std::pair<Rational, Rational>> nested;
                for (int k = 1; k <= 12 && !nested; ++k) {
                    Rational eps0 = eps / (1 << k);
                    Rational t0 = t;
                    bool ok = true;
                    for (std::size_t s = 0; s < 64; ++s) {
                        auto z = sample(rng);
                        if (in_ball(Nc, z, eps0, t0) && !in_ball(M, z, eps, t)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) nested = std::make_pair(eps0, t0);
                }
                if (!nested) {
                    compat.fail({{"fixture", f.name},
                                 {"eps", format_rational(eps)},
                                 {"t", format_rational(t)}});
                    continue;
                }
                const auto& [eps0, t0] = *nested;

                // Reduction: Nc(x_i, x_k, t0) > 1-eps0 <=> d_Nc < t0*eps0/(1-eps0).
                // Find a tail index via the fixture modulus and spot-verify it.
                std::size_t j = 0;
                bool tail_ok = false;
                Rational delta = t0 * eps0 / (1 - eps0);
                for (int refine = 0; refine < 24 && !tail_ok; ++refine) {
                    j = f.modulus(delta);
                    tail_ok = true;
                    for (std::size_t s = 0; s < 16 && tail_ok; ++s) {
                        std::size_t i = j + bounded(rng, 32);
                        std::size_t k = j + bounded(rng, 32);
                        if (!in_ball(Nc, g.oplus(g.neg(f.seq(i)), f.seq(k)), eps0, t0))
                            tail_ok = false;
                    }
                    if (!tail_ok) delta /= 2;
                }
                if (!tail_ok) {
                    compat.fail({{"fixture", f.name}, {"eps0", format_rational(eps0)}});
                    continue;
                }

                // The theorem's conclusion: the same tail is M-Cauchy at (eps, t).
                for (std::size_t s = 0; s < n_samples; ++s) {
                    std::size_t i = j + bounded(rng, 64);
                    std::size_t k = j + bounded(rng, 64);
                    StdFuzzyVal m = M.at(f.seq(i), f.seq(k), t);
                    if (!std_exceeds(m, eps)) {
                        transfer.fail({{"fixture", f.name},
                                       {"i", i},
                                       {"k", k},
                                       {"eps", format_rational(eps)},
                                       {"t", format_rational(t)}});
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace gyrofuzz
