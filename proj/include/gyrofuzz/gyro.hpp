#pragma once

#include "gyrofuzz/report.hpp"
#include "gyrofuzz/sampling.hpp"

#include <concepts>
#include <cstdint>
#include <string>

namespace gyrofuzz {

// A gyrogroup instance: carrier elements plus oplus, identity, neg, gyr and an
// equality predicate (exact or tolerance-based). `format` renders elements for
// witnesses, `dist` is a report-only deviation measure.
template <typename G>
concept Gyrogroup = requires(const G& g, const typename G::Element& x) {
    typename G::Element;
    { g.identity() } -> std::same_as<typename G::Element>;
    { g.oplus(x, x) } -> std::same_as<typename G::Element>;
    { g.neg(x) } -> std::same_as<typename G::Element>;
    { g.gyr(x, x, x) } -> std::same_as<typename G::Element>;
    { g.eq(x, x) } -> std::same_as<bool>;
    { g.format(x) } -> std::same_as<std::string>;
    { g.dist(x, x) } -> std::same_as<double>;
    { g.name() } -> std::convertible_to<std::string>;
};

template <typename G>
concept FiniteGyrogroup = Gyrogroup<G> && requires(const G& g, std::size_t i) {
    { g.order() } -> std::convertible_to<std::size_t>;
    { g.element(i) } -> std::same_as<typename G::Element>;
};

/// gyr[a,b](c) computed from oplus/neg alone: neg(a+b) + (a + (b + c)).
template <Gyrogroup G>
typename G::Element gyr_via_gyrator_identity(const G& g, const typename G::Element& a,
                                             const typename G::Element& b,
                                             const typename G::Element& c) {
    return g.oplus(g.neg(g.oplus(a, b)), g.oplus(a, g.oplus(b, c)));
}

template <Gyrogroup G>
typename G::Element left_translate(const G& g, const typename G::Element& a,
                                   const typename G::Element& x) {
    return g.oplus(a, x);
}

template <Gyrogroup G>
typename G::Element right_translate(const G& g, const typename G::Element& a,
                                    const typename G::Element& x) {
    return g.oplus(x, a);
}

namespace detail {

template <Gyrogroup G>
nlohmann::json tuple_witness(const G& g, std::initializer_list<const typename G::Element*> elems) {
    static const char* keys[] = {"a", "b", "c", "d"};
    nlohmann::json w;
    std::size_t i = 0;
    for (const auto* e : elems) w[keys[i++]] = g.format(*e);
    return w;
}

// Runs `body(a, b, c)` over n sampled triples, or over every triple of a
// finite instance when n covers the whole cube.
template <typename G, typename Sampler, typename Body>
void for_triples(const G& g, Sampler& sample, Rng& rng, std::size_t n, Body body) {
    if constexpr (FiniteGyrogroup<G>) {
        const std::size_t m = g.order();
        if (n >= m * m * m) {
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    for (std::size_t c = 0; c < m; ++c)
                        body(g.element(a), g.element(b), g.element(c));
            return;
        }
    }
    for (std::size_t i = 0; i < n; ++i) body(sample(rng), sample(rng), sample(rng));
}

}  // namespace detail

/// Checks G1-G4 plus the automorphism property of gyr on sampled tuples
/// (exhaustively for finite instances when n covers them).
template <Gyrogroup G, typename Sampler>
PropertyReport verify_gyrogroup_axioms(const G& g, Sampler sample, std::size_t n,
                                       std::uint64_t seed) {
    PropertyReport report("gyrogroup-axioms:" + g.name(), seed, n);
    Rng rng(seed);
    const auto e = g.identity();

    auto& g1 = report.add_check("G1-left-identity");
    auto& g2 = report.add_check("G2-left-inverse");
    auto& g3 = report.add_check("G3-gyroassociativity");
    auto& g4 = report.add_check("G4-loop-property");
    auto& aut = report.add_check("gyr-automorphism");

    auto body = [&](const auto& x, const auto& y, const auto& z) {
        if (!g.eq(g.oplus(e, x), x))
            g1.fail(detail::tuple_witness(g, {&x}), g.dist(g.oplus(e, x), x));
        if (!g.eq(g.oplus(g.neg(x), x), e))
            g2.fail(detail::tuple_witness(g, {&x}), g.dist(g.oplus(g.neg(x), x), e));
        {
            auto lhs = g.oplus(x, g.oplus(y, z));
            auto rhs = g.oplus(g.oplus(x, y), g.gyr(x, y, z));
            if (!g.eq(lhs, rhs)) g3.fail(detail::tuple_witness(g, {&x, &y, &z}), g.dist(lhs, rhs));
        }
        {
            auto lhs = g.gyr(g.oplus(x, y), y, z);
            auto rhs = g.gyr(x, y, z);
            if (!g.eq(lhs, rhs)) g4.fail(detail::tuple_witness(g, {&x, &y, &z}), g.dist(lhs, rhs));
        }
    };
    detail::for_triples(g, sample, rng, n, body);

    // gyr[a,b] respects oplus; needs a fourth element per sample.
    if constexpr (FiniteGyrogroup<G>) {
        const std::size_t m = g.order();
        if (n >= m * m * m) {
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    for (std::size_t c = 0; c < m; ++c)
                        for (std::size_t d = 0; d < m; ++d) {
                            auto ea = g.element(a), eb = g.element(b), ec = g.element(c),
                                 ed = g.element(d);
                            auto lhs = g.gyr(ea, eb, g.oplus(ec, ed));
                            auto rhs = g.oplus(g.gyr(ea, eb, ec), g.gyr(ea, eb, ed));
                            if (!g.eq(lhs, rhs))
                                aut.fail(detail::tuple_witness(g, {&ea, &eb, &ec, &ed}),
                                         g.dist(lhs, rhs));
                        }
            return report;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto a = sample(rng), b = sample(rng), c = sample(rng), d = sample(rng);
        auto lhs = g.gyr(a, b, g.oplus(c, d));
        auto rhs = g.oplus(g.gyr(a, b, c), g.gyr(a, b, d));
        if (!g.eq(lhs, rhs)) aut.fail(detail::tuple_witness(g, {&a, &b, &c, &d}), g.dist(lhs, rhs));
    }
    return report;
}

/// The seven algebraic identities every gyrogroup satisfies: involution of
/// inversion, left cancellation, the gyrator identity, the inverse-of-a-sum
/// law, composed left cancellation, the even property and inversive symmetry.
template <Gyrogroup G, typename Sampler>
PropertyReport verify_identities(const G& g, Sampler sample, std::size_t n, std::uint64_t seed) {
    PropertyReport report("gyrogroup-identities:" + g.name(), seed, n);
    Rng rng(seed);

    auto& inv = report.add_check("involution-of-inversion");
    auto& cancel = report.add_check("left-cancellation");
    auto& gyrator = report.add_check("gyrator-identity");
    auto& negsum = report.add_check("inverse-of-sum");
    auto& chain = report.add_check("composed-left-cancellation");
    auto& even = report.add_check("even-property");
    auto& invsym = report.add_check("inversive-symmetry");

    auto body = [&](const auto& a, const auto& b, const auto& c) {
        if (!g.eq(g.neg(g.neg(a)), a))
            inv.fail(detail::tuple_witness(g, {&a}), g.dist(g.neg(g.neg(a)), a));
        if (!g.eq(g.oplus(g.neg(a), g.oplus(a, b)), b))
            cancel.fail(detail::tuple_witness(g, {&a, &b}),
                        g.dist(g.oplus(g.neg(a), g.oplus(a, b)), b));
        {
            auto lhs = g.gyr(a, b, c);
            auto rhs = gyr_via_gyrator_identity(g, a, b, c);
            if (!g.eq(lhs, rhs))
                gyrator.fail(detail::tuple_witness(g, {&a, &b, &c}), g.dist(lhs, rhs));
        }
        {
            auto lhs = g.neg(g.oplus(a, b));
            auto rhs = g.gyr(a, b, g.oplus(g.neg(b), g.neg(a)));
            if (!g.eq(lhs, rhs))
                negsum.fail(detail::tuple_witness(g, {&a, &b}), g.dist(lhs, rhs));
        }
        {
            auto na = g.neg(a);
            auto lhs = g.oplus(g.oplus(na, b), g.gyr(na, b, g.oplus(g.neg(b), c)));
            auto rhs = g.oplus(na, c);
            if (!g.eq(lhs, rhs))
                chain.fail(detail::tuple_witness(g, {&a, &b, &c}), g.dist(lhs, rhs));
        }
        {
            // even property gyr[neg a, neg b] = gyr[a, b]
            auto lhs = g.gyr(a, b, c);
            auto rhs = g.gyr(g.neg(a), g.neg(b), c);
            if (!g.eq(lhs, rhs)) even.fail(detail::tuple_witness(g, {&a, &b, &c}), g.dist(lhs, rhs));
        }
        {
            auto lhs = g.gyr(a, b, g.gyr(b, a, c));
            if (!g.eq(lhs, c)) invsym.fail(detail::tuple_witness(g, {&a, &b, &c}), g.dist(lhs, c));
        }
    };
    detail::for_triples(g, sample, rng, n, body);
    return report;
}

}  // namespace gyrofuzz
