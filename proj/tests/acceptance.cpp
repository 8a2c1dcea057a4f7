// Acceptance suite: every criterion prints one pass/fail line and the binary
// exits nonzero if any of them fails. All thresholds are fixed here, in code.

#include "gyrofuzz/completion.hpp"
#include "gyrofuzz/fuzzy_metric.hpp"
#include "gyrofuzz/norms.hpp"
#include "gyrofuzz/table.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

using namespace gyrofuzz;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

std::string fixture_path(const std::string& name) {
    return std::string(GYROFUZZ_FIXTURES_DIR) + "/" + name;
}

ExactMetric<RationalAdditiveGroup> q_abs_metric() {
    return {"abs-diff",
            [](const Rational& x, const Rational& y) -> Rational { return (x - y) * (x - y); }};
}

// 1. Gyrogroup laws: axioms + identities on mobius-exact with >= 10000 seeded
//    triples at zero tolerance, and exhaustive passes on the bundled group
//    tables of orders 2..8.
void criterion_1() {
    MobiusExact g;
    MobiusExact::Sampler sample;
    const std::size_t n = 10000;
    PropertyReport ax = verify_gyrogroup_axioms(g, sample, n, 2024);
    PropertyReport ids = verify_identities(g, sample, n, 2024);
    bool mobius_ok = ax.passed() && ids.passed();

    bool tables_ok = true;
    for (const char* name : {"z2.gt", "z3.gt", "z4.gt", "klein4.gt", "z5.gt", "z6.gt", "s3.gt",
                             "z7.gt", "z8.gt", "d4.gt", "q8.gt", "gyro8.gt"}) {
        std::ifstream in(fixture_path(name));
        if (!in) {
            tables_ok = false;
            break;
        }
        CayleyTable t = parse_table(in);
        Diagnosis d = prove_gyrogroup(t);
        if (d.verdict == Diagnosis::Verdict::not_gyrogroup) tables_ok = false;
        TableGyrogroup tg(t);
        auto ts = tg.sampler();
        std::size_t all = t.n * t.n * t.n + 1;
        if (!verify_gyrogroup_axioms(tg, ts, all, 1).passed()) tables_ok = false;
        if (!verify_identities(tg, ts, all, 1).passed()) tables_ok = false;
    }
    criterion(1, "gyrogroup axioms and identities (mobius-exact 10000 triples, tables exhaustive)",
              mobius_ok && tables_ok);
}

// 2. t-norm laws at resolution 64 including the a*b <= min(a,b) grid bound.
void criterion_2() {
    bool ok = true;
    for (const TNorm& t : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        PropertyReport r = tnorm_check_axioms(t, 64);
        if (!r.passed()) ok = false;
        const CheckResult* upper = r.find("upper-bound-min");
        if (!upper || !upper->pass) ok = false;
    }
    criterion(2, "t-norm axioms at resolution 64 for min/product/lukasiewicz", ok);
}

// 3. The standard fuzzy gyronorm of |.| passes N1-N6 exactly for all three
//    built-in t-norms, >= 5000 samples x t-grid.
void criterion_3() {
    MobiusExact g;
    MobiusExact::Sampler sample;
    bool ok = true;
    for (const TNorm& star : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        auto N = fuzzy_from_gyronorm(mobius_norm_abs_exact(), star);
        PropertyReport r = verify_fuzzy_gyronorm(g, N, sample, 5000, 333);
        if (!r.passed()) ok = false;
    }
    criterion(3, "fuzzy gyronorm suite, exact, all built-in t-norms, 5000 samples", ok);
}

// 4. The induced metric M_N passes the full Definition 1.1 suite exactly,
//    axiom (iv) over all ordered t-grid pairs.
void criterion_4() {
    MobiusExact g;
    MobiusExact::Sampler sample;
    bool ok = true;
    for (const TNorm& star : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        auto M = metric_from_fuzzy_gyronorm(g, fuzzy_from_gyronorm(mobius_norm_abs_exact(), star));
        PropertyReport r = verify_fuzzy_metric(g, M, sample, 5000, 444);
        if (!r.passed()) ok = false;
    }
    criterion(4, "induced fuzzy metric passes Definition 1.1, exact, 5000 triples", ok);
}

// 5. Left- and gyration-invariance exact on >= 5000 triples.
void criterion_5() {
    MobiusExact g;
    MobiusExact::Sampler sample;
    auto M = metric_from_fuzzy_gyronorm(
        g, fuzzy_from_gyronorm(mobius_norm_abs_exact(), TNorm::minimum()));
    PropertyReport left = check_invariance(g, M, Side::left, sample, 5000, 555);
    PropertyReport gyr = check_invariance(g, M, Side::gyration, sample, 5000, 555);
    bool dev_zero = true;
    for (const auto& c : left.checks()) dev_zero = dev_zero && c.max_deviation == 0.0;
    for (const auto& c : gyr.checks()) dev_zero = dev_zero && c.max_deviation == 0.0;
    criterion(5, "left- and gyration-invariance of M_N, exact, 5000 triples",
              left.passed() && gyr.passed() && dev_zero);
}

// 6. Round trip N -> M_N -> N_M is pointwise identity on >= 5000 samples.
void criterion_6() {
    MobiusExact g;
    MobiusExact::Sampler sample;
    bool ok = true;
    for (const TNorm& star : {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()}) {
        auto N = fuzzy_from_gyronorm(mobius_norm_abs_exact(), star);
        auto M = metric_from_fuzzy_gyronorm(g, N);
        auto N2 = gyronorm_from_invariant_metric(g, M);
        Rng rng(666);
        for (std::size_t i = 0; i < 5000; ++i) {
            auto x = sample(rng);
            if (N2.norm_sq(x) != N.norm_sq(x)) {
                ok = false;
                break;
            }
        }
        // the regenerated metric agrees with M everywhere sampled
        auto M2 = metric_from_fuzzy_gyronorm(g, N2);
        Rng rng2(667);
        for (std::size_t i = 0; i < 1000; ++i) {
            auto x = sample(rng2), y = sample(rng2);
            if (M2.dist_sq(x, y) != M.dist_sq(x, y)) {
                ok = false;
                break;
            }
        }
    }
    criterion(6, "round trip N -> M_N -> N_M pointwise exact, 5000 samples", ok);
}

// 7. Klee audit: zero implication violations on 5000 samples over mobius-exact
//    and (R,+); on (R,+) with d = |x-y| all four conditions hold.
void criterion_7() {
    MobiusExact mg;
    auto M = metric_from_fuzzy_gyronorm(
        mg, fuzzy_from_gyronorm(mobius_norm_abs_exact(), TNorm::minimum()));
    KleeReport mob = check_klee(mg, M, MobiusExact::Sampler{}, 5000, 777);

    RealAdditiveGroup rg(1e-12);
    Metric<RealAdditiveGroup> d{"abs-diff", [](double x, double y) { return std::abs(x - y); }};
    auto Mr = standard_fuzzy_metric(d, TNorm::minimum());
    KleeReport real = check_klee(rg, Mr, RealAdditiveGroup::Sampler{}, 5000, 778, 1e-12);

    criterion(7, "Klee implication audits clean on mobius-exact and r-add; all conditions on r-add",
              mob.audits_pass() && real.audits_pass() && real.all_conditions_hold());
}

// 8. Continuity witnesses on (R,+): 100 seeded cases, 1000 sampled pairs each,
//    zero containment failures; tnorm_root postcondition at 20 targets per kind.
void criterion_8() {
    RealAdditiveGroup g(1e-12);
    Metric<RealAdditiveGroup> d{"abs-diff", [](double x, double y) { return std::abs(x - y); }};
    bool ok = true;
    Rng rng(888);
    const TNorm kinds[] = {TNorm::minimum(), TNorm::product(), TNorm::lukasiewicz()};
    for (int i = 0; i < 100; ++i) {
        const TNorm& star = kinds[i % 3];
        auto M = standard_fuzzy_metric(d, star);
        double x = (2.0 * unit_double(rng) - 1.0) * 4.0;
        double y = (2.0 * unit_double(rng) - 1.0) * 4.0;
        double eps = 0.05 + 0.9 * unit_double(rng);
        double t = 0.25 + 4.0 * unit_double(rng);
        ContinuityWitness w = continuity_witness(g, M, x, y, eps, t, real_line_ball_sampler(),
                                                 1000, 8800 + i, true);
        if (!w.ok() || w.pairs_checked == 0 || w.inversion_checked == 0) ok = false;
    }
    for (const TNorm& star : kinds) {
        for (int k = 0; k < 20; ++k) {
            double target = 0.03 + 0.94 * unit_double(rng);
            double eps0 = tnorm_root(star, target, 1e-9);
            if (!(eps0 > 0.0 && eps0 < 1.0 &&
                  star.eval(1.0 - eps0, 1.0 - eps0) > 1.0 - target)) {
                ok = false;
            }
        }
    }
    criterion(8, "continuity witness balls (100 cases x 1000 pairs) and tnorm_root re-verification",
              ok);
}

// 9. Completion oracle on (Q,+): sqrt2 + sqrt3 within 1e-9 at modulus depth;
//    neg and gyr match; lifted G1-G4 and the seven identities at eps 1e-6 on
//    20 fixture points.
void criterion_9() {
    RationalAdditiveGroup g;
    CompletionSpace<RationalAdditiveGroup> space(g, rational_abs_interval_metric(),
                                                 TNorm::minimum(), true);
    const Rational tight(1, 1000000000L);
    bool ok = true;

    auto sqrt2 = convergents_fixture("sqrt2").point();
    auto sqrt3 = convergents_fixture("sqrt3").point();
    auto sum = space.hat_oplus(sqrt2, sqrt3);
    if (!(oracle_delta(sum, std::sqrt(2.0) + std::sqrt(3.0), tight) < 1e-9)) ok = false;
    if (!(oracle_delta(space.hat_neg(sqrt2), -std::sqrt(2.0), tight) < 1e-9)) ok = false;
    if (!(oracle_delta(space.hat_gyr(sqrt2, sqrt3, sum), std::sqrt(2.0) + std::sqrt(3.0), tight) <
          1e-9))
        ok = false;

    // exactly 20 fixture points: the bundled Cauchy fixtures plus embeds and
    // lifted combinations
    auto fixtures = load_fixtures_file(fixture_path("completion.json"));
    std::vector<CauchyPoint<RationalAdditiveGroup>> pts;
    for (const auto& f : fixtures)
        if (f.declared_cauchy) pts.push_back(f.point());
    RationalAdditiveGroup::Sampler sample;
    Rng rng(999);
    while (pts.size() < 16) pts.push_back(space.embed(sample(rng)));
    pts.push_back(space.hat_oplus(pts[0], pts[1]));
    pts.push_back(space.hat_oplus(pts[2], pts[3]));
    pts.push_back(space.hat_neg(pts[0]));
    pts.push_back(space.hat_neg(pts[4]));
    pts.resize(20);

    const Rational eps(1, 1000000);
    auto ident = space.embed(Rational(0));
    auto eq = [&](const CauchyPoint<RationalAdditiveGroup>& p,
                  const CauchyPoint<RationalAdditiveGroup>& q) {
        return space.approx_eq(p, q, eps);
    };
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 7) % pts.size()];
        const auto& c = pts[(i + 13) % pts.size()];
        auto na = space.hat_neg(a);
        // G1-G4
        if (!eq(space.hat_oplus(ident, a), a)) ok = false;
        if (!eq(space.hat_oplus(na, a), ident)) ok = false;
        if (!eq(space.hat_oplus(a, space.hat_oplus(b, c)),
                space.hat_oplus(space.hat_oplus(a, b), space.hat_gyr(a, b, c))))
            ok = false;
        if (!eq(space.hat_gyr(space.hat_oplus(a, b), b, c), space.hat_gyr(a, b, c))) ok = false;
        // identities (1)-(7)
        if (!eq(space.hat_neg(na), a)) ok = false;
        if (!eq(space.hat_oplus(na, space.hat_oplus(a, b)), b)) ok = false;
        if (!eq(space.hat_gyr(a, b, c),
                space.hat_oplus(space.hat_neg(space.hat_oplus(a, b)),
                                space.hat_oplus(a, space.hat_oplus(b, c)))))
            ok = false;
        if (!eq(space.hat_neg(space.hat_oplus(a, b)),
                space.hat_gyr(a, b, space.hat_oplus(space.hat_neg(b), na))))
            ok = false;
        if (!eq(space.hat_oplus(space.hat_oplus(na, b),
                                space.hat_gyr(na, b, space.hat_oplus(space.hat_neg(b), c))),
                space.hat_oplus(na, c)))
            ok = false;
        if (!eq(space.hat_gyr(a, b, c), space.hat_gyr(na, space.hat_neg(b), c))) ok = false;
        if (!eq(space.hat_gyr(a, b, space.hat_gyr(b, a, c)), c)) ok = false;
    }
    criterion(9, "completion oracle (sqrt2+sqrt3 within 1e-9) and lifted laws at eps 1e-6", ok);
}

// 10. Invariance of the completed metric: interval overlap for 1000 sampled
//     (a, p, q, t) at precision 1e-6.
void criterion_10() {
    RationalAdditiveGroup g;
    CompletionSpace<RationalAdditiveGroup> space(g, rational_abs_interval_metric(),
                                                 TNorm::minimum(), true);
    auto fixtures = load_fixtures_file(fixture_path("completion.json"));
    std::vector<CauchyPoint<RationalAdditiveGroup>> pts;
    for (const auto& f : fixtures)
        if (f.declared_cauchy) pts.push_back(f.point());

    RationalAdditiveGroup::Sampler sample;
    Rng rng(1010);
    const Rational prec(1, 1000000);
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
        const auto& p = pts[bounded(rng, pts.size())];
        const auto& q = pts[bounded(rng, pts.size())];
        auto a = space.embed(sample(rng));
        Rational t = make_rational(1 + (long)bounded(rng, 8), 2);
        RatInterval base = space.lifted_fuzzy_metric(p, q, t, prec);
        RatInterval left =
            space.lifted_fuzzy_metric(space.hat_oplus(a, p), space.hat_oplus(a, q), t, prec);
        RatInterval right =
            space.lifted_fuzzy_metric(space.hat_oplus(p, a), space.hat_oplus(q, a), t, prec);
        if (!base.overlaps(left) || !base.overlaps(right)) ok = false;
    }
    criterion(10, "invariance of the completed metric, 1000 interval probes at 1e-6", ok);
}

// 11. Completeness transfer on (Q,+): Nc from d, M from 2d.
void criterion_11() {
    RationalAdditiveGroup g;
    auto fixtures = load_fixtures_file(fixture_path("completion.json"));
    StdFuzzyMetric<RationalAdditiveGroup> Nc = standard_fuzzy_metric(q_abs_metric(),
                                                                     TNorm::minimum());
    StdFuzzyMetric<RationalAdditiveGroup> M{
        "standard:2abs", TNorm::minimum(),
        [](const Rational& x, const Rational& y) -> Rational {
            Rational d = 2 * (x - y);
            return d * d;
        }};
    PropertyReport r = completeness_transfer_check(g, M, Nc, fixtures,
                                                   RationalAdditiveGroup::Sampler{}, 50, 1111);
    criterion(11, "completeness transfer: every Nc-Cauchy fixture is M-Cauchy", r.passed());
}

// 12. Determinism: repeating a suite with its seed reproduces the JSON bytes.
void criterion_12() {
    MobiusExact g;
    MobiusExact::Sampler sample;
    bool ok = true;

    auto once = [&](std::uint64_t seed) {
        auto N = fuzzy_from_gyronorm(mobius_norm_abs_exact(), TNorm::product());
        auto M = metric_from_fuzzy_gyronorm(g, N);
        nlohmann::json parts = nlohmann::json::array();
        parts.push_back(verify_gyrogroup_axioms(g, sample, 300, seed).to_json());
        parts.push_back(verify_identities(g, sample, 300, seed).to_json());
        parts.push_back(verify_fuzzy_gyronorm(g, N, sample, 100, seed).to_json());
        parts.push_back(check_invariance(g, M, Side::left, sample, 200, seed).to_json());
        parts.push_back(check_klee(g, M, sample, 100, seed).to_json());
        return parts.dump();
    };
    if (once(7) != once(7)) ok = false;

    // the table diagnosis is deterministic as well
    std::ifstream in1(fixture_path("broken.gt"));
    std::ifstream in2(fixture_path("broken.gt"));
    Diagnosis d1 = prove_gyrogroup(parse_table(in1));
    Diagnosis d2 = prove_gyrogroup(parse_table(in2));
    if (d1.verdict != d2.verdict || d1.witness != d2.witness) ok = false;

    criterion(12, "byte-identical JSON reports under a repeated seed", ok);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    struct Step {
        int number;
        void (*run)();
    };
    const Step steps[] = {{1, criterion_1}, {2, criterion_2},   {3, criterion_3},
                          {4, criterion_4}, {5, criterion_5},   {6, criterion_6},
                          {7, criterion_7}, {8, criterion_8},   {9, criterion_9},
                          {10, criterion_10}, {11, criterion_11}, {12, criterion_12}};
    for (const auto& s : steps) {
        auto start = clock::now();
        s.run();
        auto secs = std::chrono::duration<double>(clock::now() - start).count();
        std::cout << "         criterion " << s.number << " took " << secs << "s" << std::endl;
    }
    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: FAILURES PRESENT")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
