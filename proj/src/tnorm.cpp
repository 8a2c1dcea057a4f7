#include "gyrofuzz/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

namespace gyrofuzz {

const char* tnorm_kind_name(TNormKind kind) {
    switch (kind) {
        case TNormKind::minimum: return "min";
        case TNormKind::product: return "product";
        case TNormKind::lukasiewicz: return "lukasiewicz";
        case TNormKind::tabulated: return "tabulated";
    }
    return "?";
}

TNorm::TNorm(TNormKind kind, std::string name, std::shared_ptr<const Table> table)
    : kind_(kind), name_(std::move(name)), table_(std::move(table)) {}

TNorm TNorm::minimum() { return TNorm(TNormKind::minimum, "min", nullptr); }
TNorm TNorm::product() { return TNorm(TNormKind::product, "product", nullptr); }
TNorm TNorm::lukasiewicz() { return TNorm(TNormKind::lukasiewicz, "lukasiewicz", nullptr); }

TNorm TNorm::tabulated(Table grid) {
    if (grid.size() < 2) throw std::invalid_argument("tabulated t-norm needs at least a 2x2 grid");
    for (const auto& row : grid) {
        if (row.size() != grid.size()) throw std::invalid_argument("tabulated t-norm grid must be square");
        for (const auto& v : row)
            if (v < 0 || v > 1) throw std::invalid_argument("tabulated t-norm value outside [0,1]");
    }
    return TNorm(TNormKind::tabulated, "tabulated",
                 std::make_shared<const Table>(std::move(grid)));
}

TNorm TNorm::from_name(const std::string& name) {
    if (name == "min") return minimum();
    if (name == "product") return product();
    if (name == "lukasiewicz") return lukasiewicz();
    throw std::invalid_argument("unknown t-norm: " + name);
}

std::size_t TNorm::resolution() const {
    if (kind_ != TNormKind::tabulated || !table_)
        throw std::logic_error("resolution() on a non-tabulated t-norm");
    return table_->size() - 1;
}

namespace {

// floor(q) for q >= 0
long rational_floor(const Rational& q) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out.get_si();
}

Rational bilinear(const TNorm::Table& table, const Rational& a, const Rational& b) {
    const long r = static_cast<long>(table.size()) - 1;
    Rational ar = a * r;
    Rational br = b * r;
    long i = std::min(rational_floor(ar), r - 1);
    long j = std::min(rational_floor(br), r - 1);
    Rational u = ar - i;
    Rational v = br - j;
    const Rational& v00 = table[i][j];
    const Rational& v10 = table[i + 1][j];
    const Rational& v01 = table[i][j + 1];
    const Rational& v11 = table[i + 1][j + 1];
    return (1 - u) * (1 - v) * v00 + u * (1 - v) * v10 + (1 - u) * v * v01 + u * v * v11;
}

double bilinear(const TNorm::Table& table, double a, double b) {
    const long r = static_cast<long>(table.size()) - 1;
    long i = std::min(static_cast<long>(a * r), r - 1);
    long j = std::min(static_cast<long>(b * r), r - 1);
    double u = a * r - static_cast<double>(i);
    double v = b * r - static_cast<double>(j);
    double v00 = to_double(table[i][j]);
    double v10 = to_double(table[i + 1][j]);
    double v01 = to_double(table[i][j + 1]);
    double v11 = to_double(table[i + 1][j + 1]);
    return (1 - u) * (1 - v) * v00 + u * (1 - v) * v10 + (1 - u) * v * v01 + u * v * v11;
}

void require_unit(const Rational& x, const char* what) {
    if (x < 0 || x > 1) throw std::domain_error(std::string(what) + " outside [0,1]");
}

void require_unit(double x, const char* what) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error(std::string(what) + " outside [0,1]");
}

}  // namespace

Rational TNorm::eval(const Rational& a, const Rational& b) const {
    require_unit(a, "t-norm argument");
    require_unit(b, "t-norm argument");
    switch (kind_) {
        case TNormKind::minimum: return std::min(a, b);
        case TNormKind::product: return a * b;
        case TNormKind::lukasiewicz: {
            Rational s = a + b - 1;
            return s > 0 ? s : Rational(0);
        }
        case TNormKind::tabulated:
            if (!table_) throw std::logic_error("tabulated t-norm without a table");
            return bilinear(*table_, a, b);
    }
    throw std::logic_error("unreachable t-norm kind");
}

double TNorm::eval(double a, double b) const {
    require_unit(a, "t-norm argument");
    require_unit(b, "t-norm argument");
    switch (kind_) {
        case TNormKind::minimum: return std::min(a, b);
        case TNormKind::product: return a * b;
        case TNormKind::lukasiewicz: return std::max(a + b - 1.0, 0.0);
        case TNormKind::tabulated:
            if (!table_) throw std::logic_error("tabulated t-norm without a table");
            return bilinear(*table_, a, b);
    }
    throw std::logic_error("unreachable t-norm kind");
}

UnitValue<Rational> TNorm::eval(const UnitValue<Rational>& a, const UnitValue<Rational>& b) const {
    return UnitValue<Rational>(eval(a.get(), b.get()));
}

UnitValue<double> TNorm::eval(const UnitValue<double>& a, const UnitValue<double>& b) const {
    return UnitValue<double>(eval(a.get(), b.get()));
}

bool TNorm::std_triangle_holds(const StdFuzzyVal& whole, const StdFuzzyVal& a,
                               const StdFuzzyVal& b) const {
    switch (kind_) {
        case TNormKind::minimum: return std_ge_min(whole, a, b);
        case TNormKind::product: return std_ge_product(whole, a, b);
        case TNormKind::lukasiewicz: return std_ge_lukasiewicz(whole, a, b);
        case TNormKind::tabulated:
            throw std::logic_error("exact triangle decision is limited to built-in t-norms");
    }
    throw std::logic_error("unreachable t-norm kind");
}

namespace {

nlohmann::json grid_witness(const Rational& a, const Rational& b) {
    return {{"a", format_rational(a)}, {"b", format_rational(b)}};
}

nlohmann::json grid_witness(const Rational& a, const Rational& b, const Rational& c) {
    return {{"a", format_rational(a)}, {"b", format_rational(b)}, {"c", format_rational(c)}};
}

// Max |f(p) - f(q)| over horizontally/vertically adjacent grid nodes.
Rational grid_oscillation(const TNorm& t, unsigned resolution) {
    Rational osc(0);
    for (unsigned i = 0; i <= resolution; ++i) {
        for (unsigned j = 0; j + 1 <= resolution; ++j) {
            Rational x(i, resolution);
            Rational y0(j, resolution);
            Rational y1(j + 1, resolution);
            x.canonicalize();
            y0.canonicalize();
            y1.canonicalize();
            Rational d1 = rational_abs(t.eval(x, y1) - t.eval(x, y0));
            Rational d2 = rational_abs(t.eval(y1, x) - t.eval(y0, x));
            osc = std::max(osc, std::max(d1, d2));
        }
    }
    return osc;
}

}  // namespace

PropertyReport tnorm_check_axioms(const TNorm& t, unsigned resolution) {
    if (resolution < 2) throw std::invalid_argument("tnorm_check_axioms needs resolution >= 2");
    PropertyReport report("tnorm-axioms:" + t.name(), 0, resolution);

    std::vector<Rational> grid;
    grid.reserve(resolution + 1);
    for (unsigned k = 0; k <= resolution; ++k) {
        Rational q(k, resolution);
        q.canonicalize();
        grid.push_back(q);
    }

    auto& boundary = report.add_check("boundary-identity");
    for (const auto& a : grid) {
        if (t.eval(a, Rational(1)) != a) {
            boundary.fail(grid_witness(a, Rational(1)),
                          std::abs(to_double(t.eval(a, Rational(1)) - a)));
        }
    }

    auto& comm = report.add_check("commutativity");
    auto& mono = report.add_check("monotonicity");
    auto& upper = report.add_check("upper-bound-min");
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            Rational ab = t.eval(a, b);
            if (ab != t.eval(b, a))
                comm.fail(grid_witness(a, b), std::abs(to_double(ab - t.eval(b, a))));
            if (ab > std::min(a, b))
                upper.fail(grid_witness(a, b), to_double(ab - std::min(a, b)));
            // monotone in the first argument along grid neighbors (symmetry covers the second)
            if (a < 1) {
                Rational a_next = a + Rational(1, resolution);
                if (a_next <= 1 && t.eval(a_next, b) < ab)
                    mono.fail(grid_witness(a, b), to_double(ab - t.eval(a_next, b)));
            }
        }
    }

    auto& assoc = report.add_check("associativity");
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            Rational ab = t.eval(a, b);
            for (const auto& c : grid) {
                Rational lhs = t.eval(ab, c);
                Rational rhs = t.eval(a, t.eval(b, c));
                if (lhs != rhs) assoc.fail(grid_witness(a, b, c), std::abs(to_double(lhs - rhs)));
            }
        }
    }

    // Continuity probe: neighbor oscillation must shrink when the grid doubles.
    auto& cont = report.add_check("continuity-oscillation");
    Rational osc1 = grid_oscillation(t, resolution);
    Rational osc2 = grid_oscillation(t, 2 * resolution);
    Rational bound = osc1 * Rational(4, 5) + Rational(1, 1000000000000L);
    cont.note_deviation(to_double(osc2));
    if (osc2 > bound) {
        cont.fail({{"oscillation", to_double(osc1)}, {"oscillation_doubled", to_double(osc2)}},
                  to_double(osc2 - bound));
    }

    return report;
}

double tnorm_root(const TNorm& t, double target, double tol) {
    if (!(target > 0.0 && target < 1.0)) throw std::domain_error("tnorm_root needs target in (0,1)");
    if (!(tol > 0.0)) throw std::invalid_argument("tnorm_root needs tol > 0");
    auto admissible = [&](double eps0) { return t.eval(1.0 - eps0, 1.0 - eps0) > 1.0 - target; };
    double lo = 0.0;  // admissible: 1 * 1 = 1 > 1 - target
    double hi = 1.0;  // not admissible: 0 * 0 = 0 <= 1 - target
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (admissible(mid))
            lo = mid;
        else
            hi = mid;
    }
    if (lo > 0.0) return lo;
    // The admissible region is narrower than tol; shrink until inside it.
    double probe = hi / 2;
    while (probe > 0.0 && !admissible(probe)) probe /= 2;
    if (probe == 0.0) throw std::logic_error("tnorm_root: no admissible eps0 found");
    return probe;
}

TNorm parse_tabulated_tnorm(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("tnorm file: missing header");
    std::istringstream hs(header);
    std::string tag;
    long r = 0;
    if (!(hs >> tag >> r) || tag != "tnorm" || r < 1)
        throw std::runtime_error("tnorm file: header must be \"tnorm r\" with r >= 1");
    std::string extra;
    if (hs >> extra) throw std::runtime_error("tnorm file: trailing tokens in header");

    TNorm::Table table;
    table.reserve(static_cast<std::size_t>(r) + 1);
    std::string line;
    std::size_t line_no = 1;
    while (table.size() < static_cast<std::size_t>(r) + 1 && std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<Rational> row;
        std::string tok;
        while (ls >> tok) {
            auto v = parse_rational(tok);
            if (!v)
                throw std::runtime_error("tnorm file: bad value \"" + tok + "\" at line " +
                                         std::to_string(line_no));
            row.push_back(*v);
        }
        if (row.empty()) continue;  // blank line
        if (row.size() != static_cast<std::size_t>(r) + 1)
            throw std::runtime_error("tnorm file: expected " + std::to_string(r + 1) +
                                     " values at line " + std::to_string(line_no));
        table.push_back(std::move(row));
    }
    if (table.size() != static_cast<std::size_t>(r) + 1)
        throw std::runtime_error("tnorm file: expected " + std::to_string(r + 1) + " rows");
    return TNorm::tabulated(std::move(table));
}

}  // namespace gyrofuzz
