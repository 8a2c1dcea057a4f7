#pragma once

#include "gyrofuzz/radicals.hpp"
#include "gyrofuzz/rational.hpp"
#include "gyrofuzz/report.hpp"

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gyrofuzz {

/// Value constrained to [0,1]; construction outside the range is rejected.
template <typename S>
class UnitValue {
public:
    explicit UnitValue(S v) : v_(std::move(v)) {
        if (v_ < 0 || v_ > 1) throw std::domain_error("UnitValue outside [0,1]");
    }
    const S& get() const { return v_; }

private:
    S v_;
};

enum class TNormKind { minimum, product, lukasiewicz, tabulated };

const char* tnorm_kind_name(TNormKind kind);

/// A continuous t-norm: one of the three built-ins or a tabulated grid with
/// multilinear interpolation between the (r+1)x(r+1) nodes.
class TNorm {
public:
    using Table = std::vector<std::vector<Rational>>;

    static TNorm minimum();
    static TNorm product();
    static TNorm lukasiewicz();
    static TNorm tabulated(Table grid);
    static TNorm from_name(const std::string& name);  // "min" | "product" | "lukasiewicz"

    TNormKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    std::size_t resolution() const;  // tabulated only

    Rational eval(const Rational& a, const Rational& b) const;
    double eval(double a, double b) const;
    UnitValue<Rational> eval(const UnitValue<Rational>& a, const UnitValue<Rational>& b) const;
    UnitValue<double> eval(const UnitValue<double>& a, const UnitValue<double>& b) const;

    /// Exact decision of whole >= eval(a, b) for values in standard fuzzy form.
    /// Built-in kinds only; the tabulated kind is evaluated in float mode.
    bool std_triangle_holds(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b) const;

private:
    TNorm(TNormKind kind, std::string name, std::shared_ptr<const Table> table);

    TNormKind kind_;
    std::string name_;
    std::shared_ptr<const Table> table_;
};

/// Grid check of the four t-norm axioms plus the a*b <= min(a,b) bound and an
/// oscillation-shrinkage continuity probe at doubled resolution.
PropertyReport tnorm_check_axioms(const TNorm& t, unsigned resolution);

/// Finds eps0 in (0,1) with (1-eps0) * (1-eps0) > 1-target, within tol of the
/// supremal admissible value, by bisection.
double tnorm_root(const TNorm& t, double target, double tol);

/// Parses the tabulated t-norm file format: line 1 "tnorm r", then r+1 lines of
/// r+1 whitespace-separated rationals "p/q" or decimals.
TNorm parse_tabulated_tnorm(std::istream& in);

}  // namespace gyrofuzz
