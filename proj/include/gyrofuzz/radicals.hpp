#pragma once

#include "gyrofuzz/rational.hpp"

#include <vector>

namespace gyrofuzz {

// Exact sign computation in Q(sqrt(r_0), ..., sqrt(r_{k-1})).
//
// An element is written as  sum over subsets S of {0..k-1} of
// coeff[S] * prod_{i in S} sqrt(rad[i]), with coeff indexed by bitmask.
// All radicands must be >= 0. The recursion splits off the highest radical:
// sign(A + B*sqrt(r)) is decided from the signs of A and B, falling back to
// the sign of A^2 - B^2*r when they disagree. Valid even when some sqrt(r_i)
// happens to be rational or radicands repeat.
int radical_sign(const std::vector<Rational>& rad, const std::vector<Rational>& coeff);

/// The value t / (t + sqrt(sq)) with t > 0, sq >= 0; this is the shape every
/// standard fuzzy metric and every fuzzy gyronorm of the form t/(t+||x||) takes.
struct StdFuzzyVal {
    Rational t;
    Rational sq;

    bool is_one() const { return sq == 0; }
    double value() const;
};

/// Sign of a - b, exact.
int cmp(const StdFuzzyVal& a, const StdFuzzyVal& b);

/// a > 1 - eps, exact, for eps in (0,1].
bool std_exceeds(const StdFuzzyVal& a, const Rational& eps);

// Exact decisions of  whole >= a * b  for the three built-in t-norms.
bool std_ge_min(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b);
bool std_ge_product(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b);
bool std_ge_lukasiewicz(const StdFuzzyVal& whole, const StdFuzzyVal& a, const StdFuzzyVal& b);

/// sqrt(x) <= sqrt(y) + sqrt(z), exact, all arguments squares.
bool sqrt_subadditive(const Rational& x, const Rational& y, const Rational& z);

}  // namespace gyrofuzz
