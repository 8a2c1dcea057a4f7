#include "gyrofuzz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gyrofuzz {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    // decimal exponent "1e-9", "2.5E3"
    auto epos = text.find_first_of("eE");
    if (epos != std::string_view::npos) {
        auto mantissa = parse_rational(text.substr(0, epos));
        if (!mantissa) return std::nullopt;
        std::string_view exp = text.substr(epos + 1);
        bool exp_neg = false;
        if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
            exp_neg = exp[0] == '-';
            exp.remove_prefix(1);
        }
        if (!all_digits(exp) || exp.size() > 6) return std::nullopt;
        long k = std::stol(std::string(exp));
        BigInt scale = 1;
        for (long i = 0; i < k; ++i) scale *= 10;
        Rational out = *mantissa;
        if (exp_neg)
            out /= Rational(scale);
        else
            out *= Rational(scale);
        if (negative) out = -out;
        return out;
    }

    auto slash = text.find('/');
    auto dot = text.find('.');
    Rational out;
    if (slash != std::string_view::npos) {
        if (dot != std::string_view::npos) return std::nullopt;
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        BigInt d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        out = Rational(BigInt(std::string(num), 10), d);
        out.canonicalize();
    } else if (dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if (!whole.empty() && !all_digits(whole)) return std::nullopt;
        if (!frac.empty() && !all_digits(frac)) return std::nullopt;
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt n = whole.empty() ? BigInt(0) : BigInt(std::string(whole), 10);
        n *= scale;
        if (!frac.empty()) n += BigInt(std::string(frac), 10);
        out = Rational(n, scale);
        out.canonicalize();
    } else {
        if (!all_digits(text)) return std::nullopt;
        out = Rational(BigInt(std::string(text), 10));
    }
    if (negative) out = -out;
    return out;
}

std::string format_rational(const Rational& q) {
    return q.get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

Rational rational_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    const BigInt& num = q.get_num();
    const BigInt& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational r(sn, sd);
    r.canonicalize();
    return r;
}

RatInterval sqrt_enclosure(const Rational& x, const Rational& eps) {
    if (x < 0) throw std::domain_error("sqrt_enclosure of negative value");
    if (eps <= 0) throw std::invalid_argument("sqrt_enclosure needs eps > 0");
    if (x == 0) return {Rational(0), Rational(0)};
    if (auto exact = exact_sqrt(x)) return {*exact, *exact};
    Rational lo(0);
    Rational hi = x < 1 ? Rational(1) : Rational(x);
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace gyrofuzz
