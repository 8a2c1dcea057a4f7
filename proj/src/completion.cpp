#include "gyrofuzz/completion.hpp"

#include <cmath>

namespace gyrofuzz {

namespace {

struct ContinuedFraction {
    long head;
    std::vector<long> period;
    double oracle;
};

ContinuedFraction cf_for(const std::string& constant) {
    if (constant == "sqrt2") return {1, {2}, std::sqrt(2.0)};
    if (constant == "sqrt3") return {1, {1, 2}, std::sqrt(3.0)};
    if (constant == "sqrt5") return {2, {4}, std::sqrt(5.0)};
    if (constant == "phi") return {1, {1}, (1.0 + std::sqrt(5.0)) / 2.0};
    throw std::invalid_argument("unknown convergents constant: " + constant);
}

long cf_term(const ContinuedFraction& cf, std::size_t i) {
    if (i == 0) return cf.head;
    return cf.period[(i - 1) % cf.period.size()];
}

// n-th convergent h_n / k_n.
Rational cf_convergent(const ContinuedFraction& cf, std::size_t n) {
    BigInt h_prev = 1, h = cf_term(cf, 0);
    BigInt k_prev = 0, k = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt a = cf_term(cf, i);
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    Rational out(h, k);
    out.canonicalize();
    return out;
}

// Smallest n with 2/(k_n * k_{n+1}) < eps, from |x - h_n/k_n| <= 1/(k_n k_{n+1}).
std::size_t cf_modulus(const ContinuedFraction& cf, const Rational& eps) {
    if (eps <= 0) throw std::domain_error("modulus needs eps > 0");
    BigInt k_prev = 0, k = 1;  // k_{-1}, k_0
    for (std::size_t n = 0;; ++n) {
        BigInt a_next = cf_term(cf, n + 1);
        BigInt k_next = a_next * k + k_prev;
        Rational bound(2, 1);
        bound /= Rational(k * k_next);
        if (bound < eps) return n;
        k_prev = k;
        k = k_next;
    }
}

}  // namespace

RationalFixture convergents_fixture(const std::string& constant) {
    ContinuedFraction cf = cf_for(constant);
    RationalFixture f;
    f.name = constant;
    f.declared_cauchy = true;
    f.oracle = cf.oracle;
    f.seq = [cf](std::size_t i) { return cf_convergent(cf, i); };
    f.modulus = [cf](const Rational& eps) { return cf_modulus(cf, eps); };
    return f;
}

std::vector<RationalFixture> load_fixtures(const nlohmann::json& spec) {
    if (!spec.is_array()) throw std::invalid_argument("fixture file must hold a JSON array");
    std::vector<RationalFixture> out;
    for (const auto& item : spec) {
        std::string name = item.at("name").get<std::string>();
        std::string kind = item.at("kind").get<std::string>();
        const auto& params = item.at("params");
        if (!params.contains("cauchy"))
            throw std::invalid_argument("fixture " + name + " lacks a declared Cauchy status");
        bool cauchy = params.at("cauchy").get<bool>();

        if (kind == "convergents") {
            RationalFixture f = convergents_fixture(params.at("constant").get<std::string>());
            f.name = name;
            if (f.declared_cauchy != cauchy)
                throw std::invalid_argument("fixture " + name + ": convergents are Cauchy");
            out.push_back(std::move(f));
        } else if (kind == "constant") {
            auto v = parse_rational(params.at("value").get<std::string>());
            if (!v) throw std::invalid_argument("fixture " + name + ": bad rational value");
            if (!cauchy)
                throw std::invalid_argument("fixture " + name + ": constants are Cauchy");
            RationalFixture f;
            f.name = name;
            f.declared_cauchy = true;
            f.oracle = to_double(*v);
            Rational value = *v;
            f.seq = [value](std::size_t) { return value; };
            f.modulus = [](const Rational&) { return std::size_t{0}; };
            out.push_back(std::move(f));
        } else if (kind == "explicit") {
            std::vector<Rational> values;
            for (const auto& s : params.at("values")) {
                auto v = parse_rational(s.get<std::string>());
                if (!v) throw std::invalid_argument("fixture " + name + ": bad rational value");
                values.push_back(*v);
            }
            if (values.empty())
                throw std::invalid_argument("fixture " + name + ": empty value list");
            bool repeat = params.value("repeat", false);
            RationalFixture f;
            f.name = name;
            f.declared_cauchy = cauchy;
            if (repeat) {
                f.seq = [values](std::size_t i) { return values[i % values.size()]; };
            } else {
                // eventually constant at the last listed value
                f.seq = [values](std::size_t i) {
                    return values[std::min(i, values.size() - 1)];
                };
                f.oracle = to_double(values.back());
            }
            std::size_t settle = values.size() - 1;
            f.modulus = [settle](const Rational&) { return settle; };
            out.push_back(std::move(f));
        } else {
            throw std::invalid_argument("fixture " + name + ": unknown kind " + kind);
        }
    }
    return out;
}

std::vector<RationalFixture> load_fixtures_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    nlohmann::json spec = nlohmann::json::parse(in);
    return load_fixtures(spec);
}

}  // namespace gyrofuzz
