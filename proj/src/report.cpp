#include "gyrofuzz/report.hpp"

#include <algorithm>
#include <sstream>

namespace gyrofuzz {

void CheckResult::fail(nlohmann::json w, double deviation) {
    if (pass) witness = std::move(w);
    pass = false;
    ++failures;
    note_deviation(deviation);
}

void CheckResult::note_deviation(double deviation) {
    max_deviation = std::max(max_deviation, deviation);
}

PropertyReport::PropertyReport(std::string suite, std::uint64_t seed, std::size_t samples)
    : suite_(std::move(suite)), seed_(seed), samples_(samples) {}

CheckResult& PropertyReport::add_check(std::string law) {
    checks_.push_back(CheckResult{std::move(law), true, nlohmann::json(), 0.0, 0});
    return checks_.back();
}

const CheckResult* PropertyReport::find(std::string_view law) const {
    for (const auto& c : checks_)
        if (c.law == law) return &c;
    return nullptr;
}

bool PropertyReport::passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json PropertyReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) {
        checks.push_back({{"law", c.law},
                          {"status", c.pass ? "pass" : "fail"},
                          {"witness", c.witness},
                          {"max_deviation", c.max_deviation}});
    }
    return {{"suite", suite_}, {"checks", checks}, {"seed", seed_}, {"samples", samples_}};
}

std::string PropertyReport::to_text() const {
    std::ostringstream out;
    out << "suite " << suite_ << " (seed " << seed_ << ", samples " << samples_ << ")\n";
    for (const auto& c : checks_) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.law;
        if (!c.pass) {
            out << "  failures=" << c.failures << " max_deviation=" << c.max_deviation;
            if (!c.witness.is_null()) out << " witness=" << c.witness.dump();
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace gyrofuzz
