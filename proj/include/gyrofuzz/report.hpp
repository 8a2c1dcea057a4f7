#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <deque>
#include <vector>

namespace gyrofuzz {

/// One law row of a property report.
struct CheckResult {
    std::string law;
    bool pass = true;
    nlohmann::json witness;  // null when no counterexample
    double max_deviation = 0.0;
    std::size_t failures = 0;

    /// Records a failure, keeping the first witness and the worst deviation.
    void fail(nlohmann::json w, double deviation = 0.0);
    void note_deviation(double deviation);
};

/// Result of a law suite. Serializes to the shared schema
/// { "suite", "checks": [ { "law", "status", "witness", "max_deviation" } ], "seed", "samples" }.
class PropertyReport {
public:
    PropertyReport(std::string suite, std::uint64_t seed, std::size_t samples);

    CheckResult& add_check(std::string law);
    const CheckResult* find(std::string_view law) const;

    bool passed() const;
    const std::string& suite() const { return suite_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t samples() const { return samples_; }
    const std::deque<CheckResult>& checks() const { return checks_; }

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::string suite_;
    std::uint64_t seed_;
    std::size_t samples_;
    std::deque<CheckResult> checks_;
};

}  // namespace gyrofuzz
