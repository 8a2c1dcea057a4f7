#pragma once

#include "gyrofuzz/sampling.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gyrofuzz {

/// Parse failure with 1-based line and column of the offending token.
struct TableParseError : std::runtime_error {
    TableParseError(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error(std::move(msg)), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// A finite magma given by its Cayley table: cells[r*n + c] is the index of
/// element_r (+) element_c.
struct CayleyTable {
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<std::uint32_t> cells;

    std::uint32_t at(std::size_t row, std::size_t col) const { return cells[row * n + col]; }
};

/// Reads the "gyrotable <n>" format: a names line, then n rows of n names.
/// Lines starting with '#' are comments. Names match [A-Za-z0-9_]+.
CayleyTable parse_table(std::istream& in);

std::string serialize_table(const CayleyTable& table);

/// Exhaustive classification of a finite table.
struct Diagnosis {
    enum class Verdict { group, gyrogroup_nongroup, not_gyrogroup };

    Verdict verdict;
    std::optional<std::string> failing_axiom;
    std::vector<std::string> witness;  // element names, lexicographically first failure

    bool is_gyrogroup() const { return verdict != Verdict::not_gyrogroup; }
    std::string verdict_string() const;
};

/// Finds the two-sided identity and inverses, derives gyr[a,b] through the
/// gyrator identity, and verifies bijectivity, the automorphism property, G3
/// over all n^3 triples and G4 over all pairs. O(n^4), no sampling.
Diagnosis prove_gyrogroup(const CayleyTable& table);

/// Gyrogroup instance backed by a table. Construction requires a two-sided
/// identity and two-sided inverses; the remaining axioms are the suites' job.
class TableGyrogroup {
public:
    using Element = std::uint32_t;

    explicit TableGyrogroup(CayleyTable table);

    std::string name() const { return "table[" + std::to_string(table_.n) + "]"; }
    std::size_t order() const { return table_.n; }
    Element element(std::size_t i) const { return static_cast<Element>(i); }
    Element identity() const { return identity_; }
    Element oplus(Element a, Element b) const { return table_.at(a, b); }
    Element neg(Element a) const { return inverse_[a]; }

    /// Derived from the table via the gyrator identity.
    Element gyr(Element a, Element b, Element c) const {
        return oplus(neg(oplus(a, b)), oplus(a, oplus(b, c)));
    }

    bool eq(Element a, Element b) const { return a == b; }
    double dist(Element a, Element b) const { return a == b ? 0.0 : 1.0; }
    std::string format(Element x) const { return table_.names[x]; }

    const CayleyTable& table() const { return table_; }

    struct Sampler {
        std::uint32_t n;

        Element operator()(Rng& rng) const { return static_cast<Element>(bounded(rng, n)); }
    };
    Sampler sampler() const { return Sampler{static_cast<std::uint32_t>(table_.n)}; }

private:
    CayleyTable table_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
};

}  // namespace gyrofuzz
