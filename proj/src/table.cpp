#include "gyrofuzz/table.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace gyrofuzz {

namespace {

struct Token {
    std::string text;
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

// Tokenizes the stream, dropping '#' comments.
std::vector<Token> tokenize(std::istream& in) {
    std::vector<Token> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (line[i] == '#') break;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            out.push_back(Token{line.substr(start, i - start), line_no, start + 1});
        }
    }
    return out;
}

}  // namespace

CayleyTable parse_table(std::istream& in) {
    std::vector<Token> toks = tokenize(in);
    std::size_t pos = 0;
    auto need = [&](const char* what) -> const Token& {
        if (pos >= toks.size()) {
            std::size_t line = toks.empty() ? 1 : toks.back().line + 1;
            throw TableParseError(std::string("unexpected end of input, expected ") + what, line, 1);
        }
        return toks[pos++];
    };

    const Token& magic = need("header \"gyrotable <n>\"");
    if (magic.text != "gyrotable")
        throw TableParseError("expected header \"gyrotable <n>\", got \"" + magic.text + "\"",
                              magic.line, magic.column);
    const Token& order = need("table order");
    std::size_t n = 0;
    try {
        std::size_t idx = 0;
        long v = std::stol(order.text, &idx);
        if (idx != order.text.size() || v <= 0) throw std::invalid_argument("order");
        n = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw TableParseError("table order must be a positive integer, got \"" + order.text + "\"",
                              order.line, order.column);
    }

    CayleyTable table;
    table.n = n;
    std::map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < n; ++i) {
        const Token& t = need("element name");
        if (!valid_name(t.text))
            throw TableParseError("invalid element name \"" + t.text + "\"", t.line, t.column);
        if (index.count(t.text))
            throw TableParseError("duplicate element name \"" + t.text + "\"", t.line, t.column);
        index[t.text] = static_cast<std::uint32_t>(i);
        table.names.push_back(t.text);
    }

    table.cells.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Token& t = need("table cell");
            auto it = index.find(t.text);
            if (it == index.end())
                throw TableParseError("unknown name \"" + t.text + "\" in row " +
                                          std::to_string(r + 1),
                                      t.line, t.column);
            table.cells.push_back(it->second);
        }
    }
    if (pos != toks.size())
        throw TableParseError("trailing content after table body", toks[pos].line,
                              toks[pos].column);
    return table;
}

std::string serialize_table(const CayleyTable& table) {
    std::ostringstream out;
    out << "gyrotable " << table.n << "\n";
    for (std::size_t i = 0; i < table.n; ++i) out << (i ? " " : "") << table.names[i];
    out << "\n";
    for (std::size_t r = 0; r < table.n; ++r) {
        for (std::size_t c = 0; c < table.n; ++c)
            out << (c ? " " : "") << table.names[table.at(r, c)];
        out << "\n";
    }
    return out.str();
}

std::string Diagnosis::verdict_string() const {
    switch (verdict) {
        case Verdict::group: return "group";
        case Verdict::gyrogroup_nongroup: return "gyrogroup-nongroup";
        case Verdict::not_gyrogroup: return "not-gyrogroup";
    }
    return "?";
}

Diagnosis prove_gyrogroup(const CayleyTable& t) {
    const std::size_t n = t.n;
    auto named = [&](std::initializer_list<std::uint32_t> idx) {
        std::vector<std::string> out;
        for (auto i : idx) out.push_back(t.names[i]);
        return out;
    };
    auto fail = [&](const char* axiom, std::initializer_list<std::uint32_t> idx) {
        return Diagnosis{Diagnosis::Verdict::not_gyrogroup, axiom, named(idx)};
    };

    // Two-sided identity: first row acting as the identity on the left, then
    // confirmed on the right.
    std::optional<std::uint32_t> identity;
    for (std::uint32_t e = 0; e < n && !identity; ++e) {
        bool left = true;
        for (std::uint32_t x = 0; x < n; ++x)
            if (t.at(e, x) != x) {
                left = false;
                break;
            }
        if (left) identity = e;
    }
    if (!identity) return fail("G1", {});
    const std::uint32_t e = *identity;
    for (std::uint32_t x = 0; x < n; ++x)
        if (t.at(x, e) != x) return fail("G1", {x});

    // Unique two-sided inverses.
    std::vector<std::uint32_t> inv(n);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::optional<std::uint32_t> found;
        for (std::uint32_t y = 0; y < n; ++y) {
            if (t.at(y, x) == e) {
                if (found) return fail("G2", {x});
                found = y;
            }
        }
        if (!found || t.at(x, *found) != e) return fail("G2", {x});
        inv[x] = *found;
    }

    auto gyr = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        return t.at(inv[t.at(a, b)], t.at(a, t.at(b, c)));
    };

    // gyr[a,b] bijective.
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            std::vector<bool> seen(n, false);
            for (std::uint32_t c = 0; c < n; ++c) {
                std::uint32_t v = gyr(a, b, c);
                if (seen[v]) return fail("gyr-bijective", {a, b, c});
                seen[v] = true;
            }
        }
    }

    // gyr[a,b] is a homomorphism (hence an automorphism).
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t d = 0; d < n; ++d)
                    if (gyr(a, b, t.at(c, d)) != t.at(gyr(a, b, c), gyr(a, b, d)))
                        return fail("gyr-automorphism", {a, b, c, d});

    // G3 over all triples.
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (t.at(a, t.at(b, c)) != t.at(t.at(a, b), gyr(a, b, c)))
                    return fail("G3", {a, b, c});

    // G4 pointwise over all pairs.
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (gyr(t.at(a, b), b, c) != gyr(a, b, c)) return fail("G4", {a, b, c});

    bool trivial = true;
    for (std::uint32_t a = 0; a < n && trivial; ++a)
        for (std::uint32_t b = 0; b < n && trivial; ++b)
            for (std::uint32_t c = 0; c < n && trivial; ++c)
                if (gyr(a, b, c) != c) trivial = false;

    return Diagnosis{trivial ? Diagnosis::Verdict::group : Diagnosis::Verdict::gyrogroup_nongroup,
                     std::nullopt,
                     {}};
}

TableGyrogroup::TableGyrogroup(CayleyTable table) : table_(std::move(table)) {
    const std::size_t n = table_.n;
    std::optional<std::uint32_t> identity;
    for (std::uint32_t e = 0; e < n && !identity; ++e) {
        bool left = true;
        for (std::uint32_t x = 0; x < n; ++x)
            if (table_.at(e, x) != x) {
                left = false;
                break;
            }
        bool right = left;
        for (std::uint32_t x = 0; x < n && right; ++x)
            if (table_.at(x, e) != x) right = false;
        if (right) identity = e;
    }
    if (!identity) throw std::invalid_argument("table has no two-sided identity");
    identity_ = *identity;

    inverse_.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        std::optional<std::uint32_t> found;
        for (std::uint32_t y = 0; y < n; ++y)
            if (table_.at(y, x) == identity_ && table_.at(x, y) == identity_) {
                found = y;
                break;
            }
        if (!found) throw std::invalid_argument("table element without a two-sided inverse");
        inverse_[x] = *found;
    }
}

}  // namespace gyrofuzz
