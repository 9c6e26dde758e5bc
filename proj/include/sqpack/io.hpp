#pragma once

// Packing, transcript and witness documents, and SVG rendering.
//
// Rationals are always written as "p/q" strings in lowest terms so that
// documents round-trip exactly; no value passes through floating point.
//
//   {"squares": [{"x": "0/1", "y": "0/1", "side": "1/2"}, ...], "k": 2}
//
// "k" is an optional integer hint.

#include "sqpack/geometry.hpp"
#include "sqpack/sweep.hpp"
#include "sqpack/witness.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqpack {

using Json = nlohmann::ordered_json;

/// Malformed document. Syntax errors carry a line number; semantic errors
/// name the offending field.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& message, std::size_t line = 0, std::string field = {})
        : std::runtime_error(message), line_(line), field_(std::move(field)) {}

    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

struct PackingDocument {
    Packing packing;
    std::optional<std::int64_t> k;
};

namespace detail {

inline Rational parse_rational_field(const Json& node, const std::string& field) {
    if (!node.is_string()) throw FormatError(field + ": expected a \"p/q\" string", 0, field);
    try {
        return Rational::parse(node.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(field + ": " + e.what(), 0, field);
    }
}

inline std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace detail

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t line = detail::line_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw FormatError("syntax error at line " + std::to_string(line) + ": " + e.what(), line);
    }
}

inline PackingDocument parse_packing_document(std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) throw FormatError("document must be a JSON object");
    if (!doc.contains("squares")) throw FormatError("missing field \"squares\"", 0, "squares");
    const Json& list = doc.at("squares");
    if (!list.is_array()) throw FormatError("squares: expected an array", 0, "squares");

    PackingDocument out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string base = "squares[" + std::to_string(i) + "]";
        const Json& item = list[i];
        if (!item.is_object()) throw FormatError(base + ": expected an object", 0, base);
        Square s;
        for (const char* name : {"x", "y", "side"}) {
            const std::string field = base + "." + name;
            if (!item.contains(name)) throw FormatError(field + ": missing", 0, field);
            Rational v = detail::parse_rational_field(item.at(name), field);
            if (std::string_view(name) == "x") s.x = std::move(v);
            else if (std::string_view(name) == "y") s.y = std::move(v);
            else s.side = std::move(v);
        }
        if (s.side.sign() <= 0)
            throw FormatError(base + ".side: side must be positive, got " + s.side.str(), 0, base + ".side");
        out.packing.squares.push_back(std::move(s));
    }
    if (doc.contains("k")) {
        const Json& k = doc.at("k");
        if (!k.is_number_integer() || k.get<std::int64_t>() < 1)
            throw FormatError("k: expected a positive integer", 0, "k");
        out.k = k.get<std::int64_t>();
    }
    return out;
}

inline Packing parse_packing(std::string_view text) { return parse_packing_document(text).packing; }

inline Json to_json(const Square& s) {
    return Json{{"x", s.x.canonical()}, {"y", s.y.canonical()}, {"side", s.side.canonical()}};
}

inline Json to_json(const Packing& p, std::optional<std::int64_t> k = std::nullopt) {
    Json squares = Json::array();
    for (const auto& s : p.squares) squares.push_back(to_json(s));
    Json doc{{"squares", std::move(squares)}};
    if (k) doc["k"] = *k;
    return doc;
}

inline std::string emit_packing(const Packing& p, std::optional<std::int64_t> k = std::nullopt) {
    return to_json(p, k).dump(2) + "\n";
}

inline Json to_json(const ValidationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back({{"kind", to_string(v.kind)}, {"indices", v.indices}});
    return Json{{"is_valid", r.is_valid}, {"violations", std::move(violations)}};
}

inline Json to_json(const OverlapWitness& w) {
    return Json{{"point", {w.px.canonical(), w.py.canonical()}},
                {"first", w.first},
                {"second", w.second},
                {"engine", to_string(w.engine)}};
}

inline Json to_json(const SweepTranscript& t) {
    auto rationals = [](const std::vector<Rational>& values) {
        Json out = Json::array();
        for (const auto& v : values) out.push_back(v.canonical());
        return out;
    };
    Json mu = Json::array();
    for (const auto& row : t.mu) mu.push_back(rationals(row));
    return Json{{"k", t.k},
                {"a", t.a.canonical()},
                {"m", t.m},
                {"classA", t.class_a},
                {"classB", t.class_b},
                {"classC", t.class_c},
                {"mu", std::move(mu)},
                {"line_loads", rationals(t.line_loads)},
                {"total_count", t.total_count},
                {"chain_lhs", t.chain_lhs.canonical()},
                {"chain_bound", t.chain_bound.canonical()},
                {"checks",
                 {{"class_a_small", t.checks.class_a_small},
                  {"class_b_exact", t.checks.class_b_exact},
                  {"class_c_bounded", t.checks.class_c_bounded},
                  {"partition_inequality", t.checks.partition_inequality},
                  {"chain_holds", t.checks.chain_holds}}}};
}

struct SvgOptions {
    std::set<std::size_t> highlighted;  // shaded squares
    std::optional<std::int64_t> sweep_k;  // overlay lines x = a + j/k
    Rational sweep_a;
};

/// SVG 1.1 document with the unit square on a 1000 x 1000 viewport, y up.
inline std::string emit_svg(const Packing& p, const SvgOptions& options = {}) {
    constexpr int view = 1000;
    constexpr int margin = 50;
    auto coord = [](const Rational& v) { return (v * Rational(view)).to_decimal(3); };
    auto flip = [&](const Rational& v) { return (Rational(view) - v * Rational(view)).to_decimal(3); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << view + 2 * margin
        << "\" height=\"" << view + 2 * margin << "\" viewBox=\"" << -margin << " " << -margin << " "
        << view + 2 * margin << " " << view + 2 * margin << "\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"" << view << "\" height=\"" << view
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"4\"/>\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Square& s = p.squares[i];
        const bool shaded = options.highlighted.count(i) != 0;
        out << "  <rect x=\"" << coord(s.x) << "\" y=\"" << flip(s.y + s.side) << "\" width=\""
            << coord(s.side) << "\" height=\"" << coord(s.side) << "\" fill=\""
            << (shaded ? "lightgray" : "none") << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    if (options.sweep_k) {
        const std::int64_t k = *options.sweep_k;
        for (std::int64_t j = 0; j < k; ++j) {
            const std::string x = coord(options.sweep_a + Rational(j, k));
            out << "  <line x1=\"" << x << "\" y1=\"" << -margin << "\" x2=\"" << x << "\" y2=\""
                << view + margin << "\" stroke=\"black\" stroke-width=\"5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace sqpack
