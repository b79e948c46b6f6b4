#pragma once

// System files: JSON (schema 1) and a line grammar
//
//   # comment
//   f1 = a1 x1^2 + p1 x2 x3      (symbolic)
//   f2 = 2 x2^2 - 1/3 x3 x4      (specialized)
//   order = 2,3,4,5,1            (optional)
//
// plus quadratic-space files for the normal-form reduction.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binres/coeff_matrix.hpp"
#include "binres/factored.hpp"
#include "binres/frames.hpp"
#include "binres/normal_form.hpp"
#include "binres/polyparse.hpp"

namespace binres {

using Json = nlohmann::ordered_json;

struct SystemSpec {
    std::size_t n = 0;
    std::vector<std::pair<unsigned, unsigned>> cofactors;  // 0-based, ascending
    std::optional<std::vector<Rational>> a;
    std::optional<std::vector<Rational>> b;
    std::optional<IndexOrder> order;

    bool specialized() const noexcept { return a.has_value(); }

    BinomialSystem system() const {
        BinomialSystem s = BinomialSystem::symbolic(n, cofactors);
        return a ? s.specialized(*a, *b) : s;
    }

    static SystemSpec from_system(const BinomialSystem& sys) {
        SystemSpec spec;
        spec.n = sys.n();
        for (std::size_t i = 0; i < sys.n(); ++i) spec.cofactors.push_back(sys.cofactor_indices(i));
        if (sys.is_specialized()) {
            spec.a = sys.a_values();
            spec.b = sys.b_values();
        }
        return spec;
    }
};

namespace detail {

inline void validate_spec(const SystemSpec& s) {
    if (s.n < 1) throw ValidationError("n must be at least 1");
    if (s.cofactors.size() != s.n) throw ValidationError("expected " + std::to_string(s.n) + " forms");
    for (std::size_t i = 0; i < s.n; ++i) {
        auto [j, k] = s.cofactors[i];
        if (j >= s.n || k >= s.n) throw ValidationError("cofactor of f" + std::to_string(i + 1) + " out of range 1..n");
        if (j == k) throw ValidationError("cofactor of f" + std::to_string(i + 1) + " is not square-free");
    }
    if (s.a.has_value() != s.b.has_value()) throw ValidationError("a and b values must be given together");
    if (s.order && s.order->size() != s.n) throw ValidationError("order length differs from n");
}

inline Rational json_rational(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ValidationError(what + " must be an integer or a rational string");
}

inline unsigned json_index(const Json& v, const std::string& what) {
    if (!v.is_number_integer() || v.get<long>() < 1) throw ValidationError(what + " must be a positive integer");
    return static_cast<unsigned>(v.get<long>());
}

inline IndexOrder order_from_one_based(const std::vector<unsigned>& v) {
    std::vector<unsigned> image;
    for (unsigned k : v) {
        if (k < 1) throw ValidationError("order entries are 1-based");
        image.push_back(k - 1);
    }
    return IndexOrder(std::move(image));
}

}  // namespace detail

inline SystemSpec parse_system_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte offset -> line/column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("malformed JSON", line, col);
    }
    if (!j.is_object()) throw ValidationError("system file must hold a JSON object");
    if (j.value("schema", 0) != 1) throw ValidationError("unsupported or missing schema (expected 1)");
    if (!j.contains("forms") || !j["forms"].is_array()) throw ValidationError("missing 'forms' array");
    SystemSpec s;
    s.n = j.contains("n") ? detail::json_index(j["n"], "n") : j["forms"].size();
    s.cofactors.assign(s.n, {0, 0});
    std::vector<bool> seen(s.n, false);
    std::vector<Rational> a(s.n), b(s.n);
    std::size_t with_values = 0;
    for (const auto& f : j["forms"]) {
        if (!f.is_object() || !f.contains("square") || !f.contains("cofactor"))
            throw ValidationError("each form needs 'square' and 'cofactor'");
        const unsigned i = detail::json_index(f["square"], "square");
        if (i > s.n) throw ValidationError("square index " + std::to_string(i) + " out of range 1..n");
        if (seen[i - 1]) throw ValidationError("two forms with square index " + std::to_string(i));
        seen[i - 1] = true;
        const auto& c = f["cofactor"];
        if (!c.is_array() || c.size() != 2) throw ValidationError("cofactor must list two indices");
        unsigned p = detail::json_index(c[0], "cofactor index"), q = detail::json_index(c[1], "cofactor index");
        if (p > q) std::swap(p, q);
        s.cofactors[i - 1] = {p - 1, q - 1};
        if (f.contains("a") || f.contains("b") || f.contains("p")) {
            if (!f.contains("a") || !(f.contains("b") || f.contains("p")))
                throw ValidationError("form f" + std::to_string(i) + " needs both a and b");
            a[i - 1] = detail::json_rational(f["a"], "a");
            b[i - 1] = detail::json_rational(f.contains("b") ? f["b"] : f["p"], "b");
            ++with_values;
        }
    }
    if (j["forms"].size() != s.n) throw ValidationError("expected exactly one form per square index 1..n");
    if (with_values != 0 && with_values != s.n) throw ValidationError("either every form or no form carries values");
    if (with_values) {
        s.a = std::move(a);
        s.b = std::move(b);
    }
    if (j.contains("order")) {
        if (!j["order"].is_array()) throw ValidationError("order must be an array");
        std::vector<unsigned> o;
        for (const auto& k : j["order"]) o.push_back(detail::json_index(k, "order entry"));
        s.order = detail::order_from_one_based(o);
    }
    detail::validate_spec(s);
    return s;
}

/// Parses the line grammar described at the top of this file.
inline SystemSpec parse_system_lines(const std::string& text) {
    struct Line {
        std::size_t number;
        unsigned index;
        std::vector<ParsedTerm> terms;
    };
    std::vector<Line> lines;
    std::optional<std::vector<unsigned>> order;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    const SymbolTable table;
    while (std::getline(in, raw)) {
        ++number;
        std::string s = raw.substr(0, raw.find('#'));
        const auto first = s.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'fK = ...' or 'order = ...'", number, first + 1);
        std::string lhs = s.substr(first, eq - first);
        lhs.erase(lhs.find_last_not_of(" \t") + 1);
        if (lhs == "order") {
            std::vector<unsigned> o;
            std::size_t pos = eq + 1;
            while (pos < s.size()) {
                const auto start = s.find_first_not_of(" \t,\r", pos);
                if (start == std::string::npos) break;
                auto end = s.find_first_of(" \t,\r", start);
                if (end == std::string::npos) end = s.size();
                const std::string tok = s.substr(start, end - start);
                if (!std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }) || tok == "0")
                    throw ParseError("order entries must be positive integers", number, start + 1);
                o.push_back(static_cast<unsigned>(std::stoul(tok)));
                pos = end;
            }
            order = std::move(o);
            continue;
        }
        if (lhs.size() < 2 || lhs[0] != 'f' ||
            !std::all_of(lhs.begin() + 1, lhs.end(), [](unsigned char c) { return std::isdigit(c); }) || lhs[1] == '0')
            throw ParseError("left-hand side must be fK", number, first + 1);
        const unsigned k = static_cast<unsigned>(std::stoul(lhs.substr(1)));
        lines.push_back({number, k - 1, parse_terms(std::string_view(s).substr(eq + 1), table, number, eq + 2)});
    }
    if (lines.empty()) throw ParseError("no forms found", number ? number : 1, 1);

    SystemSpec spec;
    spec.n = lines.size();
    const std::size_t n = spec.n;
    spec.cofactors.assign(n, {0, 0});
    std::vector<bool> seen(n, false);
    std::vector<Rational> a(n), b(n);
    std::optional<bool> symbolic;
    for (const auto& L : lines) {
        const std::string name = "f" + std::to_string(L.index + 1);
        if (L.index >= n) throw ValidationError(name + ": index exceeds the number of forms");
        if (seen[L.index]) throw ValidationError(name + " defined twice");
        seen[L.index] = true;
        if (L.terms.size() != 2) throw ValidationError(name + ": a binomial a_i x_i^2 + b_i m_i is required");
        bool have_square = false, have_cofactor = false;
        for (const auto& t : L.terms) {
            std::vector<unsigned> e(n, 0);
            std::optional<Symbol> param;
            for (const auto& f : t.factors) {
                if (f.symbol.kind == SymbolKind::Var) {
                    if (f.symbol.index >= n) throw ParseError("variable index exceeds n", L.number, f.column);
                    e[f.symbol.index] += f.exponent;
                } else {
                    if (param || f.exponent != 1) throw ParseError("at most one parameter per term", L.number, f.column);
                    param = f.symbol;
                }
            }
            const XMonomial m(std::move(e));
            if (m.degree() != 2) throw ParseError(name + ": terms must have degree 2 in x", L.number, t.column);
            const bool is_square = m == XMonomial::var(n, L.index, 2);
            if (!is_square && !m.is_square_free())
                throw ParseError(name + ": only x" + std::to_string(L.index + 1) + "^2 may appear squared", L.number, t.column);
            const bool sym = param.has_value();
            if (symbolic && *symbolic != sym) throw ValidationError("mixing symbolic and numeric coefficients");
            symbolic = sym;
            if (sym) {
                const SymbolKind want = is_square ? SymbolKind::A : SymbolKind::B;
                if (param->kind != want || param->index != L.index || t.coefficient != 1)
                    throw ParseError(name + ": expected coefficient " + std::string(is_square ? "a" : "b") +
                                         std::to_string(L.index + 1),
                                     L.number, t.column);
            }
            if (is_square) {
                if (have_square) throw ValidationError(name + ": repeated square term");
                have_square = true;
                a[L.index] = t.coefficient;
            } else {
                if (have_cofactor) throw ValidationError(name + ": more than one cofactor term");
                have_cofactor = true;
                b[L.index] = t.coefficient;
                std::vector<unsigned> idx;
                for (unsigned v = 0; v < n; ++v)
                    if (m[v]) idx.push_back(v);
                spec.cofactors[L.index] = {idx[0], idx[1]};
            }
        }
        if (!have_square || !have_cofactor) throw ValidationError(name + ": a binomial a_i x_i^2 + b_i m_i is required");
    }
    if (!*symbolic) {
        spec.a = std::move(a);
        spec.b = std::move(b);
    }
    if (order) spec.order = detail::order_from_one_based(*order);
    detail::validate_spec(spec);
    return spec;
}

/// JSON when the first non-blank character is '{', line grammar otherwise.
inline SystemSpec parse_system(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_system_json(text);
    return parse_system_lines(text);
}

inline Json system_to_json(const SystemSpec& s) {
    Json j;
    j["schema"] = 1;
    j["n"] = s.n;
    Json forms = Json::array();
    for (std::size_t i = 0; i < s.n; ++i) {
        Json f;
        f["square"] = i + 1;
        f["cofactor"] = {s.cofactors[i].first + 1, s.cofactors[i].second + 1};
        if (s.a) {
            f["a"] = to_string((*s.a)[i]);
            f["b"] = to_string((*s.b)[i]);
        }
        forms.push_back(std::move(f));
    }
    j["forms"] = std::move(forms);
    if (s.order) {
        Json o = Json::array();
        for (unsigned k : s.order->image()) o.push_back(k + 1);
        j["order"] = std::move(o);
    }
    return j;
}

/// Factored polynomial with explicit exponent vectors (a-part, b-part).
inline Json factored_to_json(const FactoredPoly& f) {
    Json j;
    j["zero"] = f.is_zero();
    j["sign"] = f.sign();
    j["content"] = to_string(f.content());
    j["monomial"] = {{"a", f.monomial().a()}, {"b", f.monomial().b()}};
    Json fs = Json::array();
    for (const auto& [b, m] : f.factors())
        fs.push_back({{"lead", {{"a", b.lead.a()}, {"b", b.lead.b()}}},
                      {"trail", {{"a", b.trail.a()}, {"b", b.trail.b()}}},
                      {"sign", b.sign},
                      {"multiplicity", m}});
    j["factors"] = std::move(fs);
    j["text"] = f.str();
    return j;
}

inline std::string serialize_system_lines(const SystemSpec& s) {
    std::string out;
    for (std::size_t i = 0; i < s.n; ++i) {
        const std::string k = std::to_string(i + 1);
        const std::string m = "x" + std::to_string(s.cofactors[i].first + 1) + " x" + std::to_string(s.cofactors[i].second + 1);
        out += "f" + k + " = ";
        if (s.a) {
            const Rational& a = (*s.a)[i];
            const Rational& b = (*s.b)[i];
            auto mag = [](const Rational& c) { return abs(c) == 1 ? std::string() : to_string(Rational(abs(c))) + " "; };
            out += (a < 0 ? "-" : "") + mag(a) + "x" + k + "^2";
            out += (b < 0 ? " - " : " + ") + mag(b) + m;
        } else {
            out += "a" + k + " x" + k + "^2 + b" + k + " " + m;
        }
        out += "\n";
    }
    if (s.order) out += "order = " + s.order->str() + "\n";
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Quadratic-space files: JSON {"schema": 1, "variables": [...], "forms": [...]}
/// or text with an optional "vars: x y z" line and one form per line.
struct QuadraticSpaceFile {
    std::vector<std::string> variables;
    std::vector<RationalXPoly> forms;
};

inline QuadraticSpaceFile parse_quadratic_space(const std::string& text) {
    QuadraticSpaceFile out;
    struct Src {
        std::string text;
        std::size_t line;
    };
    std::vector<Src> srcs;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const Json::parse_error&) {
            throw ParseError("malformed JSON", 1, 1);
        }
        if (j.value("schema", 0) != 1) throw ValidationError("unsupported or missing schema (expected 1)");
        if (j.contains("variables"))
            for (const auto& v : j["variables"]) out.variables.push_back(v.get<std::string>());
        if (!j.contains("forms") || !j["forms"].is_array()) throw ValidationError("missing 'forms' array");
        std::size_t k = 0;
        for (const auto& f : j["forms"]) srcs.push_back({f.get<std::string>(), ++k});
    } else {
        std::istringstream in(text);
        std::string raw;
        std::size_t number = 0;
        while (std::getline(in, raw)) {
            ++number;
            std::string s = raw.substr(0, raw.find('#'));
            if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
            const auto lead = s.find_first_not_of(" \t");
            if (s.compare(lead, 5, "vars:") == 0) {
                std::istringstream vs(s.substr(lead + 5));
                for (std::string v; vs >> v;) out.variables.push_back(v);
                continue;
            }
            srcs.push_back({s, number});
        }
    }
    if (srcs.empty()) throw ValidationError("no forms given");
    const std::size_t n = out.variables.empty() ? srcs.size() : out.variables.size();
    for (const auto& s : srcs) out.forms.push_back(parse_rational_poly(s.text, n, out.variables, s.line));
    return out;
}

}  // namespace binres
