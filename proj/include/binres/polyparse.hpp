#pragma once

// Reader for polynomial text such as "a1 x1^2 + p1 x2 x3" or
// "3/4*x^2 - x*y". Multiplication may be written with '*' or by juxtaposition.

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binres/arith.hpp"
#include "binres/errors.hpp"
#include "binres/xpoly.hpp"

namespace binres {

enum class SymbolKind { Var, A, B };

struct Symbol {
    SymbolKind kind = SymbolKind::Var;
    unsigned index = 0;  // 0-based
};

struct ParsedFactor {
    Symbol symbol;
    unsigned exponent = 1;
    std::size_t column = 0;
};

struct ParsedTerm {
    Rational coefficient = 1;
    std::vector<ParsedFactor> factors;
    std::size_t column = 0;
};

/// Maps identifiers to symbols. With no custom names, x<k> is variable k;
/// a<k> and b<k> (alias p<k>) are parameters whenever `allow_params` is set.
struct SymbolTable {
    std::vector<std::string> variables;
    bool allow_params = true;

    std::optional<Symbol> resolve(std::string_view id) const {
        for (unsigned i = 0; i < variables.size(); ++i)
            if (variables[i] == id) return Symbol{SymbolKind::Var, i};
        if (id.size() < 2) return std::nullopt;
        const char head = id.front();
        const std::string_view digits = id.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) return std::nullopt;
        if (digits.front() == '0') return std::nullopt;
        const unsigned k = static_cast<unsigned>(std::stoul(std::string(digits)));
        if (head == 'x' && variables.empty()) return Symbol{SymbolKind::Var, k - 1};
        if (!allow_params) return std::nullopt;
        if (head == 'a') return Symbol{SymbolKind::A, k - 1};
        if (head == 'b' || head == 'p') return Symbol{SymbolKind::B, k - 1};
        return std::nullopt;
    }
};

namespace detail {

class TermReader {
public:
    TermReader(std::string_view text, std::size_t line, std::size_t column0, const SymbolTable& table)
        : s_(text), line_(line), col0_(column0), table_(table) {}

    std::vector<ParsedTerm> read() {
        std::vector<ParsedTerm> terms;
        skip_space();
        if (at_end()) fail("expected a polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            ParsedTerm t = read_term();
            if (sign < 0) t.coefficient = -t.coefficient;
            terms.push_back(std::move(t));
            skip_space();
        }
        return terms;
    }

private:
    ParsedTerm read_term() {
        ParsedTerm t;
        t.column = column();
        bool any = false;
        for (;;) {
            skip_space();
            if (at_end()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                t.coefficient *= read_number();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.factors.push_back(read_factor());
            } else {
                if (!any) fail(std::string("unexpected '") + c + "'");
                if (c == '*') {
                    ++pos_;
                    skip_space();
                    if (at_end()) fail("dangling '*'");
                    continue;
                }
                break;
            }
            any = true;
        }
        if (!any) fail("empty term");
        return t;
    }

    Rational read_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string lit(s_.substr(start, pos_ - start));
        if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t d = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (d == pos_) fail("missing denominator");
            lit += "/" + std::string(s_.substr(d, pos_ - d));
        }
        try {
            return parse_rational(lit);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line_, col0_ + start);
        }
    }

    ParsedFactor read_factor() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const std::string_view id = s_.substr(start, pos_ - start);
        auto sym = table_.resolve(id);
        if (!sym) throw ParseError("unknown symbol '" + std::string(id) + "'", line_, col0_ + start);
        ParsedFactor f{*sym, 1, col0_ + start};
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            const std::size_t e = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (e == pos_) fail("expected an exponent after '^'");
            f.exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(e, pos_ - e))));
        }
        return f;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    std::size_t column() const { return col0_ + pos_; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col0_;
    const SymbolTable& table_;
};

}  // namespace detail

/// Splits polynomial text into terms. `line`/`column` locate the text in its
/// source for diagnostics (both 1-based).
inline std::vector<ParsedTerm> parse_terms(std::string_view text, const SymbolTable& table, std::size_t line = 1,
                                           std::size_t column = 1) {
    return detail::TermReader(text, line, column, table).read();
}

/// Polynomial in n variables with rational coefficients; parameters rejected.
inline RationalXPoly parse_rational_poly(std::string_view text, std::size_t n, const std::vector<std::string>& names = {},
                                         std::size_t line = 1, std::size_t column = 1) {
    SymbolTable table{names, false};
    RationalXPoly out(n);
    for (const auto& t : parse_terms(text, table, line, column)) {
        std::vector<unsigned> e(n, 0);
        for (const auto& f : t.factors) {
            if (f.symbol.index >= n)
                throw ParseError("variable index exceeds n = " + std::to_string(n), line, f.column);
            e[f.symbol.index] += f.exponent;
        }
        out.add_term(XMonomial(std::move(e)), t.coefficient);
    }
    return out;
}

}  // namespace binres
