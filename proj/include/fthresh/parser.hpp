#ifndef FTHRESH_PARSER_HPP
#define FTHRESH_PARSER_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/polynomial.hpp"

namespace fthresh {

// Declared variable names, in ring order. Exponent vector slot i belongs to
// names[i].
struct VarTable {
    std::vector<std::string> names;

    VarTable() = default;
    explicit VarTable(std::vector<std::string> n) : names(std::move(n)) {}

    std::optional<std::uint32_t> index(const std::string& name) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }
    std::uint32_t size() const { return static_cast<std::uint32_t>(names.size()); }
};

namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, std::uint32_t p, const VarTable& vars)
        : text_(text), p_(p), vars_(vars) {}

    // poly := term ('+' term)*
    Polynomial run() {
        Polynomial f(p_, vars_.size());
        parse_term(f);
        skip_ws();
        while (!done()) {
            expect('+');
            parse_term(f);
            skip_ws();
        }
        return f;
    }

private:
    // term := [coeff '*'] factor ('*' factor)* | coeff
    void parse_term(Polynomial& f) {
        skip_ws();
        std::uint64_t coeff = 1;
        bool saw_factor = false;
        Expvec e(vars_.size(), 0);

        if (done()) fail("expected a term");
        if (std::isdigit(peek())) {
            coeff = parse_nat() % p_;
            skip_ws();
            if (!done() && peek() == '*') {
                ++pos_;
                parse_factor(e);
                saw_factor = true;
            }
        } else {
            parse_factor(e);
            saw_factor = true;
        }
        skip_ws();
        while (saw_factor && !done() && peek() == '*') {
            ++pos_;
            parse_factor(e);
            skip_ws();
        }
        f.add_term(std::move(e), coeff);
    }

    // factor := var ['^' nat]
    void parse_factor(Expvec& e) {
        skip_ws();
        if (done() || !(std::isalpha(peek()) || peek() == '_'))
            fail("expected a variable");
        std::size_t start = pos_;
        std::string name;
        while (!done() && (std::isalnum(peek()) || peek() == '_')) name += text_[pos_++];
        auto idx = vars_.index(name);
        if (!idx) throw parse_error("unknown variable '" + name + "'", start);
        std::uint64_t exp = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            exp = parse_nat();
        }
        if (e[*idx] + exp > UINT32_MAX) fail("exponent too large");
        e[*idx] += static_cast<std::uint32_t>(exp);
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (done() || !std::isdigit(peek())) fail("expected a number");
        std::uint64_t v = 0;
        while (!done() && std::isdigit(peek())) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (v > (1ull << 40)) fail("number too large");
        }
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return text_[pos_]; }
    bool done() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    const std::string& text_;
    std::uint32_t p_;
    const VarTable& vars_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Grammar: poly := term ('+' term)*; term := [coeff '*'] factor ('*' factor)*;
// factor := var ['^' nat]. A bare coeff is also accepted as a constant term.
// No '-' sign: characteristic-p inputs are written additively.
inline Polynomial parse_poly(const std::string& text, std::uint32_t p, const VarTable& vars) {
    if (!is_prime(p)) throw precondition_error("p is not prime");
    return detail::PolyParser(text, p, vars).run();
}

// Deterministic, re-parseable rendering: terms ascend by total degree, then
// by exponent vector.
inline std::string poly_to_string(const Polynomial& f, const VarTable& vars) {
    if (f.nvars() != vars.size())
        throw precondition_error("variable table does not match polynomial");
    if (f.is_zero()) return "0";

    std::vector<std::pair<Expvec, std::uint32_t>> ts(f.terms().begin(), f.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        auto da = expvec_total_degree(a.first), db = expvec_total_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });

    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        if (!first) out << " + ";
        first = false;
        bool constant = expvec_total_degree(e) == 0;
        bool wrote = false;
        if (c != 1 || constant) {
            out << c;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) out << "*";
            out << vars.names[i];
            if (e[i] > 1) out << "^" << e[i];
            wrote = true;
        }
    }
    return out.str();
}

} // namespace fthresh

#endif
