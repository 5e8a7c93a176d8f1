#ifndef ARITHQ_TOOLS_PARSE_HPP
#define ARITHQ_TOOLS_PARSE_HPP

#include "arithq/formalode.hpp"
#include "arithq/polynomial.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace arithq::cli {

/// Parse error carrying a one-line diagnostic naming the offending input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using TermMap = std::map<std::vector<unsigned>, Rat>;

/// Polynomial literal: terms joined by +/-, each term an optional rational
/// coefficient followed by variable powers ("3x^2", "t1^2t2", "-1/2x").
/// No parentheses, no explicit '*'; adjacency only for coefficient-variable
/// and variable-variable.
inline TermMap parse_poly_terms(const std::string& text, const std::vector<std::string>& vars) {
    TermMap terms;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_uint = [&]() -> unsigned long {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected digits at position " + std::to_string(start) + " in '" + text + "'");
        return std::stoul(text.substr(start, i - start));
    };
    auto match_var = [&]() -> int {
        for (std::size_t v = 0; v < vars.size(); ++v) {
            const std::string& name = vars[v];
            if (text.compare(i, name.size(), name) == 0) {
                // longest match wins: "t12" must not match "t1" if both exist
                bool longer = false;
                for (const auto& other : vars)
                    if (other.size() > name.size() && text.compare(i, other.size(), other) == 0)
                        longer = true;
                if (!longer) {
                    i += name.size();
                    return static_cast<int>(v);
                }
            }
        }
        return -1;
    };

    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial literal");
    bool expect_term = true;
    int sign = 1;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            if (expect_term && text[i] == '+') { ++i; continue; }
            sign = text[i] == '-' ? -sign : sign;
            ++i;
            expect_term = true;
            continue;
        }
        // one term: [rational] {var[^exp]}*
        Rat coeff(sign);
        sign = 1;
        bool have_factor = false;
        std::vector<unsigned> expo(vars.size(), 0);
        skip_ws();
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            unsigned long num = parse_uint();
            if (i < text.size() && text[i] == '/') {
                ++i;
                unsigned long den = parse_uint();
                if (den == 0) throw ParseError("zero denominator in '" + text + "'");
                coeff *= make_rat(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
            } else {
                coeff *= Rat(static_cast<long>(num));
            }
            have_factor = true;
        }
        while (i < text.size()) {
            skip_ws();
            std::size_t before = i;
            int v = match_var();
            if (v < 0) break;
            unsigned long e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = parse_uint();
            }
            expo[static_cast<std::size_t>(v)] += static_cast<unsigned>(e);
            have_factor = true;
            (void)before;
        }
        if (!have_factor)
            throw ParseError("unexpected character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i) + " in '" + text + "'");
        terms[expo] += coeff;
        expect_term = false;
    }
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0) it = terms.erase(it);
        else ++it;
    }
    return terms;
}

/// Univariate rational polynomial in the named variable (default "x").
inline RatPoly parse_rat_poly(const std::string& text, const std::string& var = "x") {
    TermMap terms = parse_poly_terms(text, {var});
    std::size_t deg = 0;
    for (const auto& [e, v] : terms) deg = std::max<std::size_t>(deg, e[0]);
    std::vector<Rat> c(deg + 1, Rat(0));
    for (const auto& [e, v] : terms) c[e[0]] = v;
    return RatPoly(std::move(c));
}

inline Series parse_series(const std::string& text, unsigned nvars, unsigned order) {
    std::vector<std::string> vars;
    for (unsigned i = 1; i <= nvars; ++i) vars.push_back("t" + std::to_string(i));
    TermMap terms = parse_poly_terms(text, vars);
    Series s(nvars, order);
    for (const auto& [e, v] : terms) {
        unsigned deg = 0;
        for (auto x : e) deg += x;
        if (deg > order)
            throw ParseError("term of degree " + std::to_string(deg) +
                             " exceeds the truncation order in '" + text + "'");
        s.set_coeff(e, v);
    }
    return s;
}

/// Row-major bracketed matrix of polynomial entries: [[a,b],[c,d]].
inline std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i == text.size() || text[i] != '[') throw ParseError("matrix literal must start with '['");
    ++i;
    std::vector<std::vector<std::string>> rows;
    while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError("unterminated matrix literal '" + text + "'");
        if (text[i] == ']') { ++i; break; }
        if (text[i] == ',') { ++i; continue; }
        if (text[i] != '[') throw ParseError("expected row '[' in matrix literal '" + text + "'");
        ++i;
        std::vector<std::string> row;
        std::string entry;
        while (i < text.size() && text[i] != ']') {
            if (text[i] == ',') {
                row.push_back(entry);
                entry.clear();
            } else {
                entry += text[i];
            }
            ++i;
        }
        if (i == text.size()) throw ParseError("unterminated row in matrix literal '" + text + "'");
        ++i;  // consume ']'
        row.push_back(entry);
        rows.push_back(std::move(row));
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters after matrix literal '" + text + "'");
    if (rows.empty()) throw ParseError("empty matrix literal");
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw ParseError("ragged matrix literal '" + text + "'");
    return rows;
}

/// Connection form literal: one matrix per variable, separated by ';'.
inline ConnectionForm parse_connection(const std::string& text, unsigned order) {
    std::vector<std::string> chunks;
    std::string cur;
    for (char ch : text) {
        if (ch == ';') {
            chunks.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    chunks.push_back(cur);
    ConnectionForm omega;
    omega.nvars = static_cast<unsigned>(chunks.size());
    for (const auto& chunk : chunks) {
        auto rows = split_matrix_literal(chunk);
        if (rows.size() != rows[0].size()) throw ParseError("connection matrices must be square");
        if (omega.size == 0) omega.size = rows.size();
        if (rows.size() != omega.size)
            throw ParseError("connection matrices must share one size");
        SeriesMat m(omega.size, std::vector<Series>(omega.size));
        for (std::size_t r = 0; r < omega.size; ++r)
            for (std::size_t c = 0; c < omega.size; ++c)
                m[r][c] = parse_series(rows[r][c], omega.nvars, order);
        omega.comps.push_back(std::move(m));
    }
    return omega;
}

inline std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw ParseError("empty entry in list '" + text + "'");
        std::size_t slash = cur.find('/');
        try {
            if (slash == std::string::npos) {
                out.emplace_back(Int(cur));
            } else {
                out.push_back(make_rat(Int(cur.substr(0, slash)), Int(cur.substr(slash + 1))));
            }
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational '" + cur + "' in list '" + text + "'");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(ch))) cur += ch;
    }
    flush();
    return out;
}

inline std::vector<unsigned> parse_uint_list(const std::string& text) {
    std::vector<unsigned> out;
    for (const Rat& r : parse_rat_list(text)) {
        if (r.get_den() != 1 || r < 0)
            throw ParseError("expected nonnegative integers in list '" + text + "'");
        out.push_back(static_cast<unsigned>(r.get_num().get_ui()));
    }
    return out;
}

} // namespace arithq::cli

#endif
