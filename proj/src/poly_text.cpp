#include "momentcert/poly_text.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <vector>

namespace momentcert {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string format_complex(Cx c) {
    if (c.imag() == 0.0) return format_double(c.real());
    std::string s = "(" + format_double(c.real());
    if (!(c.imag() < 0.0)) s += "+";
    s += format_double(c.imag());
    s += "i)";
    return s;
}

struct Token {
    enum Kind { Number, Var, Plus, Minus, Star, Caret, LParen, RParen, End } kind;
    double value = 0.0;   // Number
    bool imaginary = false;  // Number carries an 'i' suffix
    int var_index = 0;    // Var
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        skip_ws();
        if (pos_ >= s_.size()) return {Token::End};
        const char c = s_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus};
            case '-': ++pos_; return {Token::Minus};
            case '*': ++pos_; return {Token::Star};
            case '^': ++pos_; return {Token::Caret};
            case '(': ++pos_; return {Token::LParen};
            case ')': ++pos_; return {Token::RParen};
            default: break;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) throw ParseError("expected variable index after 'x'");
            Token t{Token::Var};
            t.var_index = std::atoi(std::string(s_.substr(start, pos_ - start)).c_str());
            if (t.var_index < 1) throw ParseError("variable indices start at x1");
            return t;
        }
        if (c == 'i' || c == 'I') {
            ++pos_;
            Token t{Token::Number};
            t.value = 1.0;
            t.imaginary = true;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                    s_[pos_] == 'e' || s_[pos_] == 'E' ||
                    ((s_[pos_] == '+' || s_[pos_] == '-') && pos_ > start &&
                     (s_[pos_ - 1] == 'e' || s_[pos_ - 1] == 'E'))))
                ++pos_;
            Token t{Token::Number};
            const std::string num(s_.substr(start, pos_ - start));
            char* end = nullptr;
            t.value = std::strtod(num.c_str(), &end);
            if (end == num.c_str()) throw ParseError("malformed number: " + num);
            if (pos_ < s_.size() && (s_[pos_] == 'i' || s_[pos_] == 'I')) {
                t.imaginary = true;
                ++pos_;
            }
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "' in polynomial text");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) { advance(); }

    // poly := [sign] term { ('+'|'-') term }
    std::vector<std::pair<Cx, std::vector<std::pair<int, int>>>> parse() {
        std::vector<std::pair<Cx, std::vector<std::pair<int, int>>>> terms;
        double sign = 1.0;
        if (cur_.kind == Token::Plus) advance();
        else if (cur_.kind == Token::Minus) { sign = -1.0; advance(); }
        terms.push_back(parse_term(sign));
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            sign = cur_.kind == Token::Minus ? -1.0 : 1.0;
            advance();
            terms.push_back(parse_term(sign));
        }
        if (cur_.kind != Token::End) throw ParseError("trailing input in polynomial text");
        return terms;
    }

private:
    Lexer lex_;
    Token cur_;

    void advance() { cur_ = lex_.next(); }

    std::pair<Cx, std::vector<std::pair<int, int>>> parse_term(double sign) {
        Cx coeff(1.0, 0.0);
        bool have_coeff = false;
        if (cur_.kind == Token::LParen) {
            advance();
            coeff = parse_complex_body();
            if (cur_.kind != Token::RParen) throw ParseError("expected ')' after complex coefficient");
            advance();
            have_coeff = true;
        } else if (cur_.kind == Token::Number) {
            coeff = parse_unparenthesized_complex();
            have_coeff = true;
        }
        coeff *= sign;
        if (have_coeff && cur_.kind == Token::Star) advance();
        std::vector<std::pair<int, int>> factors;
        while (cur_.kind == Token::Var) {
            int var = cur_.var_index;
            advance();
            int exp = 1;
            if (cur_.kind == Token::Caret) {
                advance();
                if (cur_.kind != Token::Number || cur_.imaginary || cur_.value < 0 ||
                    cur_.value != static_cast<double>(static_cast<int>(cur_.value)))
                    throw ParseError("exponent must be a nonnegative integer");
                exp = static_cast<int>(cur_.value);
                advance();
            }
            factors.emplace_back(var, exp);
            if (cur_.kind == Token::Star) advance();
        }
        if (!have_coeff && factors.empty())
            throw ParseError("expected a coefficient or monomial");
        return {coeff, std::move(factors)};
    }

    // Inside parens: [sign] num ['i'] [('+'|'-') num 'i']
    Cx parse_complex_body() {
        double sign = 1.0;
        if (cur_.kind == Token::Plus) advance();
        else if (cur_.kind == Token::Minus) { sign = -1.0; advance(); }
        if (cur_.kind != Token::Number) throw ParseError("expected number in complex coefficient");
        Cx c = cur_.imaginary ? Cx(0.0, sign * cur_.value) : Cx(sign * cur_.value, 0.0);
        advance();
        if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            const double s2 = cur_.kind == Token::Minus ? -1.0 : 1.0;
            advance();
            if (cur_.kind != Token::Number || !cur_.imaginary)
                throw ParseError("expected imaginary part after sign in complex coefficient");
            c += Cx(0.0, s2 * cur_.value);
            advance();
        }
        return c;
    }

    // "a+bi" without parens binds greedily as one complex coefficient.
    Cx parse_unparenthesized_complex() {
        Cx c = cur_.imaginary ? Cx(0.0, cur_.value) : Cx(cur_.value, 0.0);
        const bool first_real = !cur_.imaginary;
        advance();
        if (first_real && (cur_.kind == Token::Plus || cur_.kind == Token::Minus)) {
            Lexer save_lex = lex_;
            Token save_cur = cur_;
            const double s2 = cur_.kind == Token::Minus ? -1.0 : 1.0;
            advance();
            if (cur_.kind == Token::Number && cur_.imaginary) {
                c += Cx(0.0, s2 * cur_.value);
                advance();
            } else {
                lex_ = save_lex;  // it was a term separator after all
                cur_ = save_cur;
            }
        }
        return c;
    }
};

}  // namespace

std::string to_text(const CPoly& p) {
    if (p.is_zero()) return "0";
    // Leading term first.
    std::vector<std::pair<MultiIndex, Cx>> terms(p.terms().begin(), p.terms().end());
    std::string out;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [a, c] = *it;
        const bool first = out.empty();
        Cx printed = c;
        if (c.imag() == 0.0) {
            if (!first) out += c.real() < 0.0 ? " - " : " + ";
            else if (c.real() < 0.0) out += "-";
            printed = Cx(std::abs(c.real()), 0.0);
        } else if (!first) {
            out += " + ";
        }
        out += format_complex(printed);
        if (a.degree() > 0) {
            out += " *";
            for (int j = 0; j < a.dim(); ++j) {
                if (a[j] == 0) continue;
                out += " x" + std::to_string(j + 1);
                if (a[j] > 1) out += "^" + std::to_string(a[j]);
            }
        }
    }
    return out;
}

CPoly parse_poly(std::string_view text, int n_hint) {
    Parser parser(text);
    auto terms = parser.parse();
    int n = n_hint;
    for (const auto& [c, factors] : terms)
        for (const auto& [var, exp] : factors) n = std::max(n, var);
    if (n < 0) n = 0;
    CPoly p(n);
    for (const auto& [c, factors] : terms) {
        MultiIndex a(n);
        for (const auto& [var, exp] : factors) {
            if (n_hint >= 0 && var > n_hint)
                throw ParseError("variable x" + std::to_string(var) + " exceeds dimension " +
                                 std::to_string(n_hint));
            a[var - 1] += exp;
        }
        p.add_term(a, c);
    }
    return p;
}

}  // namespace momentcert
