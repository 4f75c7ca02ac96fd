#pragma once

// Recursive-descent parser for the polynomial text grammar:
//
//   poly   := term (('+' | '-') term)*
//   term   := ['+' | '-'] factor ('*' factor)*
//   factor := integer ['/' integer] | 'x' index ['^' integer]
//
// Whitespace between tokens is ignored. Like terms are merged.

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "polynomial.hpp"
#include "rational.hpp"

namespace zsr {

struct ParseDiagnostic {
    std::size_t offset = 0; ///< byte offset into the source
    std::size_t line = 1;
    std::size_t column = 1;
    std::string message;
    std::string fragment; ///< source text starting at the offset (truncated)
};

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, ParseDiagnostic diag)
        : Error(kind, diag.message + " at line " + std::to_string(diag.line) + ", column " +
                          std::to_string(diag.column) + " near '" + diag.fragment + "'"),
          diag_(std::move(diag)) {}
    const ParseDiagnostic& diagnostic() const noexcept { return diag_; }

private:
    ParseDiagnostic diag_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view src, std::size_t n) : src_(src), n_(n) {}

    Polynomial parse() {
        Polynomial result(n_);
        skip_ws();
        if (at_end()) fail(ErrorKind::SyntaxError, "empty polynomial");
        result += term();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = src_[pos_];
            if (c != '+' && c != '-') fail(ErrorKind::SyntaxError, "expected '+' or '-'");
            ++pos_;
            Polynomial t = term();
            if (c == '-') t = -t;
            result += t;
        }
        return result;
    }

private:
    Polynomial term() {
        skip_ws();
        Rational coef(1);
        while (!at_end() && (src_[pos_] == '+' || src_[pos_] == '-')) {
            if (src_[pos_] == '-') coef = -coef;
            ++pos_;
            skip_ws();
        }
        MultiIndex alpha(n_);
        factor(coef, alpha);
        for (;;) {
            skip_ws();
            if (at_end() || src_[pos_] != '*') break;
            ++pos_;
            skip_ws();
            factor(coef, alpha);
        }
        return Polynomial::monomial(alpha, coef);
    }

    void factor(Rational& coef, MultiIndex& alpha) {
        if (at_end()) fail(ErrorKind::SyntaxError, "unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            std::string num = digits();
            skip_ws();
            if (!at_end() && src_[pos_] == '/') {
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    fail(ErrorKind::SyntaxError, "expected denominator");
                std::string den = digits();
                if (mpz_class(den) == 0) fail_at(start, ErrorKind::SyntaxError, "zero denominator");
                num += "/" + den;
            }
            coef *= parse_rational(num);
            return;
        }
        if (c == 'x') {
            const std::size_t start = pos_;
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail(ErrorKind::SyntaxError, "expected variable index after 'x'");
            const std::string idx = digits();
            const std::size_t var = idx.size() > 9 ? 0 : std::stoul(idx);
            if (var < 1 || var > n_)
                fail_at(start, ErrorKind::VariableOutOfRange,
                        "variable x" + idx + " outside x1..x" + std::to_string(n_));
            std::uint32_t power = 1;
            skip_ws();
            if (!at_end() && src_[pos_] == '^') {
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    fail(ErrorKind::SyntaxError, "expected positive integer exponent");
                const std::size_t estart = pos_;
                const std::string e = digits();
                if (e.size() > 6 || std::stoul(e) == 0)
                    fail_at(estart, ErrorKind::SyntaxError, "exponent must be a positive integer below 10^6");
                power = static_cast<std::uint32_t>(std::stoul(e));
            }
            alpha[var - 1] += power;
            return;
        }
        fail(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'");
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= src_.size(); }

    [[noreturn]] void fail(ErrorKind kind, const std::string& msg) { fail_at(pos_, kind, msg); }
    [[noreturn]] void fail_at(std::size_t at, ErrorKind kind, const std::string& msg) {
        ParseDiagnostic d;
        d.offset = src_.empty() ? 0 : std::min(at, src_.size() - 1);
        for (std::size_t i = 0; i < d.offset; ++i) {
            if (src_[i] == '\n') {
                ++d.line;
                d.column = 1;
            } else {
                ++d.column;
            }
        }
        d.message = msg;
        d.fragment = std::string(src_.substr(d.offset, 16));
        throw ParseError(kind, std::move(d));
    }

    std::string_view src_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a polynomial in variables x1..xn into canonical form.
inline Polynomial parse_polynomial(std::string_view src, std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidDimension, "polynomials need at least one variable");
    return detail::PolyParser(src, n).parse();
}

} // namespace zsr
