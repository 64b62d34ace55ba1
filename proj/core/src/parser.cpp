#include <cctype>
#include <charconv>
#include <cmath>

#include "tpb/symbol.hpp"

namespace tpb {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SymbolExpr parse() {
        SymbolExpr e = symbol();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SymbolError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw SymbolError(msg, at); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool starts_number() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    // Unsigned float literal; returns false without consuming on mismatch.
    bool try_float(double& out) {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t p = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p, ++n;
            return n;
        };
        std::size_t n = digits();
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            n += digits();
        }
        if (n == 0) return false;
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                p = q;
                digits();
            }
        }
        auto res = std::from_chars(text_.data() + start, text_.data() + p, out);
        if (res.ec != std::errc{}) fail_at("malformed number", start);
        pos_ = p;
        return true;
    }

    double signed_float() {
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        double x = 0;
        if (!try_float(x)) fail("expected a number");
        return neg ? -x : x;
    }

    // float, "float i", or "float (+|-) float i"
    cplx complex_literal(bool allow_sign) {
        bool neg = false;
        if (allow_sign) {
            if (accept('-')) neg = true;
            else accept('+');
        }
        double re = 0;
        if (!try_float(re)) fail("expected a number");
        if (neg) re = -re;
        if (accept('i')) return {0.0, re};

        const std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            double im = 0;
            if (try_float(im) && accept('i')) return {re, minus ? -im : im};
        }
        pos_ = save;
        return {re, 0.0};
    }

    SymbolExpr symbol() {
        SymbolExpr e = term();
        while (true) {
            if (accept('+')) {
                e = e + term();
            } else if (accept('-')) {
                e = e - term();
            } else {
                break;
            }
        }
        return e;
    }

    SymbolExpr term() {
        bool neg = false;
        SymbolExpr e;
        if (accept('-')) {
            // "-1+2i" is one literal, not the negation of 1+2i.
            if (starts_number()) {
                --pos_;
                while (text_[pos_] != '-') --pos_;
                e = factor();
            } else {
                neg = true;
                e = factor();
            }
        } else {
            e = factor();
        }
        while (accept('*')) e = e * factor();
        return neg ? -e : e;
    }

    SymbolExpr factor() {
        skip_ws();
        const std::size_t start = pos_;
        SymbolExpr base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t exp_pos = pos_;
        const double p = signed_float();
        if (!std::isfinite(p)) fail_at("non-finite exponent", exp_pos);
        try {
            return base.pow(p);
        } catch (const DomainError& e) {
            fail_at(e.what(), start);
        }
    }

    SymbolExpr atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const std::size_t start = pos_;
        if (starts_number() || text_[pos_] == '-') return SymbolExpr::constant(complex_literal(true));
        if (text_.substr(pos_, 9) == "blaschke(") {
            pos_ += 9;
            std::vector<cplx> zeros;
            do {
                skip_ws();
                const std::size_t at = pos_;
                const cplx a = complex_literal(true);
                if (!(std::abs(a) < 1.0)) fail_at("Blaschke zero with modulus >= 1", at);
                zeros.push_back(a);
            } while (accept(','));
            expect(')');
            return SymbolExpr::blaschke(std::move(zeros));
        }
        if (text_[pos_] == 'z') {
            ++pos_;
            return SymbolExpr::z_power(1);
        }
        if (text_[pos_] == 'i') {
            ++pos_;
            return SymbolExpr::constant({0.0, 1.0});
        }
        if (accept('(')) {
            SymbolExpr inner = symbol();
            expect(')');
            return inner;
        }
        fail_at("unexpected character '" + std::string(1, text_[start]) + "'", start);
    }
};

}  // namespace

SymbolExpr parse_symbol(std::string_view text) {
    Parser p(text);
    try {
        return p.parse();
    } catch (const DomainError& e) {
        throw SymbolError(e.what(), 0);
    }
}

}  // namespace tpb
