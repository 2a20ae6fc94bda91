#include "slfactor/parse.hpp"

#include <cctype>

namespace slf {

namespace {

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    RingPtr ring_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p = p + term();
            else if (eat('-')) p = p - term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        Poly base = primary();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error("expected exponent", pos_);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                if (e > 100000) throw parse_error("exponent too large", pos_);
                ++pos_;
            }
            return base.pow(e);
        }
        return base;
    }

    Poly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw parse_error("expected number, variable, or '('", pos_);
    }

    Poly number() {
        mpz_class num = integer();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error("expected denominator", pos_);
            mpz_class den = integer();
            if (den == 0) throw parse_error("zero denominator", pos_);
            return Poly::constant(ring_, Scalar::from_mpq(ring_->field, mpq_class(num, den)));
        }
        return Poly::constant(ring_, Scalar::from_mpq(ring_->field, mpq_class(num)));
    }

    mpz_class integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits.push_back(s_[pos_]);
            ++pos_;
        }
        return mpz_class(digits, 10);
    }

    Poly identifier() {
        std::size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            name.push_back(s_[pos_]);
            ++pos_;
        }
        int idx = ring_->index_of(name);
        if (idx < 0) throw parse_error("unknown variable '" + name + "'", start);
        return Poly::variable(ring_, static_cast<std::size_t>(idx));
    }
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).parse();
}

} // namespace slf
