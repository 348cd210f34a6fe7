#include "qdilog/expr.hpp"

#include <cctype>

#include "qdilog/errors.hpp"

namespace qdilog {

namespace {

class Parser {
  public:
    Parser(std::string_view text, int digits, const std::map<std::string, BigComplex>& vars)
        : s_(text), digits_(digits), vars_(vars) {}

    BigComplex parse() {
        BigComplex v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string& what) {
        throw DomainError("expression parse error at offset " + std::to_string(pos_) + ": " +
                          what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigComplex expr() {
        BigComplex v = term();
        for (;;) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    BigComplex term() {
        BigComplex v = unary();
        for (;;) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }

    BigComplex unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return primary();
    }

    BigComplex primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BigComplex v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    BigComplex number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
            ++pos_;
        }
        // optional exponent
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    ++pos_;
                }
            } else {
                pos_ = save;  // 'e' belonged to something else
            }
        }
        return BigComplex(BigReal::from_string(s_.substr(start, pos_ - start), digits_));
    }

    BigComplex ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                    s_[pos_] == '_')) {
            ++pos_;
        }
        std::string name(s_.substr(start, pos_ - start));
        if (name == "i") return BigComplex::i(digits_);
        if (name == "pi") return BigComplex(BigReal::pi(digits_));
        if (name == "exp") {
            if (!eat('(')) fail("expected '(' after exp");
            BigComplex v = expr();
            if (!eat(')')) fail("expected ')'");
            return exp(v);
        }
        auto it = vars_.find(name);
        if (it != vars_.end()) return it->second;
        fail("unknown identifier '" + name + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int digits_;
    const std::map<std::string, BigComplex>& vars_;
};

}  // namespace

BigComplex parse_complex_expr(std::string_view text, int digits,
                              const std::map<std::string, BigComplex>& vars) {
    return Parser(text, digits, vars).parse();
}

}  // namespace qdilog
