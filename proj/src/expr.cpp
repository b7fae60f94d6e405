#include "hypflex/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>

namespace hypflex {
namespace {

using UnaryFn = double (*)(double);

const std::map<std::string, UnaryFn, std::less<>>& functions()
{
    static const std::map<std::string, UnaryFn, std::less<>> table{
        {"sqrt", [](double x) { return std::sqrt(x); }},   {"exp", [](double x) { return std::exp(x); }},
        {"log", [](double x) { return std::log(x); }},     {"sin", [](double x) { return std::sin(x); }},
        {"cos", [](double x) { return std::cos(x); }},     {"tan", [](double x) { return std::tan(x); }},
        {"asin", [](double x) { return std::asin(x); }},   {"acos", [](double x) { return std::acos(x); }},
        {"atan", [](double x) { return std::atan(x); }},   {"sinh", [](double x) { return std::sinh(x); }},
        {"cosh", [](double x) { return std::cosh(x); }},   {"tanh", [](double x) { return std::tanh(x); }},
        {"asinh", [](double x) { return std::asinh(x); }}, {"acosh", [](double x) { return std::acosh(x); }},
        {"atanh", [](double x) { return std::atanh(x); }},
    };
    return table;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    double parse()
    {
        const double v = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    double expr()
    {
        double v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    double term()
    {
        double v = unary();
        for (;;) {
            if (accept('*'))
                v *= unary();
            else if (accept('/'))
                v /= unary();
            else
                return v;
        }
    }

    double unary()
    {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    double power()
    {
        const double base = primary();
        if (accept('^')) return std::pow(base, unary());
        return base;
    }

    double primary()
    {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            const double v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return named();
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    double number()
    {
        double v = 0.0;
        const auto* first = s_.data() + pos_;
        const auto [ptr, ec] = std::from_chars(first, s_.data() + s_.size(), v);
        if (ec != std::errc()) throw ParseError("malformed number", pos_);
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    double named()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        if (name == "pi") return std::numbers::pi;
        if (name == "e") return std::numbers::e;
        const auto& fns = functions();
        const auto it = fns.find(name);
        if (it == fns.end()) throw ParseError("unknown name '" + std::string(name) + "'", start);
        expect('(');
        const double arg = expr();
        expect(')');
        return it->second(arg);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

double evaluate_expression(std::string_view text)
{
    const double v = Parser(text).parse();
    if (!std::isfinite(v)) throw ParseError("expression '" + std::string(text) + "' is not finite", 0);
    return v;
}

}  // namespace hypflex
