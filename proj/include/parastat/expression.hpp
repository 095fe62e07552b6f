#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "parastat/format.hpp"
#include "parastat/quotient.hpp"

namespace parastat {

class ParseError : public InvalidArgument {
public:
    ParseError(const std::string& what, int line, int column)
        : InvalidArgument(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Expression tree. Sums and differences are binary and left-associative;
/// products and tensors are n-ary. Scalar literals are nonnegative, a leading
/// minus is a negate node.
struct Expr {
    enum class Kind { scalar, generator, sum, difference, negate, product, power, commutator, anticommutator, tensor };

    Kind kind = Kind::scalar;
    Scalar value = 0;
    std::string token;
    unsigned exponent = 0;
    std::vector<Expr> children;

    static Expr number(Scalar v) {
        Expr e;
        e.value = std::move(v);
        return e;
    }
    static Expr gen(std::string tok) {
        Expr e;
        e.kind = Kind::generator;
        e.token = std::move(tok);
        return e;
    }
    static Expr node(Kind k, std::vector<Expr> kids) {
        Expr e;
        e.kind = k;
        e.children = std::move(kids);
        return e;
    }
    static Expr pow(Expr base, unsigned k) {
        Expr e = node(Kind::power, {std::move(base)});
        e.exponent = k;
        return e;
    }

    bool operator==(const Expr&) const = default;
};

namespace detail {

struct Token {
    enum class Type { number, generator, ox, symbol, end } type;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            if (pos_ >= src_.size()) {
                out.push_back({Token::Type::end, "", line_, col_});
                return out;
            }
            const int line = line_, col = col_;
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t end = pos_;
                while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end])))
                    ++end;
                out.push_back({Token::Type::number, take(end), line, col});
            } else if (c == 'o' && peek(1) == 'x') {
                out.push_back({Token::Type::ox, take(pos_ + 2), line, col});
            } else if (c == 'b' || c == 'f') {
                std::size_t end = pos_ + 1;
                while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end])))
                    ++end;
                if (end == pos_ + 1 || end >= src_.size() || (src_[end] != '+' && src_[end] != '-'))
                    throw ParseError("malformed generator token, expected e.g. " + std::string(1, c) + "1+", line, col);
                out.push_back({Token::Type::generator, take(end + 1), line, col});
            } else if (c == 'K') {
                if (peek(1) != '+' && peek(1) != '-')
                    throw ParseError("malformed generator token, expected K+ or K-", line, col);
                out.push_back({Token::Type::generator, take(pos_ + 2), line, col});
            } else if (c == 'g') {
                out.push_back({Token::Type::generator, take(pos_ + 1), line, col});
            } else if (std::string_view("+-*/^()[]{},").find(c) != std::string_view::npos) {
                out.push_back({Token::Type::symbol, take(pos_ + 1), line, col});
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
        }
    }

private:
    char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    std::string take(std::size_t end) {
        std::string s(src_.substr(pos_, end - pos_));
        col_ += static_cast<int>(end - pos_);
        pos_ = end;
        return s;
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const Alphabet* alphabet) : toks_(std::move(tokens)), alphabet_(alphabet) {}

    Expr parse_all() {
        Expr e = expr();
        if (cur().type != Token::Type::end)
            error("unexpected '" + cur().text + "'");
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    bool at_symbol(char c) const { return cur().type == Token::Type::symbol && cur().text[0] == c; }
    [[noreturn]] void error(const std::string& what) const { throw ParseError(what, cur().line, cur().column); }

    void expect(char c, const Token& opener) {
        if (!at_symbol(c)) {
            if (cur().type == Token::Type::end)
                throw ParseError(std::string("unbalanced '") + opener.text + "', missing '" + c + "'", opener.line,
                                 opener.column);
            error(std::string("expected '") + c + "'");
        }
        ++i_;
    }

    Expr expr() {
        Expr lhs;
        if (at_symbol('-')) {
            ++i_;
            lhs = Expr::node(Expr::Kind::negate, {term()});
        } else {
            lhs = term();
        }
        while (at_symbol('+') || at_symbol('-')) {
            const auto kind = at_symbol('+') ? Expr::Kind::sum : Expr::Kind::difference;
            ++i_;
            lhs = Expr::node(kind, {std::move(lhs), term()});
        }
        return lhs;
    }

    Expr term() {
        const Token start = cur();
        std::vector<Expr> slots{product()};
        while (cur().type == Token::Type::ox) {
            ++i_;
            slots.push_back(product());
        }
        if (slots.size() == 1)
            return std::move(slots.front());
        if (slots.size() > 3)
            throw ParseError("tensor of rank " + std::to_string(slots.size()) + " exceeds the maximum rank 3", start.line,
                             start.column);
        return Expr::node(Expr::Kind::tensor, std::move(slots));
    }

    Expr product() {
        std::vector<Expr> factors{power()};
        while (at_symbol('*')) {
            ++i_;
            factors.push_back(power());
        }
        if (factors.size() == 1)
            return std::move(factors.front());
        return Expr::node(Expr::Kind::product, std::move(factors));
    }

    Expr power() {
        Expr base = atom();
        while (at_symbol('^')) {
            ++i_;
            if (cur().type != Token::Type::number)
                error("expected a nonnegative integer exponent");
            base = Expr::pow(std::move(base), static_cast<unsigned>(std::stoul(cur().text)));
            ++i_;
        }
        return base;
    }

    Expr atom() {
        const Token t = cur();
        switch (t.type) {
        case Token::Type::number: {
            ++i_;
            Scalar v(mpz_class(t.text));
            if (at_symbol('/')) {
                ++i_;
                if (cur().type != Token::Type::number)
                    error("expected a denominator");
                const mpz_class den(cur().text);
                if (den == 0)
                    error("zero denominator");
                v /= Scalar(den);
                ++i_;
            }
            return Expr::number(v);
        }
        case Token::Type::generator:
            if (alphabet_ && !alphabet_->find(t.text))
                throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
            ++i_;
            return Expr::gen(t.text);
        case Token::Type::symbol:
            if (t.text == "(") {
                ++i_;
                Expr e = expr();
                expect(')', t);
                return e;
            }
            if (t.text == "[" || t.text == "{") {
                ++i_;
                Expr a = expr();
                expect(',', t);
                Expr b = expr();
                expect(t.text == "[" ? ']' : '}', t);
                return Expr::node(t.text == "[" ? Expr::Kind::commutator : Expr::Kind::anticommutator,
                                  {std::move(a), std::move(b)});
            }
            if (t.text == ")" || t.text == "]" || t.text == "}")
                error("unbalanced '" + t.text + "'");
            error("unexpected '" + t.text + "'");
        case Token::Type::ox:
            error("unexpected 'ox'");
        case Token::Type::end:
            error("unexpected end of input");
        }
        error("unexpected token");
    }

    std::vector<Token> toks_;
    const Alphabet* alphabet_;
    std::size_t i_ = 0;
};

inline bool is_additive(const Expr& e) {
    return e.kind == Expr::Kind::sum || e.kind == Expr::Kind::difference || e.kind == Expr::Kind::negate;
}

inline std::string print(const Expr& e);

inline std::string wrap_if(bool cond, const Expr& e) { return cond ? "(" + print(e) + ")" : print(e); }

inline std::string print(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::scalar:
        return to_string(e.value);
    case K::generator:
        return e.token;
    case K::sum:
    case K::difference:
        return print(e.children[0]) + (e.kind == K::sum ? " + " : " - ") + wrap_if(is_additive(e.children[1]), e.children[1]);
    case K::negate:
        return "-" + wrap_if(is_additive(e.children[0]), e.children[0]);
    case K::product: {
        std::string s;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            const Expr& c = e.children[i];
            s += (i ? "*" : "") + wrap_if(is_additive(c) || c.kind == K::product || c.kind == K::tensor, c);
        }
        return s;
    }
    case K::power: {
        const Expr& b = e.children[0];
        const bool atomic = b.kind == K::generator || b.kind == K::commutator || b.kind == K::anticommutator ||
                            b.kind == K::power || (b.kind == K::scalar && b.value.get_den() == 1);
        return wrap_if(!atomic, b) + "^" + std::to_string(e.exponent);
    }
    case K::commutator:
        return "[" + print(e.children[0]) + ", " + print(e.children[1]) + "]";
    case K::anticommutator:
        return "{" + print(e.children[0]) + ", " + print(e.children[1]) + "}";
    case K::tensor: {
        std::string s;
        for (std::size_t i = 0; i < e.children.size(); ++i) {
            const Expr& c = e.children[i];
            s += (i ? " ox " : "") + wrap_if(is_additive(c) || c.kind == K::tensor, c);
        }
        return s;
    }
    }
    return {};
}

} // namespace detail

/// Parses against an alphabet; generator tokens outside it are rejected.
inline Expr parse(std::string_view source, const Alphabet& alphabet) {
    if (source.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw ParseError("empty expression", 1, 1);
    return detail::Parser(detail::Lexer(source).run(), &alphabet).parse_all();
}

/// Parses without resolving generator tokens.
inline Expr parse_unresolved(std::string_view source) {
    if (source.find_first_not_of(" \t\r\n") == std::string_view::npos)
        throw ParseError("empty expression", 1, 1);
    return detail::Parser(detail::Lexer(source).run(), nullptr).parse_all();
}

inline std::string print(const Expr& e) { return detail::print(e); }

/// Free-algebra value of an expression: an Element or a tensor of rank 2 or 3.
using Value = std::variant<Element, TensorElement>;

namespace detail {

inline const Element& as_element(const Value& v, const char* where) {
    if (!std::holds_alternative<Element>(v))
        throw RankError(std::string("tensor operand not allowed in ") + where);
    return std::get<Element>(v);
}

inline Value lower(const Expr& e, const AlphabetPtr& a) {
    using K = Expr::Kind;
    switch (e.kind) {
    case K::scalar:
        return Element::scalar(a, e.value);
    case K::generator: {
        const auto id = a->find(e.token);
        if (!id)
            throw InvalidArgument("unknown generator '" + e.token + "'");
        return Element::generator(a, *id);
    }
    case K::sum:
    case K::difference: {
        Value x = lower(e.children[0], a);
        Value y = lower(e.children[1], a);
        const Scalar s = e.kind == K::sum ? 1 : -1;
        if (x.index() != y.index())
            throw RankError("cannot add a tensor and an algebra element");
        if (auto* ex = std::get_if<Element>(&x))
            return *ex + s * std::get<Element>(y);
        const auto& tx = std::get<TensorElement>(x);
        const auto& ty = std::get<TensorElement>(y);
        if (tx.rank() != ty.rank())
            throw RankError("cannot add tensors of rank " + std::to_string(tx.rank()) + " and " +
                            std::to_string(ty.rank()));
        return tx + s * ty;
    }
    case K::negate: {
        Value x = lower(e.children[0], a);
        if (auto* ex = std::get_if<Element>(&x))
            return -*ex;
        return Scalar(-1) * std::get<TensorElement>(x);
    }
    case K::product: {
        Value acc = lower(e.children[0], a);
        for (std::size_t i = 1; i < e.children.size(); ++i) {
            Value next = lower(e.children[i], a);
            auto* l = std::get_if<Element>(&acc);
            auto* r = std::get_if<Element>(&next);
            if (l && r) {
                acc = *l * *r;
            } else if (l && l->degree() == 0) {
                acc = l->coefficient(Word()) * std::get<TensorElement>(next);
            } else if (r && r->degree() == 0) {
                acc = r->coefficient(Word()) * std::get<TensorElement>(acc);
            } else {
                throw RankError("tensors can only be multiplied by scalars");
            }
        }
        return acc;
    }
    case K::power:
        return parastat::power(as_element(lower(e.children[0], a), "a power"), e.exponent);
    case K::commutator:
        return parastat::commutator(as_element(lower(e.children[0], a), "a bracket"),
                                    as_element(lower(e.children[1], a), "a bracket"));
    case K::anticommutator:
        return parastat::anticommutator(as_element(lower(e.children[0], a), "a bracket"),
                                        as_element(lower(e.children[1], a), "a bracket"));
    case K::tensor: {
        std::vector<Element> slots;
        for (const auto& c : e.children)
            slots.push_back(as_element(lower(c, a), "a tensor slot"));
        return TensorElement::of(slots);
    }
    }
    throw InvalidArgument("bad expression node");
}

} // namespace detail

/// Free-algebra value, no reduction.
inline Value lower(const Expr& e, const AlphabetPtr& alphabet) { return detail::lower(e, alphabet); }

inline int value_degree(const Value& v) {
    if (auto* x = std::get_if<Element>(&v))
        return x->degree();
    const auto& t = std::get<TensorElement>(v);
    int d = 0;
    for (const auto& term : t.terms())
        for (const auto& w : term.slots)
            d = std::max(d, w.degree());
    return d;
}

/// Lowers and reduces modulo the ideal at the quotient's degree.
inline Value evaluate(const Expr& e, const Quotient& q) {
    Value v = lower(e, q.alphabet());
    const int need = value_degree(v);
    if (need > q.degree())
        throw TruncationError(need, q.degree());
    if (auto* x = std::get_if<Element>(&v))
        return q.normal_form(*x);
    return q.tensor_normal_form(std::get<TensorElement>(v));
}

inline std::string to_string(const Value& v) {
    if (auto* x = std::get_if<Element>(&v))
        return to_string(*x);
    return to_string(std::get<TensorElement>(v));
}

} // namespace parastat
