#pragma once

#include <ostream>
#include <string>

#include "parastat/tensor.hpp"

namespace parastat {

/// "b1+*b1-", or "1" for the empty word.
inline std::string to_string(const Word& w, const Alphabet& alphabet) {
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += '*';
        s += alphabet[w[i]].token();
    }
    return s;
}

namespace detail {

// Coefficient folded into the leading factor; the sign is returned separately.
inline std::string unsigned_monomial(const Scalar& c, const std::string& body, bool body_is_unit) {
    const Scalar a = abs(c);
    if (a == 1)
        return body;
    if (body_is_unit)
        return to_string(a);
    return to_string(a) + "*" + body;
}

inline void append_signed(std::string& out, bool first, const Scalar& c, const std::string& text) {
    if (first)
        out += sgn(c) < 0 ? "-" + text : text;
    else
        out += (sgn(c) < 0 ? " - " : " + ") + text;
}

} // namespace detail

/// Deglex-ascending terms, reduced-fraction coefficients, signs folded in.
inline std::string to_string(const Element& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        const std::string body = to_string(t.word, *x.alphabet());
        detail::append_signed(out, first, t.coeff, detail::unsigned_monomial(t.coeff, body, t.word.empty()));
        first = false;
    }
    return out;
}

/// Terms printed as "c*w0 ox w1 [ox w2]".
inline std::string to_string(const TensorElement& t) {
    if (t.is_zero())
        return "0";
    std::string out;
    bool first = true;
    const Alphabet& alphabet = *t.alphabet();
    for (const auto& term : t.terms()) {
        std::string text =
            detail::unsigned_monomial(term.coeff, to_string(term.slots[0], alphabet), term.slots[0].empty());
        for (std::size_t i = 1; i < term.slots.size(); ++i)
            text += " ox " + to_string(term.slots[i], alphabet);
        detail::append_signed(out, first, term.coeff, text);
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const TensorElement& t) { return os << to_string(t); }

} // namespace parastat
