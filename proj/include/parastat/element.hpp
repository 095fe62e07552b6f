#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "parastat/error.hpp"
#include "parastat/scalar.hpp"
#include "parastat/word.hpp"

namespace parastat {

struct Term {
    Word word;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Free-algebra element: finite rational combination of words, kept in
/// deglex-ascending order with no zero coefficients.
class Element {
public:
    explicit Element(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static Element unit(AlphabetPtr a) { return scalar(std::move(a), Scalar(1)); }
    static Element scalar(AlphabetPtr a, const Scalar& c) { return word(std::move(a), Word{}, c); }
    static Element generator(AlphabetPtr a, int id) { return word(std::move(a), Word::letter(id)); }
    static Element generator(AlphabetPtr a, const Generator& g) {
        const int id = a->id_of(g);
        return generator(std::move(a), id);
    }
    static Element word(AlphabetPtr a, Word w, const Scalar& c = Scalar(1)) {
        Element e(std::move(a));
        if (!parastat::is_zero(c))
            e.terms_.push_back({std::move(w), c});
        return e;
    }

    /// Builds from an accumulated word map; zero entries are dropped.
    static Element from_map(AlphabetPtr a, const std::map<Word, Scalar, DeglexLess>& m) {
        Element e(std::move(a));
        e.terms_.reserve(m.size());
        for (const auto& [w, c] : m)
            if (!parastat::is_zero(c))
                e.terms_.push_back({w, c});
        return e;
    }
    /// Terms must already be deglex-ascending, distinct and nonzero.
    static Element from_sorted(AlphabetPtr a, std::vector<Term> terms) {
        Element e(std::move(a));
        e.terms_ = std::move(terms);
        return e;
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Filtration degree; the zero element has degree 0.
    int degree() const { return terms_.empty() ? 0 : terms_.back().word.degree(); }
    const Term& leading() const { return terms_.back(); }

    /// Parity when every word shares one parity; zero counts as even.
    std::optional<Parity> parity() const {
        std::optional<Parity> p;
        for (const auto& t : terms_) {
            const Parity q = parity_of(t.word, *alphabet_);
            if (p && *p != q)
                return std::nullopt;
            p = q;
        }
        return p.value_or(Parity::even);
    }

    Scalar coefficient(const Word& w) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                                   [](const Term& t, const Word& x) { return DeglexLess{}(t.word, x); });
        if (it != terms_.end() && it->word == w)
            return it->coeff;
        return Scalar(0);
    }

    Element operator-() const {
        Element r = *this;
        for (auto& t : r.terms_)
            t.coeff = -t.coeff;
        return r;
    }

    friend Element operator+(const Element& x, const Element& y) { return combine(x, y, Scalar(1)); }
    friend Element operator-(const Element& x, const Element& y) { return combine(x, y, Scalar(-1)); }
    Element& operator+=(const Element& y) { return *this = *this + y; }
    Element& operator-=(const Element& y) { return *this = *this - y; }

    friend Element operator*(const Scalar& c, const Element& x) {
        if (parastat::is_zero(c))
            return Element(x.alphabet_);
        Element r = x;
        for (auto& t : r.terms_)
            t.coeff *= c;
        return r;
    }

    /// Bilinear extension of concatenation.
    friend Element operator*(const Element& x, const Element& y) {
        check_alphabets(x, y);
        std::map<Word, Scalar, DeglexLess> acc;
        for (const auto& s : x.terms_)
            for (const auto& t : y.terms_) {
                Scalar& slot = acc[s.word + t.word];
                slot += s.coeff * t.coeff;
            }
        return from_map(x.alphabet_, acc);
    }
    Element& operator*=(const Element& y) { return *this = *this * y; }

    friend bool operator==(const Element& x, const Element& y) {
        return same_alphabet(x.alphabet_, y.alphabet_) && x.terms_ == y.terms_;
    }

    static void check_alphabets(const Element& x, const Element& y) {
        if (!same_alphabet(x.alphabet_, y.alphabet_))
            throw AlphabetMismatch();
    }

private:
    static Element combine(const Element& x, const Element& y, const Scalar& ysign) {
        check_alphabets(x, y);
        Element r(x.alphabet_);
        r.terms_.reserve(x.terms_.size() + y.terms_.size());
        auto i = x.terms_.begin();
        auto j = y.terms_.begin();
        DeglexLess less;
        while (i != x.terms_.end() || j != y.terms_.end()) {
            if (j == y.terms_.end() || (i != x.terms_.end() && less(i->word, j->word))) {
                r.terms_.push_back(*i++);
            } else if (i == x.terms_.end() || less(j->word, i->word)) {
                r.terms_.push_back({j->word, ysign * j->coeff});
                ++j;
            } else {
                Scalar c = i->coeff + ysign * j->coeff;
                if (!parastat::is_zero(c))
                    r.terms_.push_back({i->word, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    AlphabetPtr alphabet_;
    std::vector<Term> terms_;
};

inline Element multiply(const Element& x, const Element& y) { return x * y; }

/// [x,y] = xy - yx
inline Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

/// {x,y} = xy + yx
inline Element anticommutator(const Element& x, const Element& y) { return x * y + y * x; }

inline Element power(const Element& x, int exponent) {
    Element r = Element::unit(x.alphabet());
    for (int i = 0; i < exponent; ++i)
        r = r * x;
    return r;
}

} // namespace parastat
