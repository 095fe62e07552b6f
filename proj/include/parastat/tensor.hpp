#pragma once

#include <map>
#include <vector>

#include "parastat/element.hpp"

namespace parastat {

inline constexpr int max_tensor_rank = 3;

using WordTuple = std::vector<Word>;

struct WordTupleLess {
    bool operator()(const WordTuple& a, const WordTuple& b) const {
        DeglexLess less;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (less(a[i], b[i]))
                return true;
            if (less(b[i], a[i]))
                return false;
        }
        return a.size() < b.size();
    }
};

struct TensorTerm {
    WordTuple slots;
    Scalar coeff;

    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

using TensorAccumulator = std::map<WordTuple, Scalar, WordTupleLess>;

/// Rational combination of rank-r word tuples, r in {2, 3}.
class TensorElement {
public:
    TensorElement(AlphabetPtr alphabet, int rank) : alphabet_(std::move(alphabet)), rank_(rank) {
        if (rank < 2 || rank > max_tensor_rank)
            throw RankError("tensor rank must be 2 or 3, got " + std::to_string(rank));
    }

    static TensorElement unit(AlphabetPtr a, int rank) {
        TensorElement t(std::move(a), rank);
        t.terms_.push_back({WordTuple(static_cast<std::size_t>(rank)), Scalar(1)});
        return t;
    }

    /// x (x) y (x) ... expanded distributively.
    static TensorElement of(const std::vector<Element>& factors) {
        if (factors.empty())
            throw RankError("empty tensor");
        TensorElement t(factors.front().alphabet(), static_cast<int>(factors.size()));
        for (const auto& f : factors)
            Element::check_alphabets(factors.front(), f);
        TensorAccumulator acc;
        WordTuple slots(factors.size());
        expand(factors, 0, slots, Scalar(1), acc);
        return from_map(factors.front().alphabet(), t.rank_, acc);
    }
    static TensorElement of(const Element& x, const Element& y) { return of({x, y}); }
    static TensorElement of(const Element& x, const Element& y, const Element& z) { return of({x, y, z}); }

    static TensorElement from_map(AlphabetPtr a, int rank, const TensorAccumulator& acc) {
        TensorElement t(std::move(a), rank);
        t.terms_.reserve(acc.size());
        for (const auto& [slots, c] : acc) {
            if (static_cast<int>(slots.size()) != rank)
                throw RankError("tensor term rank differs from tensor rank");
            if (!parastat::is_zero(c))
                t.terms_.push_back({slots, c});
        }
        return t;
    }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    int rank() const { return rank_; }
    const std::vector<TensorTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Largest word length in any slot.
    int slot_degree() const {
        int d = 0;
        for (const auto& t : terms_)
            for (const auto& w : t.slots)
                d = std::max(d, w.degree());
        return d;
    }

    TensorElement operator-() const { return Scalar(-1) * *this; }
    friend TensorElement operator+(const TensorElement& s, const TensorElement& t) { return combine(s, t, Scalar(1)); }
    friend TensorElement operator-(const TensorElement& s, const TensorElement& t) { return combine(s, t, Scalar(-1)); }
    TensorElement& operator+=(const TensorElement& t) { return *this = *this + t; }

    friend TensorElement operator*(const Scalar& c, const TensorElement& t) {
        TensorElement r(t.alphabet_, t.rank_);
        if (parastat::is_zero(c))
            return r;
        r.terms_ = t.terms_;
        for (auto& term : r.terms_)
            term.coeff *= c;
        return r;
    }

    friend bool operator==(const TensorElement& s, const TensorElement& t) {
        return same_alphabet(s.alphabet_, t.alphabet_) && s.rank_ == t.rank_ && s.terms_ == t.terms_;
    }

    static void check_compatible(const TensorElement& s, const TensorElement& t) {
        if (!same_alphabet(s.alphabet_, t.alphabet_))
            throw AlphabetMismatch();
        if (s.rank_ != t.rank_)
            throw RankError("tensor rank mismatch: " + std::to_string(s.rank_) + " vs " + std::to_string(t.rank_));
    }

private:
    static void expand(const std::vector<Element>& factors, std::size_t k, WordTuple& slots, const Scalar& c,
                       TensorAccumulator& acc) {
        if (k == factors.size()) {
            acc[slots] += c;
            return;
        }
        for (const auto& term : factors[k].terms()) {
            slots[k] = term.word;
            expand(factors, k + 1, slots, c * term.coeff, acc);
        }
    }

    static TensorElement combine(const TensorElement& s, const TensorElement& t, const Scalar& sign) {
        check_compatible(s, t);
        TensorAccumulator acc;
        for (const auto& term : s.terms_)
            acc[term.slots] += term.coeff;
        for (const auto& term : t.terms_)
            acc[term.slots] += sign * term.coeff;
        return from_map(s.alphabet_, s.rank_, acc);
    }

    AlphabetPtr alphabet_;
    int rank_;
    std::vector<TensorTerm> terms_;
};

namespace detail {

template <class SignFn>
TensorElement slotwise_product(const TensorElement& s, const TensorElement& t, SignFn sign) {
    TensorElement::check_compatible(s, t);
    TensorAccumulator acc;
    WordTuple slots(static_cast<std::size_t>(s.rank()));
    for (const auto& a : s.terms())
        for (const auto& b : t.terms()) {
            for (std::size_t i = 0; i < slots.size(); ++i)
                slots[i] = a.slots[i] + b.slots[i];
            acc[slots] += sign(a.slots, b.slots) * a.coeff * b.coeff;
        }
    return TensorElement::from_map(s.alphabet(), s.rank(), acc);
}

} // namespace detail

/// (a (x) b)(c (x) d) = ac (x) bd, any rank.
inline TensorElement plain_tensor_multiply(const TensorElement& s, const TensorElement& t) {
    return detail::slotwise_product(s, t, [](const WordTuple&, const WordTuple&) { return Scalar(1); });
}

/// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd on rank-2 tensors.
inline TensorElement braided_tensor_multiply(const TensorElement& s, const TensorElement& t) {
    if (s.rank() != 2 || t.rank() != 2)
        throw RankError("braided tensor product is defined on rank-2 tensors");
    const Alphabet& alphabet = *s.alphabet();
    return detail::slotwise_product(s, t, [&](const WordTuple& a, const WordTuple& b) {
        return sign_power(as_int(parity_of(a[1], alphabet)) * as_int(parity_of(b[0], alphabet)));
    });
}

/// Symmetric braiding of Z2-graded spaces: v (x) w -> (-1)^{|v||w|} w (x) v.
inline TensorElement braiding(const Element& v, const Element& w) {
    Element::check_alphabets(v, w);
    const auto pv = v.parity();
    const auto pw = w.parity();
    if (!pv || !pw)
        throw HomogeneityError("braiding needs parity-homogeneous arguments");
    return sign_power(as_int(*pv) * as_int(*pw)) * TensorElement::of(w, v);
}

/// Braiding applied termwise to a rank-2 tensor whose terms are words.
inline TensorElement braiding(const TensorElement& t) {
    if (t.rank() != 2)
        throw RankError("braiding acts on rank-2 tensors");
    const Alphabet& alphabet = *t.alphabet();
    TensorAccumulator acc;
    for (const auto& term : t.terms()) {
        const int s = as_int(parity_of(term.slots[0], alphabet)) * as_int(parity_of(term.slots[1], alphabet));
        acc[{term.slots[1], term.slots[0]}] += sign_power(s) * term.coeff;
    }
    return TensorElement::from_map(t.alphabet(), 2, acc);
}

} // namespace parastat
