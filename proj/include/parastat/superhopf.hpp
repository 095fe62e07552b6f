#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "parastat/quotient.hpp"
#include "parastat/report.hpp"

namespace parastat {

/// braided: Delta is a homomorphism into the Koszul-signed tensor square and
/// S a twisted antihomomorphism. plain: ordinary Hopf algebra extension.
enum class Flavor { braided, plain };

inline std::string to_string(Flavor f) { return f == Flavor::braided ? "braided" : "plain"; }

/// Coproduct, counit and antipode images of each generator.
class StructureMaps {
public:
    StructureMaps(PresentationPtr p, Flavor flavor)
        : presentation_(std::move(p)), flavor_(flavor), coproduct_(alphabet_size()), counit_(alphabet_size()),
          antipode_(alphabet_size()) {}

    const Presentation& presentation() const { return *presentation_; }
    const PresentationPtr& presentation_ptr() const { return presentation_; }
    const AlphabetPtr& alphabet() const { return presentation_->alphabet(); }
    Flavor flavor() const { return flavor_; }

    StructureMaps& set_coproduct(int id, TensorElement image) {
        if (image.rank() != 2)
            throw RankError("coproduct images are rank-2 tensors");
        if (!same_alphabet(image.alphabet(), alphabet()))
            throw AlphabetMismatch();
        coproduct_.at(static_cast<std::size_t>(id)) = std::move(image);
        return *this;
    }
    StructureMaps& set_counit(int id, Scalar value) {
        counit_.at(static_cast<std::size_t>(id)) = std::move(value);
        return *this;
    }
    StructureMaps& set_antipode(int id, Element image) {
        if (!same_alphabet(image.alphabet(), alphabet()))
            throw AlphabetMismatch();
        antipode_.at(static_cast<std::size_t>(id)) = std::move(image);
        return *this;
    }
    StructureMaps& set_images(int id, TensorElement delta, Scalar eps, Element s) {
        set_coproduct(id, std::move(delta));
        set_counit(id, std::move(eps));
        return set_antipode(id, std::move(s));
    }

    const TensorElement& coproduct(int id) const { return require(coproduct_, id, "coproduct"); }
    const Scalar& counit(int id) const { return require(counit_, id, "counit"); }
    const Element& antipode(int id) const { return require(antipode_, id, "antipode"); }

    bool complete() const {
        for (std::size_t i = 0; i < alphabet_size(); ++i)
            if (!coproduct_[i] || !counit_[i] || !antipode_[i])
                return false;
        return true;
    }

private:
    std::size_t alphabet_size() const { return presentation_->alphabet()->size(); }

    template <class T>
    const T& require(const std::vector<std::optional<T>>& images, int id, const char* what) const {
        const auto& slot = images.at(static_cast<std::size_t>(id));
        if (!slot)
            throw IncompleteMapsError(std::string("no ") + what + " image for generator " + (*alphabet())[id].token());
        return *slot;
    }

    PresentationPtr presentation_;
    Flavor flavor_;
    std::vector<std::optional<TensorElement>> coproduct_;
    std::vector<std::optional<Scalar>> counit_;
    std::vector<std::optional<Element>> antipode_;
};

namespace detail {

inline TensorElement tensor_product(const TensorElement& s, const TensorElement& t, Flavor f) {
    return f == Flavor::braided ? braided_tensor_multiply(s, t) : plain_tensor_multiply(s, t);
}

inline TensorElement coproduct_of_word(const Word& w, const StructureMaps& m) {
    TensorElement acc = TensorElement::unit(m.alphabet(), 2);
    for (std::size_t i = 0; i < w.size(); ++i)
        acc = tensor_product(acc, m.coproduct(w[i]), m.flavor());
    return acc;
}

// Reversal sign of the twisted antihomomorphism: one factor -1 per pair of
// odd letters.
inline int antipode_sign_exponent(const Word& w, const StructureMaps& m) {
    if (m.flavor() == Flavor::plain)
        return 0;
    const int odd = odd_letter_count(w, *m.alphabet());
    return odd * (odd - 1) / 2;
}

} // namespace detail

/// Multiplicative extension of the generator images (braided or plain).
inline TensorElement apply_coproduct(const Element& x, const StructureMaps& m) {
    if (!same_alphabet(x.alphabet(), m.alphabet()))
        throw AlphabetMismatch();
    TensorElement out(m.alphabet(), 2);
    for (const auto& t : x.terms())
        out += t.coeff * detail::coproduct_of_word(t.word, m);
    return out;
}

inline Scalar apply_counit(const Element& x, const StructureMaps& m) {
    if (!same_alphabet(x.alphabet(), m.alphabet()))
        throw AlphabetMismatch();
    Scalar total(0);
    for (const auto& t : x.terms()) {
        Scalar c = t.coeff;
        for (std::size_t i = 0; i < t.word.size() && !is_zero(c); ++i)
            c *= m.counit(t.word[i]);
        total += c;
    }
    return total;
}

/// S(x1...xk) = (-1)^{sum_{i<j}|xi||xj|} S(xk)...S(x1) for the braided
/// flavor; no sign for the plain flavor.
inline Element apply_antipode(const Element& x, const StructureMaps& m) {
    if (!same_alphabet(x.alphabet(), m.alphabet()))
        throw AlphabetMismatch();
    Element out(m.alphabet());
    for (const auto& t : x.terms()) {
        Element img = Element::scalar(m.alphabet(), t.coeff * sign_power(detail::antipode_sign_exponent(t.word, m)));
        for (std::size_t i = t.word.size(); i-- > 0;)
            img = img * m.antipode(t.word[i]);
        out += img;
    }
    return out;
}

/// Antipode evaluated with a normal form after every factor, so images stay
/// inside the truncation when the quotient lowers degrees.
inline Element apply_antipode_reduced(const Element& x, const StructureMaps& m, const Quotient& q) {
    Element out(m.alphabet());
    for (const auto& t : x.terms()) {
        Element img = Element::scalar(m.alphabet(), t.coeff * sign_power(detail::antipode_sign_exponent(t.word, m)));
        for (std::size_t i = t.word.size(); i-- > 0;)
            img = q.normal_form(img * q.normal_form(m.antipode(t.word[i])));
        out += img;
    }
    return q.normal_form(out);
}

/// Delta applied to one slot of a rank-2 tensor, giving rank 3. The maps are
/// even, so no Koszul sign appears.
inline TensorElement coproduct_on_slot(const TensorElement& t, int slot, const StructureMaps& m) {
    if (t.rank() != 2)
        throw RankError("coproduct_on_slot expects a rank-2 tensor");
    TensorAccumulator acc;
    for (const auto& term : t.terms()) {
        const TensorElement d = detail::coproduct_of_word(term.slots[static_cast<std::size_t>(slot)], m);
        for (const auto& dt : d.terms()) {
            WordTuple tuple = slot == 0 ? WordTuple{dt.slots[0], dt.slots[1], term.slots[1]}
                                        : WordTuple{term.slots[0], dt.slots[0], dt.slots[1]};
            acc[tuple] += term.coeff * dt.coeff;
        }
    }
    return TensorElement::from_map(t.alphabet(), 3, acc);
}

/// Counit applied to one slot of a rank-2 tensor.
inline Element counit_on_slot(const TensorElement& t, int slot, const StructureMaps& m) {
    Element out(t.alphabet());
    const auto other = static_cast<std::size_t>(1 - slot);
    for (const auto& term : t.terms()) {
        const Scalar e = apply_counit(Element::word(t.alphabet(), term.slots[static_cast<std::size_t>(slot)]), m);
        out += Element::word(t.alphabet(), term.slots[other], e * term.coeff);
    }
    return out;
}

struct SampleOptions {
    std::uint64_t seed = 0x5EED;
    int count = 100;
    int max_degree = 3;
};

namespace detail {

// Platform-independent draws: mt19937_64 output is fully specified.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

private:
    std::mt19937_64 rng_;
};

} // namespace detail

/// Seeded random elements: 1 to 3 terms, each a uniformly drawn word of
/// length <= max_degree with coefficient in {-2,-1,1,2}.
inline std::vector<Element> random_elements(const AlphabetPtr& alphabet, const SampleOptions& opt) {
    detail::Draw draw(opt.seed);
    const std::size_t letters = alphabet->size();
    const std::uint64_t total = detail::word_count_up_to(letters, opt.max_degree);
    static constexpr int coefficients[] = {-2, -1, 1, 2};
    std::vector<Element> out;
    for (int s = 0; s < opt.count; ++s) {
        Element x(alphabet);
        const auto terms = 1 + draw.below(3);
        for (std::uint64_t k = 0; k < terms; ++k) {
            std::uint64_t index = draw.below(total);
            // index -> word: walk the length layers of the deglex enumeration
            std::uint64_t layer = 1;
            int length = 0;
            while (index >= layer) {
                index -= layer;
                layer *= letters;
                ++length;
            }
            std::string letters_of(static_cast<std::size_t>(length), '\0');
            for (int i = length - 1; i >= 0; --i) {
                letters_of[static_cast<std::size_t>(i)] = static_cast<char>(index % letters);
                index /= letters;
            }
            const int c = coefficients[draw.below(4)];
            x += Element::word(alphabet, Word(std::move(letters_of)), Scalar(c));
        }
        out.push_back(std::move(x));
    }
    return out;
}

struct HopfCheckOptions {
    SampleOptions samples;
    /// Every word up to this length is checked exhaustively.
    int exhaustive_degree = 2;
    /// Highest degree an overflowing instance may be re-evaluated at.
    int escalation_cap = 12;
};

namespace axiom {
inline const std::string coproduct_well_defined = "coproduct-well-defined";
inline const std::string coassociativity = "coassociativity";
inline const std::string counit = "counit";
inline const std::string antipode = "antipode";
inline const std::string antipode_well_defined = "antipode-well-defined";
} // namespace axiom

namespace detail {

inline Element antipode_checked(const Element& x, const StructureMaps& m, const Quotient& q) {
    Element s = apply_antipode(x, m);
    if (s.degree() <= q.degree())
        return q.normal_form(s);
    return apply_antipode_reduced(x, m, q);
}

// m o (S (x) id) o Delta  or  m o (id (x) S) o Delta
inline Element antipode_convolution(const TensorElement& delta, int antipode_slot, const StructureMaps& m,
                                    const Quotient& q) {
    Element out(m.alphabet());
    for (const auto& term : delta.terms()) {
        const Element a = Element::word(m.alphabet(), term.slots[0]);
        const Element b = Element::word(m.alphabet(), term.slots[1]);
        const Element prod = antipode_slot == 0 ? antipode_checked(a, m, q) * q.normal_form(b)
                                                : q.normal_form(a) * antipode_checked(b, m, q);
        out += term.coeff * q.normal_form(prod);
    }
    return q.normal_form(out);
}

inline std::string describe(const Element& input, const std::string& residual) {
    return "x = " + to_string(input) + ", residual " + residual;
}

} // namespace detail

namespace detail {

// Runs one check instance at degree D; when the evaluation leaves the
// truncation it is repeated at the degree the error asks for, up to the cap.
template <class F>
void run_instance(CheckResult& result, const Quotient& q, int cap, F&& body) {
    ++result.instances;
    try {
        body(q);
        return;
    } catch (const TruncationError& e) {
        int degree = e.required();
        while (degree <= cap) {
            try {
                body(Quotient(q.presentation_ptr(), degree, q.engine()));
                ++result.escalated;
                return;
            } catch (const TruncationError& again) {
                degree = std::max(degree + 1, again.required());
            }
        }
    }
    --result.instances;
    ++result.overflows;
}

} // namespace detail

/// Hopf axiom families, each tested modulo the ideal:
///   coproduct-well-defined  Delta(r) == 0 for every relation r
///   coassociativity         (Delta (x) id)Delta == (id (x) Delta)Delta
///   counit                  (eps (x) id)Delta == id == (id (x) eps)Delta, eps(r) == 0
///   antipode                S(x1)x2 == eps(x)1 == x1 S(x2)
///   antipode-well-defined   S(r) == 0
/// Instances are evaluated at the quotient's degree D. An instance whose
/// intermediate products leave degree D is redone at the smallest degree that
/// holds them (counted as escalated); past escalation_cap it is an overflow.
inline Report check_hopf_axioms(const Quotient& q, const StructureMaps& m, const HopfCheckOptions& opt = {}) {
    if (!same_alphabet(q.alphabet(), m.alphabet()))
        throw AlphabetMismatch();
    if (!m.complete())
        throw IncompleteMapsError("structure maps miss generator images");

    std::vector<Element> inputs;
    for (const auto& w : detail::words_up_to(q.alphabet()->size(), opt.exhaustive_degree))
        inputs.push_back(Element::word(q.alphabet(), w));
    for (auto& x : random_elements(q.alphabet(), opt.samples))
        inputs.push_back(std::move(x));

    CheckResult well{axiom::coproduct_well_defined};
    CheckResult coassoc{axiom::coassociativity};
    CheckResult counit{axiom::counit};
    CheckResult antipode{axiom::antipode};
    CheckResult s_well{axiom::antipode_well_defined};
    const int cap = std::max(q.degree(), opt.escalation_cap);

    for (const auto& r : q.presentation().relations()) {
        detail::run_instance(well, q, cap, [&](const Quotient& qq) {
            const TensorElement d = qq.tensor_normal_form(apply_coproduct(r, m));
            if (!d.is_zero())
                well.fail(detail::describe(r, to_string(d)));
        });
        ++counit.instances;
        if (const Scalar e = apply_counit(r, m); !is_zero(e))
            counit.fail("eps(" + to_string(r) + ") = " + to_string(e));
        detail::run_instance(s_well, q, cap, [&](const Quotient& qq) {
            const Element s = detail::antipode_checked(r, m, qq);
            if (!s.is_zero())
                s_well.fail(detail::describe(r, to_string(s)));
        });
    }

    for (const auto& x : inputs) {
        const TensorElement delta = apply_coproduct(x, m);
        detail::run_instance(coassoc, q, cap, [&](const Quotient& qq) {
            const TensorElement diff = coproduct_on_slot(delta, 0, m) - coproduct_on_slot(delta, 1, m);
            const TensorElement r = qq.tensor_normal_form(diff);
            if (!r.is_zero())
                coassoc.fail(detail::describe(x, to_string(r)));
        });
        detail::run_instance(counit, q, cap, [&](const Quotient& qq) {
            const Element left = qq.normal_form(counit_on_slot(delta, 0, m) - x);
            const Element right = qq.normal_form(counit_on_slot(delta, 1, m) - x);
            if (!left.is_zero())
                counit.fail(detail::describe(x, "(eps(x)id)Delta - id = " + to_string(left)));
            else if (!right.is_zero())
                counit.fail(detail::describe(x, "(id(x)eps)Delta - id = " + to_string(right)));
        });
        detail::run_instance(antipode, q, cap, [&](const Quotient& qq) {
            const Element unit_part = Element::scalar(m.alphabet(), apply_counit(x, m));
            const Element left = qq.normal_form(detail::antipode_convolution(delta, 0, m, qq) - unit_part);
            const Element right = qq.normal_form(detail::antipode_convolution(delta, 1, m, qq) - unit_part);
            if (!left.is_zero())
                antipode.fail(detail::describe(x, "S(x1)x2 - eps(x)1 = " + to_string(left)));
            else if (!right.is_zero())
                antipode.fail(detail::describe(x, "x1S(x2) - eps(x)1 = " + to_string(right)));
        });
    }

    Report report;
    report.checks = {well, coassoc, counit, antipode, s_well};
    return report;
}

} // namespace parastat
