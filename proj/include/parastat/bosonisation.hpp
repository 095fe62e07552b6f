#pragma once

#include <array>
#include <string>
#include <vector>

#include "parastat/presets.hpp"

namespace parastat {

/// Element a*1 + c*g of the group algebra CZ2, indexed by the exponent of g.
using HostElement = std::array<Scalar, 2>;

inline HostElement host_basis(int exponent) {
    HostElement h{Scalar(0), Scalar(0)};
    h[static_cast<std::size_t>(exponent & 1)] = 1;
    return h;
}

inline HostElement host_multiply(const HostElement& x, const HostElement& y) {
    HostElement out{Scalar(0), Scalar(0)};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            out[static_cast<std::size_t>((a + b) & 1)] += x[static_cast<std::size_t>(a)] * y[static_cast<std::size_t>(b)];
    return out;
}

/// One term c * g^left (x) g^right of a host tensor.
struct HostPair {
    int left;
    int right;
    Scalar coeff;
};

/// Quasitriangular structure on CZ2: basis {1, g}, g^2 = 1, g group-like,
/// R_g = 1/2 (1(x)1 + 1(x)g + g(x)1 - g(x)g).
class QuasitriangularData {
public:
    static QuasitriangularData cz2() {
        QuasitriangularData q;
        q.host_ = make_alphabet({Generator::involution()});
        const Element one = Element::unit(q.host_);
        const Element g = Element::generator(q.host_, 0);
        q.r_matrix_ = Scalar(1, 2) * (TensorElement::of(one, one) + TensorElement::of(one, g) +
                                      TensorElement::of(g, one) - TensorElement::of(g, g));
        return q;
    }

    const AlphabetPtr& host_alphabet() const { return host_; }
    const TensorElement& r_matrix() const { return r_matrix_; }

    /// R as exponent pairs (words over {g} read modulo g^2 = 1).
    std::vector<HostPair> r_terms() const {
        std::vector<HostPair> out;
        for (const auto& t : r_matrix_.terms())
            out.push_back({t.slots[0].degree() & 1, t.slots[1].degree() & 1, t.coeff});
        return out;
    }

    // Host Hopf structure on basis elements g^e.
    static std::vector<HostPair> host_coproduct(int e) { return {{e & 1, e & 1, Scalar(1)}}; }
    static int host_antipode(int e) { return e & 1; }
    static Scalar host_counit(int) { return Scalar(1); }

    /// u = sum S_H(R2) R1
    HostElement drinfeld_element() const {
        HostElement u{Scalar(0), Scalar(0)};
        for (const auto& t : r_terms())
            u[static_cast<std::size_t>((host_antipode(t.right) + t.left) & 1)] += t.coeff;
        return u;
    }

    /// Checks R = R_g exactly, (S(x)id)(R) R = 1(x)1, (Delta(x)id)R = R13 R23
    /// and (id(x)Delta)R = R13 R12.
    Report verify() const {
        Report report;
        CheckResult exact{"r-matrix-value", true, 1};
        if (!(r_matrix_ == cz2().r_matrix_))
            exact.fail("R = " + to_string(r_matrix_));
        report.checks.push_back(exact);

        using Pair = std::map<std::pair<int, int>, Scalar>;
        Pair inverse_check;
        for (const auto& a : r_terms())
            for (const auto& b : r_terms())
                inverse_check[{(host_antipode(a.left) + b.left) & 1, (a.right + b.right) & 1}] += a.coeff * b.coeff;
        CheckResult inverse{"antipode-inverts-r", true, 1};
        for (const auto& [k, c] : inverse_check) {
            const Scalar expected = (k.first == 0 && k.second == 0) ? Scalar(1) : Scalar(0);
            if (c != expected)
                inverse.fail("coefficient of g^" + std::to_string(k.first) + "(x)g^" + std::to_string(k.second) +
                             " is " + to_string(c));
        }
        report.checks.push_back(inverse);

        using Triple = std::map<std::array<int, 3>, Scalar>;
        auto equal = [](Triple x, Triple y) {
            std::erase_if(x, [](const auto& kv) { return is_zero(kv.second); });
            std::erase_if(y, [](const auto& kv) { return is_zero(kv.second); });
            return x == y;
        };
        Triple delta_left, r13r23, delta_right, r13r12;
        for (const auto& a : r_terms()) {
            for (const auto& d : host_coproduct(a.left))
                delta_left[{d.left, d.right, a.right}] += a.coeff * d.coeff;
            for (const auto& d : host_coproduct(a.right))
                delta_right[{a.left, d.left, d.right}] += a.coeff * d.coeff;
            for (const auto& b : r_terms()) {
                r13r23[{a.left, b.left, (a.right + b.right) & 1}] += a.coeff * b.coeff;
                r13r12[{(a.left + b.left) & 1, b.right, a.right}] += a.coeff * b.coeff;
            }
        }
        CheckResult qt1{"delta-left-r", true, 1};
        if (!equal(delta_left, r13r23))
            qt1.fail("(Delta(x)id)R != R13 R23");
        CheckResult qt2{"delta-right-r", true, 1};
        if (!equal(delta_right, r13r12))
            qt2.fail("(id(x)Delta)R != R13 R12");
        report.checks.push_back(qt1);
        report.checks.push_back(qt2);
        return report;
    }

private:
    QuasitriangularData() : r_matrix_(nullptr, 2) {}

    AlphabetPtr host_;
    TensorElement r_matrix_;
};

/// g^e |> x = (-1)^{e|w|} on each word w, extended linearly in the host
/// element.
inline Element cz2_action(const HostElement& h, const Element& x) {
    Element out(x.alphabet());
    for (const auto& t : x.terms()) {
        const int p = as_int(parity_of(t.word, *x.alphabet()));
        Scalar c(0);
        for (int e = 0; e < 2; ++e)
            c += h[static_cast<std::size_t>(e)] * sign_power(e * p);
        out += Element::word(x.alphabet(), t.word, c * t.coeff);
    }
    return out;
}

inline Element cz2_action(int exponent, const Element& x) { return cz2_action(host_basis(exponent), x); }

/// rho(x) = sum R2 (x) (R1 |> x), returned as components: rho(x) = sum_e g^e (x) result[e].
inline std::array<Element, 2> coaction_from_action(const Element& x, const QuasitriangularData& q) {
    std::array<Element, 2> out{Element(x.alphabet()), Element(x.alphabet())};
    for (const auto& r : q.r_terms())
        out[static_cast<std::size_t>(r.right)] += r.coeff * cz2_action(r.left, x);
    return out;
}

/// Braiding Psi(v (x) w) = sum (R2 |> w) (x) (R1 |> v) induced by a host R-matrix.
inline TensorElement braiding_from_r_matrix(const Element& v, const Element& w, const QuasitriangularData& q) {
    TensorElement out(v.alphabet(), 2);
    for (const auto& r : q.r_terms())
        out += r.coeff * TensorElement::of(cz2_action(r.right, w), cz2_action(r.left, v));
    return out;
}

/// Bosonised presentation B * CZ2: the super presentation with g adjoined,
/// relations g^2 = 1 and g x = (-1)^{|x|} x g, and plain structure maps.
struct SmashPresentation {
    PresentationPtr super;
    PresentationPtr presentation;
    int g_id;
    StructureMaps super_maps;
    StructureMaps maps;

    const AlphabetPtr& alphabet() const { return presentation->alphabet(); }
    const AlphabetPtr& super_alphabet() const { return super->alphabet(); }

    /// b (x) g^e written as the word b g^e in the smash alphabet.
    Element pair(const Element& b, int exponent) const {
        if (!same_alphabet(b.alphabet(), super_alphabet()))
            throw AlphabetMismatch();
        Element x = Element::from_sorted(alphabet(), b.terms());
        if (exponent & 1)
            x = x * Element::generator(alphabet(), g_id);
        return x;
    }

    struct PairTerm {
        Word base;
        int exponent;
        Scalar coeff;
    };

    /// Splits an element whose words all have the form b g^e (e in {0,1}).
    std::vector<PairTerm> split(const Element& x) const {
        std::vector<PairTerm> out;
        for (const auto& t : x.terms()) {
            const std::string& s = t.word.letters();
            std::size_t cut = s.size();
            while (cut > 0 && static_cast<unsigned char>(s[cut - 1]) == g_id)
                --cut;
            for (std::size_t i = 0; i < cut; ++i)
                if (static_cast<unsigned char>(s[i]) == g_id)
                    throw InvalidArgument("word " + to_string(t.word, *alphabet()) + " is not of the form b g^e");
            const int e = static_cast<int>(s.size() - cut);
            if (e > 1)
                throw InvalidArgument("word " + to_string(t.word, *alphabet()) + " carries g^" + std::to_string(e));
            out.push_back({Word(s.substr(0, cut)), e, t.coeff});
        }
        return out;
    }

    Element base_element(const Word& w, const Scalar& c = Scalar(1)) const {
        return Element::word(super_alphabet(), w, c);
    }
};

namespace detail {

inline Element retag(const Element& x, const AlphabetPtr& a) { return Element::from_sorted(a, x.terms()); }

inline TensorElement retag(const TensorElement& t, const AlphabetPtr& a) {
    TensorAccumulator acc;
    for (const auto& term : t.terms())
        acc[term.slots] += term.coeff;
    return TensorElement::from_map(a, t.rank(), acc);
}

inline std::string extended_name(const Presentation& p, const std::string& prefix, const std::string& suffix) {
    if (p.name().rfind("pb:", 0) == 0)
        return prefix + p.name().substr(3);
    return p.name() + suffix;
}

} // namespace detail

/// Bosonisation of a super-Hopf algebra: adjoins a group-like involution g
/// with Delta(x) = sum x1 g^{|x2|} (x) x2, S(x) = g^{|x|} S_super(x), eps unchanged.
inline SmashPresentation bosonise(const PresentationPtr& p, const StructureMaps& m) {
    if (m.flavor() != Flavor::braided)
        throw FlavorError("bosonisation needs braided structure maps");
    if (m.presentation_ptr() != p && !(m.presentation().fingerprint() == p->fingerprint()))
        throw AlphabetMismatch();
    for (const auto& gen : p->alphabet()->generators())
        if (gen.family() == Family::g)
            throw InvalidArgument("presentation already contains g");

    std::vector<Generator> gens = p->alphabet()->generators();
    gens.push_back(Generator::involution());
    auto a = make_alphabet(gens);
    const int g_id = static_cast<int>(gens.size()) - 1;
    const Element g = Element::generator(a, g_id);
    const Element one = Element::unit(a);

    std::vector<Element> rels;
    for (const auto& r : p->relations())
        rels.push_back(detail::retag(r, a));
    rels.push_back(g * g - one);
    for (int id = 0; id < g_id; ++id) {
        const Element x = Element::generator(a, id);
        rels.push_back(g * x - sign_power(as_int(gens[static_cast<std::size_t>(id)].parity())) * (x * g));
    }
    auto presentation = std::make_shared<const Presentation>(detail::extended_name(*p, "pbg:", "+g"), a,
                                                             std::move(rels), p->default_degree());

    StructureMaps maps(presentation, Flavor::plain);
    for (int id = 0; id < g_id; ++id) {
        TensorAccumulator acc;
        for (const auto& t : m.coproduct(id).terms()) {
            Word left = t.slots[0];
            if (parity_of(t.slots[1], *p->alphabet()) == Parity::odd)
                left += Word::letter(g_id);
            acc[{left, t.slots[1]}] += t.coeff;
        }
        Element s = detail::retag(m.antipode(id), a);
        if (gens[static_cast<std::size_t>(id)].parity() == Parity::odd)
            s = g * s;
        maps.set_images(id, TensorElement::from_map(a, 2, acc), m.counit(id), s);
    }
    maps.set_images(g_id, TensorElement::of(g, g), Scalar(1), g);
    return SmashPresentation{p, presentation, g_id, m, maps};
}

// ---------------------------------------------------------------------------
// Generic smash-product formulas, driven by the host structure and R.

/// (b (x) h)(c (x) k) = sum b (h1 |> c) (x) h2 k
inline Element smash_multiply(const Element& x, const Element& y, const SmashPresentation& sp,
                              const QuasitriangularData&) {
    Element out(sp.alphabet());
    for (const auto& s : sp.split(x))
        for (const auto& t : sp.split(y))
            for (const auto& d : QuasitriangularData::host_coproduct(s.exponent)) {
                const Element acted = cz2_action(d.left, sp.base_element(t.base));
                out += (s.coeff * t.coeff * d.coeff) *
                       sp.pair(sp.base_element(s.base) * acted, (d.right + t.exponent) & 1);
            }
    return out;
}

/// Closed CZ2 form: (b g^a)(c g^k) = (-1)^{a|c|} bc g^{a+k}.
inline Element smash_multiply_closed(const Element& x, const Element& y, const SmashPresentation& sp) {
    Element out(sp.alphabet());
    for (const auto& s : sp.split(x))
        for (const auto& t : sp.split(y)) {
            const int pc = as_int(parity_of(t.base, *sp.super_alphabet()));
            out += (s.coeff * t.coeff * sign_power(s.exponent * pc)) *
                   sp.pair(sp.base_element(s.base + t.base), s.exponent + t.exponent);
        }
    return out;
}

/// Delta(b (x) h) = sum b1 (x) R2 h1 (x) (R1 |> b2) (x) h2, as a rank-2 tensor
/// of smash elements.
inline TensorElement smash_coproduct(const Element& x, const SmashPresentation& sp, const QuasitriangularData& q) {
    TensorElement out(sp.alphabet(), 2);
    for (const auto& s : sp.split(x)) {
        const TensorElement db = apply_coproduct(sp.base_element(s.base), sp.super_maps);
        for (const auto& bt : db.terms())
            for (const auto& h : QuasitriangularData::host_coproduct(s.exponent))
                for (const auto& r : q.r_terms()) {
                    const Element left = sp.pair(sp.base_element(bt.slots[0]), (r.right + h.left) & 1);
                    const Element right = sp.pair(cz2_action(r.left, sp.base_element(bt.slots[1])), h.right);
                    out += (s.coeff * bt.coeff * h.coeff * r.coeff) * TensorElement::of(left, right);
                }
    }
    return out;
}

/// Closed CZ2 form: Delta(b g^a) = sum b1 g^{|b2|+a} (x) b2 g^a.
inline TensorElement smash_coproduct_closed(const Element& x, const SmashPresentation& sp) {
    TensorElement out(sp.alphabet(), 2);
    for (const auto& s : sp.split(x)) {
        const TensorElement db = apply_coproduct(sp.base_element(s.base), sp.super_maps);
        for (const auto& bt : db.terms()) {
            const int p2 = as_int(parity_of(bt.slots[1], *sp.super_alphabet()));
            out += (s.coeff * bt.coeff) * TensorElement::of(sp.pair(sp.base_element(bt.slots[0]), p2 + s.exponent),
                                                            sp.pair(sp.base_element(bt.slots[1]), s.exponent));
        }
    }
    return out;
}

/// S(b (x) h) = sum ((S_H(h2) u R1) |> S_B(b)) (x) S_H(R2 h1), u = sum S_H(R2) R1.
inline Element smash_antipode(const Element& x, const SmashPresentation& sp, const QuasitriangularData& q) {
    const HostElement u = q.drinfeld_element();
    Element out(sp.alphabet());
    for (const auto& s : sp.split(x)) {
        const Element sb = apply_antipode(sp.base_element(s.base), sp.super_maps);
        for (const auto& h : QuasitriangularData::host_coproduct(s.exponent))
            for (const auto& r : q.r_terms()) {
                const HostElement actor =
                    host_multiply(host_multiply(host_basis(QuasitriangularData::host_antipode(h.right)), u),
                                  host_basis(r.left));
                const int second = QuasitriangularData::host_antipode((r.right + h.left) & 1);
                out += (s.coeff * h.coeff * r.coeff) * sp.pair(cz2_action(actor, sb), second);
            }
    }
    return out;
}

/// Closed CZ2 form: S(b g^a) = g^a g^{|b|} S_super(b), rewritten as
/// (-1)^{(a+|b|)|b|} S_super(b) g^{a+|b|}.
inline Element smash_antipode_closed(const Element& x, const SmashPresentation& sp) {
    Element out(sp.alphabet());
    for (const auto& s : sp.split(x)) {
        const int pb = as_int(parity_of(s.base, *sp.super_alphabet()));
        const Element sb = apply_antipode(sp.base_element(s.base), sp.super_maps);
        const int e = (s.exponent + pb) & 1;
        out += (s.coeff * sign_power(e * pb)) * sp.pair(sb, e);
    }
    return out;
}

/// Generic-versus-closed agreement of the smash formulas on every word
/// b g^e with deg b <= max_degree, plus agreement with the emitted plain maps
/// modulo the emitted relations.
inline Report smash_agreement(const SmashPresentation& sp, const QuasitriangularData& q, const Quotient& quotient,
                              int max_degree = 2) {
    CheckResult mult{"smash-multiply-generic-vs-closed"};
    CheckResult copr{"smash-coproduct-generic-vs-closed"};
    CheckResult anti{"smash-antipode-generic-vs-closed"};
    CheckResult copr_maps{"smash-coproduct-vs-emitted-maps"};
    CheckResult anti_maps{"smash-antipode-vs-emitted-maps"};
    std::vector<Element> pairs;
    for (const auto& w : detail::words_up_to(sp.super_alphabet()->size(), max_degree))
        for (int e = 0; e < 2; ++e)
            pairs.push_back(sp.pair(sp.base_element(w), e));

    for (const auto& x : pairs) {
        ++copr.instances;
        if (!(smash_coproduct(x, sp, q) == smash_coproduct_closed(x, sp)))
            copr.fail("x = " + to_string(x));
        ++anti.instances;
        if (!(smash_antipode(x, sp, q) == smash_antipode_closed(x, sp)))
            anti.fail("x = " + to_string(x));
        ++copr_maps.instances;
        const TensorElement diff = quotient.tensor_normal_form(smash_coproduct(x, sp, q) - apply_coproduct(x, sp.maps));
        if (!diff.is_zero())
            copr_maps.fail("x = " + to_string(x) + ", residual " + to_string(diff));
        ++anti_maps.instances;
        const Element adiff = quotient.normal_form(smash_antipode(x, sp, q) - apply_antipode_reduced(x, sp.maps, quotient));
        if (!adiff.is_zero())
            anti_maps.fail("x = " + to_string(x) + ", residual " + to_string(adiff));
        for (const auto& y : pairs) {
            ++mult.instances;
            if (!(smash_multiply(x, y, sp, q) == smash_multiply_closed(x, y, sp)))
                mult.fail("x = " + to_string(x) + ", y = " + to_string(y));
        }
    }
    Report report;
    report.checks = {mult, copr, anti, copr_maps, anti_maps};
    return report;
}

/// g b g == (-1)^{|b|} b for every generator b of the super algebra.
inline CheckResult inner_automorphism_check(const SmashPresentation& sp, const Quotient& q) {
    CheckResult result{"inner-automorphism"};
    const Element g = Element::generator(sp.alphabet(), sp.g_id);
    for (int id = 0; id < sp.g_id; ++id) {
        ++result.instances;
        const Element b = Element::generator(sp.alphabet(), id);
        const Element expected = sign_power(as_int((*sp.alphabet())[id].parity())) * b;
        const Element r = q.normal_form(g * b * g - expected);
        if (!r.is_zero())
            result.fail("g*" + (*sp.alphabet())[id].token() + "*g residual " + to_string(r));
    }
    return result;
}

// ---------------------------------------------------------------------------
// K+- extension

/// P_B(K+-): P_B(n) with K+, K- adjoined, {K^s, b} = 0, K+K- = K-K+ = 1, and
/// Delta(b_i^s) = b_i^s (x) 1 + K^s (x) b_i^s, Delta(K^s) = K^s (x) K^s,
/// S(b_i^s) = b_i^s K^{-s}, S(K^s) = K^{-s}, eps(b) = 0, eps(K) = 1.
/// Throws ConstructionError if Delta or eps fails to vanish on a relation.
inline std::pair<PresentationPtr, StructureMaps> kpm_extend(const PresentationPtr& p) {
    for (const auto& gen : p->alphabet()->generators())
        if (gen.family() != Family::b)
            throw InvalidArgument("K+- extension needs a parabosonic presentation");
    std::vector<Generator> gens = p->alphabet()->generators();
    const int base = static_cast<int>(gens.size());
    gens.push_back(Generator::twist(Sign::plus));
    gens.push_back(Generator::twist(Sign::minus));
    auto a = make_alphabet(gens);
    auto K = [&](Sign s) { return Element::generator(a, s == Sign::plus ? base : base + 1); };
    const Element one = Element::unit(a);

    std::vector<Element> rels;
    for (const auto& r : p->relations())
        rels.push_back(detail::retag(r, a));
    for (Sign s : both_signs())
        for (int id = 0; id < base; ++id)
            rels.push_back(anticommutator(K(s), Element::generator(a, id)));
    rels.push_back(K(Sign::plus) * K(Sign::minus) - one);
    rels.push_back(K(Sign::minus) * K(Sign::plus) - one);
    auto presentation = std::make_shared<const Presentation>(detail::extended_name(*p, "pbk:", "+K"), a,
                                                             std::move(rels), p->default_degree());

    StructureMaps maps(presentation, Flavor::plain);
    for (int id = 0; id < base; ++id) {
        const Sign s = gens[static_cast<std::size_t>(id)].sign();
        const Element b = Element::generator(a, id);
        maps.set_images(id, TensorElement::of(b, one) + TensorElement::of(K(s), b), Scalar(0), b * K(opposite(s)));
    }
    for (Sign s : both_signs()) {
        const int id = s == Sign::plus ? base : base + 1;
        maps.set_images(id, TensorElement::of(K(s), K(s)), Scalar(1), K(opposite(s)));
    }

    const Quotient q(presentation, std::max(presentation->default_degree(), presentation->max_relation_degree()));
    for (const auto& r : presentation->relations()) {
        const TensorElement d = q.tensor_normal_form(apply_coproduct(r, maps));
        if (!d.is_zero())
            throw ConstructionError("Delta(" + to_string(r) + ") = " + to_string(d) + " is not zero");
        if (!is_zero(apply_counit(r, maps)))
            throw ConstructionError("eps(" + to_string(r) + ") is not zero");
    }
    return {presentation, maps};
}

// ---------------------------------------------------------------------------
// Quasitriangularity experiments

/// Rank-3 tensor with the factors of R placed in two of the three slots.
inline TensorElement place_r(const TensorElement& r, int first, int second) {
    TensorAccumulator acc;
    for (const auto& t : r.terms()) {
        WordTuple tuple(3);
        tuple[static_cast<std::size_t>(first)] = t.slots[0];
        tuple[static_cast<std::size_t>(second)] = t.slots[1];
        acc[tuple] += t.coeff;
    }
    return TensorElement::from_map(r.alphabet(), 3, acc);
}

/// Residual checks of the quasitriangular axioms for a candidate R inside a
/// plain Hopf algebra: Delta^op(x) R = R Delta(x) on generators,
/// (Delta(x)id)R = R13 R23, (id(x)Delta)R = R13 R12. Only reports; a failing
/// candidate says nothing about other candidates.
inline Report check_quasitriangular(const Quotient& q, const StructureMaps& m, const TensorElement& r) {
    if (m.flavor() != Flavor::plain)
        throw FlavorError("quasitriangularity is checked for plain Hopf algebras");
    CheckResult commute{"r-intertwines-coproduct"};
    for (int id = 0; id < static_cast<int>(q.alphabet()->size()); ++id) {
        ++commute.instances;
        const TensorElement d = m.coproduct(id);
        TensorAccumulator flipped;
        for (const auto& t : d.terms())
            flipped[{t.slots[1], t.slots[0]}] += t.coeff;
        const TensorElement dop = TensorElement::from_map(d.alphabet(), 2, flipped);
        const TensorElement res = q.tensor_normal_form(plain_tensor_multiply(dop, r) - plain_tensor_multiply(r, d));
        if (!res.is_zero())
            commute.fail((*q.alphabet())[id].token() + ": residual " + to_string(res));
    }
    CheckResult left{"delta-left-r"};
    CheckResult right{"delta-right-r"};
    ++left.instances;
    ++right.instances;
    const TensorElement dl = q.tensor_normal_form(coproduct_on_slot(r, 0, m) -
                                                  plain_tensor_multiply(place_r(r, 0, 2), place_r(r, 1, 2)));
    if (!dl.is_zero())
        left.fail("residual " + to_string(dl));
    const TensorElement dr = q.tensor_normal_form(coproduct_on_slot(r, 1, m) -
                                                  plain_tensor_multiply(place_r(r, 0, 2), place_r(r, 0, 1)));
    if (!dr.is_zero())
        right.fail("residual " + to_string(dr));
    Report report;
    report.checks = {commute, left, right};
    return report;
}

/// 1/2 (1(x)1 + 1(x)t + t(x)1 - t(x)t) for a chosen group-like letter t.
inline TensorElement involutive_r_candidate(const AlphabetPtr& a, int letter) {
    const Element one = Element::unit(a);
    const Element t = Element::generator(a, letter);
    return Scalar(1, 2) *
           (TensorElement::of(one, one) + TensorElement::of(one, t) + TensorElement::of(t, one) - TensorElement::of(t, t));
}

} // namespace parastat
