#pragma once

#include <string>
#include <vector>

#include "parastat/superhopf.hpp"

namespace parastat {

namespace detail {

inline int delta(int a, int b) { return a == b ? 1 : 0; }

inline std::vector<Generator> paired_generators(int n, Generator (*make)(int, Sign)) {
    if (n < 1)
        throw InvalidArgument("number of modes must be at least 1, got " + std::to_string(n));
    std::vector<Generator> gens;
    for (int i = 1; i <= n; ++i) {
        gens.push_back(make(i, Sign::plus));
        gens.push_back(make(i, Sign::minus));
    }
    return gens;
}

inline void push_unique(std::vector<Element>& out, Element r, bool deduplicate) {
    if (r.is_zero())
        return;
    // a scalar multiple of a kept relation spans nothing new
    if (deduplicate)
        for (const auto& s : out)
            if (s.leading().word == r.leading().word && s == (s.leading().coeff / r.leading().coeff) * r)
                return;
    out.push_back(std::move(r));
}

} // namespace detail

/// Letter id of b_i^s (or f_i^s) in the preset alphabets.
inline int mode_id(int i, Sign s) { return 2 * (i - 1) + (s == Sign::plus ? 0 : 1); }

inline std::vector<Sign> both_signs() { return {Sign::plus, Sign::minus}; }

/// [{b_i^xi, b_j^eta}, b_k^eps] - (eps-eta) d_jk b_i^xi - (eps-xi) d_ik b_j^eta
inline Element parabosonic_relation(const AlphabetPtr& a, int i, Sign xi, int j, Sign eta, int k, Sign eps) {
    const Element bi = Element::generator(a, mode_id(i, xi));
    const Element bj = Element::generator(a, mode_id(j, eta));
    const Element bk = Element::generator(a, mode_id(k, eps));
    const int e = as_int(eps), x = as_int(xi), h = as_int(eta);
    return commutator(anticommutator(bi, bj), bk) - Scalar((e - h) * detail::delta(j, k)) * bi -
           Scalar((e - x) * detail::delta(i, k)) * bj;
}

/// [[f_i^xi, f_j^eta], f_k^eps] - 1/2 (eps-eta)^2 d_jk f_i^xi + 1/2 (eps-xi)^2 d_ik f_j^eta
inline Element parafermionic_relation(const AlphabetPtr& a, int i, Sign xi, int j, Sign eta, int k, Sign eps) {
    const Element fi = Element::generator(a, mode_id(i, xi));
    const Element fj = Element::generator(a, mode_id(j, eta));
    const Element fk = Element::generator(a, mode_id(k, eps));
    const int e = as_int(eps), x = as_int(xi), h = as_int(eta);
    return commutator(commutator(fi, fj), fk) - make_scalar((e - h) * (e - h) * detail::delta(j, k), 2) * fi +
           make_scalar((e - x) * (e - x) * detail::delta(i, k), 2) * fj;
}

namespace detail {

template <class Rel>
std::vector<Element> trilinear_relations(const AlphabetPtr& a, int n, bool deduplicate, Rel rel) {
    std::vector<Element> out;
    for (int i = 1; i <= n; ++i)
        for (Sign xi : both_signs())
            for (int j = 1; j <= n; ++j)
                for (Sign eta : both_signs())
                    for (int k = 1; k <= n; ++k)
                        for (Sign eps : both_signs())
                            push_unique(out, rel(a, i, xi, j, eta, k, eps), deduplicate);
    return out;
}

} // namespace detail

/// P_B(n) = T(V_B)/I_B with 2n odd generators b_i^+, b_i^-.
inline PresentationPtr parabosonic(int n, bool deduplicate = true) {
    auto a = make_alphabet(detail::paired_generators(n, &Generator::boson));
    auto rels = detail::trilinear_relations(a, n, deduplicate, &parabosonic_relation);
    return std::make_shared<const Presentation>("pb:" + std::to_string(n), a, std::move(rels), 4);
}

/// P_F(n) = T(V_F)/I_F with 2n even generators f_i^+, f_i^-.
inline PresentationPtr parafermionic(int n, bool deduplicate = true) {
    auto a = make_alphabet(detail::paired_generators(n, &Generator::fermion));
    auto rels = detail::trilinear_relations(a, n, deduplicate, &parafermionic_relation);
    return std::make_shared<const Presentation>("pf:" + std::to_string(n), a, std::move(rels), 4);
}

/// Every generator primitive: Delta(x) = x(x)1 + 1(x)x, eps(x) = 0, S(x) = -x.
/// Braided for the parabosons, plain for the parafermions.
inline StructureMaps primitive_maps(const PresentationPtr& p, Flavor flavor) {
    StructureMaps m(p, flavor);
    const auto& a = p->alphabet();
    for (int id = 0; id < static_cast<int>(a->size()); ++id) {
        const Element x = Element::generator(a, id);
        const Element one = Element::unit(a);
        m.set_images(id, TensorElement::of(x, one) + TensorElement::of(one, x), Scalar(0), -x);
    }
    return m;
}

inline StructureMaps parabosonic_maps(const PresentationPtr& p) { return primitive_maps(p, Flavor::braided); }
inline StructureMaps parafermionic_maps(const PresentationPtr& p) { return primitive_maps(p, Flavor::plain); }

/// Number of modes n of a pb:/pf:/pbg:/pbk: preset alphabet.
inline int mode_count(const Presentation& p) {
    int n = 0;
    for (const auto& g : p.alphabet()->generators())
        if (g.index())
            n = std::max(n, *g.index());
    return n;
}

inline bool is_parabosonic_family(const Presentation& p) {
    for (const auto& g : p.alphabet()->generators())
        if (g.family() == Family::f)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// (Super-)Lie closure

/// Structure constants of the bracket on a basis of the (super-)Lie
/// subalgebra spanned by the degree-1 generators and their degree-2 brackets.
struct BracketTable {
    std::vector<Element> basis;
    std::vector<Parity> parity;
    /// bracket[a][b][c]: coefficient of basis[c] in <basis[a], basis[b]>.
    std::vector<std::vector<std::vector<Scalar>>> bracket;

    std::size_t dimension() const { return basis.size(); }
    std::size_t dimension(Parity p) const {
        std::size_t n = 0;
        for (auto q : parity)
            n += q == p;
        return n;
    }
};

/// <x,y> = xy - (-1)^{|x||y|} yx
inline Element super_bracket(const Element& x, const Element& y) {
    const int s = as_int(*x.parity()) * as_int(*y.parity());
    return x * y - sign_power(s) * (y * x);
}

namespace detail {

/// Echelon form over the standard-word coordinates, used to test span
/// membership and extract coordinates in a chosen basis.
class SpanSolver {
public:
    /// Adds v if independent; returns true when added.
    bool add(const Element& v) {
        Element r = v;
        std::vector<Scalar> coords(origin_.size(), Scalar(0));
        reduce(r, coords);
        if (r.is_zero())
            return false;
        // r = v - sum coords_i * origin_i ; store r with its expression
        std::vector<Scalar> expr(origin_.size() + 1, Scalar(0));
        for (std::size_t i = 0; i < coords.size(); ++i)
            expr[i] = -coords[i];
        expr.back() = 1;
        rows_.push_back({r, expr});
        origin_.push_back(v);
        for (auto& row : rows_)
            row.expr.resize(origin_.size(), Scalar(0));
        return true;
    }

    /// Coordinates of v in the added vectors, or nullopt if v is outside
    /// their span.
    std::optional<std::vector<Scalar>> solve(const Element& v) const {
        Element r = v;
        std::vector<Scalar> coords(origin_.size(), Scalar(0));
        reduce(r, coords);
        if (!r.is_zero())
            return std::nullopt;
        return coords;
    }

private:
    struct Row {
        Element vec; // pivot = leading word
        std::vector<Scalar> expr;
    };

    void reduce(Element& r, std::vector<Scalar>& coords) const {
        bool progress = true;
        while (progress && !r.is_zero()) {
            progress = false;
            for (const auto& row : rows_) {
                const Scalar c = r.coefficient(row.vec.leading().word);
                if (is_zero(c))
                    continue;
                const Scalar f = c / row.vec.leading().coeff;
                r = r - f * row.vec;
                for (std::size_t i = 0; i < row.expr.size(); ++i)
                    coords[i] += f * row.expr[i];
                progress = true;
            }
        }
    }

    std::vector<Element> origin_;
    std::vector<Row> rows_;
};

} // namespace detail

/// Builds the bracket table of {x} u {<x,y>} for the generators x,y of a
/// pb:/pf: preset. Throws TruncationError below degree 4.
inline BracketTable bracket_table(const Quotient& q) {
    if (q.degree() < 4)
        throw TruncationError(4, q.degree());
    const auto& a = q.alphabet();
    std::vector<Element> gens;
    for (int id = 0; id < static_cast<int>(a->size()); ++id)
        gens.push_back(Element::generator(a, id));

    std::vector<Element> spanning = gens;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            spanning.push_back(q.normal_form(super_bracket(gens[i], gens[j])));

    // reduce to a basis, keeping the first independent vectors in order
    BracketTable table;
    detail::SpanSolver solver;
    for (const auto& v : spanning) {
        if (v.is_zero() || !solver.add(v))
            continue;
        table.basis.push_back(v);
        table.parity.push_back(*v.parity());
    }
    const std::size_t dim = table.basis.size();
    table.bracket.assign(dim, std::vector<std::vector<Scalar>>(dim));
    return table;
}

namespace detail {

inline std::string coords_string(const std::vector<Scalar>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + to_string(c[i]);
    return s + ")";
}

} // namespace detail

/// Closure, dimension, super-antisymmetry and super-Jacobi checks for the
/// Lie (super)algebra inside P_F(n) or P_B(n). The Jacobi convention is
/// (-1)^{|x||z|}<x,<y,z>> + (-1)^{|y||x|}<y,<z,x>> + (-1)^{|z||y|}<z,<x,y>> = 0.
inline Report lie_closure_check(const Quotient& q, BracketTable* table_out = nullptr) {
    const Presentation& p = q.presentation();
    const int n = mode_count(p);
    const bool bosonic = is_parabosonic_family(p);
    BracketTable table = bracket_table(q);
    const std::size_t dim = table.dimension();

    detail::SpanSolver solver;
    for (const auto& v : table.basis)
        solver.add(v);

    CheckResult closure{"closure"};
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            ++closure.instances;
            const Element value = q.normal_form(super_bracket(table.basis[x], table.basis[y]));
            auto coords = solver.solve(value);
            if (!coords) {
                closure.fail("<" + to_string(table.basis[x]) + ", " + to_string(table.basis[y]) +
                             "> = " + to_string(value) + " leaves the span");
                table.bracket[x][y].assign(dim, Scalar(0));
                continue;
            }
            table.bracket[x][y] = std::move(*coords);
        }

    CheckResult dimension{"dimension"};
    const std::size_t even_expected = static_cast<std::size_t>(n * (2 * n + 1));
    const std::size_t odd_expected = bosonic ? static_cast<std::size_t>(2 * n) : 0;
    const std::size_t even_found = bosonic ? table.dimension(Parity::even) : dim;
    const std::size_t odd_found = bosonic ? table.dimension(Parity::odd) : 0;
    dimension.instances = 1;
    if (bosonic) {
        dimension.witness = "even " + std::to_string(even_found) + ", odd " + std::to_string(odd_found);
        if (even_found != even_expected || odd_found != odd_expected)
            dimension.fail("even " + std::to_string(even_found) + " (expected " + std::to_string(even_expected) +
                           "), odd " + std::to_string(odd_found) + " (expected " + std::to_string(odd_expected) + ")");
    } else {
        dimension.witness = "span dimension " + std::to_string(dim);
        if (dim != even_expected)
            dimension.fail("span dimension " + std::to_string(dim) + " (expected " + std::to_string(even_expected) +
                           ")");
    }

    auto par = [&](std::size_t i) { return as_int(table.parity[i]); };

    CheckResult antisym{"super-antisymmetry"};
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            for (std::size_t c = 0; c < dim; ++c) {
                ++antisym.instances;
                const Scalar lhs = table.bracket[x][y][c];
                const Scalar rhs = -sign_power(par(x) * par(y)) * table.bracket[y][x][c];
                if (lhs != rhs)
                    antisym.fail("basis pair (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }

    // <u, <v, w>> through the table
    auto nested = [&](std::size_t u, std::size_t v, std::size_t w) {
        std::vector<Scalar> out(dim, Scalar(0));
        for (std::size_t c = 0; c < dim; ++c) {
            const Scalar& inner = table.bracket[v][w][c];
            if (is_zero(inner))
                continue;
            for (std::size_t d = 0; d < dim; ++d)
                out[d] += inner * table.bracket[u][c][d];
        }
        return out;
    };
    CheckResult jacobi{"super-jacobi"};
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            for (std::size_t z = 0; z < dim; ++z) {
                ++jacobi.instances;
                const auto a = nested(x, y, z);
                const auto b = nested(y, z, x);
                const auto c = nested(z, x, y);
                std::vector<Scalar> sum(dim, Scalar(0));
                for (std::size_t d = 0; d < dim; ++d)
                    sum[d] = sign_power(par(x) * par(z)) * a[d] + sign_power(par(y) * par(x)) * b[d] +
                             sign_power(par(z) * par(y)) * c[d];
                for (const auto& s : sum)
                    if (!is_zero(s)) {
                        jacobi.fail("basis triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                                    std::to_string(z) + ") gives " + detail::coords_string(sum));
                        break;
                    }
            }

    Report report;
    report.checks = {closure, dimension, antisym, jacobi};

    if (bosonic) {
        // [{b_i^xi,b_j^eta},{b_k^eps,b_l^phi}] = (eps-eta)d_jk{b_i^xi,b_l^phi} + (eps-xi)d_ik{b_j^eta,b_l^phi}
        //                                      + (phi-eta)d_jl{b_i^xi,b_k^eps} + (phi-xi)d_il{b_j^eta,b_k^eps}
        CheckResult even{"even-bracket-formula"};
        const auto& a = q.alphabet();
        auto b = [&](int i, Sign s) { return Element::generator(a, mode_id(i, s)); };
        for (int i = 1; i <= n; ++i)
            for (Sign xi : both_signs())
                for (int j = 1; j <= n; ++j)
                    for (Sign eta : both_signs())
                        for (int k = 1; k <= n; ++k)
                            for (Sign eps : both_signs())
                                for (int l = 1; l <= n; ++l)
                                    for (Sign phi : both_signs()) {
                                        ++even.instances;
                                        const int X = as_int(xi), H = as_int(eta), E = as_int(eps), F = as_int(phi);
                                        using detail::delta;
                                        const Element lhs = commutator(anticommutator(b(i, xi), b(j, eta)),
                                                                       anticommutator(b(k, eps), b(l, phi)));
                                        const Element rhs =
                                            Scalar((E - H) * delta(j, k)) * anticommutator(b(i, xi), b(l, phi)) +
                                            Scalar((E - X) * delta(i, k)) * anticommutator(b(j, eta), b(l, phi)) +
                                            Scalar((F - H) * delta(j, l)) * anticommutator(b(i, xi), b(k, eps)) +
                                            Scalar((F - X) * delta(i, l)) * anticommutator(b(j, eta), b(k, eps));
                                        const Element r = q.normal_form(lhs - rhs);
                                        if (!r.is_zero())
                                            even.fail("indices " + std::to_string(i) + std::to_string(j) +
                                                      std::to_string(k) + std::to_string(l) + ": " + to_string(r));
                                    }
        report.checks.push_back(even);
    }
    if (table_out)
        *table_out = std::move(table);
    return report;
}

// ---------------------------------------------------------------------------
// u(n) subalgebra and the linear Casimir

/// N_lm = 1/2 {b_l^+, b_m^-}
inline Element number_operator(const AlphabetPtr& a, int l, int m) {
    return Scalar(1, 2) *
           anticommutator(Element::generator(a, mode_id(l, Sign::plus)), Element::generator(a, mode_id(m, Sign::minus)));
}

/// N_lm for l,m = 1..n, row-major.
inline std::vector<Element> u_n_generators(const AlphabetPtr& a, int n) {
    std::vector<Element> out;
    for (int l = 1; l <= n; ++l)
        for (int m = 1; m <= n; ++m)
            out.push_back(number_operator(a, l, m));
    return out;
}

/// [N_kl, N_mn] == d_lm N_kn - d_kn N_ml for all indices.
inline Report u_n_check(const Quotient& q) {
    const int n = mode_count(q.presentation());
    if (q.degree() < 4)
        throw TruncationError(4, q.degree());
    const auto& a = q.alphabet();
    CheckResult result{"u(n)-commutators"};
    using detail::delta;
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            for (int m = 1; m <= n; ++m)
                for (int r = 1; r <= n; ++r) {
                    ++result.instances;
                    const Element lhs = commutator(number_operator(a, k, l), number_operator(a, m, r));
                    const Element rhs = Scalar(delta(l, m)) * number_operator(a, k, r) -
                                        Scalar(delta(k, r)) * number_operator(a, m, l);
                    const Element res = q.normal_form(lhs - rhs);
                    if (!res.is_zero())
                        result.fail("[N_" + std::to_string(k) + std::to_string(l) + ",N_" + std::to_string(m) +
                                    std::to_string(r) + "] residual " + to_string(res));
                }
    Report report;
    report.checks = {result};
    return report;
}

/// Linear Casimir N = sum_i N_ii.
inline Element casimir(const AlphabetPtr& a, int n) {
    Element c(a);
    for (int i = 1; i <= n; ++i)
        c += number_operator(a, i, i);
    return c;
}

/// [N, b_i^+-] == +-b_i^+-  and  [N^m, b_i^+] == b_i^+((N+1)^m - N^m), m = 1..max_power.
/// Each power m is evaluated in the quotient at degree 2m+1 (at least the
/// degree of q), so q must hold degree >= 2*max_power+1.
inline Report casimir_checks(const Quotient& q, int max_power) {
    if (q.degree() < 2 * max_power + 1)
        throw TruncationError(2 * max_power + 1, q.degree());
    const int n = mode_count(q.presentation());
    const auto& a = q.alphabet();
    const Element N = casimir(a, n);
    const Element one = Element::unit(a);

    CheckResult linear{"casimir-linear"};
    for (int i = 1; i <= n; ++i)
        for (Sign s : both_signs()) {
            ++linear.instances;
            const Element b = Element::generator(a, mode_id(i, s));
            const Element res = q.normal_form(commutator(N, b) - Scalar(as_int(s)) * b);
            if (!res.is_zero())
                linear.fail("[N," + (*a)[mode_id(i, s)].token() + "] residual " + to_string(res));
        }

    CheckResult powers{"casimir-powers"};
    for (int m = 1; m <= max_power; ++m)
        for (int i = 1; i <= n; ++i) {
            ++powers.instances;
            const Element b = Element::generator(a, mode_id(i, Sign::plus));
            const Element lhs = commutator(power(N, m), b);
            const Element rhs = b * (power(N + one, m) - power(N, m));
            const Element res = q.normal_form(lhs - rhs);
            if (!res.is_zero())
                powers.fail("m=" + std::to_string(m) + ", i=" + std::to_string(i) + " residual " + to_string(res));
        }
    Report report;
    report.checks = {linear, powers};
    return report;
}

} // namespace parastat
