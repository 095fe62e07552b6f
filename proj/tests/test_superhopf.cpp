#include <catch_amalgamated.hpp>

#include "parastat/catalog.hpp"

using namespace parastat;

namespace {

void require_all_pass(const Report& r) {
    for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.witness);
        REQUIRE(c.passed);
        REQUIRE(c.overflows == 0);
    }
}

} // namespace

TEST_CASE("apply_coproduct examples") {
    auto p = parabosonic(2);
    const auto m = parabosonic_maps(p);
    const Element one = p->unit(), b1 = p->generator("b1+"), b2 = p->generator("b2+");
    CHECK(apply_coproduct(b1, m) == TensorElement::of(one, b1) + TensorElement::of(b1, one));
    CHECK(apply_coproduct(one, m) == TensorElement::unit(p->alphabet(), 2));
    CHECK(apply_coproduct(b1 * b2, m) == TensorElement::of(b1 * b2, one) + TensorElement::of(b1, b2) -
                                             TensorElement::of(b2, b1) + TensorElement::of(one, b1 * b2));
}

TEST_CASE("apply_counit examples") {
    auto pb = parabosonic(1);
    CHECK(apply_counit(pb->generator("b1+"), parabosonic_maps(pb)) == 0);
    CHECK(apply_counit(pb->unit(), parabosonic_maps(pb)) == 1);
    const Algebra g = resolve_preset("pbg:1");
    const Element x = g.presentation->generator("g") * g.presentation->generator("b1+") +
                      Element::scalar(g.presentation->alphabet(), 3);
    CHECK(apply_counit(x, g.maps) == 3);
}

TEST_CASE("apply_antipode examples") {
    auto p = parabosonic(2);
    const auto m = parabosonic_maps(p);
    const Element b1 = p->generator("b1+"), b2 = p->generator("b2+");
    CHECK(apply_antipode(b1, m) == -b1);
    CHECK(apply_antipode(p->unit(), m) == p->unit());
    CHECK(apply_antipode(b1 * b2, m) == -(b2 * b1));
    // three odd letters: sign (-1)^3 from the twist times (-1)^3 from the images
    CHECK(apply_antipode(b1 * b2 * b1, m) == b1 * b2 * b1);
}

TEST_CASE("incomplete maps are rejected") {
    auto p = parabosonic(1);
    StructureMaps m(p, Flavor::braided);
    CHECK_FALSE(m.complete());
    CHECK_THROWS_AS(apply_coproduct(p->generator("b1+"), m), IncompleteMapsError);
    CHECK_THROWS_AS(apply_counit(p->generator("b1+"), m), IncompleteMapsError);
    CHECK_THROWS_AS(check_hopf_axioms(Quotient(p, 4), m), IncompleteMapsError);
}

TEST_CASE("parafermionic generators are primitive") {
    for (int n = 1; n <= 2; ++n) {
        auto p = parafermionic(n);
        const auto m = parafermionic_maps(p);
        for (int id = 0; id < static_cast<int>(p->alphabet()->size()); ++id) {
            const Element x = p->generator(id);
            REQUIRE(m.coproduct(id) == TensorElement::of(x, p->unit()) + TensorElement::of(p->unit(), x));
        }
    }
}

TEST_CASE("flavor degeneracy on an all-even alphabet") {
    auto p = parafermionic(2);
    const auto braided = primitive_maps(p, Flavor::braided);
    const auto plain = primitive_maps(p, Flavor::plain);
    SampleOptions opt;
    for (const auto& x : random_elements(p->alphabet(), opt)) {
        REQUIRE(apply_coproduct(x, braided) == apply_coproduct(x, plain));
        REQUIRE(apply_antipode(x, braided) == apply_antipode(x, plain));
        REQUIRE(apply_counit(x, braided) == apply_counit(x, plain));
    }
}

TEST_CASE("Hopf axioms for the parastatistics presets at D=4") {
    for (int n = 1; n <= 2; ++n) {
        {
            auto p = parafermionic(n);
            const auto r = check_hopf_axioms(Quotient(p, 4), parafermionic_maps(p));
            CHECK(r.checks.size() == 5);
            require_all_pass(r);
        }
        {
            auto p = parabosonic(n);
            const auto r = check_hopf_axioms(Quotient(p, 4), parabosonic_maps(p));
            require_all_pass(r);
            CHECK(r.find(axiom::antipode)->instances == static_cast<std::size_t>(1 + 2 * n + 4 * n * n + 100));
        }
    }
}

TEST_CASE("antipode axiom on b1+ in the bosonised algebra") {
    const Algebra g = resolve_preset("pbg:1");
    const Quotient q(g.presentation, 3);
    const Element b = q.gen("b1+"), gg = q.gen("g");
    const Element lhs = apply_antipode(b, g.maps) + apply_antipode(gg, g.maps) * b;
    CHECK(q.normal_form(lhs).is_zero());
    CHECK(q.normal_form(b * gg + gg * b).is_zero());
}

TEST_CASE("corrupted S(g) flags exactly the antipode axiom") {
    const Algebra g = resolve_preset("pbg:1");
    StructureMaps bad = g.maps;
    const int gid = *g.presentation->alphabet()->find("g");
    bad.set_antipode(gid, -g.presentation->generator("g"));
    const auto r = check_hopf_axioms(Quotient(g.presentation, 4), bad);
    for (const auto& c : r.checks) {
        INFO(c.name);
        CHECK(c.passed == (c.name != axiom::antipode));
    }
    CHECK_FALSE(r.find(axiom::antipode)->witness.empty());
}

TEST_CASE("instances beyond D are re-evaluated at a raised degree") {
    const Algebra k = resolve_preset("pbk:1");
    HopfCheckOptions opt;
    auto r = check_hopf_axioms(Quotient(k.presentation, 4), k.maps, opt);
    require_all_pass(r);
    CHECK(r.find(axiom::antipode)->escalated > 0);

    opt.escalation_cap = 4;
    r = check_hopf_axioms(Quotient(k.presentation, 4), k.maps, opt);
    CHECK(r.find(axiom::antipode)->overflows > 0);
    CHECK(r.find(axiom::antipode)->passed);
}

TEST_CASE("sampling is deterministic") {
    auto a = parabosonic(2)->alphabet();
    SampleOptions opt;
    const auto x = random_elements(a, opt);
    const auto y = random_elements(a, opt);
    REQUIRE(x == y);
    opt.seed = 1;
    CHECK_FALSE(random_elements(a, opt) == x);
    for (const auto& e : x) {
        REQUIRE(e.degree() <= 3);
        REQUIRE(!e.terms().empty());
        REQUIRE(e.terms().size() <= 3);
    }
}
