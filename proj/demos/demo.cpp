#include <iostream>

#include "parastat/catalog.hpp"
#include "parastat/expression.hpp"

using namespace parastat;

int main() {
    auto pb = parabosonic(2);
    const Quotient q(pb, 4);
    std::cout << "dim P_B(2) up to degree 4: " << q.dimension() << "\n";

    const Element x = anticommutator(q.gen("b1+"), q.gen("b2-")) * q.gen("b2+");
    std::cout << "{b1+,b2-}b2+ = " << to_string(q.normal_form(x)) << "\n";

    // Bosonise and check the resulting ordinary Hopf algebra.
    const SmashPresentation sp = bosonise(pb, parabosonic_maps(pb));
    const Quotient qg(sp.presentation, 4);
    const Element b = qg.gen("b1+") * qg.gen("b2-");
    std::cout << "Delta(b1+*b2-) = " << to_string(qg.tensor_normal_form(apply_coproduct(b, sp.maps))) << "\n";

    const Report r = check_hopf_axioms(qg, sp.maps);
    for (const auto& c : r.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.instances << ")\n";

    const Value v = evaluate(parse("g*b1+*g", *qg.alphabet()), qg);
    std::cout << "g*b1+*g = " << to_string(v) << "\n";
    return r.passed() ? 0 : 1;
}
