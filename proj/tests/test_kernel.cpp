#include <catch_amalgamated.hpp>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "parastat/kernel.hpp"
#include "parastat/presets.hpp"

using namespace parastat;

namespace {

AlphabetPtr bosons(int n) { return parabosonic(n)->alphabet(); }

Element b(const AlphabetPtr& a, int i, Sign s) { return Element::generator(a, mode_id(i, s)); }

} // namespace

TEST_CASE("scalar stays in lowest terms") {
    const Scalar x = make_scalar(6, -4);
    CHECK(x.get_num() == -3);
    CHECK(x.get_den() == 2);
    CHECK(to_string(x) == "-3/2");
    CHECK_THROWS_AS(make_scalar(1, 0), InvalidArgument);
}

TEST_CASE("scalar addition matches a cpp_int oracle on 1000 pairs") {
    using boost::multiprecision::cpp_int;
    std::mt19937_64 rng(0x5EED);
    auto draw = [&] {
        std::int64_t v = static_cast<std::int64_t>(rng() % 2000000001ULL) - 1000000000;
        return v;
    };
    for (int k = 0; k < 1000; ++k) {
        const std::int64_t a = draw(), c = draw();
        std::int64_t bden = draw(), dden = draw();
        if (bden == 0)
            bden = 7;
        if (dden == 0)
            dden = 11;
        const Scalar got = make_scalar(a, bden) + make_scalar(c, dden);

        cpp_int num = cpp_int(a) * dden + cpp_int(c) * bden;
        cpp_int den = cpp_int(bden) * dden;
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const cpp_int g = gcd(num < 0 ? cpp_int(-num) : num, den);
        if (g != 0) {
            num /= g;
            den /= g;
        }
        if (num == 0)
            den = 1;
        REQUIRE(got.get_num().get_str() == num.str());
        REQUIRE(got.get_den().get_str() == den.str());
    }
}

TEST_CASE("generator invariants") {
    CHECK_THROWS_AS(Generator(Family::g, Sign::plus, std::nullopt, Parity::even), InvalidArgument);
    CHECK_THROWS_AS(Generator(Family::K, Sign::none, std::nullopt, Parity::even), InvalidArgument);
    CHECK_THROWS_AS(Generator(Family::K, Sign::plus, 1, Parity::even), InvalidArgument);
    CHECK_THROWS_AS(Generator(Family::b, Sign::plus, std::nullopt, Parity::odd), InvalidArgument);
    CHECK(Generator::boson(2, Sign::minus).token() == "b2-");
    CHECK(Generator::twist(Sign::plus).token() == "K+");
    CHECK(Generator::involution().token() == "g");
}

TEST_CASE("word parity is additive") {
    auto a = bosons(2);
    for (const auto& u : detail::words_up_to(a->size(), 3))
        for (const auto& v : detail::words_up_to(a->size(), 2))
            REQUIRE(parity_of(u + v, *a) == (parity_of(u, *a) + parity_of(v, *a)));
    CHECK(parity_of(Word(), *a) == Parity::even);
}

TEST_CASE("multiply") {
    auto a = bosons(2);
    const Element p1 = b(a, 1, Sign::plus), m1 = b(a, 1, Sign::minus), p2 = b(a, 2, Sign::plus);
    CHECK(to_string(p1 * m1) == "b1+*b1-");
    CHECK(to_string((p1 + p2) * m1) == "b1+*b1- + b2+*b1-");
    const Element x = Scalar(3) * p1 * m1 - p2 + Element::scalar(a, 2);
    CHECK(Element::unit(a) * x == x);
    CHECK(x * Element::unit(a) == x);
    auto other = parafermionic(1)->alphabet();
    CHECK_THROWS_AS(p1 * Element::generator(other, 0), AlphabetMismatch);
}

TEST_CASE("commutator and anticommutator") {
    auto a = bosons(1);
    const Element p = b(a, 1, Sign::plus), m = b(a, 1, Sign::minus);
    CHECK(commutator(p, p).is_zero());
    CHECK(to_string(anticommutator(p, m)) == "b1+*b1- + b1-*b1+");
    const Element x = p * m - Scalar(2) * m;
    CHECK(commutator(x, Element::unit(a)).is_zero());
}

TEST_CASE("braided tensor product") {
    auto a = bosons(2);
    const Element one = Element::unit(a);
    const Element p1 = b(a, 1, Sign::plus), p2 = b(a, 2, Sign::plus), m2 = b(a, 2, Sign::minus);
    CHECK(braided_tensor_multiply(TensorElement::of(one, p1), TensorElement::of(p2, one)) ==
          Scalar(-1) * TensorElement::of(p2, p1));
    const TensorElement u = TensorElement::of(p1 * m2, p2);
    CHECK(braided_tensor_multiply(TensorElement::unit(a, 2), u) == u);
    CHECK(braided_tensor_multiply(TensorElement::of(one, p1), TensorElement::of(p2 * m2, one)) ==
          TensorElement::of(p2 * m2, p1));
    CHECK_THROWS_AS(TensorElement(a, 4), RankError);
    CHECK_THROWS_AS(braided_tensor_multiply(TensorElement::unit(a, 3), TensorElement::unit(a, 3)), RankError);
}

TEST_CASE("plain tensor product") {
    auto a = bosons(2);
    const Element one = Element::unit(a);
    const Element p1 = b(a, 1, Sign::plus), p2 = b(a, 2, Sign::plus);
    CHECK(plain_tensor_multiply(TensorElement::of(one, p1), TensorElement::of(p2, one)) == TensorElement::of(p2, p1));
    const TensorElement t = TensorElement::of(p1, p2, p1 * p2);
    CHECK(plain_tensor_multiply(TensorElement::unit(a, 3), t) == t);
    CHECK_THROWS_AS(plain_tensor_multiply(TensorElement::unit(a, 2), t), RankError);
}

TEST_CASE("braided and plain products agree when every crossing is even") {
    auto a = bosons(2);
    const auto words = detail::words_up_to(a->size(), 2);
    for (const auto& w1 : words)
        for (const auto& w2 : words)
            for (const auto& w3 : words)
                for (const auto& w4 : words) {
                    const TensorElement s = TensorElement::of(Element::word(a, w1), Element::word(a, w2));
                    const TensorElement t = TensorElement::of(Element::word(a, w3), Element::word(a, w4));
                    const bool even = parity_of(w2, *a) == Parity::even || parity_of(w3, *a) == Parity::even;
                    REQUIRE((braided_tensor_multiply(s, t) == plain_tensor_multiply(s, t)) == even);
                }
}

TEST_CASE("braided tensor product is associative up to degree 3") {
    auto a = bosons(1);
    const auto words = detail::words_up_to(a->size(), 3);
    std::vector<TensorElement> slots;
    for (const auto& w1 : words)
        for (const auto& w2 : words)
            if (w1.degree() + w2.degree() <= 3)
                slots.push_back(TensorElement::of(Element::word(a, w1), Element::word(a, w2)));
    std::size_t count = 0;
    for (std::size_t i = 0; i < slots.size(); i += 3)
        for (std::size_t j = 1; j < slots.size(); j += 4)
            for (std::size_t k = 2; k < slots.size(); k += 5) {
                const auto& x = slots[i];
                const auto& y = slots[j];
                const auto& z = slots[k];
                REQUIRE(braided_tensor_multiply(braided_tensor_multiply(x, y), z) ==
                        braided_tensor_multiply(x, braided_tensor_multiply(y, z)));
                ++count;
            }
    CHECK(count > 1000);
}

TEST_CASE("symmetric braiding") {
    auto a = bosons(2);
    const Element one = Element::unit(a);
    const Element p1 = b(a, 1, Sign::plus), p2 = b(a, 2, Sign::plus);
    CHECK(braiding(p1, p2) == Scalar(-1) * TensorElement::of(p2, p1));
    const Element x = p1 * p2 - Scalar(3) * p2 * p1;
    CHECK(braiding(one, x) == TensorElement::of(x, one));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Element u = Element::generator(a, i), v = Element::generator(a, j);
            REQUIRE(braiding(braiding(u, v)) == TensorElement::of(u, v));
        }
    CHECK_THROWS_AS(braiding(p1 + p1 * p2, p2), HomogeneityError);
}

TEST_CASE("printing") {
    auto a = bosons(1);
    const Element p = b(a, 1, Sign::plus), m = b(a, 1, Sign::minus);
    CHECK(to_string(Element(a)) == "0");
    CHECK(to_string(Element::unit(a)) == "1");
    CHECK(to_string(Scalar(-2) * m) == "-2*b1-");
    CHECK(to_string(Scalar(1, 2) * p * m - m + Element::scalar(a, 3)) == "3 - b1- + 1/2*b1+*b1-");
    CHECK(to_string(TensorElement::of(p, Element::unit(a)) - Scalar(2) * TensorElement::of(m, p)) ==
          "b1+ ox 1 - 2*b1- ox b1+");
}
