#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qschur/laurent.hpp"
#include "qschur/upoly.hpp"

using namespace qschur;

namespace {

LaurentQA q(int e = 1) { return LaurentQA::var_q(e); }
LaurentQA a(int e = 1) { return LaurentQA::var_a(e); }

LaurentQA random_laurent(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-3, 3);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    LaurentQA out;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        out += LaurentQA::term(make_rat(num(rng), den(rng)), exp(rng), exp(rng));
    return out;
}

UPoly random_upoly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<LaurentQA> coeffs(d + 1);
    for (auto& c : coeffs)
        c = random_laurent(rng, 2);
    return UPoly::from_coeffs(std::move(coeffs));
}

} // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
    Rat x = make_rat(4, -6);
    CHECK(x.get_num() == -2);
    CHECK(x.get_den() == 3);
    Rat z = make_rat(0, 7);
    CHECK(z.get_num() == 0);
    CHECK(z.get_den() == 1);
    CHECK(make_rat(1, 3) + make_rat(1, 6) == make_rat(1, 2));
}

TEST_CASE("laurent arithmetic basics") {
    CHECK(q() + q(-1) == LaurentQA::term(1, 0, 1) + LaurentQA::term(1, 0, -1));
    // (q - q^-1)(q + q^-1) = q^2 - q^-2, expanded by hand
    CHECK((q() - q(-1)) * (q() + q(-1)) == q(2) - q(-2));
    LaurentQA x = a(2) * q(-1) + LaurentQA(3);
    CHECK((x - x).is_zero());
    CHECK(-(-x) == x);
    CHECK(x * LaurentQA(0) == LaurentQA());
}

TEST_CASE("no zero terms are ever stored") {
    LaurentQA x = q() + a();
    LaurentQA y = -q() + a();
    LaurentQA sum = x + y;
    CHECK(sum.terms().size() == 1);
    CHECK(sum == a() * LaurentQA(2));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        LaurentQA x = random_laurent(rng), y = random_laurent(rng),
                  z = random_laurent(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("balanced q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1).is_one());
    CHECK(qint(2) == q() + q(-1));
    CHECK(qint(-3) == -qint(3));
    for (int n = -6; n <= 6; ++n)
        CHECK(qint(n) * (q() - q(-1)) == q(n) - q(-n));
}

TEST_CASE("gaussian binomials") {
    CHECK(qbinom(5, 0).is_one());
    CHECK(qbinom(2, 1) == q() + q(-1));
    CHECK(qbinom(3, 2) == q(2) + LaurentQA(1) + q(-2));
    CHECK(qbinom(4, 2) == q(4) + q(2) + LaurentQA(2) + q(-2) + q(-4));
    CHECK_THROWS_AS(qbinom(2, 3), std::domain_error);
    CHECK_THROWS_AS(qbinom(-1, 0), std::domain_error);
}

TEST_CASE("q-Pascal recurrence, both sides expanded") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            LaurentQA lhs = qbinom(n, m);
            LaurentQA rhs = q(m) * qbinom(n - 1, std::min(m, n - 1));
            if (m > n - 1)
                rhs = LaurentQA();
            rhs += q(m - n) * qbinom(n - 1, m - 1);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("exact division in the laurent ring") {
    CHECK_THROWS_AS(divide_exact(q(), LaurentQA()), std::domain_error);
    CHECK(*divide_exact(LaurentQA(), q()) == LaurentQA());
    CHECK(*divide_exact(q(2) - q(-2), q() - q(-1)) == q() + q(-1));
    CHECK(!divide_exact(q() + LaurentQA(1), q() - LaurentQA(1)));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        LaurentQA x = random_laurent(rng);
        LaurentQA y = random_laurent(rng);
        if (y.is_zero())
            continue;
        auto quot = divide_exact(x * y, y);
        REQUIRE(quot);
        CHECK(*quot == x);
    }
}

TEST_CASE("upoly substitution and arithmetic") {
    // 1 - a u  ->  1 - a q^2 u
    UPoly f = UPoly::from_coeffs({LaurentQA(1), -a()});
    UPoly g = f.substitute_scale(Monomial(1, 0, 2));
    CHECK(g == UPoly::from_coeffs({LaurentQA(1), -(a() * q(2))}));
    CHECK(f + UPoly() == f);
    CHECK((f * UPoly::one()) == f);
    CHECK(UPoly().degree() == -1);
}

TEST_CASE("upoly exact division") {
    UPoly f1 = UPoly::from_coeffs({LaurentQA(1), -a()});
    UPoly f2 = UPoly::from_coeffs({LaurentQA(1), -(a() * q(2))});
    auto quot = exact_divide(f1 * f2, f1);
    REQUIRE(quot);
    CHECK(*quot == f2);
    CHECK(!exact_divide(f1, f2));
    CHECK_THROWS_AS(exact_divide(f1, UPoly()), std::domain_error);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        UPoly f = random_upoly(rng, 4), g = random_upoly(rng, 4);
        if (g.is_zero())
            continue;
        auto h = exact_divide(f * g, g);
        REQUIRE(h);
        CHECK(*h == f);
    }
}

TEST_CASE("polynomials from inverse roots") {
    CHECK(UPoly::from_inverse_roots({}).is_one());
    CHECK(UPoly::from_inverse_roots({Monomial(1, 1, 1)}) ==
          UPoly::from_coeffs({LaurentQA(1), -(a() * q())}));
    // double root at a: 1 - 2 a u + a^2 u^2
    CHECK(UPoly::from_inverse_roots({Monomial(1, 1, 0), Monomial(1, 1, 0)}) ==
          UPoly::from_coeffs({LaurentQA(1), a() * LaurentQA(-2), a(2)}));

    // order independence
    std::vector<Monomial> roots{Monomial(1, 1, 2), Monomial(make_rat(1, 2), 0, -1),
                                Monomial(-3, -1, 0)};
    UPoly base = UPoly::from_inverse_roots(roots);
    std::sort(roots.begin(), roots.end());
    do {
        CHECK(UPoly::from_inverse_roots(roots) == base);
    } while (std::next_permutation(roots.begin(), roots.end()));
}

TEST_CASE("monomial powers and inverses") {
    Monomial m(make_rat(2, 3), 1, -2);
    CHECK(m * m.inverse() == Monomial(1, 0, 0));
    CHECK(m.pow(0) == Monomial(1, 0, 0));
    CHECK(m.pow(-2) == m.inverse() * m.inverse());
    CHECK_THROWS_AS(Monomial(0, 1, 1), std::invalid_argument);
}
