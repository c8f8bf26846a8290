#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/drinfeld.hpp"

using namespace qschur;

namespace {

LaurentQA q(int e = 1) { return LaurentQA::var_q(e); }
LaurentQA a_(int e = 1) { return LaurentQA::var_a(e); }

Monomial aq(int eq) { return Monomial(1, 1, eq); }

UPoly lin(const Monomial& rho) { return UPoly::from_inverse_roots({rho}); }

} // namespace

TEST_CASE("segment expansion") {
    CHECK(segment_expand({Monomial(1, 1, 0), 1}) ==
          std::vector<Monomial>{aq(0)});
    CHECK(segment_expand({Monomial(1, 1, 0), 2}) ==
          std::vector<Monomial>{aq(-1), aq(1)});
    CHECK(segment_expand({Monomial(1, -1, -1), 2}) ==
          std::vector<Monomial>{Monomial(1, -1, -2), Monomial(1, -1, 0)});
}

TEST_CASE("multisegment canonical form") {
    Segment s1{aq(0), 1}, s2{Monomial(1, 0, 1), 2};
    Multisegment m({s1, s2});
    CHECK(m.segments()[0].length == 2); // long segments first
    CHECK(m.total() == 3);
    CHECK(multisegment_partition(m) == Partition({2, 1}));
    CHECK(multisegment_partition(Multisegment({{aq(0), 3}})) == Partition({3}));
    CHECK(multisegment_partition(Multisegment({{aq(0), 1}, {aq(0), 1}})) ==
          Partition({1, 1}));
    CHECK_THROWS_AS(Multisegment({}), std::invalid_argument);
    // unordered: both input orders canonicalize identically
    CHECK(Multisegment({s1, s2}) == Multisegment({s2, s1}));
}

TEST_CASE("partial map") {
    Multisegment single({{aq(0), 1}});
    DrinfeldTuple Q = partial_map(single, 2);
    CHECK(Q.polys[0] == lin(aq(0)));
    CHECK(Q.polys[1].is_one());
    CHECK_THROWS_AS(partial_map(single, 1), std::domain_error);

    Multisegment two({{aq(2), 1}, {aq(-1), 2}});
    DrinfeldTuple Q4 = partial_map(two, 4);
    CHECK(Q4.polys[0] == lin(aq(2)) * lin(aq(0)));
    CHECK(Q4.polys[1] == lin(aq(-2)));
    CHECK(Q4.polys[2].is_one());
    CHECK(Q4.polys[3].is_one());

    // degree sequence is the dual of the length partition
    Multisegment s({{aq(0), 2}, {aq(3), 2}, {Monomial(1, 0, -2), 1}});
    DrinfeldTuple Qs = partial_map(s, 6);
    Partition dual = dual_partition(multisegment_partition(s));
    std::vector<int> expect = dual.parts();
    expect.resize(6, 0);
    CHECK(Qs.degrees() == expect);
}

TEST_CASE("P from a partition") {
    auto P1 = P_from_lambda(Partition({1}), 2);
    REQUIRE(P1.size() == 1);
    CHECK(P1[0] == lin(aq(0)));

    auto P21 = P_from_lambda(Partition({2, 1}), 3);
    CHECK(P21[0] == lin(aq(2)));
    CHECK(P21[1] == lin(aq(-1)));

    auto P22 = P_from_lambda(Partition({2, 2}), 3);
    CHECK(P22[0].is_one());
    CHECK(P22[1] == lin(aq(-1)) * lin(aq(1)));
    CHECK_THROWS_AS(P_from_lambda(Partition({1, 1, 1}), 2), std::domain_error);
}

TEST_CASE("Q from a partition") {
    DrinfeldTuple Q1 = Q_from_lambda(Partition({1}), 2);
    CHECK(Q1.polys[0] == lin(aq(0)));
    CHECK(Q1.polys[1].is_one());

    DrinfeldTuple Q21 = Q_from_lambda(Partition({2, 1}), 3);
    CHECK(Q21.polys[0] == lin(aq(0)) * lin(aq(2)));
    CHECK(Q21.polys[1] == lin(aq(-2)));
    CHECK(Q21.polys[2].is_one());

    DrinfeldTuple Q11 = Q_from_lambda(Partition({1, 1}), 2);
    CHECK(Q11.polys[0] == lin(aq(0)));
    CHECK(Q11.polys[1] == lin(aq(-2)));

    // empty partition: all entries 1
    DrinfeldTuple Q0 = Q_from_lambda(Partition(), 3);
    for (const auto& p : Q0.polys)
        CHECK(p.is_one());
    CHECK_THROWS_AS(Q_from_lambda(Partition({1, 1, 1}), 2), std::domain_error);
}

TEST_CASE("segment description equals the recursion") {
    for (int r = 0; r <= 6; ++r)
        for (const auto& la : partitions_of(r))
            CHECK(Q_from_segments_cor(la, 7).polys ==
                  Q_from_lambda_recursion(la, 7).polys);
}

TEST_CASE("multisegment of a partition") {
    Multisegment s = s_lambda_a(Partition({2, 1}));
    Multisegment expect({{aq(2), 1}, {aq(-1), 2}});
    CHECK(s == expect);
    CHECK(s_lambda_a(Partition({1})) == Multisegment({{aq(0), 1}}));
    CHECK(multisegment_partition(s_lambda_a(Partition({2, 1}))) ==
          Partition({2, 1}));
    CHECK_THROWS_AS(s_lambda_a(Partition()), std::invalid_argument);
    for (int r = 1; r <= 8; ++r)
        for (const auto& la : partitions_of(r))
            CHECK(multisegment_partition(s_lambda_a(la)) == dual_partition(la));
}

TEST_CASE("central scalars") {
    CHECK(central_scalar(Partition({1}), 1, Sign::plus) == a_());
    CHECK(central_scalar(Partition({2, 1}), 1, Sign::plus) ==
          a_() * (LaurentQA(1) + q(2) + q(-2)));
    // residues a, a q^2, a q^-2 inverted and squared
    CHECK(central_scalar(Partition({2, 1}), 2, Sign::minus) ==
          a_(-2) * (LaurentQA(1) + q(4) + q(-4)));
    for (int r = 1; r <= 6; ++r)
        for (const auto& la : partitions_of(r))
            for (int t = 1; t <= 3; ++t)
                for (Sign sg : {Sign::plus, Sign::minus}) {
                    LaurentQA viares;
                    for (int s = 1; s <= r; ++s)
                        viares += LaurentQA(
                            residue(la, s).pow(sg == Sign::plus ? t : -t));
                    CHECK(central_scalar(la, t, sg) == viares);
                }
}

TEST_CASE("product identity") {
    auto [l1, r1] = product_identity(Partition({1}), 2);
    CHECK(l1 == lin(aq(0)));
    CHECK(l1 == r1);
    auto [l2, r2] = product_identity(Partition({2, 1}), 3);
    CHECK(l2 == lin(aq(0)) * lin(aq(2)) * lin(aq(-2)));
    CHECK(l2 == r2);
    auto [l0, r0] = product_identity(Partition(), 2);
    CHECK(l0.is_one());
    CHECK(r0.is_one());
    for (int r = 0; r <= 6; ++r)
        for (const auto& la : partitions_of(r)) {
            auto [lhs, rhs] = product_identity(la, 7);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("dominance and P recovery") {
    for (int r = 0; r <= 6; ++r)
        for (const auto& la : partitions_of(r)) {
            DrinfeldTuple Q = Q_from_lambda(la, 7);
            CHECK(is_dominant(Q));
            CHECK(P_from_Q(Q) == P_from_lambda(la, 7));
        }
    DrinfeldTuple bad;
    bad.polys = {UPoly::one(), lin(aq(0))};
    CHECK(!is_dominant(bad));
    CHECK_THROWS_AS(P_from_Q(bad), std::domain_error);
    DrinfeldTuple good;
    good.polys = {lin(aq(0)), UPoly::one()};
    CHECK(is_dominant(good));
    CHECK(P_from_Q(good)[0] == lin(aq(0)));
}

TEST_CASE("partial inverse") {
    Multisegment single({{aq(0), 1}});
    CHECK(partial_inverse(partial_map(single, 2)) == single);
    CHECK(partial_inverse(Q_from_lambda(Partition({2, 1}), 4)) ==
          s_lambda_a(Partition({2, 1})));
    Multisegment doubled({{aq(0), 2}, {aq(0), 2}});
    CHECK(partial_inverse(partial_map(doubled, 5)) == doubled);
    // the factored form is required
    DrinfeldTuple stripped = partial_map(single, 2);
    stripped.factored.reset();
    CHECK_THROWS_AS(partial_inverse(stripped), std::invalid_argument);
    // composition of the two maps over n > r
    for (int r = 1; r <= 5; ++r)
        for (const auto& la : partitions_of(r))
            CHECK(partial_map(s_lambda_a(la), 7) == Q_from_lambda(la, 7));
}

TEST_CASE("degree bookkeeping") {
    for (int r = 0; r <= 6; ++r)
        for (const auto& la : partitions_of(r)) {
            int sum = 0;
            for (int d : Q_from_lambda(la, 7).degrees())
                sum += d;
            CHECK(sum == r);
        }
}

TEST_CASE("tuple validation") {
    DrinfeldTuple bad;
    bad.polys = {UPoly::from_coeffs({q(1), a_()})};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    DrinfeldTuple mismatched;
    mismatched.polys = {lin(aq(0))};
    mismatched.factored = {{aq(2)}};
    CHECK_THROWS_AS(mismatched.validate(), std::invalid_argument);
}
