#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/combinatorics.hpp"

using namespace qschur;

namespace {

// hook length count, used only as an oracle here
long hook_count(const Partition& la) {
    long fact = 1;
    for (int k = 2; k <= la.size(); ++k)
        fact *= k;
    long hooks = 1;
    for (int i = 1; i <= la.num_parts(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            hooks *= hook_length(la, i, j);
    return fact / hooks;
}

long binom(int n, int k) {
    long out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * (n - k + i) / i;
    return out;
}

} // namespace

TEST_CASE("composition enumeration") {
    auto cs = enumerate_compositions(2, 2);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].parts == std::vector<int>{2, 0});
    CHECK(cs[1].parts == std::vector<int>{1, 1});
    CHECK(cs[2].parts == std::vector<int>{0, 2});
    CHECK(enumerate_compositions(1, 5).size() == 1);
    CHECK(enumerate_compositions(1, 5)[0].parts == std::vector<int>{5});
    CHECK(enumerate_compositions(3, 0).size() == 1);
    CHECK(enumerate_compositions(3, 0)[0].parts == std::vector<int>{0, 0, 0});
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 5; ++r)
            CHECK(static_cast<long>(enumerate_compositions(n, r).size()) ==
                  binom(r + n - 1, n - 1));
}

TEST_CASE("partition validation and dual") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({3, 1, 0, 0}).num_parts() == 2);

    CHECK(dual_partition(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(dual_partition(Partition({2, 1})) == Partition({2, 1}));
    CHECK(dual_partition(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    for (int r = 0; r <= 8; ++r)
        for (const auto& la : partitions_of(r))
            CHECK(dual_partition(dual_partition(la)) == la);
}

TEST_CASE("dominance order") {
    CHECK(dominance_le(Partition({1, 1, 1, 1}), Partition({2, 1, 1})));
    CHECK(dominance_le(Partition({2, 2}), Partition({3, 1})));
    CHECK(!dominance_le(Partition({3, 1}), Partition({2, 2})));
    CHECK_THROWS_AS(dominance_le(Partition({2}), Partition({1})),
                    std::domain_error);

    for (int r = 1; r <= 6; ++r) {
        auto all = partitions_of(r);
        for (const auto& x : all) {
            CHECK(dominance_le(x, x));
            for (const auto& y : all) {
                if (dominance_le(x, y) && dominance_le(y, x))
                    CHECK(x == y);
                for (const auto& z : all)
                    if (dominance_le(x, y) && dominance_le(y, z))
                        CHECK(dominance_le(x, z));
            }
        }
    }
}

TEST_CASE("superstandard tableau and residues") {
    StdTableau t = superstandard_tableau(Partition({2, 1}));
    CHECK(t.rows == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(superstandard_tableau(Partition({3})).rows ==
          std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(superstandard_tableau(Partition({1, 1})).rows ==
          std::vector<std::vector<int>>{{1}, {2}});

    CHECK(residue(Partition({2, 1}), 2) == Monomial(1, 1, 2));
    CHECK(residue(Partition({2, 1}), 3) == Monomial(1, 1, -2));
    CHECK(residue(Partition({4, 2}), 1) == Monomial(1, 1, 0));
    CHECK_THROWS_AS(residue(Partition({2, 1}), 4), std::domain_error);
}

TEST_CASE("standard tableaux enumeration") {
    CHECK(std_tableaux(Partition({1, 1, 1})).size() == 1);
    CHECK(std_tableaux(Partition({2, 1})).size() == 2);
    for (int r = 1; r <= 6; ++r)
        for (const auto& la : partitions_of(r))
            CHECK(static_cast<long>(std_tableaux(la).size()) == hook_count(la));
}

TEST_CASE("tableau word d(t)") {
    Partition la({2, 1});
    CHECK(d_of(superstandard_tableau(la)).is_identity());
    for (int r = 1; r <= 5; ++r)
        for (const auto& shape : partitions_of(r))
            for (const auto& t : std_tableaux(shape)) {
                Permutation d = d_of(t);
                // applying d entrywise to the superstandard tableau gives t
                StdTableau super = superstandard_tableau(shape);
                StdTableau mapped = super;
                for (auto& row : mapped.rows)
                    for (auto& e : row)
                        e = d(e);
                CHECK(mapped == t);
                CHECK(d.length() ==
                      static_cast<int>(d.reduced_word().size()));
            }
}

TEST_CASE("young subgroups") {
    auto els = young_subgroup(Composition({2, 1}));
    REQUIRE(els.size() == 2);
    CHECK(els[0].is_identity());
    CHECK(els[1] == Permutation(3).times_s(1));

    Permutation w0 = longest_element(Composition({2, 2}));
    CHECK(w0 == Permutation(4).times_s(1).times_s(3));
    CHECK(w0.length() == 2);
    CHECK(longest_element(Composition({1, 1, 1})).is_identity());

    for (int r = 1; r <= 4; ++r)
        for (const auto& la : partitions_of(r)) {
            Composition c = la.as_composition(la.num_parts());
            long order = 1;
            for (int p : c.parts)
                for (int k = 2; k <= p; ++k)
                    order *= k;
            CHECK(static_cast<long>(young_subgroup(c).size()) == order);
            int expected = 0;
            for (int p : c.parts)
                expected += p * (p - 1) / 2;
            CHECK(longest_element(c).length() == expected);
        }
}

TEST_CASE("permutation calculus") {
    Permutation s1 = Permutation(3).times_s(1);
    Permutation s2 = Permutation(3).times_s(2);
    Permutation w = s1.compose(s2); // one-line (2,3,1)
    CHECK(w.one_line() == std::vector<int>{2, 3, 1});
    CHECK(w.length() == 2);
    CHECK(w.reduced_word() == std::vector<int>{1, 2});
    CHECK(w.compose(w.inverse()).is_identity());
    CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), std::invalid_argument);
}
