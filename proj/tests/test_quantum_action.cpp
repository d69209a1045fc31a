#include "cb2/quantum_action.hpp"

#include "cb2/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using cb2::Bipartition;
using cb2::FockVector;
using cb2::LaurentPoly;
using cb2::Operator;
using cb2::OpKind;
using cb2::Partition;
using cb2::Symbol;

namespace {

FockVector unit(const Bipartition& bp) {
    FockVector out;
    out.add_term(bp, LaurentPoly{1});
    return out;
}

int occurrences(const Symbol& s, int value) {
    return (s.beta_contains(value) ? 1 : 0) + (s.gamma_contains(value) ? 1 : 0);
}

} // namespace

TEST_CASE("row action of the generators") {
    const std::vector<int> row{1, 2, 4};

    auto f2 = cb2::act_row({OpKind::f, 2}, row, 0);
    REQUIRE(f2.has_value());
    CHECK(f2->first == std::vector<int>{1, 3, 4});
    CHECK(f2->second == LaurentPoly{1});

    CHECK_FALSE(cb2::act_row({OpKind::f, 2}, {1, 3, 4}, 0).has_value()); // j+1 present
    CHECK_FALSE(cb2::act_row({OpKind::f, 3}, row, 0).has_value());       // j absent

    auto t2 = cb2::act_row({OpKind::t, 2}, row, 0);
    CHECK(t2->second == LaurentPoly::v(1));
    CHECK(cb2::act_row({OpKind::t, 1}, row, 0)->second == LaurentPoly{1}); // both j, j+1 present
    CHECK(cb2::act_row({OpKind::t, 3}, row, 0)->second == LaurentPoly::v(-1));
    CHECK(cb2::act_row({OpKind::t_inverse, 3}, row, 0)->second == LaurentPoly::v(1));

    auto e1 = cb2::act_row({OpKind::e, 1}, {2, 4}, 0);
    REQUIRE(e1.has_value());
    CHECK(e1->first == std::vector<int>{1, 4});
    CHECK_FALSE(cb2::act_row({OpKind::e, 3}, {1, 3, 4}, 0).has_value()); // j present

    CHECK_THROWS_AS(cb2::act_row({OpKind::f, 0}, row, 0), cb2::window_violation);
    CHECK_THROWS_AS(cb2::act_row({OpKind::f_divided_square, 2}, row, 0), std::invalid_argument);
}

TEST_CASE("divided square moves a doubled entry with coefficient one") {
    // j - 1 = 1 in both rows, j = 2 in neither: f_1^(2) advances both copies.
    const Bipartition before{Partition{{1}}, Partition{{1}}, 0, 0};
    const Bipartition after{Partition{{2}}, Partition{{2}}, 0, 0};
    const FockVector moved = cb2::act_fock({OpKind::f_divided_square, 1}, unit(before));
    CHECK(moved == unit(after));
}

TEST_CASE("divided square identity across all doubled entries") {
    // Wherever j sits in both rows with j - 1 absent, lowering both copies and
    // applying f_{j-1}^(2) returns the original basis vector with coefficient 1.
    for (int m = 2; m <= 5; ++m)
        for (const auto& s : cb2::enumerate_standard(m, 0, 1)) {
            const auto entries = symbol_content(s);
            for (const auto& [j, count] : entries.counts()) {
                if (count != 2 || s.beta_contains(j - 1) || s.gamma_contains(j - 1)) continue;
                std::vector<int> beta = s.beta(), gamma = s.gamma();
                *std::find(beta.begin(), beta.end(), j) = j - 1;
                *std::find(gamma.begin(), gamma.end(), j) = j - 1;
                std::sort(beta.begin(), beta.end());
                std::sort(gamma.begin(), gamma.end());
                if (j - 1 <= s.floor()) continue;
                const Symbol lowered{beta, gamma, s.floor(), s.k(), s.r()};
                const FockVector image = cb2::act_fock(
                    {OpKind::f_divided_square, j - 1}, unit(bipartition_from_symbol(lowered)));
                CHECK(image == unit(bipartition_from_symbol(s)));
            }
        }
}

TEST_CASE("coproduct split with coefficient v") {
    // f_0 on the empty symbol at r = 0: both rows can advance 0 -> 1.
    const Bipartition empty{Partition{}, Partition{}, 0, 0};
    const FockVector image = cb2::act_fock({OpKind::f, 0}, unit(empty));
    REQUIRE(image.support_size() == 2);
    CHECK(image.coefficient(Bipartition{Partition{}, Partition{{1}}, 0, 0}) == LaurentPoly{1});
    CHECK(image.coefficient(Bipartition{Partition{{1}}, Partition{}, 0, 0}) == LaurentPoly::v(1));
}

TEST_CASE("t action matches the content statistics") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> pick_index(-4, 6);
    for (int r = 0; r <= 2; ++r)
        for (int m = 0; m <= 5; ++m)
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                const Bipartition bp = bipartition_from_symbol(s);
                const int j = pick_index(rng);
                const FockVector image = cb2::act_fock({OpKind::t, j}, unit(bp));
                REQUIRE(image.support_size() == 1);
                const int expected = occurrences(s, j) - occurrences(s, j + 1);
                CHECK(image.coefficient(bp) == LaurentPoly::v(expected));
            }
}

TEST_CASE("commutator of e and f acts by the balanced quantum integer") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> pick_index(-3, 5);
    for (int m = 0; m <= 5; ++m)
        for (const auto& s : cb2::enumerate_standard(m, 0, 1)) {
            const Bipartition bp = bipartition_from_symbol(s);
            const int j = pick_index(rng);
            FockVector ef = cb2::act_fock({OpKind::e, j}, cb2::act_fock({OpKind::f, j}, unit(bp)));
            const FockVector fe = cb2::act_fock({OpKind::f, j}, cb2::act_fock({OpKind::e, j}, unit(bp)));
            FockVector negated;
            for (const auto& [label, coeff] : fe.terms()) negated.add_term(label, -coeff);
            ef += negated;
            const int n = occurrences(s, j) - occurrences(s, j + 1);
            CHECK(ef == unit(bp).scaled(cb2::quantum_integer(n)));
        }
}

TEST_CASE("oracle base case") {
    const Bipartition empty{Partition{}, Partition{}, 1, 2};
    const auto result = cb2::monomial_oracle(empty);
    CHECK(result.word.letters.empty());
    CHECK(result.vector == unit(empty));
}

TEST_CASE("oracle reproduces the first column of the degree-6 block") {
    const Bipartition label{Partition{}, Partition{{3, 3}}, 0, 1};
    const auto result = cb2::monomial_oracle(label);
    CHECK(result.vector == cb2::canonical_vector(label));
    int total = 0;
    for (const auto& [index, exponent] : result.word.letters) total += exponent;
    CHECK(total == 6);
}

TEST_CASE("oracle rejects non-standard input") {
    CHECK_THROWS_AS(cb2::monomial_oracle(Bipartition{Partition{{2}}, Partition{}, 0, 0}),
                    cb2::not_standard);
}

TEST_CASE("oracle equals the closed formula on small degrees") {
    for (int r = 0; r <= 2; ++r)
        for (int m = 0; m <= 5; ++m)
            for (const auto& s : cb2::enumerate_standard(m, 0, r)) {
                const auto result = cb2::monomial_oracle(s);
                CHECK(result.vector == cb2::canonical_vector(s));
                for (const auto& [index, exponent] : result.word.letters) {
                    CHECK(exponent >= 1);
                    CHECK(exponent <= 2);
                }
            }
}

TEST_CASE("oracle words use divided squares where both rows move") {
    // ((1),(1)) is reached from the highest weight vector by one divided square.
    const auto result = cb2::monomial_oracle(Bipartition{Partition{{1}}, Partition{{1}}, 0, 0});
    CHECK(result.word.letters == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("weight check") {
    CHECK(cb2::weight_check(FockVector{}));
    for (int m = 0; m <= 4; ++m)
        for (const auto& s : cb2::enumerate_standard(m, 0, 1))
            CHECK(cb2::weight_check(cb2::canonical_vector(s)));

    FockVector mixed; // contents {0,1} vs {0,0}
    mixed.add_term(Bipartition{Partition{}, Partition{{2}}, 0, 0}, LaurentPoly{1});
    mixed.add_term(Bipartition{Partition{{1}}, Partition{{1}}, 0, 0}, LaurentPoly{1});
    CHECK_FALSE(cb2::weight_check(mixed));
}

TEST_CASE("oracle at a nonzero charge matches the shifted formula") {
    const Bipartition label{Partition{{1}}, Partition{{1, 2}}, 3, 1};
    CHECK(cb2::monomial_oracle(label).vector == cb2::canonical_vector(label));
}
