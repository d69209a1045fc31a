#include "cb2/partition.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using cb2::Bipartition;
using cb2::ContentMultiset;
using cb2::DPartition;
using cb2::Partition;

TEST_CASE("partition normalization") {
    CHECK(Partition{{0, 0, 1, 2}}.parts() == std::vector<int>{1, 2});
    CHECK(Partition{{3, 1, 2}}.parts() == std::vector<int>{1, 2, 3});
    CHECK(Partition{}.empty());
    CHECK(Partition{{2, 3}}.size() == 5);
    CHECK_THROWS_AS(Partition{{-1}}, std::invalid_argument);
}

TEST_CASE("part_at places nonzero parts at the top indices") {
    const Partition p{{1, 1, 2}};
    CHECK(p.part_at(0, 0) == 2);
    CHECK(p.part_at(0, -1) == 1);
    CHECK(p.part_at(0, -2) == 1);
    CHECK(p.part_at(0, -3) == 0);
    CHECK_THROWS_AS(p.part_at(0, 1), std::out_of_range);
}

TEST_CASE("partition counts") {
    CHECK(cb2::partitions_of(0).size() == 1);
    CHECK(cb2::partitions_of(3).size() == 3);
    CHECK(cb2::partitions_of(6).size() == 11);
    CHECK(cb2::partitions_of(10).size() == 42);
}

TEST_CASE("bipartition enumeration counts and order") {
    CHECK(cb2::enumerate_bipartition_shapes(0).size() == 1);
    CHECK(cb2::enumerate_bipartition_shapes(2).size() == 5);
    CHECK(cb2::enumerate_bipartition_shapes(5).size() == 36);

    const auto bps = cb2::enumerate_bipartitions(2, 0, 1);
    REQUIRE(bps.size() == 5);
    CHECK(bps.front() == Bipartition{Partition{}, Partition{{1, 1}}, 0, 1});
    CHECK(bps.back() == Bipartition{Partition{{2}}, Partition{}, 0, 1});
    for (std::size_t i = 1; i < bps.size(); ++i) CHECK(bps[i - 1] < bps[i]);
}

TEST_CASE("d-partition enumeration counts") {
    CHECK(cb2::enumerate_dpartitions(3, {0}).size() == 3);
    CHECK(cb2::enumerate_dpartitions(2, {1, 0}).size() == 5);
    CHECK(cb2::enumerate_dpartitions(2, {0, 0, 0}).size() == 9);
}

TEST_CASE("charged cell content") {
    CHECK(cell_content(DPartition{{Partition{}, Partition{}}, {3, 0}}).empty());

    // single cell in component s carries its charge
    const DPartition one_cell{{Partition{{1}}, Partition{}}, {5, 0}};
    ContentMultiset expected;
    expected.add(5);
    CHECK(cell_content(one_cell) == expected);

    // the two filled diagrams of the degree-9 table example, charges (5, 3)
    const Bipartition bp{Partition{{2, 3}}, Partition{{1, 1, 2}}, 3, 2};
    ContentMultiset top_and_bottom;
    for (int value : {4, 5, 5, 6, 7, 1, 2, 3, 4}) top_and_bottom.add(value);
    CHECK(cell_content(bp) == top_and_bottom);
}

TEST_CASE("sl weight of the degree-6 block anchor") {
    // ((0,1,2),(1,2)) at r = 1: Lambda_k + Lambda_{k+1} minus
    // alpha_{k-1} + 2 alpha_k + 2 alpha_{k+1} + alpha_{k+2}
    const Bipartition bp{Partition{{1, 2}}, Partition{{1, 2}}, 0, 1};
    const auto weight = sl_weight(bp);
    CHECK(weight.highest_weight == std::vector<int>{0, 1});
    CHECK(weight.alpha_coefficients == std::map<int, int>{{-1, 1}, {0, 2}, {1, 2}, {2, 1}});

    const Bipartition empty{Partition{}, Partition{}, 0, 1};
    CHECK(sl_weight(empty).alpha_coefficients.empty());
}

TEST_CASE("weight equality is content equality") {
    const auto dps = cb2::enumerate_dpartitions(4, {2, 0, -1});
    for (const auto& a : dps)
        for (const auto& b : dps)
            CHECK((weight_of_dpartition(a) == weight_of_dpartition(b)) ==
                  (cell_content(a) == cell_content(b)));
}
