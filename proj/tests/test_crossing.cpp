#include <doctest.h>

#include <numeric>

#include "orbitsum/crossing.hpp"

using namespace orbitsum::rootsys;
using namespace orbitsum::criteria;

TEST_CASE("max_crossing frozen values") {
  // all expected values confirmed by brute_force_max_crossing below
  CHECK(max_crossing(MultiplicityPartition({2, 2}), SubsystemShape({2, 2})).value == 4);
  CHECK(max_crossing(MultiplicityPartition({1, 1, 1, 1}), SubsystemShape({2, 2})).value == 0);
  CHECK(max_crossing(MultiplicityPartition({4}), SubsystemShape({3, 1})).value == 6);
  CHECK(max_crossing(MultiplicityPartition({4}), SubsystemShape({2, 2})).value == 8);
  CHECK(max_crossing(MultiplicityPartition({3, 1}), SubsystemShape({2, 2})).value == 4);
  CHECK(max_crossing(MultiplicityPartition({2, 1, 1}), SubsystemShape({2, 2})).value == 2);
  // the central element meets the whole complement: 2c(m-c)
  for (int m = 2; m <= 8; ++m) {
    for (int c = 1; c <= m / 2; ++c) {
      CHECK(max_crossing(MultiplicityPartition({m}), SubsystemShape({m - c, c})).value ==
            2 * c * (m - c));
    }
  }
}

TEST_CASE("min_crossing frozen values") {
  CHECK(min_crossing(MultiplicityPartition({2, 2}), SubsystemShape({2, 2})) == 0);
  CHECK(min_crossing(MultiplicityPartition({2, 2}), SubsystemShape({3, 1})) == 2);
  CHECK(min_crossing(MultiplicityPartition({1, 1, 1}), SubsystemShape({2, 1})) == 0);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(max_crossing(MultiplicityPartition({2, 2}), SubsystemShape({3, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(min_crossing(MultiplicityPartition({3}), SubsystemShape({2, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_max_crossing(MultiplicityPartition({3}), SubsystemShape({2, 2})),
                  std::invalid_argument);
}

TEST_CASE("brute force guard") {
  CHECK_THROWS_AS(
      brute_force_max_crossing(MultiplicityPartition({9}), SubsystemShape({8, 1})),
      std::invalid_argument);
  CHECK(brute_force_max_crossing(MultiplicityPartition({1, 1}), SubsystemShape({1, 1})) == 0);
}

TEST_CASE("optimizer matches brute force for every pair up to m = 6") {
  for (int m = 2; m <= 6; ++m) {
    const auto partitions = enumerate_partitions(m);
    const auto shapes = enumerate_proper_shapes(m);
    for (const auto& p : partitions) {
      for (const auto& s : shapes) {
        CAPTURE(p.parts());
        CAPTURE(s.blocks());
        CHECK(max_crossing(p, s).value == brute_force_max_crossing(p, s));
        CHECK(min_crossing(p, s) == brute_force_min_crossing(p, s));
      }
    }
  }
}

TEST_CASE("witness matrix certifies the reported maximum") {
  for (int m = 2; m <= 7; ++m) {
    for (const auto& p : enumerate_partitions(m)) {
      for (const auto& s : enumerate_proper_shapes(m)) {
        const ArrangementValue av = max_crossing(p, s);

        REQUIRE(av.witness_matrix.size() == static_cast<std::size_t>(s.block_count()));
        int pair_sum = 0;
        for (int row = 0; row < s.block_count(); ++row) {
          REQUIRE(av.witness_matrix[row].size() == static_cast<std::size_t>(p.count()));
          int row_sum = 0;
          for (int a : av.witness_matrix[row]) {
            CHECK(a >= 0);
            row_sum += a;
            pair_sum += a * (a - 1);
          }
          CHECK(row_sum == s.blocks()[row]);
        }
        for (int col = 0; col < p.count(); ++col) {
          int col_sum = 0;
          for (int row = 0; row < s.block_count(); ++row) col_sum += av.witness_matrix[row][col];
          CHECK(col_sum == p.parts()[col]);
        }
        CHECK(av.value == phi_size(p) - pair_sum);

        CHECK(av.value >= 0);
        CHECK(av.value <= phi_size(p));
        CHECK(av.value <= n_psi_size(s));
        CHECK(min_crossing(p, s) <= av.value);
        // complement identity: the two readings of one arrangement add up
        CHECK(av.value + (n_psi_size(s) - av.value) == n_psi_size(s));
      }
    }
  }
}

TEST_CASE("crossing_bound examples") {
  const auto b1 = crossing_bound(MultiplicityPartition({2, 2}), SubsystemShape({2, 2}));
  CHECK(b1.numerator == 4);
  CHECK(b1.denominator == 1);
  CHECK(b1.equality_possible);
  CHECK(b1.attained_by(4));

  const auto b2 = crossing_bound(MultiplicityPartition({2, 1, 1}), SubsystemShape({2, 2}));
  CHECK(b2.numerator == 4);
  CHECK_FALSE(b2.equality_possible);
  CHECK(max_crossing(MultiplicityPartition({2, 1, 1}), SubsystemShape({2, 2})).value == 2);

  const auto b3 = crossing_bound(MultiplicityPartition({1, 1, 1, 1}), SubsystemShape({2, 2}));
  CHECK(b3.numerator == 2);  // 2c(m-c)/m = 8/4
  CHECK(b3.denominator == 1);
  CHECK_FALSE(b3.equality_possible);

  CHECK_THROWS_AS(crossing_bound(MultiplicityPartition({2, 2}), SubsystemShape({2, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("crossing bound holds with equality exactly as labeled") {
  for (int m = 2; m <= 8; ++m) {
    for (const auto& p : enumerate_partitions(m)) {
      for (const auto& s : enumerate_corank_one_shapes(m)) {
        const CrossingBound bound = crossing_bound(p, s);
        const int value = max_crossing(p, s).value;
        CAPTURE(p.parts());
        CAPTURE(s.blocks());
        CHECK(bound.admits(value));
        CHECK(bound.attained_by(value) == bound.equality_possible);
      }
    }
  }
}
