#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "sympair/combinat.hpp"
#include "sympair/verify.hpp"

namespace {

using sympair::Bipartition;
using sympair::CyclicCharacter;
using sympair::Partition;

std::vector<int> parts(const Partition& p) { return p.parts; }

TEST_SUITE("combinat") {

TEST_CASE("partitions of 4 in reverse-lexicographic order") {
  const auto all = sympair::partitions_of(4);
  REQUIRE(all.size() == 5);
  CHECK(parts(all[0]) == std::vector<int>{4});
  CHECK(parts(all[1]) == std::vector<int>{3, 1});
  CHECK(parts(all[2]) == std::vector<int>{2, 2});
  CHECK(parts(all[3]) == std::vector<int>{2, 1, 1});
  CHECK(parts(all[4]) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition counts match the pentagonal recurrence") {
  const auto result = sympair::check_partition_recurrence(20);
  INFO(result.detail);
  CHECK(result.pass);
}

TEST_CASE("partition normal form is enforced") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition().empty());
}

TEST_CASE("transpose on hand examples and as involution") {
  CHECK(parts(sympair::transpose(Partition({4, 2, 1}))) ==
        std::vector<int>{3, 2, 1, 1});
  CHECK(parts(sympair::transpose(Partition({3, 3}))) ==
        std::vector<int>{2, 2, 2});
  CHECK(sympair::transpose(Partition()).empty());
  const auto result = sympair::check_transpose_involution(16);
  INFO(result.detail);
  CHECK(result.pass);
}

TEST_CASE("bipartitions of 2 in canonical order") {
  const auto all = sympair::bipartitions_of(2);
  REQUIRE(all.size() == 5);
  CHECK(all[0] == Bipartition(Partition({2}), Partition()));
  CHECK(all[1] == Bipartition(Partition({1, 1}), Partition()));
  CHECK(all[2] == Bipartition(Partition({1}), Partition({1})));
  CHECK(all[3] == Bipartition(Partition(), Partition({2})));
  CHECK(all[4] == Bipartition(Partition(), Partition({1, 1})));
  CHECK(sympair::bipartitions_of(0).size() == 1);
}

TEST_CASE("euler_phi against a gcd count") {
  CHECK(sympair::euler_phi(1) == 1);
  CHECK(sympair::euler_phi(12) == 4);
  CHECK(sympair::euler_phi(97) == 96);
  for (int m = 1; m <= 100; ++m) {
    std::int64_t brute = 0;
    for (int a = 1; a <= m; ++a) {
      if (std::gcd(a, m) == 1) ++brute;
    }
    CAPTURE(m);
    CHECK(sympair::euler_phi(m) == brute);
  }
}

TEST_CASE("characters of a given order") {
  const auto chars = sympair::characters_of_order(6, 3);
  REQUIRE(chars.size() == 2);
  CHECK(chars[0] == CyclicCharacter(6, 2));
  CHECK(chars[1] == CyclicCharacter(6, 4));
  CHECK(sympair::characters_of_order(6, 4).empty());
  CHECK(sympair::characters_of_order(1, 1) ==
        std::vector<CyclicCharacter>{CyclicCharacter(1, 0)});

  const auto result = sympair::check_character_order_partition(60);
  INFO(result.detail);
  CHECK(result.pass);
}

TEST_CASE("character order classes round-trip through the unit residue") {
  const CyclicCharacter chi(12, 8);  // order 3, residue 2
  CHECK(chi.order() == 3);
  CHECK(chi.primitive_residue() == 2);
  CHECK(CyclicCharacter::from_order_class(12, 3, 2) == chi);
  CHECK(CyclicCharacter::from_order_class(6, 3, 2) == CyclicCharacter(6, 4));
  CHECK(CyclicCharacter(5, 0).primitive_residue() == 0);
  CHECK(CyclicCharacter::from_order_class(5, 1, 0) == CyclicCharacter(5, 0));
  CHECK_THROWS_AS(CyclicCharacter::from_order_class(6, 4, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(CyclicCharacter::from_order_class(6, 3, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(CyclicCharacter(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(CyclicCharacter(0, 0), std::invalid_argument);
}

}  // TEST_SUITE

}  // namespace
