#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sympair/classify.hpp"
#include "sympair/orbits.hpp"
#include "sympair/strata.hpp"
#include "sympair/verify.hpp"

namespace {

using sympair::Bipartition;
using sympair::CharacterSheafLabel;
using sympair::CyclicCharacter;
using sympair::DualStratumLabel;
using sympair::EvenSheaf;
using sympair::LeviDatum;
using sympair::OddSheaf;
using sympair::OrbitalComplex;
using sympair::PairContext;
using sympair::Partition;
using sympair::SignedYoungDiagram;

SignedYoungDiagram dia(const char* text) {
  return sympair::diagram_from_ascii(text);
}

TEST_SUITE("classify") {

TEST_CASE("sheaf counts split by central order") {
  const PairContext ctx(2, 2);
  CHECK(sympair::character_sheaves(ctx, 1).size() == 10);
  CHECK(sympair::character_sheaves(ctx, 2).size() == 5);
  CHECK(sympair::character_sheaves(ctx, 3).empty());
  CHECK(sympair::character_sheaves(ctx, 4).size() == 4);
  CHECK(sympair::all_character_sheaves(ctx).size() == 19);

  const PairContext ctx21(2, 1);
  const auto order_one = sympair::character_sheaves(ctx21, 1);
  CHECK(order_one.size() == 4);
  const CharacterSheafLabel expected{OddSheaf(
      DualStratumLabel(1, 1, dia("1+^1")), Partition({1}),
      CyclicCharacter(1, 0))};
  CHECK(std::count(order_one.begin(), order_one.end(), expected) == 1);
  CHECK(sympair::character_sheaves(ctx21, 3).size() == 2);
  CHECK(sympair::all_character_sheaves(ctx21).size() == 6);
}

TEST_CASE("central order and support flags") {
  const CharacterSheafLabel odd{OddSheaf(DualStratumLabel(3, 0, dia("3+^1")),
                                         Partition(), CyclicCharacter(3, 1))};
  CHECK(sympair::central_order(odd) == 3);
  CHECK(sympair::has_nilpotent_support(odd));

  const CharacterSheafLabel even{
      EvenSheaf(DualStratumLabel(2, 1, SignedYoungDiagram()),
                Bipartition(Partition({1}), Partition()),
                CyclicCharacter(4, 1))};
  CHECK(sympair::central_order(even) == 4);
  CHECK_FALSE(sympair::has_nilpotent_support(even));
}

TEST_CASE("label validation") {
  // psi order must equal the central order.
  CHECK_THROWS_AS(OddSheaf(DualStratumLabel(3, 0, dia("3+^1")), Partition(),
                           CyclicCharacter(3, 0)),
                  std::invalid_argument);
  // tau must be a partition of l.
  CHECK_THROWS_AS(OddSheaf(DualStratumLabel(1, 1, dia("1+^1")),
                           Partition({2}), CyclicCharacter(1, 0)),
                  std::invalid_argument);
  // Even labels demand an empty residue.
  CHECK_THROWS_AS(EvenSheaf(DualStratumLabel(1, 0, dia("2+^1")),
                            Bipartition(), CyclicCharacter(2, 1)),
                  std::invalid_argument);
  // rho must be a bipartition of l.
  CHECK_THROWS_AS(EvenSheaf(DualStratumLabel(2, 1, SignedYoungDiagram()),
                            Bipartition(Partition({2}), Partition()),
                            CyclicCharacter(4, 1)),
                  std::invalid_argument);
  // Complexes pin the character modulus to d_lambda.
  CHECK_THROWS_AS(OrbitalComplex(dia("4+^1"), CyclicCharacter(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("fourier transform on frozen examples") {
  const PairContext ctx(2, 2);

  const OrbitalComplex a(dia("4+^1"), CyclicCharacter(4, 2));
  const CharacterSheafLabel fa{
      EvenSheaf(DualStratumLabel(1, 2, SignedYoungDiagram()),
                Bipartition(Partition({2}), Partition()),
                CyclicCharacter(2, 1))};
  CHECK(sympair::fourier_forward(a) == fa);
  CHECK(sympair::fourier_inverse(fa, ctx) == a);

  const OrbitalComplex b(dia("4+^1"), CyclicCharacter(4, 1));
  const CharacterSheafLabel fb{
      EvenSheaf(DualStratumLabel(2, 1, SignedYoungDiagram()),
                Bipartition(Partition({1}), Partition()),
                CyclicCharacter(4, 1))};
  CHECK(sympair::fourier_forward(b) == fb);
  CHECK(sympair::is_cuspidal(fb, ctx));

  const OrbitalComplex c(dia("2+^1 2-^1"), CyclicCharacter(2, 1));
  const CharacterSheafLabel fc{
      EvenSheaf(DualStratumLabel(1, 2, SignedYoungDiagram()),
                Bipartition(Partition({1}), Partition({1})),
                CyclicCharacter(2, 1))};
  CHECK(sympair::fourier_forward(c) == fc);
  CHECK(sympair::fourier_inverse(fc, ctx) == c);

  const OrbitalComplex d(dia("1+^2 1-^2"), CyclicCharacter(1, 0));
  const CharacterSheafLabel fd{
      OddSheaf(DualStratumLabel(1, 2, SignedYoungDiagram()),
               Partition({1, 1}), CyclicCharacter(2, 0))};
  CHECK(sympair::fourier_forward(d) == fd);
  CHECK(sympair::fourier_inverse(fd, ctx) == d);

  const PairContext ctx21(2, 1);
  const OrbitalComplex e(dia("1+^2 1-^1"), CyclicCharacter(1, 0));
  const CharacterSheafLabel fe{OddSheaf(DualStratumLabel(1, 1, dia("1+^1")),
                                        Partition({1}),
                                        CyclicCharacter(1, 0))};
  CHECK(sympair::fourier_forward(e) == fe);
  CHECK(sympair::fourier_inverse(fe, ctx21) == e);

  // Full-support orbit with a full-order character maps to itself as a
  // nilpotent-support sheaf, psi == chi.
  const OrbitalComplex f(dia("3+^1"), CyclicCharacter(3, 1));
  const CharacterSheafLabel ff{OddSheaf(DualStratumLabel(3, 0, dia("3+^1")),
                                        Partition(), CyclicCharacter(3, 1))};
  CHECK(sympair::fourier_forward(f) == ff);
  CHECK(sympair::fourier_inverse(ff, ctx21) == f);
}

TEST_CASE("fourier transform preserves the character order") {
  const PairContext ctx(3, 3);
  for (int m = 1; m <= 6; ++m)
    for (const auto& complex : sympair::orbital_complexes(ctx, m)) {
      const auto image = sympair::fourier_forward(complex);
      CHECK(sympair::central_order(image) == m);
      CHECK(sympair::fourier_inverse(image, ctx) == complex);
    }
}

TEST_CASE("nilpotent support sheaves") {
  CHECK(sympair::nilpotent_support_sheaves(PairContext(1, 1)).size() == 2);
  CHECK(sympair::nilpotent_support_sheaves(PairContext(2, 1)).size() == 5);
  CHECK(sympair::nilpotent_support_sheaves(PairContext(2, 2)).size() == 6);
  for (const auto& complex : sympair::nilpotent_support_sheaves(PairContext(2, 1))) {
    CHECK(sympair::is_richardson(complex.orbit));
    CHECK(complex.character.order() % 2 == 1);
    CHECK(sympair::has_nilpotent_support(sympair::fourier_forward(complex)));
  }
}

TEST_CASE("cuspidal sheaves of (2,1)") {
  const PairContext ctx(2, 1);
  const auto cuspidals = sympair::cuspidal_sheaves(ctx);
  const std::vector<CharacterSheafLabel> expected = {
      CharacterSheafLabel{OddSheaf(DualStratumLabel(3, 0, dia("3+^1")),
                                   Partition(), CyclicCharacter(3, 1))},
      CharacterSheafLabel{OddSheaf(DualStratumLabel(3, 0, dia("3+^1")),
                                   Partition(), CyclicCharacter(3, 2))},
  };
  CHECK(cuspidals == expected);
  for (const auto& label : cuspidals) CHECK(sympair::is_cuspidal(label, ctx));

  const CharacterSheafLabel trivial_support{OddSheaf(
      DualStratumLabel(1, 0, dia("3+^1")), Partition(), CyclicCharacter(3, 0))};
  CHECK_FALSE(sympair::is_cuspidal(trivial_support, ctx));
}

TEST_CASE("cuspidal counts at small rank") {
  CHECK(sympair::cuspidal_sheaves(PairContext(1, 0)).size() == 1);
  CHECK(sympair::cuspidal_sheaves(PairContext(1, 1)).size() == 3);
  CHECK(sympair::cuspidal_sheaves(PairContext(2, 2)).size() == 4);
  CHECK(sympair::cuspidal_sheaves(PairContext(3, 1)).empty());
  CHECK(sympair::cuspidal_sheaves(PairContext(3, 3)).size() == 6);
}

TEST_CASE("levi datum of a richardson orbit") {
  {
    const auto levi = sympair::levi_for_nilpotent_support(dia("2+^1 1-^1"), 1);
    CHECK(levi.l_sequence == std::vector<int>{1, 2});
    CHECK(levi.block_sizes == std::vector<int>{1, 2});
    CHECK(levi.sign_sequence == std::vector<int>{1, -1});
    CHECK(levi.theta_blocks ==
          std::vector<std::pair<int, int>>{{1, 0}, {0, 2}});
    CHECK(levi.source_orbits ==
          std::vector<SignedYoungDiagram>{dia("1+^1"), dia("1-^2")});
    CHECK_FALSE(levi.whole_group());
  }
  {
    const auto levi = sympair::levi_for_nilpotent_support(dia("6+^2"), 3);
    CHECK(levi.l_sequence == std::vector<int>{2, 2});
    CHECK(levi.block_sizes == std::vector<int>{6, 6});
    CHECK(levi.sign_sequence == std::vector<int>{1, -1});
    CHECK(levi.theta_blocks ==
          std::vector<std::pair<int, int>>{{4, 2}, {2, 4}});
    CHECK(levi.source_orbits ==
          std::vector<SignedYoungDiagram>{dia("3+^2"), dia("3-^2")});
  }
  {
    const auto levi = sympair::levi_for_nilpotent_support(dia("3+^1 2-^2"), 1);
    CHECK(levi.l_sequence == std::vector<int>{1, 3, 3});
    CHECK(levi.sign_sequence == std::vector<int>{1, -1, 1});
    CHECK(levi.theta_blocks ==
          std::vector<std::pair<int, int>>{{1, 0}, {0, 3}, {3, 0}});
    int plus = 0;
    int minus = 0;
    for (const auto& [a, b] : levi.theta_blocks) {
      plus += a;
      minus += b;
    }
    CHECK(plus == 4);
    CHECK(minus == 3);
  }
  {
    const auto levi = sympair::levi_for_nilpotent_support(dia("1+^3"), 1);
    CHECK(levi.whole_group());
    CHECK(levi.block_sizes == std::vector<int>{3});
    CHECK(levi.source_orbits == std::vector<SignedYoungDiagram>{dia("1+^3")});
  }
  CHECK_THROWS_AS(sympair::levi_for_nilpotent_support(dia("2+^1 2-^1"), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(sympair::levi_for_nilpotent_support(dia("3+^1"), 2),
                  std::invalid_argument);
}

TEST_CASE("induction data on frozen examples") {
  {
    const PairContext ctx(2, 2);
    const CharacterSheafLabel label{
        EvenSheaf(DualStratumLabel(1, 2, SignedYoungDiagram()),
                  Bipartition(Partition({2}), Partition()),
                  CyclicCharacter(2, 1))};
    const auto datum = sympair::induction_datum_for_sheaf(label, ctx);
    REQUIRE(datum.has_value());
    CHECK(datum->block_sizes == std::vector<int>{2, 2});
    CHECK(datum->theta_blocks ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});
    CHECK(datum->source_orbits ==
          std::vector<SignedYoungDiagram>{dia("1+^1 1-^1"), dia("1+^1 1-^1")});
    CHECK(datum->l_sequence == std::vector<int>{2, 2});
    CHECK(datum->sign_sequence.empty());
  }
  {
    const PairContext ctx(2, 1);
    const CharacterSheafLabel label{OddSheaf(
        DualStratumLabel(1, 1, dia("1+^1")), Partition({1}),
        CyclicCharacter(1, 0))};
    const auto datum = sympair::induction_datum_for_sheaf(label, ctx);
    REQUIRE(datum.has_value());
    CHECK(datum->block_sizes == std::vector<int>{2, 1});
    CHECK(datum->theta_blocks ==
          std::vector<std::pair<int, int>>{{1, 1}, {1, 0}});
    CHECK(datum->source_orbits ==
          std::vector<SignedYoungDiagram>{dia("1+^1 1-^1"), dia("1+^1")});
    CHECK(datum->l_sequence == std::vector<int>{2, 1});
  }
  {
    // Cuspidal labels are exactly the ones with no induction datum.
    const PairContext ctx(1, 1);
    const CharacterSheafLabel label{
        EvenSheaf(DualStratumLabel(1, 1, SignedYoungDiagram()),
                  Bipartition(Partition({1}), Partition()),
                  CyclicCharacter(2, 1))};
    CHECK(sympair::is_cuspidal(label, ctx));
    CHECK_FALSE(sympair::induction_datum_for_sheaf(label, ctx).has_value());
  }
  {
    // Residue with a single repeated row: the alternating construction would
    // collapse to the whole group, so the datum splits off one row instead.
    const PairContext ctx(2, 0);
    const CharacterSheafLabel label{OddSheaf(
        DualStratumLabel(1, 0, dia("1+^2")), Partition(),
        CyclicCharacter(1, 0))};
    const auto datum = sympair::induction_datum_for_sheaf(label, ctx);
    REQUIRE(datum.has_value());
    CHECK(datum->block_sizes == std::vector<int>{1, 1});
    CHECK(datum->theta_blocks ==
          std::vector<std::pair<int, int>>{{1, 0}, {1, 0}});
    CHECK(datum->source_orbits ==
          std::vector<SignedYoungDiagram>{dia("1+^1"), dia("1+^1")});
    CHECK(datum->l_sequence == std::vector<int>{1, 1});
    CHECK(datum->sign_sequence.empty());
  }
  {
    const PairContext ctx(4, 2);
    const CharacterSheafLabel label{OddSheaf(
        DualStratumLabel(3, 0, dia("3+^2")), Partition(),
        CyclicCharacter(3, 1))};
    const auto datum = sympair::induction_datum_for_sheaf(label, ctx);
    REQUIRE(datum.has_value());
    CHECK(datum->block_sizes == std::vector<int>{3, 3});
    CHECK(datum->theta_blocks ==
          std::vector<std::pair<int, int>>{{2, 1}, {2, 1}});
    CHECK(datum->source_orbits ==
          std::vector<SignedYoungDiagram>{dia("3+^1"), dia("3+^1")});
    CHECK(datum->l_sequence == std::vector<int>{1, 1});
  }
}

TEST_CASE("no duplicate labels in the full classification") {
  const auto sheaves = sympair::all_character_sheaves(PairContext(3, 3));
  const std::set<CharacterSheafLabel> unique(sheaves.begin(), sheaves.end());
  CHECK(unique.size() == sheaves.size());
}

TEST_CASE("swept classification invariants") {
  const std::vector<sympair::CheckRecord> results = {
      sympair::check_counting_identity(10),
      sympair::check_bijection_round_trip(10),
      sympair::check_nilpotent_support_consistency(10),
      sympair::check_cuspidal_counts(10),
      sympair::check_cuspidal_not_induced(8),
      sympair::check_levi_laws(10),
  };
  for (const auto& result : results) {
    INFO(result.check, ": ", result.detail);
    CHECK(result.pass);
  }
}

}  // TEST_SUITE

}  // namespace
