#include <doctest.h>

#include "interdec/poset.hpp"
#include "support.hpp"

using namespace interdec;
using testing_support::Rng;

namespace {

// 0 < 1, 0 < 1'.
FinitePoset vee() { return FinitePoset::from_generators({"0", "1", "1'"}, {{"0", "1"}, {"0", "1'"}}); }

// a, b both below c and d; no meet for (c, d).
FinitePoset bowtie() {
  return FinitePoset::from_generators({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

}  // namespace

TEST_CASE("relation validation names the broken axiom") {
  const auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const PosetError& e) {
      return e.kind();
    }
    FAIL("no error");
    return PosetError::Kind::kShape;
  };
  CHECK(kind_of([] { FinitePoset::from_relation({"a", "b"}, {{true, false}, {false, false}}); }) ==
        PosetError::Kind::kReflexivity);
  CHECK(kind_of([] { FinitePoset::from_relation({"a", "b"}, {{true, true}, {true, true}}); }) ==
        PosetError::Kind::kAntisymmetry);
  CHECK(kind_of([] {
          FinitePoset::from_relation({"a", "b", "c"},
                                     {{true, true, false}, {false, true, true}, {false, false, true}});
        }) == PosetError::Kind::kTransitivity);
  CHECK(kind_of([] { FinitePoset::from_generators({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) ==
        PosetError::Kind::kAntisymmetry);
  CHECK(kind_of([] { FinitePoset::from_generators({"a"}, {{"a", "z"}}); }) == PosetError::Kind::kUnknownElement);
  CHECK_THROWS_AS(FinitePoset::from_generators({"a", "a"}, {}), PosetError);
}

TEST_CASE("down-sets, covers and meets") {
  const FinitePoset p = vee();
  CHECK(p.down_set(1) == ElementSet{0, 1});
  CHECK(p.up_set(0) == ElementSet{0, 1, 2});
  CHECK(p.covers(0, 1));
  CHECK_FALSE(p.covers(1, 2));
  CHECK(p.meet(1, 2) == std::optional<std::size_t>{0});
  CHECK(p.is_meet_semilattice());
  CHECK(p.bottom() == std::optional<std::size_t>{0});
  CHECK(p.is_lower_set(std::vector<std::size_t>{0, 2}));
  CHECK_FALSE(p.is_lower_set(std::vector<std::size_t>{1}));

  const FinitePoset q = bowtie();
  CHECK_FALSE(q.meet(2, 3));
  CHECK_FALSE(q.is_meet_semilattice());
  CHECK_FALSE(q.bottom());
}

TEST_CASE("Moebius values on small posets") {
  SUBCASE("chain") {
    const MobiusTable mu(FinitePoset::chain(4));
    CHECK(mu.value(3, 3) == 1);
    CHECK(mu.value(3, 2) == -1);
    CHECK(mu.value(3, 1) == 0);
    CHECK(mu.value(1, 3) == 0);
  }
  SUBCASE("boolean lattice on two atoms") {
    const MobiusTable mu(FinitePoset::from_generators({"0", "x", "y", "xy"},
                                                      {{"0", "x"}, {"0", "y"}, {"x", "xy"}, {"y", "xy"}}));
    CHECK(mu.value(3, 0) == 1);
    CHECK(mu.value(3, 1) == -1);
    CHECK(mu.value(1, 0) == -1);
  }
  SUBCASE("bowtie has mu(c, a) = -1 and no cancellation") {
    const MobiusTable mu(bowtie());
    CHECK(mu.value(2, 0) == -1);
    CHECK(mu.value(2, 1) == -1);
  }
  SUBCASE("antichain") {
    const MobiusTable mu(FinitePoset::antichain(3));
    CHECK(mu.value(1, 1) == 1);
    CHECK(mu.value(1, 0) == 0);
  }
}

TEST_CASE("property: recursive Moebius matches zeta-matrix inversion") {
  Rng rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const FinitePoset p = testing_support::random_poset(rng, testing_support::uniform(rng, 1, 8));
    const MobiusTable mu(p);
    const auto oracle = testing_support::mobius_by_zeta_inversion(p);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) CHECK(mu.value(a, b) == oracle[a][b]);
  }
}

TEST_CASE("property: zeta and Moebius transforms are inverse") {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const FinitePoset p = testing_support::random_poset(rng, testing_support::uniform(rng, 1, 7));
    VectorFamily m(p.size(), RatVector(3));
    for (auto& v : m)
      for (auto& x : v) x = testing_support::random_rat(rng);
    CHECK(zeta_apply(p, mobius_apply(p, m)) == m);
    CHECK(mobius_apply(p, zeta_apply(p, m)) == m);
  }
}

TEST_CASE("restriction and augmentation") {
  const FinitePoset p = vee();
  const FinitePoset r = p.restrict(std::vector<std::size_t>{0, 2});
  CHECK(r.names() == std::vector<std::string>{"0", "1'"});
  CHECK(r.leq(0, 1));
  const AugmentedPoset aug = augment(p);
  CHECK(aug.poset.size() == 4);
  CHECK(aug.poset.name(aug.top) == kTopName);
  for (std::size_t a = 0; a < 3; ++a) CHECK(aug.poset.less(a, aug.top));
}

TEST_CASE("W-space collapses elements with the same trace on B") {
  const FinitePoset p = vee();
  // B = {0}: every element sees {0}, so W is the constants.
  const Subspace w = w_space(p, std::vector<std::size_t>{0});
  CHECK(w.dim() == 1);
  // B = everything: no identification.
  CHECK(w_space(p, std::vector<std::size_t>{0, 1, 2}).dim() == 3);
  CHECK_THROWS_AS(w_space(p, std::vector<std::size_t>{1}), PosetError);
  CHECK(w_space_membership(p, std::vector<std::size_t>{0, 1},
                           VectorFamily{{make_rat(1)}, {make_rat(2)}, {make_rat(1)}}));
  CHECK_FALSE(w_space_membership(p, std::vector<std::size_t>{0, 1},
                                 VectorFamily{{make_rat(1)}, {make_rat(2)}, {make_rat(3)}}));
}
