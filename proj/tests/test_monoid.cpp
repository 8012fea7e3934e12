#include <doctest.h>

#include "dcoset/classify.hpp"
#include "dcoset/errors.hpp"
#include "dcoset/monoid.hpp"
#include "oracles.hpp"

using namespace dcoset;

namespace {

Relation rel(std::vector<std::int32_t> e) { return Relation{std::move(e)}; }

const WeightSystem kCase5(1, {{1}, {-1}, {2}, {-2}});
const WeightSystem kSp4(2, {{1, -1}, {-1, 1}, {1, 1}, {-1, -1}});
const WeightSystem kCase9(2, {{1, 1}, {-1, -1}, {2, 0}, {-2, 0}, {0, 2}, {0, -2}});

}  // namespace

TEST_CASE("is_invariant") {
  CHECK(is_invariant(kCase5, rel({2, 0, 0, 1})));
  CHECK_FALSE(is_invariant(kCase5, rel({1, 0, 0, 0})));
  CHECK(is_invariant(kCase5, rel({0, 0, 0, 0})));
  CHECK_THROWS_AS(is_invariant(kCase5, rel({1, 1})), LengthMismatch);
}

TEST_CASE("hilbert_basis on small systems") {
  SUBCASE("weights 1, -1, 2, -2") {
    const auto hb = hilbert_basis(kCase5);
    std::vector<Relation> want{rel({1, 1, 0, 0}), rel({0, 0, 1, 1}), rel({2, 0, 0, 1}), rel({0, 2, 1, 0})};
    std::sort(want.begin(), want.end());
    CHECK(hb.elements == want);
    CHECK(hb.monoid_rank == oracle::relation_rank(want));
    CHECK(hb.monoid_rank == 3);
    CHECK(hb.quotient_dim == hb.monoid_rank);
  }
  SUBCASE("four weights of the SL_4 / Sp_4 slice") {
    const auto hb = hilbert_basis(kSp4);
    CHECK(hb.elements == std::vector<Relation>{rel({0, 0, 1, 1}), rel({1, 1, 0, 0})});
    CHECK(hb.monoid_rank == 2);
    CHECK(oracle::irreducibles(kSp4, 4).size() == 2);
  }
  SUBCASE("empty system") {
    const auto hb = hilbert_basis(WeightSystem(2, {}));
    CHECK(hb.elements.empty());
    CHECK(hb.monoid_rank == 0);
  }
  SUBCASE("zero weights give degree-one generators") {
    const auto hb = hilbert_basis(WeightSystem(1, {{0}, {1}, {-1}, {0}}));
    CHECK(hb.elements == std::vector<Relation>{rel({0, 0, 0, 1}), rel({0, 1, 1, 0}), rel({1, 0, 0, 0})});
    CHECK(hb.monoid_rank == 3);
  }
  SUBCASE("pointed system has only the zero relation") {
    const auto hb = hilbert_basis(WeightSystem(2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(hb.elements.empty());
  }
  SUBCASE("node budget is enforced") {
    CHECK_THROWS_AS(hilbert_basis(appendix_case(13).system, CompletionOptions{10}), ComputationLimit);
  }
}

TEST_CASE("brute_force_irreducibles") {
  const auto want = hilbert_basis(kCase5).elements;
  CHECK(brute_force_irreducibles(kCase5, 3) == want);
  CHECK(brute_force_irreducibles(kCase5, 0).empty());
  const auto case2 = appendix_case(2).system;
  const auto quadrics = brute_force_irreducibles(case2, 2);
  CHECK(quadrics.size() == 6);
  for (const auto& q : quadrics) CHECK(q.degree() == 2);
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(kCase5, rel({2, 0, 0, 1})));
  CHECK_FALSE(is_irreducible(kCase5, rel({1, 1, 1, 1})));
  CHECK(is_irreducible(kCase9, rel({2, 0, 0, 1, 0, 1})));
  CHECK_THROWS_AS(is_irreducible(kCase5, rel({1, 0, 0, 0})), NotInvariant);
  CHECK_THROWS_AS(is_irreducible(kCase5, rel({0, 0, 0, 0})), ZeroRelation);
}

TEST_CASE("freeness") {
  const auto sp4 = freeness(kSp4);
  CHECK(sp4.free);
  CHECK(sp4.hb_size == 2);
  CHECK(sp4.monoid_rank == 2);
  CHECK_FALSE(sp4.witness);

  const auto c5 = freeness(kCase5);
  CHECK_FALSE(c5.free);
  CHECK(c5.hb_size == 4);
  CHECK(c5.monoid_rank == 3);
  REQUIRE(c5.witness);
  CHECK(is_invariant(kCase5, *c5.witness));

  const auto line = freeness(WeightSystem(1, {{1}, {-1}}));
  CHECK(line.free);
  CHECK(line.hb_size == 1);
  CHECK(line.monoid_rank == 1);
}

TEST_CASE("Relation helpers") {
  CHECK(rel({2, 0, 3}).degree() == 5);
  CHECK(rel({0, 0}).is_zero());
  CHECK(rel({0, 1}) < rel({1, 0}));
}
