#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sepcm/invariant.hpp"

using namespace sepcm;

namespace {

FiniteMatrixGroup c4_perm(FieldCtxPtr F) {
  Mat m(F.get(), 4, 4);
  for (std::size_t i = 0; i < 4; ++i) m.at((i + 1) % 4, i) = 1;
  return FiniteMatrixGroup::enumerate(F, {m}, {"sigma"});
}

}  // namespace

TEST_CASE("is_invariant") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup C4 = c4_perm(F2);
  auto R = PolyRing::make(F2, {"x1", "x2", "x3", "x4"});
  CHECK(is_invariant(C4, parse_poly(*R, "x1*x2*x3*x4")));
  CHECK_FALSE(is_invariant(C4, parse_poly(*R, "x1")));
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 4)}, {"e"});
  CHECK(is_invariant(triv, parse_poly(*R, "x1 + x2*x3")));
}

TEST_CASE("invariant_basis dimensions match monomial orbit counts") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup C4 = c4_perm(F2);
  auto R = PolyRing::make(F2, {"x1", "x2", "x3", "x4"});
  InvariantBasis d1 = invariant_basis(C4, *R, 1);
  REQUIRE(d1.dim() == 1);
  CHECK(d1.basis[0] == parse_poly(*R, "x1+x2+x3+x4"));
  CHECK(invariant_basis(C4, *R, 2).dim() == 3);

  // oracle: for permutation representations, count monomial orbits directly
  for (std::uint64_t d = 1; d <= 5; ++d) {
    auto monos = monomial_basis(*R, d);
    const GroupElement& sigma = C4.element(C4.generator_indices()[0]);
    std::vector<bool> seen(monos.size(), false);
    std::size_t orbits = 0;
    auto find = [&](const Monomial& m) {
      for (std::size_t i = 0; i < monos.size(); ++i)
        if (monos[i] == m) return i;
      FAIL("monomial not found");
      return std::size_t(0);
    };
    for (std::size_t i = 0; i < monos.size(); ++i) {
      if (seen[i]) continue;
      ++orbits;
      Polynomial cur = Polynomial::monomial(*R, monos[i], FieldElem::one(*F2));
      for (int k = 0; k < 4; ++k) {
        seen[find(cur.leading_monomial())] = true;
        cur = act(sigma, cur);
      }
    }
    CHECK(invariant_basis(C4, *R, d).dim() == orbits);
  }

  // trivial group: the whole graded piece
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 4)}, {"e"});
  CHECK(invariant_basis(triv, *R, 3).dim() == monomial_basis(*R, 3).size());

  // scalar action over F_5: degree-4 invariants are everything
  auto F5 = FieldCtx::make(5);
  Mat z(F5.get(), 2, 2);
  z.at(0, 0) = 2;
  z.at(1, 1) = 2;
  FiniteMatrixGroup C4s = FiniteMatrixGroup::enumerate(F5, {z}, {"sigma"});
  auto R5 = PolyRing::make(F5, {"x", "y"});
  CHECK(invariant_basis(C4s, *R5, 1).dim() == 0);
  CHECK(invariant_basis(C4s, *R5, 2).dim() == 0);
  CHECK(invariant_basis(C4s, *R5, 3).dim() == 0);
  CHECK(invariant_basis(C4s, *R5, 4).dim() == 5);
}

TEST_CASE("transfer") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup C4 = c4_perm(F2);
  auto R = PolyRing::make(F2, {"x1", "x2", "x3", "x4"});
  CHECK(transfer(C4, parse_poly(*R, "x1")) == parse_poly(*R, "x1+x2+x3+x4"));
  // invariant input, |G| = 4, char 2: the transfer is 4f = 0
  CHECK(transfer(C4, parse_poly(*R, "x1*x2*x3*x4")).is_zero());
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 4)}, {"e"});
  Polynomial f = parse_poly(*R, "x1*x2 + x3");
  CHECK(transfer(triv, f) == f);

  // transfers are always invariant
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term> ts;
    for (int t = 0; t < 4; ++t) {
      Monomial m{};
      for (int i = 0; i < 4; ++i) m.e[i] = e(rng);
      ts.push_back({m, FieldElem::one(*F2)});
    }
    CHECK(is_invariant(C4, transfer(C4, Polynomial::from_terms(*R, std::move(ts)))));
  }
}

TEST_CASE("noether separating set") {
  auto F5 = FieldCtx::make(5);
  Mat z(F5.get(), 2, 2);
  z.at(0, 0) = 2;
  z.at(1, 1) = 2;
  FiniteMatrixGroup C4s = FiniteMatrixGroup::enumerate(F5, {z}, {"sigma"});
  auto R5 = PolyRing::make(F5, {"x", "y"});
  auto S = noether_separating_set(C4s, *R5);
  CHECK(S.size() == 5);  // exactly the five degree-4 monomials
  for (const auto& s : S) CHECK(s.degree() == 4);

  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 1)}, {"e"});
  auto R1 = PolyRing::make(F2, {"x"});
  auto S1 = noether_separating_set(triv, *R1);
  REQUIRE(S1.size() == 1);
  CHECK(S1[0] == parse_poly(*R1, "x"));
}
