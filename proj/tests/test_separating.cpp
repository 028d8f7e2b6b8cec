#include <catch2/catch_amalgamated.hpp>

#include "sepcm/separating.hpp"

using namespace sepcm;

namespace {

struct C4Perm {
  FieldCtxPtr F = FieldCtx::make(2);
  FiniteMatrixGroup G;
  PolyRingPtr R;
  C4Perm() : G(make_group()) { R = PolyRing::make(F, {"x1", "x2", "x3", "x4"}); }
  FiniteMatrixGroup make_group() {
    Mat m(F.get(), 4, 4);
    for (std::size_t i = 0; i < 4; ++i) m.at((i + 1) % 4, i) = 1;
    return FiniteMatrixGroup::enumerate(F, {m}, {"sigma"});
  }
  std::vector<Polynomial> cs() const {
    return {parse_poly(*R, "x1+x2+x3+x4"), parse_poly(*R, "x1*x3+x2*x4"),
            parse_poly(*R, "x1*x2+x2*x3+x3*x4+x1*x4"), parse_poly(*R, "x1*x2*x3*x4")};
  }
};

struct C4Scalar {
  FieldCtxPtr F = FieldCtx::make(5);
  FiniteMatrixGroup G;
  PolyRingPtr R;
  C4Scalar() : G(make_group()) { R = PolyRing::make(F, {"x", "y"}); }
  FiniteMatrixGroup make_group() {
    Mat m(F.get(), 2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 2;
    return FiniteMatrixGroup::enumerate(F, {m}, {"sigma"});
  }
};

}  // namespace

TEST_CASE("separates_points") {
  C4Perm fx;
  SeparatingVerdict v = separates_points(fx.G, *fx.R, fx.cs(), 1);
  CHECK(v.passed());

  SeparatingVerdict bad = separates_points(fx.G, *fx.R, {fx.cs()[0]}, 1);
  CHECK(bad.result == SeparatingVerdict::Result::fail);
  REQUIRE(bad.witness_points.has_value());
  // the witness points really take equal values and lie in distinct orbits
  auto to_pt = [&](const std::vector<std::uint32_t>& raw) {
    std::vector<FieldElem> pt;
    for (auto v2 : raw) pt.push_back(FieldElem(fx.F.get(), v2));
    return pt;
  };
  CHECK(fx.cs()[0].evaluate(to_pt(bad.witness_points->first)) ==
        fx.cs()[0].evaluate(to_pt(bad.witness_points->second)));

  CHECK_THROWS_MATCHES(separates_points(fx.G, *fx.R, {parse_poly(*fx.R, "x1")}, 1), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::NotInvariant; }));

  // trivial group, one variable
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 1)}, {"e"});
  auto R1 = PolyRing::make(F2, {"x"});
  CHECK(separates_points(triv, *R1, {parse_poly(*R1, "x")}, 2).passed());
}

TEST_CASE("geometric separating test, scalar C4 over F_5") {
  C4Scalar fx;
  std::vector<Polynomial> four = {parse_poly(*fx.R, "x^4"), parse_poly(*fx.R, "x^3*y"),
                                  parse_poly(*fx.R, "x*y^3"), parse_poly(*fx.R, "y^4")};
  SeparatingVerdict v4 = geometric_separating_test(fx.G, *fx.R, four);
  CHECK(v4.passed());

  std::vector<Polynomial> three = {four[0], four[1], four[3]};
  CHECK(geometric_separating_test(fx.G, *fx.R, three).passed());

  // a deliberately incomplete set fails with a generator witness
  SeparatingVerdict bad = geometric_separating_test(fx.G, *fx.R, {four[0]});
  CHECK(bad.result == SeparatingVerdict::Result::fail);
  CHECK_FALSE(bad.witness_text.empty());

  // point separation follows for e = 1, 2 whenever the geometric test passes
  for (std::uint32_t e = 1; e <= 2; ++e) {
    CHECK(separates_points(fx.G, *fx.R, four, e).passed());
    CHECK(separates_points(fx.G, *fx.R, three, e).passed());
  }

  // adding invariants never breaks a pass
  std::vector<Polynomial> five = four;
  five.push_back(parse_poly(*fx.R, "x^2*y^2"));
  CHECK(geometric_separating_test(fx.G, *fx.R, five).passed());
}

TEST_CASE("noether sets pass the geometric test wherever they fit the caps") {
  C4Scalar fx;
  auto S = noether_separating_set(fx.G, *fx.R);
  CHECK(geometric_separating_test(fx.G, *fx.R, S).passed());

  C4Perm fp;
  auto SP = noether_separating_set(fp.G, *fp.R);
  CHECK(SP.size() == 19);
  CHECK(geometric_separating_test(fp.G, *fp.R, SP, 60).passed());

  auto F2 = FieldCtx::make(2);
  Mat s = parse_matrix(*F2, "[[1,0,1,0,0],[0,1,0,1,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
  Mat t = parse_matrix(*F2, "[[1,0,0,1,0],[0,1,0,0,1],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
  FiniteMatrixGroup K = FiniteMatrixGroup::enumerate(F2, {s, t}, {"sigma", "tau"});
  auto RK = PolyRing::make(F2, {"x1", "x2", "x3", "x4", "x5"});
  auto SK = noether_separating_set(K, *RK);
  CHECK(geometric_separating_test(K, *RK, SK, 60).passed());
}

TEST_CASE("geometric pass implies point separation for e = 1, 2 on the klein set") {
  auto F2 = FieldCtx::make(2);
  Mat s = parse_matrix(*F2, "[[1,0,1,0,0],[0,1,0,1,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
  Mat t = parse_matrix(*F2, "[[1,0,0,1,0],[0,1,0,0,1],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
  FiniteMatrixGroup K = FiniteMatrixGroup::enumerate(F2, {s, t}, {"sigma", "tau"});
  auto RK = PolyRing::make(F2, {"x1", "x2", "x3", "x4", "x5"});
  const char* defs[] = {
      "x3", "x4", "x5",
      "x1^4 + x1^2*x3^2 + x1^2*x3*x4 + x1*x3^2*x4 + x1*x3*x4^2 + x1*x3*x4*x5 + x1*x4^3 + "
      "x2^2*x3^2 + x2*x3^2*x5 + x2*x3*x4^2",
      "x2^4 + x2^2*x4^2 + x2^2*x4*x5 + x2^2*x5^2 + x2*x4^2*x5 + x2*x4*x5^2",
      "x1^2*x4^2 + x1*x3*x4*x5 + x1*x4^3 + x2^2*x3^2 + x2*x3^2*x5 + x2*x3*x4^2",
      "x1*x4^2*x5 + x1*x4*x5^2 + x2^2*x3*x5 + x2^2*x4^2 + x2*x3*x5^2 + x2*x4^3"};
  std::vector<Polynomial> a;
  for (auto d : defs) a.push_back(parse_poly(*RK, d));
  for (std::uint32_t e = 1; e <= 2; ++e) CHECK(separates_points(K, *RK, a, e).passed());
}

TEST_CASE("inseparable closure test") {
  C4Scalar fx;
  std::vector<Polynomial> S = {parse_poly(*fx.R, "x^4"), parse_poly(*fx.R, "x^3*y"),
                               parse_poly(*fx.R, "x*y^3"), parse_poly(*fx.R, "y^4")};
  // S = H passes trivially with m = 0
  InseparableClosureResult same = inseparable_closure_test(*fx.R, S, S, 6, &fx.G);
  CHECK(same.verdict.passed());
  for (auto m : same.witness_m) CHECK(m == 0);

  // the full invariant generator list needs one Frobenius step for x^2y^2
  std::vector<Polynomial> H = S;
  H.push_back(parse_poly(*fx.R, "x^2*y^2"));
  InseparableClosureResult r = inseparable_closure_test(*fx.R, S, H, 6, &fx.G);
  CHECK(r.verdict.passed());
  CHECK(r.witness_m[4] == 1);

  CHECK_THROWS_MATCHES(inseparable_closure_test(*fx.R, S, {parse_poly(*fx.R, "x")}, 6, &fx.G),
                       Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.kind() == ErrorKind::NotInvariant;
                       }));
}

TEST_CASE("separating verdicts on the permutation fixture cross-check") {
  C4Perm fx;
  // geometric test fails for the paper's non-geometric separating set
  SeparatingVerdict g = geometric_separating_test(fx.G, *fx.R, fx.cs());
  CHECK(g.result == SeparatingVerdict::Result::fail);
  CHECK_FALSE(g.witness_text.empty());

  // the inseparable-closure crosscheck is consistent: some invariant of
  // degree <= 4 never lands in k[c1..c4] within the checked range
  std::vector<Polynomial> H;
  for (std::uint64_t d = 1; d <= 4; ++d) {
    InvariantBasis ib = invariant_basis(fx.G, *fx.R, d);
    H.insert(H.end(), ib.basis.begin(), ib.basis.end());
  }
  InseparableClosureResult r = inseparable_closure_test(*fx.R, fx.cs(), H, 3, &fx.G);
  CHECK(r.verdict.result == SeparatingVerdict::Result::inconclusive);
  CHECK_FALSE(r.verdict.witness_text.empty());
}
