#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sepcm/group.hpp"
#include "sepcm/invariant.hpp"

using namespace sepcm;

namespace {

Mat perm_matrix(const FieldCtx& F, const std::vector<std::size_t>& image) {
  Mat m(&F, image.size(), image.size());
  for (std::size_t i = 0; i < image.size(); ++i) m.at(image[i], i) = 1;
  return m;
}

FiniteMatrixGroup c4_perm(FieldCtxPtr F) {
  // sigma: e_i -> e_{i+1}
  return FiniteMatrixGroup::enumerate(F, {perm_matrix(*F, {1, 2, 3, 0})}, {"sigma"});
}

FiniteMatrixGroup klein5(FieldCtxPtr F2) {
  Mat s = parse_matrix(*F2, "[[1,0,1,0,0],[0,1,0,1,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
  Mat t = parse_matrix(*F2, "[[1,0,0,1,0],[0,1,0,0,1],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
  return FiniteMatrixGroup::enumerate(F2, {s, t}, {"sigma", "tau"});
}

FiniteMatrixGroup reflect7(FieldCtxPtr F2) {
  std::vector<Mat> gens;
  std::vector<std::string> names;
  for (int k = 0; k < 4; ++k) {
    Mat m = Mat::identity(*F2, 7);
    if (k < 3)
      m.at(4 + k, k) = 1;  // alpha_k on the block diagonal
    else
      for (int r = 0; r < 3; ++r) m.at(4 + r, 3) = 1;  // alpha_3 column
    gens.push_back(std::move(m));
    names.push_back("g" + std::to_string(k));
  }
  return FiniteMatrixGroup::enumerate(F2, gens, names);
}

}  // namespace

TEST_CASE("enumerate") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup C4 = c4_perm(F2);
  CHECK(C4.order() == 4);
  CHECK(reflect7(F2).order() == 16);
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 3)}, {"e"});
  CHECK(triv.order() == 1);
  Mat sing(F2.get(), 2, 2);
  CHECK_THROWS_MATCHES(FiniteMatrixGroup::enumerate(F2, {sing}), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::SingularGenerator; }));
}

TEST_CASE("act is a left action by ring automorphisms") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup C4 = c4_perm(F2);
  auto R = PolyRing::make(F2, {"x1", "x2", "x3", "x4"});
  const GroupElement& sigma = C4.element(C4.generator_indices()[0]);
  CHECK(act(sigma, parse_poly(*R, "x1")) == parse_poly(*R, "x2"));
  Polynomial c2 = parse_poly(*R, "x1*x3 + x2*x4");
  CHECK(act(sigma, c2) == c2);
  const GroupElement& id = C4.element(C4.identity_index());
  CHECK(act(id, c2) == c2);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, C4.order() - 1);
  auto random_poly = [&](int terms) {
    std::vector<Term> ts;
    std::uniform_int_distribution<int> e(0, 2);
    for (int t = 0; t < terms; ++t) {
      Monomial m{};
      for (int i = 0; i < 4; ++i) m.e[i] = e(rng);
      ts.push_back({m, FieldElem::one(*F2)});
    }
    return Polynomial::from_terms(*R, std::move(ts));
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t gi = pick(rng), hi = pick(rng);
    Polynomial f = random_poly(3), h = random_poly(3);
    const GroupElement& g1 = C4.element(gi);
    const GroupElement& g2 = C4.element(hi);
    GroupElement gh{g1.matrix * g2.matrix, g2.inverse * g1.inverse, ""};
    CHECK(act(gh, f) == act(g1, act(g2, f)));
    CHECK(act(g1, f * h) == act(g1, f) * act(g1, h));
    CHECK(act(g1, f + h) == act(g1, f) + act(g1, h));
    CHECK(act(g1, f).degree() == f.degree());
  }
}

TEST_CASE("orbits of points") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup C4 = c4_perm(F2);
  OrbitReport rep = orbits_of_points(C4, 1);
  CHECK(rep.point_count == 16);
  CHECK(rep.orbits.size() == 6);
  CHECK(rep.burnside_ok);

  FiniteMatrixGroup K = klein5(F2);
  OrbitReport krep = orbits_of_points(K, 1);
  CHECK(krep.point_count == 32);
  CHECK(krep.orbits.size() == 14);

  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 1)}, {"e"});
  CHECK(orbits_of_points(triv, 1).orbits.size() == 2);
}

TEST_CASE("fixed spaces") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup K = klein5(F2);
  CHECK(fixed_space(K, K.identity_index()).codim == 0);
  std::size_t sigma = K.generator_indices()[0];
  CHECK(fixed_space(K, sigma).codim == 2);
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < K.order(); ++i) all.push_back(i);
  CHECK(fixed_space_of(K, all).codim == 3);

  for (std::size_t i = 0; i < K.order(); ++i) {
    FixedSpace a = fixed_space(K, i);
    FixedSpace b = fixed_space_of(K, {K.inv(i)});
    CHECK(a.basis == b.basis);
  }
}

TEST_CASE("bireflection analysis") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup K = klein5(F2);
  BireflectionReport rep = bireflection_analysis(K);
  CHECK(rep.bireflections.size() == 3);
  CHECK(rep.generated_by_bireflections);

  FiniteMatrixGroup R7 = reflect7(F2);
  BireflectionReport rep7 = bireflection_analysis(R7);
  CHECK(rep7.generated_by_reflections);
  for (std::size_t gi : R7.generator_indices()) {
    bool is_reflection = false;
    for (auto r : rep7.reflections)
      if (r == gi) is_reflection = true;
    CHECK(is_reflection);
  }

  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 2)}, {"e"});
  CHECK(bireflection_analysis(triv).generated_by_bireflections);

  // conjugates of bireflections are bireflections, exhaustively
  for (std::size_t g = 0; g < K.order(); ++g)
    for (auto b : rep.bireflections) {
      std::size_t conj = K.mul(K.mul(g, b), K.inv(g));
      CHECK(fixed_space(K, conj).codim <= 2);
    }
}

TEST_CASE("bireflection criterion") {
  auto F2 = FieldCtx::make(2);
  FiniteMatrixGroup R7 = reflect7(F2);
  // N = <g0,g1,g2> (alpha_3 = 0), sigma = g0 g1 g2 g3
  std::vector<std::size_t> N = R7.subgroup_closure(
      {R7.generator_indices()[0], R7.generator_indices()[1], R7.generator_indices()[2]});
  CHECK(N.size() == 8);
  Mat prod = R7.element(R7.generator_indices()[0]).matrix;
  for (int k = 1; k < 4; ++k) prod = prod * R7.element(R7.generator_indices()[k]).matrix;
  std::size_t sigma = R7.index_of(prod);
  CHECK(check_bireflection_criterion(R7, N, sigma));

  // an element whose fixed space sits inside a bireflection's fixed space
  FiniteMatrixGroup K = klein5(F2);
  std::vector<std::size_t> KN = K.subgroup_closure({K.generator_indices()[0]});
  std::size_t tau = K.generator_indices()[1];
  CHECK_FALSE(check_bireflection_criterion(K, KN, tau));

  CHECK_THROWS_MATCHES(check_bireflection_criterion(K, KN, K.generator_indices()[0]), Error,
                       Catch::Matchers::Predicate<Error>(
                           [](const Error& e) { return e.kind() == ErrorKind::SigmaInN; }));
}

TEST_CASE("direct sum") {
  auto F2 = FieldCtx::make(2);
  Mat g = parse_matrix(*F2, "[[1,0],[1,1]]");
  FiniteMatrixGroup G = FiniteMatrixGroup::enumerate(F2, {g}, {"s"});
  CHECK(G.order() == 2);
  FiniteMatrixGroup G3 = direct_sum(G, 3);
  CHECK(G3.order() == 2);
  CHECK(G3.dim() == 6);
  CHECK(direct_sum(G, 1).order() == G.order());
  FiniteMatrixGroup triv = FiniteMatrixGroup::enumerate(F2, {Mat::identity(*F2, 1)}, {"e"});
  FiniteMatrixGroup triv5 = direct_sum(triv, 5);
  CHECK(triv5.order() == 1);
  CHECK(triv5.dim() == 5);
}

TEST_CASE("regular representation") {
  auto F2 = FieldCtx::make(2);
  Mat swap = parse_matrix(*F2, "[[0,1],[1,0]]");
  FiniteMatrixGroup C2 = FiniteMatrixGroup::enumerate(F2, {swap}, {"s"});
  FiniteMatrixGroup reg2 = regular_representation(C2);
  CHECK(reg2.order() == 2);
  CHECK(reg2.dim() == 2);

  // C4 regular rep has the orbit structure of the permutation fixture
  FiniteMatrixGroup C4 = c4_perm(F2);
  FiniteMatrixGroup reg4 = regular_representation(C4);
  CHECK(reg4.order() == 4);
  CHECK(reg4.dim() == 4);
  OrbitReport a = orbits_of_points(reg4, 1);
  OrbitReport b = orbits_of_points(C4, 1);
  CHECK(a.orbit_sizes() == b.orbit_sizes());

  // C2 x C2: 4-dim permutation group of order 4, from the left-mult table
  FiniteMatrixGroup V4 = klein5(F2);
  FiniteMatrixGroup regV = regular_representation(V4);
  CHECK(regV.order() == 4);
  CHECK(regV.dim() == 4);
  for (const auto& e : regV.elements())
    for (std::size_t i = 0; i < 4; ++i) {
      std::size_t ones = 0;
      for (std::size_t j = 0; j < 4; ++j)
        if (e.matrix.at(i, j)) ++ones;
      CHECK(ones == 1);
    }
}

TEST_CASE("matrix literal parsing") {
  auto F4 = FieldCtx::make(2, 2);
  Mat m = parse_matrix(*F4, "[[1, w], [0, w+1]]");
  CHECK(m.at(0, 1) == FieldElem::generator(*F4).index());
  CHECK(m.at(1, 1) == (FieldElem::generator(*F4) * FieldElem::generator(*F4)).index());
  CHECK_THROWS_AS(parse_matrix(*F4, "[[1,0],[1]]"), Error);
}
