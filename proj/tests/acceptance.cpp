// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion.  Exact checks throughout; time budgets
// are enforced as part of each criterion.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sepcm/cmcert.hpp"
#include "sepcm/scenario.hpp"

using namespace sepcm;

namespace {

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& title, double budget_seconds,
                 const std::function<void(std::vector<std::string>&)>& body) {
    std::vector<std::string> problems;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed > budget_seconds)
      problems.push_back("budget exceeded: " + std::to_string(elapsed) + " s > " +
                         std::to_string(budget_seconds) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (problems.empty()) {
      line << "[PASS] criterion " << number << ": " << title << " (" << elapsed << " s)";
    } else {
      ++failures;
      line << "[FAIL] criterion " << number << ": " << title << " (" << elapsed << " s)";
      for (const auto& p : problems) line << "\n       - " << p;
    }
    std::cout << line.str() << std::endl;
  }
};

void require(std::vector<std::string>& problems, bool cond, const std::string& what) {
  if (!cond) problems.push_back(what);
}

std::string fixture(const std::string& name) {
  return std::string(SEPCM_SOURCE_DIR) + "/fixtures/" + name;
}

// ---- shared fixture data -------------------------------------------------

struct C4PermData {
  FieldCtxPtr F = FieldCtx::make(2);
  PolyRingPtr R = PolyRing::make(F, {"x1", "x2", "x3", "x4"});
  FiniteMatrixGroup G;
  std::vector<Polynomial> c;
  Cocycle1 g0;

  C4PermData()
      : G(FiniteMatrixGroup::enumerate(F, {perm()}, {"sigma"})), g0(make_cocycle()) {
    for (auto s : {"x1+x2+x3+x4", "x1*x3+x2*x4", "x1*x2+x2*x3+x3*x4+x1*x4", "x1*x2*x3*x4"})
      c.push_back(parse_poly(*R, s));
  }
  Mat perm() {
    Mat m(F.get(), 4, 4);
    for (std::size_t i = 0; i < 4; ++i) m.at((i + 1) % 4, i) = 1;
    return m;
  }
  Cocycle1 make_cocycle() {
    auto M = CoefficientModule::graded_piece(G, *R, 0);
    std::map<std::string, std::vector<std::uint32_t>> gv;
    gv["sigma"] = {1};
    return Cocycle1::from_generator_values(M, gv);
  }
};

struct KleinData {
  FieldCtxPtr F = FieldCtx::make(2);
  PolyRingPtr R = PolyRing::make(F, {"x1", "x2", "x3", "x4", "x5"});
  FiniteMatrixGroup G;
  std::vector<Polynomial> a;

  KleinData() : G(make_group()) {
    const char* defs[] = {
        "x3", "x4", "x5",
        "x1^4 + x1^2*x3^2 + x1^2*x3*x4 + x1*x3^2*x4 + x1*x3*x4^2 + x1*x3*x4*x5 + x1*x4^3 + "
        "x2^2*x3^2 + x2*x3^2*x5 + x2*x3*x4^2",
        "x2^4 + x2^2*x4^2 + x2^2*x4*x5 + x2^2*x5^2 + x2*x4^2*x5 + x2*x4*x5^2",
        "x1^2*x4^2 + x1*x3*x4*x5 + x1*x4^3 + x2^2*x3^2 + x2*x3^2*x5 + x2*x3*x4^2",
        "x1*x4^2*x5 + x1*x4*x5^2 + x2^2*x3*x5 + x2^2*x4^2 + x2*x3*x5^2 + x2*x4^3"};
    for (auto s : defs) a.push_back(parse_poly(*R, s));
  }
  FiniteMatrixGroup make_group() {
    Mat s = parse_matrix(*F, "[[1,0,1,0,0],[0,1,0,1,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
    Mat t = parse_matrix(*F, "[[1,0,0,1,0],[0,1,0,0,1],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]");
    return FiniteMatrixGroup::enumerate(F, {s, t}, {"sigma", "tau"});
  }
};

struct ScalarData {
  FieldCtxPtr F = FieldCtx::make(5);
  PolyRingPtr R = PolyRing::make(F, {"x", "y"});
  FiniteMatrixGroup G;
  ScalarData() : G(make_group()) {}
  FiniteMatrixGroup make_group() {
    Mat m(F.get(), 2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 2;
    return FiniteMatrixGroup::enumerate(F, {m}, {"sigma"});
  }
};

}  // namespace

int main() {
  Harness h;

  // ------------------------------------------------------------------ 1
  h.criterion(1, "C4 permutation fixture: 16 points in 6 orbits", 1.0,
              [&](std::vector<std::string>& p) {
                C4PermData fx;
                OrbitReport rep = orbits_of_points(fx.G, 1);
                require(p, rep.point_count == 16, "expected 16 points");
                require(p, rep.orbits.size() == 6, "expected 6 orbits");
                require(p, rep.burnside_ok, "Burnside identity");
              });

  // ------------------------------------------------------------------ 2
  h.criterion(2, "C4 fixture: point separation passes, geometric test fails with witness", 60.0,
              [&](std::vector<std::string>& p) {
                C4PermData fx;
                require(p, separates_points(fx.G, *fx.R, fx.c, 1).passed(),
                        "separates_points({c1..c4}, e=1) should pass");
                SeparatingVerdict v = geometric_separating_test(fx.G, *fx.R, fx.c);
                require(p, v.result == SeparatingVerdict::Result::fail,
                        "geometric test should fail");
                require(p, !v.witness_text.empty(), "fail needs a concrete witness generator");
              });

  // ------------------------------------------------------------------ 3
  h.criterion(
      3, "C4 fixture: certified class, paper witnesses, hsop, defect certificate", 10.0,
      [&](std::vector<std::string>& p) {
        C4PermData fx;
        require(p, !is_coboundary(fx.g0), "degree-0 cocycle must be nontrivial");
        NontrivialityCertificate nt = nontrivial_all_frobenius(fx.g0);
        require(p, nt.kind == NontrivialityCertificate::Kind::certified_trivial_coefficients,
                "expected CERTIFIED(trivial-coefficients)");
        const char* expected_witnesses[] = {"x1+x3", "x1*x3", "x1*x4+x2*x3"};
        for (int i = 0; i < 3; ++i) {
          AnnihilationResult r = annihilates(fx.c[i], fx.g0);
          require(p, r.annihilates, "c" + std::to_string(i + 1) + " must annihilate");
          require(p, r.witness && *r.witness == parse_poly(*fx.R, expected_witnesses[i]),
                  "witness for c" + std::to_string(i + 1) + " must be " +
                      std::string(expected_witnesses[i]));
        }
        require(p, hsop_check_polyring(*fx.R, fx.c), "{c1..c4} must pass the hsop check");
        DefectCertificate cert =
            defect_certificate(fx.G, *fx.R, fx.g0, {fx.c[0], fx.c[1], fx.c[2]});
        require(p, cert.bound >= 1, "bound must be >= 1");
        require(p, cert.verdict == "no graded geometric separating algebra is Cohen-Macaulay",
                "verdict text");
        require(p, verify_certificate(fx.G, *fx.R, fx.g0, cert), "certificate must re-verify");
      });

  // ------------------------------------------------------------------ 4
  h.criterion(4, "additive-group 3-copies fixtures (F_2, F_3): witnesses y_i and bound 1", 5.0,
              [&](std::vector<std::string>& p) {
                for (std::uint64_t prime : {2ull, 3ull}) {
                  auto F = FieldCtx::make(prime);
                  Mat m = Mat::identity(*F, 2);
                  m.at(1, 0) = F->neg(1);
                  FiniteMatrixGroup G3 =
                      direct_sum(FiniteMatrixGroup::enumerate(F, {m}, {"s"}), 3);
                  auto R = PolyRing::make(F, {"x1", "y1", "x2", "y2", "x3", "y3"});
                  auto M0 = CoefficientModule::graded_piece(G3, *R, 0);
                  std::map<std::string, std::vector<std::uint32_t>> gv;
                  gv["s"] = {1};
                  Cocycle1 g = Cocycle1::from_generator_values(M0, gv);
                  std::vector<Polynomial> ann;
                  for (int i = 1; i <= 3; ++i) {
                    Polynomial xi = parse_poly(*R, "x" + std::to_string(i));
                    AnnihilationResult r = annihilates(xi, g);
                    require(p, r.annihilates, "x_i must annihilate (p=" + std::to_string(prime) + ")");
                    require(p,
                            r.witness && *r.witness == parse_poly(*R, "y" + std::to_string(i)),
                            "witness must be y" + std::to_string(i) +
                                " (p=" + std::to_string(prime) + ")");
                    ann.push_back(xi);
                  }
                  DefectCertificate cert = defect_certificate(G3, *R, g, ann);
                  require(p, cert.bound >= 1, "bound must be >= 1");
                }
              });

  // ------------------------------------------------------------------ 5
  h.criterion(
      5, "A4 over F_4: trivial H^1 = 0; twisted class and its Frobenius power nontrivial", 5.0,
      [&](std::vector<std::string>& p) {
        auto F4 = FieldCtx::make(2, 2);
        Mat chi(F4.get(), 4, 4), tau(F4.get(), 4, 4);
        std::vector<std::size_t> chi_img{1, 0, 3, 2}, tau_img{1, 2, 0, 3};
        for (std::size_t i = 0; i < 4; ++i) {
          chi.at(chi_img[i], i) = 1;
          tau.at(tau_img[i], i) = 1;
        }
        FiniteMatrixGroup A4 = FiniteMatrixGroup::enumerate(F4, {chi, tau}, {"chi", "tau"});
        require(p, A4.order() == 12, "|A4| = 12");
        auto R = PolyRing::make(F4, {"x1", "x2", "x3", "x4"});
        CohomologySpace t0 = cocycle_space(CoefficientModule::graded_piece(A4, *R, 0));
        require(p, t0.dim_h1 == 0, "trivial-coefficient H^1 must vanish");
        FieldElem w = FieldElem::generator(*F4);
        auto Mw = CoefficientModule::character(A4, {{"tau", w}});
        std::map<std::string, std::vector<std::uint32_t>> gv;
        gv["chi"] = {(w * w).index()};
        Cocycle1 tw = Cocycle1::from_generator_values(Mw, gv);
        require(p, !is_coboundary(tw), "twisted cocycle must be non-coboundary");
        Cocycle1 tw2 = frobenius_power_cocycle(tw, 1);
        std::size_t tau_idx = A4.generator_indices()[1];
        require(p, tw2.module().chi(tau_idx) == (w * w).index(),
                "Frobenius power must land in the w^2 twist");
        require(p, !is_coboundary(tw2), "Frobenius power must stay non-coboundary");
      });

  // ------------------------------------------------------------------ 6
  h.criterion(6, "reflection group (m=3, F_2): order 16, reflection-generated, criterion holds",
              5.0, [&](std::vector<std::string>& p) {
                ScenarioRun run = run_scenario_path(fixture("reflect7.scn"));
                require(p, run.exit_code == 0, "reflect7.scn must exit 0, got " +
                                                   std::to_string(run.exit_code));
                std::string out = run.render("structured");
                require(p, out.find("order: 16") != std::string::npos, "|G| = 16");
                require(p, out.find("generated-by-reflections: true") != std::string::npos,
                        "G must be reflection-generated");
                require(p, out.find("criterion: true") != std::string::npos,
                        "bireflection criterion must hold");
              });

  // ------------------------------------------------------------------ 7
  h.criterion(
      7, "Klein 5-dim fixture: geometric pass, hsop, free module, series, Gorenstein a=3", 900.0,
      [&](std::vector<std::string>& p) {
        KleinData kd;
        SeparatingVerdict v = geometric_separating_test(kd.G, *kd.R, kd.a, 60);
        require(p, v.passed(), "geometric separating test must pass");
        std::vector<Polynomial> hsop(kd.a.begin(), kd.a.begin() + 5);
        require(p, hsop_check_polyring(*kd.R, hsop), "{a1..a5} must be a hsop");
        SubalgebraPresentation A = present(*kd.R, kd.a, &kd.G, 60);
        HilbertSeries H = hilbert_series(A);
        require(p, H == parse_hilbert_series("(1+2t^4+t^8)/((1-t)^3(1-t^4)^2)"),
                "Hilbert series must equal the closed form exactly");
        std::vector<Polynomial> mg = {parse_poly(*A.tagring, "1"), parse_poly(*A.tagring, "T6"),
                                      parse_poly(*A.tagring, "T7"),
                                      parse_poly(*A.tagring, "T6*T7")};
        FreeModuleResult fm = free_module_check(A, {0, 1, 2, 3, 4}, mg, 60);
        require(p, fm.free, "A must be free over k[a1..a5] on {1,a6,a7,a6*a7}: " + fm.reason);
        GorensteinResult gr = gorenstein_check(H, 5);
        require(p, gr.gorenstein && gr.a == 3, "Gorenstein with a = 3");
        require(p, gr.a != 5, "not strongly Gorenstein against dim V = 5");
        BireflectionReport br = bireflection_analysis(kd.G);
        require(p, br.generated_by_bireflections, "G must be bireflection-generated");
      });

  // ------------------------------------------------------------------ 8
  h.criterion(
      8, "Klein 5-dim fixture: search finds a vanishing-restriction class; REFUTED(m); refusal",
      900.0, [&](std::vector<std::string>& p) {
        ScenarioRun run = run_scenario_path(fixture("klein5.scn"));
        std::string out = run.render("structured");
        require(p, run.exit_code == 0,
                "klein5.scn must exit 0 (all expectations met), got " +
                    std::to_string(run.exit_code) + "\n" + out);
        require(p, out.find("found-degree: 1") != std::string::npos,
                "search must find a class in degree <= 5 (found in degree 1)");
        require(p, out.find("REFUTED(2)") != std::string::npos,
                "the class must be refuted at a finite Frobenius power");
        require(p, out.find("refused(NontrivialityNotCertified)") != std::string::npos,
                "the defect certificate must refuse a refuted class");
      });

  // ------------------------------------------------------------------ 9
  h.criterion(
      9, "C4-scalar over F_5: geometric passes, hsop not regular at 2, principal 3-gen ideal",
      60.0, [&](std::vector<std::string>& p) {
        ScalarData sd;
        std::vector<Polynomial> four = {parse_poly(*sd.R, "x^4"), parse_poly(*sd.R, "x^3*y"),
                                        parse_poly(*sd.R, "x*y^3"), parse_poly(*sd.R, "y^4")};
        require(p, geometric_separating_test(sd.G, *sd.R, four).passed(),
                "{x^4,x^3y,xy^3,y^4} must be geometric separating");
        std::vector<Polynomial> three = {four[0], four[1], four[3]};
        require(p, geometric_separating_test(sd.G, *sd.R, three).passed(),
                "{x^4,x^3y,y^4} must be geometric separating");
        SubalgebraPresentation P4 = present(*sd.R, four, &sd.G);
        RegularSequenceResult rs = regular_sequence_check(
            P4, {parse_poly(*P4.tagring, "T1"), parse_poly(*P4.tagring, "T4")});
        require(p, !rs.regular && rs.fail_index == 2,
                "(x^4, y^4) must fail regularity exactly at index 2");
        SubalgebraPresentation P3 = present(*sd.R, three, &sd.G);
        require(p, P3.relations.size() == 1, "3-generator relation ideal must be principal");
      });

  // ------------------------------------------------------------------ 10
  h.criterion(10, "property suites: fields, GB idempotence, Burnside, cocycles, Noether", 300.0,
              [&](std::vector<std::string>& p) {
                // field axioms, exhaustive triples for every prime power <= 256
                for (std::uint64_t q = 2; q <= 256; ++q) {
                  std::uint64_t pp = 0, nn = 0;
                  for (std::uint64_t base = 2; base <= q; ++base) {
                    std::uint64_t pw = base, n = 1;
                    while (pw < q) {
                      pw *= base;
                      ++n;
                    }
                    if (pw == q) {
                      bool prime = base >= 2;
                      for (std::uint64_t d = 2; d * d <= base; ++d)
                        if (base % d == 0) prime = false;
                      if (prime) {
                        pp = base;
                        nn = n;
                        break;
                      }
                    }
                  }
                  if (!pp) continue;
                  auto F = FieldCtx::make(pp, static_cast<std::uint32_t>(nn));
                  bool ok = true;
                  for (std::uint32_t a = 0; a < q && ok; ++a) {
                    if (F->add(a, 0) != a || F->mul(a, 1) != a) ok = false;
                    if (a && F->mul(a, F->inv(a)) != 1) ok = false;
                    for (std::uint32_t b = 0; b < q && ok; ++b) {
                      if (F->add(a, b) != F->add(b, a) || F->mul(a, b) != F->mul(b, a)) ok = false;
                      for (std::uint32_t c = 0; c < q && ok; ++c) {
                        if (F->add(F->add(a, b), c) != F->add(a, F->add(b, c))) ok = false;
                        if (F->mul(F->mul(a, b), c) != F->mul(a, F->mul(b, c))) ok = false;
                        if (F->mul(a, F->add(b, c)) != F->add(F->mul(a, b), F->mul(a, c)))
                          ok = false;
                      }
                    }
                  }
                  require(p, ok, "field axioms fail for q = " + std::to_string(q));
                  if (!ok) break;
                }

                // GB idempotence on assorted bases
                auto F5 = FieldCtx::make(5);
                auto R5 = PolyRing::make(F5, {"x", "y", "z"});
                for (auto gens : std::vector<std::vector<const char*>>{
                         {"x^2-y", "x^3"}, {"x*y+z^2", "y^2-z", "x^2"}, {"x+y+z", "x*y*z"}}) {
                  std::vector<Polynomial> gs;
                  for (auto s : gens) gs.push_back(parse_poly(*R5, s));
                  GroebnerBasis G1 = buchberger(Ideal(*R5, gs));
                  GroebnerBasis G2 = buchberger(Ideal(*R5, G1.basis));
                  bool same = G1.basis.size() == G2.basis.size();
                  for (std::size_t i = 0; same && i < G1.basis.size(); ++i)
                    same = G1.basis[i] == G2.basis[i];
                  require(p, same, "buchberger must be idempotent on reduced bases");
                }

                // Burnside holds on every orbit run (asserted internally too)
                C4PermData c4;
                KleinData kd;
                require(p, orbits_of_points(c4.G, 1).burnside_ok, "Burnside C4 e=1");
                require(p, orbits_of_points(c4.G, 2).burnside_ok, "Burnside C4 e=2");
                require(p, orbits_of_points(kd.G, 1).burnside_ok, "Burnside Klein");

                // cocycle identity exhaustiveness: a bad table must be rejected
                auto M0 = CoefficientModule::graded_piece(c4.G, *c4.R, 0);
                std::vector<std::vector<std::uint32_t>> bad(4, {0});
                bad[c4.G.generator_indices()[0]] = {1};
                bool rejected = false;
                try {
                  Cocycle1::from_values(M0, bad);
                } catch (const Error& e) {
                  rejected = e.kind() == ErrorKind::InvalidCocycle;
                }
                require(p, rejected, "invalid cocycle tables must be rejected");

                // Frobenius / coboundary commutation on a C4 coboundary
                auto M1 = CoefficientModule::graded_piece(c4.G, *c4.R, 1);
                Polynomial b = parse_poly(*c4.R, "x1+x2");
                std::vector<std::vector<std::uint32_t>> vals;
                for (std::size_t e = 0; e < c4.G.order(); ++e)
                  vals.push_back(M1->from_polynomial(act(c4.G.element(e), b) - b));
                Cocycle1 cb = Cocycle1::from_values(M1, vals);
                for (std::uint64_t m = 1; m <= 4; ++m)
                  require(p, is_coboundary(frobenius_power_cocycle(cb, m)),
                          "Frobenius powers of coboundaries stay coboundaries");

                // Noether set passes the geometric test on the scalar fixture
                ScalarData sd;
                auto S = noether_separating_set(sd.G, *sd.R);
                require(p, geometric_separating_test(sd.G, *sd.R, S).passed(),
                        "Noether set must pass the geometric test");

                // every shipped fixture meets its expectations end to end
                for (const char* name :
                     {"c4perm.scn", "additive3copies_f2.scn", "additive3copies_f3.scn",
                      "a4twisted.scn", "reflect7.scn", "c4scalar5.scn",
                      "noether-crosscheck.scn"}) {
                  ScenarioRun run = run_scenario_path(fixture(name));
                  require(p, run.exit_code == 0,
                          std::string(name) + " must exit 0, got " +
                              std::to_string(run.exit_code));
                }
              });

  std::cout << (h.failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(h.failures) + " criteria failed")
            << std::endl;
  return h.failures == 0 ? 0 : 1;
}
