#pragma once

// Separation of orbits: point tests over finite extensions, the geometric
// (algebraic-closure) decision procedure via graph ideals and radical
// membership, and the purely-inseparable-closure test.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/groebner.hpp"
#include "sepcm/group.hpp"
#include "sepcm/invariant.hpp"

namespace sepcm {

struct SeparatingVerdict {
  enum class Kind { points, geometric, inseparable_closure };
  enum class Result { pass, fail, inconclusive };

  Kind kind = Kind::points;
  Result result = Result::pass;
  std::uint32_t extension_degree = 0;  // for point verdicts

  // a fail always carries a concrete witness
  std::optional<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> witness_points;
  std::string witness_text;  // failing graph-ideal generator or unreduced invariant
  std::string note;

  bool passed() const { return result == Result::pass; }

  static const char* result_name(Result r) {
    switch (r) {
      case Result::pass: return "pass";
      case Result::fail: return "fail";
      case Result::inconclusive: return "inconclusive";
    }
    return "?";
  }
};

/// Do the invariants in S separate the G-orbits of V(F_{q^e})?
inline SeparatingVerdict separates_points(const FiniteMatrixGroup& G, const PolyRing& R,
                                          const std::vector<Polynomial>& S, std::uint32_t e) {
  for (const auto& s : S)
    check(is_invariant(G, s), ErrorKind::NotInvariant,
          "separating candidate is not invariant: " + s.to_string());
  OrbitReport orbits = orbits_of_points(G, e);
  const FieldCtx& E = *orbits.ext_field;
  const std::size_t d = G.dim();
  SeparatingVerdict v;
  v.kind = SeparatingVerdict::Kind::points;
  v.extension_degree = e;
  auto decode = [&](std::uint64_t idx) {
    std::vector<FieldElem> pt(d, FieldElem::zero(E));
    for (std::size_t i = 0; i < d; ++i) {
      pt[i] = FieldElem(&E, static_cast<std::uint32_t>(idx % E.q()));
      idx /= E.q();
    }
    return pt;
  };
  auto raw = [&](const std::vector<FieldElem>& pt) {
    std::vector<std::uint32_t> r;
    for (const auto& c : pt) r.push_back(c.index());
    return r;
  };
  // value tuple -> (orbit id, representative point)
  std::map<std::vector<std::uint32_t>, std::pair<std::size_t, std::uint64_t>> seen;
  for (std::size_t oi = 0; oi < orbits.orbits.size(); ++oi) {
    for (std::uint64_t pidx : orbits.orbits[oi]) {
      auto pt = decode(pidx);
      std::vector<std::uint32_t> values;
      for (const auto& s : S) values.push_back(s.evaluate(pt).index());
      auto it = seen.find(values);
      if (it == seen.end()) {
        seen.emplace(std::move(values), std::make_pair(oi, pidx));
      } else if (it->second.first != oi) {
        v.result = SeparatingVerdict::Result::fail;
        v.witness_points = {raw(decode(it->second.second)), raw(decode(pidx))};
        v.note = "points in distinct orbits share all invariant values";
        return v;
      }
    }
  }
  v.result = SeparatingVerdict::Result::pass;
  return v;
}

namespace detail {

struct DoubledRing {
  PolyRingPtr ring;                    // k[x..., y...]
  std::vector<std::size_t> x_map, y_map;
};

inline DoubledRing make_doubled_ring(const PolyRing& R) {
  std::vector<std::string> vars = R.vars();
  DoubledRing D;
  for (std::size_t i = 0; i < R.nvars(); ++i) D.x_map.push_back(i);
  for (const auto& v : R.vars()) {
    std::string name = v + "_y";
    bool clash = true;
    while (clash) {
      clash = false;
      for (const auto& u : vars)
        if (u == name) {
          name += "_";
          clash = true;
        }
    }
    vars.push_back(name);
    D.y_map.push_back(vars.size() - 1);
  }
  std::vector<std::uint32_t> w(vars.size(), 1);
  D.ring = PolyRing::make(R.field_ptr(), vars, MonomialOrder::grevlex(), w, true);
  return D;
}

}  // namespace detail

/// Geometric separating test over the algebraic closure.  In k[x,y] let
/// I_sep = (s(x)-s(y) : s in S) and J the intersection over g in G of the
/// graph ideals (y_i - (g x)_i); S is geometric separating iff every reduced
/// generator of J lies in sqrt(I_sep).  V(I_sep) contains V(J) always; that
/// containment is asserted on every run.  Degree-cap hits produce an
/// inconclusive verdict, never a wrong one.
inline SeparatingVerdict geometric_separating_test(const FiniteMatrixGroup& G, const PolyRing& R,
                                                   const std::vector<Polynomial>& S,
                                                   std::uint64_t degree_cap = kDefaultDegreeCap) {
  for (const auto& s : S)
    check(is_invariant(G, s), ErrorKind::NotInvariant,
          "separating candidate is not invariant: " + s.to_string());
  check(2 * R.nvars() <= kMaxVars - 2, ErrorKind::SizeCap, "doubled ring has too many variables");
  SeparatingVerdict v;
  v.kind = SeparatingVerdict::Kind::geometric;
  auto D = detail::make_doubled_ring(R);
  const PolyRing& W = *D.ring;
  const FieldCtx& F = R.field();
  const std::size_t d = R.nvars();
  std::vector<Polynomial> isep;
  for (const auto& s : S)
    isep.push_back(map_to_ring(s, W, D.x_map) - map_to_ring(s, W, D.y_map));
  Ideal Isep(W, isep);
  try {
    // J = intersection of the graph ideals, in canonical element order
    Ideal J;
    bool first = true;
    for (const auto& g : G.elements()) {
      std::vector<Polynomial> graph;
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<Term> ts;
        ts.push_back({mono_var(D.y_map[i]), FieldElem::one(F)});
        Polynomial lin = Polynomial::from_terms(W, std::move(ts));
        for (std::size_t j = 0; j < d; ++j) {
          FieldElem c = g.matrix.elem(i, j);
          if (!c.is_zero())
            lin = lin - Polynomial::monomial(W, mono_var(D.x_map[j]), c);
        }
        graph.push_back(lin);
      }
      Ideal graph_ideal(W, std::move(graph));
      J = first ? graph_ideal : intersect(J, graph_ideal, degree_cap);
      first = false;
    }
    GroebnerBasis GJ = buchberger(J, degree_cap);
    // soundness assertion: I_sep is contained in J
    for (const auto& s : isep)
      check(normal_form(s, GJ).is_zero(), ErrorKind::Internal,
            "invariant difference not in the graph ideal intersection");
    GroebnerBasis GI = buchberger(Isep, degree_cap);
    for (const auto& gen : GJ.basis) {
      if (normal_form(gen, GI).is_zero()) continue;  // already in the ideal
      if (!radical_member(gen, Isep, degree_cap)) {
        v.result = SeparatingVerdict::Result::fail;
        v.witness_text = gen.to_string();
        v.note = "graph-ideal generator outside the radical of I_sep";
        return v;
      }
    }
    v.result = SeparatingVerdict::Result::pass;
    return v;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegreeCapExceeded) {
      v.result = SeparatingVerdict::Result::inconclusive;
      v.note = e.what();
      return v;
    }
    throw;
  }
}

struct MembershipTables {
  PolyRingPtr combined;                 // k[x..., T...], elim(#x) order
  std::vector<std::size_t> x_map;       // ambient var i -> combined position
  GroebnerBasis gb;                     // GB of (T_i - s_i)
  std::size_t nx = 0;

  /// normal form contains only tag variables => member of k[S]
  bool contains(const Polynomial& ambient_poly) const {
    Polynomial lifted = map_to_ring(ambient_poly, *combined, x_map);
    Polynomial nf = normal_form(lifted, gb);
    for (const auto& t : nf.terms())
      for (std::size_t i = 0; i < nx; ++i)
        if (t.m.e[i]) return false;
    return true;
  }
};

/// Elimination tables deciding membership in the subalgebra k[S].
inline MembershipTables subalgebra_membership(const PolyRing& R, const std::vector<Polynomial>& S,
                                              std::uint64_t degree_cap = kDefaultDegreeCap) {
  check(R.nvars() + S.size() <= kMaxVars, ErrorKind::SizeCap,
        "too many variables plus tags for the combined ring");
  std::vector<std::string> vars = R.vars();
  std::vector<std::uint32_t> w = R.weights();
  for (std::size_t i = 0; i < S.size(); ++i) {
    vars.push_back("T" + std::to_string(i + 1));
    long deg = S[i].degree();
    check(deg >= 1, ErrorKind::NotHomogeneous, "subalgebra generators must be nonconstant");
    w.push_back(static_cast<std::uint32_t>(deg));
  }
  MembershipTables M;
  M.nx = R.nvars();
  M.combined = PolyRing::make(R.field_ptr(), vars, MonomialOrder::elim(R.nvars()), w, true);
  for (std::size_t i = 0; i < R.nvars(); ++i) M.x_map.push_back(i);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < S.size(); ++i) {
    Polynomial tag = Polynomial::variable(*M.combined, R.nvars() + i);
    gens.push_back(tag - map_to_ring(S[i], *M.combined, M.x_map));
  }
  M.gb = buchberger(Ideal(*M.combined, std::move(gens)), degree_cap);
  return M;
}

struct InseparableClosureResult {
  SeparatingVerdict verdict;
  std::vector<long> witness_m;  // per element of H, the least m with h^(p^m) in k[S]; -1 if none
};

/// Purely-inseparable-closure test: every h in H must satisfy
/// h^(p^m) in k[S] for some m <= m_max.  Exhausting m_max is inconclusive.
inline InseparableClosureResult inseparable_closure_test(
    const PolyRing& R, const std::vector<Polynomial>& S, const std::vector<Polynomial>& H,
    std::uint64_t m_max = 6, const FiniteMatrixGroup* G = nullptr,
    std::uint64_t degree_cap = kDefaultDegreeCap) {
  if (G) {
    for (const auto& s : S)
      check(is_invariant(*G, s), ErrorKind::NotInvariant, "S contains a non-invariant");
    for (const auto& h : H)
      check(is_invariant(*G, h), ErrorKind::NotInvariant, "H contains a non-invariant");
  }
  InseparableClosureResult out;
  out.verdict.kind = SeparatingVerdict::Kind::inseparable_closure;
  try {
    MembershipTables M = subalgebra_membership(R, S, degree_cap);
    for (const auto& h : H) {
      long found = -1;
      for (std::uint64_t m = 0; m <= m_max; ++m) {
        if (M.contains(h.frobenius_power(m))) {
          found = static_cast<long>(m);
          break;
        }
      }
      out.witness_m.push_back(found);
      if (found < 0 && out.verdict.result == SeparatingVerdict::Result::pass) {
        out.verdict.result = SeparatingVerdict::Result::inconclusive;
        out.verdict.witness_text = h.to_string();
        out.verdict.note = "no p-power within m_max lands in the subalgebra";
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegreeCapExceeded || e.kind() == ErrorKind::ExponentOverflow) {
      out.verdict.result = SeparatingVerdict::Result::inconclusive;
      out.verdict.note = e.what();
    } else {
      throw;
    }
  }
  return out;
}

}  // namespace sepcm
