#pragma once

// Buchberger-based ideal engine: reduced Groebner bases with Gebauer-Moeller
// pair elimination and sugar selection, normal forms, Rabinowitsch radical
// membership, elimination, intersection, ideal quotient, combinatorial Krull
// dimension, and Hilbert numerators of monomial ideals.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/intpoly.hpp"
#include "sepcm/mpoly.hpp"

namespace sepcm {

constexpr std::uint64_t kDefaultDegreeCap = 40;

struct Ideal {
  const PolyRing* ring = nullptr;
  std::vector<Polynomial> gens;

  Ideal() = default;
  Ideal(const PolyRing& R, std::vector<Polynomial> g) : ring(&R), gens(std::move(g)) {
    for (const auto& f : gens)
      check(f.ring_ptr() == ring, ErrorKind::OrderMismatch, "ideal generators from mixed rings");
  }
};

struct GBStats {
  std::size_t s_pairs = 0;
  long max_degree = -1;
};

struct GroebnerBasis {
  const PolyRing* ring = nullptr;
  std::vector<Polynomial> basis;  // reduced: monic, no LM divides another, tails reduced
  GBStats stats;

  bool is_unit_ideal() const {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
  }
};

namespace detail {

/// full multivariate division remainder against a fixed polynomial list
inline Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G) {
  const PolyRing& R = f.ring();
  std::size_t nv = R.nvars();
  Polynomial work = f;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (mono_divides(g.leading_monomial(), lt.m, nv)) {
        Monomial q = mono_div(lt.m, g.leading_monomial(), nv);
        FieldElem c = lt.c * g.leading_coeff().inverse();
        work = work - g.mul_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(lt);
      Polynomial tail(&R);
      std::vector<Term> ts(work.terms().begin() + 1, work.terms().end());
      work = Polynomial::from_terms(R, std::move(ts));
    }
  }
  return Polynomial::from_terms(R, std::move(remainder));
}

struct SPair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

}  // namespace detail

/// Reduced Groebner basis of I under the ring's order (or an override).
/// Deterministic: sugar selection with lcm/order/index tie-breaks; the reduced
/// basis itself is unique for the order regardless.  Throws DegreeCapExceeded
/// when an S-polynomial would pass the cap; such a run must not be used for
/// correctness claims.
inline GroebnerBasis buchberger(const Ideal& I, std::uint64_t degree_cap = kDefaultDegreeCap,
                                bool stop_on_unit = false) {
  const PolyRing& R = *I.ring;
  const std::size_t nv = R.nvars();
  GroebnerBasis out;
  out.ring = &R;

  std::vector<Polynomial> basis;
  std::vector<std::uint64_t> sugar;
  for (const auto& f : I.gens) {
    if (!f.is_zero()) {
      basis.push_back(f);
      sugar.push_back(static_cast<std::uint64_t>(f.degree()));
    }
  }

  auto unit_result = [&]() {
    out.basis = {Polynomial::one(R)};
    return out;
  };
  for (const auto& f : basis)
    if (f.is_constant()) return unit_result();

  std::vector<detail::SPair> pairs;
  auto make_pair = [&](std::size_t i, std::size_t j) {
    detail::SPair p;
    p.i = i;
    p.j = j;
    p.lcm = mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial(), nv);
    std::uint64_t di = sugar[i] + R.wdeg(mono_div(p.lcm, basis[i].leading_monomial(), nv));
    std::uint64_t dj = sugar[j] + R.wdeg(mono_div(p.lcm, basis[j].leading_monomial(), nv));
    p.sugar = std::max(di, dj);
    return p;
  };
  auto coprime = [&](std::size_t i, std::size_t j) {
    const Monomial& a = basis[i].leading_monomial();
    const Monomial& b = basis[j].leading_monomial();
    for (std::size_t v = 0; v < nv; ++v)
      if (a.e[v] && b.e[v]) return false;
    return true;
  };

  // Gebauer-Moeller update with the new element at index t
  auto update_pairs = [&](std::size_t t) {
    std::vector<detail::SPair> C;
    for (std::size_t g = 0; g < t; ++g) C.push_back(make_pair(g, t));
    std::vector<detail::SPair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const detail::SPair& p = C[k];
      bool keep = coprime(p.i, p.j);
      if (!keep) {
        bool dominated = false;
        for (std::size_t l = k + 1; l < C.size() && !dominated; ++l)
          if (mono_divides(C[l].lcm, p.lcm, nv)) dominated = true;
        for (std::size_t l = 0; l < D.size() && !dominated; ++l)
          if (mono_divides(D[l].lcm, p.lcm, nv)) dominated = true;
        keep = !dominated;
      }
      if (keep) D.push_back(p);
    }
    std::vector<detail::SPair> E;
    for (const auto& p : D)
      if (!coprime(p.i, p.j)) E.push_back(p);
    const Monomial& lmt = basis[t].leading_monomial();
    std::vector<detail::SPair> kept;
    for (const auto& p : pairs) {
      Monomial l1 = mono_lcm(basis[p.i].leading_monomial(), lmt, nv);
      Monomial l2 = mono_lcm(lmt, basis[p.j].leading_monomial(), nv);
      if (!mono_divides(lmt, p.lcm, nv) || l1 == p.lcm || l2 == p.lcm) kept.push_back(p);
    }
    kept.insert(kept.end(), E.begin(), E.end());
    pairs = std::move(kept);
  };

  for (std::size_t t = 0; t < basis.size(); ++t) update_pairs(t);

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& a = pairs[k];
      const auto& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      int c = R.cmp(a.lcm, b.lcm);
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (a.i != b.i ? a.i < b.i : a.j < b.j) best = k;
    }
    detail::SPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (p.sugar > degree_cap)
      fail(ErrorKind::DegreeCapExceeded,
           "S-pair degree " + std::to_string(p.sugar) + " exceeds cap " + std::to_string(degree_cap));
    ++out.stats.s_pairs;

    const Polynomial& f = basis[p.i];
    const Polynomial& g = basis[p.j];
    Polynomial spoly =
        f.mul_term(mono_div(p.lcm, f.leading_monomial(), nv), g.leading_coeff()) -
        g.mul_term(mono_div(p.lcm, g.leading_monomial(), nv), f.leading_coeff());
    Polynomial h = detail::reduce_full(spoly, basis);
    if (h.is_zero()) continue;
    if (h.degree() > static_cast<long>(degree_cap))
      fail(ErrorKind::DegreeCapExceeded, "reduced S-polynomial exceeds the degree cap");
    out.stats.max_degree = std::max(out.stats.max_degree, h.degree());
    if (h.is_constant()) {
      if (stop_on_unit) return unit_result();
      out.basis = {Polynomial::one(R)};
      return out;
    }
    basis.push_back(h);
    sugar.push_back(p.sugar);
    update_pairs(basis.size() - 1);
  }

  // minimalize: drop elements whose LM is divisible by another kept LM
  std::vector<std::size_t> order_idx(basis.size());
  for (std::size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    return R.cmp(basis[a].leading_monomial(), basis[b].leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (std::size_t idx : order_idx) {
    const Monomial& lm = basis[idx].leading_monomial();
    bool redundant = false;
    for (const auto& kept : minimal)
      if (mono_divides(kept.leading_monomial(), lm, nv)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[idx]);
  }
  // inter-reduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = detail::reduce_full(minimal[i], others);
      check(!r.is_zero(), ErrorKind::Internal, "minimal basis element reduced to zero");
      if (r != minimal[i]) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  for (auto& f : minimal) f = f.monic();
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return R.cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  out.basis = std::move(minimal);
  return out;
}

/// Remainder of full multivariate division; normal_form(f) == 0 iff f lies in
/// the ideal of the basis.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  check(f.ring_ptr() == G.ring, ErrorKind::OrderMismatch,
        "polynomial and basis live in different rings");
  return detail::reduce_full(f, G.basis);
}

inline bool ideal_member(const Polynomial& f, const GroebnerBasis& G) {
  return normal_form(f, G).is_zero();
}

namespace detail {

inline std::string fresh_var_name(const PolyRing& R, std::string base) {
  while (R.var_index(base) >= 0) base += "_";
  return base;
}

/// extended ring with one auxiliary variable in front (elimination position)
struct AuxRing {
  PolyRingPtr ring;
  std::vector<std::size_t> lift_map;  // original var i -> position i+1
};

inline AuxRing make_aux_ring(const PolyRing& R, const std::string& base) {
  std::vector<std::string> vars;
  vars.push_back(fresh_var_name(R, base));
  for (const auto& v : R.vars()) vars.push_back(v);
  std::vector<std::uint32_t> w;
  w.push_back(1);
  for (auto x : R.weights()) w.push_back(x);
  AuxRing a;
  a.ring = PolyRing::make(R.field_ptr(), vars, MonomialOrder::elim(1), w, true);
  a.lift_map.resize(R.nvars());
  for (std::size_t i = 0; i < R.nvars(); ++i) a.lift_map[i] = i + 1;
  return a;
}

inline Polynomial drop_first_var(const Polynomial& f, const PolyRing& target) {
  std::vector<std::size_t> back(f.ring().nvars());
  back[0] = 0;  // unused: the caller guarantees variable 0 does not occur
  for (std::size_t i = 1; i < f.ring().nvars(); ++i) back[i] = i - 1;
  return map_to_ring(f, target, back);
}

}  // namespace detail

/// Rabinowitsch: f in sqrt(I) iff 1 in I + (1 - t f).
inline bool radical_member(const Polynomial& f, const Ideal& I,
                           std::uint64_t degree_cap = kDefaultDegreeCap) {
  const PolyRing& R = *I.ring;
  if (f.is_zero()) return true;
  auto aux = detail::make_aux_ring(R, "t");
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(map_to_ring(g, *aux.ring, aux.lift_map));
  Polynomial tf = map_to_ring(f, *aux.ring, aux.lift_map)
                      .mul_term(mono_var(0), FieldElem::one(R.field()));
  gens.push_back(Polynomial::one(*aux.ring) - tf);
  // the Rabinowitsch trick destroys homogeneity; give degrees room to move
  std::uint64_t cap = degree_cap * 2 + 8;
  GroebnerBasis G = buchberger(Ideal(*aux.ring, std::move(gens)), cap, true);
  return G.is_unit_ideal();
}

/// Generators of I with the first k variables eliminated (result stated in
/// the original ring, involving only the remaining variables).
inline Ideal eliminate(const Ideal& I, std::size_t k,
                       std::uint64_t degree_cap = kDefaultDegreeCap) {
  const PolyRing& R = *I.ring;
  check(k >= 1 && k < R.nvars(), ErrorKind::DimensionMismatch, "bad elimination count");
  PolyRingPtr work = PolyRing::make(R.field_ptr(), R.vars(), MonomialOrder::elim(k), R.weights(), true);
  std::vector<std::size_t> id(R.nvars());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens) gens.push_back(map_to_ring(g, *work, id));
  GroebnerBasis G = buchberger(Ideal(*work, std::move(gens)), degree_cap);
  std::vector<Polynomial> kept;
  for (const auto& g : G.basis) {
    bool pure = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < k && pure; ++i)
        if (t.m.e[i]) pure = false;
    if (pure) kept.push_back(map_to_ring(g, R, id));
  }
  return Ideal(R, std::move(kept));
}

/// I cap J via t*I + (1-t)*J and elimination of t.
inline Ideal intersect(const Ideal& I, const Ideal& J,
                       std::uint64_t degree_cap = kDefaultDegreeCap) {
  check(I.ring == J.ring, ErrorKind::OrderMismatch, "intersection across rings");
  const PolyRing& R = *I.ring;
  auto aux = detail::make_aux_ring(R, "t");
  FieldElem one = FieldElem::one(R.field());
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens)
    gens.push_back(map_to_ring(f, *aux.ring, aux.lift_map).mul_term(mono_var(0), one));
  Polynomial one_minus_t =
      Polynomial::one(*aux.ring) - Polynomial::variable(*aux.ring, 0);
  for (const auto& g : J.gens)
    gens.push_back(one_minus_t * map_to_ring(g, *aux.ring, aux.lift_map));
  // products with the auxiliary variable raise degrees by one
  GroebnerBasis G = buchberger(Ideal(*aux.ring, std::move(gens)), degree_cap + 2);
  std::vector<Polynomial> kept;
  for (const auto& g : G.basis) {
    bool pure = true;
    for (const auto& t : g.terms())
      if (t.m.e[0]) pure = false;
    if (pure) kept.push_back(detail::drop_first_var(g, R));
  }
  return Ideal(R, std::move(kept));
}

namespace detail {

/// exact division by a single polynomial; Internal error on nonzero remainder
inline Polynomial divide_exact(const Polynomial& g, const Polynomial& f) {
  const PolyRing& R = g.ring();
  std::size_t nv = R.nvars();
  Polynomial work = g;
  std::vector<Term> quo;
  FieldElem lcinv = f.leading_coeff().inverse();
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    check(mono_divides(f.leading_monomial(), lt.m, nv), ErrorKind::Internal,
          "exact polynomial division has a remainder");
    Monomial q = mono_div(lt.m, f.leading_monomial(), nv);
    FieldElem c = lt.c * lcinv;
    quo.push_back({q, c});
    work = work - f.mul_term(q, c);
  }
  return Polynomial::from_terms(R, std::move(quo));
}

}  // namespace detail

/// (I : f) = { g : g*f in I }, computed as (1/f) * (I cap (f)).
inline Ideal quotient(const Ideal& I, const Polynomial& f,
                      std::uint64_t degree_cap = kDefaultDegreeCap) {
  check(!f.is_zero(), ErrorKind::ZeroDivisorQuery, "quotient by the zero polynomial");
  Ideal inter = intersect(I, Ideal(*I.ring, {f}), degree_cap);
  std::vector<Polynomial> gens;
  for (const auto& g : inter.gens)
    if (!g.is_zero()) gens.push_back(detail::divide_exact(g, f));
  return Ideal(*I.ring, std::move(gens));
}

/// Krull dimension of ring/I as the maximum size of a variable subset meeting
/// no leading-monomial support; -1 for the unit ideal.
inline long krull_dimension(const GroebnerBasis& G) {
  const PolyRing& R = *G.ring;
  std::size_t nv = R.nvars();
  if (G.is_unit_ideal()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : G.basis) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nv; ++i)
      if (g.leading_monomial().e[i]) s |= (1u << i);
    supports.push_back(s);
  }
  long best = 0;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    bool independent = true;
    for (auto s : supports)
      if ((s & ~mask) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<long>(__builtin_popcount(mask)));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hilbert numerators of monomial ideals

namespace detail {

inline void minimalize_monomials(std::vector<Monomial>& gens, std::size_t nv) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(gens[j], gens[i], nv)) {
        if (gens[j] == gens[i] && j > i) continue;  // keep the first of duplicates
        redundant = true;
      }
    }
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

inline IntPoly hilbert_num_rec(std::vector<Monomial> gens, const std::vector<std::uint32_t>& w,
                               std::size_t nv) {
  minimalize_monomials(gens, nv);
  if (gens.empty()) return IntPoly::constant(1);
  for (const auto& g : gens)
    if (g.is_one(nv)) return IntPoly();  // unit ideal: series 0
  auto wdeg = [&](const Monomial& m) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < nv; ++i) d += std::uint64_t(m.e[i]) * w[i];
    return d;
  };
  // pairwise coprime supports: product formula
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
      for (std::size_t v = 0; v < nv; ++v)
        if (gens[i].e[v] && gens[j].e[v]) {
          coprime = false;
          break;
        }
  if (coprime) {
    IntPoly acc = IntPoly::constant(1);
    for (const auto& g : gens) acc = acc * one_minus_t_pow(wdeg(g));
    return acc;
  }
  // pivot: variable occurring in the most generators
  std::size_t pivot = 0, bestcount = 0;
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t cnt = 0;
    for (const auto& g : gens)
      if (g.e[v]) ++cnt;
    if (cnt > bestcount) {
      bestcount = cnt;
      pivot = v;
    }
  }
  // H(I) = H(I + (x)) + t^w(x) H(I : x)
  std::vector<Monomial> plus;
  plus.push_back(mono_var(pivot));
  for (const auto& g : gens)
    if (!g.e[pivot]) plus.push_back(g);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial m = g;
    if (m.e[pivot]) m.e[pivot] -= 1;
    colon.push_back(m);
  }
  return hilbert_num_rec(std::move(plus), w, nv) +
         IntPoly::monomial(1, w[pivot]) * hilbert_num_rec(std::move(colon), w, nv);
}

}  // namespace detail

/// Numerator N(t) with Hilbert series of ring/M equal to
/// N(t) / prod_v (1 - t^weight(v)), for a monomial ideal M.
inline IntPoly hilbert_numerator(const std::vector<Monomial>& monomial_gens,
                                 const std::vector<std::uint32_t>& weights, std::size_t nvars) {
  return detail::hilbert_num_rec(monomial_gens, weights, nvars);
}

/// leading-term ideal of a reduced basis
inline std::vector<Monomial> leading_monomials(const GroebnerBasis& G) {
  std::vector<Monomial> out;
  for (const auto& g : G.basis) out.push_back(g.leading_monomial());
  return out;
}

}  // namespace sepcm
