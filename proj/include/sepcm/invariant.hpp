#pragma once

// Invariance testing, graded invariant-space bases by exact linear algebra,
// the transfer map, and Noether-degree separating sets.

#include <cstdint>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/group.hpp"
#include "sepcm/linalg.hpp"
#include "sepcm/mpoly.hpp"

namespace sepcm {

constexpr std::uint64_t kGradedPieceCap = 100000;

/// Monomials of weighted degree d, descending in the ring order.
inline std::vector<Monomial> monomial_basis(const PolyRing& R, std::uint64_t d,
                                            std::uint64_t cap = kGradedPieceCap) {
  std::vector<Monomial> out;
  Monomial cur{};
  const std::size_t nv = R.nvars();
  const auto& w = R.weights();
  // depth-first enumeration over exponents
  auto rec = [&](auto&& self, std::size_t var, std::uint64_t remaining) -> void {
    if (var + 1 == nv) {
      if (remaining % w[var] == 0) {
        cur.e[var] = static_cast<std::uint32_t>(remaining / w[var]);
        check(out.size() < cap, ErrorKind::SizeCap, "graded piece exceeds the size cap");
        out.push_back(cur);
        cur.e[var] = 0;
      }
      return;
    }
    for (std::uint64_t e = 0; e * w[var] <= remaining; ++e) {
      cur.e[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, remaining - e * w[var]);
    }
    cur.e[var] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&R](const Monomial& a, const Monomial& b) {
    return R.cmp(a, b) > 0;
  });
  return out;
}

inline bool is_invariant(const FiniteMatrixGroup& G, const Polynomial& f) {
  for (std::size_t gi : G.generator_indices())
    if (act(G.element(gi), f) != f) return false;
  return true;
}

struct InvariantBasis {
  std::uint64_t degree = 0;
  std::vector<Polynomial> basis;  // linearly independent, echelonized over monomial coordinates
  std::size_t dim() const { return basis.size(); }
};

/// Basis of the fixed subspace of k[V]_d under all generators, via the kernel
/// of the stacked (act(g_i) - 1) matrices on monomial coordinates.
inline InvariantBasis invariant_basis(const FiniteMatrixGroup& G, const PolyRing& R,
                                      std::uint64_t d) {
  check(G.dim() == R.nvars(), ErrorKind::DimensionMismatch,
        "group dimension must equal the variable count");
  const FieldCtx& F = R.field();
  std::vector<Monomial> monos = monomial_basis(R, d);
  const std::size_t N = monos.size();
  InvariantBasis out;
  out.degree = d;
  if (N == 0) return out;
  auto coord_index = [&](const Monomial& m) -> std::size_t {
    for (std::size_t i = 0; i < N; ++i)
      if (monos[i] == m) return i;
    fail(ErrorKind::Internal, "image monomial outside the graded piece");
  };
  const auto& gens = G.generator_indices();
  Mat sys(&F, gens.size() * N, N);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const GroupElement& g = G.element(gens[k]);
    for (std::size_t j = 0; j < N; ++j) {
      Polynomial img = act(g, Polynomial::monomial(R, monos[j], FieldElem::one(F)));
      for (const auto& t : img.terms())
        sys.at(k * N + coord_index(t.m), j) = t.c.index();
      sys.at(k * N + j, j) = F.sub(sys.at(k * N + j, j), 1);
    }
  }
  auto kernel = echelonize_rows(F, sys.kernel_basis(), N);
  for (const auto& v : kernel) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < N; ++i)
      if (v[i]) ts.push_back({monos[i], FieldElem(&F, v[i])});
    out.basis.push_back(Polynomial::from_terms(R, std::move(ts)));
  }
  return out;
}

/// Transfer sum over the whole group; always invariant.
inline Polynomial transfer(const FiniteMatrixGroup& G, const Polynomial& f) {
  Polynomial acc = Polynomial::zero(f.ring());
  for (const auto& g : G.elements()) acc = acc + act(g, f);
  return acc;
}

/// Invariant bases of degrees 1..|G| concatenated; a geometric separating set
/// by the Noether degree bound.
inline std::vector<Polynomial> noether_separating_set(const FiniteMatrixGroup& G,
                                                      const PolyRing& R) {
  std::vector<Polynomial> out;
  for (std::uint64_t d = 1; d <= G.order(); ++d) {
    InvariantBasis ib = invariant_basis(G, R, d);
    out.insert(out.end(), ib.basis.begin(), ib.basis.end());
  }
  return out;
}

}  // namespace sepcm
