#pragma once

// Degreewise 1-cocycle/coboundary linear algebra with graded polynomial or
// twisted one-dimensional coefficients, Frobenius powers of classes,
// annihilator tests, nontriviality certificates, and H^n(G, F_p) via the
// normalized bar complex.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/group.hpp"
#include "sepcm/invariant.hpp"
#include "sepcm/linalg.hpp"

namespace sepcm {

constexpr std::uint64_t kModuleDimCap = 10000;
constexpr std::uint64_t kBarComplexCap = 100000;

/// A finite-dimensional k-vector space with G-action given per element:
/// either the degree-d graded piece of k[V], or a twisted one-dimensional
/// character module.
class CoefficientModule {
 public:
  enum class Kind { graded, character };

  static std::shared_ptr<const CoefficientModule> graded_piece(const FiniteMatrixGroup& G,
                                                               const PolyRing& R,
                                                               std::uint64_t degree) {
    auto M = std::shared_ptr<CoefficientModule>(new CoefficientModule());
    M->kind_ = Kind::graded;
    M->G_ = &G;
    M->ring_ = &R;
    M->degree_ = degree;
    M->basis_ = monomial_basis(R, degree, kModuleDimCap);
    check(M->basis_.size() <= kModuleDimCap, ErrorKind::SizeCap, "module dimension cap exceeded");
    M->build_graded_actions();
    return M;
  }

  /// Character module: generator name -> value (nonzero).  Values must extend
  /// to a homomorphism on the whole group; verified exhaustively.
  static std::shared_ptr<const CoefficientModule> character(
      const FiniteMatrixGroup& G, const std::map<std::string, FieldElem>& gen_values) {
    auto M = std::shared_ptr<CoefficientModule>(new CoefficientModule());
    M->kind_ = Kind::character;
    M->G_ = &G;
    M->chi_.assign(G.order(), 0);
    const FieldCtx& F = G.field();
    std::vector<std::uint32_t> genv(G.generator_indices().size(), 1);
    for (std::size_t k = 0; k < G.generator_indices().size(); ++k) {
      auto it = gen_values.find(G.generator_names()[k]);
      if (it != gen_values.end()) {
        check(it->second.ctx_ptr() == &F, ErrorKind::IncompatibleFields,
              "character value from the wrong field");
        check(!it->second.is_zero(), ErrorKind::InvalidCocycle, "character value must be nonzero");
        genv[k] = it->second.index();
      }
    }
    // extend along a BFS; verify the homomorphism property on all pairs
    std::vector<bool> have(G.order(), false);
    M->chi_[G.identity_index()] = 1;
    have[G.identity_index()] = true;
    std::vector<std::size_t> queue{G.identity_index()};
    std::size_t head = 0;
    while (head < queue.size()) {
      std::size_t a = queue[head++];
      for (std::size_t k = 0; k < G.generator_indices().size(); ++k) {
        std::size_t n = G.mul(G.generator_indices()[k], a);
        if (have[n]) continue;
        M->chi_[n] = F.mul(genv[k], M->chi_[a]);
        have[n] = true;
        queue.push_back(n);
      }
    }
    for (std::size_t a = 0; a < G.order(); ++a)
      for (std::size_t b = 0; b < G.order(); ++b)
        check(M->chi_[G.mul(a, b)] == F.mul(M->chi_[a], M->chi_[b]), ErrorKind::InvalidCocycle,
              "generator values do not define a character of the group");
    return M;
  }

  Kind kind() const { return kind_; }
  const FiniteMatrixGroup& group() const { return *G_; }
  const FieldCtx& field() const { return G_->field(); }
  std::size_t dim() const { return kind_ == Kind::graded ? basis_.size() : 1; }
  std::uint64_t degree() const { return degree_; }
  const PolyRing* ring() const { return ring_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::uint32_t chi(std::size_t element) const { return chi_[element]; }

  /// action matrix of a group element on module coordinates
  Mat action(std::size_t element) const {
    if (kind_ == Kind::graded) return actions_[element];
    Mat m(&field(), 1, 1);
    m.at(0, 0) = chi_[element];
    return m;
  }

  bool trivial_action() const {
    const FieldCtx& F = field();
    if (kind_ == Kind::character) {
      for (auto v : chi_)
        if (v != F.one()) return false;
      return true;
    }
    for (std::size_t g = 0; g < G_->order(); ++g)
      if (!(actions_[g] == Mat::identity(F, basis_.size()))) return false;
    return true;
  }

  Polynomial to_polynomial(const std::vector<std::uint32_t>& coords) const {
    check(kind_ == Kind::graded, ErrorKind::Internal, "character module has no polynomial view");
    std::vector<Term> ts;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (coords[i]) ts.push_back({basis_[i], FieldElem(&field(), coords[i])});
    return Polynomial::from_terms(*ring_, std::move(ts));
  }

  std::vector<std::uint32_t> from_polynomial(const Polynomial& f) const {
    check(kind_ == Kind::graded, ErrorKind::Internal, "character module has no polynomial view");
    std::vector<std::uint32_t> coords(basis_.size(), 0);
    for (const auto& t : f.terms()) {
      bool placed = false;
      for (std::size_t i = 0; i < basis_.size() && !placed; ++i)
        if (basis_[i] == t.m) {
          coords[i] = t.c.index();
          placed = true;
        }
      check(placed, ErrorKind::NotHomogeneous, "polynomial does not lie in the graded piece");
    }
    return coords;
  }

  std::string value_to_string(const std::vector<std::uint32_t>& coords) const {
    if (kind_ == Kind::graded) return to_polynomial(coords).to_string();
    return FieldElem(&field(), coords[0]).to_string();
  }

 private:
  CoefficientModule() = default;

  void build_graded_actions() {
    const FieldCtx& F = field();
    const std::size_t N = basis_.size();
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < N; ++i) {
      std::vector<std::uint32_t> key(basis_[i].e.begin(), basis_[i].e.begin() + ring_->nvars());
      index.emplace(std::move(key), i);
    }
    auto lookup = [&](const Monomial& m) {
      std::vector<std::uint32_t> key(m.e.begin(), m.e.begin() + ring_->nvars());
      auto it = index.find(key);
      check(it != index.end(), ErrorKind::Internal, "action image outside the graded piece");
      return it->second;
    };
    actions_.reserve(G_->order());
    for (std::size_t g = 0; g < G_->order(); ++g) {
      Mat A(&F, N, N);
      for (std::size_t j = 0; j < N; ++j) {
        Polynomial img = act(G_->element(g), Polynomial::monomial(*ring_, basis_[j], FieldElem::one(F)));
        for (const auto& t : img.terms()) A.at(lookup(t.m), j) = t.c.index();
      }
      actions_.push_back(std::move(A));
    }
  }

  Kind kind_ = Kind::graded;
  const FiniteMatrixGroup* G_ = nullptr;
  const PolyRing* ring_ = nullptr;
  std::uint64_t degree_ = 0;
  std::vector<Monomial> basis_;
  std::vector<Mat> actions_;
  std::vector<std::uint32_t> chi_;
};

using ModulePtr = std::shared_ptr<const CoefficientModule>;

/// Homogeneous 1-cocycle: a value in the module for every group element,
/// zero at the identity, satisfying g_{st} = s.g_t + g_s (verified
/// exhaustively at construction).
class Cocycle1 {
 public:
  /// values indexed by group element; each a coordinate vector
  static Cocycle1 from_values(ModulePtr module, std::vector<std::vector<std::uint32_t>> values) {
    Cocycle1 c;
    c.module_ = std::move(module);
    c.values_ = std::move(values);
    c.verify();
    return c;
  }

  /// extend generator values along BFS words, then verify
  static Cocycle1 from_generator_values(ModulePtr module,
                                        const std::map<std::string, std::vector<std::uint32_t>>& gen_values) {
    const FiniteMatrixGroup& G = module->group();
    const FieldCtx& F = module->field();
    const std::size_t N = module->dim();
    std::vector<std::vector<std::uint32_t>> vals(G.order(), std::vector<std::uint32_t>(N, 0));
    std::vector<std::vector<std::uint32_t>> genv(G.generator_indices().size(),
                                                 std::vector<std::uint32_t>(N, 0));
    for (std::size_t k = 0; k < G.generator_indices().size(); ++k) {
      auto it = gen_values.find(G.generator_names()[k]);
      if (it != gen_values.end()) {
        check(it->second.size() == N, ErrorKind::DimensionMismatch, "cocycle value dimension");
        genv[k] = it->second;
      }
    }
    std::vector<bool> have(G.order(), false);
    have[G.identity_index()] = true;
    std::vector<std::size_t> queue{G.identity_index()};
    std::size_t head = 0;
    while (head < queue.size()) {
      std::size_t a = queue[head++];
      for (std::size_t k = 0; k < G.generator_indices().size(); ++k) {
        std::size_t s = G.generator_indices()[k];
        std::size_t n = G.mul(s, a);
        if (have[n]) continue;
        // g_{s a} = s.g_a + g_s
        Mat A = module->action(s);
        auto img = A.apply(vals[a]);
        for (std::size_t i = 0; i < N; ++i) img[i] = F.add(img[i], genv[k][i]);
        vals[n] = std::move(img);
        have[n] = true;
        queue.push_back(n);
      }
    }
    return from_values(std::move(module), std::move(vals));
  }

  const CoefficientModule& module() const { return *module_; }
  ModulePtr module_ptr() const { return module_; }
  const std::vector<std::vector<std::uint32_t>>& values() const { return values_; }
  const std::vector<std::uint32_t>& value(std::size_t element) const { return values_[element]; }

  bool is_zero() const {
    for (const auto& v : values_)
      for (auto x : v)
        if (x) return false;
    return true;
  }

  Polynomial value_poly(std::size_t element) const { return module_->to_polynomial(values_[element]); }

 private:
  void verify() const {
    const FiniteMatrixGroup& G = module_->group();
    const FieldCtx& F = module_->field();
    const std::size_t N = module_->dim();
    check(values_.size() == G.order(), ErrorKind::InvalidCocycle, "one value per group element");
    for (const auto& v : values_)
      check(v.size() == N, ErrorKind::InvalidCocycle, "value dimension mismatch");
    for (auto x : values_[G.identity_index()])
      check(x == 0, ErrorKind::InvalidCocycle, "cocycle value at the identity must vanish");
    for (std::size_t s = 0; s < G.order(); ++s) {
      Mat A = module_->action(s);
      for (std::size_t t = 0; t < G.order(); ++t) {
        auto lhs = values_[G.mul(s, t)];
        auto rhs = A.apply(values_[t]);
        for (std::size_t i = 0; i < N; ++i) rhs[i] = F.add(rhs[i], values_[s][i]);
        check(lhs == rhs, ErrorKind::InvalidCocycle,
              "cocycle identity fails at a pair of group elements");
      }
    }
  }

  ModulePtr module_;
  std::vector<std::vector<std::uint32_t>> values_;
};

struct CohomologySpace {
  std::size_t dim_z1 = 0, dim_b1 = 0, dim_h1 = 0;
  std::vector<Cocycle1> h1_reps;  // a complement basis representing H^1
};

namespace detail {

/// stacked (action(g) - 1) matrix over all non-identity elements
inline Mat coboundary_matrix(const CoefficientModule& M) {
  const FiniteMatrixGroup& G = M.group();
  const FieldCtx& F = M.field();
  const std::size_t N = M.dim();
  std::vector<std::size_t> elems;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (g != G.identity_index()) elems.push_back(g);
  Mat B(&F, elems.size() * N, N);
  for (std::size_t k = 0; k < elems.size(); ++k) {
    Mat A = M.action(elems[k]);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        B.at(k * N + i, j) = F.sub(A.at(i, j), i == j ? 1 : 0);
  }
  return B;
}

inline std::vector<std::vector<std::uint32_t>> unpack_cocycle(
    const FiniteMatrixGroup& G, std::size_t N, const std::vector<std::uint32_t>& flat) {
  std::vector<std::vector<std::uint32_t>> vals(G.order(), std::vector<std::uint32_t>(N, 0));
  std::size_t k = 0;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (g == G.identity_index()) continue;
    for (std::size_t i = 0; i < N; ++i) vals[g][i] = flat[k * N + i];
    ++k;
  }
  return vals;
}

}  // namespace detail

/// Solve the cocycle identities over F_q: unknowns are the values at
/// non-identity elements; equations run over (generator, element) pairs.
inline CohomologySpace cocycle_space(ModulePtr module) {
  const CoefficientModule& M = *module;
  const FiniteMatrixGroup& G = M.group();
  const FieldCtx& F = M.field();
  const std::size_t N = M.dim();
  check(N <= kModuleDimCap, ErrorKind::SizeCap, "module dimension cap exceeded");
  std::vector<std::size_t> pos(G.order(), G.order());
  std::vector<std::size_t> elems;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (g != G.identity_index()) {
      pos[g] = elems.size();
      elems.push_back(g);
    }
  const std::size_t nunk = elems.size() * N;
  std::vector<Mat> rows;
  for (std::size_t s : G.generator_indices()) {
    Mat A = M.action(s);
    for (std::size_t t = 0; t < G.order(); ++t) {
      // g_{s t} - s.g_t - g_s = 0
      Mat row(&F, N, nunk);
      std::size_t st = G.mul(s, t);
      if (st != G.identity_index())
        for (std::size_t i = 0; i < N; ++i)
          row.at(i, pos[st] * N + i) = F.add(row.at(i, pos[st] * N + i), 1);
      if (t != G.identity_index())
        for (std::size_t i = 0; i < N; ++i)
          for (std::size_t j = 0; j < N; ++j)
            row.at(i, pos[t] * N + j) = F.sub(row.at(i, pos[t] * N + j), A.at(i, j));
      for (std::size_t i = 0; i < N; ++i)
        row.at(i, pos[s] * N + i) = F.sub(row.at(i, pos[s] * N + i), 1);
      rows.push_back(std::move(row));
    }
  }
  Mat sys = rows.front();
  for (std::size_t i = 1; i < rows.size(); ++i) sys = Mat::vstack(sys, rows[i]);
  auto zbasis = sys.kernel_basis();

  CohomologySpace out;
  out.dim_z1 = zbasis.size();
  Mat B = detail::coboundary_matrix(M);
  // coboundaries as flat vectors = columns of B
  Mat brows(&F, N, nunk);
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t r = 0; r < nunk; ++r) brows.at(j, r) = B.at(r, j);
  out.dim_b1 = brows.rank();
  out.dim_h1 = out.dim_z1 - out.dim_b1;

  // representatives: kernel vectors extending the coboundary span
  Mat acc(&F, out.dim_b1 + out.dim_h1, nunk);
  std::size_t used = 0;
  {
    Mat tmp = brows;
    auto piv = tmp.rref_in_place();
    for (std::size_t r = 0; r < piv.size(); ++r) {
      for (std::size_t c = 0; c < nunk; ++c) acc.at(used, c) = tmp.at(r, c);
      ++used;
    }
  }
  std::size_t rank_now = out.dim_b1;
  for (const auto& z : zbasis) {
    if (out.h1_reps.size() == out.dim_h1) break;
    Mat trial(&F, used + 1, nunk);
    for (std::size_t r = 0; r < used; ++r)
      for (std::size_t c = 0; c < nunk; ++c) trial.at(r, c) = acc.at(r, c);
    for (std::size_t c = 0; c < nunk; ++c) trial.at(used, c) = z[c];
    if (trial.rank() > rank_now) {
      out.h1_reps.push_back(Cocycle1::from_values(module, detail::unpack_cocycle(G, N, z)));
      for (std::size_t c = 0; c < nunk; ++c) acc.at(used, c) = z[c];
      ++used;
      ++rank_now;
    }
  }
  return out;
}

/// Is g a coboundary?  Witness solves (s-1)b = g_s for every s; deterministic
/// (descending monomial coordinates, free variables zero).
inline std::optional<std::vector<std::uint32_t>> coboundary_witness(const Cocycle1& g) {
  const CoefficientModule& M = g.module();
  const FiniteMatrixGroup& G = M.group();
  const std::size_t N = M.dim();
  Mat B = detail::coboundary_matrix(M);
  std::vector<std::uint32_t> rhs;
  rhs.reserve(B.rows());
  for (std::size_t e = 0; e < G.order(); ++e) {
    if (e == G.identity_index()) continue;
    for (std::size_t i = 0; i < N; ++i) rhs.push_back(g.value(e)[i]);
  }
  return B.solve(rhs);
}

inline bool is_coboundary(const Cocycle1& g) { return coboundary_witness(g).has_value(); }

/// Componentwise p^m-th power; the class lands in the graded piece of degree
/// d*p^m, or in the character chi^(p^m).  The result is re-verified as a
/// cocycle; failure would signal an implementation bug.
inline Cocycle1 frobenius_power_cocycle(const Cocycle1& g, std::uint64_t m) {
  const CoefficientModule& M = g.module();
  const FiniteMatrixGroup& G = M.group();
  const FieldCtx& F = M.field();
  if (M.kind() == CoefficientModule::Kind::graded) {
    std::uint64_t pm = 1;
    for (std::uint64_t i = 0; i < m; ++i) pm *= F.p();
    ModulePtr target = CoefficientModule::graded_piece(G, *M.ring(), M.degree() * pm);
    std::vector<std::vector<std::uint32_t>> vals;
    for (std::size_t e = 0; e < G.order(); ++e)
      vals.push_back(target->from_polynomial(g.value_poly(e).frobenius_power(m)));
    return Cocycle1::from_values(std::move(target), std::move(vals));
  }
  std::map<std::string, FieldElem> chi;
  for (std::size_t k = 0; k < G.generator_indices().size(); ++k)
    chi.emplace(G.generator_names()[k],
                FieldElem(&F, F.frobenius(M.chi(G.generator_indices()[k]), m)));
  ModulePtr target = CoefficientModule::character(G, chi);
  std::vector<std::vector<std::uint32_t>> vals;
  for (std::size_t e = 0; e < G.order(); ++e)
    vals.push_back({F.frobenius(g.value(e)[0], m)});
  return Cocycle1::from_values(std::move(target), std::move(vals));
}

struct AnnihilationResult {
  bool annihilates = false;
  std::optional<Polynomial> witness;  // b with a*g_s = (s-1)b
};

/// Does the invariant a annihilate the class of g, i.e. is sigma -> a*g_sigma
/// a coboundary?
inline AnnihilationResult annihilates(const Polynomial& a, const Cocycle1& g) {
  const CoefficientModule& M = g.module();
  check(M.kind() == CoefficientModule::Kind::graded, ErrorKind::NotInvariant,
        "annihilation requires polynomial coefficients");
  const FiniteMatrixGroup& G = M.group();
  check(a.is_homogeneous(), ErrorKind::NotHomogeneous, "annihilator candidates must be homogeneous");
  check(is_invariant(G, a), ErrorKind::NotInvariant, "annihilator candidates must be invariant");
  std::uint64_t d = M.degree() + static_cast<std::uint64_t>(a.degree() < 0 ? 0 : a.degree());
  ModulePtr target = CoefficientModule::graded_piece(G, *M.ring(), d);
  std::vector<std::vector<std::uint32_t>> vals;
  for (std::size_t e = 0; e < G.order(); ++e)
    vals.push_back(target->from_polynomial(a * g.value_poly(e)));
  Cocycle1 ag = Cocycle1::from_values(target, std::move(vals));
  AnnihilationResult out;
  auto w = coboundary_witness(ag);
  out.annihilates = w.has_value();
  if (w) out.witness = target->to_polynomial(*w);
  return out;
}

/// Restriction to the subgroup generated by the given elements of G.  The
/// subgroup is held behind a stable pointer so the module can reference it.
struct RestrictedCocycle {
  std::shared_ptr<const FiniteMatrixGroup> subgroup_ptr;
  ModulePtr module;
  std::optional<Cocycle1> cocycle_;

  const FiniteMatrixGroup& subgroup() const { return *subgroup_ptr; }
  const Cocycle1& cocycle() const { return *cocycle_; }
};

inline RestrictedCocycle restrict_cocycle(const Cocycle1& g, const FiniteMatrixGroup& G,
                                          const std::vector<std::size_t>& subgroup_elements,
                                          const std::vector<std::string>& names = {}) {
  check(&g.module().group() == &G, ErrorKind::NotSubgroup, "cocycle lives over a different group");
  std::vector<Mat> gens;
  std::vector<std::string> gnames;
  for (std::size_t k = 0; k < subgroup_elements.size(); ++k) {
    check(subgroup_elements[k] < G.order(), ErrorKind::NotSubgroup, "element index out of range");
    gens.push_back(G.element(subgroup_elements[k]).matrix);
    gnames.push_back(k < names.size() ? names[k] : G.element(subgroup_elements[k]).label);
  }
  RestrictedCocycle out;
  out.subgroup_ptr = std::make_shared<const FiniteMatrixGroup>(
      FiniteMatrixGroup::enumerate(G.field_ptr(), gens, gnames));
  const FiniteMatrixGroup& H = *out.subgroup_ptr;
  // every subgroup element must belong to G
  for (const auto& e : H.elements())
    check(G.contains(e.matrix), ErrorKind::NotSubgroup, "closure escapes the ambient group");
  if (g.module().kind() == CoefficientModule::Kind::graded) {
    out.module = CoefficientModule::graded_piece(H, *g.module().ring(), g.module().degree());
  } else {
    std::map<std::string, FieldElem> chi;
    for (std::size_t k = 0; k < H.generator_indices().size(); ++k) {
      std::size_t in_g = G.index_of(H.element(H.generator_indices()[k]).matrix);
      chi.emplace(H.generator_names()[k], FieldElem(&G.field(), g.module().chi(in_g)));
    }
    out.module = CoefficientModule::character(H, chi);
  }
  std::vector<std::vector<std::uint32_t>> vals;
  for (const auto& e : H.elements()) vals.push_back(g.value(G.index_of(e.matrix)));
  out.cocycle_ = Cocycle1::from_values(out.module, std::move(vals));
  return out;
}

// ---------------------------------------------------------------------------
// nontriviality under all Frobenius powers

struct NontrivialityCertificate {
  enum class Kind {
    certified_trivial_coefficients,  // classes over the trivial module survive all powers
    certified_permutation,           // permutation module decomposition argument
    checked,                         // explicit checks to m_max only; NOT a proof
    refuted,                         // g^(p^m) is a coboundary at the recorded m
  };
  Kind kind = Kind::checked;
  std::uint64_t m = 0;              // refuted: least such m; checked: m_max reached
  std::string witness;              // permutation: orbit representative monomial
  bool certified() const {
    return kind == Kind::certified_trivial_coefficients || kind == Kind::certified_permutation;
  }
  std::string to_string() const {
    switch (kind) {
      case Kind::certified_trivial_coefficients: return "CERTIFIED(trivial-coefficients)";
      case Kind::certified_permutation: return "CERTIFIED(permutation)";
      case Kind::checked: return "CHECKED(" + std::to_string(m) + ")";
      case Kind::refuted: return "REFUTED(" + std::to_string(m) + ")";
    }
    return "?";
  }
};

namespace detail {

inline bool is_permutation_group(const FiniteMatrixGroup& G) {
  for (const auto& e : G.elements()) {
    for (std::size_t i = 0; i < G.dim(); ++i) {
      std::size_t ones = 0;
      for (std::size_t j = 0; j < G.dim(); ++j) {
        std::uint32_t v = e.matrix.at(i, j);
        if (v == 1)
          ++ones;
        else if (v != 0)
          return false;
      }
      if (ones != 1) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Certificate that g^(p^m) is nonzero for all m, or a refutation.
inline NontrivialityCertificate nontrivial_all_frobenius(const Cocycle1& g,
                                                         std::uint64_t m_max = 8) {
  check(!is_coboundary(g), ErrorKind::TrivialClass, "class is already a coboundary");
  const CoefficientModule& M = g.module();
  const FiniteMatrixGroup& G = M.group();
  NontrivialityCertificate cert;
  if (M.dim() >= 1 && M.trivial_action() &&
      (M.kind() == CoefficientModule::Kind::character || M.degree() == 0)) {
    cert.kind = NontrivialityCertificate::Kind::certified_trivial_coefficients;
    return cert;
  }
  if (M.kind() == CoefficientModule::Kind::graded && detail::is_permutation_group(G)) {
    // decompose along monomial orbits; some component must stay non-coboundary
    const std::size_t N = M.dim();
    std::vector<bool> used(N, false);
    for (std::size_t start = 0; start < N; ++start) {
      if (used[start]) continue;
      // orbit of the basis monomial under the action (permutation matrices map
      // monomials to monomials)
      std::vector<std::size_t> orbit{start};
      used[start] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (std::size_t e = 0; e < G.order(); ++e) {
          Mat A = M.action(e);
          for (std::size_t i = 0; i < N; ++i)
            if (A.at(i, orbit[k]) != 0 && !used[i]) {
              used[i] = true;
              orbit.push_back(i);
            }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      // project the cocycle onto the orbit span and test within the submodule
      const FieldCtx& F = M.field();
      std::vector<std::size_t> elems;
      for (std::size_t e = 0; e < G.order(); ++e)
        if (e != G.identity_index()) elems.push_back(e);
      Mat B(&F, elems.size() * orbit.size(), orbit.size());
      std::vector<std::uint32_t> rhs(elems.size() * orbit.size(), 0);
      for (std::size_t k = 0; k < elems.size(); ++k) {
        Mat A = M.action(elems[k]);
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (std::size_t j = 0; j < orbit.size(); ++j)
            B.at(k * orbit.size() + i, j) = F.sub(A.at(orbit[i], orbit[j]), i == j ? 1 : 0);
          rhs[k * orbit.size() + i] = g.value(elems[k])[orbit[i]];
        }
      }
      if (!B.solve(rhs).has_value()) {
        cert.kind = NontrivialityCertificate::Kind::certified_permutation;
        Monomial rep = M.basis()[orbit.front()];
        cert.witness = Polynomial::monomial(*M.ring(), rep, FieldElem::one(F)).to_string();
        return cert;
      }
    }
    fail(ErrorKind::Internal, "nontrivial cocycle with all orbit components trivial");
  }
  // explicit checks only
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    Cocycle1 gm = frobenius_power_cocycle(g, m);
    if (is_coboundary(gm)) {
      cert.kind = NontrivialityCertificate::Kind::refuted;
      cert.m = m;
      return cert;
    }
  }
  cert.kind = NontrivialityCertificate::Kind::checked;
  cert.m = m_max;
  return cert;
}

// ---------------------------------------------------------------------------
// H^n(G, F_p) via the normalized bar complex

/// dim_{F_p} H^n(G, F_p), trivial coefficients.
inline std::size_t bar_hn_trivial(const FiniteMatrixGroup& G, std::uint32_t n) {
  const std::uint64_t p = G.field().p();
  auto Fp = FieldCtx::make(p);
  if (n == 0) return 1;  // invariants of the trivial module
  const std::size_t m = G.order() - 1;  // non-identity elements index the normalized basis
  std::uint64_t dim_n = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    dim_n *= m;
    check(dim_n <= kBarComplexCap, ErrorKind::SizeCap, "bar complex cap exceeded");
  }
  std::vector<std::size_t> nonid;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (g != G.identity_index()) nonid.push_back(g);
  std::vector<std::size_t> pos(G.order(), 0);
  for (std::size_t i = 0; i < nonid.size(); ++i) pos[nonid[i]] = i;

  // differential C^k -> C^(k+1) on normalized cochains with trivial action
  auto differential = [&](std::uint32_t k) {
    std::uint64_t rows = 1, cols = 1;
    for (std::uint32_t i = 0; i < k + 1; ++i) rows *= m;
    for (std::uint32_t i = 0; i < k; ++i) cols *= m;
    check(rows <= kBarComplexCap, ErrorKind::SizeCap, "bar complex cap exceeded");
    Mat D(Fp.get(), rows, cols);
    std::vector<std::size_t> tuple(k + 1);
    for (std::uint64_t r = 0; r < rows; ++r) {
      std::uint64_t t = r;
      for (std::uint32_t i = 0; i < k + 1; ++i) {
        tuple[i] = nonid[t % m];
        t /= m;
      }
      auto add_term = [&](const std::vector<std::size_t>& args, std::uint32_t sign_odd) {
        // skip tuples containing the identity: normalized cochains vanish there
        std::uint64_t c = 0, mult = 1;
        for (std::uint32_t i = 0; i < k; ++i) {
          if (args[i] == G.identity_index()) return;
          c += pos[args[i]] * mult;
          mult *= m;
        }
        std::uint32_t& cell = D.at(r, c);
        std::uint32_t delta = sign_odd ? Fp->neg(1) : 1;
        cell = Fp->add(cell, delta);
      };
      std::vector<std::size_t> args(k);
      // (d f)(g_1..g_{k+1}) = f(g_2..g_{k+1}) + sum (-1)^i f(..g_i g_{i+1}..)
      //                        + (-1)^{k+1} f(g_1..g_k)
      for (std::uint32_t i = 0; i < k; ++i) args[i] = tuple[i + 1];
      add_term(args, 0);
      for (std::uint32_t i = 1; i <= k; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
          if (j + 1 < i)
            args[j] = tuple[j];
          else if (j + 1 == i)
            args[j] = G.mul(tuple[i - 1], tuple[i]);
          else
            args[j] = tuple[j + 1];
        }
        add_term(args, i & 1);
      }
      for (std::uint32_t i = 0; i < k; ++i) args[i] = tuple[i];
      add_term(args, (k + 1) & 1);
    }
    return D;
  };

  Mat dn = differential(n);
  std::size_t rank_dn = dn.rank();
  std::size_t rank_prev = 0;
  if (n >= 1) {
    if (n == 1) {
      rank_prev = 0;  // trivial coefficients: d^0 = 0
    } else {
      rank_prev = differential(n - 1).rank();
    }
  }
  return static_cast<std::size_t>(dim_n) - rank_dn - rank_prev;
}

}  // namespace sepcm
