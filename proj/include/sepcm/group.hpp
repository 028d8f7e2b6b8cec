#pragma once

// Finite matrix groups over F_q: BFS enumeration with canonical element
// order, the contragredient action on polynomials, orbits on points of
// extensions, fixed spaces, bireflection analysis, direct sums, and regular
// representations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sepcm/error.hpp"
#include "sepcm/gf.hpp"
#include "sepcm/linalg.hpp"
#include "sepcm/mpoly.hpp"

namespace sepcm {

constexpr std::size_t kGroupEnumerationCap = 100000;
constexpr std::uint64_t kOrbitPointCap = 1000000;
constexpr std::size_t kRegularRepCap = 24;

struct GroupElement {
  Mat matrix;
  Mat inverse;
  std::string label;  // shortest generator word, "1" for the identity
};

class FiniteMatrixGroup {
 public:
  /// BFS closure of invertible generators; elements sorted by the canonical
  /// row-major matrix order, labels rebuilt as shortest generator words.
  static FiniteMatrixGroup enumerate(FieldCtxPtr field, std::vector<Mat> generators,
                                     std::vector<std::string> names = {},
                                     std::size_t cap = kGroupEnumerationCap) {
    FiniteMatrixGroup G;
    G.field_ = std::move(field);
    check(!generators.empty(), ErrorKind::SingularGenerator, "at least one generator required");
    G.dim_ = generators.front().rows();
    if (names.empty())
      for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("g" + std::to_string(i));
    check(names.size() == generators.size(), ErrorKind::DimensionMismatch,
          "one name per generator");
    for (const auto& m : generators) {
      check(&m.field() == G.field_.get() && m.rows() == G.dim_ && m.cols() == G.dim_,
            ErrorKind::DimensionMismatch, "generators must be square matrices over one field");
      check(m.inverse().has_value(), ErrorKind::SingularGenerator, "singular generator matrix");
    }
    // BFS with word labels
    Mat id = Mat::identity(*G.field_, G.dim_);
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    auto key = [&](const Mat& m) {
      std::vector<std::uint32_t> k;
      k.reserve(G.dim_ * G.dim_);
      for (std::size_t i = 0; i < G.dim_; ++i)
        for (std::size_t j = 0; j < G.dim_; ++j) k.push_back(m.at(i, j));
      return k;
    };
    std::vector<Mat> elems{id};
    std::vector<std::string> labels{"1"};
    seen.emplace(key(id), 0);
    std::size_t head = 0;
    while (head < elems.size()) {
      Mat base = elems[head];
      std::string base_label = labels[head];
      ++head;
      for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        Mat next = generators[gi] * base;
        auto k = key(next);
        if (seen.count(k)) continue;
        check(elems.size() < cap, ErrorKind::CapExceeded, "group enumeration cap exceeded");
        seen.emplace(k, elems.size());
        elems.push_back(next);
        labels.push_back(base_label == "1" ? names[gi] : names[gi] + "*" + base_label);
      }
    }
    // canonical order
    std::vector<std::size_t> perm(elems.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return elems[a].lex_less(elems[b]); });
    for (std::size_t i : perm) {
      GroupElement e;
      e.matrix = elems[i];
      e.inverse = *elems[i].inverse();
      e.label = labels[i];
      G.elements_.push_back(std::move(e));
    }
    G.gen_names_ = names;
    for (const auto& g : generators) G.gen_indices_.push_back(G.index_of(g));
    G.identity_ = G.index_of(id);
    if (G.order() * G.order() <= 1u << 18) G.build_tables();
    return G;
  }

  const FieldCtx& field() const { return *field_; }
  FieldCtxPtr field_ptr() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return identity_; }
  const std::vector<std::size_t>& generator_indices() const { return gen_indices_; }
  const std::vector<std::string>& generator_names() const { return gen_names_; }

  std::size_t index_of(const Mat& m) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i].matrix == m) return i;
    fail(ErrorKind::NotSubgroup, "matrix is not an element of the group");
  }

  bool contains(const Mat& m) const {
    for (const auto& e : elements_)
      if (e.matrix == m) return true;
    return false;
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    if (!mul_table_.empty()) return mul_table_[a * order() + b];
    return index_of(elements_[a].matrix * elements_[b].matrix);
  }
  std::size_t inv(std::size_t a) const {
    if (!inv_table_.empty()) return inv_table_[a];
    return index_of(elements_[a].inverse);
  }

  /// subgroup closure of a seed set of element indices
  std::vector<std::size_t> subgroup_closure(std::vector<std::size_t> seed) const {
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> queue{identity_};
    in[identity_] = true;
    for (auto s : seed)
      if (!in[s]) {
        in[s] = true;
        queue.push_back(s);
      }
    std::size_t head = 0;
    while (head < queue.size()) {
      std::size_t a = queue[head++];
      for (std::size_t s : seed) {
        std::size_t n = mul(s, a);
        if (!in[n]) {
          in[n] = true;
          queue.push_back(n);
        }
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < order(); ++i)
      if (in[i]) out.push_back(i);
    return out;
  }

 private:
  void build_tables() {
    std::size_t n = order();
    mul_table_.resize(n * n);
    inv_table_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        mul_table_[a * n + b] = index_of(elements_[a].matrix * elements_[b].matrix);
      inv_table_[a] = index_of(elements_[a].inverse);
    }
  }

  FieldCtxPtr field_;
  std::size_t dim_ = 0;
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> gen_indices_;
  std::vector<std::string> gen_names_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> mul_table_, inv_table_;
};

/// (g.f)(v) = f(g^{-1} v): substitute x_j -> sum_i (g^{-1})_{ji} x_i.
/// A left action: act(gh, f) = act(g, act(h, f)).
inline Polynomial act(const GroupElement& g, const Polynomial& f) {
  const std::size_t d = g.matrix.rows();
  check(d == f.ring().nvars(), ErrorKind::DimensionMismatch,
        "matrix size must equal the variable count");
  std::vector<std::vector<FieldElem>> M(d, std::vector<FieldElem>(d, FieldElem::zero(f.ring().field())));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) M[i][j] = g.inverse.elem(i, j);
  return f.apply_matrix(M);
}

// ---------------------------------------------------------------------------
// orbits of points over an extension

struct OrbitReport {
  FieldCtxPtr ext_field;      // F_{q^e}
  std::uint64_t point_count = 0;
  std::vector<std::vector<std::uint64_t>> orbits;  // point indices, each orbit sorted
  bool burnside_ok = false;

  std::vector<std::size_t> orbit_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& o : orbits) s.push_back(o.size());
    return s;
  }
};

/// All G-orbits on V(F_{q^e}); deterministic ordering by smallest point index.
/// Burnside's orbit count identity is checked on every run.
inline OrbitReport orbits_of_points(const FiniteMatrixGroup& G, std::uint32_t e) {
  const FieldCtx& F = G.field();
  check(e >= 1, ErrorKind::SizeCap, "extension degree must be >= 1");
  OrbitReport rep;
  rep.ext_field = e == 1 ? G.field_ptr() : FieldCtx::make(F.p(), F.n() * e);
  const FieldCtx& E = *rep.ext_field;
  const std::size_t d = G.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total *= E.q();
    check(total <= kOrbitPointCap, ErrorKind::SizeCap, "point set exceeds the orbit cap");
  }
  rep.point_count = total;
  // embed every group matrix into the extension
  std::vector<Mat> mats;
  for (const auto& g : G.elements()) {
    Mat m(&E, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        m.at(i, j) = embed(g.matrix.elem(i, j), E).index();
    mats.push_back(std::move(m));
  }
  auto decode = [&](std::uint64_t idx) {
    std::vector<std::uint32_t> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<std::uint32_t>(idx % E.q());
      idx /= E.q();
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t idx = 0;
    for (std::size_t i = d; i-- > 0;) idx = idx * E.q() + v[i];
    return idx;
  };
  std::vector<bool> visited(total, false);
  std::uint64_t fixed_sum = 0;
  for (std::uint64_t p = 0; p < total; ++p) {
    if (visited[p]) continue;
    std::vector<std::uint64_t> orbit;
    auto pt = decode(p);
    for (const auto& m : mats) {
      std::uint64_t q = encode(m.apply(pt));
      if (!visited[q]) {
        visited[q] = true;
        orbit.push_back(q);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    rep.orbits.push_back(std::move(orbit));
  }
  for (const auto& m : mats) {
    for (std::uint64_t p = 0; p < total; ++p) {
      auto pt = decode(p);
      if (encode(m.apply(pt)) == p) ++fixed_sum;
    }
  }
  rep.burnside_ok = fixed_sum == rep.orbits.size() * G.order();
  check(rep.burnside_ok, ErrorKind::Internal, "Burnside orbit-count identity failed");
  // orbit sizes divide |G| and sum to the point count
  std::uint64_t sum = 0;
  for (const auto& o : rep.orbits) {
    check(G.order() % o.size() == 0, ErrorKind::Internal, "orbit size does not divide |G|");
    sum += o.size();
  }
  check(sum == total, ErrorKind::Internal, "orbit sizes do not sum to the point count");
  return rep;
}

// ---------------------------------------------------------------------------
// fixed spaces and bireflections

struct FixedSpace {
  std::vector<std::vector<std::uint32_t>> basis;  // reduced echelon rows, length d
  std::size_t dim = 0;
  std::size_t codim = 0;
};

inline FixedSpace fixed_space_of(const FiniteMatrixGroup& G, const std::vector<std::size_t>& idxs) {
  const FieldCtx& F = G.field();
  const std::size_t d = G.dim();
  Mat stacked(&F, idxs.size() * d, d);
  for (std::size_t k = 0; k < idxs.size(); ++k) {
    const Mat& m = G.element(idxs[k]).matrix;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        stacked.at(k * d + i, j) = F.sub(m.at(i, j), i == j ? 1 : 0);
  }
  FixedSpace fs;
  fs.basis = echelonize_rows(F, stacked.kernel_basis(), d);
  fs.dim = fs.basis.size();
  fs.codim = d - fs.dim;
  return fs;
}

inline FixedSpace fixed_space(const FiniteMatrixGroup& G, std::size_t element_index) {
  return fixed_space_of(G, {element_index});
}

/// span containment test for echelon bases
inline bool subspace_contained(const FieldCtx& F, const std::vector<std::vector<std::uint32_t>>& A,
                               const std::vector<std::vector<std::uint32_t>>& B, std::size_t width) {
  if (A.empty()) return true;
  Mat m(&F, B.size() + 1, width);
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m.at(i, j) = B[i][j];
  std::size_t rb = Mat(m).rank();
  for (const auto& v : A) {
    Mat ext(&F, B.size() + 1, width);
    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = 0; j < width; ++j) ext.at(i, j) = B[i][j];
    for (std::size_t j = 0; j < width; ++j) ext.at(B.size(), j) = v[j];
    if (ext.rank() != rb) return false;
  }
  return true;
}

struct BireflectionReport {
  std::vector<std::size_t> codims;          // per element
  std::vector<std::size_t> reflections;     // nonidentity elements, codim <= 1
  std::vector<std::size_t> bireflections;   // nonidentity elements, codim <= 2
  bool generated_by_reflections = false;
  bool generated_by_bireflections = false;
};

inline BireflectionReport bireflection_analysis(const FiniteMatrixGroup& G) {
  BireflectionReport rep;
  for (std::size_t i = 0; i < G.order(); ++i) {
    FixedSpace fs = fixed_space(G, i);
    rep.codims.push_back(fs.codim);
    if (i == G.identity_index()) continue;
    if (fs.codim <= 1) rep.reflections.push_back(i);
    if (fs.codim <= 2) rep.bireflections.push_back(i);
  }
  rep.generated_by_reflections = G.subgroup_closure(rep.reflections).size() == G.order();
  rep.generated_by_bireflections = G.subgroup_closure(rep.bireflections).size() == G.order();
  return rep;
}

/// Hypothesis check by exhaustive enumeration: N normal with elementary
/// abelian p-quotient, sigma outside N, and V^sigma contained in no
/// bireflection's fixed space within G \ N.
inline bool check_bireflection_criterion(const FiniteMatrixGroup& G,
                                         const std::vector<std::size_t>& N, std::size_t sigma) {
  std::vector<bool> inN(G.order(), false);
  for (auto i : N) inN[i] = true;
  check(inN[G.identity_index()], ErrorKind::NotSubgroup, "N must contain the identity");
  // subgroup and normality, exhaustively
  for (auto a : N)
    for (auto b : N)
      check(inN[G.mul(a, b)], ErrorKind::NotSubgroup, "N is not closed under products");
  for (std::size_t g = 0; g < G.order(); ++g)
    for (auto a : N)
      check(inN[G.mul(G.mul(g, a), G.inv(g))], ErrorKind::NotNormal, "N is not normal in G");
  // G/N elementary abelian p-group: commutators and p-th powers land in N
  const std::uint64_t p = G.field().p();
  for (std::size_t g = 0; g < G.order(); ++g) {
    std::size_t gp = G.identity_index();
    for (std::uint64_t i = 0; i < p; ++i) gp = G.mul(gp, g);
    check(inN[gp], ErrorKind::QuotientNotElementaryAbelian, "quotient has an element of order > p");
    for (std::size_t h = 0; h < G.order(); ++h) {
      std::size_t comm = G.mul(G.mul(G.inv(g), G.inv(h)), G.mul(g, h));
      check(inN[comm], ErrorKind::QuotientNotElementaryAbelian, "quotient is not abelian");
    }
  }
  check(!inN[sigma], ErrorKind::SigmaInN, "sigma lies in N");
  FixedSpace vs = fixed_space(G, sigma);
  for (std::size_t b = 0; b < G.order(); ++b) {
    if (inN[b] || b == G.identity_index()) continue;
    FixedSpace fb = fixed_space(G, b);
    if (fb.codim > 2) continue;  // not a bireflection
    if (subspace_contained(G.field(), vs.basis, fb.basis, G.dim())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// constructions

inline FiniteMatrixGroup direct_sum(const FiniteMatrixGroup& G, std::size_t copies) {
  check(copies >= 1, ErrorKind::DimensionMismatch, "need at least one copy");
  const std::size_t d = G.dim();
  std::vector<Mat> gens;
  for (std::size_t gi : G.generator_indices()) {
    const Mat& m = G.element(gi).matrix;
    Mat big(&G.field(), d * copies, d * copies);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) big.at(c * d + i, c * d + j) = m.at(i, j);
    gens.push_back(std::move(big));
  }
  return FiniteMatrixGroup::enumerate(G.field_ptr(), gens, G.generator_names());
}

/// Left-regular permutation representation of an enumerated group.
inline FiniteMatrixGroup regular_representation(const FiniteMatrixGroup& G,
                                                FieldCtxPtr field = nullptr) {
  check(G.order() <= kRegularRepCap, ErrorKind::SizeCap,
        "regular representation restricted to groups of order <= 24");
  if (!field) field = G.field_ptr();
  const std::size_t n = G.order();
  std::vector<Mat> gens;
  for (std::size_t gi : G.generator_indices()) {
    Mat m(field.get(), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(G.mul(gi, i), i) = 1;
    gens.push_back(std::move(m));
  }
  return FiniteMatrixGroup::enumerate(field, gens, G.generator_names());
}

/// parse "[[1,0],[w,1]]": row-major nested brackets of field-element literals
inline Mat parse_matrix(const FieldCtx& F, const std::string& text) {
  std::vector<std::vector<FieldElem>> rows;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    check(pos < text.size() && text[pos] == c, ErrorKind::SyntaxError,
          std::string("expected '") + c + "' in matrix literal \"" + text + "\"");
    ++pos;
  };
  expect('[');
  for (;;) {
    expect('[');
    std::vector<FieldElem> row;
    for (;;) {
      skip();
      std::size_t start = pos;
      int depth = 0;
      while (pos < text.size() && (depth > 0 || (text[pos] != ',' && text[pos] != ']'))) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')') --depth;
        ++pos;
      }
      row.push_back(parse_field_elem(F, text.substr(start, pos - start)));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(']');
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  expect(']');
  skip();
  check(pos == text.size(), ErrorKind::SyntaxError, "trailing characters after matrix literal");
  std::size_t d = rows.size();
  Mat m(&F, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    check(rows[i].size() == d, ErrorKind::DimensionMismatch, "matrix literal is not square");
    for (std::size_t j = 0; j < d; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

}  // namespace sepcm
