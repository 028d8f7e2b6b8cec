#pragma once

// Scenario-file-driven frontend: an INI-like format with sections [field],
// [ring], [group], [define], [subgroups], [cocycles], [tasks].  Tasks execute
// in order; verdict-bearing tasks drive the exit code (0 pass, 2 fail,
// 3 inconclusive, 1 error) unless an explicit `expect:` clause turns the
// observed outcome into the thing being checked.  The exact grammar is
// documented in docs/scenario_format.md.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sepcm/cmcert.hpp"
#include "sepcm/cohomology.hpp"
#include "sepcm/error.hpp"
#include "sepcm/groebner.hpp"
#include "sepcm/group.hpp"
#include "sepcm/invariant.hpp"
#include "sepcm/mpoly.hpp"
#include "sepcm/report.hpp"
#include "sepcm/separating.hpp"

namespace sepcm {

// ---------------------------------------------------------------------------
// parsed scenario file

struct TaskSpec {
  std::string type;                 // key in [tasks]
  std::string name;                 // "<type>#<k>" with k counting per type
  std::string raw;                  // the quoted value as written
  std::vector<std::string> positional;
  std::vector<std::pair<std::string, std::string>> clauses;
  int line = 0;

  const std::string* clause(const std::string& key) const {
    for (const auto& [k, v] : clauses)
      if (k == key) return &v;
    return nullptr;
  }
};

struct ScenarioFile {
  std::string name;
  std::vector<std::pair<std::string, std::string>> field, ring, group, defines, subgroups,
      cocycles;
  std::vector<TaskSpec> tasks;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline void parse_task_value(TaskSpec& t) {
  for (const auto& chunk : split(t.raw, ';')) {
    if (chunk.empty()) continue;
    std::size_t colon = chunk.find(':');
    if (colon == std::string::npos) {
      t.positional.push_back(chunk);
    } else {
      t.clauses.emplace_back(trim(chunk.substr(0, colon)), trim(chunk.substr(colon + 1)));
    }
  }
}

}  // namespace detail

/// Parse the scenario grammar; ParseError carries the line number.
inline ScenarioFile parse_scenario_text(const std::string& text, const std::string& name = "") {
  ScenarioFile f;
  f.name = name;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::map<std::string, int> type_counts;
  int lineno = 0;
  auto err = [&](const std::string& m) -> void {
    fail(ErrorKind::ParseError, m + " at line " + std::to_string(lineno));
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = detail::trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') err("unterminated section header");
      section = detail::trim(s.substr(1, s.size() - 2));
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) err("expected key = \"value\"");
    std::string key = detail::trim(s.substr(0, eq));
    std::string val = detail::trim(s.substr(eq + 1));
    if (val.size() < 2 || val.front() != '"' || val.back() != '"')
      err("value must be a quoted string");
    val = val.substr(1, val.size() - 2);
    if (key.empty()) err("empty key");
    if (section == "field") f.field.emplace_back(key, val);
    else if (section == "ring") f.ring.emplace_back(key, val);
    else if (section == "group") f.group.emplace_back(key, val);
    else if (section == "define") f.defines.emplace_back(key, val);
    else if (section == "subgroups") f.subgroups.emplace_back(key, val);
    else if (section == "cocycles") f.cocycles.emplace_back(key, val);
    else if (section == "tasks") {
      TaskSpec t;
      t.type = key;
      t.name = key + "#" + std::to_string(++type_counts[key]);
      t.raw = val;
      t.line = lineno;
      detail::parse_task_value(t);
      f.tasks.push_back(std::move(t));
    } else {
      err("entry outside a known section");
    }
  }
  return f;
}

inline ScenarioFile parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  check(in.good(), ErrorKind::ParseError, "cannot open scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string base = path;
  std::size_t slash = base.find_last_of('/');
  if (slash != std::string::npos) base = base.substr(slash + 1);
  return parse_scenario_text(ss.str(), base);
}

// ---------------------------------------------------------------------------
// execution

struct RunOptions {
  std::string task_filter;          // empty: run all; else match name or type
  std::string format = "text";      // text | structured
  std::uint64_t degree_cap = kDefaultDegreeCap;
  std::optional<std::uint64_t> m_max;  // overrides per-operation defaults
  bool heuristic = false;
  double timeout_seconds = 0;       // 0: no deadline
};

struct ScenarioRun {
  ReportNode report;
  int exit_code = 0;

  std::string render(const std::string& format) const {
    std::string out;
    if (format == "structured")
      report.render_structured(out);
    else
      report.render_text(out);
    return out;
  }
};

namespace detail {

enum class TaskStatus { pass, fail, inconclusive, error, skipped };

inline const char* status_name(TaskStatus s) {
  switch (s) {
    case TaskStatus::pass: return "pass";
    case TaskStatus::fail: return "fail";
    case TaskStatus::inconclusive: return "inconclusive";
    case TaskStatus::error: return "error";
    case TaskStatus::skipped: return "skipped";
  }
  return "?";
}

struct ScenarioContext {
  FieldCtxPtr field;
  PolyRingPtr ring;
  std::shared_ptr<FiniteMatrixGroup> group;
  std::vector<std::pair<std::string, Polynomial>> defines;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> subgroups;
  std::vector<std::pair<std::string, Cocycle1>> cocycles;
  std::vector<std::pair<std::string, SubalgebraPresentation>> presentations;
  RunOptions opts;

  const Polynomial* find_define(const std::string& n) const {
    for (const auto& [k, v] : defines)
      if (k == n) return &v;
    return nullptr;
  }
  const std::vector<std::size_t>* find_subgroup(const std::string& n) const {
    for (const auto& [k, v] : subgroups)
      if (k == n) return &v;
    return nullptr;
  }
  const Cocycle1* find_cocycle(const std::string& n) const {
    for (const auto& [k, v] : cocycles)
      if (k == n) return &v;
    return nullptr;
  }
  const SubalgebraPresentation* find_presentation(const std::string& n) const {
    for (const auto& [k, v] : presentations)
      if (k == n) return &v;
    return nullptr;
  }

  Polynomial resolve_poly(const std::string& token) const {
    if (const Polynomial* p = find_define(token)) return *p;
    check(ring != nullptr, ErrorKind::UnknownVariable, "no ring declared");
    return parse_poly(*ring, token);
  }

  std::vector<Polynomial> resolve_poly_list(const std::string& csv) const {
    std::vector<Polynomial> out;
    for (const auto& tok : split(csv, ','))
      if (!tok.empty()) out.push_back(resolve_poly(tok));
    return out;
  }

  std::size_t resolve_element(const std::string& expr) const {
    check(group != nullptr, ErrorKind::UnknownVariable, "no group declared");
    Mat acc = Mat::identity(*field, group->dim());
    for (const auto& tok : split(expr, '*')) {
      bool found = false;
      for (std::size_t k = 0; k < group->generator_names().size(); ++k) {
        if (group->generator_names()[k] == tok) {
          acc = acc * group->element(group->generator_indices()[k]).matrix;
          found = true;
          break;
        }
      }
      check(found, ErrorKind::UnknownVariable, "unknown generator \"" + tok + "\" in element expression");
    }
    return group->index_of(acc);
  }

  ModulePtr resolve_module(const std::string& spec) const {
    check(group != nullptr, ErrorKind::UnknownVariable, "no group declared");
    auto parts = split(spec, ' ');
    std::vector<std::string> words;
    for (auto& p : parts)
      if (!p.empty()) words.push_back(p);
    check(!words.empty(), ErrorKind::ParseError, "empty module spec");
    if (words[0] == "graded") {
      check(words.size() == 2, ErrorKind::ParseError, "module spec: graded <degree>");
      check(ring != nullptr, ErrorKind::UnknownVariable, "graded modules need a ring");
      return CoefficientModule::graded_piece(*group, *ring, std::stoull(words[1]));
    }
    if (words[0] == "char") {
      std::string rest = spec.substr(spec.find("char") + 4);
      std::map<std::string, FieldElem> chi;
      for (const auto& asg : split(rest, ',')) {
        if (asg.empty()) continue;
        std::size_t arrow = asg.find("->");
        check(arrow != std::string::npos, ErrorKind::ParseError,
              "character values use gen->value");
        chi.emplace(trim(asg.substr(0, arrow)),
                    parse_field_elem(*field, trim(asg.substr(arrow + 2))));
      }
      return CoefficientModule::character(*group, chi);
    }
    fail(ErrorKind::ParseError, "unknown module kind \"" + words[0] + "\"");
  }
};

struct TaskOutcome {
  std::string outcome;
  TaskStatus natural = TaskStatus::pass;
  bool expect_handled = false;
};

inline bool prefix_match(const std::string& outcome, const std::string& expect) {
  return outcome.rfind(expect, 0) == 0;
}

// -------------------- task handlers --------------------

inline void task_group_info(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                            TaskOutcome& out) {
  check(ctx.group != nullptr, ErrorKind::UnknownVariable, "no group declared");
  node.add("order", static_cast<long long>(ctx.group->order()));
  std::string gens;
  for (const auto& n : ctx.group->generator_names()) gens += (gens.empty() ? "" : ",") + n;
  node.add("generators", gens);
  out.outcome = "order=" + std::to_string(ctx.group->order());
  if (const std::string* e = t.clause("expect-order")) {
    out.expect_handled = true;
    out.natural = std::stoull(*e) == ctx.group->order() ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline void task_orbits(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                        TaskOutcome& out) {
  check(ctx.group != nullptr, ErrorKind::UnknownVariable, "no group declared");
  std::uint32_t e = 1;
  if (const std::string* c = t.clause("e")) e = static_cast<std::uint32_t>(std::stoul(*c));
  OrbitReport rep = orbits_of_points(*ctx.group, e);
  node.add("extension", static_cast<long long>(e));
  node.add("points", static_cast<long long>(rep.point_count));
  node.add("orbit-count", static_cast<long long>(rep.orbits.size()));
  std::string sizes;
  for (auto s : rep.orbit_sizes()) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  node.add("orbit-sizes", sizes);
  node.add("burnside", rep.burnside_ok);
  out.outcome = "orbits=" + std::to_string(rep.orbits.size());
  if (const std::string* c = t.clause("expect-orbits")) {
    out.expect_handled = true;
    out.natural = std::stoull(*c) == rep.orbits.size() ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline TaskStatus verdict_status(const SeparatingVerdict& v) {
  switch (v.result) {
    case SeparatingVerdict::Result::pass: return TaskStatus::pass;
    case SeparatingVerdict::Result::fail: return TaskStatus::fail;
    case SeparatingVerdict::Result::inconclusive: return TaskStatus::inconclusive;
  }
  return TaskStatus::error;
}

inline void record_verdict(const SeparatingVerdict& v, ReportNode& node, TaskOutcome& out) {
  node.add("verdict", SeparatingVerdict::result_name(v.result));
  if (v.witness_points) {
    auto fmt = [](const std::vector<std::uint32_t>& p) {
      std::string s = "(";
      for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
      return s + ")";
    };
    node.add("witness-point-a", fmt(v.witness_points->first));
    node.add("witness-point-b", fmt(v.witness_points->second));
  }
  if (!v.witness_text.empty()) node.add("witness", v.witness_text);
  if (!v.note.empty()) node.add("note", v.note);
  out.outcome = SeparatingVerdict::result_name(v.result);
  out.natural = verdict_status(v);
}

inline std::vector<Polynomial> task_set_list(const TaskSpec& t, const ScenarioContext& ctx) {
  if (const std::string* c = t.clause("S")) return ctx.resolve_poly_list(*c);
  check(!t.positional.empty(), ErrorKind::ParseError,
        "task needs a polynomial list (positional or S:)");
  return ctx.resolve_poly_list(t.positional.front());
}

inline void task_check_separating(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                  TaskOutcome& out) {
  std::uint32_t e = 1;
  if (const std::string* c = t.clause("e")) e = static_cast<std::uint32_t>(std::stoul(*c));
  SeparatingVerdict v = separates_points(*ctx.group, *ctx.ring, task_set_list(t, ctx), e);
  node.add("extension", static_cast<long long>(e));
  record_verdict(v, node, out);
}

inline void task_check_geometric(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                 TaskOutcome& out) {
  SeparatingVerdict v =
      geometric_separating_test(*ctx.group, *ctx.ring, task_set_list(t, ctx), ctx.opts.degree_cap);
  record_verdict(v, node, out);
}

inline void task_noether_geometric(const TaskSpec&, ScenarioContext& ctx, ReportNode& node,
                                   TaskOutcome& out) {
  auto S = noether_separating_set(*ctx.group, *ctx.ring);
  node.add("set-size", static_cast<long long>(S.size()));
  SeparatingVerdict v = geometric_separating_test(*ctx.group, *ctx.ring, S, ctx.opts.degree_cap);
  record_verdict(v, node, out);
}

inline void task_check_inseparable(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                   TaskOutcome& out) {
  const std::string* sv = t.clause("S");
  check(sv != nullptr, ErrorKind::ParseError, "check-inseparable needs S:");
  std::vector<Polynomial> S = ctx.resolve_poly_list(*sv);
  std::vector<Polynomial> H;
  const std::string* hv = t.clause("H");
  check(hv != nullptr, ErrorKind::ParseError, "check-inseparable needs H:");
  if (hv->rfind("invariant-basis", 0) == 0) {
    std::uint64_t dmax = std::stoull(trim(hv->substr(std::string("invariant-basis").size())));
    for (std::uint64_t d = 1; d <= dmax; ++d) {
      InvariantBasis ib = invariant_basis(*ctx.group, *ctx.ring, d);
      H.insert(H.end(), ib.basis.begin(), ib.basis.end());
    }
  } else {
    H = ctx.resolve_poly_list(*hv);
  }
  std::uint64_t mmax = ctx.opts.m_max.value_or(6);
  if (const std::string* c = t.clause("mmax")) mmax = std::stoull(*c);
  InseparableClosureResult r =
      inseparable_closure_test(*ctx.ring, S, H, mmax, ctx.group.get(), ctx.opts.degree_cap);
  node.add("m-max", static_cast<long long>(mmax));
  node.add("H-size", static_cast<long long>(H.size()));
  std::string ms;
  for (auto m : r.witness_m) ms += (ms.empty() ? "" : ",") + std::to_string(m);
  node.add("witness-m", ms);
  record_verdict(r.verdict, node, out);
}

inline void task_invariant_basis(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                 TaskOutcome& out) {
  const std::string* dv = t.clause("d");
  check(dv != nullptr, ErrorKind::ParseError, "invariant-basis needs d:");
  InvariantBasis ib = invariant_basis(*ctx.group, *ctx.ring, std::stoull(*dv));
  node.add("degree", *dv);
  node.add("dim", static_cast<long long>(ib.dim()));
  ReportNode& b = node.child("basis");
  for (std::size_t i = 0; i < ib.basis.size(); ++i)
    b.add("b" + std::to_string(i + 1), ib.basis[i].to_string());
  out.outcome = "dim=" + std::to_string(ib.dim());
  if (const std::string* c = t.clause("expect-dim")) {
    out.expect_handled = true;
    out.natural = std::stoull(*c) == ib.dim() ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline void task_cocycle_space(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                               TaskOutcome& out) {
  const std::string* mv = t.clause("module");
  check(mv != nullptr, ErrorKind::ParseError, "cocycle-space needs module:");
  CohomologySpace h = cocycle_space(ctx.resolve_module(*mv));
  node.add("module", *mv);
  node.add("dim-z1", static_cast<long long>(h.dim_z1));
  node.add("dim-b1", static_cast<long long>(h.dim_b1));
  node.add("dim-h1", static_cast<long long>(h.dim_h1));
  out.outcome = "h1=" + std::to_string(h.dim_h1);
  if (const std::string* c = t.clause("expect-h1")) {
    out.expect_handled = true;
    out.natural = std::stoull(*c) == h.dim_h1 ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline const Cocycle1& task_cocycle(const TaskSpec& t, ScenarioContext& ctx) {
  const std::string* gv = t.clause("g");
  check(gv != nullptr, ErrorKind::ParseError, "task needs g: <cocycle name>");
  const Cocycle1* g = ctx.find_cocycle(*gv);
  check(g != nullptr, ErrorKind::UnknownVariable, "unknown cocycle \"" + *gv + "\"");
  return *g;
}

inline void task_is_coboundary(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                               TaskOutcome& out) {
  const Cocycle1& g = task_cocycle(t, ctx);
  auto w = coboundary_witness(g);
  node.add("coboundary", w.has_value());
  if (w) node.add("witness", g.module().value_to_string(*w));
  out.outcome = w.has_value() ? "true" : "false";
  out.natural = TaskStatus::pass;
}

inline void task_frobenius_cocycle(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                   TaskOutcome& out) {
  const Cocycle1& g = task_cocycle(t, ctx);
  std::uint64_t m = 1;
  if (const std::string* c = t.clause("m")) m = std::stoull(*c);
  Cocycle1 gm = frobenius_power_cocycle(g, m);
  node.add("m", static_cast<long long>(m));
  if (gm.module().kind() == CoefficientModule::Kind::graded) {
    node.add("target-module", "graded " + std::to_string(gm.module().degree()));
  } else {
    std::string chi;
    const FiniteMatrixGroup& G = gm.module().group();
    for (std::size_t k = 0; k < G.generator_indices().size(); ++k) {
      FieldElem v(&G.field(), gm.module().chi(G.generator_indices()[k]));
      chi += (chi.empty() ? "" : ",") + G.generator_names()[k] + "->" + v.to_string();
    }
    node.add("target-module", "char " + chi);
  }
  bool cb = is_coboundary(gm);
  node.add("coboundary", cb);
  if (const std::string* bind = t.clause("bind")) ctx.cocycles.emplace_back(*bind, gm);
  out.outcome = cb ? "coboundary" : "non-coboundary";
  out.natural = TaskStatus::pass;
}

inline void task_restrict(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                          TaskOutcome& out) {
  const Cocycle1& g = task_cocycle(t, ctx);
  const std::string* hv = t.clause("H");
  check(hv != nullptr, ErrorKind::ParseError, "restrict needs H: <subgroup name>");
  const std::vector<std::size_t>* H = ctx.find_subgroup(*hv);
  check(H != nullptr, ErrorKind::UnknownVariable, "unknown subgroup \"" + *hv + "\"");
  RestrictedCocycle r = restrict_cocycle(g, *ctx.group, *H);
  node.add("subgroup-order", static_cast<long long>(r.subgroup().order()));
  bool zero = r.cocycle().is_zero();
  bool cb = is_coboundary(r.cocycle());
  node.add("zero", zero);
  node.add("coboundary", cb);
  // a restriction is zero in H^1 exactly when it is a coboundary
  out.outcome = cb ? "coboundary" : "nontrivial";
  out.natural = TaskStatus::pass;
}

inline void task_annihilates(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                             TaskOutcome& out) {
  const Cocycle1& g = task_cocycle(t, ctx);
  const std::string* av = t.clause("a");
  check(av != nullptr, ErrorKind::ParseError, "annihilates needs a: <invariant>");
  for (const auto& tok : split(*av, ',')) {
    Polynomial a = ctx.resolve_poly(tok);
    AnnihilationResult r = annihilates(a, g);
    ReportNode& sub = node.child(tok);
    sub.add("annihilates", r.annihilates);
    if (r.witness) sub.add("witness", r.witness->to_string());
    if (!r.annihilates) out.natural = TaskStatus::fail;
  }
  out.outcome = out.natural == TaskStatus::pass ? "true" : "false";
}

inline void task_nontrivial_frobenius(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                      TaskOutcome& out) {
  const Cocycle1& g = task_cocycle(t, ctx);
  std::uint64_t mmax = ctx.opts.m_max.value_or(8);
  if (const std::string* c = t.clause("mmax")) mmax = std::stoull(*c);
  NontrivialityCertificate cert = nontrivial_all_frobenius(g, mmax);
  node.add("certificate", cert.to_string());
  if (!cert.witness.empty()) node.add("witness-orbit", cert.witness);
  if (cert.kind == NontrivialityCertificate::Kind::checked)
    node.add("note", "explicit checks only; not a proof for all m");
  out.outcome = cert.to_string();
  out.natural = cert.kind == NontrivialityCertificate::Kind::refuted ? TaskStatus::fail
                                                                     : TaskStatus::pass;
}

inline void task_cocycle_search(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                TaskOutcome& out) {
  std::uint64_t dmax = 5;
  if (const std::string* c = t.clause("dmax")) dmax = std::stoull(*c);
  const std::string* vs = t.clause("vanish-on");
  check(vs != nullptr, ErrorKind::ParseError, "cocycle-search needs vanish-on: <subgroups>");
  std::vector<const std::vector<std::size_t>*> subs;
  for (const auto& nm : split(*vs, ',')) {
    const std::vector<std::size_t>* H = ctx.find_subgroup(nm);
    check(H != nullptr, ErrorKind::UnknownVariable, "unknown subgroup \"" + nm + "\"");
    subs.push_back(H);
  }
  for (std::uint64_t d = 1; d <= dmax; ++d) {
    ModulePtr M = CoefficientModule::graded_piece(*ctx.group, *ctx.ring, d);
    CohomologySpace h = cocycle_space(M);
    // Search the span of the H^1 representatives: vanishing restrictions and
    // nontriviality are both invariant under adding coboundaries, so scanning
    // one representative per class is complete.
    std::size_t r = h.h1_reps.size();
    if (r == 0) continue;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
      total *= ctx.field->q();
      if (total > 4096) break;
    }
    check(total <= 4096, ErrorKind::SizeCap, "H^1 too large for the search");
    for (std::uint64_t codeword = 1; codeword < total; ++codeword) {
      // combine representatives with coefficients from the field
      std::uint64_t cw = codeword;
      std::vector<std::vector<std::uint32_t>> vals(ctx.group->order(),
                                                   std::vector<std::uint32_t>(M->dim(), 0));
      for (std::size_t i = 0; i < r; ++i) {
        std::uint32_t coeff = static_cast<std::uint32_t>(cw % ctx.field->q());
        cw /= ctx.field->q();
        if (!coeff) continue;
        for (std::size_t e = 0; e < ctx.group->order(); ++e)
          for (std::size_t j = 0; j < M->dim(); ++j)
            vals[e][j] = ctx.field->add(
                vals[e][j], ctx.field->mul(coeff, h.h1_reps[i].value(e)[j]));
      }
      Cocycle1 cand = Cocycle1::from_values(M, std::move(vals));
      if (is_coboundary(cand)) continue;
      bool vanishing = true;
      for (const auto* H : subs) {
        RestrictedCocycle rc = restrict_cocycle(cand, *ctx.group, *H);
        if (!is_coboundary(rc.cocycle())) {
          vanishing = false;
          break;
        }
      }
      if (vanishing) {
        node.add("found-degree", static_cast<long long>(d));
        ReportNode& v = node.child("values");
        for (std::size_t e = 0; e < ctx.group->order(); ++e)
          v.add(ctx.group->element(e).label, cand.value_poly(e).to_string());
        std::string bind = "found";
        if (const std::string* b = t.clause("bind")) bind = *b;
        ctx.cocycles.emplace_back(bind, cand);
        node.add("bound-as", bind);
        out.outcome = "found(degree=" + std::to_string(d) + ")";
        out.natural = TaskStatus::pass;
        return;
      }
    }
  }
  node.add("found-degree", "none");
  out.outcome = "not-found";
  out.natural = TaskStatus::fail;
}

inline void task_bar_hn(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                        TaskOutcome& out) {
  const std::string* nv = t.clause("n");
  check(nv != nullptr, ErrorKind::ParseError, "bar-hn needs n:");
  std::size_t dim = bar_hn_trivial(*ctx.group, static_cast<std::uint32_t>(std::stoul(*nv)));
  node.add("n", *nv);
  node.add("dim", static_cast<long long>(dim));
  out.outcome = "dim=" + std::to_string(dim);
  if (const std::string* c = t.clause("expect-dim")) {
    out.expect_handled = true;
    out.natural = std::stoull(*c) == dim ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline void task_check_hsop(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                            TaskOutcome& out) {
  std::vector<Polynomial> elems = task_set_list(t, ctx);
  bool ok = hsop_check_polyring(*ctx.ring, elems, ctx.opts.degree_cap);
  node.add("count", static_cast<long long>(elems.size()));
  node.add("hsop", ok);
  out.outcome = ok ? "true" : "false";
  out.natural = ok ? TaskStatus::pass : TaskStatus::fail;
}

inline void task_present(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                         TaskOutcome& out) {
  const std::string* nv = t.clause("name");
  const std::string* gv = t.clause("gens");
  check(nv && gv, ErrorKind::ParseError, "present needs name: and gens:");
  SubalgebraPresentation P =
      present(*ctx.ring, ctx.resolve_poly_list(*gv), ctx.group.get(), ctx.opts.degree_cap);
  node.add("generators", static_cast<long long>(P.gens.size()));
  std::string degs;
  for (auto d : P.degrees) degs += (degs.empty() ? "" : ",") + std::to_string(d);
  node.add("degrees", degs);
  node.add("relations", static_cast<long long>(P.relations.size()));
  ReportNode& rels = node.child("relation-basis");
  for (std::size_t i = 0; i < P.relations.size(); ++i)
    rels.add("r" + std::to_string(i + 1), P.relations[i].to_string());
  out.outcome = "relations=" + std::to_string(P.relations.size());
  if (const std::string* c = t.clause("expect-relations")) {
    out.expect_handled = true;
    out.natural = std::stoull(*c) == P.relations.size() ? TaskStatus::pass : TaskStatus::fail;
  }
  ctx.presentations.emplace_back(*nv, std::move(P));
}

inline const SubalgebraPresentation& task_presentation(const TaskSpec& t, ScenarioContext& ctx) {
  const std::string* av = t.clause("A");
  check(av != nullptr, ErrorKind::ParseError, "task needs A: <presentation name>");
  const SubalgebraPresentation* P = ctx.find_presentation(*av);
  check(P != nullptr, ErrorKind::UnknownVariable, "unknown presentation \"" + *av + "\"");
  return *P;
}

inline void task_regular_sequence(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                  TaskOutcome& out) {
  const SubalgebraPresentation& P = task_presentation(t, ctx);
  const std::string* sv = t.clause("seq");
  check(sv != nullptr, ErrorKind::ParseError, "regular-sequence needs seq:");
  std::vector<Polynomial> seq;
  for (const auto& tok : split(*sv, ','))
    if (!tok.empty()) seq.push_back(parse_poly(*P.tagring, tok));
  RegularSequenceResult r = regular_sequence_check(P, seq, ctx.opts.degree_cap);
  node.add("regular", r.regular);
  if (!r.regular) node.add("fail-index", static_cast<long long>(r.fail_index));
  out.outcome = r.regular ? "regular" : "fail-at " + std::to_string(r.fail_index);
  out.natural = r.regular ? TaskStatus::pass : TaskStatus::fail;
}

inline void task_hilbert_series(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                                TaskOutcome& out) {
  const SubalgebraPresentation& P = task_presentation(t, ctx);
  HilbertSeries H = hilbert_series(P);
  node.add("series", H.to_string());
  out.outcome = H.to_string();
  if (const std::string* c = t.clause("expect")) {
    out.expect_handled = true;
    HilbertSeries E = parse_hilbert_series(*c);
    node.add("expected", *c);
    out.natural = H == E ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline void task_free_module(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                             TaskOutcome& out) {
  const SubalgebraPresentation& P = task_presentation(t, ctx);
  const std::string* hv = t.clause("hsop");
  const std::string* gv = t.clause("gens");
  check(hv && gv, ErrorKind::ParseError, "free-module needs hsop: and gens:");
  std::vector<std::size_t> hsop;
  for (const auto& tok : split(*hv, ','))
    if (!tok.empty()) hsop.push_back(std::stoull(tok) - 1);  // 1-based indices
  std::vector<Polynomial> gens;
  for (const auto& tok : split(*gv, ','))
    if (!tok.empty()) gens.push_back(parse_poly(*P.tagring, tok));
  FreeModuleResult r = free_module_check(P, hsop, gens, ctx.opts.degree_cap);
  node.add("free", r.free);
  node.add("series", r.series.to_string());
  node.add("expected-series", r.expected_series.to_string());
  if (!r.free) node.add("reason", r.reason);
  out.outcome = r.free ? "true" : "false";
  out.natural = r.free ? TaskStatus::pass : TaskStatus::fail;
}

inline void task_gorenstein(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                            TaskOutcome& out) {
  const SubalgebraPresentation& P = task_presentation(t, ctx);
  const std::string* dv = t.clause("dimA");
  check(dv != nullptr, ErrorKind::ParseError, "gorenstein needs dimA:");
  std::size_t dimA = std::stoull(*dv);
  HilbertSeries H = hilbert_series(P);
  GorensteinResult r = gorenstein_check(H, dimA);
  node.add("series", H.to_string());
  node.add("gorenstein", r.gorenstein);
  if (r.gorenstein) {
    node.add("a", static_cast<long long>(r.a));
    bool strongly = r.a == static_cast<std::int64_t>(ctx.ring->nvars());
    node.add("strongly-gorenstein", strongly);
    node.add("dim-v", static_cast<long long>(ctx.ring->nvars()));
  }
  out.outcome = r.gorenstein ? "gorenstein(a=" + std::to_string(r.a) + ")" : "not-gorenstein";
  out.natural = TaskStatus::pass;
  if (const std::string* c = t.clause("expect-a")) {
    out.expect_handled = true;
    out.natural =
        r.gorenstein && r.a == std::stoll(*c) ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline void task_bireflections(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                               TaskOutcome& out) {
  BireflectionReport rep = bireflection_analysis(*ctx.group);
  node.add("reflections", static_cast<long long>(rep.reflections.size()));
  node.add("bireflections", static_cast<long long>(rep.bireflections.size()));
  node.add("generated-by-reflections", rep.generated_by_reflections);
  node.add("generated-by-bireflections", rep.generated_by_bireflections);
  std::string codims;
  for (auto c : rep.codims) codims += (codims.empty() ? "" : ",") + std::to_string(c);
  node.add("codims", codims);
  out.outcome = rep.generated_by_bireflections ? "generated-by-bireflections" : "not-generated";
  out.natural = TaskStatus::pass;
  if (const std::string* c = t.clause("expect-generated-by")) {
    out.expect_handled = true;
    bool ok = (*c == "reflections" && rep.generated_by_reflections) ||
              (*c == "bireflections" && rep.generated_by_bireflections);
    out.natural = ok ? TaskStatus::pass : TaskStatus::fail;
  }
}

inline void task_check_bireflection_criterion(const TaskSpec& t, ScenarioContext& ctx,
                                              ReportNode& node, TaskOutcome& out) {
  const std::string* nv = t.clause("N");
  const std::string* sv = t.clause("sigma");
  check(nv && sv, ErrorKind::ParseError, "check-bireflection-criterion needs N: and sigma:");
  const std::vector<std::size_t>* N = ctx.find_subgroup(*nv);
  check(N != nullptr, ErrorKind::UnknownVariable, "unknown subgroup \"" + *nv + "\"");
  std::size_t sigma = ctx.resolve_element(*sv);
  bool ok = check_bireflection_criterion(*ctx.group, *N, sigma);
  node.add("criterion", ok);
  if (ok) node.add("conclusion", "no graded geometric separating algebra is Cohen-Macaulay");
  out.outcome = ok ? "true" : "false";
  out.natural = ok ? TaskStatus::pass : TaskStatus::fail;
}

inline void task_certificate(const TaskSpec& t, ScenarioContext& ctx, ReportNode& node,
                             TaskOutcome& out) {
  const Cocycle1& g = task_cocycle(t, ctx);
  const std::string* av = t.clause("ann");
  check(av != nullptr, ErrorKind::ParseError, "certificate needs ann:");
  std::vector<Polynomial> ann = ctx.resolve_poly_list(*av);
  std::uint64_t mmax = ctx.opts.m_max.value_or(8);
  if (const std::string* c = t.clause("mmax")) mmax = std::stoull(*c);
  try {
    DefectCertificate cert =
        defect_certificate(*ctx.group, *ctx.ring, g, ann, mmax, ctx.opts.heuristic,
                           ctx.opts.degree_cap);
    node.add("nontriviality", cert.nontriviality.to_string());
    node.add("module", cert.cocycle_module);
    ReportNode& vals = node.child("cocycle");
    for (const auto& v : cert.cocycle_values) {
      std::size_t arrow = v.find(" -> ");
      vals.add(v.substr(0, arrow), v.substr(arrow + 4));
    }
    ReportNode& anns = node.child("annihilators");
    for (std::size_t i = 0; i < cert.annihilators.size(); ++i) {
      ReportNode& a = anns.child("a" + std::to_string(i + 1));
      a.add("element", cert.annihilators[i].to_string());
      a.add("witness", cert.annihilation_witnesses[i].to_string());
    }
    node.add("height", static_cast<long long>(cert.height));
    node.add("ambient-dim-drop", static_cast<long long>(cert.ambient_dim_drop));
    node.add("bound", static_cast<long long>(cert.bound));
    node.add("conditional", cert.conditional);
    node.add("verdict", cert.verdict);
    bool reverified = verify_certificate(*ctx.group, *ctx.ring, g, cert, ctx.opts.degree_cap);
    node.add("reverified", reverified);
    out.outcome = "certified(bound=" + std::to_string(cert.bound) + ")";
    out.natural = reverified ? TaskStatus::pass : TaskStatus::error;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NontrivialityNotCertified ||
        e.kind() == ErrorKind::NotAnnihilating || e.kind() == ErrorKind::NotPhsop) {
      node.add("refused", error_kind_name(e.kind()));
      node.add("reason", e.what());
      out.outcome = std::string("refused(") + error_kind_name(e.kind()) + ")";
      out.natural = TaskStatus::error;
      return;
    }
    throw;
  }
}

using TaskHandler = void (*)(const TaskSpec&, ScenarioContext&, ReportNode&, TaskOutcome&);

inline const std::vector<std::pair<std::string, TaskHandler>>& task_table() {
  static const std::vector<std::pair<std::string, TaskHandler>> table = {
      {"group-info", task_group_info},
      {"orbits", task_orbits},
      {"check-separating", task_check_separating},
      {"check-geometric", task_check_geometric},
      {"noether-geometric", task_noether_geometric},
      {"check-inseparable", task_check_inseparable},
      {"invariant-basis", task_invariant_basis},
      {"cocycle-space", task_cocycle_space},
      {"is-coboundary", task_is_coboundary},
      {"frobenius-cocycle", task_frobenius_cocycle},
      {"restrict", task_restrict},
      {"annihilates", task_annihilates},
      {"nontrivial-frobenius", task_nontrivial_frobenius},
      {"cocycle-search", task_cocycle_search},
      {"bar-hn", task_bar_hn},
      {"check-hsop", task_check_hsop},
      {"present", task_present},
      {"regular-sequence", task_regular_sequence},
      {"hilbert-series", task_hilbert_series},
      {"free-module", task_free_module},
      {"gorenstein", task_gorenstein},
      {"bireflections", task_bireflections},
      {"check-bireflection-criterion", task_check_bireflection_criterion},
      {"certificate", task_certificate},
  };
  return table;
}

}  // namespace detail

/// Execute a parsed scenario.
inline ScenarioRun run_scenario(const ScenarioFile& f, const RunOptions& opts = {}) {
  using detail::TaskStatus;
  ScenarioRun run;
  run.report.add("sepcm-report", "1");
  run.report.add("scenario", f.name.empty() ? "<inline>" : f.name);
  detail::ScenarioContext ctx;
  ctx.opts = opts;

  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(opts.timeout_seconds));

  // [field]
  {
    std::uint64_t p = 0;
    std::uint32_t deg = 1;
    std::vector<std::uint32_t> modulus;
    std::string gen = "w";
    std::string modulus_text;
    for (const auto& [k, v] : f.field) {
      if (k == "p") p = std::stoull(v);
      else if (k == "deg") deg = static_cast<std::uint32_t>(std::stoul(v));
      else if (k == "generator") gen = v;
      else if (k == "modulus") modulus_text = v;
      else fail(ErrorKind::ParseError, "unknown [field] key \"" + k + "\"");
    }
    check(p != 0, ErrorKind::ParseError, "scenario needs a [field] section with p");
    if (!modulus_text.empty()) {
      // modulus given as a polynomial in the generator symbol
      auto Rm = PolyRing::make(FieldCtx::make(p), {gen}, MonomialOrder::grevlex(), {}, true);
      Polynomial mp = parse_poly(*Rm, modulus_text);
      modulus.assign(deg + 1, 0);
      for (const auto& term : mp.terms()) {
        check(term.m.e[0] <= deg, ErrorKind::ParseError, "modulus degree exceeds deg");
        modulus[term.m.e[0]] = term.c.index();
      }
    }
    ctx.field = FieldCtx::make(p, deg, modulus, gen);
    std::string fdesc = "GF(" + std::to_string(p);
    if (deg > 1) fdesc += "^" + std::to_string(deg);
    fdesc += ")";
    if (deg > 1) {
      auto Rm = PolyRing::make(FieldCtx::make(p), {gen}, MonomialOrder::grevlex(), {}, true);
      std::vector<Term> ts;
      const auto& ms = ctx.field->modulus();
      for (std::size_t i = 0; i < ms.size(); ++i)
        if (ms[i]) ts.push_back({mono_var(0, static_cast<std::uint32_t>(i)),
                                 FieldElem::from_int(Rm->field(), ms[i])});
      fdesc += " modulus " + Polynomial::from_terms(*Rm, std::move(ts)).to_string();
    }
    run.report.add("field", fdesc);
  }

  // [ring]
  if (!f.ring.empty()) {
    std::vector<std::string> vars;
    std::vector<std::uint32_t> weights;
    MonomialOrder order = MonomialOrder::grevlex();
    for (const auto& [k, v] : f.ring) {
      if (k == "vars") {
        for (const auto& t : detail::split(v, ','))
          if (!t.empty()) vars.push_back(t);
      } else if (k == "weights") {
        for (const auto& t : detail::split(v, ','))
          if (!t.empty()) weights.push_back(static_cast<std::uint32_t>(std::stoul(t)));
      } else if (k == "order") {
        if (v == "grevlex") order = MonomialOrder::grevlex();
        else if (v == "lex") order = MonomialOrder::lex();
        else fail(ErrorKind::ParseError, "unknown order \"" + v + "\"");
      } else {
        fail(ErrorKind::ParseError, "unknown [ring] key \"" + k + "\"");
      }
    }
    ctx.ring = PolyRing::make(ctx.field, vars, order, weights);
    std::string vdesc;
    for (const auto& v : vars) vdesc += (vdesc.empty() ? "" : ",") + v;
    run.report.add("ring", vdesc);
  }

  // [group]
  if (!f.group.empty()) {
    std::vector<Mat> gens;
    std::vector<std::string> names;
    std::size_t copies = 1;
    for (const auto& [k, v] : f.group) {
      if (k == "copies") {
        copies = std::stoull(v);
        continue;
      }
      gens.push_back(parse_matrix(*ctx.field, v));
      names.push_back(k);
    }
    FiniteMatrixGroup G = FiniteMatrixGroup::enumerate(ctx.field, gens, names);
    if (copies > 1) G = direct_sum(G, copies);
    ctx.group = std::make_shared<FiniteMatrixGroup>(std::move(G));
    if (ctx.ring)
      check(ctx.group->dim() == ctx.ring->nvars(), ErrorKind::DimensionMismatch,
            "group dimension must match the ring variable count");
    run.report.add("group-order", static_cast<long long>(ctx.group->order()));
  }

  // [define]
  for (const auto& [k, v] : f.defines) {
    check(ctx.ring != nullptr, ErrorKind::ParseError, "[define] requires a [ring]");
    ctx.defines.emplace_back(k, parse_poly(*ctx.ring, v));
  }

  // [subgroups]
  for (const auto& [k, v] : f.subgroups) {
    check(ctx.group != nullptr, ErrorKind::ParseError, "[subgroups] requires a [group]");
    std::vector<std::size_t> seed;
    for (const auto& expr : detail::split(v, ','))
      if (!expr.empty()) seed.push_back(ctx.resolve_element(expr));
    ctx.subgroups.emplace_back(k, ctx.group->subgroup_closure(seed));
  }

  // [cocycles]
  for (const auto& [k, v] : f.cocycles) {
    check(ctx.group != nullptr, ErrorKind::ParseError, "[cocycles] requires a [group]");
    ModulePtr module;
    std::map<std::string, std::vector<std::uint32_t>> gen_values;
    std::map<std::string, FieldElem> char_values;
    for (const auto& chunk : detail::split(v, ';')) {
      if (chunk.empty()) continue;
      std::size_t colon = chunk.find(':');
      check(colon != std::string::npos, ErrorKind::ParseError,
            "cocycle clause needs key: value");
      std::string ckey = detail::trim(chunk.substr(0, colon));
      std::string cval = detail::trim(chunk.substr(colon + 1));
      if (ckey == "module") {
        module = ctx.resolve_module(cval);
      } else {
        check(module != nullptr, ErrorKind::ParseError,
              "cocycle \"" + k + "\": module clause must come first");
        if (module->kind() == CoefficientModule::Kind::graded) {
          gen_values[ckey] = module->from_polynomial(parse_poly(*ctx.ring, cval));
        } else {
          gen_values[ckey] = {parse_field_elem(*ctx.field, cval).index()};
        }
      }
    }
    check(module != nullptr, ErrorKind::ParseError, "cocycle \"" + k + "\" lacks a module");
    ctx.cocycles.emplace_back(k, Cocycle1::from_generator_values(module, gen_values));
  }

  // [tasks]
  ReportNode& tasks_node = run.report.child("tasks");
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"inconclusive", 0},
                                    {"error", 0}, {"skipped", 0}};
  for (const auto& t : f.tasks) {
    if (!opts.task_filter.empty() && t.name != opts.task_filter && t.type != opts.task_filter)
      continue;
    ReportNode& node = tasks_node.child(t.name);
    detail::TaskOutcome out;
    TaskStatus status;
    if (opts.timeout_seconds > 0 && std::chrono::steady_clock::now() > deadline) {
      out.outcome = "timeout";
      node.add("outcome", out.outcome);
      status = TaskStatus::skipped;
      node.add("status", detail::status_name(status));
      counts["skipped"]++;
      continue;
    }
    try {
      detail::TaskHandler handler = nullptr;
      for (const auto& [name, h] : detail::task_table())
        if (name == t.type) handler = h;
      check(handler != nullptr, ErrorKind::ParseError, "unknown task type \"" + t.type + "\"");
      handler(t, ctx, node, out);
      if (const std::string* e = t.clause("expect"); e && !out.expect_handled) {
        node.add("expected", *e);
        status = detail::prefix_match(out.outcome, *e) ? TaskStatus::pass : TaskStatus::fail;
      } else {
        status = out.natural;
        if (const std::string* e = t.clause("expect"); e && out.expect_handled)
          node.add("expected", *e);
      }
    } catch (const Error& e) {
      out.outcome = std::string("error: ") + e.what();
      status = TaskStatus::error;
    } catch (const std::exception& e) {
      out.outcome = std::string("error: ") + e.what();
      status = TaskStatus::error;
    }
    node.add("outcome", out.outcome);
    node.add("status", detail::status_name(status));
    counts[detail::status_name(status)]++;
  }

  ReportNode& summary = run.report.child("summary");
  for (const char* k : {"pass", "fail", "inconclusive", "error", "skipped"})
    summary.add(k, static_cast<long long>(counts[k]));
  if (counts["error"] > 0) run.exit_code = 1;
  else if (counts["fail"] > 0) run.exit_code = 2;
  else if (counts["inconclusive"] > 0 || counts["skipped"] > 0) run.exit_code = 3;
  else run.exit_code = 0;
  run.report.add("exit-code", static_cast<long long>(run.exit_code));
  return run;
}

inline ScenarioRun run_scenario_path(const std::string& path, const RunOptions& opts = {}) {
  return run_scenario(parse_scenario_file(path), opts);
}

}  // namespace sepcm
