// SPDX-License-Identifier: Apache-2.0
// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time limit.
#include <chrono>
#include <algorithm>
#include <functional>
#include <random>
#include <iostream>
#include <sstream>
#include <string>

#include "nmlab/extension.hpp"
#include "nmlab/harness.hpp"
#include "nmlab/representations.hpp"
#include "oracle.hpp"

using namespace nmlab;

namespace {

const Language pq({"p", "q"});
Formula f(const char* text) { return parse_formula(text, pq); }
FormulaSet fs(const char* text) { return parse_formula_set(text, pq); }

struct Gate {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

bool run(int number, const char* title, double limit_ms, const std::function<void(Gate&)>& body) {
  Gate g;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(g);
  } catch (const std::exception& e) {
    g.require(false, std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  g.require(ms < limit_ms, "over the time limit");
  std::cout << (g.ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "  (" << ms << " ms, limit "
            << limit_ms << " ms)";
  if (!g.ok) std::cout << "  -- " << g.why.str();
  std::cout << std::endl;
  return g.ok;
}

bool has(const std::vector<std::string>& v, const char* s) { return std::find(v.begin(), v.end(), s) != v.end(); }

void gcwa_deductivity(Gate& g) {
  const RunReport r = run_scenario("paper-gcwa-deductivity");
  g.require(r.passed(), "scenario paper-gcwa-deductivity did not pass");
  const Json& w = r.checks.at(0).result.at("witness");
  g.require(w.at("X") == Json({"p", "p | q"}) && w.at("Y") == Json({"p | q"}) && w.at("formula") == "!q",
            "unexpected witness " + w.dump());
  // Oracle: !q ∈ C(X) and !q ∉ cn(X ∪ C(Y)).
  const oracle::Vals not_q = oracle::models(f("!q"), 2);
  const FormulaSet x = fs("p, p | q");
  const FormulaSet y = fs("p | q");
  g.require(oracle::subset(oracle::gcwa(x, 2), not_q), "oracle: !q not in GCWA(X)");
  g.require(!oracle::subset(oracle::meet(oracle::models(x, 2), oracle::gcwa(y, 2)), not_q),
            "oracle: !q in cn(X, GCWA(Y))");
  g.require(!oracle::subset(oracle::gcwa(fs("p | q"), 2), oracle::models(f("!p | !q"), 2)), "oracle: !p | !q");
  g.require(oracle::subset(oracle::gcwa(fs("p"), 2), not_q), "oracle: GCWA({p}) lacks !q");
  g.require(oracle::subset(oracle::gcwa(fs("q"), 2), oracle::models(f("!p"), 2)), "oracle: GCWA({q}) lacks !p");
}

void separation(Gate& g) {
  const RunReport r = run_scenario("paper-two-variable-separation");
  g.require(r.passed(), "scenario paper-two-variable-separation did not pass");
  const InferenceOp op = op_from_assumptions(anchored_assumptions(f("p"), pq));
  const Universe u = Universe::with_default_pool(pq, 1);
  g.require(represent(op, fs("p"), ReprKind::largest, u).contains(f("p"), pq), "p missing from largest({p})");
  g.require(!represent(op, fs("p"), ReprKind::trace, u).contains(f("p"), pq), "p present in trace({p})");
  // Oracle: C(X) = cn(p) when X is tautological, else cn(X).
  auto c = [](const oracle::Vals& m) { return m == oracle::all(2) ? oracle::models(Formula::atom(0), 2) : m; };
  oracle::Vals largest = c(oracle::all(2));
  for (unsigned v : c(oracle::models(f("p"), 2))) largest.insert(v);
  oracle::Vals trace;
  for (const ModelSet& m : all_model_sets(pq)) {
    const auto vs = m.valuations();
    const oracle::Vals mv(vs.begin(), vs.end());
    if (!oracle::subset(oracle::models(f("p"), 2), mv)) continue;
    for (unsigned v : c(mv)) trace.insert(v);
  }
  const oracle::Vals p = oracle::models(f("p"), 2);
  g.require(oracle::subset(largest, p), "oracle: p not in largest");
  g.require(!oracle::subset(trace, p), "oracle: p in trace");
}

void cwa_representable(Gate& g) {
  const Universe u = Universe::with_default_pool(pq, 3);
  const InferenceOp op = op_cwa(pq);
  g.require(check_property(op, PropertyKind::supraclassicality, u).passed(), "not supraclassical");
  g.require(check_property(op, PropertyKind::deductivity, u).passed(), "not deductive");
  g.require(verify_representation(op, ReprKind::largest, u).passed(), "largest representation equation fails");
  // Oracle: C(X) = cn(X ∪ ⋂_{Y ⊆ X} C(Y)) for every X, from brute-force CWA.
  for (const auto& t : u.sets()) {
    oracle::Vals core;
    t.formulas.for_each_subset([&](const FormulaSet& y) {
      for (unsigned v : oracle::cwa(y, 2)) core.insert(v);
    });
    if (oracle::meet(oracle::models(t.formulas, 2), core) != oracle::cwa(t.formulas, 2)) {
      g.require(false, "oracle equation fails at " + to_string(t.formulas, pq));
      return;
    }
  }
}

void poole_suite(Gate& g) {
  const Universe u = Universe::with_default_pool(pq, 3);
  const PooleSystem sys{fs("p, !p")};
  const InferenceOp op = op_poole(sys, pq);
  for (PropertyKind p : {PropertyKind::supraclassicality, PropertyKind::left_absorption, PropertyKind::deductivity,
                         PropertyKind::cumulativity}) {
    g.require(check_property(op, p, u).passed(), std::string("fails ") + std::string(to_string(p)));
  }
  g.require(verify_representation(op, ReprKind::cumulative_trace, u).passed(), "cumulative trace equation fails");
  const PropertyVerdict nat = check_assumption_antitonicity(poole_natural_assumptions(sys, pq), u);
  g.require(nat.outcome == Outcome::counterexample && nat.witness && nat.witness->x == fs("") &&
                nat.witness->y == fs("p"),
            "natural presentation witness is not (∅, {p})");
  g.require(verify_cumuni(op, u).passed(), "extension is not cumulative");
  for (const auto& t : u.sets()) {
    if (op.apply(t.formulas).models().bits() != oracle::bits(oracle::poole(sys.defaults, t.formulas, 2))) {
      g.require(false, "disagrees with the oracle at " + to_string(t.formulas, pq));
      return;
    }
  }
}

void kernel_identities(Gate& g) {
  const Language pqr({"p", "q", "r"});
  const FormulaSet pool =
      parse_formula_set("p, q, r, !p, p | q, q & r, p -> r, !q | r, p & !r, q -> p", pqr);
  const Universe u(pqr, pool, 2);
  g.require(pool.size() == 10, "pool size");
  g.require(sweep_admissibility(u).passed(), "admissibility identity fails");
  g.require(sweep_strong_admissibility(u, 4).passed(), "strong admissibility identity fails");
  g.require(sweep_arrow_set(u).passed(), "arrow_set equivalence fails");
  // Oracle pass over the arrow_set equivalence, valuation by valuation.
  for (const auto& a : u.sets()) {
    for (const auto& y : u.sets()) {
      const oracle::Vals arrows = oracle::models(arrow_set(a.formulas, y.formulas), 3);
      for (const auto& x : u.sets()) {
        const oracle::Vals mx = oracle::models(x.formulas, 3);
        const bool lhs = oracle::subset(mx, arrows);
        const bool rhs = oracle::subset(oracle::meet(mx, oracle::models(a.formulas, 3)), oracle::models(y.formulas, 3));
        if (lhs != rhs) {
          g.require(false, "oracle arrow_set mismatch");
          return;
        }
      }
    }
  }
}

void fuzz(Gate& g) {
  const RunReport r = run_fuzz({.seed = 1, .count = 100, .atoms = 2, .enforce = {PropertyKind::supraclassicality}});
  g.require(r.checks.size() == 100, "expected 100 operations");
  g.require(r.passed(), "biconditional violations");
  // Oracle: the largest-representation biconditional recomputed from the
  // raw tables, without the library's checkers.
  const Universe u = theory_universe(pq);
  std::mt19937_64 seeds(1);
  const std::vector<TableFamily> fams = {TableFamily::supraclassical, TableFamily::antitonic, TableFamily::ranked};
  for (std::size_t i = 0; i < 100; ++i) {
    const TheoryTable table = random_table(fams[i % fams.size()], seeds(), pq);
    auto c = [&](const ModelSet& m) { return table.at(m); };
    bool supra = true, ded = true, eq = true;
    for (const auto& x : u.sets()) {
      const ModelSet cx = c(x.models);
      supra = supra && cx.subset_of(x.models);
      ModelSet core = ModelSet::none(2);
      x.formulas.for_each_subset([&](const FormulaSet& y) {
        const ModelSet cy = c(models(y, pq));
        core = core | cy;
        ded = ded && (x.models & cy).subset_of(cx);
      });
      eq = eq && (x.models & core) == cx;
    }
    if (eq != (supra && ded)) {
      g.require(false, "oracle biconditional fails for table " + std::to_string(i));
      return;
    }
  }
}

void extension_agreement(Gate& g) {
  const InferenceOp op = op_cwa(pq);
  const InferenceOp plain = extend(op, ExtensionKind::plain);
  const InferenceOp ra = extend(op, ExtensionKind::right_absorbing);
  int theories = 0;
  for (const ModelSet& m : all_model_sets(pq)) {
    ++theories;
    const FormulaSet x{canonical_axiom(m, pq)};
    const std::uint32_t expected = oracle::bits(oracle::cwa(x, 2));
    g.require(plain.apply(x).models().bits() == expected, "plain extension disagrees at " + to_string(m));
    g.require(ra.apply(x).models().bits() == expected, "right-absorbing extension disagrees at " + to_string(m));
  }
  g.require(theories == 16, "expected 16 theories");
  const Universe u = Universe::with_default_pool(pq, 3);
  g.require(verify_representation(op, ReprKind::largest, u).passed(), "F(A) = cn(A ∪ ⋂ F(B)) fails");
}

void cuminters(Gate& g) {
  const Universe u = Universe::with_default_pool(pq, 3);
  const InferenceOp op = op_poole({fs("p, !p")}, pq);
  g.require(verify_cuminters(op, u).passed(), "theory intersections differ");
  const PropertyVerdict eq = check_supracompact_equiv(op, u);
  g.require(eq.passed(), "compactness and supracompactness disagree");
  g.require(has(eq.triviality_flags, "finite_language"), "triviality flag missing");
  const PropertyVerdict comp = check_property(op, PropertyKind::compactness, u);
  const PropertyVerdict supra = check_property(op, PropertyKind::supracompactness, u);
  g.require(comp.outcome == supra.outcome, "verdicts differ");
  g.require(has(comp.triviality_flags, "finite_language_trivial"), "compactness triviality flag missing");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "GCWA deductivity witness X={p, p | q}, Y={p | q}, !q", 1000, gcwa_deductivity);
  ok &= run(2, "two-variable operation: p in largest({p}), not in trace({p})", 1000, separation);
  ok &= run(3, "CWA supraclassical, deductive, largest representation (n=2, k=3)", 10000, cwa_representable);
  ok &= run(4, "Poole {p, !p}: properties, cumulative trace, natural witness, extension cumulativity", 30000,
            poole_suite);
  ok &= run(5, "closure identities over three atoms (pool 10, families up to 4)", 60000, kernel_identities);
  ok &= run(6, "100 random supraclassical tables: representation biconditionals", 120000, fuzz);
  ok &= run(7, "CWA extensions agree on all 16 theories; F(A) identity on the universe", 10000,
            extension_agreement);
  ok &= run(8, "Poole {p, !p}: theory intersections coincide; compact iff supracompact", 30000, cuminters);
  std::cout << (ok ? "all acceptance criteria pass" : "acceptance FAILED") << std::endl;
  return ok ? 0 : 1;
}
