// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "nmlab/evaluator.hpp"
#include "nmlab/operations.hpp"
#include "nmlab/universe.hpp"
#include "oracle.hpp"

using namespace nmlab;

namespace {

const Language pq({"p", "q"});
Formula f(const char* text) { return parse_formula(text, pq); }
FormulaSet fs(const char* text) { return parse_formula_set(text, pq); }
bool proves(const InferenceOp& op, const char* x, const char* formula) {
  return op.apply(fs(x)).contains(f(formula), pq);
}

const Universe& u2() {
  static const Universe u = Universe::with_default_pool(pq, 2);
  return u;
}

}  // namespace

TEST_CASE("cn") {
  const InferenceOp op = op_cn(pq);
  CHECK(op.name() == "cn");
  CHECK(op.right_absorbing());
  CHECK(op.apply(fs("")) == Theory::tautologies(pq));
  CHECK(op.apply(fs("p")) == cn(fs("p"), pq));
  CHECK(op.apply(fs("p, !p")) == Theory::inconsistent(pq));
}

TEST_CASE("closed world assumption") {
  const InferenceOp op = op_cwa(pq);
  CHECK(to_string(op.apply(fs("p")).models()) == "{10}");
  CHECK_FALSE(op.apply(fs("p | q")).consistent());
  CHECK(to_string(op.apply(fs("")).models()) == "{00}");

  SUBCASE("agrees with the brute-force oracle") {
    for (const auto& t : u2().sets()) REQUIRE(op.apply(t.formulas).models().bits() == oracle::bits(oracle::cwa(t.formulas, 2)));
  }
}

TEST_CASE("generalized closed world assumption") {
  const InferenceOp op = op_gcwa(pq);
  CHECK(proves(op, "p, p | q", "!q"));
  CHECK(op.apply(fs("p | q")) == cn(fs("p | q"), pq));
  CHECK_FALSE(proves(op, "p | q", "p -> !q"));
  CHECK_FALSE(proves(op, "p | q", "!p | !q"));
  CHECK(proves(op, "q", "!p"));
  CHECK_FALSE(op.apply(fs("p, !p")).consistent());

  SUBCASE("agrees with the brute-force oracle") {
    for (const auto& t : u2().sets()) REQUIRE(op.apply(t.formulas).models().bits() == oracle::bits(oracle::gcwa(t.formulas, 2)));
  }
  SUBCASE("more cautious than CWA on consistent input") {
    const InferenceOp cwa = op_cwa(pq);
    for (const auto& t : u2().sets()) {
      if (t.models.empty()) continue;
      REQUIRE(cwa.apply(t.formulas).models().subset_of(op.apply(t.formulas).models()));
    }
  }
}

TEST_CASE("Poole basis") {
  auto basis = [](const char* d, const char* x) {
    std::vector<std::string> out;
    for (const auto& b : poole_basis({fs(d)}, fs(x), pq)) out.push_back(to_string(b, pq));
    return out;
  };
  CHECK(basis("p, !p", "") == std::vector<std::string>{"{p}", "{!p}"});
  CHECK(basis("p", "!p") == std::vector<std::string>{"{}"});
  CHECK(basis("p, q", "") == std::vector<std::string>{"{p, q}"});
  CHECK(basis("p, q", "p, !p").empty());

  SUBCASE("agrees with the brute-force oracle") {
    const FormulaSet d = fs("p, !p, q, p -> !q");
    for (const auto& t : u2().sets()) {
      const auto mine = poole_basis({d}, t.formulas, pq);
      const auto ref = oracle::poole_basis(d, t.formulas, 2);
      REQUIRE(mine.size() == ref.size());
      for (std::size_t i = 0; i < mine.size(); ++i) REQUIRE(mine[i] == ref[i]);
    }
  }
}

TEST_CASE("Poole systems") {
  const InferenceOp op = op_poole({fs("p, !p")}, pq);
  CHECK(op.name() == "poole{p, !p}");
  CHECK(op.apply(fs("p")) == cn(fs("p"), pq));
  CHECK(op.apply(fs("")) == Theory::tautologies(pq));
  CHECK(op_poole({fs("p")}, pq).apply(fs("q")) == cn(fs("p, q"), pq));
  CHECK_FALSE(op.apply(fs("q, !q")).consistent());

  SUBCASE("agrees with the brute-force oracle") {
    for (const char* d : {"p, !p", "p", "p | q, !p, !q", "p -> q, p, !q"}) {
      const InferenceOp sys = op_poole({fs(d)}, pq);
      for (const auto& t : u2().sets()) {
        REQUIRE(sys.apply(t.formulas).models().bits() == oracle::bits(oracle::poole(fs(d), t.formulas, 2)));
      }
    }
  }
  SUBCASE("no defaults is classical consequence") {
    const InferenceOp none = op_poole({}, pq);
    for (const auto& t : u2().sets()) REQUIRE(none.apply(t.formulas) == cn(t.formulas, pq));
  }
}

TEST_CASE("table operations") {
  TheoryTable identity;
  for (const ModelSet& m : all_model_sets(pq)) identity.emplace(m, m);
  const InferenceOp id = op_from_table(identity, pq);
  for (const auto& t : u2().sets()) REQUIRE(id.apply(t.formulas) == cn(t.formulas, pq));

  const InferenceOp one = op_from_table({{ModelSet::full(2), models(f("p"), pq)}}, pq);
  CHECK(one.apply(fs("")) == cn(fs("p"), pq));
  CHECK(one.apply(fs("q")) == cn(fs("q"), pq));  // missing key: identity closure
  CHECK(one.apply(fs("p | !p")) == cn(fs("p"), pq));

  CHECK_THROWS_AS(op_from_table({{models(f("p"), pq), ModelSet::full(2)}}, pq, {.enforce_supraclassical = true}),
                  std::invalid_argument);
  CHECK_NOTHROW(op_from_table({{models(f("p"), pq), ModelSet::full(2)}}, pq));
  CHECK_THROWS_AS(op_from_table({{ModelSet::full(1), ModelSet::full(1)}}, pq), std::invalid_argument);
}

TEST_CASE("operations from assumption operators") {
  SUBCASE("no assumptions is classical consequence") {
    const InferenceOp op = op_from_assumptions(no_assumptions(pq));
    for (const auto& t : u2().sets()) REQUIRE(op.apply(t.formulas) == cn(t.formulas, pq));
  }
  SUBCASE("negative literals give CWA") {
    const InferenceOp op = op_from_assumptions(cwa_assumptions(pq));
    const InferenceOp cwa = op_cwa(pq);
    for (const auto& t : u2().sets()) REQUIRE(op.apply(t.formulas) == cwa.apply(t.formulas));
  }
  SUBCASE("the anchored operator") {
    const InferenceOp op = op_from_assumptions(anchored_assumptions(f("p"), pq));
    CHECK(op.name() == "cn+anchored(p)");
    CHECK(op.right_absorbing());
    CHECK(op.apply(fs("")) == cn(fs("p"), pq));
    CHECK(op.apply(fs("p | !p")) == cn(fs("p"), pq));
    CHECK(op.apply(fs("q -> p")) == cn(fs("q -> p"), pq));
    CHECK(op.apply(fs("p")) == cn(fs("p"), pq));
  }
  SUBCASE("natural Poole assumptions represent the system") {
    const PooleSystem sys{fs("p, !p, q")};
    const InferenceOp op = op_from_assumptions(poole_natural_assumptions(sys, pq));
    const InferenceOp poole = op_poole(sys, pq);
    for (const auto& t : u2().sets()) REQUIRE(op.apply(t.formulas) == poole.apply(t.formulas));
  }
  SUBCASE("assumption tables") {
    const AssumptionFn s = table_assumptions({{ModelSet::full(2), models(f("!q"), pq)}}, pq);
    CHECK(s(fs("")) == cn(fs("!q"), pq));
    CHECK(s(fs("p")) == Theory::tautologies(pq));
  }
}

TEST_CASE("operations flagged right-absorbing factor through cn") {
  const std::vector<InferenceOp> ops = {op_cn(pq), op_cwa(pq), op_gcwa(pq), op_poole({fs("p, !p")}, pq),
                                        op_from_assumptions(anchored_assumptions(f("p"), pq))};
  for (const auto& op : ops) {
    REQUIRE(op.right_absorbing());
    std::map<std::uint32_t, Theory> seen;
    for (const auto& t : u2().sets()) {
      const Theory c = op.apply(t.formulas);
      auto [it, fresh] = seen.emplace(t.models.bits(), c);
      REQUIRE_MESSAGE((fresh || it->second == c), op.name());
    }
  }
}

TEST_CASE("supraclassicality of the concrete systems") {
  for (const auto& op : {op_cwa(pq), op_gcwa(pq), op_poole({fs("p, !p")}, pq)}) {
    for (const auto& t : u2().sets()) REQUIRE(op.apply(t.formulas).models().subset_of(t.models));
  }
}

TEST_CASE("evaluator memoization is transparent") {
  const InferenceOp op = op_gcwa(pq);
  Evaluator by_theory(op);
  Evaluator by_syntax(op, Evaluator::Memo::by_syntax);
  for (int round = 0; round < 2; ++round) {
    for (const auto& t : u2().sets()) {
      const ModelSet direct = op.apply(t.formulas).models();
      REQUIRE(by_theory(t.formulas, t.models) == direct);
      REQUIRE(by_syntax(t.formulas) == direct);
    }
  }
  CHECK(by_theory.on_theory(models(f("p"), pq)) == op.apply(fs("p")).models());
}
