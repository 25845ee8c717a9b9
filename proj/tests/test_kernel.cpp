// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "nmlab/error.hpp"
#include "nmlab/kernel.hpp"
#include "nmlab/universe.hpp"
#include "oracle.hpp"

using namespace nmlab;

namespace {

const Language pq({"p", "q"});
const Language pqr({"p", "q", "r"});

Formula f(const char* text, const Language& lang = pq) { return parse_formula(text, lang); }
FormulaSet fs(const char* text, const Language& lang = pq) { return parse_formula_set(text, lang); }
ModelSet ms(std::initializer_list<const char*> vals, const Language& lang = pq) {
  std::uint32_t bits = 0;
  for (const char* v : vals) {
    unsigned val = 0;
    for (unsigned i = 0; v[i]; ++i) {
      if (v[i] == '1') val |= 1u << i;
    }
    bits |= 1u << val;
  }
  return ModelSet(bits, lang.size());
}

}  // namespace

TEST_CASE("language validation") {
  CHECK(Language::from_list("p, q ,r").size() == 3);
  CHECK_THROWS_AS(Language({}), std::invalid_argument);
  CHECK_THROWS_AS(Language({"p", "p"}), std::invalid_argument);
  CHECK_THROWS_AS(Language({"P"}), std::invalid_argument);
  CHECK_THROWS_AS(Language({"top"}), std::invalid_argument);
  CHECK_THROWS_AS(Language({"a", "b", "c", "d", "e", "f"}), std::invalid_argument);
  CHECK(Language::from_list("a,b,c,d,e").valuation_count() == 32);
  CHECK(pq.index_of("q") == 1u);
  CHECK_FALSE(pq.index_of("r"));
}

TEST_CASE("model set basics") {
  CHECK(to_string(ms({"10", "01", "11"})) == "{10, 01, 11}");
  CHECK(ModelSet::full(2).size() == 4);
  CHECK(ModelSet::none(2).empty());
  CHECK(ms({"10"}).complement() == ms({"00", "01", "11"}));
  CHECK(ms({"11"}).supersets().size() == 8);
  CHECK(ModelSet::full(5).is_full());
  CHECK_THROWS_AS(ModelSet(0x10, 1), std::invalid_argument);
}

TEST_CASE("parsing") {
  CHECK(f("p -> q") == Formula::implication(Formula::atom(0), Formula::atom(1)));
  CHECK(f("!(p & q) | bot") ==
        Formula::disjunction(Formula::negation(Formula::conjunction(Formula::atom(0), Formula::atom(1))),
                             Formula::bottom()));
  CHECK(f("p -> q -> p") == (Formula::atom(0) >> (Formula::atom(1) >> Formula::atom(0))));
  CHECK(f("p & q | p") == ((Formula::atom(0) & Formula::atom(1)) | Formula::atom(0)));
  CHECK(f(" !!p ") == !!Formula::atom(0));

  SUBCASE("syntax error carries its offset") {
    try {
      f("p ->");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 4);
    }
  }
  SUBCASE("unknown atom") {
    try {
      f("p & r");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 4);
      CHECK(std::string(e.what()).find("unknown atom") != std::string::npos);
    }
  }
  CHECK_THROWS_AS(f("(p"), ParseError);
  CHECK_THROWS_AS(f("p q"), ParseError);
  CHECK_THROWS_AS(f(""), ParseError);
  CHECK_THROWS_AS(f("p $ q"), ParseError);
}

TEST_CASE("printing uses minimal parentheses") {
  CHECK(to_string(f("(p -> q) -> p"), pq) == "(p -> q) -> p");
  CHECK(to_string(f("p -> (q -> p)"), pq) == "p -> q -> p");
  CHECK(to_string(f("(p | q) & !(q)"), pq) == "(p | q) & !q");
  CHECK(to_string(f("!(p & q) | bot"), pq) == "!(p & q) | bot");
  CHECK(to_string(f("(p & q) & p"), pq) == "p & q & p");
  CHECK(to_string(f("p & (q & p)"), pq) == "p & (q & p)");
  CHECK(to_string(fs("p, p | q"), pq) == "{p, p | q}");
}

TEST_CASE("print/parse round trip on random trees") {
  std::mt19937_64 rng(7);
  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    const unsigned pick = depth == 0 ? rng() % 3 : rng() % 7;
    switch (pick) {
      case 0: return Formula::atom(static_cast<unsigned>(rng() % 3));
      case 1: return rng() % 2 ? Formula::top() : Formula::atom(0);
      case 2: return rng() % 2 ? Formula::bottom() : Formula::atom(2);
      case 3: return !gen(depth - 1);
      case 4: return gen(depth - 1) & gen(depth - 1);
      case 5: return gen(depth - 1) | gen(depth - 1);
      default: return gen(depth - 1) >> gen(depth - 1);
    }
  };
  for (int i = 0; i < 2000; ++i) {
    const Formula x = gen(4);
    const std::string text = to_string(x, pqr);
    CHECK_MESSAGE(parse_formula(text, pqr) == x, text);
    CHECK(models(x, pqr).bits() == oracle::bits(oracle::models(x, 3)));
  }
}

TEST_CASE("models") {
  CHECK(models(f("p | q"), pq) == ms({"10", "01", "11"}));
  CHECK(models(f("top"), pq).is_full());
  CHECK(models(f("p & !p"), pq).empty());
  CHECK(models(fs(""), pq).is_full());
}

TEST_CASE("cn and entailment") {
  CHECK(cn(fs("p, p -> q"), pq).models() == ms({"11"}));
  CHECK(cn(fs(""), pq) == Theory::tautologies(pq));
  CHECK(cn(fs("p, !p"), pq) == Theory::inconsistent(pq));
  CHECK(entails(cn(fs("p"), pq), f("p | q"), pq));
  CHECK_FALSE(entails(cn(fs(""), pq), f("p"), pq));
  CHECK(entails(cn(fs("p, !p"), pq), f("q"), pq));
  CHECK(cn(fs("p"), pq).subset_of(cn(fs("p, q"), pq)));
  CHECK(cn(fs("p"), pq).meet(cn(fs("!p"), pq)) == Theory::tautologies(pq));
  CHECK(cn(fs("p"), pq).join(cn(fs("q"), pq)) == cn(fs("p & q"), pq));
}

TEST_CASE("arrow_set") {
  CHECK(to_string(arrow_set(fs("p"), fs("q")), pq) == "{p -> q}");
  CHECK(to_string(arrow_set(fs(""), fs("q")), pq) == "{top -> q}");
  CHECK(models(arrow_set(fs(""), fs("q")), pq) == models(fs("q"), pq));
  CHECK(to_string(arrow_set(fs("p, q", pqr), fs("r, p", pqr)), pqr) == "{p & q -> r, p & q -> p}");

  SUBCASE("defining equivalence for every X over three atoms") {
    const FormulaSet a = fs("p, q", pqr);
    const FormulaSet y = fs("r, p", pqr);
    const ModelSet arrows = models(arrow_set(a, y), pqr);
    for (const ModelSet& x : all_model_sets(pqr)) {
      // oracle: Y ⊆ cn(X ∪ A) checked valuation by valuation
      bool rhs = true;
      for (unsigned v : x.valuations()) {
        if (oracle::truth(a[0], v) && oracle::truth(a[1], v)) rhs = rhs && oracle::truth(y[0], v) && oracle::truth(y[1], v);
      }
      CHECK(x.subset_of(arrows) == rhs);
    }
  }
}

TEST_CASE("admissibility identities") {
  CHECK(verify_admissibility(fs(""), fs("p"), fs("!p"), pq));
  CHECK(verify_admissibility(fs("q"), fs("p"), fs("p"), pq));
  CHECK(verify_admissibility(fs("p"), fs(""), fs("q"), pq));
  const FormulaSet family1[] = {fs("q"), fs("!q")};
  CHECK(verify_strong_admissibility(fs("p"), family1, pq));
  const FormulaSet family2[] = {fs("p")};
  CHECK(verify_strong_admissibility(fs(""), family2, pq));
  CHECK_THROWS_AS(verify_strong_admissibility(fs("p"), std::span<const FormulaSet>{}, pq), std::invalid_argument);

  SUBCASE("exhaustive over a small three-atom universe") {
    const Universe u(pqr, fs("p, !q, q | r, p -> r", pqr), 2);
    for (const auto& x : u.sets()) {
      for (const auto& y : u.sets()) {
        for (const auto& z : u.sets()) REQUIRE(verify_admissibility(x.formulas, y.formulas, z.formulas, pqr));
      }
    }
  }
}

TEST_CASE("canonical axiom") {
  CHECK(to_string(canonical_axiom(ms({"11"}), pq), pq) == "p & q");
  CHECK(to_string(canonical_axiom(ModelSet::none(2), pq), pq) == "bot");
  CHECK(to_string(canonical_axiom(ModelSet::full(2), pq), pq) == "top");
  CHECK(to_string(canonical_axiom(ms({"10", "01"}), pq), pq) == "p & !q | !p & q");

  SUBCASE("right inverse of models for every model set up to three atoms") {
    for (const Language& lang : {Language({"p"}), pq, pqr}) {
      for (const ModelSet& m : all_model_sets(lang)) {
        REQUIRE(models(canonical_axiom(m, lang), lang) == m);
        REQUIRE(oracle::bits(oracle::models(canonical_axiom(m, lang), lang.size())) == m.bits());
      }
    }
  }
  CHECK(all_model_sets(pqr).size() == 256);
  CHECK_THROWS_AS(all_model_sets(Language::from_list("a,b,c,d")), UniverseTooLarge);
}

TEST_CASE("formula sets") {
  FormulaSet s = fs("p, q, p");
  CHECK(s.size() == 2);
  CHECK_FALSE(s.insert(f("q")));
  CHECK(s == fs("q, p"));
  CHECK(fs("{}").empty());
  CHECK(fs("{p, q}") == fs("p, q"));
  int count = 0;
  fs("p, q, p | q").for_each_subset([&](const FormulaSet&) { ++count; });
  CHECK(count == 8);
  CHECK(fs("p").subset_of(fs("q, p")));
  CHECK(fs("p").united(fs("q, p")).size() == 2);
}

TEST_CASE("cn is a closure operation and the deduction property holds") {
  const Universe u = Universe::with_default_pool(pq, 2);
  for (const auto& x : u.sets()) {
    REQUIRE(cn(x.formulas, pq).models().subset_of(x.models));  // inclusion
    for (const auto& y : u.sets()) {
      if (x.formulas.subset_of(y.formulas)) REQUIRE(cn(x.formulas, pq).subset_of(cn(y.formulas, pq)));
    }
    for (std::size_t i = 0; i < u.pool().size(); ++i) {
      for (std::size_t j = 0; j < u.pool().size(); ++j) {
        const Formula& a = u.pool()[i];
        const Formula& b = u.pool()[j];
        FormulaSet xa = x.formulas;
        xa.insert(a);
        REQUIRE(entails(cn(xa, pq), b, pq) == entails(cn(x.formulas, pq), a >> b, pq));
      }
    }
  }
}

TEST_CASE("universe construction") {
  const FormulaSet pool = default_pool(pq);
  CHECK(pool.size() == 28);
  CHECK(to_string(pool[0], pq) == "p");
  CHECK(to_string(pool[2], pq) == "!p");
  CHECK(to_string(pool[4], pq) == "p | q");
  const Universe u(pq, pool, 3);
  CHECK(u.sets().size() == 1 + 28 + 378 + 3276);
  CHECK(u.sets()[0].formulas.empty());
  CHECK(u.sets()[1].formulas == fs("p"));
  CHECK_THROWS_AS(Universe(pq, pool, 3, {.instantiation_cap = 100}), UniverseTooLarge);
  const Language abcd = Language::from_list("a,b,c,d");
  CHECK_THROWS_AS(Universe(abcd, fs("a, b", abcd), 1).require_theory_quantification(), UniverseTooLarge);
  CHECK_THROWS_AS(Universe(abcd, default_pool(abcd), 1), std::invalid_argument);  // pool above 64
}
