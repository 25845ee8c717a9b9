// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "nmlab/error.hpp"
#include "nmlab/formula.hpp"

namespace nmlab {

Formula Formula::make(Connective op, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->atom_bound = std::max(lhs.atom_bound(), rhs.atom_bound());
  node->lhs = std::make_unique<Formula>(std::move(lhs));
  node->rhs = std::make_unique<Formula>(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::atom(unsigned index) {
  if (index >= kMaxAtoms) throw std::invalid_argument("atom index out of range");
  auto node = std::make_shared<Node>();
  node->op = Connective::Atom;
  node->atom = index;
  node->atom_bound = index + 1;
  return Formula(std::move(node));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto node = std::make_shared<Node>();
    node->op = Connective::Top;
    return Formula(std::move(node));
  }();
  return t;
}

Formula Formula::bottom() {
  static const Formula b = [] {
    auto node = std::make_shared<Node>();
    node->op = Connective::Bottom;
    return Formula(std::move(node));
  }();
  return b;
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->op = Connective::Not;
  node->atom_bound = operand.atom_bound();
  node->lhs = std::make_unique<Formula>(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Connective::And, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Connective::Or, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Connective::Implies, std::move(lhs), std::move(rhs));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective()) return false;
  switch (a.connective()) {
    case Connective::Atom:
      return a.atom_index() == b.atom_index();
    case Connective::Top:
    case Connective::Bottom:
      return true;
    case Connective::Not:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&(const Formula& a, const Formula& b) { return Formula::conjunction(a, b); }
Formula operator|(const Formula& a, const Formula& b) { return Formula::disjunction(a, b); }
Formula operator>>(const Formula& a, const Formula& b) { return Formula::implication(a, b); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Language& lang) : text_(text), lang_(lang) {}

  Formula parse_all() {
    Formula f = implication();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

  // Parses one formula and stops before a top-level ',' (for formula lists).
  Formula parse_item() { return implication(); }

  std::size_t pos() const { return pos_; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (eat("->")) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (eat("|")) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (eat("&")) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (eat("!")) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("expected formula, found end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = implication();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') {
          ++pos_;
        } else {
          break;
        }
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "top") return Formula::top();
      if (name == "bot") return Formula::bottom();
      auto idx = lang_.index_of(name);
      if (!idx) throw ParseError("unknown atom '" + std::string(name) + "'", start);
      return Formula::atom(*idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Language& lang_;
  std::size_t pos_ = 0;
};

int precedence(Connective c) {
  switch (c) {
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    case Connective::Not: return 4;
    default: return 5;
  }
}

void print(const Formula& f, const Language& lang, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out.push_back('(');
    print(c, lang, out);
    if (parens) out.push_back(')');
  };
  const int p = precedence(f.connective());
  switch (f.connective()) {
    case Connective::Atom:
      out += lang.atom(f.atom_index());
      return;
    case Connective::Top:
      out += "top";
      return;
    case Connective::Bottom:
      out += "bot";
      return;
    case Connective::Not:
      out.push_back('!');
      child(f.operand(), precedence(f.operand().connective()) < p);
      return;
    default:
      break;
  }
  const int lp = precedence(f.lhs().connective());
  const int rp = precedence(f.rhs().connective());
  // & and | associate to the left, -> to the right.
  const bool right_assoc = f.connective() == Connective::Implies;
  child(f.lhs(), lp < p || (right_assoc && lp == p));
  out += f.connective() == Connective::And ? " & " : f.connective() == Connective::Or ? " | " : " -> ";
  child(f.rhs(), rp < p || (!right_assoc && rp == p));
}

std::uint32_t eval_bits(const Formula& f, unsigned n) {
  const std::uint32_t full = ModelSet::full_mask(n);
  switch (f.connective()) {
    case Connective::Atom: {
      std::uint32_t bits = 0;
      for (Valuation v = 0; v < (1u << n); ++v) {
        if ((v >> f.atom_index()) & 1u) bits |= 1u << v;
      }
      return bits;
    }
    case Connective::Top: return full;
    case Connective::Bottom: return 0;
    case Connective::Not: return ~eval_bits(f.operand(), n) & full;
    case Connective::And: return eval_bits(f.lhs(), n) & eval_bits(f.rhs(), n);
    case Connective::Or: return eval_bits(f.lhs(), n) | eval_bits(f.rhs(), n);
    case Connective::Implies: return (~eval_bits(f.lhs(), n) & full) | eval_bits(f.rhs(), n);
  }
  return 0;
}

}  // namespace

Formula parse_formula(std::string_view text, const Language& lang) {
  return Parser(text, lang).parse_all();
}

std::string to_string(const Formula& f, const Language& lang) {
  std::string out;
  print(f, lang, out);
  return out;
}

ModelSet models(const Formula& f, const Language& lang) {
  if (f.atom_bound() > lang.size()) {
    throw std::invalid_argument("formula mentions atoms outside the language");
  }
  return ModelSet(eval_bits(f, lang.size()), lang.size());
}

// ---------------------------------------------------------------------------
// FormulaSet

FormulaSet::FormulaSet(std::initializer_list<Formula> items) {
  for (const auto& f : items) insert(f);
}

FormulaSet::FormulaSet(std::vector<Formula> items) {
  for (auto& f : items) insert(f);
}

bool FormulaSet::insert(const Formula& f) {
  if (contains(f)) return false;
  items_.push_back(f);
  return true;
}

bool FormulaSet::contains(const Formula& f) const {
  return std::find(items_.begin(), items_.end(), f) != items_.end();
}

FormulaSet FormulaSet::united(const FormulaSet& other) const {
  FormulaSet out = *this;
  for (const auto& f : other) out.insert(f);
  return out;
}

bool FormulaSet::subset_of(const FormulaSet& other) const {
  return std::all_of(items_.begin(), items_.end(), [&](const Formula& f) { return other.contains(f); });
}

FormulaSet FormulaSet::select(std::uint64_t mask) const {
  FormulaSet out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if ((mask >> i) & 1u) out.items_.push_back(items_[i]);
  }
  return out;
}

void FormulaSet::for_each_subset(const std::function<void(const FormulaSet&)>& visit) const {
  if (items_.size() >= 32) throw std::length_error("too many formulas to enumerate subsets");
  const std::uint64_t count = std::uint64_t{1} << items_.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) visit(select(mask));
}

bool operator==(const FormulaSet& a, const FormulaSet& b) {
  return a.size() == b.size() && a.subset_of(b);
}

FormulaSet parse_formula_set(std::string_view text, const Language& lang) {
  Parser parser(text, lang);
  FormulaSet out;
  if (parser.eat("{")) {
    if (parser.eat("}")) {
      if (!parser.at_end()) parser.fail("trailing input after '}'");
      return out;
    }
    while (true) {
      out.insert(parser.parse_item());
      if (parser.eat(",")) continue;
      if (parser.eat("}")) break;
      parser.fail("expected ',' or '}'");
    }
    if (!parser.at_end()) parser.fail("trailing input after '}'");
    return out;
  }
  if (parser.at_end()) return out;
  while (true) {
    out.insert(parser.parse_item());
    if (parser.at_end()) break;
    if (!parser.eat(",")) parser.fail("expected ','");
  }
  return out;
}

std::string to_string(const FormulaSet& set, const Language& lang) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += to_string(set[i], lang);
  }
  out += "}";
  return out;
}

std::vector<std::string> to_strings(const FormulaSet& set, const Language& lang) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const auto& f : set) out.push_back(to_string(f, lang));
  return out;
}

}  // namespace nmlab
