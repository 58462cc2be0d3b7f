#include "valkit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "valkit/error.hpp"

namespace valkit {

namespace {

constexpr std::uint64_t kMaxLiteral = 1'000'000;

TermPtr balanced_ones(std::uint64_t k) {
  if (k == 1) return make_term(Term::Kind::One);
  return make_term(Term::Kind::Add, balanced_ones(k / 2), balanced_ones(k - k / 2));
}

class SentenceParser {
 public:
  explicit SentenceParser(std::string_view text) : text_(text) {}

  Sentence parse() {
    Sentence out;
    out.root = formula();
    skip_space();
    if (pos_ != text_.size()) error({"'->'", "'|'", "'&'", "end of input"});
    out.slots = next_slot_;
    out.text = std::string(text_);
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }
  bool accept(std::string_view token) {
    if (!at(token)) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) error({"'" + std::string(token) + "'"});
  }
  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw ParseError(pos_, std::move(expected), "malformed sentence");
  }

  std::optional<std::string> peek_identifier() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    const char c = text_[pos_];
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
    std::size_t j = pos_;
    while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
    return std::string(text_.substr(pos_, j - pos_));
  }

  bool at_keyword(const std::string& word) {
    auto ident = peek_identifier();
    return ident && *ident == word;
  }

  FormulaPtr formula() {
    if (at_keyword("forall") || at_keyword("exists")) return quantified();
    return implies();
  }

  FormulaPtr quantified() {
    const auto word = *peek_identifier();
    pos_ += word.size();
    const auto kind = word == "forall" ? Formula::Kind::Forall : Formula::Kind::Exists;
    std::vector<std::pair<std::string, std::size_t>> bound;
    do {
      auto name = peek_identifier();
      if (!name || *name == "t" || *name == "forall" || *name == "exists") error({"variable name"});
      pos_ += name->size();
      bound.emplace_back(*name, next_slot_++);
    } while (accept(","));
    expect(".");
    for (const auto& b : bound) scope_.push_back(b);
    FormulaPtr body = formula();
    scope_.resize(scope_.size() - bound.size());
    for (auto it = bound.rbegin(); it != bound.rend(); ++it) body = make_quantifier(kind, it->second, it->first, body);
    return body;
  }

  FormulaPtr implies() {
    FormulaPtr lhs = disjunction();
    if (accept("->")) return make_connective(Formula::Kind::Implies, lhs, formula());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr acc = conjunction();
    while (accept("|")) acc = make_connective(Formula::Kind::Or, acc, conjunction());
    return acc;
  }

  FormulaPtr conjunction() {
    FormulaPtr acc = negation();
    while (accept("&")) acc = make_connective(Formula::Kind::And, acc, negation());
    return acc;
  }

  FormulaPtr negation() {
    skip_space();
    if (at("!") && !at("!=")) {
      ++pos_;
      return make_connective(Formula::Kind::Not, negation());
    }
    return atom();
  }

  FormulaPtr atom() {
    if (at_keyword("forall") || at_keyword("exists")) return quantified();
    if (!at("(")) return equation();
    // "(" opens either a term or a formula; try the term reading first and
    // keep whichever failure got further.
    const std::size_t start = pos_;
    const std::size_t slots = next_slot_;
    try {
      return equation();
    } catch (const ParseError& as_term) {
      pos_ = start;
      next_slot_ = slots;
      try {
        expect("(");
        FormulaPtr inner = formula();
        expect(")");
        return inner;
      } catch (const ParseError& as_formula) {
        if (as_term.position() > as_formula.position()) throw;
        if (as_formula.position() > as_term.position()) throw;
        std::set<std::string> merged(as_term.expected().begin(), as_term.expected().end());
        merged.insert(as_formula.expected().begin(), as_formula.expected().end());
        throw ParseError(as_term.position(), {merged.begin(), merged.end()}, "malformed sentence");
      }
    }
  }

  FormulaPtr equation() {
    TermPtr lhs = term();
    if (accept("!=")) return make_unequal(lhs, term());
    if (accept("=")) return make_equal(lhs, term());
    error({"'='", "'!='", "'+'", "'-'", "'*'", "'^'"});
  }

  static FormulaPtr make_unequal(TermPtr lhs, TermPtr rhs) {
    auto f = std::make_shared<Formula>(Formula{Formula::Kind::Not, nullptr, nullptr, make_equal(lhs, rhs), nullptr, 0, "", true});
    return f;
  }

  TermPtr term() {
    TermPtr acc = product();
    while (true) {
      if (accept("+")) {
        acc = make_term(Term::Kind::Add, acc, product());
      } else if (at("-") && !at("->")) {
        ++pos_;
        acc = make_term(Term::Kind::Sub, acc, product());
      } else {
        return acc;
      }
    }
  }

  TermPtr product() {
    TermPtr acc = unary();
    while (accept("*")) acc = make_term(Term::Kind::Mul, acc, unary());
    return acc;
  }

  TermPtr unary() {
    if (at("-") && !at("->")) {
      ++pos_;
      return make_term(Term::Kind::Neg, unary());
    }
    TermPtr base = primary();
    if (accept("^")) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error({"natural exponent"});
      const BigInt e = natural();
      if (e > 1'000'000) error({"exponent at most 1000000"});
      base = make_power(base, static_cast<std::uint32_t>(e));
    }
    return base;
  }

  TermPtr primary() {
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      const BigInt k = natural();
      if (k > kMaxLiteral) {
        pos_ = start;
        error({"integer literal at most 1000000"});
      }
      return make_integer_literal(k);
    }
    if (accept("(")) {
      TermPtr inner = term();
      expect(")");
      return inner;
    }
    if (auto name = peek_identifier()) {
      if (*name == "forall" || *name == "exists") error({"term"});
      if (*name == "t") {
        ++pos_;
        return make_term(Term::Kind::T);
      }
      auto it = std::find_if(scope_.rbegin(), scope_.rend(), [&](const auto& b) { return b.first == *name; });
      if (it == scope_.rend()) error({"bound variable"});
      pos_ += name->size();
      return make_variable(it->second, *name);
    }
    error({"integer", "'t'", "variable", "'('"});
  }

  BigInt natural() {
    skip_space();
    BigInt value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
    }
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t next_slot_ = 0;
  std::vector<std::pair<std::string, std::size_t>> scope_;
};

std::size_t depth_of(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Equal: return 0;
    case Formula::Kind::Not: return depth_of(*f.left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: return std::max(depth_of(*f.left), depth_of(*f.right));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 1 + depth_of(*f.left);
  }
  return 0;
}

int term_precedence(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Add:
    case Term::Kind::Sub: return 1;
    case Term::Kind::Mul: return 2;
    case Term::Kind::Neg: return 3;
    case Term::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap_term(const TermPtr& t, int min_precedence) {
  const std::string s = to_string(t);
  return (!t->literal && term_precedence(*t) < min_precedence) ? "(" + s + ")" : s;
}

int formula_precedence(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 0;
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return f.written_unequal ? 5 : 4;
    case Formula::Kind::Equal: return 5;
  }
  return 5;
}

std::string wrap_formula(const FormulaPtr& f, int min_precedence) {
  const std::string s = to_string(f);
  return formula_precedence(*f) < min_precedence ? "(" + s + ")" : s;
}

}  // namespace

TermPtr make_term(Term::Kind kind, TermPtr left, TermPtr right) {
  return std::make_shared<Term>(Term{kind, 0, "", 0, std::move(left), std::move(right), std::nullopt});
}

TermPtr make_variable(std::size_t slot, std::string name) {
  return std::make_shared<Term>(Term{Term::Kind::Variable, slot, std::move(name), 0, nullptr, nullptr, std::nullopt});
}

TermPtr make_power(TermPtr base, std::uint32_t exponent) {
  return std::make_shared<Term>(Term{Term::Kind::Pow, 0, "", exponent, std::move(base), nullptr, std::nullopt});
}

TermPtr make_integer_literal(const BigInt& k) {
  if (k == 0) return make_term(Term::Kind::Zero);
  const BigInt magnitude = k < 0 ? BigInt(-k) : k;
  if (magnitude > kMaxLiteral) fail(ErrorKind::InvalidArgument, "integer literal too large");
  TermPtr sum = balanced_ones(static_cast<std::uint64_t>(magnitude));
  if (k < 0) sum = make_term(Term::Kind::Neg, sum);
  if (magnitude == 1 && k > 0) return sum;
  Term annotated = *sum;
  annotated.literal = k;
  return std::make_shared<Term>(std::move(annotated));
}

FormulaPtr make_equal(TermPtr lhs, TermPtr rhs) {
  return std::make_shared<Formula>(Formula{Formula::Kind::Equal, std::move(lhs), std::move(rhs), nullptr, nullptr, 0, "", false});
}

FormulaPtr make_connective(Formula::Kind kind, FormulaPtr left, FormulaPtr right) {
  return std::make_shared<Formula>(Formula{kind, nullptr, nullptr, std::move(left), std::move(right), 0, "", false});
}

FormulaPtr make_quantifier(Formula::Kind kind, std::size_t slot, std::string name, FormulaPtr body) {
  return std::make_shared<Formula>(Formula{kind, nullptr, nullptr, std::move(body), nullptr, slot, std::move(name), false});
}

Sentence parse_sentence(std::string_view text) {
  Sentence s = SentenceParser(text).parse();
  s.quantifier_depth = depth_of(*s.root);
  return s;
}

std::string Sentence::to_string() const { return valkit::to_string(root); }

std::string to_string(const TermPtr& t) {
  if (t->literal) return valkit::to_string(*t->literal);
  switch (t->kind) {
    case Term::Kind::Zero: return "0";
    case Term::Kind::One: return "1";
    case Term::Kind::T: return "t";
    case Term::Kind::Variable: return t->name;
    case Term::Kind::Add: return wrap_term(t->left, 1) + " + " + wrap_term(t->right, 2);
    case Term::Kind::Sub: return wrap_term(t->left, 1) + " - " + wrap_term(t->right, 2);
    case Term::Kind::Mul: return wrap_term(t->left, 2) + "*" + wrap_term(t->right, 3);
    case Term::Kind::Neg: return "-" + wrap_term(t->left, 3);
    case Term::Kind::Pow: return wrap_term(t->left, 5) + "^" + std::to_string(t->exponent);
  }
  return "?";
}

std::string to_string(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Equal: return to_string(f->lhs) + " = " + to_string(f->rhs);
    case Formula::Kind::Not:
      if (f->written_unequal) return to_string(f->left->lhs) + " != " + to_string(f->left->rhs);
      return "!" + wrap_formula(f->left, 4);
    case Formula::Kind::And: return wrap_formula(f->left, 3) + " & " + wrap_formula(f->right, 4);
    case Formula::Kind::Or: return wrap_formula(f->left, 2) + " | " + wrap_formula(f->right, 3);
    case Formula::Kind::Implies: return wrap_formula(f->left, 2) + " -> " + wrap_formula(f->right, 1);
    case Formula::Kind::Forall: return "forall " + f->name + ". " + to_string(f->left);
    case Formula::Kind::Exists: return "exists " + f->name + ". " + to_string(f->left);
  }
  return "?";
}

FiniteLocalRing::Code evaluate_term(const FiniteLocalRing& ring, const Term& t,
                                    const std::vector<FiniteLocalRing::Code>& env) {
  switch (t.kind) {
    case Term::Kind::Zero: return ring.zero();
    case Term::Kind::One: return ring.one();
    case Term::Kind::T: return ring.uniformizer();
    case Term::Kind::Variable: return env.at(t.slot);
    case Term::Kind::Add: return ring.add(evaluate_term(ring, *t.left, env), evaluate_term(ring, *t.right, env));
    case Term::Kind::Sub: return ring.sub(evaluate_term(ring, *t.left, env), evaluate_term(ring, *t.right, env));
    case Term::Kind::Neg: return ring.neg(evaluate_term(ring, *t.left, env));
    case Term::Kind::Mul: return ring.mul(evaluate_term(ring, *t.left, env), evaluate_term(ring, *t.right, env));
    case Term::Kind::Pow: return ring.pow(evaluate_term(ring, *t.left, env), t.exponent);
  }
  return 0;
}

namespace {

bool holds(const FiniteLocalRing& ring, const Formula& f, std::vector<FiniteLocalRing::Code>& env) {
  switch (f.kind) {
    case Formula::Kind::Equal: return evaluate_term(ring, *f.lhs, env) == evaluate_term(ring, *f.rhs, env);
    case Formula::Kind::Not: return !holds(ring, *f.left, env);
    case Formula::Kind::And: return holds(ring, *f.left, env) && holds(ring, *f.right, env);
    case Formula::Kind::Or: return holds(ring, *f.left, env) || holds(ring, *f.right, env);
    case Formula::Kind::Implies: return !holds(ring, *f.left, env) || holds(ring, *f.right, env);
    case Formula::Kind::Forall:
      for (FiniteLocalRing::Code x = 0; x < ring.size(); ++x) {
        env[f.slot] = x;
        if (!holds(ring, *f.left, env)) return false;
      }
      return true;
    case Formula::Kind::Exists:
      for (FiniteLocalRing::Code x = 0; x < ring.size(); ++x) {
        env[f.slot] = x;
        if (holds(ring, *f.left, env)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace

BigInt evaluation_cost(const FiniteLocalRing& ring, const Sentence& sentence) {
  return ipow(BigInt(ring.size()), sentence.quantifier_depth);
}

bool evaluate(const FiniteLocalRing& ring, const Sentence& sentence, std::uint64_t budget) {
  const BigInt cost = evaluation_cost(ring, sentence);
  if (cost > budget) {
    fail(ErrorKind::DomainTooLarge, ring.name() + " needs " + valkit::to_string(cost) +
                                        " assignments, above the budget " + std::to_string(budget));
  }
  std::vector<FiniteLocalRing::Code> env(sentence.slots, 0);
  return holds(ring, *sentence.root, env);
}

}  // namespace valkit
