#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valkit/bigint.hpp"
#include "valkit/local_ring.hpp"

namespace valkit {

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Terms of the ring language with the constant t. Variables are de Bruijn
/// style slots assigned by their binders; `name` is kept for printing.
struct Term {
  enum class Kind { Zero, One, T, Variable, Add, Sub, Neg, Mul, Pow };
  Kind kind;
  std::size_t slot = 0;
  std::string name;
  std::uint32_t exponent = 0;
  TermPtr left;
  TermPtr right;
  /// Set on the root of a desugared integer literal, for printing.
  std::optional<BigInt> literal;
};

struct Formula {
  enum class Kind { Equal, Not, And, Or, Implies, Forall, Exists };
  Kind kind;
  TermPtr lhs;
  TermPtr rhs;
  FormulaPtr left;
  FormulaPtr right;
  std::size_t slot = 0;
  std::string name;
  /// Written as `a != b`; stored as Not(Equal), flagged for printing.
  bool written_unequal = false;
};

TermPtr make_term(Term::Kind kind, TermPtr left = nullptr, TermPtr right = nullptr);
TermPtr make_variable(std::size_t slot, std::string name);
TermPtr make_power(TermPtr base, std::uint32_t exponent);
/// k = 1 + ... + 1 (k times) as a balanced sum of ones; -k as its negation.
TermPtr make_integer_literal(const BigInt& k);
FormulaPtr make_equal(TermPtr lhs, TermPtr rhs);
FormulaPtr make_connective(Formula::Kind kind, FormulaPtr left, FormulaPtr right = nullptr);
FormulaPtr make_quantifier(Formula::Kind kind, std::size_t slot, std::string name, FormulaPtr body);

/// A parsed sentence: no free variables.
struct Sentence {
  FormulaPtr root;
  std::size_t slots = 0;
  /// Longest chain of nested quantifiers.
  std::size_t quantifier_depth = 0;
  std::string text;

  std::string to_string() const;
};

/// Grammar, loosest binding first:
///
///     formula  := ("forall" | "exists") name ("," name)* "." formula | implies
///     implies  := or ("->" implies)?
///     or       := and ("|" and)*
///     and      := not ("&" not)*
///     not      := "!" not | atom
///     atom     := term ("=" | "!=") term | "(" formula ")" | quantified formula
///     term     := product (("+" | "-") product)*
///     product  := unary ("*" unary)*
///     unary    := "-" unary | power
///     power    := primary ("^" natural)?
///     primary  := natural | "t" | name | "(" term ")"
///
/// Throws ParseError with the offset and the set of tokens that would have
/// been accepted.
Sentence parse_sentence(std::string_view text);

std::string to_string(const TermPtr& term);
std::string to_string(const FormulaPtr& formula);

inline constexpr std::uint64_t kDefaultEvaluationBudget = 10'000'000;

/// Size of the assignment space the evaluator may visit: |R|^depth.
BigInt evaluation_cost(const FiniteLocalRing& ring, const Sentence& sentence);

/// Truth of the sentence in (R, t) by enumeration of every quantifier, with
/// short-circuiting. Throws DomainTooLarge when the cost exceeds the budget.
bool evaluate(const FiniteLocalRing& ring, const Sentence& sentence,
              std::uint64_t budget = kDefaultEvaluationBudget);

/// Value of a term under an assignment of ring codes to slots.
FiniteLocalRing::Code evaluate_term(const FiniteLocalRing& ring, const Term& term,
                                    const std::vector<FiniteLocalRing::Code>& assignment);

}  // namespace valkit
