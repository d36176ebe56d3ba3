#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sadf/errors.hpp"
#include "sadf/interpretation.hpp"

namespace sadf {

enum class FormulaClass { Tautology, Unsatisfiable, Contingent };

std::string formula_class_name(FormulaClass c);

/// Immutable propositional formula over argument atoms.
class Formula {
public:
  enum class Kind { True, False, Atom, Not, And, Or, Implies, Iff };

  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula biconditional(Formula left, Formula right);

  Kind kind() const;
  const std::string& atom_name() const;
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;

  std::set<std::string> atoms() const;

  /// Canonical printer with minimal parentheses; parse(print(f)) == f.
  std::string print() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline constexpr std::size_t kClassifyAtomCap = 20;

/// Grammar: iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
/// or := and ("|" and)* ; and := unary ("&" unary)* ;
/// unary := "!" unary | "(" formula ")" | "T" | "F" | IDENT.
/// Atoms must be members of declared_atoms. line/column_offset place error
/// positions when the text is embedded in a larger document.
Formula parse_formula(const std::string& text,
                      const std::set<std::string>& declared_atoms,
                      std::size_t line = 1, std::size_t column_offset = 0);

/// Replaces atoms decided in v by constants; u-atoms stay. Every atom of
/// phi must be in v's domain.
Formula partial_valuation(const Formula& phi, const Interpretation& v);

/// Exhaustive truth-table classification over the remaining atoms.
FormulaClass classify(const Formula& phi,
                      std::size_t atom_cap = kClassifyAtomCap);

/// Two-valued evaluation; assignment must cover every atom of phi.
bool evaluate(const Formula& phi,
              const std::unordered_map<std::string, bool>& assignment);

}  // namespace sadf
