#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadf/formula.hpp"
#include "sadf/interpretation.hpp"

namespace sadf {

inline constexpr std::size_t kEnumerationCap = 12;

enum class Semantics { Cf, Adm, Prf, Grd, Sadm };

Semantics semantics_from_name(const std::string& name);
std::string semantics_name(Semantics sem);

enum class LinkType { Supporting, Attacking, Redundant, Dependent };

std::string link_type_name(LinkType type);

/// Arguments plus one acceptance condition each; links are derived from the
/// atoms occurring in the conditions.
class Adf {
public:
  Adf(std::vector<std::string> names, std::vector<Formula> conditions);

  /// Parses the .adf line format: `# comment`, `name : formula`.
  static Adf load(const std::string& document);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return universe_->size(); }
  const std::string& name(std::size_t i) const { return universe_->name(i); }

  const Formula& condition(std::size_t i) const;
  const Formula& condition(const std::string& name) const;

  /// Parent indices of argument i, ascending.
  const std::vector<std::size_t>& parents(std::size_t i) const;
  bool is_initial(std::size_t i) const { return parents(i).empty(); }

  /// All links (parent, child), grouped by child in declaration order.
  std::vector<std::pair<std::size_t, std::size_t>> links() const;

  Interpretation trivial() const { return Interpretation::trivial(universe_); }

  /// Serializes back to the .adf line format.
  std::string document() const;

private:
  UniversePtr universe_;
  std::vector<Formula> conditions_;
  std::vector<std::vector<std::size_t>> parents_;
};

/// Characteristic operator: per argument t/f/u as the partially valuated
/// condition is a tautology, unsatisfiable, or contingent.
Interpretation gamma(const Adf& adf, const Interpretation& v);

/// Least fixpoint of gamma, reached from the trivial interpretation.
Interpretation grounded(const Adf& adf);

bool check(const Adf& adf, const Interpretation& v, Semantics sem);

/// All interpretations satisfying check, in canonical order.
std::vector<Interpretation> enumerate(const Adf& adf, Semantics sem,
                                      std::size_t cap = kEnumerationCap);

/// Classifies the link (parent, child) by quantifying over the two-valued
/// assignments of the child's parents.
LinkType classify_link(const Adf& adf, const std::string& parent,
                       const std::string& child);

enum class QueryMode { Accept, Deny };

QueryMode query_mode_from_name(const std::string& name);

struct CredulousResult {
  bool verdict = false;
  std::optional<Interpretation> witness;
};

/// True iff some sem-interpretation makes the argument's condition
/// irrefutable (accept) or unsatisfiable (deny).
CredulousResult credulous(const Adf& adf, const std::string& argument,
                          QueryMode mode, Semantics sem,
                          std::size_t cap = kEnumerationCap);

}  // namespace sadf
