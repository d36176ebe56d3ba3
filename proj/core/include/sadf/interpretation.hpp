#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sadf/errors.hpp"
#include "sadf/truth.hpp"

namespace sadf {

/// Fixed, ordered argument universe shared by interpretations and frameworks.
class Universe {
public:
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Index lookup that throws DomainError for unknown names.
  std::size_t require(const std::string& name) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
  std::vector<std::size_t> sorted_;  // indices sorted by name, for lookup
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> names);

/// Total three-valued assignment over a universe. Immutable value type.
class Interpretation {
public:
  static Interpretation trivial(UniversePtr universe);
  Interpretation(UniversePtr universe, std::vector<Truth> values);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return values_.size(); }
  Truth value(std::size_t i) const;
  Truth value(const std::string& name) const;
  const std::vector<Truth>& values() const { return values_; }

  Interpretation update(std::size_t i, Truth x) const;
  Interpretation update(const std::string& name, Truth x) const;

  std::size_t decided_count() const;
  bool is_trivial() const { return decided_count() == 0; }
  std::vector<std::size_t> decided_indices() const;

  /// Textual literal, decided arguments only: "b=t,c=f". Trivial prints "".
  std::string literal() const;
  /// Set notation with negation marks: "{a, ¬c}". Trivial prints "{}".
  std::string set_notation() const;

  friend bool operator==(const Interpretation& a, const Interpretation& b);
  friend bool operator!=(const Interpretation& a, const Interpretation& b) {
    return !(a == b);
  }

private:
  UniversePtr universe_;
  std::vector<Truth> values_;
};

enum class Ordering { Equal, Less, Greater, Incomparable };

/// Information ordering comparison; Less means v carries less information.
Ordering compare(const Interpretation& v, const Interpretation& w);

/// v ≤_i w pointwise.
bool leq_info(const Interpretation& v, const Interpretation& w);

Interpretation meet(const Interpretation& v, const Interpretation& w);

/// Least upper bound of consistent operands; ConflictError when some
/// argument is decided oppositely in v and w.
Interpretation join(const Interpretation& v, const Interpretation& w);

/// Enumeration order used everywhere output must be deterministic:
/// fewer decided arguments first, then pointwise with t before f before u.
bool canonical_less(const Interpretation& v, const Interpretation& w);

/// Parses "name=t,name2=f"; omitted arguments default to u.
Interpretation parse_interpretation(const std::string& literal,
                                    UniversePtr universe);

}  // namespace sadf
