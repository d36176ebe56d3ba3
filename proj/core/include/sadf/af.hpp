#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sadf/adf.hpp"
#include "sadf/interpretation.hpp"

namespace sadf {

inline constexpr std::size_t kAfEnumerationCap = 16;

/// Dung argumentation framework: arguments plus a binary attack relation.
class Af {
public:
  Af(std::vector<std::string> names,
     std::vector<std::pair<std::string, std::string>> attacks);

  /// Parses `arg(x).` / `att(x,y).` lines; `#` and `%` start comments.
  static Af load(const std::string& document);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return universe_->size(); }
  const std::string& name(std::size_t i) const { return universe_->name(i); }

  bool attacks(std::size_t attacker, std::size_t target) const;
  const std::vector<std::pair<std::size_t, std::size_t>>& attack_pairs()
      const {
    return attacks_;
  }
  const std::vector<std::size_t>& attackers_of(std::size_t target) const;

private:
  UniversePtr universe_;
  std::vector<std::pair<std::size_t, std::size_t>> attacks_;
  std::vector<std::vector<std::size_t>> attackers_;
};

using Extension = std::set<std::string>;

/// Every attacker of `argument` is attacked by some member of S \ {argument}
/// that is itself strongly defended by S \ {argument}.
bool strongly_defended(const Af& af, const std::string& argument,
                       const Extension& s);

/// Every member is strongly defended by the extension itself.
bool is_strongly_admissible_ext(const Af& af, const Extension& s);

/// All strongly admissible extensions, ordered by size then member names.
std::vector<Extension> enumerate_strongly_admissible_ext(
    const Af& af, std::size_t cap = kAfEnumerationCap);

/// Least fixpoint of the defence operator, from the empty set.
Extension grounded_extension(const Af& af);

/// Attack encoding: the condition of each argument is the conjunction of
/// the negated attackers, constant-true when unattacked.
Adf af_to_adf(const Af& af);

/// Extension-to-interpretation map used by the probe: t on members, f on
/// arguments attacked by a member, u elsewhere.
Interpretation extension_labelling(const Af& af, const Extension& s);

struct ProbeForward {
  Extension extension;
  Interpretation labelling;
  bool adf_strongly_admissible = false;
};

struct ProbeBackward {
  Interpretation interpretation;
  Extension true_set;
  bool af_strongly_admissible = false;
  bool labelling_matches = false;
};

/// Descriptive correspondence report between AF strong admissibility and
/// ADF strong admissibility of the translated framework. Neither direction
/// is asserted; callers read the flags.
struct ProbeReport {
  std::vector<ProbeForward> forward;
  std::vector<ProbeBackward> backward;
  bool forward_agrees() const;
  bool backward_agrees() const;
};

ProbeReport conjecture_probe(const Af& af,
                             std::size_t cap = kAfEnumerationCap);

}  // namespace sadf
