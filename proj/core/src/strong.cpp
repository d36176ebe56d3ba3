#include "sadf/strong.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace sadf {

namespace {

constexpr std::size_t kMaskBits = 64;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

void require_universe(const Adf& adf, const Interpretation& v) {
  if (!(*adf.universe() == *v.universe()))
    throw DomainError("interpretation is not over the framework's arguments");
}

void require_mask_size(const Adf& adf) {
  if (adf.size() > kMaskBits)
    throw CapExceededError(
        "strong acceptability queries support at most 64 arguments");
}

std::uint64_t mask_from_names(const Adf& adf,
                              const std::set<std::string>& names) {
  std::uint64_t mask = 0;
  for (const std::string& name : names)
    mask |= bit(adf.universe()->require(name));
  return mask;
}

std::vector<std::string> sorted_names(const Adf& adf, std::uint64_t mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < adf.size(); ++i)
    if (mask & bit(i)) out.push_back(adf.name(i));
  std::sort(out.begin(), out.end());
  return out;
}

/// Applies fn to every subset of items, smallest first and lexicographic
/// within a size; stops early when fn returns true.
template <typename T, typename Fn>
bool for_each_subset_until(const std::vector<T>& items, Fn fn) {
  const std::size_t m = items.size();
  for (std::size_t k = 0; k <= m; ++k) {
    if (k == 0) {
      if (fn(std::vector<T>{})) return true;
      continue;
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::vector<T> selection(k);
      for (std::size_t i = 0; i < k; ++i) selection[i] = items[idx[i]];
      if (fn(selection)) return true;
      std::size_t i = k;
      bool advanced = false;
      while (i-- > 0) {
        if (idx[i] != i + m - k) {
          ++idx[i];
          for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  return false;
}

/// One query context: framework, interpretation and candidate ancestor set.
/// Memoization is keyed on (argument, exclusion mask); the exclusion set
/// grows along each recursion path, so the recursion always terminates.
class StrongSearch {
public:
  StrongSearch(const Adf& adf, const Interpretation& v, std::uint64_t s_mask)
      : adf_(adf), v_(v), s_mask_(s_mask) {}

  bool derivable(std::size_t x, std::uint64_t e_mask) {
    auto key = std::make_pair(x, e_mask);
    auto it = bool_memo_.find(key);
    if (it != bool_memo_.end()) return it->second;
    bool found =
        for_each_subset_until(eligible(x, e_mask),
                              [&](const std::vector<std::size_t>& p) {
                                if (!matches(x, parent_mask(p))) return false;
                                for (std::size_t q : p)
                                  if (!derivable(q, e_mask | bit(q)))
                                    return false;
                                return true;
                              });
    bool_memo_[key] = found;
    return found;
  }

  /// Smallest achievable maximum level, or nullopt when underivable. The
  /// parent set realizing it is recorded for witness reconstruction.
  std::optional<std::size_t> level_of(std::size_t x, std::uint64_t e_mask) {
    auto key = std::make_pair(x, e_mask);
    auto it = level_memo_.find(key);
    if (it != level_memo_.end()) return it->second;
    std::optional<std::size_t> best;
    std::vector<std::size_t> best_parents;
    for_each_subset_until(
        eligible(x, e_mask), [&](const std::vector<std::size_t>& p) {
          if (!matches(x, parent_mask(p))) return false;
          if (p.empty()) {
            best = 1;
            best_parents.clear();
            return true;  // level 1 cannot be improved
          }
          std::size_t deepest = 0;
          for (std::size_t q : p) {
            auto lq = level_of(q, e_mask | bit(q));
            if (!lq) return false;
            deepest = std::max(deepest, *lq);
          }
          if (!best || deepest + 1 < *best) {
            best = deepest + 1;
            best_parents = p;
          }
          return false;  // keep scanning for a shallower choice
        });
    level_memo_[key] = best;
    chosen_[key] = best_parents;
    return best;
  }

  const std::vector<std::size_t>& chosen_parents(std::size_t x,
                                                 std::uint64_t e_mask) const {
    return chosen_.at(std::make_pair(x, e_mask));
  }

private:
  std::vector<std::size_t> eligible(std::size_t x,
                                    std::uint64_t e_mask) const {
    std::vector<std::size_t> out;
    for (std::size_t p : adf_.parents(x)) {
      if (!(s_mask_ & bit(p))) continue;
      if (e_mask & bit(p)) continue;
      if (!decided(v_.value(p))) continue;
      out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) {
      return adf_.name(a) < adf_.name(b);
    });
    return out;
  }

  static std::uint64_t parent_mask(const std::vector<std::size_t>& p) {
    std::uint64_t mask = 0;
    for (std::size_t q : p) mask |= bit(q);
    return mask;
  }

  bool matches(std::size_t x, std::uint64_t p_mask) {
    auto key = std::make_pair(x, p_mask);
    auto it = class_memo_.find(key);
    if (it != class_memo_.end()) return it->second;
    std::vector<Truth> values(adf_.size(), Truth::U);
    for (std::size_t i = 0; i < adf_.size(); ++i)
      if (p_mask & bit(i)) values[i] = v_.value(i);
    Interpretation restricted(v_.universe(), std::move(values));
    FormulaClass c =
        classify(partial_valuation(adf_.condition(x), restricted));
    bool ok = v_.value(x) == Truth::T ? c == FormulaClass::Tautology
                                      : c == FormulaClass::Unsatisfiable;
    class_memo_[key] = ok;
    return ok;
  }

  const Adf& adf_;
  const Interpretation& v_;
  std::uint64_t s_mask_;
  std::map<std::pair<std::size_t, std::uint64_t>, bool> bool_memo_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::optional<std::size_t>>
      level_memo_;
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::size_t>>
      chosen_;
  std::map<std::pair<std::size_t, std::uint64_t>, bool> class_memo_;
};

std::size_t require_decided(const Adf& adf, const Interpretation& v,
                            const std::string& argument) {
  std::size_t a = adf.universe()->require(argument);
  if (!decided(v.value(a)))
    throw DomainError("argument '" + argument +
                      "' is undecided in the interpretation");
  return a;
}

void collect_steps(StrongSearch& search, const Adf& adf, std::size_t x,
                   std::uint64_t e_mask, std::vector<WitnessStep>& out) {
  auto level = search.level_of(x, e_mask);
  const std::vector<std::size_t>& parents = search.chosen_parents(x, e_mask);
  WitnessStep step;
  step.argument = adf.name(x);
  for (std::size_t q : parents) step.chosen_parents.push_back(adf.name(q));
  step.excluded = sorted_names(adf, e_mask);
  step.level = *level;
  out.push_back(std::move(step));
  for (std::size_t q : parents)
    collect_steps(search, adf, q, e_mask | bit(q), out);
}

std::uint64_t decided_mask(const Interpretation& v) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (decided(v.value(i))) mask |= bit(i);
  return mask;
}

Interpretation restrict_to(const Interpretation& v, std::uint64_t mask) {
  std::vector<Truth> values(v.size(), Truth::U);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (mask & bit(i)) values[i] = v.value(i);
  return Interpretation(v.universe(), std::move(values));
}

}  // namespace

bool strongly_acceptable(const Adf& adf, const Interpretation& v,
                         const std::string& argument,
                         const std::set<std::string>& ancestors,
                         const std::set<std::string>& excluded) {
  require_universe(adf, v);
  require_mask_size(adf);
  std::size_t a = require_decided(adf, v, argument);
  if (excluded.find(argument) == excluded.end())
    throw DomainError("the exclusion set must contain '" + argument + "'");
  StrongSearch search(adf, v, mask_from_names(adf, ancestors));
  return search.derivable(a, mask_from_names(adf, excluded));
}

std::optional<Witness> strong_witness(const Adf& adf, const Interpretation& v,
                                      const std::string& argument,
                                      const std::set<std::string>& ancestors) {
  require_universe(adf, v);
  require_mask_size(adf);
  std::size_t a = require_decided(adf, v, argument);
  StrongSearch search(adf, v, mask_from_names(adf, ancestors));
  auto level = search.level_of(a, bit(a));
  if (!level) return std::nullopt;
  Witness witness{argument,
                  v,
                  {ancestors.begin(), ancestors.end()},
                  *level,
                  {}};
  collect_steps(search, adf, a, bit(a), witness.steps);
  return witness;
}

bool is_strongly_admissible(const Adf& adf, const Interpretation& v) {
  require_universe(adf, v);
  require_mask_size(adf);
  StrongSearch search(adf, v, decided_mask(v));
  for (std::size_t i = 0; i < adf.size(); ++i)
    if (decided(v.value(i)) && !search.derivable(i, bit(i))) return false;
  return true;
}

Witness least_witness(const Adf& adf, const Interpretation& v,
                      const std::string& argument) {
  require_universe(adf, v);
  require_mask_size(adf);
  std::size_t a = require_decided(adf, v, argument);
  std::vector<std::string> decided_names;
  for (std::size_t i : v.decided_indices())
    decided_names.push_back(adf.name(i));
  std::sort(decided_names.begin(), decided_names.end());
  std::optional<Witness> found;
  for_each_subset_until(
      decided_names, [&](const std::vector<std::string>& s) {
        std::set<std::string> ancestors(s.begin(), s.end());
        StrongSearch search(adf, v, mask_from_names(adf, ancestors));
        if (!search.derivable(a, bit(a))) return false;
        found = strong_witness(adf, v, argument, ancestors);
        return true;
      });
  if (!found)
    throw NoWitnessError(
        "'" + argument + "' is not strongly " +
        (v.value(a) == Truth::T ? "acceptable" : "deniable") +
        " under any ancestor set");
  return *found;
}

std::size_t max_level(const Adf& adf, const Interpretation& v,
                      const Witness& witness) {
  require_universe(adf, v);
  require_mask_size(adf);
  std::size_t a = require_decided(adf, v, witness.target);
  std::set<std::string> ancestors(witness.ancestors.begin(),
                                  witness.ancestors.end());
  StrongSearch search(adf, v, mask_from_names(adf, ancestors));
  auto level = search.level_of(a, bit(a));
  if (!level)
    throw DomainError("invalid witness: '" + witness.target +
                      "' has no derivation from the recorded ancestor set");
  return *level;
}

std::vector<Interpretation> gamma_sequence(const Adf& adf) {
  std::vector<Interpretation> seq;
  seq.push_back(adf.trivial());
  for (;;) {
    Interpretation next = gamma(adf, seq.back());
    if (next == seq.back()) return seq;
    seq.push_back(std::move(next));
  }
}

std::size_t least_bounding_index(const Adf& adf, const Interpretation& w) {
  require_universe(adf, w);
  if (!is_strongly_admissible(adf, w))
    throw DomainError("interpretation is not strongly admissible");
  std::vector<Interpretation> seq = gamma_sequence(adf);
  for (std::size_t m = 0; m < seq.size(); ++m)
    if (leq_info(w, seq[m])) return m;
  throw LatticeError("no element of the gamma sequence bounds the operand");
}

std::vector<Interpretation> enumerate_strongly_admissible(const Adf& adf,
                                                          std::size_t cap) {
  return enumerate(adf, Semantics::Sadm, cap);
}

Interpretation max_sadm_below(const Adf& adf, const Interpretation& v) {
  require_universe(adf, v);
  require_mask_size(adf);
  const std::uint64_t dmask = decided_mask(v);
  Interpretation best = adf.trivial();
  std::uint64_t sub = dmask;
  for (;;) {
    Interpretation w = restrict_to(v, sub);
    if (is_strongly_admissible(adf, w)) best = join(best, w);
    if (sub == 0) break;
    sub = (sub - 1) & dmask;
  }
  return best;
}

Interpretation supremum(const Adf& adf, const Interpretation& v,
                        const Interpretation& w) {
  if (!is_strongly_admissible(adf, v) || !is_strongly_admissible(adf, w))
    throw DomainError("supremum requires strongly admissible operands");
  return join(v, w);
}

Interpretation infimum(const Adf& adf, const Interpretation& v,
                       const Interpretation& w) {
  if (!is_strongly_admissible(adf, v) || !is_strongly_admissible(adf, w))
    throw DomainError("infimum requires strongly admissible operands");
  return max_sadm_below(adf, meet(v, w));
}

bool witness_members_strong(const Adf& adf, const Interpretation& v,
                            const Witness& witness) {
  require_universe(adf, v);
  require_mask_size(adf);
  std::set<std::string> full(witness.ancestors.begin(),
                             witness.ancestors.end());
  if (!strongly_acceptable(adf, v, witness.target, full, {witness.target}))
    throw DomainError("invalid witness: target does not replay");
  std::vector<std::string> members(full.begin(), full.end());
  for (const std::string& s : members) {
    bool justified = for_each_subset_until(
        members, [&](const std::vector<std::string>& subset) {
          std::set<std::string> candidate(subset.begin(), subset.end());
          return strongly_acceptable(adf, v, s, candidate, {s});
        });
    if (!justified) return false;
  }
  return true;
}

SadmLattice build_lattice(const Adf& adf, std::size_t cap) {
  SadmLattice lattice;
  lattice.nodes = enumerate_strongly_admissible(adf, cap);
  const std::size_t m = lattice.nodes.size();
  if (m == 0 || !lattice.nodes.front().is_trivial())
    throw LatticeError("bottom node is not the trivial interpretation");
  lattice.bottom = 0;

  const Interpretation grd = grounded(adf);
  std::size_t top = m;
  for (std::size_t i = 0; i < m; ++i)
    if (lattice.nodes[i] == grd) top = i;
  if (top == m)
    throw LatticeError("grounded interpretation missing from the node set");
  lattice.top = top;

  std::vector<std::vector<bool>> le(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      le[i][j] = leq_info(lattice.nodes[i], lattice.nodes[j]);

  for (std::size_t i = 0; i < m; ++i)
    if (!le[i][top]) throw LatticeError("top does not dominate every node");

  std::map<std::vector<Truth>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[lattice.nodes[i].values()] = i;

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Interpretation sup = [&] {
        try {
          return join(lattice.nodes[i], lattice.nodes[j]);
        } catch (const ConflictError& e) {
          throw LatticeError("join of two nodes conflicts on '" +
                             e.argument() + "'");
        }
      }();
      if (index.find(sup.values()) == index.end())
        throw LatticeError("supremum of a node pair is not a node");
      Interpretation inf = adf.trivial();
      for (std::size_t k = 0; k < m; ++k)
        if (le[k][i] && le[k][j]) inf = join(inf, lattice.nodes[k]);
      auto it = index.find(inf.values());
      if (it == index.end())
        throw LatticeError("infimum of a node pair is not a node");
      if (!le[it->second][i] || !le[it->second][j])
        throw LatticeError("infimum of a node pair is not a lower bound");
    }
  }

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !le[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < m && covered; ++k)
        if (k != i && k != j && le[i][k] && le[k][j]) covered = false;
      if (covered) lattice.cover_edges.emplace_back(i, j);
    }
  }
  std::sort(lattice.cover_edges.begin(), lattice.cover_edges.end());
  return lattice;
}

std::string lattice_dot(const SadmLattice& lattice) {
  std::string out = "digraph sadm_lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" +
           lattice.nodes[i].set_notation() + "\"];\n";
  }
  for (const auto& [lower, upper] : lattice.cover_edges)
    out += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper) +
           ";\n";
  out += "}\n";
  return out;
}

std::string lattice_json(const SadmLattice& lattice) {
  std::string out = "{\"nodes\":[";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    if (i > 0) out += ',';
    const Interpretation& node = lattice.nodes[i];
    out += '{';
    for (std::size_t j = 0; j < node.size(); ++j) {
      if (j > 0) out += ',';
      out += '"';
      out += node.universe()->name(j);
      out += "\":\"";
      out += to_char(node.value(j));
      out += '"';
    }
    out += '}';
  }
  out += "],\"cover_edges\":[";
  for (std::size_t e = 0; e < lattice.cover_edges.size(); ++e) {
    if (e > 0) out += ',';
    out += '[' + std::to_string(lattice.cover_edges[e].first) + ',' +
           std::to_string(lattice.cover_edges[e].second) + ']';
  }
  out += "],\"bottom\":" + std::to_string(lattice.bottom) +
         ",\"top\":" + std::to_string(lattice.top) + '}';
  return out;
}

}  // namespace sadf
