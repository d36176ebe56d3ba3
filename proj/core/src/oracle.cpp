#include "sadf/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "sadf/strong.hpp"

namespace sadf {

namespace {

void require_same(const Adf& adf, const Interpretation& v) {
  if (v.universe() != adf.universe() && !(*v.universe() == *adf.universe()))
    throw DomainError("interpretation universe does not match the framework");
}

bool matches_value(FormulaClass c, Truth x) {
  return (x == Truth::T && c == FormulaClass::Tautology) ||
         (x == Truth::F && c == FormulaClass::Unsatisfiable);
}

Interpretation restrict_to(const Interpretation& v,
                           const std::vector<bool>& keep) {
  std::vector<Truth> values(v.size(), Truth::U);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (keep[i]) values[i] = v.value(i);
  return Interpretation(v.universe(), std::move(values));
}

}  // namespace

bool iterative_justification(const Adf& adf, const Interpretation& v) {
  require_same(adf, v);
  std::vector<bool> known(adf.size(), false);
  std::size_t known_count = 0;
  for (;;) {
    Interpretation context = restrict_to(v, known);
    std::vector<std::size_t> added;
    for (std::size_t i = 0; i < adf.size(); ++i) {
      if (known[i] || !decided(v.value(i))) continue;
      FormulaClass c = classify(partial_valuation(adf.condition(i), context));
      if (matches_value(c, v.value(i))) added.push_back(i);
    }
    if (added.empty()) break;
    for (std::size_t i : added) known[i] = true;
    known_count += added.size();
  }
  return known_count == v.decided_count();
}

namespace {

/// Exhaustive realization of the recursive justification test: every
/// ancestor set, every parent subset, no ordering or maximality shortcuts.
class BruteForce {
public:
  BruteForce(const Adf& adf, const Interpretation& v) : adf_(adf), v_(v) {}

  bool admissible() {
    std::vector<std::size_t> decided_args = v_.decided_indices();
    std::uint64_t all_decided = 0;
    for (std::size_t i : decided_args) all_decided |= bit(i);
    std::vector<bool> satisfied(adf_.size(), false);
    std::size_t remaining = decided_args.size();
    for (std::uint64_t s = 0; s <= all_decided && remaining > 0; ++s) {
      if ((s | all_decided) != all_decided) continue;
      s_mask_ = s;
      memo_.clear();
      for (std::size_t a : decided_args) {
        if (satisfied[a]) continue;
        if (derive(a, bit(a))) {
          satisfied[a] = true;
          --remaining;
        }
      }
    }
    return remaining == 0;
  }

private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  bool derive(std::size_t x, std::uint64_t excluded) {
    if (!decided(v_.value(x))) return false;
    auto key = std::make_pair(x, excluded);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::uint64_t eligible = 0;
    for (std::size_t p : adf_.parents(x))
      if ((s_mask_ & bit(p)) && !(excluded & bit(p))) eligible |= bit(p);
    bool ok = false;
    std::uint64_t p_mask = eligible;
    for (;;) {
      if (try_parents(x, p_mask, excluded)) {
        ok = true;
        break;
      }
      if (p_mask == 0) break;
      p_mask = (p_mask - 1) & eligible;
    }
    memo_[key] = ok;
    return ok;
  }

  bool try_parents(std::size_t x, std::uint64_t p_mask,
                   std::uint64_t excluded) {
    std::vector<Truth> values(adf_.size(), Truth::U);
    for (std::size_t i = 0; i < adf_.size(); ++i)
      if (p_mask & bit(i)) values[i] = v_.value(i);
    Interpretation restricted(v_.universe(), std::move(values));
    FormulaClass c = classify(partial_valuation(adf_.condition(x), restricted));
    if (!matches_value(c, v_.value(x))) return false;
    for (std::size_t i = 0; i < adf_.size(); ++i)
      if ((p_mask & bit(i)) && !derive(i, excluded | bit(i))) return false;
    return true;
  }

  const Adf& adf_;
  const Interpretation& v_;
  std::uint64_t s_mask_ = 0;
  std::map<std::pair<std::size_t, std::uint64_t>, bool> memo_;
};

}  // namespace

bool brute_force_sadm(const Adf& adf, const Interpretation& v,
                      std::size_t cap) {
  require_same(adf, v);
  if (adf.size() > cap)
    throw CapExceededError("framework has " + std::to_string(adf.size()) +
                           " arguments, brute-force cap is " +
                           std::to_string(cap));
  return BruteForce(adf, v).admissible();
}

namespace {

Formula random_formula(std::mt19937_64& rng,
                       const std::vector<std::string>& names,
                       std::size_t depth) {
  if (depth > 0) {
    switch (rng() % 4) {
      case 1:
        return Formula::negation(random_formula(rng, names, depth - 1));
      case 2: {
        Formula left = random_formula(rng, names, depth - 1);
        Formula right = random_formula(rng, names, depth - 1);
        return Formula::conjunction(std::move(left), std::move(right));
      }
      case 3: {
        Formula left = random_formula(rng, names, depth - 1);
        Formula right = random_formula(rng, names, depth - 1);
        return Formula::disjunction(std::move(left), std::move(right));
      }
      default:
        break;
    }
  }
  std::uint64_t leaf = rng() % (names.size() + 2);
  if (leaf < names.size()) return Formula::atom(names[leaf]);
  return Formula::constant(leaf == names.size());
}

}  // namespace

AdfSample make_sample(std::uint64_t seed, std::size_t max_args,
                      std::size_t max_depth) {
  if (max_args == 0 || max_args > 26)
    throw DomainError("max_args must be between 1 and 26");
  std::mt19937_64 rng(seed);
  std::size_t n = 1 + static_cast<std::size_t>(rng() % max_args);
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.emplace_back(1, static_cast<char>('a' + i));
  std::vector<Formula> conditions;
  conditions.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    conditions.push_back(random_formula(rng, names, max_depth));
  return AdfSample{seed, Adf(std::move(names), std::move(conditions))};
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

const char* verdict_name(bool b) { return b ? "true" : "false"; }

std::vector<Interpretation> all_interpretations(const Adf& adf) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < adf.size(); ++i) total *= 3;
  static constexpr Truth kDigits[3] = {Truth::T, Truth::F, Truth::U};
  std::vector<Interpretation> all;
  all.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Truth> values(adf.size(), Truth::U);
    std::size_t rest = code;
    for (std::size_t i = 0; i < adf.size(); ++i) {
      values[i] = kDigits[rest % 3];
      rest /= 3;
    }
    all.emplace_back(adf.universe(), std::move(values));
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

class SampleChecker {
public:
  SampleChecker(const AdfSample& sample, CrossValidation& out)
      : sample_(sample), adf_(sample.adf), out_(out) {}

  void run() {
    sweep();
    check_bounds();
    check_gamma_sequence();
    check_pairs();
    check_max_below();
    check_bounding_indices();
    check_witnesses();
    check_monotonicity();
    check_lattice();
  }

private:
  void hard(const std::string& interp, const std::string& operation,
            const std::string& main, const std::string& oracle) {
    out_.hard.push_back({sample_.seed, interp, operation, main, oracle});
  }

  void finding(const std::string& interp, const std::string& operation,
               const std::string& main, const std::string& oracle) {
    out_.findings.push_back({sample_.seed, interp, operation, main, oracle});
  }

  bool in_sadm(const Interpretation& w) const {
    return std::any_of(sadm_.begin(), sadm_.end(),
                       [&](const Interpretation& u) { return u == w; });
  }

  static std::string pair_literal(const Interpretation& v,
                                  const Interpretation& w) {
    return v.literal() + " ; " + w.literal();
  }

  void sweep() {
    all_ = all_interpretations(adf_);
    for (const Interpretation& v : all_) {
      bool main = is_strongly_admissible(adf_, v);
      bool brute = brute_force_sadm(adf_, v);
      if (main != brute)
        hard(v.literal(), "strongly_admissible", verdict_name(main),
             verdict_name(brute));
      bool iterative = iterative_justification(adf_, v);
      if (iterative != main)
        finding(v.literal(), "iterative_justification", verdict_name(main),
                verdict_name(iterative));
      bool adm = check(adf_, v, Semantics::Adm);
      bool cf = check(adf_, v, Semantics::Cf);
      if (main && !adm)
        hard(v.literal(), "strongly_admissible implies admissible", "false",
             "true");
      if (adm && !cf)
        hard(v.literal(), "admissible implies conflict_free", "false", "true");
      if (main) sadm_.push_back(v);
    }
  }

  void check_bounds() {
    grounded_.emplace(grounded(adf_));
    if (!in_sadm(adf_.trivial()))
      hard("", "trivial strongly admissible", "false", "true");
    if (!in_sadm(*grounded_))
      hard(grounded_->literal(), "grounded strongly admissible", "false",
           "true");
    for (const Interpretation& w : sadm_)
      if (!leq_info(w, *grounded_))
        hard(w.literal(), "grounded bounds strongly admissible", "not <=",
             "<=");
  }

  void check_gamma_sequence() {
    seq_ = gamma_sequence(adf_);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (!in_sadm(seq_[i]))
        hard(seq_[i].literal(), "gamma_sequence strongly admissible", "false",
             "true");
      if (i + 1 < seq_.size() && !leq_info(seq_[i], seq_[i + 1]))
        hard(seq_[i].literal(), "gamma_sequence increasing", "not <=", "<=");
    }
    if (!(seq_.back() == *grounded_))
      hard(seq_.back().literal(), "gamma_sequence fixpoint",
           seq_.back().literal(), grounded_->literal());
  }

  void check_pairs() {
    for (std::size_t i = 0; i < sadm_.size(); ++i) {
      for (std::size_t j = i; j < sadm_.size(); ++j) {
        const Interpretation& v = sadm_[i];
        const Interpretation& w = sadm_[j];
        std::optional<Interpretation> sup;
        try {
          sup.emplace(supremum(adf_, v, w));
        } catch (const ConflictError& e) {
          hard(pair_literal(v, w), "join conflict-free", e.what(),
               "no conflict");
          continue;
        }
        if (!in_sadm(*sup))
          hard(pair_literal(v, w), "join strongly admissible", sup->literal(),
               "member of the strongly admissible set");
        if (!leq_info(v, *sup) || !leq_info(w, *sup))
          hard(pair_literal(v, w), "supremum upper bound", sup->literal(),
               ">= both operands");
        Interpretation inf = infimum(adf_, v, w);
        if (!in_sadm(inf))
          hard(pair_literal(v, w), "infimum strongly admissible",
               inf.literal(), "member of the strongly admissible set");
        if (!leq_info(inf, v) || !leq_info(inf, w))
          hard(pair_literal(v, w), "infimum lower bound", inf.literal(),
               "<= both operands");
        for (const Interpretation& u : sadm_) {
          if (leq_info(v, u) && leq_info(w, u) && !leq_info(*sup, u))
            hard(pair_literal(v, w), "supremum least", sup->literal(),
                 "<= " + u.literal());
          if (leq_info(u, v) && leq_info(u, w) && !leq_info(u, inf))
            hard(pair_literal(v, w), "infimum greatest", inf.literal(),
                 ">= " + u.literal());
        }
      }
    }
  }

  void check_max_below() {
    for (const Interpretation& v : all_) {
      Interpretation below = max_sadm_below(adf_, v);
      if (!in_sadm(below))
        hard(v.literal(), "max_sadm_below strongly admissible",
             below.literal(), "member of the strongly admissible set");
      if (!leq_info(below, v))
        hard(v.literal(), "max_sadm_below below argument", below.literal(),
             "<= " + v.literal());
      for (const Interpretation& u : sadm_)
        if (leq_info(u, v) && !leq_info(u, below))
          hard(v.literal(), "max_sadm_below dominates", below.literal(),
               ">= " + u.literal());
    }
  }

  void check_bounding_indices() {
    for (const Interpretation& w : sadm_) {
      std::size_t m = 0;
      try {
        m = least_bounding_index(adf_, w);
      } catch (const std::exception& e) {
        hard(w.literal(), "least_bounding_index", e.what(), "an index");
        continue;
      }
      if (m >= seq_.size() || !leq_info(w, seq_[m]))
        hard(w.literal(), "least_bounding_index bounds", std::to_string(m),
             "index with w <= sequence element");
      else if (m > 0 && leq_info(w, seq_[m - 1]))
        hard(w.literal(), "least_bounding_index minimal", std::to_string(m),
             std::to_string(m - 1));
    }
  }

  void check_witnesses() {
    ancestors_.resize(sadm_.size());
    for (std::size_t i = 0; i < sadm_.size(); ++i) {
      const Interpretation& w = sadm_[i];
      for (std::size_t a : w.decided_indices()) {
        std::optional<Witness> wit;
        try {
          wit.emplace(least_witness(adf_, w, adf_.name(a)));
        } catch (const NoWitnessError&) {
          hard(w.literal(), "least witness exists: " + adf_.name(a), "none",
               "witness");
          continue;
        }
        if (!witness_members_strong(adf_, w, *wit))
          hard(w.literal(), "witness members strong: " + adf_.name(a),
               "false", "true");
        if (wit->max_level > adf_.size())
          hard(w.literal(), "witness level bound: " + adf_.name(a),
               std::to_string(wit->max_level),
               "<= " + std::to_string(adf_.size()));
        if (max_level(adf_, w, *wit) != wit->max_level)
          hard(w.literal(), "witness level replay: " + adf_.name(a),
               std::to_string(max_level(adf_, w, *wit)),
               std::to_string(wit->max_level));
        ancestors_[i].emplace_back(a, wit->ancestors);
      }
    }
  }

  void check_monotonicity() {
    for (std::size_t i = 0; i < sadm_.size(); ++i) {
      for (std::size_t j = 0; j < sadm_.size(); ++j) {
        if (i == j || !leq_info(sadm_[i], sadm_[j])) continue;
        for (const auto& [a, ancestors] : ancestors_[i]) {
          std::set<std::string> s(ancestors.begin(), ancestors.end());
          if (!strongly_acceptable(adf_, sadm_[j], adf_.name(a), s,
                                   {adf_.name(a)}))
            hard(pair_literal(sadm_[i], sadm_[j]),
                 "monotone in interpretation: " + adf_.name(a), "false",
                 "true");
        }
      }
    }
  }

  void check_lattice() {
    try {
      SadmLattice lattice = build_lattice(adf_);
      bool same = lattice.nodes.size() == sadm_.size();
      for (std::size_t i = 0; same && i < sadm_.size(); ++i)
        same = lattice.nodes[i] == sadm_[i];
      if (!same)
        hard("", "lattice nodes", std::to_string(lattice.nodes.size()),
             std::to_string(sadm_.size()));
      else {
        if (!(lattice.nodes[lattice.bottom] == adf_.trivial()))
          hard("", "lattice bottom", lattice.nodes[lattice.bottom].literal(),
               "");
        if (!(lattice.nodes[lattice.top] == *grounded_))
          hard("", "lattice top", lattice.nodes[lattice.top].literal(),
               grounded_->literal());
      }
    } catch (const std::exception& e) {
      hard("", "build_lattice", e.what(), "a lattice");
    }
  }

  const AdfSample& sample_;
  const Adf& adf_;
  CrossValidation& out_;
  std::vector<Interpretation> all_;
  std::vector<Interpretation> sadm_;
  std::vector<Interpretation> seq_;
  std::optional<Interpretation> grounded_;
  std::vector<std::vector<std::pair<std::size_t, std::vector<std::string>>>>
      ancestors_;
};

}  // namespace

CrossValidation cross_validate(std::uint64_t seed, std::size_t count) {
  CrossValidation out;
  out.samples = count;
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < count; ++i) {
    AdfSample sample = make_sample(splitmix64(state));
    SampleChecker(sample, out).run();
  }
  return out;
}

}  // namespace sadf
