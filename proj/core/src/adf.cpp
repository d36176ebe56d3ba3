#include "sadf/adf.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "sadf/strong.hpp"

namespace sadf {

namespace {

struct RawStatement {
  std::string name;
  std::string formula_text;
  std::size_t line = 0;
  std::size_t name_column = 0;
  std::size_t formula_column = 0;
};

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<RawStatement> scan_statements(const std::string& document) {
  std::vector<RawStatement> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::string text = document;
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0)
    text = text.substr(3);
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = eol == std::string::npos
                           ? text.substr(pos)
                           : text.substr(pos, eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    line = strip_comment(line);
    if (blank(line)) continue;
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t name_col = i + 1;
    std::size_t start = i;
    while (i < line.size() && ident_char(line[i])) ++i;
    std::string name = line.substr(start, i - start);
    if (name.empty() ||
        std::isdigit(static_cast<unsigned char>(name[0])))
      throw ParseError("expected argument name", line_no, name_col);
    if (name == "T" || name == "F")
      throw ParseError("'" + name + "' is reserved and cannot name an argument",
                       line_no, name_col);
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size() || line[i] != ':')
      throw ParseError("expected ':' after argument name '" + name + "'",
                       line_no, i + 1);
    ++i;
    out.push_back({name, line.substr(i), line_no, name_col, i + 1});
  }
  return out;
}

}  // namespace

Semantics semantics_from_name(const std::string& name) {
  if (name == "cf") return Semantics::Cf;
  if (name == "adm") return Semantics::Adm;
  if (name == "prf") return Semantics::Prf;
  if (name == "grd") return Semantics::Grd;
  if (name == "sadm") return Semantics::Sadm;
  throw DomainError("unknown semantics '" + name +
                    "', expected cf, adm, prf, grd or sadm");
}

std::string semantics_name(Semantics sem) {
  switch (sem) {
    case Semantics::Cf: return "cf";
    case Semantics::Adm: return "adm";
    case Semantics::Prf: return "prf";
    case Semantics::Grd: return "grd";
    default: return "sadm";
  }
}

std::string link_type_name(LinkType type) {
  switch (type) {
    case LinkType::Supporting: return "supporting";
    case LinkType::Attacking: return "attacking";
    case LinkType::Redundant: return "redundant";
    default: return "dependent";
  }
}

QueryMode query_mode_from_name(const std::string& name) {
  if (name == "accept") return QueryMode::Accept;
  if (name == "deny") return QueryMode::Deny;
  throw DomainError("unknown mode '" + name + "', expected accept or deny");
}

Adf::Adf(std::vector<std::string> names, std::vector<Formula> conditions)
    : universe_(make_universe(std::move(names))),
      conditions_(std::move(conditions)) {
  if (conditions_.size() != universe_->size())
    throw DomainError("argument and condition counts differ");
  parents_.resize(universe_->size());
  for (std::size_t i = 0; i < conditions_.size(); ++i) {
    for (const std::string& atom : conditions_[i].atoms()) {
      auto idx = universe_->index_of(atom);
      if (!idx)
        throw DomainError("condition of '" + universe_->name(i) +
                          "' references undeclared argument '" + atom + "'");
      parents_[i].push_back(*idx);
    }
    std::sort(parents_[i].begin(), parents_[i].end());
  }
}

Adf Adf::load(const std::string& document) {
  std::vector<RawStatement> statements = scan_statements(document);
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> first_line;
  for (const RawStatement& st : statements) {
    auto [it, inserted] = first_line.emplace(st.name, st.line);
    if (!inserted)
      throw ParseError("duplicate argument '" + st.name +
                           "', first declared on line " +
                           std::to_string(it->second),
                       st.line, st.name_column);
    names.push_back(st.name);
  }
  std::set<std::string> declared(names.begin(), names.end());
  std::vector<Formula> conditions;
  conditions.reserve(statements.size());
  for (const RawStatement& st : statements)
    conditions.push_back(parse_formula(st.formula_text, declared, st.line,
                                       st.formula_column - 1));
  return Adf(std::move(names), std::move(conditions));
}

const Formula& Adf::condition(std::size_t i) const {
  if (i >= conditions_.size())
    throw DomainError("argument index out of range");
  return conditions_[i];
}

const Formula& Adf::condition(const std::string& name) const {
  return conditions_[universe_->require(name)];
}

const std::vector<std::size_t>& Adf::parents(std::size_t i) const {
  if (i >= parents_.size()) throw DomainError("argument index out of range");
  return parents_[i];
}

std::vector<std::pair<std::size_t, std::size_t>> Adf::links() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t child = 0; child < parents_.size(); ++child)
    for (std::size_t parent : parents_[child]) out.emplace_back(parent, child);
  return out;
}

std::string Adf::document() const {
  std::string out;
  for (std::size_t i = 0; i < conditions_.size(); ++i) {
    out += universe_->name(i);
    out += ": ";
    out += conditions_[i].print();
    out += '\n';
  }
  return out;
}

Interpretation gamma(const Adf& adf, const Interpretation& v) {
  if (!(*adf.universe() == *v.universe()))
    throw DomainError("interpretation is not over the framework's arguments");
  std::vector<Truth> values(adf.size(), Truth::U);
  for (std::size_t i = 0; i < adf.size(); ++i) {
    switch (classify(partial_valuation(adf.condition(i), v))) {
      case FormulaClass::Tautology: values[i] = Truth::T; break;
      case FormulaClass::Unsatisfiable: values[i] = Truth::F; break;
      default: values[i] = Truth::U; break;
    }
  }
  return Interpretation(v.universe(), std::move(values));
}

Interpretation grounded(const Adf& adf) {
  Interpretation v = adf.trivial();
  for (;;) {
    Interpretation next = gamma(adf, v);
    if (next == v) return v;
    v = std::move(next);
  }
}

namespace {

// Depth-first search for an admissible interpretation strictly above v.
// Undecided arguments are assigned u/t/f in declaration order; every
// argument's admissibility clause is verified as soon as the argument and
// all of its parents are finalized, pruning failed branches early.
class GreaterAdmissibleSearch {
public:
  GreaterAdmissibleSearch(const Adf& adf, const Interpretation& v)
      : adf_(adf), values_(v.values()) {
    const std::size_t n = adf.size();
    std::vector<int> position(n, -1);
    for (std::size_t i = 0; i < n; ++i)
      if (!decided(values_[i])) {
        position[i] = static_cast<int>(undecided_.size());
        undecided_.push_back(i);
      }
    ready_.resize(undecided_.size());
    for (std::size_t x = 0; x < n; ++x) {
      int at = position[x];
      for (std::size_t p : adf.parents(x)) at = std::max(at, position[p]);
      // Arguments finalized from the start were checked by the caller's
      // admissibility test of v itself.
      if (at >= 0) ready_[at].push_back(x);
    }
  }

  bool found_greater() { return dfs(0, false); }

private:
  bool clause_holds(std::size_t x) const {
    if (!decided(values_[x])) return true;
    Interpretation w(adf_.universe(), values_);
    FormulaClass c = classify(partial_valuation(adf_.condition(x), w));
    return values_[x] == Truth::T ? c == FormulaClass::Tautology
                                  : c == FormulaClass::Unsatisfiable;
  }

  bool dfs(std::size_t step, bool any_decided) {
    if (step == undecided_.size()) return any_decided;
    static constexpr Truth kChoices[] = {Truth::T, Truth::F, Truth::U};
    for (Truth choice : kChoices) {
      values_[undecided_[step]] = choice;
      bool ok = true;
      for (std::size_t x : ready_[step])
        if (!clause_holds(x)) {
          ok = false;
          break;
        }
      if (ok && dfs(step + 1, any_decided || decided(choice))) {
        values_[undecided_[step]] = Truth::U;
        return true;
      }
    }
    values_[undecided_[step]] = Truth::U;
    return false;
  }

  const Adf& adf_;
  std::vector<Truth> values_;
  std::vector<std::size_t> undecided_;
  std::vector<std::vector<std::size_t>> ready_;
};

bool conflict_free(const Adf& adf, const Interpretation& v) {
  for (std::size_t i = 0; i < adf.size(); ++i) {
    if (!decided(v.value(i))) continue;
    FormulaClass c = classify(partial_valuation(adf.condition(i), v));
    if (v.value(i) == Truth::T && c == FormulaClass::Unsatisfiable)
      return false;
    if (v.value(i) == Truth::F && c != FormulaClass::Unsatisfiable)
      return false;
  }
  return true;
}

}  // namespace

bool check(const Adf& adf, const Interpretation& v, Semantics sem) {
  if (!(*adf.universe() == *v.universe()))
    throw DomainError("interpretation is not over the framework's arguments");
  switch (sem) {
    case Semantics::Cf:
      return conflict_free(adf, v);
    case Semantics::Adm:
      return leq_info(v, gamma(adf, v));
    case Semantics::Grd:
      return v == grounded(adf);
    case Semantics::Prf: {
      if (!leq_info(v, gamma(adf, v))) return false;
      return !GreaterAdmissibleSearch(adf, v).found_greater();
    }
    default:
      return is_strongly_admissible(adf, v);
  }
}

std::vector<Interpretation> enumerate(const Adf& adf, Semantics sem,
                                      std::size_t cap) {
  if (adf.size() > cap)
    throw CapExceededError("framework has " + std::to_string(adf.size()) +
                           " arguments, enumeration cap is " +
                           std::to_string(cap));
  if (sem == Semantics::Grd) return {grounded(adf)};
  std::vector<Interpretation> all;
  std::vector<Truth> values(adf.size(), Truth::U);
  static constexpr Truth kChoices[] = {Truth::T, Truth::F, Truth::U};
  std::size_t total = 1;
  for (std::size_t i = 0; i < adf.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < adf.size(); ++i) {
      values[i] = kChoices[rest % 3];
      rest /= 3;
    }
    all.emplace_back(adf.universe(), values);
  }
  std::sort(all.begin(), all.end(), canonical_less);

  std::vector<Interpretation> out;
  if (sem == Semantics::Prf) {
    // Maximality filter over the admissible set; deliberately a different
    // route than check's pruned search so the two can cross-validate.
    std::vector<Interpretation> adm;
    for (const Interpretation& v : all)
      if (check(adf, v, Semantics::Adm)) adm.push_back(v);
    for (const Interpretation& v : adm) {
      bool maximal = true;
      for (const Interpretation& w : adm)
        if (compare(v, w) == Ordering::Less) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(v);
    }
    return out;
  }
  for (const Interpretation& v : all)
    if (check(adf, v, sem)) out.push_back(v);
  return out;
}

LinkType classify_link(const Adf& adf, const std::string& parent,
                       const std::string& child) {
  std::size_t b = adf.universe()->require(parent);
  std::size_t a = adf.universe()->require(child);
  const std::vector<std::size_t>& par = adf.parents(a);
  if (std::find(par.begin(), par.end(), b) == par.end())
    throw DomainError("(" + parent + "," + child + ") is not a link");
  if (par.size() > kClassifyAtomCap)
    throw CapExceededError("argument '" + child + "' has " +
                           std::to_string(par.size()) +
                           " parents, link classification cap is " +
                           std::to_string(kClassifyAtomCap));
  std::unordered_map<std::string, bool> assignment;
  bool supporting = true;
  bool attacking = true;
  const std::size_t k = par.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    for (std::size_t j = 0; j < k; ++j)
      assignment[adf.name(par[j])] = (mask >> j) & 1U;
    bool base = evaluate(adf.condition(a), assignment);
    assignment[adf.name(b)] = true;
    bool forced = evaluate(adf.condition(a), assignment);
    if (base && !forced) supporting = false;
    if (!base && forced) attacking = false;
    if (!supporting && !attacking) break;
  }
  if (supporting && attacking) return LinkType::Redundant;
  if (supporting) return LinkType::Supporting;
  if (attacking) return LinkType::Attacking;
  return LinkType::Dependent;
}

CredulousResult credulous(const Adf& adf, const std::string& argument,
                          QueryMode mode, Semantics sem, std::size_t cap) {
  const Formula& phi = adf.condition(argument);
  for (const Interpretation& v : enumerate(adf, sem, cap)) {
    FormulaClass c = classify(partial_valuation(phi, v));
    bool hit = mode == QueryMode::Accept ? c == FormulaClass::Tautology
                                         : c == FormulaClass::Unsatisfiable;
    if (hit) return {true, v};
  }
  return {false, std::nullopt};
}

}  // namespace sadf
