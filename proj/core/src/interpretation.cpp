#include "sadf/interpretation.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>

namespace sadf {

namespace {

// Rank for the canonical enumeration order: decided values first.
int canonical_rank(Truth v) {
  switch (v) {
    case Truth::T: return 0;
    case Truth::F: return 1;
    default: return 2;
  }
}

void require_same_universe(const Interpretation& v, const Interpretation& w) {
  if (v.universe() == w.universe()) return;
  if (*v.universe() == *w.universe()) return;
  throw DomainError("interpretations have different argument universes");
}

bool is_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      return false;
  return true;
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  sorted_.resize(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(),
            [&](std::size_t a, std::size_t b) { return names_[a] < names_[b]; });
  for (std::size_t i = 1; i < sorted_.size(); ++i)
    if (names_[sorted_[i - 1]] == names_[sorted_[i]])
      throw DomainError("duplicate argument '" + names_[sorted_[i]] + "'");
}

const std::string& Universe::name(std::size_t i) const {
  if (i >= names_.size()) throw DomainError("argument index out of range");
  return names_[i];
}

std::optional<std::size_t> Universe::index_of(const std::string& name) const {
  auto it = std::lower_bound(
      sorted_.begin(), sorted_.end(), name,
      [&](std::size_t i, const std::string& n) { return names_[i] < n; });
  if (it == sorted_.end() || names_[*it] != name) return std::nullopt;
  return *it;
}

std::size_t Universe::require(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw DomainError("unknown argument '" + name + "'");
  return *idx;
}

UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

Interpretation Interpretation::trivial(UniversePtr universe) {
  std::vector<Truth> values(universe->size(), Truth::U);
  return Interpretation(std::move(universe), std::move(values));
}

Interpretation::Interpretation(UniversePtr universe, std::vector<Truth> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_->size())
    throw DomainError("interpretation has wrong number of values");
}

Truth Interpretation::value(std::size_t i) const {
  if (i >= values_.size()) throw DomainError("argument index out of range");
  return values_[i];
}

Truth Interpretation::value(const std::string& name) const {
  return values_[universe_->require(name)];
}

Interpretation Interpretation::update(std::size_t i, Truth x) const {
  if (i >= values_.size()) throw DomainError("argument index out of range");
  std::vector<Truth> values = values_;
  values[i] = x;
  return Interpretation(universe_, std::move(values));
}

Interpretation Interpretation::update(const std::string& name, Truth x) const {
  return update(universe_->require(name), x);
}

std::size_t Interpretation::decided_count() const {
  std::size_t n = 0;
  for (Truth v : values_)
    if (decided(v)) ++n;
  return n;
}

std::vector<std::size_t> Interpretation::decided_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (decided(values_[i])) out.push_back(i);
  return out;
}

std::string Interpretation::literal() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!decided(values_[i])) continue;
    if (!out.empty()) out += ',';
    out += universe_->name(i);
    out += '=';
    out += to_char(values_[i]);
  }
  return out;
}

std::string Interpretation::set_notation() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!decided(values_[i])) continue;
    if (!first) out += ", ";
    first = false;
    if (values_[i] == Truth::F) out += "¬";
    out += universe_->name(i);
  }
  out += '}';
  return out;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  require_same_universe(a, b);
  return a.values_ == b.values_;
}

Ordering compare(const Interpretation& v, const Interpretation& w) {
  require_same_universe(v, w);
  bool v_below = true;
  bool w_below = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!leq_info(v.value(i), w.value(i))) v_below = false;
    if (!leq_info(w.value(i), v.value(i))) w_below = false;
  }
  if (v_below && w_below) return Ordering::Equal;
  if (v_below) return Ordering::Less;
  if (w_below) return Ordering::Greater;
  return Ordering::Incomparable;
}

bool leq_info(const Interpretation& v, const Interpretation& w) {
  require_same_universe(v, w);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!leq_info(v.value(i), w.value(i))) return false;
  return true;
}

Interpretation meet(const Interpretation& v, const Interpretation& w) {
  require_same_universe(v, w);
  std::vector<Truth> values(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    values[i] = meet(v.value(i), w.value(i));
  return Interpretation(v.universe(), std::move(values));
}

Interpretation join(const Interpretation& v, const Interpretation& w) {
  require_same_universe(v, w);
  std::vector<Truth> values(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Truth a = v.value(i);
    Truth b = w.value(i);
    if (decided(a) && decided(b) && a != b)
      throw ConflictError(v.universe()->name(i));
    values[i] = decided(a) ? a : b;
  }
  return Interpretation(v.universe(), std::move(values));
}

bool canonical_less(const Interpretation& v, const Interpretation& w) {
  require_same_universe(v, w);
  std::size_t dv = v.decided_count();
  std::size_t dw = w.decided_count();
  if (dv != dw) return dv < dw;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int rv = canonical_rank(v.value(i));
    int rw = canonical_rank(w.value(i));
    if (rv != rw) return rv < rw;
  }
  return false;
}

Interpretation parse_interpretation(const std::string& literal,
                                    UniversePtr universe) {
  std::vector<Truth> values(universe->size(), Truth::U);
  std::vector<bool> seen(universe->size(), false);
  std::size_t pos = 0;
  const std::size_t n = literal.size();
  auto skip_ws = [&] {
    while (pos < n && std::isspace(static_cast<unsigned char>(literal[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < n) {
    std::size_t name_col = pos + 1;
    std::size_t start = pos;
    while (pos < n && literal[pos] != '=' && literal[pos] != ',' &&
           !std::isspace(static_cast<unsigned char>(literal[pos])))
      ++pos;
    std::string name = literal.substr(start, pos - start);
    if (!is_ident(name))
      throw ParseError("expected argument name in interpretation literal", 1,
                       name_col);
    skip_ws();
    if (pos >= n || literal[pos] != '=')
      throw ParseError("expected '=' after '" + name + "'", 1, pos + 1);
    ++pos;
    skip_ws();
    if (pos >= n)
      throw ParseError("expected truth value after '" + name + "='", 1,
                       pos + 1);
    char vc = literal[pos];
    if (vc != 't' && vc != 'f' && vc != 'u')
      throw ParseError(std::string("invalid truth value '") + vc +
                           "', expected t, f or u",
                       1, pos + 1);
    ++pos;
    auto idx = universe->index_of(name);
    if (!idx) throw DomainError("unknown argument '" + name + "'");
    if (seen[*idx])
      throw ParseError("argument '" + name + "' assigned twice", 1, name_col);
    seen[*idx] = true;
    values[*idx] = truth_from_char(vc);
    skip_ws();
    if (pos < n) {
      if (literal[pos] != ',')
        throw ParseError("expected ',' between assignments", 1, pos + 1);
      ++pos;
      skip_ws();
      if (pos >= n)
        throw ParseError("trailing ',' in interpretation literal", 1, pos);
    }
  }
  return Interpretation(std::move(universe), std::move(values));
}

}  // namespace sadf
