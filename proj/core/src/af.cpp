#include "sadf/af.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sadf/strong.hpp"

namespace sadf {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find_first_of("#%");
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

struct LineParser {
  const std::string& line;
  std::size_t line_no;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos])))
      ++pos;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= line.size() || line[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", line_no, pos + 1);
    ++pos;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[pos])) ||
            line[pos] == '_'))
      ++pos;
    std::string word = line.substr(start, pos - start);
    if (word.empty() ||
        std::isdigit(static_cast<unsigned char>(word[0])))
      throw ParseError("expected argument name", line_no, start + 1);
    return word;
  }

  void expect_end() {
    skip_ws();
    if (pos < line.size())
      throw ParseError("unexpected trailing text", line_no, pos + 1);
  }
};

void require_universe(const Af& af, const Extension& s) {
  for (const std::string& name : s) af.universe()->require(name);
}

std::uint64_t extension_mask(const Af& af, const Extension& s) {
  std::uint64_t mask = 0;
  for (const std::string& name : s)
    mask |= std::uint64_t{1} << af.universe()->require(name);
  return mask;
}

Extension mask_extension(const Af& af, std::uint64_t mask) {
  Extension out;
  for (std::size_t i = 0; i < af.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) out.insert(af.name(i));
  return out;
}

bool defended_recursive(const Af& af, std::size_t a, std::uint64_t s_mask) {
  const std::uint64_t without_a = s_mask & ~(std::uint64_t{1} << a);
  for (std::size_t c : af.attackers_of(a)) {
    bool countered = false;
    for (std::size_t s = 0; s < af.size() && !countered; ++s) {
      if (!(without_a & (std::uint64_t{1} << s))) continue;
      if (af.attacks(s, c) && defended_recursive(af, s, without_a))
        countered = true;
    }
    if (!countered) return false;
  }
  return true;
}

}  // namespace

Af::Af(std::vector<std::string> names,
       std::vector<std::pair<std::string, std::string>> attacks)
    : universe_(make_universe(std::move(names))) {
  attackers_.resize(universe_->size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [from, to] : attacks) {
    std::size_t f = universe_->require(from);
    std::size_t t = universe_->require(to);
    if (!seen.insert({f, t}).second)
      throw DomainError("duplicate attack (" + from + "," + to + ")");
    attacks_.emplace_back(f, t);
    attackers_[t].push_back(f);
  }
  for (auto& list : attackers_) std::sort(list.begin(), list.end());
}

Af Af::load(const std::string& document) {
  std::vector<std::string> names;
  std::unordered_set<std::string> declared;
  struct RawAttack {
    std::string from, to;
    std::size_t line;
    std::size_t column;
  };
  std::vector<RawAttack> raw_attacks;
  std::set<std::pair<std::string, std::string>> seen;

  std::string text = document;
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0)
    text = text.substr(3);
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string line = eol == std::string::npos ? text.substr(pos)
                                                : text.substr(pos, eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    line = strip_comment(line);
    if (blank(line)) continue;

    LineParser p{line, line_no};
    p.skip_ws();
    std::size_t head_col = p.pos + 1;
    std::string head = p.ident();
    if (head == "arg") {
      p.expect('(');
      std::string name = p.ident();
      p.expect(')');
      p.expect('.');
      p.expect_end();
      if (!declared.insert(name).second)
        throw ParseError("duplicate argument '" + name + "'", line_no,
                         head_col);
      names.push_back(name);
    } else if (head == "att") {
      p.expect('(');
      std::string from = p.ident();
      p.expect(',');
      std::string to = p.ident();
      p.expect(')');
      p.expect('.');
      p.expect_end();
      if (!seen.insert({from, to}).second)
        throw ParseError("duplicate attack (" + from + "," + to + ")",
                         line_no, head_col);
      raw_attacks.push_back({from, to, line_no, head_col});
    } else {
      throw ParseError("expected 'arg(...)' or 'att(...)' statement", line_no,
                       head_col);
    }
  }
  for (const RawAttack& att : raw_attacks) {
    if (declared.find(att.from) == declared.end())
      throw ParseError("attack references undeclared argument '" + att.from +
                           "'",
                       att.line, att.column);
    if (declared.find(att.to) == declared.end())
      throw ParseError("attack references undeclared argument '" + att.to +
                           "'",
                       att.line, att.column);
  }
  std::vector<std::pair<std::string, std::string>> attacks;
  attacks.reserve(raw_attacks.size());
  for (const RawAttack& att : raw_attacks) attacks.emplace_back(att.from, att.to);
  return Af(std::move(names), std::move(attacks));
}

bool Af::attacks(std::size_t attacker, std::size_t target) const {
  const std::vector<std::size_t>& list = attackers_of(target);
  return std::binary_search(list.begin(), list.end(), attacker);
}

const std::vector<std::size_t>& Af::attackers_of(std::size_t target) const {
  if (target >= attackers_.size())
    throw DomainError("argument index out of range");
  return attackers_[target];
}

bool strongly_defended(const Af& af, const std::string& argument,
                       const Extension& s) {
  std::size_t a = af.universe()->require(argument);
  require_universe(af, s);
  if (af.size() > 64)
    throw CapExceededError("strong defence supports at most 64 arguments");
  return defended_recursive(af, a, extension_mask(af, s));
}

bool is_strongly_admissible_ext(const Af& af, const Extension& s) {
  require_universe(af, s);
  if (af.size() > 64)
    throw CapExceededError("strong defence supports at most 64 arguments");
  std::uint64_t mask = extension_mask(af, s);
  for (std::size_t i = 0; i < af.size(); ++i)
    if ((mask & (std::uint64_t{1} << i)) && !defended_recursive(af, i, mask))
      return false;
  return true;
}

std::vector<Extension> enumerate_strongly_admissible_ext(const Af& af,
                                                         std::size_t cap) {
  if (af.size() > cap)
    throw CapExceededError("framework has " + std::to_string(af.size()) +
                           " arguments, enumeration cap is " +
                           std::to_string(cap));
  std::vector<Extension> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << af.size());
       ++mask) {
    Extension s = mask_extension(af, mask);
    if (is_strongly_admissible_ext(af, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                        b.end());
  });
  return out;
}

Extension grounded_extension(const Af& af) {
  std::vector<bool> in(af.size(), false);
  for (;;) {
    bool changed = false;
    for (std::size_t a = 0; a < af.size(); ++a) {
      if (in[a]) continue;
      bool defended = true;
      for (std::size_t c : af.attackers_of(a)) {
        bool countered = false;
        for (std::size_t s = 0; s < af.size() && !countered; ++s)
          if (in[s] && af.attacks(s, c)) countered = true;
        if (!countered) {
          defended = false;
          break;
        }
      }
      if (defended) {
        in[a] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }
  Extension out;
  for (std::size_t a = 0; a < af.size(); ++a)
    if (in[a]) out.insert(af.name(a));
  return out;
}

Adf af_to_adf(const Af& af) {
  std::vector<std::string> names = af.universe()->names();
  std::vector<Formula> conditions;
  conditions.reserve(af.size());
  for (std::size_t a = 0; a < af.size(); ++a) {
    const std::vector<std::size_t>& attackers = af.attackers_of(a);
    if (attackers.empty()) {
      conditions.push_back(Formula::constant(true));
      continue;
    }
    Formula phi = Formula::negation(Formula::atom(af.name(attackers[0])));
    for (std::size_t i = 1; i < attackers.size(); ++i)
      phi = Formula::conjunction(
          std::move(phi),
          Formula::negation(Formula::atom(af.name(attackers[i]))));
    conditions.push_back(std::move(phi));
  }
  return Adf(std::move(names), std::move(conditions));
}

Interpretation extension_labelling(const Af& af, const Extension& s) {
  require_universe(af, s);
  std::vector<Truth> values(af.size(), Truth::U);
  for (const std::string& name : s)
    values[af.universe()->require(name)] = Truth::T;
  for (const auto& [from, to] : af.attack_pairs())
    if (s.count(af.name(from)) && values[to] != Truth::T)
      values[to] = Truth::F;
  return Interpretation(af.universe(), std::move(values));
}

bool ProbeReport::forward_agrees() const {
  return std::all_of(forward.begin(), forward.end(), [](const ProbeForward& e) {
    return e.adf_strongly_admissible;
  });
}

bool ProbeReport::backward_agrees() const {
  return std::all_of(
      backward.begin(), backward.end(),
      [](const ProbeBackward& e) { return e.af_strongly_admissible; });
}

ProbeReport conjecture_probe(const Af& af, std::size_t cap) {
  ProbeReport report;
  Adf translated = af_to_adf(af);
  for (const Extension& ext : enumerate_strongly_admissible_ext(af, cap)) {
    Interpretation labelling = extension_labelling(af, ext);
    bool sadm = is_strongly_admissible(translated, labelling);
    report.forward.push_back({ext, std::move(labelling), sadm});
  }
  for (const Interpretation& v :
       enumerate_strongly_admissible(translated, cap)) {
    Extension true_set;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v.value(i) == Truth::T) true_set.insert(af.name(i));
    bool af_sadm = is_strongly_admissible_ext(af, true_set);
    bool matches = v == extension_labelling(af, true_set);
    report.backward.push_back({v, std::move(true_set), af_sadm, matches});
  }
  return report;
}

}  // namespace sadf
