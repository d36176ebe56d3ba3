#include "sadf/formula.hpp"

#include <cctype>
#include <utility>

namespace sadf {

struct Formula::Node {
  Kind kind;
  std::string name;            // Atom only
  std::vector<Formula> kids;   // 1 for Not, 2 for binary kinds
};

std::string formula_class_name(FormulaClass c) {
  switch (c) {
    case FormulaClass::Tautology: return "tautology";
    case FormulaClass::Unsatisfiable: return "unsatisfiable";
    default: return "contingent";
  }
}

Formula Formula::constant(bool value) {
  static const Formula t{std::make_shared<const Node>(
      Node{Kind::True, {}, {}})};
  static const Formula f{std::make_shared<const Node>(
      Node{Kind::False, {}, {}})};
  return value ? t : f;
}

Formula Formula::atom(std::string name) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::implication(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Implies, {}, {std::move(left), std::move(right)}}));
}

Formula Formula::biconditional(Formula left, Formula right) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Iff, {}, {std::move(left), std::move(right)}}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
  if (node_->kind != Kind::Atom)
    throw DomainError("atom_name on a non-atom formula node");
  return node_->name;
}

const Formula& Formula::child() const {
  if (node_->kind != Kind::Not)
    throw DomainError("child on a non-negation formula node");
  return node_->kids[0];
}

const Formula& Formula::left() const {
  if (node_->kids.size() != 2)
    throw DomainError("left on a non-binary formula node");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (node_->kids.size() != 2)
    throw DomainError("right on a non-binary formula node");
  return node_->kids[1];
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.child(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
  }
}

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Implies: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Not: return 5;
    default: return 6;
  }
}

void print_into(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, int min_prec, std::string& out) {
  if (precedence(f.kind()) < min_prec) {
    out += '(';
    print_into(f, out);
    out += ')';
  } else {
    print_into(f, out);
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::True:
      out += 'T';
      return;
    case Formula::Kind::False:
      out += 'F';
      return;
    case Formula::Kind::Atom:
      out += f.atom_name();
      return;
    case Formula::Kind::Not:
      out += '!';
      print_wrapped(f.child(), precedence(Formula::Kind::Not), out);
      return;
    case Formula::Kind::And:
      print_wrapped(f.left(), 4, out);
      out += " & ";
      print_wrapped(f.right(), 5, out);
      return;
    case Formula::Kind::Or:
      print_wrapped(f.left(), 3, out);
      out += " | ";
      print_wrapped(f.right(), 4, out);
      return;
    case Formula::Kind::Implies:
      print_wrapped(f.left(), 3, out);
      out += " -> ";
      print_wrapped(f.right(), 2, out);
      return;
    case Formula::Kind::Iff:
      print_wrapped(f.left(), 1, out);
      out += " <-> ";
      print_wrapped(f.right(), 2, out);
      return;
  }
}

}  // namespace

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(*this, out);
  return out;
}

std::string Formula::print() const {
  std::string out;
  print_into(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  if (a.node_->kind == Formula::Kind::Atom)
    return a.node_->name == b.node_->name;
  if (a.node_->kids.size() != b.node_->kids.size()) return false;
  for (std::size_t i = 0; i < a.node_->kids.size(); ++i)
    if (!(a.node_->kids[i] == b.node_->kids[i])) return false;
  return true;
}

namespace {

enum class TokenType {
  End, LParen, RParen, Not, And, Or, Implies, Iff, True, False, Ident
};

struct Token {
  TokenType type;
  std::string text;
  std::size_t column;  // 1-based within the formula text
};

class Lexer {
public:
  Lexer(const std::string& text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), offset_(column_offset) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  std::size_t line() const { return line_; }
  std::size_t error_column(const Token& t) const { return offset_ + t.column; }

private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t col = pos_ + 1;
    if (pos_ >= text_.size()) {
      current_ = {TokenType::End, "", col};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': current_ = {TokenType::LParen, "(", col}; ++pos_; return;
      case ')': current_ = {TokenType::RParen, ")", col}; ++pos_; return;
      case '!': current_ = {TokenType::Not, "!", col}; ++pos_; return;
      case '&': current_ = {TokenType::And, "&", col}; ++pos_; return;
      case '|': current_ = {TokenType::Or, "|", col}; ++pos_; return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          current_ = {TokenType::Implies, "->", col};
          pos_ += 2;
          return;
        }
        throw ParseError("unexpected '-', did you mean '->'?", line_,
                         offset_ + col);
      case '<':
        if (text_.compare(pos_, 3, "<->") == 0) {
          current_ = {TokenType::Iff, "<->", col};
          pos_ += 3;
          return;
        }
        throw ParseError("unexpected '<', did you mean '<->'?", line_,
                         offset_ + col);
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string word = text_.substr(start, pos_ - start);
      if (word == "T") {
        current_ = {TokenType::True, word, col};
      } else if (word == "F") {
        current_ = {TokenType::False, word, col};
      } else {
        current_ = {TokenType::Ident, word, col};
      }
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     offset_ + col);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_{TokenType::End, "", 1};
  std::size_t line_;
  std::size_t offset_;
};

class Parser {
public:
  Parser(const std::string& text, const std::set<std::string>& declared,
         std::size_t line, std::size_t column_offset)
      : lexer_(text, line, column_offset), declared_(declared) {}

  Formula parse() {
    Formula f = parse_iff();
    const Token& t = lexer_.peek();
    if (t.type != TokenType::End)
      throw ParseError("unexpected '" + t.text + "' after formula",
                       lexer_.line(), lexer_.error_column(t));
    return f;
  }

private:
  Formula parse_iff() {
    Formula f = parse_imp();
    while (lexer_.peek().type == TokenType::Iff) {
      lexer_.take();
      f = Formula::biconditional(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (lexer_.peek().type == TokenType::Implies) {
      lexer_.take();
      f = Formula::implication(std::move(f), parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lexer_.peek().type == TokenType::Or) {
      lexer_.take();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lexer_.peek().type == TokenType::And) {
      lexer_.take();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    Token t = lexer_.take();
    switch (t.type) {
      case TokenType::Not:
        return Formula::negation(parse_unary());
      case TokenType::LParen: {
        Formula f = parse_iff();
        Token close = lexer_.take();
        if (close.type != TokenType::RParen)
          throw ParseError("expected ')'", lexer_.line(),
                           lexer_.error_column(close));
        return f;
      }
      case TokenType::True:
        return Formula::constant(true);
      case TokenType::False:
        return Formula::constant(false);
      case TokenType::Ident:
        if (declared_.find(t.text) == declared_.end())
          throw ParseError("undeclared atom '" + t.text + "'", lexer_.line(),
                           lexer_.error_column(t));
        return Formula::atom(t.text);
      case TokenType::End:
        throw ParseError("unexpected end of formula", lexer_.line(),
                         lexer_.error_column(t));
      default:
        throw ParseError("unexpected '" + t.text + "'", lexer_.line(),
                         lexer_.error_column(t));
    }
  }

  Lexer lexer_;
  const std::set<std::string>& declared_;
};

}  // namespace

Formula parse_formula(const std::string& text,
                      const std::set<std::string>& declared_atoms,
                      std::size_t line, std::size_t column_offset) {
  return Parser(text, declared_atoms, line, column_offset).parse();
}

Formula partial_valuation(const Formula& phi, const Interpretation& v) {
  switch (phi.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return phi;
    case Formula::Kind::Atom: {
      auto idx = v.universe()->index_of(phi.atom_name());
      if (!idx)
        throw DomainError("atom '" + phi.atom_name() +
                          "' outside the interpretation's domain");
      switch (v.value(*idx)) {
        case Truth::T: return Formula::constant(true);
        case Truth::F: return Formula::constant(false);
        default: return phi;
      }
    }
    case Formula::Kind::Not:
      return Formula::negation(partial_valuation(phi.child(), v));
    case Formula::Kind::And:
      return Formula::conjunction(partial_valuation(phi.left(), v),
                                  partial_valuation(phi.right(), v));
    case Formula::Kind::Or:
      return Formula::disjunction(partial_valuation(phi.left(), v),
                                  partial_valuation(phi.right(), v));
    case Formula::Kind::Implies:
      return Formula::implication(partial_valuation(phi.left(), v),
                                  partial_valuation(phi.right(), v));
    default:
      return Formula::biconditional(partial_valuation(phi.left(), v),
                                    partial_valuation(phi.right(), v));
  }
}

namespace {

bool evaluate_with(const Formula& phi, unsigned long long mask,
                   const std::unordered_map<std::string, std::size_t>& index) {
  switch (phi.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom:
      return (mask >> index.at(phi.atom_name())) & 1ULL;
    case Formula::Kind::Not:
      return !evaluate_with(phi.child(), mask, index);
    case Formula::Kind::And:
      return evaluate_with(phi.left(), mask, index) &&
             evaluate_with(phi.right(), mask, index);
    case Formula::Kind::Or:
      return evaluate_with(phi.left(), mask, index) ||
             evaluate_with(phi.right(), mask, index);
    case Formula::Kind::Implies:
      return !evaluate_with(phi.left(), mask, index) ||
             evaluate_with(phi.right(), mask, index);
    default:
      return evaluate_with(phi.left(), mask, index) ==
             evaluate_with(phi.right(), mask, index);
  }
}

}  // namespace

FormulaClass classify(const Formula& phi, std::size_t atom_cap) {
  std::set<std::string> atom_set = phi.atoms();
  if (atom_set.size() > atom_cap)
    throw CapExceededError("formula has " + std::to_string(atom_set.size()) +
                           " atoms, classification cap is " +
                           std::to_string(atom_cap));
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < atoms.size(); ++i) index[atoms[i]] = i;
  bool any_true = false;
  bool any_false = false;
  const unsigned long long total = 1ULL << atoms.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    if (evaluate_with(phi, mask, index))
      any_true = true;
    else
      any_false = true;
    if (any_true && any_false) return FormulaClass::Contingent;
  }
  if (any_true) return FormulaClass::Tautology;
  return FormulaClass::Unsatisfiable;
}

bool evaluate(const Formula& phi,
              const std::unordered_map<std::string, bool>& assignment) {
  switch (phi.kind()) {
    case Formula::Kind::True:
      return true;
    case Formula::Kind::False:
      return false;
    case Formula::Kind::Atom: {
      auto it = assignment.find(phi.atom_name());
      if (it == assignment.end())
        throw DomainError("atom '" + phi.atom_name() +
                          "' missing from the assignment");
      return it->second;
    }
    case Formula::Kind::Not:
      return !evaluate(phi.child(), assignment);
    case Formula::Kind::And:
      return evaluate(phi.left(), assignment) &&
             evaluate(phi.right(), assignment);
    case Formula::Kind::Or:
      return evaluate(phi.left(), assignment) ||
             evaluate(phi.right(), assignment);
    case Formula::Kind::Implies:
      return !evaluate(phi.left(), assignment) ||
             evaluate(phi.right(), assignment);
    default:
      return evaluate(phi.left(), assignment) ==
             evaluate(phi.right(), assignment);
  }
}

}  // namespace sadf
