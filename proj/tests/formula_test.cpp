#include "sadf/formula.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sadf/errors.hpp"
#include "sadf/interpretation.hpp"

namespace sadf {
namespace {

const std::set<std::string> kAtoms{"a", "b", "c", "d"};

Formula parse(const std::string& text) { return parse_formula(text, kAtoms); }

TEST(FormulaParse, ConjunctionWithNegation) {
  Formula f = parse("a & !c");
  EXPECT_EQ(f.kind(), Formula::Kind::And);
  EXPECT_EQ(f.left().kind(), Formula::Kind::Atom);
  EXPECT_EQ(f.left().atom_name(), "a");
  EXPECT_EQ(f.right().kind(), Formula::Kind::Not);
  EXPECT_EQ(f.right().child().atom_name(), "c");
  EXPECT_EQ(f, Formula::conjunction(Formula::atom("a"),
                                    Formula::negation(Formula::atom("c"))));
}

TEST(FormulaParse, Constants) {
  EXPECT_EQ(parse("T").kind(), Formula::Kind::True);
  EXPECT_EQ(parse("F").kind(), Formula::Kind::False);
  EXPECT_EQ(parse("T"), Formula::constant(true));
  EXPECT_EQ(parse("F"), Formula::constant(false));
}

TEST(FormulaParse, UndeclaredAtomRejected) {
  try {
    parse_formula("!b & d", {"b"});
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("d"), std::string::npos);
  }
}

TEST(FormulaParse, PrecedenceBindsNotThenAndThenOr) {
  Formula f = parse("!a & b | c");
  EXPECT_EQ(f.kind(), Formula::Kind::Or);
  EXPECT_EQ(f.left().kind(), Formula::Kind::And);
  EXPECT_EQ(f.left().left().kind(), Formula::Kind::Not);
  EXPECT_EQ(f.right().atom_name(), "c");
}

TEST(FormulaParse, ImplicationIsRightAssociative) {
  Formula f = parse("a -> b -> c");
  EXPECT_EQ(f, parse("a -> (b -> c)"));
  EXPECT_NE(f, parse("(a -> b) -> c"));
}

TEST(FormulaParse, BiconditionalChainsLeft) {
  Formula f = parse("a <-> b <-> c");
  EXPECT_EQ(f, parse("(a <-> b) <-> c"));
}

TEST(FormulaParse, ParenthesesOverridePrecedence) {
  EXPECT_EQ(parse("a & (b | c)").kind(), Formula::Kind::And);
  EXPECT_NE(parse("a & (b | c)"), parse("a & b | c"));
}

TEST(FormulaParse, ErrorPositions) {
  try {
    parse("a &");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 4u);
  }
  try {
    parse("a - b");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("->"), std::string::npos);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(FormulaParse, OffsetsShiftReportedPositions) {
  try {
    parse_formula("a &", kAtoms, 7, 10);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 14u);
  }
}

TEST(FormulaPrint, RoundTripsCanonically) {
  const std::vector<std::string> sources{
      "a & !c",        "!b & d",          "b | !b",
      "a & (b & c)",   "(a | b) & c",     "a -> (b -> c)",
      "(a -> b) -> c", "(a <-> b) <-> c", "!(a & b)",
      "T & !F",        "a & b & c",       "a | b | c",
  };
  for (const std::string& text : sources) {
    Formula f = parse(text);
    EXPECT_EQ(parse(f.print()), f) << text << " printed as " << f.print();
  }
}

TEST(FormulaPrint, MinimalParentheses) {
  EXPECT_EQ(parse("a & b & c").print(), "a & b & c");
  EXPECT_EQ(parse("a & (b & c)").print(), "a & (b & c)");
  EXPECT_EQ(parse("a -> b -> c").print(), "a -> b -> c");
  EXPECT_EQ(parse("(a -> b) -> c").print(), "(a -> b) -> c");
  EXPECT_EQ(parse("!(a | b)").print(), "!(a | b)");
}

TEST(FormulaAtoms, CollectsEachAtomOnce) {
  EXPECT_EQ(parse("a & !c").atoms(), (std::set<std::string>{"a", "c"}));
  EXPECT_EQ(parse("b | !b").atoms(), (std::set<std::string>{"b"}));
  EXPECT_TRUE(parse("T & F").atoms().empty());
}

TEST(PartialValuation, SubstitutesDecidedAtoms) {
  UniversePtr universe = make_universe({"b", "d"});
  Interpretation v = parse_interpretation("b=t", universe);
  Formula phi = parse_formula("!b & d", {"b", "d"});
  EXPECT_EQ(partial_valuation(phi, v), parse_formula("!T & d", {"b", "d"}));
}

TEST(PartialValuation, TrivialInterpretationChangesNothing) {
  UniversePtr universe = make_universe({"a", "c"});
  Formula phi = parse_formula("a & !c", {"a", "c"});
  EXPECT_EQ(partial_valuation(phi, Interpretation::trivial(universe)), phi);
}

TEST(PartialValuation, FullAssignmentLeavesConstantsOnly) {
  UniversePtr universe = make_universe({"a", "c"});
  Interpretation v = parse_interpretation("a=t,c=f", universe);
  Formula phi = parse_formula("a & !c", {"a", "c"});
  EXPECT_EQ(partial_valuation(phi, v), parse_formula("T & !F", {"a", "c"}));
}

TEST(PartialValuation, AtomOutsideDomainRejected) {
  UniversePtr universe = make_universe({"a"});
  Formula phi = parse("a & !c");
  EXPECT_THROW(partial_valuation(phi, Interpretation::trivial(universe)),
               DomainError);
}

TEST(Classify, TautologyUnsatContingent) {
  EXPECT_EQ(classify(parse("b | !b")), FormulaClass::Tautology);
  EXPECT_EQ(classify(Formula::constant(false)), FormulaClass::Unsatisfiable);
  EXPECT_EQ(classify(parse("!T & d")), FormulaClass::Unsatisfiable);
  EXPECT_EQ(classify(parse("T & !c")), FormulaClass::Contingent);
}

TEST(Classify, AtomCapEnforced) {
  Formula wide = Formula::atom("x0");
  std::set<std::string> declared{"x0"};
  for (int i = 1; i <= 20; ++i) {
    std::string name = "x" + std::to_string(i);
    declared.insert(name);
    wide = Formula::disjunction(wide, Formula::atom(name));
  }
  EXPECT_THROW(classify(wide), CapExceededError);
  EXPECT_EQ(classify(wide, 21), FormulaClass::Contingent);
}

Formula random_formula(std::mt19937_64& rng,
                       const std::vector<std::string>& names,
                       std::size_t depth) {
  if (depth > 0) {
    switch (rng() % 5) {
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
      case 4: {
        Formula left = random_formula(rng, names, depth - 1);
        Formula right = random_formula(rng, names, depth - 1);
        return rng() % 2 == 0
                   ? Formula::implication(std::move(left), std::move(right))
                   : Formula::biconditional(std::move(left), std::move(right));
      }
      default:
        break;
    }
  }
  std::uint64_t leaf = rng() % (names.size() + 2);
  if (leaf < names.size()) return Formula::atom(names[leaf]);
  return Formula::constant(leaf == names.size());
}

std::vector<Interpretation> all_interpretations(const UniversePtr& universe) {
  static constexpr Truth kDigits[3] = {Truth::T, Truth::F, Truth::U};
  std::size_t total = 1;
  for (std::size_t i = 0; i < universe->size(); ++i) total *= 3;
  std::vector<Interpretation> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Truth> values(universe->size(), Truth::U);
    std::size_t rest = code;
    for (std::size_t i = 0; i < universe->size(); ++i) {
      values[i] = kDigits[rest % 3];
      rest /= 3;
    }
    out.emplace_back(universe, std::move(values));
  }
  return out;
}

TEST(ClassifyProperty, TwoValuedSubstitutionLeavesNoAtoms) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> names{"a", "b", "c"};
  UniversePtr universe = make_universe(names);
  for (int round = 0; round < 200; ++round) {
    Formula phi = random_formula(rng, names, 3);
    std::vector<Truth> values;
    for (std::size_t i = 0; i < names.size(); ++i)
      values.push_back(rng() % 2 == 0 ? Truth::T : Truth::F);
    Interpretation v(universe, values);
    FormulaClass c = classify(partial_valuation(phi, v));
    EXPECT_NE(c, FormulaClass::Contingent) << phi.print();
  }
}

TEST(ClassifyProperty, StableUnderPrintParseRoundTrip) {
  std::mt19937_64 rng(77);
  const std::vector<std::string> names{"a", "b", "c", "d"};
  for (int round = 0; round < 200; ++round) {
    Formula phi = random_formula(rng, names, 3);
    Formula reparsed = parse(phi.print());
    EXPECT_EQ(reparsed, phi);
    EXPECT_EQ(classify(reparsed), classify(phi));
  }
}

TEST(ClassifyProperty, SubstitutionMonotone) {
  std::mt19937_64 rng(91);
  const std::vector<std::string> names{"a", "b"};
  UniversePtr universe = make_universe(names);
  std::vector<Interpretation> all = all_interpretations(universe);
  for (int round = 0; round < 60; ++round) {
    Formula phi = random_formula(rng, names, 3);
    for (const Interpretation& v : all) {
      FormulaClass base = classify(partial_valuation(phi, v));
      if (base == FormulaClass::Contingent) continue;
      for (const Interpretation& w : all) {
        if (!leq_info(v, w)) continue;
        EXPECT_EQ(classify(partial_valuation(phi, w)), base)
            << phi.print() << " under " << v.literal() << " then "
            << w.literal();
      }
    }
  }
}

}  // namespace
}  // namespace sadf
