#include "sadf/strong.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sadf/errors.hpp"
#include "sadf/oracle.hpp"
#include "support.hpp"

namespace sadf {
namespace {

using testutil::interp;
using testutil::load_adf;

std::vector<Interpretation> parse_all(const Adf& adf,
                                      std::vector<std::string> literals) {
  std::vector<Interpretation> out;
  for (const std::string& s : literals) out.push_back(interp(adf, s));
  return out;
}

TEST(StronglyAcceptable, DeniedArgumentJustifiedThroughInitialParent) {
  Adf adf = load_adf("chain4.adf");
  Interpretation v = interp(adf, "c=f,d=f");
  EXPECT_TRUE(strongly_acceptable(adf, v, "c", {"d"}, {"c"}));
  EXPECT_FALSE(strongly_acceptable(adf, v, "c", {}, {"c"}));
}

TEST(StronglyAcceptable, AncestorSetWithoutJustifiedMembersFails) {
  Adf adf = load_adf("chain4.adf");
  Interpretation v = interp(adf, "b=t,c=f,d=f");
  EXPECT_FALSE(strongly_acceptable(adf, v, "c", {"b"}, {"c"}));
  EXPECT_TRUE(strongly_acceptable(adf, v, "c", {"d"}, {"c"}));
}

TEST(StronglyAcceptable, TautologousConditionNeedsNoAncestors) {
  Adf adf = load_adf("redundant_link.adf");
  Interpretation v = interp(adf, "a=t");
  EXPECT_TRUE(strongly_acceptable(adf, v, "a", {}, {"a"}));
}

TEST(StronglyAcceptable, PreconditionsEnforced) {
  Adf adf = load_adf("chain4.adf");
  Interpretation v = interp(adf, "c=f,d=f");
  EXPECT_THROW(strongly_acceptable(adf, v, "a", {"d"}, {"a"}), DomainError);
  EXPECT_THROW(strongly_acceptable(adf, v, "c", {"d"}, {}), DomainError);
  EXPECT_THROW(strongly_acceptable(adf, v, "z", {"d"}, {"z"}), DomainError);
}

TEST(IsStronglyAdmissible, Examples) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_TRUE(is_strongly_admissible(adf, adf.trivial()));
  EXPECT_TRUE(is_strongly_admissible(adf, interp(adf, "c=f,d=f")));
  EXPECT_TRUE(is_strongly_admissible(adf, grounded(adf)));
  EXPECT_FALSE(is_strongly_admissible(adf, interp(adf, "b=t")));
  Adf loop = load_adf("self_support.adf");
  EXPECT_FALSE(is_strongly_admissible(loop, interp(loop, "a=f,b=t")));
}

TEST(IsStronglyAdmissible, BelowGroundedIsNotSufficient) {
  Adf adf = load_adf("chain4.adf");
  Interpretation v = interp(adf, "b=t");
  EXPECT_TRUE(leq_info(v, grounded(adf)));
  EXPECT_FALSE(is_strongly_admissible(adf, v));
}

TEST(LeastWitness, PicksSmallestThenLexicographicAncestors) {
  Adf adf = load_adf("chain4.adf");
  Witness w = least_witness(adf, interp(adf, "c=f,d=f"), "c");
  EXPECT_EQ(w.target, "c");
  EXPECT_EQ(w.ancestors, (std::vector<std::string>{"d"}));
  EXPECT_EQ(w.max_level, 2u);
  ASSERT_EQ(w.steps.size(), 2u);
  EXPECT_EQ(w.steps[0].argument, "c");
  EXPECT_EQ(w.steps[0].chosen_parents, (std::vector<std::string>{"d"}));
  EXPECT_EQ(w.steps[0].level, 2u);
  EXPECT_EQ(w.steps[1].argument, "d");
  EXPECT_TRUE(w.steps[1].chosen_parents.empty());
  EXPECT_EQ(w.steps[1].level, 1u);
}

TEST(LeastWitness, EmptyAncestorSetForTautologousCondition) {
  Adf adf = load_adf("redundant_link.adf");
  Witness w = least_witness(adf, interp(adf, "a=t"), "a");
  EXPECT_TRUE(w.ancestors.empty());
  EXPECT_EQ(w.max_level, 1u);
  ASSERT_EQ(w.steps.size(), 1u);
  EXPECT_TRUE(w.steps[0].chosen_parents.empty());
}

TEST(LeastWitness, GroundedChainNeedsAllThreeAncestors) {
  Adf adf = load_adf("chain4.adf");
  Interpretation g = grounded(adf);
  Witness a = least_witness(adf, g, "a");
  EXPECT_TRUE(a.ancestors.empty());
  EXPECT_EQ(a.max_level, 1u);
  Witness b = least_witness(adf, g, "b");
  EXPECT_EQ(b.ancestors, (std::vector<std::string>{"a", "c", "d"}));
  EXPECT_EQ(b.max_level, 3u);
}

TEST(LeastWitness, UnwitnessableArgumentThrows) {
  Adf adf = load_adf("self_support.adf");
  EXPECT_THROW(least_witness(adf, interp(adf, "a=f,b=t"), "b"),
               NoWitnessError);
  EXPECT_THROW(least_witness(adf, interp(adf, "a=f,b=t"), "a"),
               NoWitnessError);
}

TEST(LeastWitness, UndecidedArgumentRejected) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_THROW(least_witness(adf, interp(adf, "c=f,d=f"), "a"), DomainError);
}

TEST(MaxLevel, RecomputesWitnessDepth) {
  Adf adf = load_adf("chain4.adf");
  Interpretation g = grounded(adf);
  Witness b = least_witness(adf, g, "b");
  EXPECT_EQ(max_level(adf, g, b), 3u);
  Witness a = least_witness(adf, g, "a");
  EXPECT_EQ(max_level(adf, g, a), 1u);
}

TEST(MaxLevel, TamperedWitnessDoesNotReplay) {
  Adf adf = load_adf("chain4.adf");
  Interpretation v = interp(adf, "c=f,d=f");
  Witness w = least_witness(adf, v, "c");
  w.ancestors.clear();
  EXPECT_THROW(max_level(adf, v, w), DomainError);
}

TEST(GammaSequence, Chain4ClimbsToGrounded) {
  Adf adf = load_adf("chain4.adf");
  std::vector<Interpretation> seq = gamma_sequence(adf);
  EXPECT_EQ(seq, parse_all(adf, {"", "a=t,d=f", "a=t,c=f,d=f",
                                 "a=t,b=t,c=f,d=f"}));
  for (const Interpretation& v : seq)
    EXPECT_TRUE(is_strongly_admissible(adf, v)) << v.literal();
}

TEST(GammaSequence, FixpointAtTrivialGivesSingletonSequence) {
  Adf loop = load_adf("self_support.adf");
  EXPECT_EQ(gamma_sequence(loop),
            (std::vector<Interpretation>{loop.trivial()}));
  Adf empty = Adf::load("");
  EXPECT_EQ(gamma_sequence(empty),
            (std::vector<Interpretation>{empty.trivial()}));
}

TEST(LeastBoundingIndex, Examples) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_EQ(least_bounding_index(adf, adf.trivial()), 0u);
  EXPECT_EQ(least_bounding_index(adf, interp(adf, "c=f,d=f")), 2u);
  EXPECT_EQ(least_bounding_index(adf, interp(adf, "a=t")), 1u);
  EXPECT_EQ(least_bounding_index(adf, grounded(adf)), 3u);
}

TEST(LeastBoundingIndex, RejectsNonStronglyAdmissibleOperand) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_THROW(least_bounding_index(adf, interp(adf, "b=t")), DomainError);
}

TEST(EnumerateStronglyAdmissible, Chain4HasSevenInterpretations) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_EQ(enumerate_strongly_admissible(adf),
            parse_all(adf, {"", "a=t", "d=f", "a=t,d=f", "c=f,d=f",
                            "a=t,c=f,d=f", "a=t,b=t,c=f,d=f"}));
}

TEST(EnumerateStronglyAdmissible, SelfSupportOnlyTrivial) {
  Adf loop = load_adf("self_support.adf");
  EXPECT_EQ(enumerate_strongly_admissible(loop),
            (std::vector<Interpretation>{loop.trivial()}));
}

TEST(EnumerateStronglyAdmissible, RedundantLinkDecidesTautologyOnly) {
  Adf adf = load_adf("redundant_link.adf");
  EXPECT_EQ(enumerate_strongly_admissible(adf), parse_all(adf, {"", "a=t"}));
}

TEST(MaxSadmBelow, JoinsEveryDominatedInterpretation) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_EQ(max_sadm_below(adf, interp(adf, "a=t,b=f,c=f,d=f")),
            interp(adf, "a=t,c=f,d=f"));
  EXPECT_EQ(max_sadm_below(adf, adf.trivial()), adf.trivial());
  EXPECT_EQ(max_sadm_below(adf, grounded(adf)), grounded(adf));
  EXPECT_EQ(max_sadm_below(adf, interp(adf, "b=t")), adf.trivial());
}

TEST(Supremum, JoinsWithinTheStronglyAdmissibleSet) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_EQ(supremum(adf, interp(adf, "a=t"), interp(adf, "d=f")),
            interp(adf, "a=t,d=f"));
  EXPECT_EQ(supremum(adf, interp(adf, "a=t,d=f"), interp(adf, "c=f,d=f")),
            interp(adf, "a=t,c=f,d=f"));
  EXPECT_EQ(supremum(adf, adf.trivial(), grounded(adf)), grounded(adf));
}

TEST(Supremum, RejectsNonStronglyAdmissibleOperand) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_THROW(supremum(adf, interp(adf, "b=t"), adf.trivial()), DomainError);
}

TEST(Infimum, GreatestStronglyAdmissibleLowerBound) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_EQ(infimum(adf, interp(adf, "a=t,d=f"), interp(adf, "c=f,d=f")),
            interp(adf, "d=f"));
  EXPECT_EQ(infimum(adf, interp(adf, "a=t"), interp(adf, "d=f")),
            adf.trivial());
  EXPECT_EQ(infimum(adf, grounded(adf), grounded(adf)), grounded(adf));
  EXPECT_THROW(infimum(adf, interp(adf, "b=t"), adf.trivial()), DomainError);
}

TEST(WitnessMembers, EveryAncestorIsItselfJustified) {
  Adf adf = load_adf("chain4.adf");
  Interpretation g = grounded(adf);
  EXPECT_TRUE(witness_members_strong(adf, g, least_witness(adf, g, "b")));
  EXPECT_TRUE(witness_members_strong(adf, g, least_witness(adf, g, "a")));
  Interpretation v = interp(adf, "c=f,d=f");
  EXPECT_TRUE(witness_members_strong(adf, v, least_witness(adf, v, "c")));
}

TEST(Lattice, Chain4HasseDiagram) {
  Adf adf = load_adf("chain4.adf");
  SadmLattice lattice = build_lattice(adf);
  ASSERT_EQ(lattice.nodes.size(), 7u);
  EXPECT_EQ(lattice.bottom, 0u);
  EXPECT_EQ(lattice.top, 6u);
  EXPECT_TRUE(lattice.nodes[lattice.bottom].is_trivial());
  EXPECT_EQ(lattice.nodes[lattice.top], grounded(adf));
  std::vector<std::pair<std::size_t, std::size_t>> expected{
      {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}};
  EXPECT_EQ(lattice.cover_edges, expected);
}

TEST(Lattice, DegenerateFrameworksCollapseToOneNode) {
  Adf loop = load_adf("self_support.adf");
  SadmLattice single = build_lattice(loop);
  EXPECT_EQ(single.nodes.size(), 1u);
  EXPECT_TRUE(single.cover_edges.empty());
  EXPECT_EQ(single.bottom, single.top);
  SadmLattice empty = build_lattice(Adf::load(""));
  EXPECT_EQ(empty.nodes.size(), 1u);
}

TEST(Lattice, JsonRendering) {
  Adf adf = load_adf("chain4.adf");
  EXPECT_EQ(
      lattice_json(build_lattice(adf)),
      "{\"nodes\":[{\"a\":\"u\",\"b\":\"u\",\"c\":\"u\",\"d\":\"u\"},"
      "{\"a\":\"t\",\"b\":\"u\",\"c\":\"u\",\"d\":\"u\"},"
      "{\"a\":\"u\",\"b\":\"u\",\"c\":\"u\",\"d\":\"f\"},"
      "{\"a\":\"t\",\"b\":\"u\",\"c\":\"u\",\"d\":\"f\"},"
      "{\"a\":\"u\",\"b\":\"u\",\"c\":\"f\",\"d\":\"f\"},"
      "{\"a\":\"t\",\"b\":\"u\",\"c\":\"f\",\"d\":\"f\"},"
      "{\"a\":\"t\",\"b\":\"t\",\"c\":\"f\",\"d\":\"f\"}],"
      "\"cover_edges\":[[0,1],[0,2],[1,3],[2,3],[2,4],[3,5],[4,5],[5,6]],"
      "\"bottom\":0,\"top\":6}");
}

TEST(Lattice, DotRendering) {
  Adf adf = load_adf("chain4.adf");
  std::string dot = lattice_dot(build_lattice(adf));
  EXPECT_EQ(dot.rfind("digraph sadm_lattice {", 0), 0u);
  EXPECT_NE(dot.find("rankdir=BT;"), std::string::npos);
  EXPECT_NE(dot.find("n0 [label=\"{}\"];"), std::string::npos);
  EXPECT_NE(dot.find("n5 -> n6;"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -> "); pos != std::string::npos;
       pos = dot.find(" -> ", pos + 1))
    ++edges;
  EXPECT_EQ(edges, 8u);
}

TEST(ExclusionScope, SharedAncestorReusableAcrossBranches) {
  Adf adf = Adf::load("x: p & q\np: r\nq: r\nr: T\n");
  Interpretation v = interp(adf, "p=t,q=t,r=t,x=t");
  EXPECT_TRUE(is_strongly_admissible(adf, v));
  Witness w = least_witness(adf, v, "x");
  EXPECT_EQ(w.ancestors, (std::vector<std::string>{"p", "q", "r"}));
  EXPECT_EQ(w.max_level, 3u);
}

TEST(WitnessProperty, StepsRespectAncestryAndLevels) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Adf adf = make_sample(seed).adf;
    for (const Interpretation& v : enumerate_strongly_admissible(adf)) {
      for (std::size_t i = 0; i < adf.size(); ++i) {
        if (!decided(v.value(i))) continue;
        Witness w = least_witness(adf, v, adf.name(i));
        for (const std::string& member : w.ancestors) {
          std::size_t m = adf.universe()->require(member);
          EXPECT_TRUE(decided(v.value(m))) << "seed " << seed;
        }
        std::set<std::string> ancestors(w.ancestors.begin(),
                                        w.ancestors.end());
        std::size_t deepest = 0;
        for (const WitnessStep& step : w.steps) {
          deepest = std::max(deepest, step.level);
          EXPECT_LE(step.level, adf.size());
          EXPECT_TRUE(std::binary_search(step.excluded.begin(),
                                         step.excluded.end(), step.argument));
          std::size_t arg = adf.universe()->require(step.argument);
          for (const std::string& parent : step.chosen_parents) {
            std::size_t p = adf.universe()->require(parent);
            const std::vector<std::size_t>& par = adf.parents(arg);
            EXPECT_TRUE(std::find(par.begin(), par.end(), p) != par.end());
            EXPECT_TRUE(step.argument == w.target ||
                        ancestors.count(step.argument) > 0);
            EXPECT_EQ(ancestors.count(parent), 1u);
            EXPECT_FALSE(std::binary_search(step.excluded.begin(),
                                            step.excluded.end(), parent));
          }
        }
        EXPECT_EQ(w.max_level, deepest) << "seed " << seed;
        EXPECT_EQ(max_level(adf, v, w), w.max_level) << "seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace sadf
