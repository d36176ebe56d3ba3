#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sadf/adf.hpp"
#include "sadf/interpretation.hpp"

namespace sadf {

/// One node of a strong-acceptability derivation: the argument, the parent
/// set P chosen for it, the exclusion set E in force at this visit, and the
/// maximum level of its subderivation.
struct WitnessStep {
  std::string argument;
  std::vector<std::string> chosen_parents;
  std::vector<std::string> excluded;
  std::size_t level = 1;
};

/// Certificate that an argument is strongly acceptable/deniable: the
/// ancestor set S, the derivation steps in preorder, and the maximum level.
struct Witness {
  std::string target;
  Interpretation interpretation;
  std::vector<std::string> ancestors;
  std::size_t max_level = 1;
  std::vector<WitnessStep> steps;
};

/// Core recursive test: some P ⊆ (parents ∩ ancestors) \ excluded, decided
/// in v, makes the condition of `argument` a tautology (v(argument)=t) or
/// unsatisfiable (v(argument)=f) under v restricted to P, with every member
/// of P justified the same way under excluded ∪ {member}. The argument must
/// be decided in v and contained in excluded (callers seed {argument}).
bool strongly_acceptable(const Adf& adf, const Interpretation& v,
                         const std::string& argument,
                         const std::set<std::string>& ancestors,
                         const std::set<std::string>& excluded);

/// Witness-producing variant with the exclusion set seeded to {argument}.
/// Levels are minimized; ties go to smaller then lexicographically earlier
/// parent sets.
std::optional<Witness> strong_witness(const Adf& adf, const Interpretation& v,
                                      const std::string& argument,
                                      const std::set<std::string>& ancestors);

bool is_strongly_admissible(const Adf& adf, const Interpretation& v);

/// Witness with the smallest ancestor set (ties broken lexicographically on
/// the sorted member names). Throws NoWitnessError when no set works.
Witness least_witness(const Adf& adf, const Interpretation& v,
                      const std::string& argument);

/// Recomputes the maximum level of the witness target with respect to the
/// witness's ancestor set; DomainError if the witness does not replay.
std::size_t max_level(const Adf& adf, const Interpretation& v,
                      const Witness& witness);

/// [trivial, gamma(trivial), ...] up to and including the first fixpoint.
std::vector<Interpretation> gamma_sequence(const Adf& adf);

/// Smallest m with w ≤_i gamma_sequence(adf)[m]; w must be strongly
/// admissible.
std::size_t least_bounding_index(const Adf& adf, const Interpretation& w);

std::vector<Interpretation> enumerate_strongly_admissible(
    const Adf& adf, std::size_t cap = kEnumerationCap);

/// Join of every strongly admissible interpretation ≤_i v.
Interpretation max_sadm_below(const Adf& adf, const Interpretation& v);

/// Least upper bound within the strongly admissible set (the join);
/// operands must be strongly admissible.
Interpretation supremum(const Adf& adf, const Interpretation& v,
                        const Interpretation& w);

/// Greatest strongly admissible lower bound: max_sadm_below of the meet.
Interpretation infimum(const Adf& adf, const Interpretation& v,
                       const Interpretation& w);

/// True iff every member of the witness's ancestor set is itself strongly
/// acceptable/deniable from some subset of that set.
bool witness_members_strong(const Adf& adf, const Interpretation& v,
                            const Witness& witness);

/// All strongly admissible interpretations with the Hasse diagram of ≤_i.
struct SadmLattice {
  std::vector<Interpretation> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
  std::size_t bottom = 0;
  std::size_t top = 0;
};

/// Nodes in canonical order, cover edges as (lower, upper) index pairs;
/// validates that every node pair has its supremum and infimum in the node
/// set and that bottom/top are the trivial/grounded interpretations.
SadmLattice build_lattice(const Adf& adf, std::size_t cap = kEnumerationCap);

/// DOT rendering, nodes labelled in set notation, edges bottom-to-top.
std::string lattice_dot(const SadmLattice& lattice);

/// JSON rendering: {"nodes":[{"a":"t",...}],"cover_edges":[[i,j],...],
/// "bottom":i,"top":j}.
std::string lattice_json(const SadmLattice& lattice);

}  // namespace sadf
