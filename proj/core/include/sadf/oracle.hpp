#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sadf/adf.hpp"
#include "sadf/interpretation.hpp"

namespace sadf {

/// Bottom-up closure: starting from the empty set, repeatedly add decided
/// arguments whose condition classifies to their assigned value under the
/// restriction to the arguments collected so far. True iff the closure
/// reaches every decided argument. Conjectured equivalent to the recursive
/// strong-acceptability test; divergences are findings, not failures.
bool iterative_justification(const Adf& adf, const Interpretation& v);

inline constexpr std::size_t kBruteForceCap = 6;

/// Assumption-free reference decision: for every decided argument, searches
/// all ancestor subsets of the decided arguments and, inside the recursion,
/// all parent subsets (including undecided parents, which then fail the
/// recursive clause). Memoized on (argument, exclusion set) per ancestor
/// set.
bool brute_force_sadm(const Adf& adf, const Interpretation& v,
                      std::size_t cap = kBruteForceCap);

struct AdfSample {
  std::uint64_t seed = 0;
  Adf adf;
};

/// Deterministic random instance: up to max_args single-letter arguments,
/// conditions drawn from {atom, T, F, !, &, |} with depth ≤ max_depth.
AdfSample make_sample(std::uint64_t seed, std::size_t max_args = 5,
                      std::size_t max_depth = 3);

struct Discrepancy {
  std::uint64_t sample_seed = 0;
  std::string interpretation;
  std::string operation;
  std::string main_result;
  std::string oracle_result;
};

struct CrossValidation {
  std::size_t samples = 0;
  /// Definitional disagreements and violated lattice/ordering properties.
  std::vector<Discrepancy> hard;
  /// Divergences of the conjectured bottom-up characterization.
  std::vector<Discrepancy> findings;
};

/// Differential sweep: generates `count` samples from `seed`, compares the
/// main decision procedure against brute_force_sadm on every interpretation
/// of every sample, cross-checks iterative_justification, and verifies the
/// ordering, join, bounding, witness and lattice properties. Deterministic
/// per (seed, count).
CrossValidation cross_validate(std::uint64_t seed, std::size_t count);

}  // namespace sadf
