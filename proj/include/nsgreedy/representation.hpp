#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nsgreedy/semigroup.hpp"

namespace nsgreedy {

/// Nonnegative coefficients a_1..a_t aligned with the GeneratorSet order,
/// together with the represented value and the coin count.
struct RepresentationVector {
  std::vector<Int> coefficients;
  Int value = 0;
  Int cost = 0;

  static RepresentationVector zero(std::size_t size);
  /// Recomputes value and cost with checked arithmetic.
  static RepresentationVector from_coefficients(const GeneratorSet& gens,
                                                std::vector<Int> coefficients);

  /// (a_t, ..., a_1); compare reversed vectors lexicographically to order
  /// representations by preference for large generators.
  std::vector<Int> reversed() const;

  /// Number of nonzero coefficients.
  std::size_t support() const;

  friend bool operator==(const RepresentationVector&,
                         const RepresentationVector&) = default;
};

/// One row of the division-version trace: generator index is one-based.
struct DivisionStep {
  std::size_t index = 0;
  Int target = 0;
  Int generator = 0;
  Int quotient = 0;
  Int remainder = 0;

  friend bool operator==(const DivisionStep&, const DivisionStep&) = default;
};

/// Minimal coin counts over [0, hi]; std::nullopt marks non-members.
using CostWindow = std::vector<std::optional<Int>>;

/// Generalized greedy by repeated subtraction: from the largest generator
/// down, subtract s_i while the remainder stays in the semigroup.
/// Throws NotRepresentable for non-members; k = 0 gives the zero vector.
RepresentationVector greedy_repr_subtract(const SemigroupTable& table, Int k);

/// Generalized greedy by division: a_i is the largest q with k - q*s_i still
/// a member. Same result as greedy_repr_subtract.
RepresentationVector greedy_repr_divide(const SemigroupTable& table, Int k);

/// The per-generator steps greedy_repr_divide takes, stopping once the
/// remainder reaches 0.
std::vector<DivisionStep> greedy_division_trace(const SemigroupTable& table,
                                                Int k);

Int greedy_cost(const SemigroupTable& table, Int k);

/// Greedy costs for every k in [0, hi], memoized through
/// GC(k) = GC(k - s_j) + 1 where s_j is the largest generator keeping k - s_j
/// inside the semigroup. Non-members map to std::nullopt.
CostWindow greedy_cost_window(const SemigroupTable& table, Int hi);

/// A representation of least cost, from an unbounded-knapsack table over
/// [0, k]. Ties prefer the larger generator at each reconstruction step.
RepresentationVector min_repr(const SemigroupTable& table, Int k);

Int min_cost(const SemigroupTable& table, Int k);

CostWindow min_cost_window(const SemigroupTable& table, Int hi);

/// The classical greedy payment (a_i = k div s_i, k = k mod s_i) run verbatim.
/// Returns std::nullopt when the division chain does not end at 0.
std::optional<RepresentationVector> naive_greedy(const SemigroupTable& table,
                                                 Int k);

/// Every representation of k, ordered by reversed vector descending
/// lexicographically. Throws CapExceeded when more than cap exist.
std::vector<RepresentationVector> enumerate_representations(
    const GeneratorSet& gens, Int k, std::size_t cap);

}  // namespace nsgreedy
