#pragma once

#include <optional>
#include <string_view>

#include "nsgreedy/representation.hpp"
#include "nsgreedy/semigroup.hpp"

namespace nsgreedy {

/// Closed interval that must contain the smallest counterexample to greedy
/// optimality, if any exists. Empty when lo > hi.
struct CriticalRange {
  Int lo = 0;
  Int hi = -1;

  bool empty() const noexcept { return lo > hi; }
  Int size() const noexcept { return empty() ? 0 : hi - lo + 1; }

  friend bool operator==(const CriticalRange&, const CriticalRange&) = default;
};

enum class Verdict { Greedy, NotGreedy };

enum class Method {
  TwoGeneratorTheorem,
  UnitCoinWitnessScan,
  WitnessScan,
  ThreeGenMultipleScan,
};

std::string_view to_string(Verdict verdict) noexcept;
std::string_view to_string(Method method) noexcept;

/// Greedy and minimal representations of the same value.
struct CounterexampleDetail {
  RepresentationVector greedy;
  RepresentationVector minimal;
};

struct GreedyReport {
  Verdict verdict = Verdict::Greedy;
  /// Smallest witness; for a NotGreedy verdict this is also the smallest
  /// counterexample.
  std::optional<Int> witness;
  /// Smallest generator s_i with GC(witness) > GC(witness - s_i) + 1.
  std::optional<Int> witness_generator;
  std::optional<CounterexampleDetail> counterexample_detail;
  std::optional<CriticalRange> range;
  Method method = Method::WitnessScan;

  bool is_greedy() const noexcept { return verdict == Verdict::Greedy; }
};

/// [s_3 + s_1 + 2, F + s_t + s_{t-1}] for s_1 > 1. With a unit coin the lower
/// end is s_3 + 2 instead, the classical bound for coin systems containing 1.
/// Throws TooFewGenerators for t < 3.
CriticalRange critical_range(const SemigroupTable& table);

/// The smallest generator s_i < k with k - s_i a member and
/// GC(k) > GC(k - s_i) + 1, or std::nullopt when k is not a witness.
/// Throws NotRepresentable unless k is a positive member.
std::optional<Int> is_witness(const SemigroupTable& table, Int k);

/// Witness scan over the critical range, memoizing greedy costs over
/// [0, range.hi]. Two-generator sets are greedy without a scan.
GreedyReport decide_greedy(const SemigroupTable& table);

/// The least member k <= hi whose minimal cost beats its greedy cost, found
/// by comparing the knapsack table against a literal greedy run per member.
std::optional<Int> smallest_counterexample_bruteforce(const SemigroupTable& table,
                                                      Int hi);

/// Three-generator check that only visits multiples j*s_2 of the middle
/// generator inside the critical range and flags the first with GC > j.
/// Throws TooFewGenerators / TooManyGenerators unless t = 3.
GreedyReport three_gen_scan(const SemigroupTable& table);

}  // namespace nsgreedy
