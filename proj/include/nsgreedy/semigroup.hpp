#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nsgreedy/error.hpp"

namespace nsgreedy {

/// A validated generating set: strictly increasing positive integers whose
/// gcd is 1. Construction sorts and deduplicates the input.
class GeneratorSet {
 public:
  /// Throws Error with EmptySet, NonPositiveElement or GcdNotOne.
  static GeneratorSet from_values(std::span<const Int> values);
  static GeneratorSet from_values(std::initializer_list<Int> values) {
    return from_values(std::span<const Int>(values.begin(), values.size()));
  }

  std::span<const Int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Zero-based: operator[](0) is the smallest generator.
  Int operator[](std::size_t i) const { return elements_[i]; }
  Int smallest() const noexcept { return elements_.front(); }
  Int largest() const noexcept { return elements_.back(); }

  /// "{3,7,10}"
  std::string to_string() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  explicit GeneratorSet(std::vector<Int> elements)
      : elements_(std::move(elements)) {}

  std::vector<Int> elements_;
};

/// The numerical semigroup generated by a GeneratorSet, indexed by residues
/// modulo the smallest generator.
///
/// apery_mod_s1()[r] is the least semigroup element congruent to r modulo
/// s_1, so membership of k reduces to k >= apery_mod_s1()[k mod s_1].
/// The table is immutable once built and can be shared across threads.
class SemigroupTable {
 public:
  /// Round-robin shortest-reach relaxation over the residues mod s_1,
  /// O(s_1 * t). Throws Overflow if a residue minimum leaves the Int range.
  static SemigroupTable build(GeneratorSet generators);

  const GeneratorSet& generators() const noexcept { return generators_; }
  std::span<const Int> apery_mod_s1() const noexcept { return apery_; }

  /// Largest integer outside the semigroup; -1 when s_1 = 1.
  Int frobenius() const noexcept { return frobenius_; }

  /// Throws NegativeInput for k < 0.
  bool contains(Int k) const;

  /// Sorted positive non-members. Computed on request from the residue
  /// table, so the cost is proportional to the genus.
  std::vector<Int> gaps() const;

  /// Number of gaps.
  Int genus() const noexcept { return genus_; }

  /// Least member of each residue class modulo n, sorted ascending.
  /// Throws NotAMember unless n is a positive member.
  std::vector<Int> apery_set(Int n) const;

 private:
  SemigroupTable(GeneratorSet generators, std::vector<Int> apery);

  GeneratorSet generators_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
  Int genus_ = 0;
};

inline GeneratorSet new_generator_set(std::span<const Int> values) {
  return GeneratorSet::from_values(values);
}

inline SemigroupTable build_table(GeneratorSet generators) {
  return SemigroupTable::build(std::move(generators));
}

}  // namespace nsgreedy
