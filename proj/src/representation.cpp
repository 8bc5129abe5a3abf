#include "nsgreedy/representation.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace nsgreedy {

namespace {

constexpr Int kInfinite = std::numeric_limits<Int>::max();

void require_member(const SemigroupTable& table, Int k) {
  if (!table.contains(k)) {
    throw Error(ErrorCode::NotRepresentable,
                std::to_string(k) + " is not representable; Frobenius = " +
                    std::to_string(table.frobenius()));
  }
}

void require_nonnegative(Int k) {
  if (k < 0) {
    throw Error(ErrorCode::NegativeInput,
                "negative target " + std::to_string(k));
  }
}

// Knapsack table over [0, hi]: minimal coin count and the zero-based index of
// the generator used last (ties go to the larger generator).
struct KnapsackTable {
  std::vector<Int> cost;
  std::vector<std::size_t> last;
};

KnapsackTable knapsack(const GeneratorSet& gens, Int hi) {
  const auto size = static_cast<std::size_t>(checked_add(hi, 1));
  KnapsackTable out{std::vector<Int>(size, kInfinite),
                    std::vector<std::size_t>(size, 0)};
  out.cost[0] = 0;
  for (std::size_t c = 1; c < size; ++c) {
    for (std::size_t i = gens.size(); i-- > 0;) {
      const auto s = static_cast<std::size_t>(gens[i]);
      if (s > c || out.cost[c - s] == kInfinite) continue;
      const Int candidate = out.cost[c - s] + 1;
      if (candidate < out.cost[c]) {
        out.cost[c] = candidate;
        out.last[c] = i;
      }
    }
  }
  return out;
}

}  // namespace

RepresentationVector RepresentationVector::zero(std::size_t size) {
  return RepresentationVector{std::vector<Int>(size, 0), 0, 0};
}

RepresentationVector RepresentationVector::from_coefficients(
    const GeneratorSet& gens, std::vector<Int> coefficients) {
  if (coefficients.size() != gens.size()) {
    throw Error(ErrorCode::InvalidParameter,
                "coefficient count does not match generator count");
  }
  RepresentationVector out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] < 0) {
      throw Error(ErrorCode::InvalidParameter, "negative coefficient");
    }
    out.value = checked_add(out.value, checked_mul(coefficients[i], gens[i]));
    out.cost = checked_add(out.cost, coefficients[i]);
  }
  out.coefficients = std::move(coefficients);
  return out;
}

std::vector<Int> RepresentationVector::reversed() const {
  return {coefficients.rbegin(), coefficients.rend()};
}

std::size_t RepresentationVector::support() const {
  return static_cast<std::size_t>(
      std::count_if(coefficients.begin(), coefficients.end(),
                    [](Int a) { return a != 0; }));
}

RepresentationVector greedy_repr_subtract(const SemigroupTable& table, Int k) {
  require_nonnegative(k);
  require_member(table, k);
  const GeneratorSet& gens = table.generators();
  auto out = RepresentationVector::zero(gens.size());
  out.value = k;
  for (std::size_t i = gens.size(); i-- > 0 && k > 0;) {
    while (k - gens[i] >= 0 && table.contains(k - gens[i])) {
      ++out.coefficients[i];
      ++out.cost;
      k -= gens[i];
      if (k == 0) break;
    }
  }
  return out;
}

std::vector<DivisionStep> greedy_division_trace(const SemigroupTable& table,
                                                Int k) {
  require_nonnegative(k);
  require_member(table, k);
  const GeneratorSet& gens = table.generators();
  std::vector<DivisionStep> steps;
  for (std::size_t i = gens.size(); i-- > 0 && k > 0;) {
    const Int s = gens[i];
    // Valid quotients form a prefix 0..q_max, so the first hit scanning down
    // is the largest.
    // TODO: binary search over the prefix once inputs are large enough to care.
    Int q = k / s;
    while (q > 0 && !table.contains(k - q * s)) --q;
    steps.push_back({i + 1, k, s, q, k - q * s});
    k -= q * s;
  }
  return steps;
}

RepresentationVector greedy_repr_divide(const SemigroupTable& table, Int k) {
  const GeneratorSet& gens = table.generators();
  std::vector<Int> coefficients(gens.size(), 0);
  for (const DivisionStep& step : greedy_division_trace(table, k)) {
    coefficients[step.index - 1] = step.quotient;
  }
  return RepresentationVector::from_coefficients(gens, std::move(coefficients));
}

Int greedy_cost(const SemigroupTable& table, Int k) {
  return greedy_repr_subtract(table, k).cost;
}

CostWindow greedy_cost_window(const SemigroupTable& table, Int hi) {
  require_nonnegative(hi);
  const GeneratorSet& gens = table.generators();
  const auto size = static_cast<std::size_t>(checked_add(hi, 1));
  CostWindow out(size);
  out[0] = 0;
  for (std::size_t k = 1; k < size; ++k) {
    if (!table.contains(static_cast<Int>(k))) continue;
    for (std::size_t i = gens.size(); i-- > 0;) {
      const auto s = static_cast<std::size_t>(gens[i]);
      if (s <= k && out[k - s]) {
        out[k] = *out[k - s] + 1;
        break;
      }
    }
  }
  return out;
}

RepresentationVector min_repr(const SemigroupTable& table, Int k) {
  require_nonnegative(k);
  require_member(table, k);
  const GeneratorSet& gens = table.generators();
  const KnapsackTable dp = knapsack(gens, k);
  std::vector<Int> coefficients(gens.size(), 0);
  for (auto c = static_cast<std::size_t>(k); c > 0;) {
    const std::size_t i = dp.last[c];
    ++coefficients[i];
    c -= static_cast<std::size_t>(gens[i]);
  }
  return RepresentationVector::from_coefficients(gens, std::move(coefficients));
}

Int min_cost(const SemigroupTable& table, Int k) {
  return min_repr(table, k).cost;
}

CostWindow min_cost_window(const SemigroupTable& table, Int hi) {
  require_nonnegative(hi);
  const KnapsackTable dp = knapsack(table.generators(), hi);
  CostWindow out(dp.cost.size());
  for (std::size_t c = 0; c < dp.cost.size(); ++c) {
    if (dp.cost[c] != kInfinite) out[c] = dp.cost[c];
  }
  return out;
}

std::optional<RepresentationVector> naive_greedy(const SemigroupTable& table,
                                                 Int k) {
  require_nonnegative(k);
  const GeneratorSet& gens = table.generators();
  auto out = RepresentationVector::zero(gens.size());
  out.value = k;
  for (std::size_t i = gens.size(); i-- > 0 && k > 0;) {
    out.coefficients[i] = k / gens[i];
    out.cost += out.coefficients[i];
    k %= gens[i];
  }
  if (k != 0) return std::nullopt;
  return out;
}

std::vector<RepresentationVector> enumerate_representations(
    const GeneratorSet& gens, Int k, std::size_t cap) {
  require_nonnegative(k);
  std::vector<RepresentationVector> out;
  std::vector<Int> coefficients(gens.size(), 0);

  // Depth-first from the largest generator; descending coefficient order at
  // each level yields reversed-lex descending output.
  auto visit = [&](auto&& self, std::size_t level, Int remaining) -> void {
    const std::size_t i = level - 1;
    const Int s = gens[i];
    if (i == 0) {
      if (remaining % s != 0) return;
      coefficients[0] = remaining / s;
      if (out.size() == cap) {
        throw Error(ErrorCode::CapExceeded,
                    "more than " + std::to_string(cap) + " representations of " +
                        std::to_string(k));
      }
      out.push_back(RepresentationVector::from_coefficients(gens, coefficients));
      coefficients[0] = 0;
      return;
    }
    for (Int a = remaining / s; a >= 0; --a) {
      coefficients[i] = a;
      self(self, level - 1, remaining - a * s);
    }
    coefficients[i] = 0;
  };
  visit(visit, gens.size(), k);
  return out;
}

}  // namespace nsgreedy
