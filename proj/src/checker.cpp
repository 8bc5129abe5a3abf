#include "nsgreedy/checker.hpp"

#include <string>

namespace nsgreedy {

namespace {

CounterexampleDetail detail_at(const SemigroupTable& table, Int k) {
  return {greedy_repr_subtract(table, k), min_repr(table, k)};
}

Method scan_method(const SemigroupTable& table) {
  return table.generators().smallest() == 1 ? Method::UnitCoinWitnessScan
                                            : Method::WitnessScan;
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  return verdict == Verdict::Greedy ? "greedy" : "not_greedy";
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::TwoGeneratorTheorem: return "two_generator_theorem";
    case Method::UnitCoinWitnessScan: return "unit_coin_witness_scan";
    case Method::WitnessScan: return "witness_scan";
    case Method::ThreeGenMultipleScan: return "three_gen_multiple_scan";
  }
  return "unknown";
}

CriticalRange critical_range(const SemigroupTable& table) {
  const GeneratorSet& gens = table.generators();
  const std::size_t t = gens.size();
  if (t < 3) {
    throw Error(ErrorCode::TooFewGenerators,
                "critical range needs at least 3 generators, got " +
                    std::to_string(t));
  }
  // With s_1 = 1, k = s_3 + 2 can already be the smallest counterexample
  // ({1,3,4} at 6), so the lower end drops by one.
  const Int slack = gens[0] == 1 ? 1 : 2;
  return {checked_add(checked_add(gens[2], gens[0]), slack),
          checked_add(checked_add(table.frobenius(), gens[t - 1]), gens[t - 2])};
}

std::optional<Int> is_witness(const SemigroupTable& table, Int k) {
  if (k <= 0 || !table.contains(k)) {
    throw Error(ErrorCode::NotRepresentable,
                "witness test needs a positive member, got " + std::to_string(k));
  }
  const Int cost = greedy_cost(table, k);
  for (Int s : table.generators().elements()) {
    if (s >= k) break;
    if (!table.contains(k - s)) continue;
    if (cost > greedy_cost(table, k - s) + 1) return s;
  }
  return std::nullopt;
}

GreedyReport decide_greedy(const SemigroupTable& table) {
  const GeneratorSet& gens = table.generators();
  GreedyReport report;
  if (gens.size() <= 2) {
    report.method = Method::TwoGeneratorTheorem;
    return report;
  }
  report.method = scan_method(table);
  const CriticalRange range = critical_range(table);
  report.range = range;
  if (range.empty()) return report;

  const CostWindow gc = greedy_cost_window(table, range.hi);
  std::size_t below = 0;  // number of generators <= k
  for (Int k = range.lo; k <= range.hi; ++k) {
    while (below < gens.size() && gens[below] <= k) ++below;
    const auto& cost_k = gc[static_cast<std::size_t>(k)];
    if (!cost_k) continue;
    // The largest generator <= k never certifies: greedy subtracts it
    // whenever the remainder is a member, which makes the step an equality.
    for (std::size_t i = 0; i + 1 < below; ++i) {
      const auto& cost_rest = gc[static_cast<std::size_t>(k - gens[i])];
      if (cost_rest && *cost_k > *cost_rest + 1) {
        report.verdict = Verdict::NotGreedy;
        report.witness = k;
        report.witness_generator = gens[i];
        report.counterexample_detail = detail_at(table, k);
        return report;
      }
    }
  }
  return report;
}

std::optional<Int> smallest_counterexample_bruteforce(const SemigroupTable& table,
                                                      Int hi) {
  const CostWindow mc = min_cost_window(table, hi);
  for (Int k = 1; k <= hi; ++k) {
    const auto& best = mc[static_cast<std::size_t>(k)];
    if (best && *best < greedy_repr_subtract(table, k).cost) return k;
  }
  return std::nullopt;
}

GreedyReport three_gen_scan(const SemigroupTable& table) {
  const GeneratorSet& gens = table.generators();
  if (gens.size() < 3) {
    throw Error(ErrorCode::TooFewGenerators, "three_gen_scan needs t = 3");
  }
  if (gens.size() > 3) {
    throw Error(ErrorCode::TooManyGenerators, "three_gen_scan needs t = 3");
  }
  GreedyReport report;
  report.method = Method::ThreeGenMultipleScan;
  const CriticalRange range = critical_range(table);
  report.range = range;
  if (range.empty()) return report;

  const Int middle = gens[1];
  for (Int j = (range.lo + middle - 1) / middle; j * middle <= range.hi; ++j) {
    const Int m = j * middle;
    if (greedy_cost(table, m) <= j) continue;
    // The least such multiple is the smallest counterexample, hence a witness.
    const auto generator = is_witness(table, m);
    if (!generator) {
      throw Error(ErrorCode::Internal,
                  "counterexample " + std::to_string(m) + " of " +
                      gens.to_string() + " is not a witness");
    }
    report.verdict = Verdict::NotGreedy;
    report.witness = m;
    report.witness_generator = generator;
    report.counterexample_detail = detail_at(table, m);
    return report;
  }
  return report;
}

}  // namespace nsgreedy
