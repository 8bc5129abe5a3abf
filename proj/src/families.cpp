#include "nsgreedy/families.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <thread>

namespace nsgreedy {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidParameter, what);
}

SurveyRecord classify(const std::array<Int, 3>& triple) {
  auto table = SemigroupTable::build(GeneratorSet::from_values(triple));
  const GreedyReport full = decide_greedy(table);
  const GreedyReport fast = three_gen_scan(table);
  if (full.verdict != fast.verdict || full.witness != fast.witness) {
    throw Error(ErrorCode::Internal, "witness scan and multiple scan disagree on " +
                                         table.generators().to_string());
  }
  SurveyRecord record{table.generators(), table.frobenius(), *full.range,
                      full.verdict, std::nullopt, std::nullopt, std::nullopt};
  if (full.counterexample_detail) {
    record.witness = full.witness;
    record.greedy_cost_at_witness = full.counterexample_detail->greedy.cost;
    record.min_cost_at_witness = full.counterexample_detail->minimal.cost;
  }
  return record;
}

}  // namespace

GeneratorSet consecutive_triple(Int n) {
  if (n < 2) invalid("consecutive triple needs n >= 2, got " + std::to_string(n));
  return GeneratorSet::from_values({n, checked_add(n, 1), checked_add(n, 2)});
}

Int frobenius_consecutive_formula(Int n) {
  if (n < 2) invalid("consecutive triple needs n >= 2, got " + std::to_string(n));
  return checked_mul(n / 2, n) - 1;
}

GeneratorSet lower_tight_family(Int j) {
  if (j < 7 || j % 2 == 0) {
    invalid("lower tight family needs odd j >= 7, got " + std::to_string(j));
  }
  return GeneratorSet::from_values({2, j, checked_mul(2, j) - 4});
}

GeneratorSet upper_tight_family(Int j) {
  if (j < 6 || j % 2 != 0) {
    invalid("upper tight family needs even j >= 6, got " + std::to_string(j));
  }
  return GeneratorSet::from_values({2, j, checked_add(j, 1)});
}

std::vector<SurveyRecord> survey_triples(Int min_gen, Int max_gen) {
  if (min_gen < 2 || min_gen >= max_gen) {
    invalid("survey bounds need 2 <= min < max, got [" + std::to_string(min_gen) +
            ", " + std::to_string(max_gen) + "]");
  }
  std::vector<std::array<Int, 3>> triples;
  for (Int a = min_gen; a <= max_gen; ++a) {
    for (Int b = a + 1; b <= max_gen; ++b) {
      for (Int c = b + 1; c <= max_gen; ++c) {
        if (std::gcd(std::gcd(a, b), c) == 1) triples.push_back({a, b, c});
      }
    }
  }

  // Workers take a strided share of the triples and write into their own
  // slots, so the output order does not depend on scheduling.
  std::vector<std::optional<SurveyRecord>> slots(triples.size());
  std::vector<std::exception_ptr> failures;
  const std::size_t workers = std::clamp<std::size_t>(
      std::thread::hardware_concurrency(), 1, std::max<std::size_t>(triples.size(), 1));
  failures.resize(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < triples.size(); i += workers) {
            slots[i] = classify(triples[i]);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<SurveyRecord> out;
  out.reserve(slots.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace nsgreedy
