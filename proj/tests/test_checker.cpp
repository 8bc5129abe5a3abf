#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsgreedy/checker.hpp"
#include "oracle.hpp"

using namespace nsgreedy;

namespace {

using V = std::vector<Int>;

SemigroupTable table_of(const V& gens) {
  return SemigroupTable::build(GeneratorSet::from_values(gens));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

// Oracle horizon: well past the critical range.
Int horizon(const SemigroupTable& t) {
  const auto g = t.generators();
  return t.frobenius() + g[g.size() - 1] + g[g.size() - 2] + 2 * g.largest();
}

}  // namespace

TEST_CASE("critical range") {
  CHECK(critical_range(table_of({3, 7, 10})) == CriticalRange{15, 28});
  CHECK(critical_range(table_of({3, 7, 11})) == CriticalRange{16, 26});
  CHECK(critical_range(table_of({2, 6, 7})) == CriticalRange{11, 18});
  CHECK(code_of([] { critical_range(table_of({4, 7})); }) == ErrorCode::TooFewGenerators);
  // Unit coin: [s_3 + 2, s_t + s_{t-1} - 1].
  CHECK(critical_range(table_of({1, 3, 4})) == CriticalRange{6, 6});
  CHECK(critical_range(table_of({1, 5, 10, 25})) == CriticalRange{12, 34});
}

TEST_CASE("witness predicate") {
  CHECK(is_witness(table_of({3, 7, 10}), 28) == 7);
  CHECK_FALSE(is_witness(table_of({3, 7, 10}), 21).has_value());
  const auto t = table_of({3, 7, 11});
  for (Int k = 16; k <= 26; ++k) {
    if (t.contains(k)) CHECK_FALSE(is_witness(t, k).has_value());
  }
  CHECK(code_of([] { is_witness(table_of({3, 7, 10}), 8); }) ==
        ErrorCode::NotRepresentable);
  CHECK(code_of([] { is_witness(table_of({3, 7, 10}), 0); }) ==
        ErrorCode::NotRepresentable);
}

TEST_CASE("decide greedy on the worked examples") {
  const auto a = decide_greedy(table_of({3, 7, 10}));
  CHECK(a.verdict == Verdict::NotGreedy);
  CHECK(a.witness == 28);
  CHECK(a.witness_generator == 7);
  CHECK(a.method == Method::WitnessScan);
  REQUIRE(a.counterexample_detail);
  CHECK(a.counterexample_detail->greedy.coefficients == V{6, 0, 1});
  CHECK(a.counterexample_detail->minimal.coefficients == V{0, 4, 0});
  CHECK(a.range == CriticalRange{15, 28});

  const auto b = decide_greedy(table_of({3, 7, 11}));
  CHECK(b.verdict == Verdict::Greedy);
  CHECK_FALSE(b.witness.has_value());

  const auto c = decide_greedy(table_of({5, 8, 9}));
  CHECK(c.verdict == Verdict::NotGreedy);
  CHECK(c.witness == 24);

  const auto d = decide_greedy(table_of({4, 7}));
  CHECK(d.verdict == Verdict::Greedy);
  CHECK(d.method == Method::TwoGeneratorTheorem);
  CHECK_FALSE(d.range.has_value());

  CHECK(decide_greedy(table_of({1})).method == Method::TwoGeneratorTheorem);

  const auto coins = decide_greedy(table_of({1, 3, 4}));
  CHECK(coins.verdict == Verdict::NotGreedy);
  CHECK(coins.witness == 6);
  CHECK(coins.method == Method::UnitCoinWitnessScan);
  CHECK(decide_greedy(table_of({1, 5, 10, 25})).verdict == Verdict::Greedy);
}

TEST_CASE("brute-force smallest counterexample") {
  CHECK(smallest_counterexample_bruteforce(table_of({3, 7, 10}), 40) == 28);
  CHECK(smallest_counterexample_bruteforce(table_of({2, 7, 10}), 40) == 14);
  CHECK_FALSE(smallest_counterexample_bruteforce(table_of({3, 7, 11}), 26).has_value());
  CHECK_FALSE(smallest_counterexample_bruteforce(table_of({3, 7, 10}), 27).has_value());
}

TEST_CASE("three generator multiple scan") {
  const auto a = three_gen_scan(table_of({3, 7, 10}));
  CHECK(a.verdict == Verdict::NotGreedy);
  CHECK(a.witness == 28);
  CHECK(a.method == Method::ThreeGenMultipleScan);
  CHECK(a.counterexample_detail->greedy.cost == 7);

  const auto b = three_gen_scan(table_of({5, 8, 9}));
  CHECK(b.witness == 24);
  CHECK(b.counterexample_detail->greedy.cost == 4);

  CHECK(three_gen_scan(table_of({3, 7, 11})).verdict == Verdict::Greedy);
  CHECK(code_of([] { three_gen_scan(table_of({4, 7})); }) == ErrorCode::TooFewGenerators);
  CHECK(code_of([] { three_gen_scan(table_of({4, 6, 7, 9})); }) ==
        ErrorCode::TooManyGenerators);
}

TEST_CASE("witness scan, multiple scan and brute force agree on small triples") {
  int not_greedy = 0;
  for (const auto& gens : oracle::triples(2, 15)) {
    CAPTURE(gens);
    const auto t = table_of(gens);
    const auto full = decide_greedy(t);
    const auto fast = three_gen_scan(t);
    const auto brute = smallest_counterexample_bruteforce(t, horizon(t));
    REQUIRE(full.verdict == fast.verdict);
    REQUIRE(full.witness == fast.witness);
    REQUIRE(full.witness == brute);
    if (full.verdict == Verdict::Greedy) {
      for (Int k = full.range->lo; k <= full.range->hi; ++k) {
        if (t.contains(k)) CHECK_FALSE(is_witness(t, k).has_value());
      }
    } else {
      ++not_greedy;
      const auto& detail = *full.counterexample_detail;
      CHECK(detail.minimal.cost < detail.greedy.cost);
      CHECK(greedy_cost(t, *full.witness) >
            greedy_cost(t, *full.witness - *full.witness_generator) + 1);
    }
  }
  CHECK(not_greedy > 0);
}

TEST_CASE("unit coin systems agree with the oracle") {
  std::vector<V> sets;
  for (Int b = 2; b <= 20; ++b)
    for (Int c = b + 1; c <= 24; ++c) sets.push_back({1, b, c});
  for (auto s : oracle::random_sets(150, 3, 2, 30, 31)) {
    s.insert(s.begin(), 1);
    sets.push_back(s);
  }
  for (const auto& gens : sets) {
    CAPTURE(gens);
    const auto t = table_of(gens);
    const auto brute = smallest_counterexample_bruteforce(t, horizon(t));
    CHECK(decide_greedy(t).witness == brute);
    if (gens.size() == 3) CHECK(three_gen_scan(t).witness == brute);
  }
}

TEST_CASE("larger generator sets agree with the oracle") {
  for (const auto& gens : oracle::random_sets(300, 4, 2, 22, 41)) {
    CAPTURE(gens);
    const auto t = table_of(gens);
    const auto brute = smallest_counterexample_bruteforce(t, horizon(t));
    const auto report = decide_greedy(t);
    CHECK(report.witness == brute);
    if (brute) {
      CHECK(*brute >= report.range->lo);
      CHECK(*brute <= report.range->hi);
    }
  }
  for (const auto& gens : oracle::random_sets(100, 5, 2, 20, 42)) {
    CAPTURE(gens);
    const auto t = table_of(gens);
    CHECK(decide_greedy(t).witness == smallest_counterexample_bruteforce(t, horizon(t)));
  }
}

TEST_CASE("witnesses are counterexamples and the least counterexample is a witness") {
  std::vector<V> sets = oracle::triples(2, 12);
  for (auto& s : oracle::random_sets(60, 4, 2, 18, 51)) sets.push_back(s);
  for (const auto& gens : sets) {
    CAPTURE(gens);
    const auto t = table_of(gens);
    const Int hi = horizon(t);
    const auto mc = min_cost_window(t, hi);
    const auto gc = greedy_cost_window(t, hi);
    for (Int k = 1; k <= hi; ++k) {
      if (!gc[static_cast<std::size_t>(k)]) continue;
      if (is_witness(t, k)) CHECK(*mc[static_cast<std::size_t>(k)] < *gc[static_cast<std::size_t>(k)]);
    }
    if (const auto least = smallest_counterexample_bruteforce(t, hi)) {
      CHECK(is_witness(t, *least).has_value());
    }
  }
}

TEST_CASE("least counterexample of a triple is a pure multiple of the middle generator") {
  for (const auto& gens : oracle::triples(2, 15)) {
    const auto t = table_of(gens);
    const auto least = smallest_counterexample_bruteforce(t, horizon(t));
    if (!least) continue;
    CAPTURE(gens);
    const Int k = *least;
    REQUIRE(k % gens[1] == 0);
    const auto best = min_repr(t, k);
    CHECK(best.coefficients == V{0, k / gens[1], 0});
    const auto all = enumerate_representations(t.generators(), k, 1'000'000);
    CHECK(std::any_of(all.begin(), all.end(), [&](const auto& r) {
      return r.coefficients == V{0, k / gens[1], 0} && r.cost == best.cost;
    }));
    CHECK(greedy_repr_subtract(t, k).coefficients[1] == 0);
  }
}

TEST_CASE("testing the largest generator below k never changes the verdict") {
  std::vector<V> sets = oracle::triples(2, 13);
  for (auto& s : oracle::random_sets(80, 4, 2, 20, 61)) sets.push_back(s);
  for (const auto& gens : sets) {
    CAPTURE(gens);
    const auto t = table_of(gens);
    const auto range = critical_range(t);
    std::optional<Int> first;
    for (Int k = range.lo; k <= range.hi && !first; ++k) {
      if (!t.contains(k)) continue;
      // Full check over every generator below k, including the largest.
      const Int gk = greedy_cost(t, k);
      for (Int s : gens) {
        if (s < k && t.contains(k - s) && gk > greedy_cost(t, k - s) + 1) {
          first = k;
          break;
        }
        if (s < k && t.contains(k - s) && s == *std::prev(std::upper_bound(gens.begin(), gens.end(), k))) {
          CHECK(gk == greedy_cost(t, k - s) + 1);
        }
      }
    }
    CHECK(decide_greedy(t).witness == first);
  }
}
