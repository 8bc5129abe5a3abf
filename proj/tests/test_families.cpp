#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsgreedy/families.hpp"
#include "oracle.hpp"

using namespace nsgreedy;

namespace {

using V = std::vector<Int>;

V elements(const GeneratorSet& s) { return {s.elements().begin(), s.elements().end()}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("consecutive triples") {
  CHECK(elements(consecutive_triple(6)) == V{6, 7, 8});
  CHECK(SemigroupTable::build(consecutive_triple(6)).frobenius() == 17);
  CHECK(elements(consecutive_triple(2)) == V{2, 3, 4});
  CHECK(SemigroupTable::build(consecutive_triple(2)).frobenius() == 1);
  CHECK(SemigroupTable::build(consecutive_triple(9)).frobenius() == 35);
  CHECK(code_of([] { consecutive_triple(1); }) == ErrorCode::InvalidParameter);

  CHECK(frobenius_consecutive_formula(6) == 17);
  CHECK(frobenius_consecutive_formula(3) == 2);
  CHECK(frobenius_consecutive_formula(2) == 1);
  CHECK(code_of([] { frobenius_consecutive_formula(0); }) == ErrorCode::InvalidParameter);

  for (Int n = 2; n <= 200; ++n) {
    CHECK(frobenius_consecutive_formula(n) ==
          oracle::frobenius({n, n + 1, n + 2}));
  }
  for (Int n = 2; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(decide_greedy(SemigroupTable::build(consecutive_triple(n))).is_greedy());
  }
}

TEST_CASE("tight family constructors") {
  CHECK(elements(lower_tight_family(7)) == V{2, 7, 10});
  CHECK(elements(lower_tight_family(9)) == V{2, 9, 14});
  CHECK(code_of([] { lower_tight_family(8); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { lower_tight_family(5); }) == ErrorCode::InvalidParameter);

  CHECK(elements(upper_tight_family(6)) == V{2, 6, 7});
  CHECK(code_of([] { upper_tight_family(7); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { upper_tight_family(4); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("lower tight family hits the bottom of the critical range") {
  for (Int j = 7; j <= 31; j += 2) {
    CAPTURE(j);
    const V gens{2, j, 2 * j - 4};
    const auto t = SemigroupTable::build(lower_tight_family(j));
    CHECK(critical_range(t).lo == 2 * j);
    CHECK(oracle::smallest_counterexample(gens, 3 * j + 10) == 2 * j);
    CHECK(greedy_cost(t, 2 * j) == 3);
    CHECK(min_cost(t, 2 * j) == 2);
  }
}

TEST_CASE("upper tight family hits the top of the critical range") {
  for (Int j = 6; j <= 30; j += 2) {
    CAPTURE(j);
    const V gens{2, j, j + 1};
    const auto t = SemigroupTable::build(upper_tight_family(j));
    CHECK(t.frobenius() == j - 1);
    CHECK(critical_range(t) == CriticalRange{j + 5, 3 * j});
    if (j <= 20) CHECK(oracle::smallest_counterexample(gens, 3 * j + 4) == 3 * j);
    CHECK(smallest_counterexample_bruteforce(t, 3 * j + 4) == 3 * j);
    CHECK(greedy_cost(t, 3 * j) == j / 2 + 1);
    CHECK(min_cost(t, 3 * j) == 3);

    const auto mc = min_cost_window(t, 3 * j);
    for (Int k = 2 * j + 1; k <= 3 * j - 1; ++k) {
      CAPTURE(k);
      Int expected;
      if (k == 2 * j + 1 || k == 2 * j + 2) {
        expected = 2;
      } else if (k % 2 == 1) {
        expected = (k - 2 * j - 1) / 2 + 2;
      } else {
        expected = (k - 2 * j - 2) / 2 + 2;
      }
      CHECK(greedy_cost(t, k) == expected);
      CHECK(mc[static_cast<std::size_t>(k)] == expected);
    }
  }
}

TEST_CASE("survey over the small box") {
  const auto records = survey_triples(2, 15);
  CHECK(records.size() == oracle::triples(2, 15).size());
  CHECK(std::is_sorted(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return elements(a.generators) < elements(b.generators);
  }));

  auto find = [&](const V& g) -> const SurveyRecord& {
    for (const auto& r : records) {
      if (elements(r.generators) == g) return r;
    }
    FAIL("missing record");
    return records.front();
  };
  const auto& a = find({3, 7, 10});
  CHECK(a.verdict == Verdict::NotGreedy);
  CHECK(a.witness == 28);
  CHECK(a.greedy_cost_at_witness == 7);
  CHECK(a.min_cost_at_witness == 4);
  CHECK(a.frobenius == 11);
  CHECK(a.range == CriticalRange{15, 28});

  const auto& b = find({3, 7, 11});
  CHECK(b.verdict == Verdict::Greedy);
  CHECK_FALSE(b.witness.has_value());
  CHECK_FALSE(b.greedy_cost_at_witness.has_value());

  CHECK(find({5, 8, 9}).witness == 24);

  for (const auto& r : records) {
    CHECK(r.witness.has_value() == (r.verdict == Verdict::NotGreedy));
    if (r.witness) CHECK(*r.min_cost_at_witness < *r.greedy_cost_at_witness);
  }
}

TEST_CASE("survey records match the brute-force oracle") {
  const auto records = survey_triples(2, 4);
  REQUIRE(records.size() == 1);
  CHECK(elements(records[0].generators) == V{2, 3, 4});
  for (const auto& r : survey_triples(2, 9)) {
    const V g = elements(r.generators);
    CAPTURE(g);
    CHECK(r.witness == oracle::smallest_counterexample(g, r.range.hi + 2 * g.back()));
  }
  CHECK(survey_triples(2, 3).empty());
  CHECK(code_of([] { survey_triples(1, 5); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { survey_triples(5, 5); }) == ErrorCode::InvalidParameter);
}
