#pragma once

#include <optional>
#include <vector>

#include "nsgreedy/checker.hpp"
#include "nsgreedy/semigroup.hpp"

namespace nsgreedy {

/// {n, n+1, n+2}; n >= 2.
GeneratorSet consecutive_triple(Int n);

/// floor(n/2) * n - 1, the Frobenius number of <n, n+1, n+2>; n >= 2.
Int frobenius_consecutive_formula(Int n);

/// {2, j, 2j-4} for odd j >= 7. The smallest counterexample sits at the low
/// end of the critical range, k = 2j.
GeneratorSet lower_tight_family(Int j);

/// {2, j, j+1} for even j >= 6. The smallest counterexample sits at the high
/// end of the critical range, k = 3j.
GeneratorSet upper_tight_family(Int j);

struct SurveyRecord {
  GeneratorSet generators;
  Int frobenius = 0;
  CriticalRange range;
  Verdict verdict = Verdict::Greedy;
  std::optional<Int> witness;
  std::optional<Int> greedy_cost_at_witness;
  std::optional<Int> min_cost_at_witness;
};

/// Classifies every gcd-1 triple min_gen <= s_1 < s_2 < s_3 <= max_gen with
/// decide_greedy, cross-checked against three_gen_scan. Records come back in
/// lexicographic generator order. Throws InvalidParameter unless
/// 2 <= min_gen < max_gen, Internal if the two checks disagree.
std::vector<SurveyRecord> survey_triples(Int min_gen, Int max_gen);

}  // namespace nsgreedy
