#include "nsgreedy/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nsgreedy {

namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

std::string join(std::span<const Int> values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

GeneratorSet GeneratorSet::from_values(std::span<const Int> values) {
  if (values.empty()) {
    throw Error(ErrorCode::EmptySet, "generator set is empty");
  }
  for (Int v : values) {
    if (v <= 0) {
      throw Error(ErrorCode::NonPositiveElement,
                  "generator " + std::to_string(v) + " is not positive");
    }
  }
  std::vector<Int> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Int g = 0;
  for (Int v : sorted) g = std::gcd(g, v);
  if (g != 1) {
    throw Error(ErrorCode::GcdNotOne, "gcd(" + join(sorted, ',') + ")=" +
                                          std::to_string(g) + " ≠ 1");
  }
  return GeneratorSet(std::move(sorted));
}

std::string GeneratorSet::to_string() const {
  return "{" + join(elements_, ',') + "}";
}

SemigroupTable SemigroupTable::build(GeneratorSet generators) {
  const Int modulus = generators.smallest();
  const auto n = static_cast<std::size_t>(modulus);
  std::vector<Int> table(n, kUnreached);
  table[0] = 0;

  // Each generator a splits the residues into gcd(a, n) cycles r -> r + a.
  // Starting a pass at the cycle minimum and walking once around is enough
  // to propagate every improvement a can produce.
  for (std::size_t gi = 1; gi < generators.size(); ++gi) {
    const Int a = generators[gi];
    const auto step = static_cast<std::size_t>(a % modulus);
    const auto cycles = static_cast<std::size_t>(std::gcd(a, modulus));
    const std::size_t cycle_len = n / cycles;
    for (std::size_t p = 0; p < cycles; ++p) {
      std::size_t start = p;
      for (std::size_t r = p; r < n; r += cycles) {
        if (table[r] < table[start]) start = r;
      }
      if (table[start] == kUnreached) continue;
      Int running = table[start];
      std::size_t r = start;
      for (std::size_t i = 1; i < cycle_len; ++i) {
        running = checked_add(running, a);
        r = (r + step) % n;
        running = std::min(running, table[r]);
        table[r] = running;
      }
    }
  }
  return SemigroupTable(std::move(generators), std::move(table));
}

SemigroupTable::SemigroupTable(GeneratorSet generators, std::vector<Int> apery)
    : generators_(std::move(generators)), apery_(std::move(apery)) {
  const Int modulus = generators_.smallest();
  Int top = 0;
  for (std::size_t r = 0; r < apery_.size(); ++r) {
    if (apery_[r] == kUnreached) {
      throw Error(ErrorCode::Internal, "residue " + std::to_string(r) +
                                           " unreachable despite gcd 1");
    }
    top = std::max(top, apery_[r]);
    genus_ += (apery_[r] - static_cast<Int>(r)) / modulus;
  }
  frobenius_ = top - modulus;
}

bool SemigroupTable::contains(Int k) const {
  if (k < 0) {
    throw Error(ErrorCode::NegativeInput,
                "membership query for negative " + std::to_string(k));
  }
  return k >= apery_[static_cast<std::size_t>(k % generators_.smallest())];
}

std::vector<Int> SemigroupTable::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  const Int modulus = generators_.smallest();
  for (std::size_t r = 0; r < apery_.size(); ++r) {
    for (Int g = static_cast<Int>(r); g < apery_[r]; g += modulus) {
      if (g > 0) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> SemigroupTable::apery_set(Int n) const {
  if (n <= 0 || !contains(n)) {
    throw Error(ErrorCode::NotAMember,
                std::to_string(n) + " is not a positive member of <" +
                    join(generators_.elements(), ',') + ">");
  }
  // Every element of Ap(S, n) is at most F + n.
  const Int bound = checked_add(frobenius_, n);
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Int m = 0; m <= bound; ++m) {
    if (contains(m) && (m < n || !contains(m - n))) out.push_back(m);
  }
  return out;
}

}  // namespace nsgreedy
