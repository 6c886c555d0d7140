#include "rampsi/bernoulli.hpp"

#include "rampsi/errors.hpp"

#include <string>

namespace rampsi {

BernoulliTable::BernoulliTable(int max_index) {
  if (max_index < 0 || max_index % 2 != 0) {
    throw DomainError("bernoulli table: max_index must be even and >= 0, got " +
                      std::to_string(max_index));
  }
  const auto size = static_cast<std::size_t>(max_index) + 1;
  values_.reserve(size);
  values_.emplace_back(1);

  // binom holds row n+1 of Pascal's triangle while B_n is being solved for.
  std::vector<BigInt> binom{1, 1};
  for (int n = 1; n <= max_index; ++n) {
    std::vector<BigInt> next(binom.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = binom[k - 1] + binom[k];
    binom = std::move(next);

    if (n >= 3 && n % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    BigRational acc;
    for (int k = 0; k < n; ++k) {
      if (values_[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += BigRational(binom[static_cast<std::size_t>(k)], 1) * values_[static_cast<std::size_t>(k)];
    }
    values_.push_back(-acc / BigRational(n + 1));
  }

  doubles_.reserve(size);
  for (const auto& v : values_) doubles_.push_back(v.to_double());
}

const BigRational& BernoulliTable::at(int index) const {
  if (index < 0 || index > max_index()) {
    throw DomainError("bernoulli table: index " + std::to_string(index) + " outside [0, " +
                      std::to_string(max_index()) + "]");
  }
  return values_[static_cast<std::size_t>(index)];
}

BernoulliTable build_bernoulli_table(int max_index) { return BernoulliTable(max_index); }

BigRational bernoulli_over_factorial(const BernoulliTable& table, int index) {
  const BigRational& b = table.at(index);
  BigInt factorial = 1;
  for (int i = 2; i <= index; ++i) factorial *= i;
  return b / BigRational(factorial, 1);
}

const BernoulliTable& default_bernoulli_table() {
  static const BernoulliTable table(64);
  return table;
}

}  // namespace rampsi
