#pragma once

#include "rampsi/big_rational.hpp"

#include <span>
#include <vector>

namespace rampsi {

/// Bernoulli numbers B_0..B_max as exact rationals (convention B_1 = -1/2).
///
/// Built eagerly from the recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 and
/// immutable afterwards, so a single table may be shared across threads.
class BernoulliTable {
 public:
  /// Throws DomainError unless max_index is even and non-negative.
  explicit BernoulliTable(int max_index);

  int max_index() const noexcept { return static_cast<int>(values_.size()) - 1; }

  /// Throws DomainError when index is outside [0, max_index].
  const BigRational& at(int index) const;
  const BigRational& operator[](int index) const { return values_[static_cast<std::size_t>(index)]; }

  std::span<const BigRational> values() const noexcept { return values_; }

  /// B_index rounded to the nearest double.
  double as_double(int index) const { return doubles_.at(static_cast<std::size_t>(index)); }

 private:
  std::vector<BigRational> values_;
  std::vector<double> doubles_;
};

BernoulliTable build_bernoulli_table(int max_index);

/// B_index / index!, exactly.
BigRational bernoulli_over_factorial(const BernoulliTable& table, int index);

/// Shared read-only table covering every index the library needs by default.
const BernoulliTable& default_bernoulli_table();

}  // namespace rampsi
