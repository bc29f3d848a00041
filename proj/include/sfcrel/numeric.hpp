#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace sfcrel {

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

namespace detail {
// Above this size the multiplicative form could leave the long double range.
inline constexpr int kMultiplicativeLimit = 1000;
}  // namespace detail

/// Binomial pmf C(available, failed) p^(available-failed) (1-p)^failed.
inline double binom_pmf(int available, int failed, double p) {
  if (failed < 0 || failed > available)
    throw std::domain_error("binom_pmf: failed count " + std::to_string(failed) +
                            " outside [0, " + std::to_string(available) + "]");
  if (p == 1.0) return failed == 0 ? 1.0 : 0.0;
  if (p == 0.0) return failed == available ? 1.0 : 0.0;

  const int survivors = available - failed;
  if (available <= detail::kMultiplicativeLimit) {
    const int m = failed < survivors ? failed : survivors;
    long double coeff = 1.0L;
    for (int i = 1; i <= m; ++i)
      coeff = coeff * static_cast<long double>(available - m + i) / static_cast<long double>(i);
    const long double q = 1.0L - static_cast<long double>(p);
    return static_cast<double>(coeff * std::pow(static_cast<long double>(p), survivors) *
                               std::pow(q, failed));
  }
  const long double log_coeff = std::lgamma(static_cast<long double>(available) + 1) -
                                std::lgamma(static_cast<long double>(failed) + 1) -
                                std::lgamma(static_cast<long double>(survivors) + 1);
  return static_cast<double>(std::exp(log_coeff + survivors * std::log(static_cast<long double>(p)) +
                                      failed * std::log1p(-static_cast<long double>(p))));
}

}  // namespace sfcrel
