#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

namespace terw {

/// Formal integer combination of M-th roots of unity, sum_k c_k zeta_M^k.
/// Exponents are kept reduced mod M and zero coefficients are pruned, so two
/// sums with identical term tables are equal. Sums that vanish only through
/// cyclotomic relations (1 + zeta_3 + zeta_3^2) are not normalised; compare
/// those through eval().
class RootSum {
 public:
  using Terms = std::map<std::int64_t, std::int64_t>;

  RootSum() = default;
  explicit RootSum(std::int64_t order) : order_(order) {}

  static RootSum zero(std::int64_t order) { return RootSum(order); }
  static RootSum constant(std::int64_t order, std::int64_t c);
  /// c * zeta_order^k
  static RootSum zeta(std::int64_t order, std::int64_t k, std::int64_t c = 1);

  std::int64_t order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  RootSum& operator+=(const RootSum& o);
  RootSum& operator-=(const RootSum& o);
  RootSum& operator*=(const RootSum& o);
  RootSum& operator*=(std::int64_t c);

  friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
  friend RootSum operator-(RootSum a, const RootSum& b) { return a -= b; }
  friend RootSum operator*(RootSum a, const RootSum& b) { return a *= b; }
  friend RootSum operator*(RootSum a, std::int64_t c) { return a *= c; }
  friend RootSum operator-(RootSum a) { return a *= -1; }

  friend bool operator==(const RootSum&, const RootSum&) = default;

  RootSum conj() const;
  std::complex<double> eval() const;
  /// Nearest integer when both |re - round(re)| and |im| are below tol.
  std::optional<std::int64_t> to_integer(double tol = 1e-6) const;

 private:
  void add_term(std::int64_t k, std::int64_t c);
  void check_same(const RootSum& o) const;

  std::int64_t order_ = 1;
  Terms terms_;
};

}  // namespace terw
