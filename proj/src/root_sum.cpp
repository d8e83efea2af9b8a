#include "terw/root_sum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "terw/error.hpp"

namespace terw {

RootSum RootSum::constant(std::int64_t order, std::int64_t c) {
  RootSum r(order);
  r.add_term(0, c);
  return r;
}

RootSum RootSum::zeta(std::int64_t order, std::int64_t k, std::int64_t c) {
  RootSum r(order);
  r.add_term(k, c);
  return r;
}

void RootSum::add_term(std::int64_t k, std::int64_t c) {
  if (c == 0) return;
  k %= order_;
  if (k < 0) k += order_;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void RootSum::check_same(const RootSum& o) const {
  if (o.order_ != order_)
    throw Error(ErrorKind::MixedRootOrders,
                "root orders " + std::to_string(order_) + " and " + std::to_string(o.order_));
}

RootSum& RootSum::operator+=(const RootSum& o) {
  check_same(o);
  for (auto [k, c] : o.terms_) add_term(k, c);
  return *this;
}

RootSum& RootSum::operator-=(const RootSum& o) {
  check_same(o);
  for (auto [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

RootSum& RootSum::operator*=(const RootSum& o) {
  check_same(o);
  RootSum out(order_);
  for (auto [k1, c1] : terms_)
    for (auto [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
  return *this = std::move(out);
}

RootSum& RootSum::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

RootSum RootSum::conj() const {
  RootSum out(order_);
  for (auto [k, c] : terms_) out.add_term(-k, c);
  return out;
}

std::complex<double> RootSum::eval() const {
  long double re = 0, im = 0;
  for (auto [k, c] : terms_) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                              static_cast<long double>(order_);
    re += static_cast<long double>(c) * std::cos(angle);
    im += static_cast<long double>(c) * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::optional<std::int64_t> RootSum::to_integer(double tol) const {
  const auto v = eval();
  const double r = std::round(v.real());
  if (std::abs(v.real() - r) < tol && std::abs(v.imag()) < tol) return static_cast<std::int64_t>(r);
  return std::nullopt;
}

}  // namespace terw
