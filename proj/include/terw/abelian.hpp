#pragma once

// Finite abelian groups written as products of prime-power cyclic groups,
// together with diagonal automorphisms of order two.
//
// An element is an exponent vector t with 0 <= t_i < m_i. Elements are
// enumerated in mixed-radix order with the last coordinate running fastest,
// which coincides with lexicographic order on the exponent vectors.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace terw {

struct CyclicFactor {
  int p = 2;  // prime
  int e = 1;  // exponent
  int m = 2;  // modulus p^e

  friend bool operator==(const CyclicFactor&, const CyclicFactor&) = default;
};

struct AbElem {
  std::vector<int> t;

  friend bool operator==(const AbElem&, const AbElem&) = default;
  friend auto operator<=>(const AbElem&, const AbElem&) = default;
};

class AbelianGroup {
 public:
  AbelianGroup() = default;

  const std::vector<CyclicFactor>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  int modulus(std::size_t i) const { return factors_[i].m; }
  // number of factors with p = 2
  int lambda() const noexcept { return lambda_; }
  // number of factors with odd p
  int mu() const noexcept { return mu_; }
  std::int64_t order() const noexcept { return order_; }

  AbElem identity() const { return AbElem{std::vector<int>(factors_.size(), 0)}; }

  // Position of x in mixed-radix enumeration order.
  std::size_t index_of(const AbElem& x) const;
  AbElem element_at(std::size_t index) const;
  std::vector<AbElem> elements() const;

  bool contains(const AbElem& x) const noexcept;
  // Order of x as a group element.
  std::int64_t element_order(const AbElem& x) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  friend AbelianGroup make_abelian(const std::vector<std::pair<int, int>>& factor_list);

  std::vector<CyclicFactor> factors_;
  int lambda_ = 0;
  int mu_ = 0;
  std::int64_t order_ = 1;
};

/// Builds A from (p, e) pairs. Factors with p = 2 are moved to the front;
/// relative order is otherwise preserved. Throws NonPrime or OrderTooSmall.
AbelianGroup make_abelian(const std::vector<std::pair<int, int>>& factor_list);

AbElem ab_mul(const AbelianGroup& A, const AbElem& x, const AbElem& y);
AbElem ab_inv(const AbelianGroup& A, const AbElem& x);
// x^k, written additively as k*x.
AbElem ab_pow(const AbelianGroup& A, const AbElem& x, std::int64_t k);

/// Diagonal automorphism a_i -> a_i^{s_i} with s_i^2 = 1 (mod m_i).
struct Involution {
  std::vector<int> s;

  friend bool operator==(const Involution&, const Involution&) = default;
};

/// Validates s as a non-identity order-2 diagonal automorphism of A.
/// Throws DimensionMismatch, NotInvolution or IdentityAutomorphism.
Involution make_involution(const AbelianGroup& A, const std::vector<int>& s);

/// Accepts an automorphism as an integer matrix M with f(a_j) = prod_i a_i^{M(i,j)}.
/// Any off-diagonal entry that is nonzero modulo the target modulus raises
/// NonDiagonalAutomorphism; otherwise the diagonal is validated as above.
Involution involution_from_matrix(const AbelianGroup& A, const std::vector<std::vector<int>>& matrix);

AbElem apply(const AbelianGroup& A, const Involution& f, const AbElem& x);

/// d_i = gcd(s_i - 1, m_i), n_i = m_i / d_i and d = prod d_i.
/// A' (the fixed points of f) is {t : n_i | t_i} and has order d;
/// B = {f(x) x^{-1}} is {t : d_i | t_i} and has order n / d.
struct FixedData {
  std::vector<int> d_vec;
  std::vector<int> n_vec;
  std::int64_t d = 1;

  bool is_fixed(const AbElem& a) const;
  bool in_B(const AbElem& a) const;

  friend bool operator==(const FixedData&, const FixedData&) = default;
};

FixedData fixed_data(const AbelianGroup& A, const Involution& f);

/// All exponent vectors s with s_i^2 = 1 (mod m_i), including the identity.
std::vector<Involution> diagonal_involutions(const AbelianGroup& A);

/// Every abelian group of order n up to isomorphism, as (p, e) lists.
std::vector<std::vector<std::pair<int, int>>> abelian_groups_of_order(std::int64_t n);

/// Prime-power factorisation of n, ascending by prime.
std::vector<std::pair<int, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t p) noexcept;

}  // namespace terw
