#include "terw/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "terw/error.hpp"

namespace terw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::OrderTooSmall: return "OrderTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::IdentityAutomorphism: return "IdentityAutomorphism";
    case ErrorKind::NonDiagonalAutomorphism: return "NonDiagonalAutomorphism";
    case ErrorKind::YNotFixed: return "YNotFixed";
    case ErrorKind::BadG2Params: return "BadG2Params";
    case ErrorKind::BadDicyclicY: return "BadDicyclicY";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::MixedRootOrders: return "MixedRootOrders";
    case ErrorKind::OrthogonalityFailure: return "OrthogonalityFailure";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorKind::IdempotencyFailure: return "IdempotencyFailure";
    case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

namespace {

int mod(std::int64_t x, int m) {
  auto r = static_cast<int>(x % m);
  return r < 0 ? r + m : r;
}

void check_member(const AbelianGroup& A, const AbElem& x) {
  if (x.t.size() != A.rank())
    throw Error(ErrorKind::DimensionMismatch,
                "element has " + std::to_string(x.t.size()) + " coordinates, group has " +
                    std::to_string(A.rank()) + " factors");
}

}  // namespace

bool is_prime(std::int64_t p) noexcept {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

std::vector<std::pair<int, int>> factorize(std::int64_t n) {
  std::vector<std::pair<int, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(static_cast<int>(p), e);
  }
  if (n > 1) out.emplace_back(static_cast<int>(n), 1);
  return out;
}

AbelianGroup make_abelian(const std::vector<std::pair<int, int>>& factor_list) {
  AbelianGroup A;
  for (auto [p, e] : factor_list) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (e < 1)
      throw Error(ErrorKind::InvalidSpec, "exponent must be >= 1, got " + std::to_string(e));
    int m = 1;
    for (int k = 0; k < e; ++k) {
      if (m > (1 << 24) / p) throw Error(ErrorKind::InvalidSpec, "cyclic factor too large");
      m *= p;
    }
    A.factors_.push_back({p, e, m});
  }
  std::stable_partition(A.factors_.begin(), A.factors_.end(),
                        [](const CyclicFactor& c) { return c.p == 2; });
  A.order_ = 1;
  for (const auto& c : A.factors_) {
    A.order_ *= c.m;
    if (A.order_ > (std::int64_t{1} << 30)) throw Error(ErrorKind::InvalidSpec, "group too large");
    (c.p == 2 ? A.lambda_ : A.mu_) += 1;
  }
  if (A.order_ < 3)
    throw Error(ErrorKind::OrderTooSmall,
                "|A| = " + std::to_string(A.order_) + " but order >= 3 is required");
  return A;
}

std::size_t AbelianGroup::index_of(const AbElem& x) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    idx = idx * static_cast<std::size_t>(factors_[i].m) + static_cast<std::size_t>(x.t[i]);
  return idx;
}

AbElem AbelianGroup::element_at(std::size_t index) const {
  AbElem x{std::vector<int>(factors_.size(), 0)};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    auto m = static_cast<std::size_t>(factors_[i].m);
    x.t[i] = static_cast<int>(index % m);
    index /= m;
  }
  return x;
}

std::vector<AbElem> AbelianGroup::elements() const {
  std::vector<AbElem> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i) out.push_back(element_at(i));
  return out;
}

bool AbelianGroup::contains(const AbElem& x) const noexcept {
  if (x.t.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (x.t[i] < 0 || x.t[i] >= factors_[i].m) return false;
  return true;
}

std::int64_t AbelianGroup::element_order(const AbElem& x) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int m = factors_[i].m;
    ord = std::lcm(ord, static_cast<std::int64_t>(m / std::gcd(x.t[i], m)));
  }
  return ord;
}

AbElem ab_mul(const AbelianGroup& A, const AbElem& x, const AbElem& y) {
  check_member(A, x);
  check_member(A, y);
  AbElem z{std::vector<int>(A.rank())};
  for (std::size_t i = 0; i < A.rank(); ++i) z.t[i] = mod(x.t[i] + y.t[i], A.modulus(i));
  return z;
}

AbElem ab_inv(const AbelianGroup& A, const AbElem& x) {
  check_member(A, x);
  AbElem z{std::vector<int>(A.rank())};
  for (std::size_t i = 0; i < A.rank(); ++i) z.t[i] = mod(-x.t[i], A.modulus(i));
  return z;
}

AbElem ab_pow(const AbelianGroup& A, const AbElem& x, std::int64_t k) {
  check_member(A, x);
  AbElem z{std::vector<int>(A.rank())};
  for (std::size_t i = 0; i < A.rank(); ++i)
    z.t[i] = mod(static_cast<std::int64_t>(x.t[i]) * mod(k, A.modulus(i)), A.modulus(i));
  return z;
}

Involution make_involution(const AbelianGroup& A, const std::vector<int>& s) {
  if (s.size() != A.rank())
    throw Error(ErrorKind::DimensionMismatch, "s has " + std::to_string(s.size()) +
                                                  " entries, group has " +
                                                  std::to_string(A.rank()) + " factors");
  Involution f{std::vector<int>(s.size())};
  bool identity = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int m = A.modulus(i);
    const int si = mod(s[i], m);
    if (mod(static_cast<std::int64_t>(si) * si, m) != 1 % m)
      throw Error(ErrorKind::NotInvolution, "s_" + std::to_string(i) + " = " +
                                                std::to_string(s[i]) + " has s^2 != 1 mod " +
                                                std::to_string(m));
    if (si != 1 % m) identity = false;
    f.s[i] = si;
  }
  if (identity)
    throw Error(ErrorKind::IdentityAutomorphism, "f fixes A pointwise; the extension is abelian");
  return f;
}

Involution involution_from_matrix(const AbelianGroup& A,
                           const std::vector<std::vector<int>>& matrix) {
  if (matrix.size() != A.rank())
    throw Error(ErrorKind::DimensionMismatch, "automorphism matrix has wrong size");
  std::vector<int> diag(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) {
    if (matrix[i].size() != A.rank())
      throw Error(ErrorKind::DimensionMismatch, "automorphism matrix is not square");
    for (std::size_t j = 0; j < A.rank(); ++j) {
      if (i == j) {
        diag[i] = matrix[i][j];
      } else if (mod(matrix[i][j], A.modulus(i)) != 0) {
        throw Error(ErrorKind::NonDiagonalAutomorphism,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") mixes cyclic factors; only diagonal involutions are supported");
      }
    }
  }
  return make_involution(A, diag);
}

AbElem apply(const AbelianGroup& A, const Involution& f, const AbElem& x) {
  check_member(A, x);
  AbElem z{std::vector<int>(A.rank())};
  for (std::size_t i = 0; i < A.rank(); ++i)
    z.t[i] = mod(static_cast<std::int64_t>(x.t[i]) * f.s[i], A.modulus(i));
  return z;
}

bool FixedData::is_fixed(const AbElem& a) const {
  for (std::size_t i = 0; i < n_vec.size(); ++i)
    if (a.t[i] % n_vec[i] != 0) return false;
  return true;
}

bool FixedData::in_B(const AbElem& a) const {
  for (std::size_t i = 0; i < d_vec.size(); ++i)
    if (a.t[i] % d_vec[i] != 0) return false;
  return true;
}

FixedData fixed_data(const AbelianGroup& A, const Involution& f) {
  FixedData out;
  out.d = 1;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const int m = A.modulus(i);
    // s_i = 1 maps to gcd(0, m) = m
    const int di = std::gcd(mod(f.s[i] - 1, m), m);
    out.d_vec.push_back(di);
    out.n_vec.push_back(m / di);
    out.d *= di;
  }
  return out;
}

std::vector<Involution> diagonal_involutions(const AbelianGroup& A) {
  std::vector<std::vector<int>> roots(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const int m = A.modulus(i);
    for (int s = 0; s < m; ++s)
      if (mod(static_cast<std::int64_t>(s) * s, m) == 1 % m) roots[i].push_back(s);
  }
  std::vector<Involution> out;
  std::vector<std::size_t> pos(A.rank(), 0);
  while (true) {
    Involution f{std::vector<int>(A.rank())};
    for (std::size_t i = 0; i < A.rank(); ++i) f.s[i] = roots[i][pos[i]];
    out.push_back(std::move(f));
    std::size_t i = A.rank();
    while (i > 0) {
      --i;
      if (++pos[i] < roots[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
    if (A.rank() == 0) return out;
  }
}

namespace {

void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(total, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(total - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> abelian_groups_of_order(std::int64_t n) {
  std::vector<std::vector<std::pair<int, int>>> out{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& prefix : out) {
      for (const auto& part : parts) {
        auto g = prefix;
        for (int k : part) g.emplace_back(p, k);
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace terw
