#pragma once

// The extension D2 = <A, b | b^2 = y, b a b^{-1} = f(a)> of an abelian group A
// by an order-two diagonal automorphism f. Elements are kept in the normal
// form a * b^beta with beta in {0, 1}.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "terw/abelian.hpp"

namespace terw {

struct D2Elem {
  AbElem a;
  int beta = 0;

  friend bool operator==(const D2Elem&, const D2Elem&) = default;
};

class D2Group {
 public:
  const AbelianGroup& abelian() const noexcept { return A_; }
  const Involution& involution() const noexcept { return f_; }
  const AbElem& y() const noexcept { return y_; }
  const FixedData& fixed() const noexcept { return fixed_; }

  // n = |A|
  std::int64_t n() const noexcept { return A_.order(); }
  // d = |A'| = [A : B]
  std::int64_t d() const noexcept { return fixed_.d; }
  std::int64_t order() const noexcept { return 2 * A_.order(); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(order()); }

  D2Elem identity() const { return {A_.identity(), 0}; }
  D2Elem b() const { return {A_.identity(), 1}; }

  // A first (in mixed-radix order), then the coset A b.
  std::size_t index_of(const D2Elem& g) const {
    return static_cast<std::size_t>(g.beta) * static_cast<std::size_t>(n()) + A_.index_of(g.a);
  }
  D2Elem element_at(std::size_t index) const {
    const auto nn = static_cast<std::size_t>(n());
    return {A_.element_at(index % nn), static_cast<int>(index / nn)};
  }

 private:
  friend D2Group make_d2(AbelianGroup A, Involution f, AbElem y);

  AbelianGroup A_;
  Involution f_;
  AbElem y_;
  FixedData fixed_;
};

/// Throws YNotFixed when f(y) != y and IdentityAutomorphism when f = id.
D2Group make_d2(AbelianGroup A, Involution f, AbElem y);

/// (a, beta) (a', beta') = (a + f^beta(a') + [beta + beta' = 2] y, beta + beta' mod 2)
D2Elem d2_mul(const D2Group& G, const D2Elem& g, const D2Elem& h);
D2Elem d2_inv(const D2Group& G, const D2Elem& g);

/// Dense multiplication table over element indices; used by the brute-force
/// oracles and the matrix paths.
struct CayleyTable {
  std::size_t size = 0;
  std::vector<std::uint32_t> mul;  // mul[i * size + j] = index(g_i g_j)
  std::vector<std::uint32_t> inv;

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return mul[i * size + j]; }
  // h g h^{-1}
  std::uint32_t conj(std::size_t h, std::size_t g) const { return (*this)((*this)(h, g), inv[h]); }
};

CayleyTable cayley_table(const D2Group& G);

struct DihedralSpec {
  std::vector<std::pair<int, int>> factors;
};

struct DicyclicSpec {
  std::vector<std::pair<int, int>> factors;
  std::vector<int> y;
};

// <a, b | a^n = 1, b^2 = a^t, b a b^{-1} = a^s>
struct G2Spec {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
};

using FamilySpec = std::variant<DihedralSpec, DicyclicSpec, G2Spec>;

/// Builds a named family member. A dicyclic y that is not the unique
/// involution of A is accepted; a note is appended to `warnings` if given.
D2Group make_family(const FamilySpec& spec, std::vector<std::string>* warnings = nullptr);

/// Checks the G2 congruences and returns an explanatory message on failure.
bool g2_params_valid(std::int64_t n, std::int64_t s, std::int64_t t, std::string* why = nullptr);

/// CRT coordinates of a^k in the prime-power factorisation of the cyclic group of order n.
AbElem cyclic_to_crt(const AbelianGroup& A, std::int64_t k);

/// Elements of A of order exactly 2.
std::vector<AbElem> involutions_of(const AbelianGroup& A);

}  // namespace terw
