#pragma once

// Irreducible characters of D2 with exact values in Q(zeta_M), M = 2 lcm(m_i).
//
// Linear characters are indexed by I = (l_i), 0 <= l_i < d_i, and a sign:
//   a       -> prod zeta_{d_i}^{l_i t_i}
//   a b     -> (+/-) prod zeta_{2 d_i}^{l_i (2 t_i + v_i)}      (y = (v_i))
// Two-dimensional characters are indexed by an orbit {J, J s} of characters
// of A that are non-trivial on B; they are sigma_J(a) + sigma_J(f(a)) on A
// and vanish on A b. The sign choice for b is the principal square root of
// sigma(y); the other root is the sign-2 row.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "terw/conjugacy.hpp"
#include "terw/root_sum.hpp"

namespace terw {

struct LinearLabel {
  std::vector<int> ell;
  int sign = 1;  // 1 or 2

  friend bool operator==(const LinearLabel&, const LinearLabel&) = default;
};

struct TwoDimLabel {
  std::vector<int> k;

  friend bool operator==(const TwoDimLabel&, const TwoDimLabel&) = default;
};

using CharLabel = std::variant<LinearLabel, TwoDimLabel>;

inline int degree(const CharLabel& label) noexcept {
  return std::holds_alternative<LinearLabel>(label) ? 1 : 2;
}

std::string to_string(const CharLabel& label);

/// 2 lcm(m_i): hosts zeta_{m_i} and zeta_{2 d_i}.
std::int64_t root_order(const D2Group& G);

/// 2d linear labels (I in mixed-radix order, sign 1 before sign 2) followed by
/// the (n - d)/2 two-dimensional labels, each the smaller member of {J, J s}.
std::vector<CharLabel> character_labels(const D2Group& G);

/// Character value at an arbitrary group element.
RootSum char_value_at(const D2Group& G, const CharLabel& label, const D2Elem& g);

/// Character value on a class, read off its canonical representative.
RootSum char_value(const D2Group& G, const ClassList& classes, const CharLabel& label,
                   std::size_t class_index);

struct CharacterTable {
  std::int64_t root_order = 1;
  std::int64_t group_order = 0;
  std::vector<CharLabel> labels;
  std::vector<int> degrees;
  std::vector<std::size_t> class_sizes;
  std::vector<RootSum> values;  // row-major, labels x classes

  std::size_t rows() const noexcept { return labels.size(); }
  std::size_t cols() const noexcept { return class_sizes.size(); }
  const RootSum& value(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
  RootSum& value(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
};

CharacterTable character_table(const D2Group& G, const ClassList& classes);

struct OrthogonalityReport {
  double max_row_error = 0;     // first orthogonality
  double max_column_error = 0;  // second orthogonality
};

/// Checks both orthogonality relations within tol. Throws OrthogonalityFailure
/// naming the first offending pair.
OrthogonalityReport verify_orthogonality(const CharacterTable& table, double tol = 1e-9);

}  // namespace terw
