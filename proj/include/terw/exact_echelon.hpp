#pragma once

// Incremental reduced row echelon form over Q, stored fraction-free.
//
// Every row is a primitive integer vector (content 1) with a positive pivot,
// and each pivot column is zero in every other row. Over Q the reduced echelon
// form is unique, so this integer normalisation is canonical as well.
//
// Scalar is either std::int64_t (every product and sum is overflow-checked and
// raises ArithmeticOverflow) or an arbitrary-precision integer such as
// boost::multiprecision::cpp_int.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

#include "terw/error.hpp"

namespace terw {

namespace detail {

template <typename Scalar>
struct ScalarOps {
  static Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  static Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  static Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  static Scalar gcd(const Scalar& a, const Scalar& b) {
    using std::gcd;
    return gcd(a, b);
  }
  static Scalar abs(const Scalar& a) { return a < 0 ? Scalar(-a) : a; }
};

template <>
struct ScalarOps<std::int64_t> {
  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
      throw Error(ErrorKind::ArithmeticOverflow, "int64 product overflow in elimination");
    return r;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
      throw Error(ErrorKind::ArithmeticOverflow, "int64 difference overflow in elimination");
    return r;
  }
  static std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
      throw Error(ErrorKind::ArithmeticOverflow, "int64 sum overflow in elimination");
    return r;
  }
  static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
  static std::int64_t abs(std::int64_t a) { return a < 0 ? -a : a; }
};

}  // namespace detail

template <typename Scalar = std::int64_t>
class ExactEchelon {
 public:
  using Ops = detail::ScalarOps<Scalar>;
  using Row = std::vector<Scalar>;

  explicit ExactEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Reduces v against the basis in place; v becomes zero iff v is in the span.
  void reduce(Row& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t c = pivots_[r];
      if (v[c] == 0) continue;
      eliminate(v, rows_[r], c);
    }
  }

  bool contains(Row v) const {
    reduce(v);
    return is_zero(v);
  }

  /// Adds v to the span. Returns true if the rank grew; v then holds the new
  /// normalised basis row.
  bool insert(Row& v) {
    if (v.size() != width_)
      throw Error(ErrorKind::DimensionMismatch, "vector width does not match echelon width");
    reduce(v);
    const auto it = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return x != 0; });
    if (it == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    normalise(v, pivot);
    for (auto& row : rows_)
      if (row[pivot] != 0) {
        eliminate(row, v, pivot);
        normalise(row, first_nonzero(row));
      }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), v);
    return true;
  }

  bool insert_copy(Row v) { return insert(v); }

 private:
  static bool is_zero(const Row& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
  }

  static std::size_t first_nonzero(const Row& v) {
    return static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](const Scalar& x) { return x != 0; }) - v.begin());
  }

  // v <- (row[c] v - v[c] row) / g, which clears column c.
  static void eliminate(Row& v, const Row& row, std::size_t c) {
    const Scalar a = row[c];
    const Scalar b = v[c];
    const Scalar g = Ops::gcd(Ops::abs(a), Ops::abs(b));
    const Scalar fa = a / g;
    const Scalar fb = b / g;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (row[j] == 0) {
        if (v[j] != 0) v[j] = Ops::mul(fa, v[j]);
      } else {
        v[j] = Ops::sub(Ops::mul(fa, v[j]), Ops::mul(fb, row[j]));
      }
    }
    v[c] = 0;
    strip_content(v);
  }

  static void strip_content(Row& v) {
    Scalar g = 0;
    for (const auto& x : v)
      if (x != 0) {
        g = Ops::gcd(g, Ops::abs(x));
        if (g == 1) return;
      }
    if (g > 1)
      for (auto& x : v) x /= g;
  }

  static void normalise(Row& v, std::size_t pivot) {
    strip_content(v);
    if (v[pivot] < 0)
      for (auto& x : v) x = -x;
  }

  std::size_t width_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a set of integer vectors of equal width.
template <typename Scalar = std::int64_t>
std::size_t exact_rank(const std::vector<std::vector<Scalar>>& vectors) {
  if (vectors.empty()) return 0;
  ExactEchelon<Scalar> ech(vectors.front().size());
  for (auto v : vectors) ech.insert(v);
  return ech.rank();
}

}  // namespace terw
