#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "terw/d2group.hpp"

namespace terw {

// Fixed: {a} with a in A'. Paired: {a, f(a)} with a not in A'. Coset: B z b.
enum class ClassKind { Fixed, Paired, Coset };

std::string_view to_string(ClassKind k) noexcept;

struct ConjClass {
  ClassKind kind = ClassKind::Fixed;
  D2Elem rep;
  std::vector<std::size_t> elements;  // element indices, ascending
  std::size_t index = 0;

  std::size_t size() const noexcept { return elements.size(); }
};

struct ClassList {
  std::vector<ConjClass> classes;
  std::size_t num_fixed = 0;
  std::size_t num_paired = 0;
  std::size_t num_coset = 0;
  std::vector<std::size_t> class_of;  // element index -> class index

  std::size_t size() const noexcept { return classes.size(); }
  const ConjClass& operator[](std::size_t i) const { return classes[i]; }
};

/// Default resource guard for paths that enumerate elements explicitly.
inline constexpr std::size_t kFormulaGuard = 4096;

/// Closed-form class list: A' in enumeration order, then pairs {a, f(a)} by
/// their smaller element, then B z b for 0 <= z_i < d_i in mixed-radix order.
ClassList conjugacy_classes(const D2Group& G);

/// Orbits of g -> h g h^{-1}, canonically ordered the same way.
/// Throws GuardExceeded when |G| > guard.
ClassList conjugacy_classes_bruteforce(const D2Group& G, std::size_t guard = kFormulaGuard);

std::size_t class_of(const D2Group& G, const ClassList& classes, const D2Elem& g);

/// True when both lists describe the same partition in the same order.
bool same_partition(const ClassList& a, const ClassList& b);

/// Precomputed data for class-level queries.
class ClassAlgebra {
 public:
  ClassAlgebra(const D2Group& G, const ClassList& classes);

  const CayleyTable& table() const noexcept { return table_; }
  const ClassList& classes() const noexcept { return classes_; }

  /// p_ij^k = #{z in Cl_i : y z^{-1} in Cl_j} for a representative y of Cl_k.
  std::int64_t structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Same count for an explicit y; used to check representative independence.
  std::int64_t structure_constant_at(std::size_t i, std::size_t j, std::size_t y) const;

  /// Sorted indices k with Cl_k contained in Cl_i Cl_j.
  std::vector<std::size_t> class_products(std::size_t i, std::size_t j) const;

  /// #{(i, j, k) : Cl_k subset of Cl_i Cl_j}.
  std::int64_t triple_count() const;

 private:
  CayleyTable table_;
  ClassList classes_;
};

std::int64_t structure_constant(const D2Group& G, const ClassList& classes, std::size_t i,
                                std::size_t j, std::size_t k);
std::vector<std::size_t> class_products(const D2Group& G, const ClassList& classes,
                                        std::size_t i, std::size_t j);

/// For every pair of Paired classes {y_r, f(y_r)}, {y_j, f(y_j)} the classes
/// of y_r y_j and y_r f(y_j) differ, and their union is the product set.
/// Returns an empty string on success, otherwise a description of the failure.
std::string check_paired_products(const ClassAlgebra& alg);

/// For each Coset class C_r, the element sets C_r C_j (over Coset classes C_j)
/// are pairwise disjoint and cover A. Same return convention.
std::string check_coset_partition(const ClassAlgebra& alg);

}  // namespace terw
