#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "terw/conjugacy.hpp"
#include "terw/exact_echelon.hpp"

namespace terw {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Flattened matrices spanning a subalgebra, in canonical reduced form.
using AlgebraBasis = ExactEchelon<std::int64_t>;

/// Default largest |G| for which dense 2n x 2n matrices are built.
inline constexpr std::size_t kMatrixGuard = 64;

/// (N_i)_{x,y} = 1 iff y x^{-1} in Cl_i; rows and columns in element order.
std::vector<IntMatrix> adjacency_matrices(const D2Group& G, const ClassList& classes,
                                          std::size_t guard = kMatrixGuard);

/// E*_i = diag((N_i)_{e,u}): the indicator of Cl_i on the diagonal.
std::vector<IntMatrix> dual_idempotents(const D2Group& G, const ClassList& classes,
                                        std::size_t guard = kMatrixGuard);

struct SchemeAxiomReport {
  std::vector<std::size_t> transpose_of;  // N_i^T = N_{transpose_of[i]}
  bool symmetric = false;                 // every N_i symmetric
};

/// Checks N_0 = I, sum N_i = J, closure under transpose, and
/// N_i N_j = sum_k p_ij^k N_k with the class-level structure constants.
/// Throws AxiomFailure naming the violated clause.
SchemeAxiomReport verify_scheme_axioms(const ClassAlgebra& alg, std::span<const IntMatrix> N);

struct ClosureOptions {
  std::size_t guard = kMatrixGuard;  // largest matrix side accepted
  // Split along a complete family of diagonal 0/1 idempotent generators when present.
  bool use_peirce = true;
};

struct ClosureResult {
  std::size_t dimension = 0;
  std::size_t blocks = 1;     // number of Peirce components used
  std::size_t products = 0;   // candidate products reduced
};

/// Dimension of the algebra generated by the given integer matrices, by exact
/// closure: products basis x generator are added until the span stabilises.
ClosureResult algebra_closure(std::span<const IntMatrix> generators, ClosureOptions opts = {});
std::size_t algebra_dimension(std::span<const IntMatrix> generators, ClosureOptions opts = {});

/// #{(i, j, k) : Cl_k subset Cl_i Cl_j}.
std::int64_t dim_T0_triples(const ClassAlgebra& alg);
/// Rank of {E*_i N_j E*_k}.
std::int64_t dim_T0_span(const D2Group& G, const ClassList& classes,
                         std::size_t guard = kMatrixGuard);

/// (1/|G|) sum_g |C_G(g)|^2 from a scan of centralizers.
std::int64_t dim_centralizer_formula(const CayleyTable& table);
/// Number of orbits of G on G x G under simultaneous conjugation.
std::int64_t dim_centralizer_orbits(const CayleyTable& table);

/// (3nd + n^2 + 4d^2) / 2.
std::int64_t dim_closed_form(const D2Group& G);
std::int64_t dim_closed_form(std::int64_t n, std::int64_t d);
/// (4 n^2 d + n^2 (n - d) + 4 n d^2) / (2n), the centralizer sum grouped by
/// element type (A', A \ A', A b).
std::int64_t centralizer_dim_by_type(std::int64_t n, std::int64_t d);

/// Orbits of simultaneous conjugation on G x G; the orbit indicator matrices
/// form a basis of the centralizer algebra.
struct Orbitals {
  std::size_t size = 0;                 // |G|
  std::vector<std::uint32_t> orbit_of;  // (u, v) -> orbit id, row-major
  std::vector<std::size_t> orbit_sizes;

  std::size_t count() const noexcept { return orbit_sizes.size(); }
};

Orbitals orbitals(const CayleyTable& table);

/// u -> g u g^{-1} as an index permutation.
std::vector<std::uint32_t> conjugation_permutation(const CayleyTable& table, std::size_t g);

struct TerwilligerDims {
  std::int64_t dim_T0 = 0;
  std::int64_t dim_formula = 0;
  std::int64_t dim_centralizer = 0;
  std::optional<std::int64_t> dim_closure;  // absent when |G| exceeds the guard
  bool triply_transitive = false;           // dim_T0 == dim_centralizer
};

TerwilligerDims is_triply_transitive(const D2Group& G, const ClassList& classes,
                                     std::size_t guard = kMatrixGuard);
TerwilligerDims is_triply_transitive(const D2Group& G, std::size_t guard = kMatrixGuard);

/// Checks dim T0 <= dim T <= dim T~ (the middle term only when computed).
/// Returns an empty string, or the name of the inclusion that failed.
std::string check_sandwich(const TerwilligerDims& dims);

}  // namespace terw
