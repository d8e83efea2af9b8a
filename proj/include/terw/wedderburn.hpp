#pragma once

// Block multiplicities of the centralizer algebra of the conjugation action
// of D2 on itself. For every irreducible character chi_j the multiplicity d_j
// of chi_j in psi(g) = |C_G(g)| is the size of one Wedderburn block M_{d_j}.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "terw/characters.hpp"
#include "terw/conjugacy.hpp"
#include "terw/scheme.hpp"

namespace terw {

struct MultiplicityVector {
  std::vector<std::int64_t> values;  // aligned with CharacterTable::labels

  /// Non-zero multiplicities in label order.
  std::vector<std::int64_t> blocks() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// d_j = sum over classes of conj(chi_j(g_k)), one representative per class.
MultiplicityVector multiplicities_char_sum(const CharacterTable& table);

/// Case analysis on the divisibility of l_i, n_i l_i and k_i by d_i.
MultiplicityVector multiplicities_closed_form(const D2Group& G, const CharacterTable& table);

/// d_j = <psi, chi_j> with psi(g) = |C_G(g)| read from the multiplication table.
MultiplicityVector multiplicities_inner_product(const ClassAlgebra& alg,
                                                const CharacterTable& table);

/// psi(g) = trace Phi(g) = number of elements commuting with g.
std::vector<std::int64_t> permutation_character(const CayleyTable& table);

using ComplexMatrix = Eigen::MatrixXcd;

/// Phi(g) sends basis vector e_v to e_{g v g^{-1}}, i.e. (Phi(g))_{u,v} = [u = g v g^{-1}],
/// so that Phi(g) Phi(h) = Phi(gh).
IntMatrix conjugation_matrix(const CayleyTable& table, std::size_t g);

/// e_j = (chi_j(1) / |G|) sum_g conj(chi_j(g)) Phi(g).
ComplexMatrix central_idempotent(const ClassAlgebra& alg, const CharacterTable& table,
                                 std::size_t label);

struct IdempotentReport {
  double max_square_error = 0;   // |e_j^2 - e_j|
  double max_product_error = 0;  // |e_j e_k|, j != k
  double sum_error = 0;          // |sum e_j - I|
  std::vector<std::size_t> ranks;         // rank of e_j on C^{|G|}
  std::vector<std::int64_t> block_dims;   // dim e_j T~
};

/// Builds every e_j and checks e_j^2 = e_j, e_j e_k = 0, sum e_j = I within
/// tol, rank(e_j) = d_j deg_j and dim(e_j T~) = d_j^2. Throws
/// IdempotencyFailure on the first violation.
IdempotentReport verify_central_idempotents(const ClassAlgebra& alg, const CharacterTable& table,
                                            const MultiplicityVector& mult,
                                            std::size_t guard = kMatrixGuard, double tol = 1e-9);

struct WedderburnReport {
  std::int64_t group_order = 0;
  std::vector<CharLabel> labels;
  std::vector<int> degrees;
  MultiplicityVector closed_form;
  MultiplicityVector char_sum;
  MultiplicityVector inner_product;
  std::vector<bool> agree;  // per label
  std::vector<std::int64_t> blocks;
  std::int64_t sum_squares = 0;    // sum d_j^2
  std::int64_t sum_weighted = 0;   // sum d_j deg_j
  std::int64_t dim_centralizer = 0;

  bool all_agree() const;
  bool consistent() const {
    return all_agree() && sum_squares == dim_centralizer && sum_weighted == group_order;
  }
};

WedderburnReport wedderburn_report(const ClassAlgebra& alg, const D2Group& G,
                                   const CharacterTable& table);
WedderburnReport wedderburn_report(const D2Group& G);

/// Throws MultiplicityMismatch naming the first identity that fails.
void require_consistent(const WedderburnReport& report);

}  // namespace terw
