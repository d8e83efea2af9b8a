#include "terw/wedderburn.hpp"

#include <cmath>

#include "terw/error.hpp"

namespace terw {

std::vector<std::int64_t> MultiplicityVector::blocks() const {
  std::vector<std::int64_t> out;
  for (auto v : values)
    if (v != 0) out.push_back(v);
  return out;
}

namespace {

std::int64_t exact_or_throw(const RootSum& s, const std::string& where) {
  const auto v = s.to_integer(1e-6);
  if (!v)
    throw Error(ErrorKind::NonIntegralMultiplicity,
                where + " evaluates to " + std::to_string(s.eval().real()) + " + " +
                    std::to_string(s.eval().imag()) + "i");
  return *v;
}

std::int64_t half(std::int64_t x) {
  if (x % 2 != 0) throw Error(ErrorKind::NonIntegralMultiplicity, "odd value halved");
  return x / 2;
}

}  // namespace

MultiplicityVector multiplicities_char_sum(const CharacterTable& table) {
  MultiplicityVector out;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    RootSum s = RootSum::zero(table.root_order);
    for (std::size_t c = 0; c < table.cols(); ++c) s += table.value(r, c).conj();
    const auto v = exact_or_throw(s, "character sum of " + to_string(table.labels[r]));
    if (v < 0)
      throw Error(ErrorKind::NonIntegralMultiplicity,
                  "negative multiplicity for " + to_string(table.labels[r]));
    out.values.push_back(v);
  }
  return out;
}

MultiplicityVector multiplicities_closed_form(const D2Group& G, const CharacterTable& table) {
  const auto& fd = G.fixed();
  const std::int64_t n = G.n();
  const std::int64_t d = G.d();
  MultiplicityVector out;
  for (const auto& label : table.labels) {
    if (const auto* lin = std::get_if<LinearLabel>(&label)) {
      bool all_divide = true;   // d_i | l_i for every i
      bool half_divide = true;  // d_i | n_i l_i for every i
      for (std::size_t i = 0; i < lin->ell.size(); ++i) {
        all_divide = all_divide && lin->ell[i] % fd.d_vec[i] == 0;
        half_divide = half_divide &&
                      (static_cast<std::int64_t>(fd.n_vec[i]) * lin->ell[i]) % fd.d_vec[i] == 0;
      }
      if (all_divide)
        out.values.push_back(lin->sign == 1 ? half(n + 3 * d) : half(n - d));
      else if (half_divide)
        out.values.push_back(half(d));
      else
        out.values.push_back(0);
    } else {
      const auto& k = std::get<TwoDimLabel>(label).k;
      bool all_divide = true;
      for (std::size_t i = 0; i < k.size(); ++i) all_divide = all_divide && k[i] % fd.d_vec[i] == 0;
      out.values.push_back(all_divide ? d : 0);
    }
  }
  return out;
}

std::vector<std::int64_t> permutation_character(const CayleyTable& T) {
  std::vector<std::int64_t> psi(T.size, 0);
  for (std::size_t g = 0; g < T.size; ++g)
    for (std::size_t u = 0; u < T.size; ++u)
      if (T.conj(g, u) == u) ++psi[g];
  return psi;
}

MultiplicityVector multiplicities_inner_product(const ClassAlgebra& alg,
                                                const CharacterTable& table) {
  const auto& cls = alg.classes();
  const auto& T = alg.table();
  // psi at one representative per class: the number of h with h g = g h
  std::vector<std::int64_t> psi(cls.size());
  for (std::size_t c = 0; c < cls.size(); ++c) {
    const auto g = cls[c].elements.front();
    for (std::size_t h = 0; h < T.size; ++h)
      if (T(g, h) == T(h, g)) ++psi[c];
  }
  MultiplicityVector out;
  for (std::size_t r = 0; r < table.rows(); ++r) {
    RootSum s = RootSum::zero(table.root_order);
    for (std::size_t c = 0; c < table.cols(); ++c)
      s += table.value(r, c).conj() * (static_cast<std::int64_t>(cls[c].size()) * psi[c]);
    const auto total = exact_or_throw(s, "<psi, " + to_string(table.labels[r]) + "> * |G|");
    if (total % table.group_order != 0 || total < 0)
      throw Error(ErrorKind::NonIntegralMultiplicity,
                  "<psi, " + to_string(table.labels[r]) + "> = " + std::to_string(total) + "/" +
                      std::to_string(table.group_order));
    out.values.push_back(total / table.group_order);
  }
  return out;
}

IntMatrix conjugation_matrix(const CayleyTable& T, std::size_t g) {
  const auto N = static_cast<Eigen::Index>(T.size);
  IntMatrix m = IntMatrix::Zero(N, N);
  for (std::size_t v = 0; v < T.size; ++v)
    m(static_cast<Eigen::Index>(T.conj(g, v)), static_cast<Eigen::Index>(v)) = 1;
  return m;
}

ComplexMatrix central_idempotent(const ClassAlgebra& alg, const CharacterTable& table,
                                 std::size_t label) {
  const auto& T = alg.table();
  const auto& cls = alg.classes();
  const auto N = static_cast<Eigen::Index>(T.size);
  std::vector<std::complex<double>> chi(table.cols());
  for (std::size_t c = 0; c < table.cols(); ++c) chi[c] = std::conj(table.value(label, c).eval());
  const double scale = static_cast<double>(table.degrees[label]) / static_cast<double>(T.size);
  ComplexMatrix e = ComplexMatrix::Zero(N, N);
  for (std::size_t g = 0; g < T.size; ++g) {
    const auto w = scale * chi[cls.class_of[g]];
    for (std::size_t v = 0; v < T.size; ++v)
      e(static_cast<Eigen::Index>(T.conj(g, v)), static_cast<Eigen::Index>(v)) += w;
  }
  return e;
}

namespace {

// trace of X -> e X on the centralizer algebra, in the orthogonal orbit basis
double block_dimension(const ComplexMatrix& e, const Orbitals& orb) {
  const std::size_t N = orb.size;
  double total = 0;
  std::vector<std::vector<std::size_t>> by_orbit(orb.count());
  for (std::size_t v = 0; v < N; ++v) {
    for (auto& bucket : by_orbit) bucket.clear();
    for (std::size_t u = 0; u < N; ++u) by_orbit[orb.orbit_of[u * N + v]].push_back(u);
    for (std::size_t k = 0; k < orb.count(); ++k) {
      const auto& members = by_orbit[k];
      if (members.empty()) continue;
      std::complex<double> s = 0;
      for (auto u : members)
        for (auto w : members) s += e(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(w));
      total += s.real() / static_cast<double>(orb.orbit_sizes[k]);
    }
  }
  return total;
}

}  // namespace

IdempotentReport verify_central_idempotents(const ClassAlgebra& alg, const CharacterTable& table,
                                            const MultiplicityVector& mult, std::size_t guard,
                                            double tol) {
  const auto& T = alg.table();
  if (T.size > guard)
    throw Error(ErrorKind::GuardExceeded, "central idempotents: |G| = " + std::to_string(T.size) +
                                              " exceeds the matrix guard " +
                                              std::to_string(guard));
  const auto N = static_cast<Eigen::Index>(T.size);
  const auto orb = orbitals(T);
  std::vector<ComplexMatrix> e;
  for (std::size_t j = 0; j < table.rows(); ++j) e.push_back(central_idempotent(alg, table, j));

  IdempotentReport rep;
  auto fail = [&](const std::string& what) { throw Error(ErrorKind::IdempotencyFailure, what); };
  ComplexMatrix sum = ComplexMatrix::Zero(N, N);
  for (std::size_t j = 0; j < e.size(); ++j) {
    const auto name = to_string(table.labels[j]);
    sum += e[j];
    const double sq = (e[j] * e[j] - e[j]).cwiseAbs().maxCoeff();
    rep.max_square_error = std::max(rep.max_square_error, sq);
    if (sq > tol) fail("e^2 != e for " + name);
    for (std::size_t k = j + 1; k < e.size(); ++k) {
      const double pr = std::max((e[j] * e[k]).cwiseAbs().maxCoeff(), (e[k] * e[j]).cwiseAbs().maxCoeff());
      rep.max_product_error = std::max(rep.max_product_error, pr);
      if (pr > tol) fail("e_j e_k != 0 for " + name + ", " + to_string(table.labels[k]));
    }
    // singular values of a non-zero idempotent are at least 1
    const Eigen::VectorXd sv = Eigen::JacobiSVD<ComplexMatrix>(e[j]).singularValues();
    const auto rank = static_cast<std::size_t>((sv.array() > 1e-6).count());
    rep.ranks.push_back(rank);
    const auto expect_rank = mult.values[j] * table.degrees[j];
    if (static_cast<std::int64_t>(rank) != expect_rank)
      fail("rank(e) = " + std::to_string(rank) + " but d deg = " + std::to_string(expect_rank) +
           " for " + name);
    const double bd = block_dimension(e[j], orb);
    const auto bd_int = static_cast<std::int64_t>(std::llround(bd));
    rep.block_dims.push_back(bd_int);
    if (std::abs(bd - static_cast<double>(bd_int)) > 1e-6 || bd_int != mult.values[j] * mult.values[j])
      fail("dim e T~ = " + std::to_string(bd) + " but d^2 = " +
           std::to_string(mult.values[j] * mult.values[j]) + " for " + name);
  }
  rep.sum_error = (sum - ComplexMatrix::Identity(N, N)).cwiseAbs().maxCoeff();
  if (rep.sum_error > tol) fail("sum of central idempotents is not I");
  return rep;
}

bool WedderburnReport::all_agree() const {
  for (bool a : agree)
    if (!a) return false;
  return true;
}

WedderburnReport wedderburn_report(const ClassAlgebra& alg, const D2Group& G,
                                   const CharacterTable& table) {
  WedderburnReport rep;
  rep.group_order = G.order();
  rep.labels = table.labels;
  rep.degrees = table.degrees;
  rep.closed_form = multiplicities_closed_form(G, table);
  rep.char_sum = multiplicities_char_sum(table);
  rep.inner_product = multiplicities_inner_product(alg, table);
  for (std::size_t j = 0; j < table.rows(); ++j) {
    const auto v = rep.closed_form.values[j];
    rep.agree.push_back(v == rep.char_sum.values[j] && v == rep.inner_product.values[j]);
    rep.sum_squares += v * v;
    rep.sum_weighted += v * table.degrees[j];
  }
  rep.blocks = rep.closed_form.blocks();
  rep.dim_centralizer = dim_centralizer_formula(alg.table());
  return rep;
}

WedderburnReport wedderburn_report(const D2Group& G) {
  const auto classes = conjugacy_classes(G);
  const ClassAlgebra alg(G, classes);
  return wedderburn_report(alg, G, character_table(G, classes));
}

void require_consistent(const WedderburnReport& rep) {
  for (std::size_t j = 0; j < rep.agree.size(); ++j)
    if (!rep.agree[j])
      throw Error(ErrorKind::MultiplicityMismatch,
                  to_string(rep.labels[j]) + ": closed form " +
                      std::to_string(rep.closed_form.values[j]) + ", character sum " +
                      std::to_string(rep.char_sum.values[j]) + ", inner product " +
                      std::to_string(rep.inner_product.values[j]));
  if (rep.sum_squares != rep.dim_centralizer)
    throw Error(ErrorKind::MultiplicityMismatch,
                "sum d^2 = " + std::to_string(rep.sum_squares) + " but dim T~ = " +
                    std::to_string(rep.dim_centralizer));
  if (rep.sum_weighted != rep.group_order)
    throw Error(ErrorKind::MultiplicityMismatch,
                "sum d deg = " + std::to_string(rep.sum_weighted) + " but |G| = " +
                    std::to_string(rep.group_order));
}

}  // namespace terw
