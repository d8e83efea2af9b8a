#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "helpers.hpp"
#include "terw/error.hpp"
#include "terw/scheme.hpp"
#include "terw/wedderburn.hpp"

using namespace terw;
using namespace terw::testing;

namespace {

std::vector<IntMatrix> generators(const D2Group& G, const ClassList& cl) {
  auto gens = adjacency_matrices(G, cl);
  const auto E = dual_idempotents(G, cl);
  gens.insert(gens.end(), E.begin(), E.end());
  return gens;
}

// Naive closure: span of all products of generators, both sides, dense.
std::size_t naive_dimension(const std::vector<IntMatrix>& gens) {
  const auto n = static_cast<std::size_t>(gens[0].rows());
  auto flat = [&](const IntMatrix& m) {
    std::vector<boost::multiprecision::cpp_int> v(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        v[r * n + c] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    return v;
  };
  ExactEchelon<boost::multiprecision::cpp_int> basis(n * n);
  std::vector<IntMatrix> elems;
  for (const auto& g : gens) {
    auto v = flat(g);
    if (basis.insert(v)) elems.push_back(g);
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens)
      for (const IntMatrix& p : {IntMatrix(elems[i] * g), IntMatrix(g * elems[i])}) {
        auto v = flat(p);
        if (basis.insert(v)) elems.push_back(p);
      }
  return basis.rank();
}

}  // namespace

TEST_CASE("adjacency matrices and dual idempotents") {
  for (const auto& G : {s3(), d4(), q8(), sd16()}) {
    const auto cl = conjugacy_classes(G);
    const auto N = adjacency_matrices(G, cl);
    const auto E = dual_idempotents(G, cl);
    const auto size = static_cast<Eigen::Index>(G.size());
    CHECK(N[0] == IntMatrix::Identity(size, size));
    IntMatrix sum = IntMatrix::Zero(size, size);
    IntMatrix esum = IntMatrix::Zero(size, size);
    for (std::size_t i = 0; i < cl.size(); ++i) {
      sum += N[i];
      esum += E[i];
      const auto k = static_cast<std::int64_t>(cl[i].size());
      CHECK((N[i].rowwise().sum().array() == k).all());
      CHECK((N[i].colwise().sum().array() == k).all());
      CHECK(E[i].trace() == k);
      CHECK(E[i] * E[i] == E[i]);
    }
    CHECK(sum == IntMatrix::Ones(size, size));
    CHECK(esum == IntMatrix::Identity(size, size));
  }
  CHECK_THROWS_AS(adjacency_matrices(sd16(), conjugacy_classes(sd16()), 8), Error);
}

TEST_CASE("scheme axioms") {
  for (const auto& G : {d4(), q8()}) {
    const auto cl = conjugacy_classes(G);
    const ClassAlgebra alg(G, cl);
    const auto N = adjacency_matrices(G, cl);
    const auto rep = verify_scheme_axioms(alg, N);
    CHECK(rep.symmetric);
  }
  const auto G = sd16();
  const auto cl = conjugacy_classes(G);
  const ClassAlgebra alg(G, cl);
  const auto rep = verify_scheme_axioms(alg, adjacency_matrices(G, cl));
  for (std::size_t i = 0; i < rep.transpose_of.size(); ++i) {
    // N_i^T is the class of inverses
    const auto inv = alg.table().inv[cl[i].elements.front()];
    CHECK(rep.transpose_of[i] == cl.class_of[inv]);
  }
}

TEST_CASE("scheme axiom faults are reported by clause") {
  const auto G = d4();
  const auto cl = conjugacy_classes(G);
  const ClassAlgebra alg(G, cl);
  auto expect_clause = [&](std::vector<IntMatrix> N, const std::string& clause) {
    try {
      verify_scheme_axioms(alg, N);
      FAIL("expected AxiomFailure");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AxiomFailure);
      CHECK(std::string(e.what()).find(clause) != std::string::npos);
    }
  };
  auto N = adjacency_matrices(G, cl);
  {
    auto bad = N;
    bad[0](0, 1) = 1;
    expect_clause(bad, "(i)");
  }
  {
    // move one entry of row 0 between N_1 and N_2; N_1 is no longer symmetric
    auto bad = N;
    Eigen::Index c1 = 0, c2 = 0;
    for (Eigen::Index c = 0; c < bad[1].cols(); ++c) {
      if (bad[1](0, c)) c1 = c;
      if (bad[2](0, c)) c2 = c;
    }
    std::swap(bad[1](0, c1), bad[2](0, c1));
    std::swap(bad[1](0, c2), bad[2](0, c2));
    expect_clause(bad, "(iii)");
  }
  {
    // swapping two classes keeps (i)-(iii) but breaks the product table
    auto bad = N;
    std::swap(bad[1], bad[2]);
    expect_clause(bad, "(iv)");
  }
}

TEST_CASE("algebra closure basics") {
  const IntMatrix I = IntMatrix::Identity(4, 4);
  CHECK(algebra_dimension(std::vector<IntMatrix>{I}) == 1);

  IntMatrix shift = IntMatrix::Zero(4, 4);
  for (int i = 0; i < 3; ++i) shift(i, i + 1) = 1;
  // nilpotent shift generates span{S, S^2, S^3}
  CHECK(algebra_dimension(std::vector<IntMatrix>{shift}) == 3);
  CHECK(algebra_dimension(std::vector<IntMatrix>{I, shift}) == 4);

  CHECK_THROWS_AS(algebra_dimension(std::vector<IntMatrix>{}), Error);
  CHECK_THROWS_AS(algebra_dimension(std::vector<IntMatrix>{I, IntMatrix::Identity(3, 3)}), Error);
  CHECK_THROWS_AS(algebra_dimension(std::vector<IntMatrix>{I}, {3, true}), Error);
}

TEST_CASE("Terwilliger dimensions of the small named groups") {
  struct Case {
    D2Group G;
    std::int64_t dim;
  };
  for (const auto& [G, dim] : {Case{s3(), 11}, Case{d4(), 28}, Case{q8(), 28}, Case{sd16(), 64}}) {
    const auto cl = conjugacy_classes(G);
    const auto gens = generators(G, cl);
    const auto peirce = algebra_closure(gens);
    const auto global = algebra_closure(gens, {kMatrixGuard, false});
    CHECK(peirce.dimension == static_cast<std::size_t>(dim));
    CHECK(global.dimension == peirce.dimension);
    CHECK(peirce.blocks == cl.size());
    CHECK(global.blocks == 1);
    if (G.size() <= 8) CHECK(naive_dimension(gens) == peirce.dimension);

    const ClassAlgebra alg(G, cl);
    CHECK(dim_T0_triples(alg) == dim);
    CHECK(dim_T0_span(G, cl) == dim);
    CHECK(dim_centralizer_formula(alg.table()) == dim);
    CHECK(dim_centralizer_orbits(alg.table()) == dim);
    CHECK(dim_closed_form(G) == dim);

    const auto dims = is_triply_transitive(G, cl);
    CHECK(dims.triply_transitive);
    CHECK(dims.dim_closure == std::optional<std::int64_t>{dim});
    CHECK(check_sandwich(dims).empty());
  }
}

TEST_CASE("dimensions agree over G2 and dihedral instances") {
  std::vector<D2Group> groups;
  for (std::int64_t n = 3; n <= 16; ++n)
    for (std::int64_t s = 2; s < n; ++s)
      for (std::int64_t t = 0; t < n; ++t)
        if (g2_params_valid(n, s, t)) groups.push_back(make_family(G2Spec{n, s, t}));
  groups.push_back(make_family(DihedralSpec{{{2, 1}, {2, 2}}}));
  groups.push_back(make_family(DihedralSpec{{{3, 1}, {3, 1}}}));
  groups.push_back(make_family(DicyclicSpec{{{2, 1}, {2, 2}}, {0, 2}}));
  for (const auto& G : groups) {
    const auto cl = conjugacy_classes(G);
    const ClassAlgebra alg(G, cl);
    const auto n = G.n();
    const auto d = G.d();
    const auto cent = dim_centralizer_formula(alg.table());
    CHECK(cent == dim_centralizer_orbits(alg.table()));
    CHECK(cent == dim_closed_form(G));
    CHECK(cent == centralizer_dim_by_type(n, d));
    CHECK(dim_T0_triples(alg) == cent);
    if (G.size() <= 24) CHECK(dim_T0_span(G, cl) == cent);
    const auto dims = is_triply_transitive(G, cl);
    CHECK(check_sandwich(dims).empty());
    CHECK(dims.dim_closure == std::optional<std::int64_t>{cent});
  }
}

TEST_CASE("sandwich messages name the broken inclusion") {
  TerwilligerDims d;
  d.dim_T0 = 12;
  d.dim_closure = 11;
  d.dim_centralizer = 11;
  CHECK(check_sandwich(d).find("T0 subset T") != std::string::npos);
  d.dim_T0 = 11;
  d.dim_closure = 13;
  CHECK(check_sandwich(d).find("T subset T~") != std::string::npos);
  d.dim_closure.reset();
  d.dim_T0 = 20;
  CHECK_FALSE(check_sandwich(d).empty());
}

TEST_CASE("is_triply_transitive skips the closure above the guard") {
  const auto G = make_family(DihedralSpec{{{2, 1}, {3, 1}, {3, 1}}});
  const auto dims = is_triply_transitive(G, 16);
  CHECK_FALSE(dims.dim_closure.has_value());
  CHECK(dims.dim_T0 == dims.dim_centralizer);
}

TEST_CASE("closed-form identities") {
  for (std::int64_t n = 3; n <= 200; ++n)
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d != 0 || (n - d) % 2 != 0) continue;
      CHECK(centralizer_dim_by_type(n, d) == dim_closed_form(n, d));
    }
  CHECK_THROWS_AS(dim_closed_form(3, 2), Error);
}

TEST_CASE("exact rank, int64 against cpp_int") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> count(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t width = 8;
    std::vector<std::vector<std::int64_t>> small;
    std::vector<std::vector<boost::multiprecision::cpp_int>> big;
    const int rows = count(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<std::int64_t> v(width);
      for (auto& x : v) x = entry(rng);
      // occasionally a combination of earlier rows
      if (r >= 2 && r % 3 == 0)
        for (std::size_t c = 0; c < width; ++c) v[c] = 2 * small[0][c] - small[1][c];
      small.push_back(v);
      big.emplace_back(v.begin(), v.end());
    }
    const auto a = exact_rank<std::int64_t>(small);
    const auto b = exact_rank<boost::multiprecision::cpp_int>(big);
    CHECK(a == b);

    Eigen::MatrixXd m(rows, static_cast<Eigen::Index>(width));
    for (int r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < width; ++c) m(r, static_cast<Eigen::Index>(c)) = double(small[r][c]);
    CHECK(static_cast<Eigen::Index>(a) == m.fullPivLu().rank());
  }
}

TEST_CASE("echelon form is canonical") {
  ExactEchelon<> a(3), b(3);
  std::vector<std::int64_t> u{2, 4, 6}, v{1, 0, 1}, w{0, 2, 2};
  auto u2 = u, v2 = v, w2 = w;
  a.insert(u);
  a.insert(v);
  b.insert(w2);
  b.insert(v2);
  CHECK(a.rows() == b.rows());
  CHECK_FALSE(a.insert(u2));
  CHECK(a.contains({3, 2, 5}));
  CHECK_FALSE(a.contains({0, 0, 1}));
}

TEST_CASE("int64 overflow is reported") {
  ExactEchelon<> e(2);
  std::vector<std::int64_t> a{std::int64_t{1} << 40, 3};
  std::vector<std::int64_t> b{(std::int64_t{1} << 40) + 1, std::int64_t{1} << 40};
  e.insert(a);
  try {
    e.insert(b);
    FAIL("expected ArithmeticOverflow");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ArithmeticOverflow);
  }
}

TEST_CASE("adjacency matrices commute with conjugation") {
  for (const auto& G : {s3(), q8(), sd16()}) {
    const auto cl = conjugacy_classes(G);
    const auto T = cayley_table(G);
    const auto N = adjacency_matrices(G, cl);
    const auto E = dual_idempotents(G, cl);
    for (std::size_t g = 0; g < T.size; ++g) {
      const IntMatrix P = conjugation_matrix(T, g);
      for (std::size_t i = 0; i < cl.size(); ++i) {
        CHECK(P * N[i] == N[i] * P);
        CHECK(P * E[i] == E[i] * P);
      }
    }
  }
}

TEST_CASE("orbitals partition G x G") {
  const auto T = cayley_table(sd16());
  const auto orb = orbitals(T);
  std::size_t total = 0;
  for (auto s : orb.orbit_sizes) total += s;
  CHECK(total == T.size * T.size);
  for (std::size_t g = 0; g < T.size; ++g) {
    const auto p = conjugation_permutation(T, g);
    for (std::size_t u = 0; u < T.size; ++u)
      for (std::size_t v = 0; v < T.size; ++v)
        CHECK(orb.orbit_of[p[u] * T.size + p[v]] == orb.orbit_of[u * T.size + v]);
  }
}
