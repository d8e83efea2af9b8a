#include "terw/scheme.hpp"

#include <deque>
#include <map>

#include "terw/error.hpp"

namespace terw {

namespace {

void check_guard(std::size_t size, std::size_t guard, const char* what) {
  if (size > guard)
    throw Error(ErrorKind::GuardExceeded, std::string(what) + ": |G| = " + std::to_string(size) +
                                              " exceeds the matrix guard " +
                                              std::to_string(guard));
}

}  // namespace

std::vector<IntMatrix> adjacency_matrices(const D2Group& G, const ClassList& classes,
                                          std::size_t guard) {
  check_guard(G.size(), guard, "adjacency matrices");
  const auto T = cayley_table(G);
  const auto N = static_cast<Eigen::Index>(T.size);
  std::vector<IntMatrix> out(classes.size(), IntMatrix::Zero(N, N));
  for (Eigen::Index x = 0; x < N; ++x)
    for (Eigen::Index y = 0; y < N; ++y)
      out[classes.class_of[T(static_cast<std::size_t>(y), T.inv[static_cast<std::size_t>(x)])]](x, y) = 1;
  return out;
}

std::vector<IntMatrix> dual_idempotents(const D2Group& G, const ClassList& classes,
                                        std::size_t guard) {
  check_guard(G.size(), guard, "dual idempotents");
  const auto N = static_cast<Eigen::Index>(G.size());
  std::vector<IntMatrix> out(classes.size(), IntMatrix::Zero(N, N));
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto u : classes[c].elements) out[c](static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(u)) = 1;
  return out;
}

SchemeAxiomReport verify_scheme_axioms(const ClassAlgebra& alg, std::span<const IntMatrix> N) {
  const std::size_t r = N.size();
  if (r == 0 || r != alg.classes().size())
    throw Error(ErrorKind::AxiomFailure, "matrix count does not match class count");
  const auto size = N[0].rows();
  if (N[0] != IntMatrix::Identity(size, size))
    throw Error(ErrorKind::AxiomFailure, "(i) N_0 is not the identity");

  IntMatrix sum = IntMatrix::Zero(size, size);
  for (const auto& m : N) {
    if ((m.array() * (m.array() - 1)).any())
      throw Error(ErrorKind::AxiomFailure, "(ii) adjacency matrix is not 0/1");
    sum += m;
  }
  if (sum != IntMatrix::Ones(size, size))
    throw Error(ErrorKind::AxiomFailure, "(ii) the matrices do not sum to J");

  SchemeAxiomReport rep;
  rep.symmetric = true;
  for (std::size_t i = 0; i < r; ++i) {
    const IntMatrix t = N[i].transpose();
    std::size_t match = r;
    for (std::size_t j = 0; j < r && match == r; ++j)
      if (N[j] == t) match = j;
    if (match == r)
      throw Error(ErrorKind::AxiomFailure, "(iii) N_" + std::to_string(i) + "^T is not a relation");
    rep.transpose_of.push_back(match);
    rep.symmetric = rep.symmetric && match == i;
  }

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const IntMatrix prod = N[i] * N[j];
      IntMatrix expect = IntMatrix::Zero(size, size);
      for (std::size_t k = 0; k < r; ++k) {
        const auto p = alg.structure_constant(i, j, k);
        if (p != 0) expect += p * N[k];
      }
      if (prod != expect)
        throw Error(ErrorKind::AxiomFailure, "(iv) N_" + std::to_string(i) + " N_" +
                                                 std::to_string(j) +
                                                 " != sum_k p_ij^k N_k");
    }
  }
  return rep;
}

namespace {

using Ops = detail::ScalarOps<std::int64_t>;
using Vec = std::vector<std::int64_t>;

// Partition of the index set into supports of diagonal 0/1 generators, when
// those generators form a complete orthogonal family. Empty otherwise.
std::vector<std::vector<std::size_t>> peirce_parts(std::span<const IntMatrix> gens) {
  const auto n = static_cast<std::size_t>(gens[0].rows());
  std::vector<const IntMatrix*> diag;
  for (const auto& g : gens) {
    bool ok = g.any();
    for (Eigen::Index r = 0; r < g.rows() && ok; ++r)
      for (Eigen::Index c = 0; c < g.cols() && ok; ++c) {
        const auto v = g(r, c);
        ok = (r == c) ? (v == 0 || v == 1) : v == 0;
      }
    if (ok) diag.push_back(&g);
  }
  if (diag.empty()) return {};

  std::map<std::vector<bool>, std::vector<std::size_t>> atoms;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<bool> sig(diag.size());
    bool any = false;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      sig[k] = (*diag[k])(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(u)) == 1;
      any = any || sig[k];
    }
    if (!any) return {};
    atoms[sig].push_back(u);
  }
  std::vector<std::vector<std::size_t>> parts;
  for (auto& [sig, members] : atoms) {
    // the atom must itself be one of the generators
    bool found = false;
    for (const auto* d : diag) {
      if (d->diagonal().sum() != static_cast<std::int64_t>(members.size())) continue;
      bool all = true;
      for (auto u : members)
        all = all && (*d)(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(u)) == 1;
      if (all) {
        found = true;
        break;
      }
    }
    if (!found) return {};
    parts.push_back(std::move(members));
  }
  return parts;
}

struct GenBlock {
  std::size_t target;  // column part l
  Vec data;            // |S_k| x |S_l| row-major
  bool identity;
};

}  // namespace

ClosureResult algebra_closure(std::span<const IntMatrix> gens, ClosureOptions opts) {
  if (gens.empty()) throw Error(ErrorKind::InvalidSpec, "algebra closure needs a generator");
  const auto n = static_cast<std::size_t>(gens[0].rows());
  for (const auto& g : gens)
    if (static_cast<std::size_t>(g.rows()) != n || static_cast<std::size_t>(g.cols()) != n)
      throw Error(ErrorKind::DimensionMismatch, "generators must be square of equal size");
  check_guard(n, opts.guard, "algebra closure");

  std::vector<std::vector<std::size_t>> parts;
  if (opts.use_peirce) parts = peirce_parts(gens);
  if (parts.empty()) {
    parts.emplace_back(n);
    for (std::size_t u = 0; u < n; ++u) parts[0][u] = u;
  }
  const std::size_t P = parts.size();

  std::vector<std::vector<GenBlock>> from(P);  // generator blocks leaving part k
  std::vector<AlgebraBasis> W;
  W.reserve(P * P);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t k = 0; k < P; ++k) W.emplace_back(parts[i].size() * parts[k].size());

  struct Pending {
    std::size_t i, k;
    Vec v;
  };
  std::deque<Pending> queue;
  ClosureResult res;
  res.blocks = P;

  for (const auto& g : gens) {
    for (std::size_t i = 0; i < P; ++i) {
      for (std::size_t k = 0; k < P; ++k) {
        const auto& Si = parts[i];
        const auto& Sk = parts[k];
        Vec blk(Si.size() * Sk.size());
        bool nonzero = false;
        bool identity = i == k;
        for (std::size_t a = 0; a < Si.size(); ++a)
          for (std::size_t b = 0; b < Sk.size(); ++b) {
            const auto v = g(static_cast<Eigen::Index>(Si[a]), static_cast<Eigen::Index>(Sk[b]));
            blk[a * Sk.size() + b] = v;
            nonzero = nonzero || v != 0;
            identity = identity && v == (a == b ? 1 : 0);
          }
        if (!nonzero) continue;
        from[i].push_back({k, blk, identity});
        if (W[i * P + k].insert(blk)) queue.push_back({i, k, std::move(blk)});
      }
    }
  }

  while (!queue.empty()) {
    auto [i, k, w] = std::move(queue.front());
    queue.pop_front();
    const std::size_t rows = parts[i].size();
    const std::size_t inner = parts[k].size();
    for (const auto& g : from[k]) {
      if (g.identity) continue;
      const std::size_t cols = parts[g.target].size();
      Vec prod(rows * cols, 0);
      for (std::size_t a = 0; a < rows; ++a)
        for (std::size_t m = 0; m < inner; ++m) {
          const auto x = w[a * inner + m];
          if (x == 0) continue;
          for (std::size_t b = 0; b < cols; ++b) {
            const auto y = g.data[m * cols + b];
            if (y != 0) prod[a * cols + b] = Ops::add(prod[a * cols + b], Ops::mul(x, y));
          }
        }
      ++res.products;
      if (W[i * P + g.target].insert(prod)) queue.push_back({i, g.target, std::move(prod)});
    }
  }
  for (const auto& w : W) res.dimension += w.rank();
  return res;
}

std::size_t algebra_dimension(std::span<const IntMatrix> generators, ClosureOptions opts) {
  return algebra_closure(generators, opts).dimension;
}

std::int64_t dim_T0_triples(const ClassAlgebra& alg) { return alg.triple_count(); }

std::int64_t dim_T0_span(const D2Group& G, const ClassList& classes, std::size_t guard) {
  const auto N = adjacency_matrices(G, classes, guard);
  const auto E = dual_idempotents(G, classes, guard);
  const auto size = static_cast<std::size_t>(G.size());
  AlgebraBasis basis(size * size);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const IntMatrix m = E[i] * N[j] * E[k];
        if (!m.any()) continue;
        Vec v(size * size);
        for (std::size_t r = 0; r < size; ++r)
          for (std::size_t c = 0; c < size; ++c)
            v[r * size + c] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        basis.insert(v);
      }
  return static_cast<std::int64_t>(basis.rank());
}

std::int64_t dim_centralizer_formula(const CayleyTable& T) {
  std::int64_t total = 0;
  for (std::size_t g = 0; g < T.size; ++g) {
    std::int64_t c = 0;
    for (std::size_t h = 0; h < T.size; ++h)
      if (T(g, h) == T(h, g)) ++c;
    total += c * c;
  }
  const auto order = static_cast<std::int64_t>(T.size);
  if (total % order != 0)
    throw Error(ErrorKind::ArithmeticOverflow, "centralizer sum not divisible by |G|");
  return total / order;
}

Orbitals orbitals(const CayleyTable& T) {
  const std::size_t N = T.size;
  Orbitals out;
  out.size = N;
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  out.orbit_of.assign(N * N, unset);
  std::vector<std::vector<std::uint32_t>> conj(N);
  for (std::size_t h = 0; h < N; ++h) conj[h] = conjugation_permutation(T, h);
  for (std::size_t start = 0; start < N * N; ++start) {
    if (out.orbit_of[start] != unset) continue;
    const auto id = static_cast<std::uint32_t>(out.orbit_sizes.size());
    const std::size_t u = start / N;
    const std::size_t v = start % N;
    std::size_t count = 0;
    // the orbit is {(h u h^-1, h v h^-1)}; it is already closed under G
    for (std::size_t h = 0; h < N; ++h) {
      const std::size_t pair = conj[h][u] * N + conj[h][v];
      if (out.orbit_of[pair] == unset) {
        out.orbit_of[pair] = id;
        ++count;
      }
    }
    out.orbit_sizes.push_back(count);
  }
  return out;
}

std::int64_t dim_centralizer_orbits(const CayleyTable& table) {
  return static_cast<std::int64_t>(orbitals(table).count());
}

std::vector<std::uint32_t> conjugation_permutation(const CayleyTable& T, std::size_t g) {
  std::vector<std::uint32_t> p(T.size);
  for (std::size_t u = 0; u < T.size; ++u) p[u] = T.conj(g, u);
  return p;
}

std::int64_t dim_closed_form(std::int64_t n, std::int64_t d) {
  const std::int64_t twice = 3 * n * d + n * n + 4 * d * d;
  if (twice % 2 != 0)
    throw Error(ErrorKind::InvalidSpec, "3nd + n^2 + 4d^2 is odd for n = " + std::to_string(n) +
                                            ", d = " + std::to_string(d));
  return twice / 2;
}

std::int64_t dim_closed_form(const D2Group& G) { return dim_closed_form(G.n(), G.d()); }

std::int64_t centralizer_dim_by_type(std::int64_t n, std::int64_t d) {
  const std::int64_t num = 4 * n * n * d + n * n * (n - d) + 4 * n * d * d;
  return num / (2 * n);
}

TerwilligerDims is_triply_transitive(const D2Group& G, const ClassList& classes,
                                     std::size_t guard) {
  const ClassAlgebra alg(G, classes);
  TerwilligerDims out;
  out.dim_T0 = dim_T0_triples(alg);
  out.dim_formula = dim_closed_form(G);
  out.dim_centralizer = dim_centralizer_formula(alg.table());
  if (G.size() <= guard) {
    auto gens = adjacency_matrices(G, classes, guard);
    auto E = dual_idempotents(G, classes, guard);
    gens.insert(gens.end(), E.begin(), E.end());
    out.dim_closure = static_cast<std::int64_t>(algebra_dimension(gens, {guard, true}));
  }
  out.triply_transitive = out.dim_T0 == out.dim_centralizer;
  return out;
}

TerwilligerDims is_triply_transitive(const D2Group& G, std::size_t guard) {
  return is_triply_transitive(G, conjugacy_classes(G), guard);
}

std::string check_sandwich(const TerwilligerDims& d) {
  if (d.dim_closure) {
    if (d.dim_T0 > *d.dim_closure)
      return "T0 subset T violated: dim T0 = " + std::to_string(d.dim_T0) + " > dim T = " +
             std::to_string(*d.dim_closure);
    if (*d.dim_closure > d.dim_centralizer)
      return "T subset T~ violated: dim T = " + std::to_string(*d.dim_closure) +
             " > dim T~ = " + std::to_string(d.dim_centralizer);
  } else if (d.dim_T0 > d.dim_centralizer) {
    return "T0 subset T~ violated: dim T0 = " + std::to_string(d.dim_T0) + " > dim T~ = " +
           std::to_string(d.dim_centralizer);
  }
  return {};
}

}  // namespace terw
