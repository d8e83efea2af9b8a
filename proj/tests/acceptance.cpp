// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "terw/characters.hpp"
#include "terw/conjugacy.hpp"
#include "terw/error.hpp"
#include "terw/scheme.hpp"
#include "terw/wedderburn.hpp"

using namespace terw;

namespace {

enum class Family { Dihedral, Dicyclic, G2, General };

struct Instance {
  std::string name;
  Family family;
  D2Group G;
};

struct Criterion {
  Criterion(std::string t = {}) : title(std::move(t)) {}

  std::string title;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) failures.push_back(what);
  }
};

std::string factors_name(const std::vector<std::pair<int, int>>& factors) {
  std::string out;
  for (auto [p, e] : factors) {
    if (!out.empty()) out += "x";
    out += "C" + std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "");
  }
  return out;
}

bool exponent_two(const AbelianGroup& A) {
  for (const auto& c : A.factors())
    if (c.m != 2) return false;
  return true;
}

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (std::int64_t n = 3; n <= 16; ++n)
    for (const auto& f : abelian_groups_of_order(n)) {
      if (exponent_two(make_abelian(f))) continue;  // inversion is trivial there
      out.push_back({"Dih(" + factors_name(f) + ")", Family::Dihedral,
                     make_family(DihedralSpec{f})});
    }
  for (std::int64_t n : {4, 6, 8, 12, 16})
    for (const auto& f : abelian_groups_of_order(n)) {
      const auto A = make_abelian(f);
      if (exponent_two(A)) continue;
      // 2n^2 + 6n + 8 needs y to be the unique involution; the others still
      // count as general instances
      const auto invs = involutions_of(A);
      for (const auto& y : invs) {
        std::string ys;
        for (int v : y.t) ys += (ys.empty() ? "" : ",") + std::to_string(v);
        out.push_back({"Dic(" + factors_name(f) + "; y=" + ys + ")",
                       invs.size() == 1 ? Family::Dicyclic : Family::General,
                       make_family(DicyclicSpec{f, y.t})});
      }
    }
  for (std::int64_t n = 3; n <= 16; ++n)
    for (std::int64_t s = 2; s < n; ++s)
      for (std::int64_t t = 0; t < n; ++t)
        if (g2_params_valid(n, s, t))
          out.push_back({"G2(" + std::to_string(n) + "," + std::to_string(s) + "," +
                             std::to_string(t) + ")",
                         Family::G2, make_family(G2Spec{n, s, t})});

  std::mt19937 rng(20240917);
  int made = 0;
  while (made < 60) {
    const auto n = std::uniform_int_distribution<std::int64_t>(3, 24)(rng);
    const auto groups = abelian_groups_of_order(n);
    const auto& f = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    const auto A = make_abelian(f);
    std::vector<Involution> invs;
    for (const auto& cand : diagonal_involutions(A)) {
      try {
        invs.push_back(make_involution(A, cand.s));
      } catch (const Error&) {
      }
    }
    if (invs.empty()) continue;
    const auto inv = invs[std::uniform_int_distribution<std::size_t>(0, invs.size() - 1)(rng)];
    const auto fd = fixed_data(A, inv);
    std::vector<AbElem> ys;
    for (const auto& a : A.elements())
      if (fd.is_fixed(a)) ys.push_back(a);
    const auto y = ys[std::uniform_int_distribution<std::size_t>(0, ys.size() - 1)(rng)];
    std::string name = "D2(" + factors_name(f) + "; s=";
    for (int v : inv.s) name += std::to_string(v) + " ";
    name += "y=";
    for (int v : y.t) name += std::to_string(v) + " ";
    name.back() = ')';
    out.push_back({name, Family::General, make_d2(A, inv, y)});
    ++made;
  }
  return out;
}

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::map<int, Criterion> C{
      {1, {"closed form equals dim T0, dim T~ and the algebra closure on every instance"}},
      {2, {"named dimensions S3 = 11, D4 = 28, Q8 = 28, G2(8,3,0) = 64"}},
      {3, {"dicyclic dims equal 2n^2 + 6n + 8, dihedral d = 2^lambda"}},
      {4, {"character tables square, degrees, orthogonality, two-dim rows vanish on cosets"}},
      {5, {"multiplicities agree three ways, sum d^2 = dim T~, sum d deg = |G|, named vectors"}},
      {6, {"central idempotents for |G| <= 32"}},
      {7, {"scheme axioms, class product cases, closed-form classes equal brute force"}},
      {8, {"sandwich dim T0 <= dim T <= dim T~ before equality"}},
  };

  const auto all = instances();
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& inst : all) ++counts[static_cast<int>(inst.family)];

  for (const auto& inst : all) {
    const auto& G = inst.G;
    const auto& nm = inst.name;
    try {
      const auto T = cayley_table(G);
      const auto cl = conjugacy_classes(G);
      const ClassAlgebra alg(G, cl);

      // brute-force references
      const auto bf_classes = oracle::classes(T);
      const auto cent = oracle::centralizer_orders(T);
      const auto dim_cent = oracle::centralizer_dim(T);
      const auto dim_t0 = oracle::t0_dim(T, bf_classes);
      auto gens = adjacency_matrices(G, cl);
      const auto E = dual_idempotents(G, cl);
      gens.insert(gens.end(), E.begin(), E.end());
      const auto dim_closure = static_cast<std::int64_t>(algebra_dimension(gens));

      // 8: inclusions first
      C[8].expect(dim_t0 <= dim_closure,
                  nm + ": T0 subset T broken, " + str(dim_t0) + " > " + str(dim_closure));
      C[8].expect(dim_closure <= dim_cent,
                  nm + ": T subset T~ broken, " + str(dim_closure) + " > " + str(dim_cent));

      // 1
      const auto formula = dim_closed_form(G);
      const bool eq = dim_t0 == formula && dim_cent == formula && dim_closure == formula &&
                      dim_T0_triples(alg) == formula;
      C[1].expect(eq, nm + ": T0 " + str(dim_t0) + ", T~ " + str(dim_cent) + ", T " +
                          str(dim_closure) + ", formula " + str(formula));
      if (G.size() <= 24)
        C[1].expect(oracle::orbit_count(T) == dim_cent, nm + ": orbit count differs from T~");

      // 3
      if (inst.family == Family::Dicyclic) {
        const auto m = G.n() / 2;
        C[3].expect(formula == 2 * m * m + 6 * m + 8,
                    nm + ": " + str(formula) + " != " + str(2 * m * m + 6 * m + 8));
      }
      if (inst.family == Family::Dihedral)
        C[3].expect(G.d() == (std::int64_t{1} << G.abelian().lambda()), nm + ": d != 2^lambda");

      // 4
      const auto table = character_table(G, cl);
      C[4].expect(table.rows() == cl.size(), nm + ": table is not square");
      std::int64_t deg2 = 0;
      for (int d : table.degrees) deg2 += d * d;
      C[4].expect(deg2 == G.order(), nm + ": sum deg^2 = " + str(deg2));
      try {
        verify_orthogonality(table, 1e-9);
        C[4].expect(true, "");
      } catch (const Error& e) {
        C[4].expect(false, nm + ": " + e.what());
      }
      for (std::size_t r = 0; r < table.rows(); ++r)
        for (std::size_t c = 0; c < cl.size(); ++c)
          if (table.degrees[r] == 2 && cl[c].kind == ClassKind::Coset)
            C[4].expect(table.value(r, c).is_zero(),
                        nm + ": " + to_string(table.labels[r]) + " non-zero on class " + str(c));

      // 5
      const auto rep = wedderburn_report(alg, G, table);
      C[5].expect(rep.all_agree(), nm + ": closed form, character sum, inner product disagree");
      std::int64_t sq = 0, weighted = 0;
      for (std::size_t j = 0; j < table.rows(); ++j) {
        const auto ip = oracle::inner_product(G, T, cent, table.labels[j]);
        const auto m = rep.closed_form.values[j];
        C[5].expect(std::abs(ip - std::complex<double>(static_cast<double>(m), 0)) < 1e-6,
                    nm + ": <psi, " + to_string(table.labels[j]) + "> != " + str(m));
        sq += m * m;
        weighted += m * table.degrees[j];
      }
      C[5].expect(sq == dim_cent, nm + ": sum d^2 = " + str(sq) + ", dim T~ = " + str(dim_cent));
      C[5].expect(weighted == G.order(), nm + ": sum d deg = " + str(weighted));

      // 6
      if (G.size() <= 32) {
        try {
          const auto ir = verify_central_idempotents(alg, table, rep.closed_form, kMatrixGuard, 1e-9);
          C[6].expect(ir.max_square_error <= 1e-9 && ir.sum_error <= 1e-9 &&
                          ir.max_product_error <= 1e-9,
                      nm + ": idempotent residuals too large");
        } catch (const Error& e) {
          C[6].expect(false, nm + ": " + e.what());
        }
      }

      // 7
      try {
        verify_scheme_axioms(alg, adjacency_matrices(G, cl));
        C[7].expect(true, "");
      } catch (const Error& e) {
        C[7].expect(false, nm + ": " + e.what());
      }
      const auto paired = check_paired_products(alg);
      C[7].expect(paired.empty(), nm + ": " + paired);
      const auto coset = check_coset_partition(alg);
      C[7].expect(coset.empty(), nm + ": " + coset);
      std::vector<std::vector<std::size_t>> formula_classes;
      for (const auto& c : cl.classes) formula_classes.push_back(c.elements);
      std::sort(formula_classes.begin(), formula_classes.end());
      auto bf_sorted = bf_classes;
      std::sort(bf_sorted.begin(), bf_sorted.end());
      C[7].expect(formula_classes == bf_sorted, nm + ": class partitions differ");
    } catch (const std::exception& e) {
      for (int k = 1; k <= 8; ++k) C[k].expect(false, nm + ": threw " + e.what());
    }
  }

  // 2 and the named vectors of 5, each against the brute-force scan first
  struct Named {
    const char* name;
    D2Group G;
    std::int64_t dim;
    std::vector<std::int64_t> mult;
  };
  const std::vector<Named> named{
      {"S3", make_family(DihedralSpec{{{3, 1}}}), 11, {3, 1, 1}},
      {"D4", make_family(DihedralSpec{{{2, 2}}}), 28, {5, 1, 1, 1, 0}},
      {"Q8", make_family(DicyclicSpec{{{2, 2}}, {2}}), 28, {5, 1, 1, 1, 0}},
      {"G2(8,3,0)", make_family(G2Spec{8, 3, 0}), 64, {}},
  };
  for (const auto& [name, G, dim, mult] : named) {
    const auto T = cayley_table(G);
    const auto scan = oracle::centralizer_dim(T);
    C[2].expect(scan == dim, std::string(name) + ": centralizer scan " + str(scan));
    C[2].expect(dim_closed_form(G) == scan, std::string(name) + ": closed form " +
                                                str(dim_closed_form(G)));
    if (mult.empty()) continue;
    const auto cent = oracle::centralizer_orders(T);
    const auto cl = conjugacy_classes(G);
    const auto table = character_table(G, cl);
    std::vector<std::int64_t> ip;
    for (const auto& label : table.labels)
      ip.push_back(std::llround(oracle::inner_product(G, T, cent, label).real()));
    C[5].expect(ip == mult, std::string(name) + ": inner-product vector differs");
    C[5].expect(multiplicities_closed_form(G, table).values == ip,
                std::string(name) + ": closed-form vector differs");
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("instances: %zu dihedral, %zu dicyclic, %zu g2, %zu general\n", counts[0],
              counts[1], counts[2], counts[3]);
  bool ok = true;
  for (auto& [k, c] : C) {
    const bool pass = c.failures.empty() && c.checked > 0;
    ok = ok && pass;
    std::printf("%s criterion %d: %s (%zu checks)\n", pass ? "PASS" : "FAIL", k, c.title.c_str(),
                c.checked);
    for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i)
      std::printf("    %s\n", c.failures[i].c_str());
  }
  const bool fast = secs < 60.0;
  std::printf("%s runtime %.1f s (limit 60 s)\n", fast ? "PASS" : "FAIL", secs);
  return ok && fast ? 0 : 1;
}
