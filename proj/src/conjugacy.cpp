#include "terw/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "terw/error.hpp"

namespace terw {

std::string_view to_string(ClassKind k) noexcept {
  switch (k) {
    case ClassKind::Fixed: return "fixed";
    case ClassKind::Paired: return "paired";
    case ClassKind::Coset: return "coset";
  }
  return "?";
}

namespace {

void finish(ClassList& list, std::size_t group_size) {
  list.class_of.assign(group_size, 0);
  list.num_fixed = list.num_paired = list.num_coset = 0;
  for (std::size_t c = 0; c < list.classes.size(); ++c) {
    auto& cl = list.classes[c];
    cl.index = c;
    for (auto e : cl.elements) list.class_of[e] = c;
    switch (cl.kind) {
      case ClassKind::Fixed: ++list.num_fixed; break;
      case ClassKind::Paired: ++list.num_paired; break;
      case ClassKind::Coset: ++list.num_coset; break;
    }
  }
}

}  // namespace

ClassList conjugacy_classes(const D2Group& G) {
  if (G.size() > kFormulaGuard)
    throw Error(ErrorKind::GuardExceeded, "|G| = " + std::to_string(G.order()) +
                                              " exceeds the explicit-class guard");
  const auto& A = G.abelian();
  const auto& fd = G.fixed();
  const auto n = static_cast<std::size_t>(G.n());
  ClassList list;

  const auto elems = A.elements();
  for (std::size_t i = 0; i < n; ++i)
    if (fd.is_fixed(elems[i])) list.classes.push_back({ClassKind::Fixed, {elems[i], 0}, {i}, 0});

  for (std::size_t i = 0; i < n; ++i) {
    if (fd.is_fixed(elems[i])) continue;
    const auto j = A.index_of(apply(A, G.involution(), elems[i]));
    if (i < j) list.classes.push_back({ClassKind::Paired, {elems[i], 0}, {i, j}, 0});
  }

  // coset representatives z with 0 <= z_i < d_i
  std::vector<int> z(A.rank(), 0);
  while (true) {
    ConjClass cl{ClassKind::Coset, {AbElem{z}, 1}, {}, 0};
    for (std::size_t i = 0; i < n; ++i) {
      bool in = true;
      for (std::size_t c = 0; c < A.rank() && in; ++c)
        in = (elems[i].t[c] - z[c]) % fd.d_vec[c] == 0;
      if (in) cl.elements.push_back(n + i);
    }
    list.classes.push_back(std::move(cl));
    std::size_t c = A.rank();
    while (c > 0 && ++z[c - 1] == fd.d_vec[c - 1]) z[--c] = 0;
    if (c == 0) break;
  }
  finish(list, G.size());
  return list;
}

ClassList conjugacy_classes_bruteforce(const D2Group& G, std::size_t guard) {
  if (G.size() > guard)
    throw Error(ErrorKind::GuardExceeded, "|G| = " + std::to_string(G.order()) +
                                              " exceeds the brute-force guard " +
                                              std::to_string(guard));
  const auto T = cayley_table(G);
  const std::size_t N = T.size;
  const auto n = static_cast<std::size_t>(G.n());
  std::vector<bool> seen(N, false);
  ClassList list;
  for (std::size_t g = 0; g < N; ++g) {
    if (seen[g]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t h = 0; h < N; ++h) {
      const auto c = T.conj(h, g);
      if (!seen[c]) {
        seen[c] = true;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ClassKind kind = orbit.front() >= n    ? ClassKind::Coset
                     : orbit.size() == 1 ? ClassKind::Fixed
                                         : ClassKind::Paired;
    list.classes.push_back({kind, G.element_at(orbit.front()), std::move(orbit), 0});
  }
  std::stable_sort(list.classes.begin(), list.classes.end(),
                   [](const ConjClass& a, const ConjClass& b) {
                     return std::tuple(static_cast<int>(a.kind), a.elements.front()) <
                            std::tuple(static_cast<int>(b.kind), b.elements.front());
                   });
  finish(list, N);
  return list;
}

std::size_t class_of(const D2Group& G, const ClassList& classes, const D2Elem& g) {
  return classes.class_of.at(G.index_of(g));
}

bool same_partition(const ClassList& a, const ClassList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].kind != b[i].kind || a[i].elements != b[i].elements || !(a[i].rep == b[i].rep))
      return false;
  return a.class_of == b.class_of;
}

ClassAlgebra::ClassAlgebra(const D2Group& G, const ClassList& classes)
    : table_(cayley_table(G)), classes_(classes) {}

std::int64_t ClassAlgebra::structure_constant_at(std::size_t i, std::size_t j,
                                                 std::size_t y) const {
  std::int64_t count = 0;
  for (auto z : classes_[i].elements)
    if (classes_.class_of[table_(y, table_.inv[z])] == j) ++count;
  return count;
}

std::int64_t ClassAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  return structure_constant_at(i, j, classes_[k].elements.front());
}

std::vector<std::size_t> ClassAlgebra::class_products(std::size_t i, std::size_t j) const {
  std::vector<bool> hit(classes_.size(), false);
  for (auto g : classes_[i].elements)
    for (auto h : classes_[j].elements) hit[classes_.class_of[table_(g, h)]] = true;
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < hit.size(); ++k)
    if (hit[k]) out.push_back(k);
  return out;
}

std::int64_t ClassAlgebra::triple_count() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    for (std::size_t j = 0; j < classes_.size(); ++j)
      total += static_cast<std::int64_t>(class_products(i, j).size());
  return total;
}

std::int64_t structure_constant(const D2Group& G, const ClassList& classes, std::size_t i,
                                std::size_t j, std::size_t k) {
  return ClassAlgebra(G, classes).structure_constant(i, j, k);
}

std::vector<std::size_t> class_products(const D2Group& G, const ClassList& classes,
                                        std::size_t i, std::size_t j) {
  return ClassAlgebra(G, classes).class_products(i, j);
}

std::string check_paired_products(const ClassAlgebra& alg) {
  const auto& cls = alg.classes();
  const auto& T = alg.table();
  for (const auto& U : cls.classes) {
    if (U.kind != ClassKind::Paired) continue;
    for (const auto& V : cls.classes) {
      if (V.kind != ClassKind::Paired) continue;
      // elements[0] is y, elements[1] is f(y)
      const auto first = cls.class_of[T(U.elements[0], V.elements[0])];
      const auto second = cls.class_of[T(U.elements[0], V.elements[1])];
      const auto where = "classes " + std::to_string(U.index) + "," + std::to_string(V.index);
      if (first == second) return where + ": Cl(y_r y_j) == Cl(y_r f(y_j))";
      std::vector<std::size_t> expect{std::min(first, second), std::max(first, second)};
      if (alg.class_products(U.index, V.index) != expect)
        return where + ": product is not Cl(y_r y_j) u Cl(y_r f(y_j))";
    }
  }
  return {};
}

std::string check_coset_partition(const ClassAlgebra& alg) {
  const auto& cls = alg.classes();
  const auto& T = alg.table();
  const std::size_t n = T.size / 2;
  for (const auto& U : cls.classes) {
    if (U.kind != ClassKind::Coset) continue;
    std::vector<int> owner(n, -1);
    for (const auto& V : cls.classes) {
      if (V.kind != ClassKind::Coset) continue;
      std::vector<std::size_t> prod;
      for (auto g : U.elements)
        for (auto h : V.elements) prod.push_back(T(g, h));
      std::sort(prod.begin(), prod.end());
      prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
      for (auto p : prod) {
        if (p >= n) return "C_" + std::to_string(U.index) + " C_" + std::to_string(V.index) + " leaves A";
        if (owner[p] != -1 && owner[p] != static_cast<int>(V.index))
          return "C_" + std::to_string(U.index) + " products with classes " +
                 std::to_string(owner[p]) + " and " + std::to_string(V.index) + " overlap";
        owner[p] = static_cast<int>(V.index);
      }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end())
      return "products of C_" + std::to_string(U.index) + " do not cover A";
  }
  return {};
}

}  // namespace terw
