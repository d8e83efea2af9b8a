#include "terw/characters.hpp"

#include <cmath>
#include <numeric>

#include "terw/error.hpp"

namespace terw {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Steps through a mixed-radix counter; false once it wraps to zero.
bool advance(std::vector<int>& x, const std::vector<int>& radix) {
  for (std::size_t c = x.size(); c-- > 0;) {
    if (++x[c] < radix[c]) return true;
    x[c] = 0;
  }
  return false;
}

}  // namespace

std::string to_string(const CharLabel& label) {
  if (const auto* lin = std::get_if<LinearLabel>(&label))
    return "chi[" + join(lin->ell) + ";" + std::to_string(lin->sign) + "]";
  return "phi[" + join(std::get<TwoDimLabel>(label).k) + "]";
}

std::int64_t root_order(const D2Group& G) {
  std::int64_t l = 1;
  for (const auto& c : G.abelian().factors()) l = std::lcm(l, static_cast<std::int64_t>(c.m));
  return 2 * l;
}

std::vector<CharLabel> character_labels(const D2Group& G) {
  const auto& A = G.abelian();
  const auto& fd = G.fixed();
  std::vector<CharLabel> out;

  std::vector<int> ell(A.rank(), 0);
  do {
    out.emplace_back(LinearLabel{ell, 1});
    out.emplace_back(LinearLabel{ell, 2});
  } while (advance(ell, fd.d_vec));

  std::vector<int> moduli;
  for (const auto& c : A.factors()) moduli.push_back(c.m);
  std::vector<int> k(A.rank(), 0);
  do {
    bool trivial_on_B = true;
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] % fd.n_vec[i] != 0) trivial_on_B = false;
    if (trivial_on_B) continue;
    std::vector<int> ks(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
      ks[i] = static_cast<int>(static_cast<std::int64_t>(k[i]) * G.involution().s[i] % moduli[i]);
    if (k < ks) out.emplace_back(TwoDimLabel{k});
  } while (advance(k, moduli));
  return out;
}

RootSum char_value_at(const D2Group& G, const CharLabel& label, const D2Elem& g) {
  const auto& A = G.abelian();
  const auto& fd = G.fixed();
  const std::int64_t M = root_order(G);

  if (const auto* lin = std::get_if<LinearLabel>(&label)) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < A.rank(); ++i) {
      if (g.beta == 0) {
        e += static_cast<std::int64_t>(lin->ell[i]) * g.a.t[i] * (M / fd.d_vec[i]);
      } else {
        // zeta_{d_i}^{l_i (t_i + v_i / 2)} = zeta_{2 d_i}^{l_i (2 t_i + v_i)}
        e += static_cast<std::int64_t>(lin->ell[i]) * (2 * g.a.t[i] + G.y().t[i]) *
             (M / (2 * fd.d_vec[i]));
      }
    }
    return RootSum::zeta(M, e, (g.beta == 1 && lin->sign == 2) ? -1 : 1);
  }

  const auto& k = std::get<TwoDimLabel>(label).k;
  if (g.beta == 1) return RootSum::zero(M);
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  for (std::size_t i = 0; i < A.rank(); ++i) {
    const std::int64_t step = M / A.modulus(i);
    e1 += static_cast<std::int64_t>(k[i]) * g.a.t[i] * step;
    e2 += static_cast<std::int64_t>(k[i]) * g.a.t[i] % A.modulus(i) * G.involution().s[i] * step;
  }
  return RootSum::zeta(M, e1) + RootSum::zeta(M, e2);
}

RootSum char_value(const D2Group& G, const ClassList& classes, const CharLabel& label,
                   std::size_t class_index) {
  return char_value_at(G, label, classes[class_index].rep);
}

CharacterTable character_table(const D2Group& G, const ClassList& classes) {
  CharacterTable T;
  T.root_order = root_order(G);
  T.group_order = G.order();
  T.labels = character_labels(G);
  for (const auto& l : T.labels) T.degrees.push_back(degree(l));
  for (const auto& c : classes.classes) T.class_sizes.push_back(c.size());
  T.values.reserve(T.rows() * T.cols());
  for (const auto& l : T.labels)
    for (std::size_t c = 0; c < classes.size(); ++c) T.values.push_back(char_value(G, classes, l, c));
  return T;
}

OrthogonalityReport verify_orthogonality(const CharacterTable& table, double tol) {
  const std::size_t R = table.rows();
  const std::size_t C = table.cols();
  if (R != C)
    throw Error(ErrorKind::OrthogonalityFailure, std::to_string(R) + " characters for " +
                                                     std::to_string(C) + " classes");
  std::vector<std::complex<double>> v(R * C);
  for (std::size_t i = 0; i < R * C; ++i) v[i] = table.values[i].eval();
  const double order = static_cast<double>(table.group_order);

  OrthogonalityReport rep;
  for (std::size_t r = 0; r < R; ++r) {
    for (std::size_t t = 0; t < R; ++t) {
      std::complex<double> s = 0;
      for (std::size_t c = 0; c < C; ++c)
        s += static_cast<double>(table.class_sizes[c]) * v[r * C + c] * std::conj(v[t * C + c]);
      s /= order;
      const double err = std::abs(s - std::complex<double>(r == t ? 1.0 : 0.0));
      rep.max_row_error = std::max(rep.max_row_error, err);
      if (err > tol)
        throw Error(ErrorKind::OrthogonalityFailure,
                    "rows " + to_string(table.labels[r]) + " and " + to_string(table.labels[t]) +
                        " (deviation " + std::to_string(err) + ")");
    }
  }
  for (std::size_t u = 0; u < C; ++u) {
    for (std::size_t w = 0; w < C; ++w) {
      std::complex<double> s = 0;
      for (std::size_t r = 0; r < R; ++r) s += v[r * C + u] * std::conj(v[r * C + w]);
      const double expect = u == w ? order / static_cast<double>(table.class_sizes[u]) : 0.0;
      const double err = std::abs(s - expect);
      rep.max_column_error = std::max(rep.max_column_error, err);
      if (err > tol)
        throw Error(ErrorKind::OrthogonalityFailure,
                    "columns " + std::to_string(u) + " and " + std::to_string(w) + " (deviation " +
                        std::to_string(err) + ")");
    }
  }
  return rep;
}

}  // namespace terw
