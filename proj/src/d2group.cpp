#include "terw/d2group.hpp"

#include <numeric>

#include "terw/error.hpp"

namespace terw {

namespace {

std::int64_t mod64(std::int64_t x, std::int64_t m) {
  auto r = x % m;
  return r < 0 ? r + m : r;
}

std::string format_elem(const AbElem& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.t.size(); ++i) s += (i ? "," : "") + std::to_string(x.t[i]);
  return s + ")";
}

}  // namespace

D2Group make_d2(AbelianGroup A, Involution f, AbElem y) {
  if (!A.contains(y))
    throw Error(ErrorKind::DimensionMismatch, "y = " + format_elem(y) + " is not an element of A");
  // re-validate f against this A (also rejects the identity)
  f = make_involution(A, f.s);
  if (apply(A, f, y) != y)
    throw Error(ErrorKind::YNotFixed, "f(y) = " + format_elem(apply(A, f, y)) + " but y = " +
                                          format_elem(y) + "; b y b^-1 must equal y");
  D2Group G;
  G.fixed_ = fixed_data(A, f);
  G.A_ = std::move(A);
  G.f_ = std::move(f);
  G.y_ = std::move(y);
  return G;
}

D2Elem d2_mul(const D2Group& G, const D2Elem& g, const D2Elem& h) {
  const auto& A = G.abelian();
  AbElem a = ab_mul(A, g.a, g.beta ? apply(A, G.involution(), h.a) : h.a);
  if (g.beta + h.beta == 2) a = ab_mul(A, a, G.y());
  return {std::move(a), (g.beta + h.beta) % 2};
}

D2Elem d2_inv(const D2Group& G, const D2Elem& g) {
  const auto& A = G.abelian();
  if (g.beta == 0) return {ab_inv(A, g.a), 0};
  // (a b)^{-1} = b^{-1} a^{-1} = y^{-1} b a^{-1} = y^{-1} f(a)^{-1} b
  return {ab_inv(A, ab_mul(A, G.y(), apply(A, G.involution(), g.a))), 1};
}

CayleyTable cayley_table(const D2Group& G) {
  CayleyTable T;
  T.size = G.size();
  T.mul.resize(T.size * T.size);
  T.inv.resize(T.size);
  std::vector<D2Elem> elems;
  elems.reserve(T.size);
  for (std::size_t i = 0; i < T.size; ++i) elems.push_back(G.element_at(i));
  for (std::size_t i = 0; i < T.size; ++i) {
    for (std::size_t j = 0; j < T.size; ++j)
      T.mul[i * T.size + j] = static_cast<std::uint32_t>(G.index_of(d2_mul(G, elems[i], elems[j])));
    T.inv[i] = static_cast<std::uint32_t>(G.index_of(d2_inv(G, elems[i])));
  }
  return T;
}

std::vector<AbElem> involutions_of(const AbelianGroup& A) {
  std::vector<AbElem> out;
  for (const auto& x : A.elements())
    if (A.element_order(x) == 2) out.push_back(x);
  return out;
}

AbElem cyclic_to_crt(const AbelianGroup& A, std::int64_t k) {
  AbElem x{std::vector<int>(A.rank())};
  for (std::size_t i = 0; i < A.rank(); ++i)
    x.t[i] = static_cast<int>(mod64(k, A.modulus(i)));
  return x;
}

bool g2_params_valid(std::int64_t n, std::int64_t s, std::int64_t t, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (n < 3) return fail("n must be >= 3");
  if (mod64(s * s, n) != 1) return fail("s^2 != 1 mod n");
  if (mod64(s, n) == 1) return fail("s == 1 mod n (the group would be abelian)");
  if (std::gcd(mod64(s, n), n) != 1) return fail("gcd(s, n) != 1");
  if (mod64(t * (s - 1), n) != 0) return fail("t(s - 1) != 0 mod n");
  return true;
}

namespace {

struct FamilyBuilder {
  std::vector<std::string>* warnings;

  D2Group operator()(const DihedralSpec& spec) const {
    auto A = make_abelian(spec.factors);
    std::vector<int> s(A.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) s[i] = A.modulus(i) - 1;
    auto f = make_involution(A, s);
    auto e = A.identity();
    return make_d2(std::move(A), std::move(f), std::move(e));
  }

  D2Group operator()(const DicyclicSpec& spec) const {
    auto A = make_abelian(spec.factors);
    if (A.order() % 2 != 0) throw Error(ErrorKind::BadDicyclicY, "|A| must be even");
    if (spec.y.size() != A.rank())
      throw Error(ErrorKind::BadDicyclicY, "y must have one exponent per cyclic factor");
    AbElem y{spec.y};
    for (std::size_t i = 0; i < A.rank(); ++i) y.t[i] = static_cast<int>(mod64(y.t[i], A.modulus(i)));
    if (A.element_order(y) != 2)
      throw Error(ErrorKind::BadDicyclicY, "y must have order exactly 2");
    if (warnings && involutions_of(A).size() > 1)
      warnings->push_back("y is not the unique involution of A (A has " +
                          std::to_string(involutions_of(A).size()) + " elements of order 2)");
    std::vector<int> s(A.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) s[i] = A.modulus(i) - 1;
    auto f = make_involution(A, s);
    return make_d2(std::move(A), std::move(f), std::move(y));
  }

  D2Group operator()(const G2Spec& spec) const {
    std::string why;
    if (!g2_params_valid(spec.n, spec.s, spec.t, &why)) throw Error(ErrorKind::BadG2Params, why);
    auto A = make_abelian(factorize(spec.n));
    std::vector<int> s(A.rank());
    for (std::size_t i = 0; i < A.rank(); ++i) s[i] = static_cast<int>(mod64(spec.s, A.modulus(i)));
    auto f = make_involution(A, s);
    auto y = cyclic_to_crt(A, spec.t);
    return make_d2(std::move(A), std::move(f), std::move(y));
  }
};

}  // namespace

D2Group make_family(const FamilySpec& spec, std::vector<std::string>* warnings) {
  return std::visit(FamilyBuilder{warnings}, spec);
}

}  // namespace terw
