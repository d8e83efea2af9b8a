#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "terw/error.hpp"

using namespace terw;
using namespace terw::testing;

namespace {

void check_group_axioms(const D2Group& G) {
  const auto T = cayley_table(G);
  const std::size_t N = T.size;
  const auto e = G.index_of(G.identity());
  REQUIRE(e == 0);
  for (std::size_t g = 0; g < N; ++g) {
    CHECK(T(e, g) == g);
    CHECK(T(g, e) == g);
    CHECK(T(g, T.inv[g]) == e);
    CHECK(T(T.inv[g], g) == e);
  }
  if (N <= 32) {
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b)
        for (std::size_t c = 0; c < N; ++c) REQUIRE(T(T(a, b), c) == T(a, T(b, c)));
  } else {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, N - 1);
    for (int k = 0; k < 10000; ++k) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(T(T(a, b), c) == T(a, T(b, c)));
    }
  }
}

std::int64_t order_of(const CayleyTable& T, std::size_t g) {
  std::int64_t k = 1;
  for (std::size_t x = g; x != 0; x = T(x, g)) ++k;
  return k;
}

}  // namespace

TEST_CASE("make_d2 and the presentation") {
  const auto A = make_abelian({{2, 2}});
  const auto f = make_involution(A, {3});
  const auto D4 = make_d2(A, f, AbElem{{0}});
  CHECK(D4.order() == 8);
  CHECK(D4.d() == 2);

  const auto Q8 = make_d2(A, f, AbElem{{2}});
  CHECK(Q8.order() == 8);

  try {
    make_d2(A, f, AbElem{{1}});
    FAIL("expected YNotFixed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::YNotFixed);
  }
}

TEST_CASE("normal-form multiplication") {
  const auto D4 = d4();
  const D2Elem ab{AbElem{{1}}, 1};
  CHECK(d2_mul(D4, ab, ab) == D4.identity());

  const auto Q8 = q8();
  CHECK(d2_mul(Q8, ab, ab) == D2Elem{AbElem{{2}}, 0});
  CHECK(d2_mul(Q8, Q8.b(), Q8.b()) == D2Elem{Q8.y(), 0});

  for (const auto* G : {&D4, &Q8})
    for (std::size_t i = 0; i < G->size(); ++i) {
      const auto g = G->element_at(i);
      CHECK(d2_mul(*G, g, d2_inv(*G, g)) == G->identity());
    }
}

TEST_CASE("Q8 is the quaternion group") {
  // the only non-abelian group of order 8 with a unique involution
  const auto T = cayley_table(q8());
  int involutions = 0;
  bool abelian = true;
  for (std::size_t g = 1; g < T.size; ++g) {
    if (order_of(T, g) == 2) ++involutions;
    for (std::size_t h = 0; h < T.size; ++h) abelian = abelian && T(g, h) == T(h, g);
  }
  CHECK(involutions == 1);
  CHECK_FALSE(abelian);
  const auto central = q8().index_of({AbElem{{2}}, 0});
  for (std::size_t g = 1; g < T.size; ++g)
    if (g != central) CHECK(order_of(T, g) == 4);
}

TEST_CASE("family constructors") {
  const auto S3 = s3();
  CHECK(S3.order() == 6);
  CHECK(S3.d() == 1);

  const auto SD = sd16();
  CHECK(SD.order() == 16);
  CHECK(SD.d() == 2);
  const auto T = cayley_table(SD);
  CHECK(order_of(T, SD.index_of({cyclic_to_crt(SD.abelian(), 1), 0})) == 8);

  const auto Q = q8();
  CHECK(Q.d() == 2);

  std::vector<std::string> warnings;
  const auto dic = make_family(DicyclicSpec{{{2, 1}, {2, 2}}, {0, 2}}, &warnings);
  CHECK(dic.d() == 4);
  CHECK(warnings.size() == 1);

  auto kind_of = [](const FamilySpec& spec) {
    try {
      make_family(spec);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidSpec;
  };
  CHECK(kind_of(G2Spec{8, 5, 1}) == ErrorKind::BadG2Params);  // t(s-1) = 4
  CHECK(kind_of(G2Spec{8, 1, 0}) == ErrorKind::BadG2Params);
  CHECK(kind_of(G2Spec{8, 2, 0}) == ErrorKind::BadG2Params);
  CHECK(kind_of(DicyclicSpec{{{2, 2}}, {1}}) == ErrorKind::BadDicyclicY);
  CHECK(kind_of(DicyclicSpec{{{3, 1}}, {0}}) == ErrorKind::BadDicyclicY);
  CHECK(kind_of(DihedralSpec{{{2, 1}, {2, 1}}}) == ErrorKind::IdentityAutomorphism);
}

TEST_CASE("dihedral d = 2^lambda, dicyclic d = 2") {
  for (std::int64_t n = 3; n <= 16; ++n)
    for (const auto& factors : abelian_groups_of_order(n)) {
      const auto A = make_abelian(factors);
      bool exponent_two = true;
      for (const auto& c : A.factors()) exponent_two = exponent_two && c.m == 2;
      if (exponent_two) continue;
      const auto G = make_family(DihedralSpec{factors});
      CHECK(G.d() == (std::int64_t{1} << A.lambda()));
    }
  for (std::int64_t n : {4, 6, 8, 12, 16})
    for (const auto& factors : abelian_groups_of_order(n)) {
      const auto A = make_abelian(factors);
      const auto inv = involutions_of(A);
      if (inv.size() != 1) continue;
      const auto G = make_family(DicyclicSpec{factors, inv.front().t});
      CHECK(G.d() == 2);
    }
}

TEST_CASE("group axioms and structure for small instances") {
  std::vector<D2Group> groups{s3(), d4(), q8(), sd16()};
  for (std::int64_t n = 3; n <= 16; ++n)
    for (std::int64_t s = 2; s < n; ++s)
      for (std::int64_t t = 0; t < n; ++t)
        if (g2_params_valid(n, s, t)) groups.push_back(make_family(G2Spec{n, s, t}));
  groups.push_back(make_family(DicyclicSpec{{{2, 1}, {2, 2}}, {0, 2}}));
  groups.push_back(make_family(DihedralSpec{{{2, 1}, {2, 1}, {3, 1}}}));

  for (const auto& G : groups) {
    check_group_axioms(G);
    // A is an abelian subgroup of index 2 and b acts on it by f
    const auto& A = G.abelian();
    for (const auto& a : A.elements()) {
      const D2Elem x{a, 0};
      CHECK(d2_mul(G, d2_mul(G, G.b(), x), d2_inv(G, G.b())) ==
            D2Elem{apply(A, G.involution(), a), 0});
      for (const auto& a2 : A.elements())
        CHECK(d2_mul(G, x, {a2, 0}) == d2_mul(G, {a2, 0}, x));
    }
    CHECK(d2_mul(G, G.b(), G.b()) == D2Elem{G.y(), 0});
  }
}

TEST_CASE("G2 CRT coordinates are faithful") {
  for (std::int64_t n : {6, 10, 12, 15, 24, 30}) {
    const auto A = make_abelian(factorize(n));
    const auto a = cyclic_to_crt(A, 1);
    CHECK(A.element_order(a) == n);
    for (std::int64_t k = 0; k < n; ++k)
      CHECK(cyclic_to_crt(A, k) == ab_pow(A, a, k));
  }
}
