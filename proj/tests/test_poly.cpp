#include <random>

#include "doctest.h"
#include "kpmod/poly.hpp"

using namespace kp;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

MultiPoly random_poly(std::mt19937& rng, int n, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-4, 4);
  MultiPoly p(n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> exp(n);
    for (auto& v : exp) v = e(rng);
    p.add_term(exp, c(rng));
  }
  return p;
}

MultiPoly swap_vars(const MultiPoly& f, int i) {
  return f.substitute(
      [&](int v) {
        if (v == i) return x(f.n, i + 1);
        if (v == i + 1) return x(f.n, i);
        return x(f.n, v);
      },
      f.n);
}

}  // namespace

TEST_CASE("divided difference examples") {
  // (f - s_i f) = (x_i - x_{i+1}) * divided_difference(f, i) is the defining
  // identity and serves as the oracle.
  CHECK(divided_difference(x(2, 1), 1) == MultiPoly::constant(2, 1));
  MultiPoly sym = x(3, 1) * x(3, 2) + x(3, 1) + x(3, 2);
  CHECK(divided_difference(sym, 1).is_zero());
  MultiPoly f = x(3, 1) * x(3, 1) * x(3, 2);
  CHECK(divided_difference(f, 1) == x(3, 1) * x(3, 2));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + t % 3;
    MultiPoly p = random_poly(rng, n, 5, 6);
    for (int i = 1; i < n; ++i) {
      MultiPoly lhs = (x(n, i) - x(n, i + 1)) * divided_difference(p, i);
      CHECK(lhs == p - swap_vars(p, i));
    }
  }
}

TEST_CASE("divided difference relations") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    int n = 3 + t % 2;
    MultiPoly p = random_poly(rng, n, 6, 8);
    for (int i = 1; i < n; ++i)
      CHECK(divided_difference(divided_difference(p, i), i).is_zero());
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        CHECK(divided_difference(divided_difference(p, i), j) ==
              divided_difference(divided_difference(p, j), i));
    for (int i = 1; i + 1 < n; ++i) {
      MultiPoly a = divided_difference(
          divided_difference(divided_difference(p, i), i + 1), i);
      MultiPoly b = divided_difference(
          divided_difference(divided_difference(p, i + 1), i), i + 1);
      CHECK(a == b);
    }
  }
}

TEST_CASE("schubert polynomials") {
  CHECK(schubert_poly(Permutation::identity(), 3) == MultiPoly::constant(3, 1));
  CHECK(schubert_poly(Permutation::parse("321"), 3) ==
        MultiPoly::monomial({2, 1, 0}));
  CHECK(schubert_poly(Permutation::parse("132"), 3) == x(3, 1) + x(3, 2));
  // The box-maximal weight of S_w is code(w) with coefficient 1 and every
  // other exponent sits below it.
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(0, 4);
  std::vector<Permutation> pool = all_sn(4);
  for (int t = 0; t < 20; ++t) {
    WeightVec lam(4);
    for (auto& v : lam) v = d(rng);
    pool.push_back(Permutation::from_code(lam));
  }
  for (const auto& w : pool) {
    MultiPoly s = schubert_poly(w, 4);
    WeightVec lam = w.code(4);
    CHECK(s.terms.at(lam) == 1);
    for (const auto& [e, c] : s.terms) {
      CHECK(c > 0);
      CHECK(weight_leq(e, lam, OrderKind::prec));
    }
  }
}

TEST_CASE("schubert expansion") {
  CHECK(schubert_expand(MultiPoly(3)).empty());
  auto exp = schubert_expand(x(3, 1) * x(3, 2));
  CHECK(exp.size() == 1);
  CHECK(exp.at(Permutation::parse("231")) == 1);
  // (x1+1)^2 (x2+1): coefficients against evaluation at 1
  MultiPoly one = MultiPoly::constant(3, 1);
  MultiPoly f = (x(3, 1) + one) * (x(3, 1) + one) * (x(3, 2) + one);
  Int total = 0;
  for (const auto& [w, c] : schubert_expand(f))
    total += c * specialize_ones(schubert_poly(w, 3));
  CHECK(total == 8);
  CHECK(f.eval_ones() == 8);
}

TEST_CASE("expand(schubert) is a delta") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(0, 4);
  std::vector<Permutation> pool = all_sn(4);
  for (int t = 0; t < 20; ++t) {
    WeightVec lam(4);
    for (auto& v : lam) v = d(rng);
    pool.push_back(Permutation::from_code(lam));
  }
  for (const auto& w : pool) {
    auto exp = schubert_expand(schubert_poly(w, 4));
    CHECK(exp.size() == 1);
    CHECK(exp.at(w) == 1);
  }
}

TEST_CASE("reduction to the coinvariant ring") {
  MultiPoly x1cube = MultiPoly::monomial({3, 0, 0});
  CHECK(reduce_Hn(x1cube, 3).is_zero());
  CHECK(reduce_Hn(x(3, 1) + x(3, 2) + x(3, 3), 3).is_zero());
  for (const auto& w : all_sn(3)) {
    auto e = reduce_Hn(schubert_poly(w, 3), 3);
    CHECK(e.coeffs.size() == 1);
    CHECK(e.coeffs.at(w) == 1);
  }
}

TEST_CASE("reduction is a ring map") {
  std::mt19937 rng(17);
  for (int t = 0; t < 10; ++t) {
    MultiPoly f = random_poly(rng, 3, 3, 4), g = random_poly(rng, 3, 3, 4);
    // restrict to nonnegative exponents is automatic here
    HnElement lhs = reduce_Hn(f * g, 3);
    HnElement rhs = hn_mul(reduce_Hn(f, 3), reduce_Hn(g, 3));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("the substitution involution") {
  int n = 3;
  Permutation w0 = Permutation::longest(n);
  HnElement top(n);
  top.coeffs[w0] = 1;
  CHECK(iota_Hn(top) == top);
  HnElement e(n);
  e.coeffs[Permutation::parse("213")] = 1;
  HnElement img = iota_Hn(e);
  CHECK(img.coeffs.size() == 1);
  CHECK(img.coeffs.at(Permutation::parse("132")) == 1);
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 8; ++t) {
    HnElement a(n), b(n);
    for (const auto& w : all_sn(n)) {
      a.coeffs[w] = c(rng);
      b.coeffs[w] = c(rng);
    }
    for (auto* p : {&a, &b})
      for (auto it = p->coeffs.begin(); it != p->coeffs.end();)
        it = (it->second == 0) ? p->coeffs.erase(it) : std::next(it);
    CHECK(iota_Hn(iota_Hn(a)) == a);
    CHECK(iota_Hn(hn_mul(a, b)) == hn_mul(iota_Hn(a), iota_Hn(b)));
    CHECK(iota_Hn(hn_add(a, b)) == hn_add(iota_Hn(a), iota_Hn(b)));
  }
}

TEST_CASE("cauchy identity") {
  for (int n = 1; n <= 4; ++n) {
    auto [lhs, rhs] = cauchy_product(n);
    CHECK(lhs == rhs);
  }
  auto [l1, r1] = cauchy_product(1);
  CHECK(l1 == MultiPoly::constant(2, 1));
  auto [l2, r2] = cauchy_product(2);
  CHECK(l2 == x(4, 1) + x(4, 3));  // x_1 + y_1 in the stacked variables
}

TEST_CASE("specialization at ones") {
  CHECK(specialize_ones(MultiPoly::constant(3, 1)) == 1);
  CHECK(specialize_ones(MultiPoly::monomial({2, 1, 0})) == 1);
  CHECK(specialize_ones(schubert_poly(Permutation::parse("132"), 3)) == 2);
}
