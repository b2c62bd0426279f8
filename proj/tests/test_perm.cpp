#include <random>

#include "doctest.h"
#include "kpmod/perm.hpp"

using namespace kp;

namespace {

// Independent oracle: count inversions straight from the definition.
WeightVec code_oracle(const Permutation& w, int n) {
  WeightVec c(n, 0);
  int top = w.window_size() + n + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= top; ++j)
      if (w(i) > w(j)) ++c[i - 1];
  return c;
}

}  // namespace

TEST_CASE("lehmer code basics") {
  CHECK(Permutation::identity().code(4) == WeightVec{0, 0, 0, 0});
  Permutation w0 = Permutation::longest(3);
  CHECK(code_oracle(w0, 3) == WeightVec{2, 1, 0});
  CHECK(w0.code(3) == WeightVec{2, 1, 0});
  Permutation w = Permutation::parse("2143");
  CHECK(code_oracle(w, 4) == WeightVec{1, 0, 1, 0});
  CHECK(w.code(4) == WeightVec{1, 0, 1, 0});
}

TEST_CASE("perm_from_code") {
  CHECK(Permutation::from_code({0, 0, 0}) == Permutation::identity());
  CHECK(Permutation::from_code({2, 1, 0}) == Permutation::parse("321"));
  Permutation w = Permutation::from_code({3, 0, 0});
  CHECK(w(1) == 4);
  CHECK(!w.in_sn(3));
  CHECK(w.in_s_inf(3));
  CHECK_THROWS_AS(Permutation::from_code({1, -1, 0}), std::invalid_argument);
}

TEST_CASE("code round trip on random codes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 5);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 5;
    WeightVec lam(n);
    for (auto& v : lam) v = d(rng);
    Permutation w = Permutation::from_code(lam);
    CHECK(w.in_s_inf(n));
    CHECK(w.code(n) == lam);
    CHECK(code_oracle(w, n) == lam);
  }
}

TEST_CASE("length and multiplication") {
  CHECK(Permutation::identity().length() == 0);
  for (int n = 2; n <= 5; ++n)
    CHECK(Permutation::longest(n).length() == n * (n - 1) / 2);
  for (const auto& w : all_sn(4))
    CHECK(w.length() == wv_sum(w.code(4)));
  // conjugation by the longest element, composed by hand
  CHECK(conjugate_by_longest(Permutation::parse("312"), 3) ==
        Permutation::parse("231"));
  Permutation a = Permutation::parse("231"), b = Permutation::parse("312");
  CHECK(a * b == Permutation::identity());
  CHECK(a.inverse() == b);
  CHECK(Permutation::transposition(1, 3) == Permutation::parse("321"));
}

TEST_CASE("weight order examples") {
  CHECK(weight_order({1, 0, 0}, {0, 1, 0}, OrderKind::prec) == OrderResult::less);
  for (auto k : {OrderKind::lt, OrderKind::lt_prime, OrderKind::prec})
    CHECK(weight_order({1, 2, 0}, {1, 2, 0}, k) == OrderResult::not_less);
  CHECK(weight_order({2, 1, 0}, {1, 0, 0}, OrderKind::lt) ==
        OrderResult::incomparable);
  CHECK(weight_order({2, 1, 0}, {1, 0, 0}, OrderKind::prec) ==
        OrderResult::incomparable);
}

TEST_CASE("orders are shift invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 4);
  for (int t = 0; t < 100; ++t) {
    WeightVec a(3), b(3);
    for (auto& v : a) v = d(rng);
    for (auto& v : b) v = d(rng);
    for (auto k : {OrderKind::lt, OrderKind::lt_prime, OrderKind::prec}) {
      auto r = weight_order(a, b, k);
      CHECK(weight_order(wv_add(a, ones(3, 5)), wv_add(b, ones(3, 5)), k) == r);
    }
  }
}

TEST_CASE("lex totality within a degree") {
  // For codes of equal degree exactly one of a<b, b<a, a=b holds.
  std::vector<WeightVec> deg3;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        if (a + b + c == 3) deg3.push_back({a, b, c});
  for (const auto& x : deg3)
    for (const auto& y : deg3) {
      int rels = (x == y) + weight_less(x, y, OrderKind::lt) +
                 weight_less(y, x, OrderKind::lt);
      CHECK(rels == 1);
      int rels2 = (x == y) + weight_less(x, y, OrderKind::lt_prime) +
                  weight_less(y, x, OrderKind::lt_prime);
      CHECK(rels2 == 1);
    }
}

TEST_CASE("duality between the two lex orders over the rank-4 box") {
  WeightVec r = rho(4);
  for (const auto& a : lambda_n(4))
    for (const auto& b : lambda_n(4)) {
      bool lt = weight_less(a, b, OrderKind::lt);
      bool ltp = weight_less(wv_sub(r, a), wv_sub(r, b), OrderKind::lt_prime);
      CHECK(lt == ltp);
    }
}

TEST_CASE("the box is an order ideal") {
  // No nonnegative weight outside the box sits below a box weight; codes of
  // one degree in rank 3 all have entries bounded by the degree.
  for (const auto& lam : lambda_n(3)) {
    int deg = static_cast<int>(wv_sum(lam));
    for (int a = 0; a <= deg; ++a)
      for (int b = 0; b <= deg; ++b) {
        int c = deg - a - b;
        if (c < 0) continue;
        WeightVec mu{a, b, c};
        if (in_lambda_n(mu, 3)) continue;
        CHECK(!weight_less(mu, lam, OrderKind::prec));
      }
  }
}

TEST_CASE("box enumeration and bar involution") {
  CHECK(lambda_n(3).size() == 6);
  CHECK(lambda_n(4).size() == 24);
  WeightVec r = rho(3);
  CHECK(bar(r, 3) == r);
  CHECK(bar(Permutation::parse("312").code(3), 3) ==
        Permutation::parse("231").code(3));
  for (const auto& lam : lambda_n(3)) CHECK(bar(bar(lam, 3), 3) == lam);
  CHECK_THROWS_AS(bar({5, 0, 0}, 3), std::invalid_argument);
  // bar reverses < into >' on the box
  for (const auto& a : lambda_n(3))
    for (const auto& b : lambda_n(3)) {
      bool lt = weight_leq(a, b, OrderKind::lt);
      bool rev = weight_leq(bar(b, 3), bar(a, 3), OrderKind::lt_prime);
      CHECK(lt == rev);
    }
}

TEST_CASE("permutation notation") {
  CHECK(Permutation::parse("2143").str() == "2143");
  CHECK(Permutation::parse("[2,1,4,3]").str() == "2143");
  std::vector<int> big(12);
  for (int i = 0; i < 12; ++i) big[i] = i + 1;
  std::swap(big[0], big[11]);
  Permutation w(big);
  CHECK(w.str() == "[12,2,3,4,5,6,7,8,9,10,11,1]");
  CHECK(Permutation::parse(w.str()) == w);
  CHECK_THROWS_AS(Permutation::parse("10"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("22"), std::invalid_argument);
}

TEST_CASE("one_times shift embedding") {
  CHECK(one_times(Permutation::parse("312")) == Permutation::parse("1423"));
  CHECK(one_times(Permutation::identity()) == Permutation::identity());
}
