// Permutations fixing all but finitely many points, Lehmer codes, and the
// three orderings on weight vectors used throughout the package.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kp {

using WeightVec = std::vector<int>;

// A permutation of {1,2,3,...} that fixes all but finitely many points,
// stored by its window [w(1),...,w(m)] with trailing fixed points trimmed.
// Values are immutable after construction.
class Permutation {
 public:
  Permutation() = default;  // identity
  explicit Permutation(std::vector<int> window);

  static Permutation identity() { return Permutation(); }
  static Permutation transposition(int i, int j);  // t_ij, exchanges i and j
  static Permutation simple(int i) { return transposition(i, i + 1); }
  static Permutation longest(int n);  // longest element of S_n
  // The unique permutation in S_inf^(n) with the given Lehmer code.
  static Permutation from_code(const WeightVec& code);

  int operator()(int i) const;  // 1-based
  int window_size() const { return static_cast<int>(win_.size()); }
  const std::vector<int>& window() const { return win_; }
  bool is_identity() const { return win_.empty(); }
  bool in_sn(int n) const { return window_size() <= n; }
  // Member of S_inf^(n): w(n+1) < w(n+2) < ...
  bool in_s_inf(int n) const;
  long long length() const;  // number of inversions
  // First n entries of the Lehmer code; requires w in S_inf^(n).
  WeightVec code(int n) const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& o) const;  // (w*v)(i) = w(v(i))

  bool operator==(const Permutation& o) const { return win_ == o.win_; }
  bool operator!=(const Permutation& o) const { return win_ != o.win_; }
  bool operator<(const Permutation& o) const { return win_ < o.win_; }

  // "2143" when every window value is a single digit, "[2,1,4,3]" otherwise.
  std::string str() const;
  static Permutation parse(const std::string& s);

 private:
  std::vector<int> win_;
  void trim();
};

// All elements of S_n, ordered lexicographically by window.
std::vector<Permutation> all_sn(int n);

// w0 w w0 for w in S_n.
Permutation conjugate_by_longest(const Permutation& w, int n);

// 1 x w in S_{n+1}: (1 x w)(1) = 1, (1 x w)(i+1) = w(i) + 1.
Permutation one_times(const Permutation& w);

enum class OrderKind { lt, lt_prime, prec };
enum class OrderResult { less, not_less, incomparable };

// The strict orders <, <' and their intersection on Z^n. Weights of
// different coordinate sums are incomparable; within one sum, < and <' are
// total and prec may be incomparable. Inputs are shifted to Z_{>=0}^n
// internally, which does not affect the result.
OrderResult weight_order(const WeightVec& a, const WeightVec& b, OrderKind k);
bool weight_less(const WeightVec& a, const WeightVec& b, OrderKind k);
bool weight_leq(const WeightVec& a, const WeightVec& b, OrderKind k);

// The box {0 <= a_i <= n-i}, i.e. the codes of S_n, in lexicographic order.
std::vector<WeightVec> lambda_n(int n);
bool in_lambda_n(const WeightVec& a, int n);
// code(w0 w w0) for code(w) = lam in the box; an involution on it.
WeightVec bar(const WeightVec& lam, int n);

WeightVec rho(int n);                 // (n-1, n-2, ..., 0)
WeightVec ones(int n, int k = 1);     // (k, ..., k)
WeightVec alpha(int p, int q, int n); // e_p - e_q, 1-based
WeightVec wv_add(const WeightVec& a, const WeightVec& b);
WeightVec wv_sub(const WeightVec& a, const WeightVec& b);
long long wv_sum(const WeightVec& a);

}  // namespace kp
