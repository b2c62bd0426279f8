// Sparse multivariate polynomials over Z, divided differences, Schubert
// polynomials, and the coinvariant ring H_n in its Schubert basis.
#pragma once

#include <functional>
#include <map>
#include <string>

#include "kpmod/linalg.hpp"
#include "kpmod/perm.hpp"

namespace kp {

// Polynomial in n variables with arbitrary-precision integer coefficients.
// Exponents may be negative (Laurent terms show up in character identities);
// no zero coefficients are stored.
struct MultiPoly {
  int n = 0;
  std::map<std::vector<int>, Int> terms;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : n(nvars) {}
  static MultiPoly constant(int nvars, const Int& c);
  static MultiPoly monomial(const std::vector<int>& exp, const Int& c = 1);
  static MultiPoly variable(int nvars, int i);  // x_i, 1-based

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& exp, const Int& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Int& c) const;
  MultiPoly operator-() const;
  bool operator==(const MultiPoly& o) const { return n == o.n && terms == o.terms; }

  // Substitute x_i -> image(i) for all variables at once.
  MultiPoly substitute(const std::function<MultiPoly(int)>& image, int out_nvars) const;
  MultiPoly resize_vars(int nvars) const;  // pad/truncate; truncated exps must be 0
  Int eval_ones() const;                   // substitute every x_i = 1

  std::string str(const std::string& xname = "x") const;
};

// (f - s_i f) / (x_i - x_{i+1}); always an exact polynomial quotient.
MultiPoly divided_difference(const MultiPoly& f, int i);

// The Schubert polynomial of w in S_inf^(n), as a polynomial in x_1..x_n.
// Memoized by canonical window; descent along last ascents to a dominant
// permutation whose Schubert polynomial is the code monomial.
MultiPoly schubert_poly(const Permutation& w, int n);

// Expansion f = sum c_w S_w over S_inf^(n); exponents must be nonnegative.
std::map<Permutation, Int> schubert_expand(const MultiPoly& f);

// An element of H_n = Z[x_1..x_n]/(symmetric polynomials of positive degree)
// stored in the Schubert basis {S_w : w in S_n}.
struct HnElement {
  int n = 0;
  std::map<Permutation, Int> coeffs;

  explicit HnElement(int nn = 0) : n(nn) {}
  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const HnElement& o) const { return n == o.n && coeffs == o.coeffs; }
};

// Class of f in H_n: Schubert-expand, then drop every w outside S_n.
HnElement reduce_Hn(const MultiPoly& f, int n);
MultiPoly hn_representative(const HnElement& e);
HnElement hn_mul(const HnElement& a, const HnElement& b);
HnElement hn_add(const HnElement& a, const HnElement& b);

// The ring automorphism of H_n induced by x_i -> -x_{n+1-i}, computed by
// substitution on a representative followed by reduction.
HnElement iota_Hn(const HnElement& e);
MultiPoly iota_substitute(const MultiPoly& f);  // the raw substitution

// Both sides of the Cauchy identity, as polynomials in x_1..x_n,y_1..y_n:
// sum_w S_w(x) S_{w w0}(y) and prod_{i+j<=n} (x_i + y_j).
std::pair<MultiPoly, MultiPoly> cauchy_product(int n);

Int specialize_ones(const MultiPoly& f);

}  // namespace kp
