#include "kpmod/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kp {

MultiPoly MultiPoly::constant(int nvars, const Int& c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const std::vector<int>& exp, const Int& c) {
  MultiPoly p(static_cast<int>(exp.size()));
  p.add_term(exp, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e[i - 1] = 1;
  return monomial(e);
}

void MultiPoly::add_term(const std::vector<int>& exp, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(exp);
  if (it == terms.end()) {
    terms.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(n);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      std::vector<int> e(n);
      for (int i = 0; i < n; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Int& c) const {
  MultiPoly r(n);
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.terms.emplace(e, v * c);
  return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Int(-1); }

MultiPoly MultiPoly::substitute(const std::function<MultiPoly(int)>& image,
                                int out_nvars) const {
  MultiPoly r(out_nvars);
  for (const auto& [e, c] : terms) {
    MultiPoly t = MultiPoly::constant(out_nvars, c);
    for (int i = 0; i < n; ++i) {
      if (e[i] < 0) throw std::invalid_argument("substitute: negative exponent");
      MultiPoly xi = image(i + 1);
      for (int k = 0; k < e[i]; ++k) t = t * xi;
    }
    r = r + t;
  }
  return r;
}

MultiPoly MultiPoly::resize_vars(int nvars) const {
  MultiPoly r(nvars);
  for (const auto& [e, c] : terms) {
    std::vector<int> e2(nvars, 0);
    for (int i = 0; i < n; ++i) {
      if (i < nvars) {
        e2[i] = e[i];
      } else if (e[i] != 0) {
        throw std::invalid_argument("resize_vars: dropped variable has nonzero exponent");
      }
    }
    r.add_term(e2, c);
  }
  return r;
}

Int MultiPoly::eval_ones() const {
  Int s = 0;
  for (const auto& [e, c] : terms) s += c;
  return s;
}

std::string MultiPoly::str(const std::string& xname) const {
  if (terms.empty()) return "0";
  // Terms in descending lex order of exponent.
  std::vector<const std::pair<const std::vector<int>, Int>*> ts;
  for (const auto& t : terms) ts.push_back(&t);
  std::reverse(ts.begin(), ts.end());
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ts) {
    Int c = t->second;
    if (first) {
      if (c < 0) os << "-", c = -c;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool any_var = false;
    std::ostringstream mono;
    for (int i = 0; i < n; ++i) {
      int e = t->first[i];
      if (e == 0) continue;
      if (any_var) mono << '*';
      mono << xname << (i + 1);
      if (e != 1) mono << '^' << e;
      any_var = true;
    }
    if (!any_var) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      os << mono.str();
    }
  }
  return os.str();
}

MultiPoly divided_difference(const MultiPoly& f, int i) {
  if (i < 1 || i >= f.n)
    throw std::invalid_argument("divided_difference: index out of range");
  MultiPoly r(f.n);
  // Per monomial: (x^a y^b - x^b y^a)/(x-y) in the variables x_i, x_{i+1}
  // equals sign * sum of the |a-b| monomials between the two exponents.
  for (const auto& [e, c] : f.terms) {
    int a = e[i - 1], b = e[i];
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    Int cc = (a > b) ? c : -c;
    std::vector<int> e2 = e;
    for (int t = 0; t < hi - lo; ++t) {
      e2[i - 1] = lo + t;
      e2[i] = hi - 1 - t;
      r.add_term(e2, cc);
    }
  }
  return r;
}

namespace {

std::map<std::vector<int>, MultiPoly> g_schubert_memo;
std::mutex g_schubert_mutex;

bool weakly_decreasing(const WeightVec& c) {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i - 1] < c[i]) return false;
  return true;
}

// Schubert polynomial of w as a polynomial in (window size) variables.
MultiPoly schubert_rec(const Permutation& w) {
  {
    std::lock_guard<std::mutex> lk(g_schubert_mutex);
    auto it = g_schubert_memo.find(w.window());
    if (it != g_schubert_memo.end()) return it->second;
  }
  int m = std::max(w.window_size(), 1);
  WeightVec code = w.code(m);
  MultiPoly result;
  if (weakly_decreasing(code)) {
    result = MultiPoly::monomial(code);
  } else {
    int i = 0;
    for (int k = 1; k < m; ++k)
      if (w(k) < w(k + 1)) i = k;  // last ascent
    Permutation v = w * Permutation::simple(i);
    MultiPoly up = schubert_rec(v).resize_vars(m);
    result = divided_difference(up, i);
  }
  std::lock_guard<std::mutex> lk(g_schubert_mutex);
  g_schubert_memo.emplace(w.window(), result);
  return result;
}

}  // namespace

MultiPoly schubert_poly(const Permutation& w, int n) {
  if (!w.in_s_inf(n))
    throw std::invalid_argument("schubert_poly: w is not in S_inf^(n)");
  return schubert_rec(w).resize_vars(n);
}

std::map<Permutation, Int> schubert_expand(const MultiPoly& f) {
  for (const auto& [e, c] : f.terms)
    for (int v : e)
      if (v < 0) throw std::invalid_argument("schubert_expand: negative exponent");
  // Every exponent is picked at most once, so the number of monomials of the
  // degrees present bounds the number of iterations.
  long long guard = 0;
  {
    std::vector<long long> degs;
    for (const auto& [e, c] : f.terms) degs.push_back(wv_sum(e));
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (long long d : degs) {
      // C(d + n - 1, n - 1)
      long long cnt = 1;
      for (int k = 1; k < f.n; ++k) cnt = cnt * (d + k) / k;
      guard += cnt;
    }
  }
  std::map<Permutation, Int> out;
  MultiPoly rem = f;
  while (!rem.is_zero()) {
    if (guard-- < 0)
      throw std::logic_error("schubert_expand: iteration bound exceeded (ordering bug)");
    // Pick an exponent that is maximal for prec; break ties (incomparable
    // weights) by the lexicographically largest exponent vector.
    std::vector<const std::vector<int>*> exps;
    for (const auto& [e, c] : rem.terms) exps.push_back(&e);
    const std::vector<int>* best = nullptr;
    for (const auto* e : exps) {
      bool maximal = true;
      for (const auto* o : exps) {
        if (o == e) continue;
        if (weight_less(*e, *o, OrderKind::prec)) {
          maximal = false;
          break;
        }
      }
      if (maximal && (!best || *e > *best)) best = e;
    }
    std::vector<int> lam = *best;
    Int c = rem.terms.at(lam);
    Permutation w = Permutation::from_code(lam);
    out[w] += c;
    if (out[w] == 0) out.erase(w);
    rem = rem - schubert_poly(w, f.n) * c;
  }
  return out;
}

HnElement reduce_Hn(const MultiPoly& f, int n) {
  HnElement e(n);
  for (const auto& [w, c] : schubert_expand(f.resize_vars(n)))
    if (w.in_sn(n)) e.coeffs.emplace(w, c);
  return e;
}

MultiPoly hn_representative(const HnElement& e) {
  MultiPoly f(e.n);
  for (const auto& [w, c] : e.coeffs) f = f + schubert_poly(w, e.n) * c;
  return f;
}

HnElement hn_mul(const HnElement& a, const HnElement& b) {
  return reduce_Hn(hn_representative(a) * hn_representative(b), a.n);
}

HnElement hn_add(const HnElement& a, const HnElement& b) {
  HnElement r = a;
  for (const auto& [w, c] : b.coeffs) {
    r.coeffs[w] += c;
    if (r.coeffs[w] == 0) r.coeffs.erase(w);
  }
  return r;
}

MultiPoly iota_substitute(const MultiPoly& f) {
  int n = f.n;
  return f.substitute(
      [n](int i) { return -MultiPoly::variable(n, n + 1 - i); }, n);
}

HnElement iota_Hn(const HnElement& e) {
  return reduce_Hn(iota_substitute(hn_representative(e)), e.n);
}

std::pair<MultiPoly, MultiPoly> cauchy_product(int n) {
  // Variables: x_1..x_n are 1..n, y_1..y_n are n+1..2n.
  MultiPoly lhs(2 * n), rhs = MultiPoly::constant(2 * n, 1);
  Permutation w0 = Permutation::longest(n);
  for (const auto& w : all_sn(n)) {
    MultiPoly sx = schubert_poly(w, n).substitute(
        [n](int i) { return MultiPoly::variable(2 * n, i); }, 2 * n);
    MultiPoly sy = schubert_poly(w * w0, n).substitute(
        [n](int i) { return MultiPoly::variable(2 * n, n + i); }, 2 * n);
    lhs = lhs + sx * sy;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j)
      rhs = rhs * (MultiPoly::variable(2 * n, i) + MultiPoly::variable(2 * n, n + j));
  return {lhs, rhs};
}

Int specialize_ones(const MultiPoly& f) { return f.eval_ones(); }

}  // namespace kp
