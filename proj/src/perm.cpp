#include "kpmod/perm.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kp {

void Permutation::trim() {
  while (!win_.empty() && win_.back() == static_cast<int>(win_.size()))
    win_.pop_back();
}

Permutation::Permutation(std::vector<int> window) : win_(std::move(window)) {
  std::vector<bool> seen(win_.size() + 1, false);
  for (int v : win_) {
    if (v < 1 || v > static_cast<int>(win_.size()) || seen[v])
      throw std::invalid_argument("permutation window is not a bijection");
    seen[v] = true;
  }
  trim();
}

Permutation Permutation::transposition(int i, int j) {
  if (i == j || i < 1 || j < 1)
    throw std::invalid_argument("transposition needs distinct points >= 1");
  int m = std::max(i, j);
  std::vector<int> w(m);
  for (int k = 0; k < m; ++k) w[k] = k + 1;
  std::swap(w[i - 1], w[j - 1]);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = n - k;
  return Permutation(std::move(w));
}

Permutation Permutation::from_code(const WeightVec& code) {
  for (int c : code)
    if (c < 0) throw std::invalid_argument("Lehmer code entry is negative");
  int n = static_cast<int>(code.size());
  int maxc = 0;
  for (int c : code) maxc = std::max(maxc, c);
  int m = n + maxc;
  // w(i) is the (code_i + 1)-th smallest value not used so far; afterwards
  // the unused values are placed in increasing order, which forces the
  // membership in S_inf^(n).
  std::set<int> unused;
  for (int v = 1; v <= m + 1; ++v) unused.insert(v);
  std::vector<int> w;
  int top = 0;
  for (int i = 0; i < n; ++i) {
    auto it = unused.begin();
    std::advance(it, code[i]);
    w.push_back(*it);
    top = std::max(top, *it);
    unused.erase(it);
  }
  for (auto it = unused.begin(); static_cast<int>(w.size()) < std::max(top, n);) {
    w.push_back(*it);
    it = unused.erase(it);
  }
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const {
  if (i < 1) throw std::invalid_argument("permutation argument must be >= 1");
  if (i <= window_size()) return win_[i - 1];
  return i;
}

bool Permutation::in_s_inf(int n) const {
  for (int i = n + 1; i < window_size(); ++i)
    if ((*this)(i) > (*this)(i + 1)) return false;
  return true;
}

long long Permutation::length() const {
  long long l = 0;
  for (int i = 0; i < window_size(); ++i)
    for (int j = i + 1; j < window_size(); ++j)
      if (win_[i] > win_[j]) ++l;
  return l;
}

WeightVec Permutation::code(int n) const {
  if (!in_s_inf(n))
    throw std::invalid_argument("code: permutation is not in S_inf^(n)");
  WeightVec c(n, 0);
  int m = std::max(n, window_size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= m; ++j)
      if ((*this)(i) > (*this)(j)) ++c[i - 1];
  return c;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_size());
  for (int i = 1; i <= window_size(); ++i) inv[(*this)(i)-1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& o) const {
  int m = std::max(window_size(), o.window_size());
  std::vector<int> w(m);
  for (int i = 1; i <= m; ++i) w[i - 1] = (*this)(o(i));
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  if (is_identity()) return "1";
  bool digits = window_size() <= 9;
  std::ostringstream os;
  if (digits) {
    for (int v : win_) os << v;
  } else {
    os << '[';
    for (size_t k = 0; k < win_.size(); ++k) {
      if (k) os << ',';
      os << win_[k];
    }
    os << ']';
  }
  return os.str();
}

Permutation Permutation::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty permutation string");
  std::vector<int> w;
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated permutation list");
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("bad character in permutation string");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> all_sn(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation conjugate_by_longest(const Permutation& w, int n) {
  Permutation w0 = Permutation::longest(n);
  return w0 * w * w0;
}

Permutation one_times(const Permutation& w) {
  std::vector<int> v(w.window_size() + 1);
  v[0] = 1;
  for (int i = 1; i <= w.window_size(); ++i) v[i] = w(i) + 1;
  return Permutation(std::move(v));
}

namespace {

// x >lex y / x >rlex y for permutations: compare values at the first
// (resp. last) point of disagreement.
bool gt_lex(const Permutation& x, const Permutation& y, bool reverse) {
  int m = std::max(x.window_size(), y.window_size());
  if (reverse) {
    for (int i = m; i >= 1; --i)
      if (x(i) != y(i)) return x(i) > y(i);
  } else {
    for (int i = 1; i <= m; ++i)
      if (x(i) != y(i)) return x(i) > y(i);
  }
  return false;
}

}  // namespace

OrderResult weight_order(const WeightVec& a, const WeightVec& b, OrderKind k) {
  if (a.size() != b.size())
    throw std::invalid_argument("weight_order: mismatched lengths");
  if (a == b) return OrderResult::not_less;
  if (wv_sum(a) != wv_sum(b)) return OrderResult::incomparable;
  int mn = 0;
  for (int v : a) mn = std::min(mn, v);
  for (int v : b) mn = std::min(mn, v);
  WeightVec as = a, bs = b;
  for (auto& v : as) v -= mn;
  for (auto& v : bs) v -= mn;
  Permutation wi = Permutation::from_code(as).inverse();
  Permutation vi = Permutation::from_code(bs).inverse();
  // a < b iff w^{-1} >lex v^{-1}; a <' b iff w^{-1} >rlex v^{-1}.
  switch (k) {
    case OrderKind::lt:
      return gt_lex(wi, vi, false) ? OrderResult::less : OrderResult::not_less;
    case OrderKind::lt_prime:
      return gt_lex(wi, vi, true) ? OrderResult::less : OrderResult::not_less;
    case OrderKind::prec: {
      bool l1 = gt_lex(wi, vi, false), l2 = gt_lex(wi, vi, true);
      if (l1 && l2) return OrderResult::less;
      if (!l1 && !l2) return OrderResult::not_less;  // b prec a
      return OrderResult::incomparable;
    }
  }
  return OrderResult::incomparable;
}

bool weight_less(const WeightVec& a, const WeightVec& b, OrderKind k) {
  return weight_order(a, b, k) == OrderResult::less;
}

bool weight_leq(const WeightVec& a, const WeightVec& b, OrderKind k) {
  return a == b || weight_less(a, b, k);
}

std::vector<WeightVec> lambda_n(int n) {
  std::vector<WeightVec> out;
  WeightVec cur(n, 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n - 1 - i) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_lambda_n(const WeightVec& a, int n) {
  if (static_cast<int>(a.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (a[i] < 0 || a[i] > n - 1 - i) return false;
  return true;
}

WeightVec bar(const WeightVec& lam, int n) {
  if (!in_lambda_n(lam, n))
    throw std::invalid_argument("bar: weight is outside the box");
  return conjugate_by_longest(Permutation::from_code(lam), n).code(n);
}

WeightVec rho(int n) {
  WeightVec r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

WeightVec ones(int n, int k) { return WeightVec(n, k); }

WeightVec alpha(int p, int q, int n) {
  WeightVec a(n, 0);
  a[p - 1] = 1;
  a[q - 1] = -1;
  return a;
}

WeightVec wv_add(const WeightVec& a, const WeightVec& b) {
  WeightVec c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

WeightVec wv_sub(const WeightVec& a, const WeightVec& b) {
  WeightVec c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

long long wv_sum(const WeightVec& a) {
  long long s = 0;
  for (int v : a) s += v;
  return s;
}

}  // namespace kp
