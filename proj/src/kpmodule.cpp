#include "kpmod/kpmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kp {

namespace {

// Lexicographic rank of a strictly increasing tuple among increasing_tuples.
int tuple_rank(const std::vector<int>& tup, int d) {
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long r = 1;
    for (long long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  int l = static_cast<int>(tup.size());
  long long rank = 0;
  int prev = -1;
  for (int pos = 0; pos < l; ++pos) {
    for (int v = prev + 1; v < tup[pos]; ++v)
      rank += binom(d - 1 - v, l - 1 - pos);
    prev = tup[pos];
  }
  return static_cast<int>(rank);
}

}  // namespace

KPModule kp_module(const Permutation& w, int n) {
  if (!w.in_s_inf(n))
    throw std::invalid_argument("kp_module: w is not in S_inf^(n)");
  int m = w.window_size();
  std::vector<std::vector<int>> inv_sets;  // per j with l_j > 0, ascending j
  for (int j = 2; j <= m; ++j) {
    std::vector<int> is;
    for (int i = 1; i < j; ++i)
      if (w(i) > w(j)) is.push_back(i - 1);
    if (!is.empty()) inv_sets.push_back(std::move(is));
  }
  if (inv_sets.empty()) {
    WeightModule k0 = one_dim(WeightVec(n, 0));
    k0.distinguished = 0;
    return {k0, w, 0};
  }
  WeightModule amb;
  int gen_idx = 0;
  bool first = true;
  for (const auto& is : inv_sets) {
    WeightModule factor = exterior_power(vector_rep(n), static_cast<int>(is.size()));
    int fi = tuple_rank(is, n);
    if (first) {
      amb = std::move(factor);
      gen_idx = fi;
      first = false;
    } else {
      int fd = factor.dim();
      amb = tensor(amb, factor);
      gen_idx = gen_idx * fd + fi;
    }
  }
  auto sub = submodule_generated(amb, {}, gen_idx);
  return {std::move(sub.sub), w, 0};
}

KPModule kp_module_gen(const WeightVec& lam, int n, std::optional<int> force_shift) {
  if (static_cast<int>(lam.size()) != n)
    throw std::invalid_argument("kp_module_gen: weight of wrong length");
  int k = 0;
  for (int v : lam) k = std::max(k, -v);
  if (force_shift) {
    if (*force_shift < k)
      throw std::invalid_argument("kp_module_gen: shift leaves negative entries");
    k = *force_shift;
  }
  WeightVec code = wv_add(lam, ones(n, k));
  KPModule base = kp_module(Permutation::from_code(code), n);
  base.mod = shift_weights(base.mod, ones(n, -k));
  base.shift = k;
  return base;
}

WeightModule tilting_module(const WeightVec& lam, int n) {
  if (!in_lambda_n(lam, n))
    throw std::invalid_argument("tilting_module: weight outside the box");
  WeightVec lb = bar(lam, n);
  WeightModule t = one_dim(WeightVec(n, 0));
  bool first = true;
  for (int j = 1; j <= n - 1; ++j) {
    if (lb[j - 1] == 0) continue;
    WeightModule factor = exterior_power(truncated_vector(n, n - j), lb[j - 1]);
    if (first) {
      t = std::move(factor);
      first = false;
    } else {
      t = tensor(t, factor);
    }
  }
  return t;
}

WeightModule costandard_module(const WeightVec& lam, int n) {
  return dual_twist(kp_module_gen(wv_sub(rho(n), lam), n).mod);
}

SparseVec FullTilting::wedge(const SparseVec& u, const SparseVec& v) const {
  SparseVec out;
  for (const auto& [su, cu] : u.ents)
    for (const auto& [sv, cv] : v.ents) {
      if (su & sv) continue;
      int inv = 0;
      for (int a = 0; a < nbits(); ++a)
        if (su & (1 << a))
          inv += __builtin_popcount(static_cast<unsigned>(sv) & ((1u << a) - 1));
      Rat sign = (inv % 2 == 0) ? Rat(1) : Rat(-1);
      int t = su | sv;
      out.set(t, out.at(t) + sign * cu * cv);
    }
  return out;
}

Rat FullTilting::pairing(const SparseVec& u, const SparseVec& v) const {
  int full = (1 << nbits()) - 1;
  return wedge(u, v).at(full);
}

namespace {

// Action on the exterior algebra induced from a generator-level map
// u_{pair} -> u_{image(pair)} (or zero), extended as a derivation.
SparseMat derivation_action(
    const std::vector<std::pair<int, int>>& pairs,
    const std::map<std::pair<int, int>, int>& pair_bit,
    const std::function<std::optional<std::pair<int, int>>(std::pair<int, int>)>& image) {
  int nb = static_cast<int>(pairs.size());
  int dim = 1 << nb;
  SparseMat m(dim, dim);
  for (int s = 0; s < dim; ++s) {
    for (int k = 0; k < nb; ++k) {
      if (!(s & (1 << k))) continue;
      auto img = image(pairs[k]);
      if (!img) continue;
      int t = pair_bit.at(*img);
      if (t == k) {
        m.col[s].set(s, m.col[s].at(s) + 1);
        continue;
      }
      if (s & (1 << t)) continue;
      int s2 = (s & ~(1 << k)) | (1 << t);
      int lo = std::min(k, t), hi = std::max(k, t);
      unsigned between = static_cast<unsigned>(s & ~(1 << k)) &
                         (((1u << hi) - 1) & ~((1u << (lo + 1)) - 1));
      Rat sign = (__builtin_popcount(between) % 2 == 0) ? Rat(1) : Rat(-1);
      m.col[s].set(s2, m.col[s].at(s2) + sign);
    }
  }
  return m;
}

}  // namespace

FullTilting full_tilting(int n) {
  if (n < 1) throw std::invalid_argument("full_tilting: n must be positive");
  FullTilting ft;
  ft.n = n;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) ft.pairs.emplace_back(i, j);
  std::sort(ft.pairs.begin(), ft.pairs.end());
  for (size_t k = 0; k < ft.pairs.size(); ++k)
    ft.pair_bit[ft.pairs[k]] = static_cast<int>(k);
  int nb = ft.nbits();
  if (nb > 20) throw std::invalid_argument("full_tilting: rank too large");
  int dim = 1 << nb;

  std::vector<WeightVec> w(dim, WeightVec(n, 0)), wp(dim, WeightVec(n, 0));
  for (int s = 0; s < dim; ++s)
    for (int k = 0; k < nb; ++k)
      if (s & (1 << k)) {
        ++w[s][ft.pairs[k].first - 1];
        ++wp[s][ft.pairs[k].second - 1];
      }
  ft.hprime_weights = std::move(wp);

  ft.mod.n = n;
  ft.mod.weights = std::move(w);
  for (auto [p, q] : root_pairs(n)) {
    ft.mod.gens.push_back(derivation_action(
        ft.pairs, ft.pair_bit,
        [&, p, q](std::pair<int, int> ij) -> std::optional<std::pair<int, int>> {
          if (ij.first != q) return std::nullopt;
          return std::make_pair(p, ij.second);
        }));
  }
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      ft.bprime[{p, q}] = derivation_action(
          ft.pairs, ft.pair_bit,
          [&, p, q](std::pair<int, int> ij) -> std::optional<std::pair<int, int>> {
            if (ij.second != q) return std::nullopt;
            return std::make_pair(ij.first, p);
          });
    }

  ft.swap = SparseMat(dim, dim);
  for (int s = 0; s < dim; ++s) {
    std::vector<int> mapped;
    for (int k = 0; k < nb; ++k)
      if (s & (1 << k))
        mapped.push_back(ft.pair_bit.at({ft.pairs[k].second, ft.pairs[k].first}));
    int invs = 0, t = 0;
    for (size_t a = 0; a < mapped.size(); ++a) {
      t |= 1 << mapped[a];
      for (size_t b = a + 1; b < mapped.size(); ++b)
        if (mapped[a] > mapped[b]) ++invs;
    }
    ft.swap.col[s].set(t, (invs % 2 == 0) ? Rat(1) : Rat(-1));
  }
  return ft;
}

int kp_mask_in_tilting(const FullTilting& ft, const Permutation& w) {
  if (!w.in_sn(ft.n))
    throw std::invalid_argument("kp_mask_in_tilting: w is not in S_n");
  int mask = 0;
  int m = w.window_size();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w(i) > w(j)) mask |= 1 << ft.pair_bit.at({i, ft.n + 1 - j});
  return mask;
}

SparseVec embed_kp_in_T(const FullTilting& ft, const Permutation& w) {
  return SparseVec::unit(kp_mask_in_tilting(ft, w));
}

SubmoduleResult tilting_summand(const FullTilting& ft, const WeightVec& lam) {
  WeightVec lb = bar(lam, ft.n);
  std::vector<SparseVec> seeds;
  for (int s = 0; s < ft.dim(); ++s)
    if (ft.hprime_weights[s] == lb) seeds.push_back(SparseVec::unit(s));
  return submodule_generated(ft.mod, seeds);
}

int m_pq(const Permutation& w, int p, int q) {
  if (!(1 <= p && p < q)) throw std::invalid_argument("m_pq: need p < q");
  int top = std::max(w.window_size(), q);
  int count = 0;
  for (int r = q + 1; r <= top; ++r)
    if (w(p) < w(r) && w(r) < w(q)) ++count;
  // Beyond the window w(r) = r, so the remaining contribution is the number
  // of integers in (max(top, w(p)), w(q)).
  int lo = std::max(top, w(p));
  if (w(q) - 1 > lo) count += w(q) - 1 - lo;
  return count;
}

bool is_cover_transposition(const Permutation& w, int p, int q) {
  Permutation t = Permutation::transposition(p, q);
  return (w * t).length() == w.length() + 1;
}

VpqResult v_pq(const Permutation& x, int p, int q, int n) {
  if (!is_cover_transposition(x, p, q))
    throw std::invalid_argument("v_pq: l(x t_pq) != l(x) + 1");
  KPModule kpm = kp_module(x, n);
  WeightModule amb = tensor(kpm.mod, vector_rep(n));
  SparseVec v = SparseVec::unit(*kpm.mod.distinguished);
  if (q <= n)
    for (int t = 0; t < m_pq(x, p, q); ++t) v = kpm.mod.gen(p, q).apply(v);
  SparseVec out;
  for (const auto& [i, c] : v.ents) out.set(i * n + (p - 1), c);
  return {std::move(amb), std::move(out)};
}

LemmaReport check_lemma_pqpq_with(
    const FullTilting& ft,
    const std::function<const SparseMat&(int, int)>& eprime,
    const Permutation& w, int i) {
  int n = ft.n;
  LemmaReport rep;
  Permutation wbar = conjugate_by_longest(w, n);
  SparseVec uw = embed_kp_in_T(ft, w);
  auto admissible = [&](int p, int q) {
    return is_cover_transposition(w, p, q);
  };
  for (int p = 1; p <= i; ++p)
    for (int q = i + 1; q <= n; ++q) {
      if (!admissible(p, q)) continue;
      SparseVec base = uw;
      for (int t = 0; t < m_pq(w, p, q); ++t) base = ft.mod.gen(p, q).apply(base);
      for (int p2 = 1; p2 <= i; ++p2)
        for (int q2 = i + 1; q2 <= n; ++q2) {
          if (!admissible(p2, q2)) continue;
          int a = n + 1 - q2, b = n + 1 - p2;
          SparseVec v = base;
          for (int t = 0; t < m_pq(wbar, a, b); ++t) v = eprime(a, b).apply(v);
          v = ft.wedge(v, SparseVec::unit(1 << ft.pair_bit.at({p, n + 1 - q2})));
          ++rep.cases_checked;
          std::ostringstream id;
          id << "w=" << w.str() << " i=" << i << " (p,q)=(" << p << "," << q
             << ") (p',q')=(" << p2 << "," << q2 << ")";
          if (!v.empty() && !(w(p) <= w(p2) && w(q) <= w(q2))) {
            rep.pass = false;
            if (rep.detail.empty())
              rep.detail = "nonvanishing without the value inequalities at " + id.str();
            continue;
          }
          if (p == p2 && q == q2) {
            int target = kp_mask_in_tilting(ft, w * Permutation::transposition(p, q));
            bool ok = v.ents.size() == 1 && v.ents.front().first == target &&
                      v.ents.front().second != 0;
            if (!ok) {
              rep.pass = false;
              if (rep.detail.empty())
                rep.detail = "diagonal case is not a nonzero multiple of u_{w t_pq} at " + id.str();
            }
          }
        }
    }
  return rep;
}

LemmaReport check_lemma_pqpq(const FullTilting& ft, const Permutation& w, int i) {
  return check_lemma_pqpq_with(
      ft, [&](int p, int q) -> const SparseMat& { return ft.eprime(p, q); }, w, i);
}

}  // namespace kp
