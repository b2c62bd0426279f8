#include "kpmod/weightmod.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kp {

const std::vector<std::pair<int, int>>& root_pairs(int n) {
  static std::mutex mx;
  static std::map<int, std::vector<std::pair<int, int>>> cache;
  std::lock_guard<std::mutex> lk(mx);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<std::pair<int, int>> v;
    for (int p = 1; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) v.emplace_back(p, q);
    it = cache.emplace(n, std::move(v)).first;
  }
  return it->second;
}

int root_index(int p, int q, int n) {
  if (!(1 <= p && p < q && q <= n))
    throw std::invalid_argument("root_index: need 1 <= p < q <= n");
  // (p,q) sits after all pairs with smaller p.
  int idx = 0;
  for (int a = 1; a < p; ++a) idx += n - a;
  return idx + (q - p - 1);
}

const SparseMat& WeightModule::gen(int p, int q) const {
  return gens[root_index(p, q, n)];
}

namespace {

WeightModule make_module(int n, std::vector<WeightVec> weights) {
  WeightModule m;
  m.n = n;
  m.weights = std::move(weights);
  int d = m.dim();
  m.gens.assign(root_pairs(n).size(), SparseMat(d, d));
  return m;
}

std::map<WeightVec, SparseVec> split_by_weight(const WeightModule& m,
                                               const SparseVec& v) {
  std::map<WeightVec, SparseVec> out;
  for (const auto& [i, c] : v.ents) out[m.weights[i]].ents.emplace_back(i, c);
  return out;
}

}  // namespace

WeightModule one_dim(const WeightVec& lam) {
  return make_module(static_cast<int>(lam.size()), {lam});
}

WeightModule vector_rep(int n) { return truncated_vector(n, n); }

WeightModule truncated_vector(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("truncated_vector: bad index");
  std::vector<WeightVec> w;
  for (int k = 1; k <= i; ++k) {
    WeightVec e(n, 0);
    e[k - 1] = 1;
    w.push_back(e);
  }
  WeightModule m = make_module(n, std::move(w));
  for (auto [p, q] : root_pairs(n))
    if (q <= i) m.gens[root_index(p, q, n)].set(p - 1, q - 1, Rat(1));
  return m;
}

WeightModule zero_module(int n) { return make_module(n, {}); }

WeightModule direct_sum(const WeightModule& a, const WeightModule& b) {
  if (a.n != b.n) throw std::invalid_argument("direct_sum: rank mismatch");
  std::vector<WeightVec> w = a.weights;
  w.insert(w.end(), b.weights.begin(), b.weights.end());
  WeightModule m = make_module(a.n, std::move(w));
  int da = a.dim();
  for (size_t k = 0; k < m.gens.size(); ++k) {
    for (int c = 0; c < da; ++c)
      for (const auto& [r, v] : a.gens[k].col[c].ents) m.gens[k].col[c].set(r, v);
    for (int c = 0; c < b.dim(); ++c)
      for (const auto& [r, v] : b.gens[k].col[c].ents)
        m.gens[k].col[da + c].set(da + r, v);
  }
  return m;
}

WeightModule tensor(const WeightModule& a, const WeightModule& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor: rank mismatch");
  int da = a.dim(), db = b.dim();
  std::vector<WeightVec> w;
  w.reserve(static_cast<size_t>(da) * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) w.push_back(wv_add(a.weights[i], b.weights[j]));
  WeightModule m = make_module(a.n, std::move(w));
  for (size_t k = 0; k < m.gens.size(); ++k) {
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) {
        SparseVec& col = m.gens[k].col[i * db + j];
        for (const auto& [r, v] : a.gens[k].col[i].ents)
          col.set(r * db + j, v);
        for (const auto& [r, v] : b.gens[k].col[j].ents)
          col.set(i * db + r, col.at(i * db + r) + v);
      }
  }
  return m;
}

std::vector<std::vector<int>> increasing_tuples(int d, int l) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(l);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == l) {
      tuples.push_back(cur);
      return;
    }
    for (int v = from; v < d; ++v) {
      cur[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  return tuples;
}

WeightModule exterior_power(const WeightModule& mod, int l) {
  int n = mod.n, d = mod.dim();
  if (l == 0) return one_dim(WeightVec(n, 0));
  if (l < 0 || l > d) return zero_module(n);
  std::vector<std::vector<int>> tuples = increasing_tuples(d, l);
  std::map<std::vector<int>, int> index;
  std::vector<WeightVec> w;
  for (size_t t = 0; t < tuples.size(); ++t) {
    index[tuples[t]] = static_cast<int>(t);
    WeightVec s(n, 0);
    for (int i : tuples[t]) s = wv_add(s, mod.weights[i]);
    w.push_back(s);
  }
  WeightModule m = make_module(n, std::move(w));
  for (size_t k = 0; k < m.gens.size(); ++k) {
    for (size_t t = 0; t < tuples.size(); ++t) {
      SparseVec& col = m.gens[k].col[t];
      const auto& tup = tuples[t];
      for (int a = 0; a < l; ++a) {
        for (const auto& [r, v] : mod.gens[k].col[tup[a]].ents) {
          bool dup = false;
          int between = 0;
          for (int b = 0; b < l; ++b) {
            if (b == a) continue;
            if (tup[b] == r) {
              dup = true;
              break;
            }
            int lo = std::min(r, tup[a]), hi = std::max(r, tup[a]);
            if (lo < tup[b] && tup[b] < hi) ++between;
          }
          if (dup) continue;
          std::vector<int> nt = tup;
          nt[a] = r;
          std::sort(nt.begin(), nt.end());
          Rat sign = (between % 2 == 0) ? Rat(1) : Rat(-1);
          int ti = index.at(nt);
          col.set(ti, col.at(ti) + sign * v);
        }
      }
    }
  }
  return m;
}

WeightModule dual_twist(const WeightModule& mod) {
  WeightVec r = rho(mod.n);
  std::vector<WeightVec> w;
  for (const auto& lam : mod.weights) w.push_back(wv_sub(r, lam));
  WeightModule m = make_module(mod.n, std::move(w));
  for (size_t k = 0; k < m.gens.size(); ++k)
    m.gens[k] = mod.gens[k].transpose() * Rat(-1);
  return m;
}

WeightModule shift_weights(const WeightModule& mod, const WeightVec& by) {
  WeightModule m = mod;
  for (auto& w : m.weights) w = wv_add(w, by);
  return m;
}

std::optional<std::string> validate(const WeightModule& m) {
  const auto& roots = root_pairs(m.n);
  if (m.gens.size() != roots.size()) return "wrong number of generator matrices";
  for (const auto& w : m.weights)
    if (static_cast<int>(w.size()) != m.n) return "weight of wrong length";
  for (size_t k = 0; k < roots.size(); ++k) {
    const SparseMat& g = m.gens[k];
    if (g.rows != m.dim() || g.cols != m.dim()) return "generator of wrong shape";
    auto [p, q] = roots[k];
    WeightVec al = alpha(p, q, m.n);
    for (int c = 0; c < g.cols; ++c)
      for (const auto& [r, v] : g.col[c].ents)
        if (m.weights[r] != wv_add(m.weights[c], al)) {
          std::ostringstream os;
          os << "weight shift violated by e_" << p << q << " at entry (" << r
             << "," << c << ")";
          return os.str();
        }
  }
  for (size_t k1 = 0; k1 < roots.size(); ++k1)
    for (size_t k2 = 0; k2 < roots.size(); ++k2) {
      auto [p, q] = roots[k1];
      auto [r, s] = roots[k2];
      SparseMat lhs = m.gens[k1] * m.gens[k2] - m.gens[k2] * m.gens[k1];
      SparseMat rhs(m.dim(), m.dim());
      if (q == r) rhs = rhs + m.gen(p, s);
      if (s == p) rhs = rhs - m.gen(r, q);
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "bracket violated for [e_" << p << q << ", e_" << r << s << "]";
        return os.str();
      }
    }
  return std::nullopt;
}

MultiPoly character(const WeightModule& m) {
  MultiPoly ch(m.n);
  for (const auto& w : m.weights) ch.add_term(w, 1);
  return ch;
}

bool is_morphism(const Morphism& f) {
  if (f.mat.rows != f.target.dim() || f.mat.cols != f.source.dim()) return false;
  for (int c = 0; c < f.mat.cols; ++c)
    for (const auto& [r, v] : f.mat.col[c].ents)
      if (f.target.weights[r] != f.source.weights[c]) return false;
  for (size_t k = 0; k < f.source.gens.size(); ++k)
    if (!(f.mat * f.source.gens[k] == f.target.gens[k] * f.mat)) return false;
  return true;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  return Morphism{f.source, g.target, g.mat * f.mat};
}

int morphism_rank(const Morphism& f) {
  RowBasis rb;
  for (const auto& c : f.mat.col) rb.insert(c);
  return rb.rank();
}

bool is_injective(const Morphism& f) { return morphism_rank(f) == f.source.dim(); }
bool is_surjective(const Morphism& f) { return morphism_rank(f) == f.target.dim(); }
bool is_bijective(const Morphism& f) {
  return f.source.dim() == f.target.dim() && is_injective(f);
}

SubmoduleResult submodule_generated(const WeightModule& m,
                                    const std::vector<SparseVec>& vectors,
                                    std::optional<int> distinguished_first) {
  std::map<WeightVec, RowBasis> blocks;
  std::map<WeightVec, std::vector<int>> block_gids;
  std::vector<SparseVec> basis;
  std::vector<WeightVec> bweights;
  std::deque<int> todo;

  auto insert_homog = [&](const WeightVec& wt, const SparseVec& v) {
    auto& rb = blocks.try_emplace(wt).first->second;
    int id = rb.insert(v);
    if (id < 0) return;
    int g = static_cast<int>(basis.size());
    basis.push_back(rb.row(id));
    bweights.push_back(wt);
    block_gids[wt].push_back(g);
    todo.push_back(g);
  };
  auto insert_any = [&](const SparseVec& v) {
    for (auto& [wt, comp] : split_by_weight(m, v)) insert_homog(wt, comp);
  };

  if (distinguished_first)
    insert_any(SparseVec::unit(*distinguished_first));
  for (const auto& v : vectors) insert_any(v);

  const auto& roots = root_pairs(m.n);
  while (!todo.empty()) {
    int g = todo.front();
    todo.pop_front();
    for (size_t k = 0; k < roots.size(); ++k) {
      SparseVec img = m.gens[k].apply(basis[g]);
      if (img.empty()) continue;
      auto [p, q] = roots[k];
      insert_homog(wv_add(bweights[g], alpha(p, q, m.n)), img);
    }
  }

  WeightModule sub = make_module(m.n, bweights);
  if (distinguished_first && !basis.empty() &&
      basis[0] == SparseVec::unit(*distinguished_first))
    sub.distinguished = 0;
  for (size_t k = 0; k < roots.size(); ++k) {
    auto [p, q] = roots[k];
    WeightVec al = alpha(p, q, m.n);
    for (int c = 0; c < sub.dim(); ++c) {
      SparseVec img = m.gens[k].apply(basis[c]);
      if (img.empty()) continue;
      WeightVec wt = wv_add(bweights[c], al);
      auto combo = blocks.at(wt).express_rows(img);
      if (!combo) throw std::logic_error("submodule_generated: closure failure");
      const auto& gids = block_gids.at(wt);
      for (const auto& [rid, v] : combo->ents)
        sub.gens[k].col[c].set(gids[rid], v);
    }
  }
  SparseMat incl(m.dim(), sub.dim());
  for (int c = 0; c < sub.dim(); ++c) incl.col[c] = basis[c];
  return {sub, Morphism{sub, m, std::move(incl)}};
}

QuotientResult quotient(const WeightModule& m, const std::vector<SparseVec>& sub) {
  // Reduced echelon of the subspace, one block per weight.
  std::map<WeightVec, std::vector<SparseVec>> by_wt;
  for (const auto& v : sub)
    for (auto& [wt, comp] : split_by_weight(m, v)) by_wt[wt].push_back(comp);
  std::vector<SparseVec> all_rows;
  std::vector<bool> is_pivot(m.dim(), false);
  for (auto& [wt, rows] : by_wt) {
    Rref rr = rref(rows, m.dim());
    for (auto [c, r] : rr.pivots) is_pivot[c] = true;
    for (auto& r : rr.rows) all_rows.push_back(std::move(r));
  }
  std::vector<int> comp_of(m.dim(), -1);
  std::vector<int> comp_idx;
  for (int j = 0; j < m.dim(); ++j)
    if (!is_pivot[j]) {
      comp_of[j] = static_cast<int>(comp_idx.size());
      comp_idx.push_back(j);
    }
  std::vector<WeightVec> qw;
  for (int j : comp_idx) qw.push_back(m.weights[j]);
  WeightModule q = make_module(m.n, std::move(qw));

  SparseMat proj(q.dim(), m.dim());
  for (int j = 0; j < m.dim(); ++j)
    if (!is_pivot[j]) proj.col[j] = SparseVec::unit(comp_of[j]);
  for (const auto& row : all_rows) {
    int p = row.leading_index();
    SparseVec cls;
    for (const auto& [c, v] : row.ents)
      if (c != p && comp_of[c] >= 0) cls.set(comp_of[c], -v);
    proj.col[p] = std::move(cls);
  }

  const auto& roots = root_pairs(m.n);
  for (size_t k = 0; k < roots.size(); ++k) {
    for (int t = 0; t < q.dim(); ++t)
      q.gens[k].col[t] = proj.apply(m.gens[k].col[comp_idx[t]]);
    // Stability: the span must be carried into itself.
    for (const auto& row : all_rows)
      if (!proj.apply(m.gens[k].apply(row)).empty())
        throw std::invalid_argument("quotient: subspace is not a submodule");
  }
  return {q, Morphism{m, q, std::move(proj)}};
}

QuotientResult largest_quotient(const WeightModule& m,
                                const std::function<bool(const WeightVec&)>& pred) {
  std::vector<SparseVec> seeds;
  for (int i = 0; i < m.dim(); ++i)
    if (!pred(m.weights[i])) seeds.push_back(SparseVec::unit(i));
  auto sub = submodule_generated(m, seeds);
  std::vector<SparseVec> rows;
  for (const auto& c : sub.incl.mat.col) rows.push_back(c);
  return quotient(m, rows);
}

SubmoduleResult largest_submodule_le(const WeightModule& m, const WeightVec& mu) {
  // Iteratively shrink the span of the allowed weight spaces until it is
  // stable under every generator.
  std::map<WeightVec, std::vector<SparseVec>> span;
  for (int i = 0; i < m.dim(); ++i)
    if (weight_leq(m.weights[i], mu, OrderKind::lt))
      span[m.weights[i]].push_back(SparseVec::unit(i));

  const auto& roots = root_pairs(m.n);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<WeightVec, RowBasis> bases;
    for (const auto& [wt, vecs] : span) {
      auto& rb = bases.try_emplace(wt).first->second;
      for (const auto& v : vecs) rb.insert(v);
    }
    std::map<WeightVec, std::vector<SparseVec>> next;
    for (const auto& [wt, vecs] : span) {
      int kdim = static_cast<int>(vecs.size());
      std::vector<SparseVec> eqs;
      for (size_t k = 0; k < roots.size(); ++k) {
        auto [p, q] = roots[k];
        WeightVec wt2 = wv_add(wt, alpha(p, q, m.n));
        auto it = bases.find(wt2);
        std::map<int, SparseVec> eq_by_coord;
        for (int i = 0; i < kdim; ++i) {
          SparseVec img = m.gens[k].apply(vecs[i]);
          SparseVec res = (it == bases.end()) ? img : it->second.reduce(img);
          for (const auto& [coord, v] : res.ents)
            eq_by_coord[coord].set(i, v);
        }
        for (auto& [coord, eq] : eq_by_coord) eqs.push_back(std::move(eq));
      }
      std::vector<SparseVec> sols = nullspace(eqs, kdim);
      if (static_cast<int>(sols.size()) != kdim) changed = true;
      std::vector<SparseVec> nv;
      for (const auto& s : sols) {
        SparseVec v;
        for (const auto& [i, c] : s.ents) axpy(v, c, vecs[i]);
        if (!v.empty()) nv.push_back(std::move(v));
      }
      if (!nv.empty()) next[wt] = std::move(nv);
    }
    span = std::move(next);
  }
  std::vector<SparseVec> all;
  for (const auto& [wt, vecs] : span)
    for (const auto& v : vecs) all.push_back(v);
  return submodule_generated(m, all);
}

namespace {

struct HomSystem {
  std::vector<std::pair<int, int>> unknowns;          // (row, col)
  std::map<std::pair<int, int>, int> uid;             // unknown id
  std::vector<std::vector<std::pair<int, int>>> by_col;  // col -> [(row, uid)]
  std::vector<SparseVec> eqs;
};

HomSystem hom_system(const WeightModule& a, const WeightModule& b) {
  if (a.n != b.n) throw std::invalid_argument("hom: rank mismatch");
  HomSystem hs;
  hs.by_col.resize(a.dim());
  std::map<WeightVec, std::vector<int>> b_by_wt;
  for (int r = 0; r < b.dim(); ++r) b_by_wt[b.weights[r]].push_back(r);
  for (int c = 0; c < a.dim(); ++c) {
    auto it = b_by_wt.find(a.weights[c]);
    if (it == b_by_wt.end()) continue;
    for (int r : it->second) {
      int id = static_cast<int>(hs.unknowns.size());
      hs.unknowns.emplace_back(r, c);
      hs.uid[{r, c}] = id;
      hs.by_col[c].emplace_back(r, id);
    }
  }
  const auto& roots = root_pairs(a.n);
  for (size_t k = 0; k < roots.size(); ++k) {
    for (int c = 0; c < a.dim(); ++c) {
      // phi(e.v_c) - e.phi(v_c) = 0, one equation per target coordinate.
      std::map<int, SparseVec> eq;
      for (const auto& [c2, v] : a.gens[k].col[c].ents)
        for (const auto& [r, id] : hs.by_col[c2]) eq[r].set(id, v);
      for (const auto& [r2, id] : hs.by_col[c])
        for (const auto& [r, v] : b.gens[k].col[r2].ents)
          eq[r].set(id, eq[r].at(id) - v);
      for (auto& [r, e] : eq)
        if (!e.empty()) hs.eqs.push_back(std::move(e));
    }
  }
  return hs;
}

SparseMat unknowns_to_mat(const HomSystem& hs, const SparseVec& x, int rows,
                          int cols) {
  SparseMat m(rows, cols);
  for (const auto& [id, v] : x.ents) {
    auto [r, c] = hs.unknowns[id];
    m.col[c].set(r, v);
  }
  return m;
}

}  // namespace

std::vector<SparseMat> hom_space_mats(const WeightModule& a, const WeightModule& b) {
  HomSystem hs = hom_system(a, b);
  std::vector<SparseMat> out;
  for (const auto& x : nullspace(hs.eqs, static_cast<int>(hs.unknowns.size())))
    out.push_back(unknowns_to_mat(hs, x, b.dim(), a.dim()));
  return out;
}

std::vector<Morphism> hom_space(const WeightModule& a, const WeightModule& b) {
  std::vector<Morphism> out;
  for (auto& m : hom_space_mats(a, b)) out.push_back(Morphism{a, b, std::move(m)});
  return out;
}

std::optional<SparseMat> hom_with_values(
    const WeightModule& a, const WeightModule& b,
    const std::vector<std::pair<SparseVec, SparseVec>>& pins) {
  HomSystem hs = hom_system(a, b);
  std::vector<SparseVec> eqs = hs.eqs;
  std::vector<Rat> rhs(eqs.size(), Rat(0));
  for (const auto& [x, y] : pins) {
    std::map<int, SparseVec> eq;
    for (const auto& [c, xv] : x.ents)
      for (const auto& [r, id] : hs.by_col[c])
        eq[r].set(id, eq[r].at(id) + xv);
    std::map<int, Rat> yv;
    for (const auto& [r, v] : y.ents) yv[r] = v;
    for (auto& [r, e] : eq) {
      eqs.push_back(e);
      rhs.push_back(yv.count(r) ? yv[r] : Rat(0));
      yv.erase(r);
    }
    for (auto& [r, v] : yv) {  // coordinates with no unknowns at all
      if (v != 0) {
        eqs.push_back(SparseVec());
        rhs.push_back(v);
      }
    }
  }
  auto sol = solve(eqs, rhs, static_cast<int>(hs.unknowns.size()));
  if (!sol) return std::nullopt;
  return unknowns_to_mat(hs, *sol, b.dim(), a.dim());
}

namespace {

std::optional<SparseMat> invert(const SparseMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  std::vector<SparseVec> rows;
  SparseMat t = m.transpose();
  for (const auto& c : t.col) rows.push_back(c);
  SparseMat inv(m.rows, m.rows);
  for (int j = 0; j < m.rows; ++j) {
    std::vector<Rat> rhs(m.rows, Rat(0));
    rhs[j] = 1;
    auto x = solve(rows, rhs, m.rows);
    if (!x) return std::nullopt;
    inv.col[j] = *x;
  }
  return inv;
}

bool mat_bijective(const SparseMat& m) {
  if (m.rows != m.cols) return false;
  RowBasis rb;
  for (const auto& c : m.col) rb.insert(c);
  return rb.rank() == m.rows;
}

}  // namespace

std::optional<Morphism> is_isomorphic(const WeightModule& a, const WeightModule& b) {
  if (a.n != b.n) return std::nullopt;
  if (!(character(a) == character(b))) return std::nullopt;
  if (a.dim() == 0) return Morphism{a, b, SparseMat(0, 0)};

  auto count_wt = [](const WeightModule& m, const WeightVec& wt) {
    int c = 0;
    for (const auto& w : m.weights) c += (w == wt);
    return c;
  };
  auto index_of_wt = [](const WeightModule& m, const WeightVec& wt) {
    for (int i = 0; i < m.dim(); ++i)
      if (m.weights[i] == wt) return i;
    return -1;
  };

  // A distinguished cyclic generator pins any isomorphism up to scale when
  // its weight space is 1-dimensional on both sides.
  if (a.distinguished) {
    const WeightVec& wt = a.weights[*a.distinguished];
    if (count_wt(a, wt) == 1 && count_wt(b, wt) == 1) {
      auto sol = hom_with_values(
          a, b,
          {{SparseVec::unit(*a.distinguished), SparseVec::unit(index_of_wt(b, wt))}});
      if (sol && mat_bijective(*sol)) return Morphism{a, b, *sol};
      return std::nullopt;
    }
  }
  if (b.distinguished) {
    const WeightVec& wt = b.weights[*b.distinguished];
    if (count_wt(a, wt) == 1 && count_wt(b, wt) == 1) {
      auto sol = hom_with_values(
          b, a,
          {{SparseVec::unit(*b.distinguished), SparseVec::unit(index_of_wt(a, wt))}});
      if (sol && mat_bijective(*sol)) {
        auto inv = invert(*sol);
        if (inv) return Morphism{a, b, *inv};
      }
      return std::nullopt;
    }
  }

  std::vector<SparseMat> basis = hom_space_mats(a, b);
  if (basis.empty()) return std::nullopt;
  auto check = [&](const SparseMat& m) -> std::optional<Morphism> {
    if (mat_bijective(m)) return Morphism{a, b, m};
    return std::nullopt;
  };
  for (const auto& h : basis)
    if (auto w = check(h)) return w;
  {
    SparseMat s(b.dim(), a.dim());
    for (const auto& h : basis) s = s + h;
    if (auto w = check(s)) return w;
  }
  // The determinant is a polynomial in the combination coefficients; with
  // coefficients sampled from a large range, enough singular samples mean it
  // vanishes identically.
  std::mt19937 rng(0x5eed1234u);
  for (int trial = 0; trial < 64; ++trial) {
    SparseMat s(b.dim(), a.dim());
    for (const auto& h : basis) {
      long lo = (trial < 16) ? -3 : 0;
      long hi = (trial < 16) ? 3 : (1L << 30);
      std::uniform_int_distribution<long> dist(lo, hi);
      s = s + h * Rat(static_cast<long>(dist(rng)));
    }
    if (auto w = check(s)) return w;
  }
  return std::nullopt;
}

}  // namespace kp
