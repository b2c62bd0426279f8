#include "kpmod/homological.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kp {

namespace {

int popcount(int x) { return __builtin_popcount(static_cast<unsigned>(x)); }

// [e_x, e_y] for roots x, y: either zero or a signed root.
std::optional<std::pair<int, Rat>> bracket(int x, int y, int n) {
  auto [p, q] = root_pairs(n)[x];
  auto [r, s] = root_pairs(n)[y];
  if (q == r) return std::make_pair(root_index(p, s, n), Rat(1));
  if (s == p) return std::make_pair(root_index(r, q, n), Rat(-1));
  return std::nullopt;
}

WeightVec root_weight(int mask, int n) {
  WeightVec w(n, 0);
  for (size_t k = 0; k < root_pairs(n).size(); ++k)
    if (mask & (1 << k)) {
      auto [p, q] = root_pairs(n)[k];
      ++w[p - 1];
      --w[q - 1];
    }
  return w;
}

// 1-based position of bit b inside mask (which contains b).
int bit_position(int mask, int b) {
  return popcount(mask & ((1 << b) - 1)) + 1;
}

}  // namespace

CochainComplex cochain_complex(const WeightModule& m, const WeightModule& nn,
                               int max_degree) {
  if (m.n != nn.n) throw std::invalid_argument("cochain_complex: rank mismatch");
  int n = m.n;
  int top = static_cast<int>(root_pairs(n).size());
  CochainComplex cx;
  cx.n = n;
  cx.top = top;
  int hi = std::min(max_degree, top);

  // Basis per degree: (mask, r, c) with wt_N(r) - wt_M(c) = weight(mask).
  std::vector<std::map<std::tuple<int, int, int>, int>> index(hi + 2);
  cx.basis.resize(hi + 2);
  std::map<WeightVec, std::vector<std::pair<int, int>>> homs_by_wt;
  for (int r = 0; r < nn.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c)
      homs_by_wt[wv_sub(nn.weights[r], m.weights[c])].emplace_back(r, c);
  for (int mask = 0; mask < (1 << top); ++mask) {
    int d = popcount(mask);
    if (d > hi + 1) continue;
    auto it = homs_by_wt.find(root_weight(mask, n));
    if (it == homs_by_wt.end()) continue;
    for (auto [r, c] : it->second) {
      index[d][{mask, r, c}] = static_cast<int>(cx.basis[d].size());
      cx.basis[d].push_back({mask, r, c});
    }
  }

  // Transposes for row access of the source generators.
  std::vector<SparseMat> gmt;
  for (const auto& g : m.gens) gmt.push_back(g.transpose());

  cx.diff.resize(hi + 1);
  for (int d = 0; d <= hi; ++d) {
    SparseMat D(static_cast<int>(cx.basis[d + 1].size()),
                static_cast<int>(cx.basis[d].size()));
    for (size_t colid = 0; colid < cx.basis[d].size(); ++colid) {
      const auto& [S, r, c] = cx.basis[d][colid];
      SparseVec& col = D.col[colid];
      auto add = [&](int mask, int r2, int c2, const Rat& v) {
        if (v == 0) return;
        auto it = index[d + 1].find({mask, r2, c2});
        if (it == index[d + 1].end())
          throw std::logic_error("cochain_complex: weight bookkeeping failed");
        col.set(it->second, col.at(it->second) + v);
      };
      for (int u = 0; u < top; ++u) {
        if (S & (1 << u)) continue;
        int S2 = S | (1 << u);
        Rat s0 = (bit_position(S2, u) % 2 == 1) ? Rat(1) : Rat(-1);
        // action term: e_u . phi = e^N_u phi - phi e^M_u
        for (const auto& [r2, v] : nn.gens[u].col[r].ents) add(S2, r2, c, s0 * v);
        for (const auto& [c2, v] : gmt[u].col[c].ents) add(S2, r, c2, -s0 * v);
      }
      // bracket terms: phi([x,y], rest) with {x,y} added and b consumed.
      for (int b = 0; b < top; ++b) {
        if (!(S & (1 << b))) continue;
        int rest = S & ~(1 << b);
        Rat sb = (bit_position(S, b) % 2 == 1) ? Rat(1) : Rat(-1);
        for (int x = 0; x < top; ++x) {
          if (rest & (1 << x)) continue;
          for (int y = x + 1; y < top; ++y) {
            if (rest & (1 << y)) continue;
            auto br = bracket(x, y, cx.n);
            if (!br || br->first != b) continue;
            int S2 = rest | (1 << x) | (1 << y);
            int sx = bit_position(S2, x), sy = bit_position(S2, y);
            Rat sgn = ((sx + sy) % 2 == 0) ? Rat(1) : Rat(-1);
            add(S2, r, c, sgn * br->second * sb);
          }
        }
      }
    }
    cx.diff[d] = std::move(D);
  }
  return cx;
}

std::vector<long long> ext_dims(const WeightModule& m, const WeightModule& nn,
                                int max_degree) {
  CochainComplex cx = cochain_complex(m, nn, max_degree);
  std::vector<long long> out;
  std::vector<int> ranks(std::min(max_degree, cx.top) + 1, 0);
  for (size_t d = 0; d < cx.diff.size(); ++d) {
    std::vector<SparseVec> cols = cx.diff[d].col;
    ranks[d] = rank_of(cols);
  }
  for (int i = 0; i <= max_degree; ++i) {
    if (i > cx.top) {
      out.push_back(0);
      continue;
    }
    long long dimci = static_cast<long long>(cx.basis[i].size());
    long long rk_i = (i < static_cast<int>(ranks.size())) ? ranks[i] : 0;
    long long rk_prev = (i > 0) ? ranks[i - 1] : 0;
    out.push_back(dimci - rk_i - rk_prev);
  }
  return out;
}

long long ext_dim(const WeightModule& m, const WeightModule& nn, int i) {
  return ext_dims(m, nn, i)[i];
}

Ext1Classes ext1_classes(const WeightModule& m, const WeightModule& nn) {
  Ext1Classes out;
  out.cx = cochain_complex(m, nn, 2);
  const SparseMat& d1 = out.cx.diff[1];
  std::vector<SparseVec> rows;
  SparseMat d1t = d1.transpose();
  for (const auto& r : d1t.col) rows.push_back(r);
  std::vector<SparseVec> kernel = nullspace(rows, d1.cols);
  RowBasis span;  // image of d0, then grown by accepted classes
  for (const auto& c : out.cx.diff[0].col) span.insert(c);
  for (const auto& k : kernel)
    if (span.insert(k) >= 0) out.classes.push_back(k);
  return out;
}

WeightModule realize_extension(const WeightModule& m, const WeightModule& nn,
                               const Ext1Classes& cls, const SparseVec& cocycle) {
  int top = cls.cx.top;
  std::vector<SparseMat> blocks(top, SparseMat(nn.dim(), m.dim()));
  for (const auto& [id, v] : cocycle.ents) {
    const auto& e = cls.cx.basis[1][id];
    int u = 0;
    while (!(e.mask & (1 << u))) ++u;
    blocks[u].set(e.r, e.c, v);
  }
  WeightModule x;
  x.n = m.n;
  x.weights = nn.weights;
  x.weights.insert(x.weights.end(), m.weights.begin(), m.weights.end());
  int dn = nn.dim();
  for (int k = 0; k < top; ++k) {
    SparseMat g(x.dim(), x.dim());
    for (int c = 0; c < dn; ++c)
      for (const auto& [r, v] : nn.gens[k].col[c].ents) g.col[c].set(r, v);
    for (int c = 0; c < m.dim(); ++c) {
      for (const auto& [r, v] : m.gens[k].col[c].ents)
        g.col[dn + c].set(dn + r, v);
      for (const auto& [r, v] : blocks[k].col[c].ents) g.col[dn + c].set(r, v);
    }
    x.gens.push_back(std::move(g));
  }
  return x;
}

bool extension_splits(const Ext1Classes& cls, const SparseVec& cocycle) {
  RowBasis im;
  for (const auto& c : cls.cx.diff[0].col) im.insert(c);
  return im.contains(cocycle);
}

std::optional<Filtration> standard_filtration(const WeightModule& m) {
  int n = m.n;
  std::vector<WeightVec> wts;
  for (const auto& w : m.weights) wts.push_back(w);
  std::sort(wts.begin(), wts.end());
  wts.erase(std::unique(wts.begin(), wts.end()), wts.end());
  // Linear extension of the order: coordinate sum first, then the first
  // total order inside each degree.
  std::sort(wts.begin(), wts.end(), [](const WeightVec& a, const WeightVec& b) {
    long long sa = wv_sum(a), sb = wv_sum(b);
    if (sa != sb) return sa < sb;
    return weight_less(a, b, OrderKind::lt);
  });

  Filtration out;
  WeightModule q = m;
  for (int i = static_cast<int>(wts.size()) - 1; i >= 0; --i) {
    const WeightVec& lam = wts[i];
    std::vector<SparseVec> seeds;
    for (int t = 0; t < q.dim(); ++t)
      if (q.weights[t] == lam) seeds.push_back(SparseVec::unit(t));
    if (seeds.empty()) continue;
    auto layer = submodule_generated(q, seeds);
    int mult = static_cast<int>(seeds.size());
    KPModule s = kp_module_gen(lam, n);
    int sd = s.mod.dim();
    if (layer.sub.dim() != mult * sd) return std::nullopt;

    WeightModule ds = s.mod;
    for (int j = 1; j < mult; ++j) ds = direct_sum(ds, s.mod);
    SparseMat big(layer.sub.dim(), mult * sd);
    for (int j = 0; j < mult; ++j) {
      // Seeds are inserted first in the closure, so seed j is basis vector j.
      auto phi = hom_with_values(
          s.mod, layer.sub,
          {{SparseVec::unit(*s.mod.distinguished), SparseVec::unit(j)}});
      if (!phi) return std::nullopt;
      for (int c = 0; c < sd; ++c) big.col[j * sd + c] = phi->col[c];
    }
    Morphism witness{ds, layer.sub, std::move(big)};
    if (!is_bijective(witness)) return std::nullopt;
    out.layers.push_back({lam, mult, std::move(witness)});

    std::vector<SparseVec> layer_rows;
    for (const auto& c : layer.incl.mat.col) layer_rows.push_back(c);
    q = quotient(q, layer_rows).quot;
  }
  if (q.dim() != 0)
    throw std::logic_error("standard_filtration: peeling left a remainder");
  return out;
}

long long filtration_multiplicity(const WeightModule& m, const WeightVec& lam) {
  return static_cast<long long>(
      hom_space_mats(m, costandard_module(lam, m.n)).size());
}

namespace {

void require_in_box(const WeightModule& m, const char* who) {
  for (const auto& w : m.weights)
    if (!in_lambda_n(w, m.n))
      throw std::invalid_argument(std::string(who) + ": weights must lie in the box");
}

}  // namespace

bool has_standard_filtration(const WeightModule& m) {
  require_in_box(m, "has_standard_filtration");
  for (const auto& lam : lambda_n(m.n))
    if (ext_dim(m, costandard_module(lam, m.n), 1) != 0) return false;
  return true;
}

bool is_tilting(const WeightModule& m) {
  require_in_box(m, "is_tilting");
  if (!standard_filtration(m)) return false;
  for (const auto& lam : lambda_n(m.n))
    if (ext_dim(kp_module_gen(lam, m.n).mod, m, 1) != 0) return false;
  return true;
}

namespace {

std::vector<WeightVec> ideal_closure(std::vector<WeightVec> gens, int n) {
  std::vector<WeightVec> out;
  for (const auto& mu : lambda_n(n)) {
    bool below = false;
    for (const auto& lam : gens)
      if (mu == lam || weight_less(mu, lam, OrderKind::prec)) {
        below = true;
        break;
      }
    if (below) out.push_back(mu);
  }
  return out;
}

}  // namespace

std::vector<WeightVec> defect(const WeightModule& m) {
  require_in_box(m, "defect");
  std::vector<WeightVec> gens;
  for (const auto& lam : lambda_n(m.n))
    if (ext_dim(kp_module_gen(lam, m.n).mod, m, 1) != 0) gens.push_back(lam);
  return ideal_closure(std::move(gens), m.n);
}

std::vector<WeightVec> support_ideal(const WeightModule& m) {
  require_in_box(m, "support_ideal");
  auto f = standard_filtration(m);
  if (!f) throw std::invalid_argument("support_ideal: no standard filtration");
  std::vector<WeightVec> gens;
  for (const auto& l : f->layers) gens.push_back(l.label);
  return ideal_closure(std::move(gens), m.n);
}

std::vector<WeightVec> non_maximal(const std::vector<WeightVec>& ideal) {
  std::vector<WeightVec> out;
  for (const auto& a : ideal) {
    bool maximal = true;
    for (const auto& b : ideal)
      if (weight_less(a, b, OrderKind::prec)) {
        maximal = false;
        break;
      }
    if (!maximal) out.push_back(a);
  }
  return out;
}

EnvelopeResult tilting_envelope(const WeightModule& m) {
  require_in_box(m, "tilting_envelope");
  if (!standard_filtration(m))
    throw std::invalid_argument("tilting_envelope: no standard filtration");
  WeightModule cur = m;
  Morphism inj{m, m, SparseMat::identity(m.dim())};
  int guard = 64 * static_cast<int>(lambda_n(m.n).size());
  while (true) {
    if (guard-- < 0) throw std::logic_error("tilting_envelope: failed to terminate");
    std::vector<WeightVec> d = defect(cur);
    if (d.empty()) break;
    // A maximal defect element; ties between incomparable weights go to the
    // lexicographically largest.
    WeightVec lam;
    bool found = false;
    for (const auto& c : d) {
      bool maximal = true;
      for (const auto& o : d)
        if (weight_less(c, o, OrderKind::prec)) {
          maximal = false;
          break;
        }
      if (maximal && (!found || c > lam)) lam = c, found = true;
    }
    KPModule s = kp_module_gen(lam, m.n);
    Ext1Classes cls = ext1_classes(s.mod, cur);
    if (cls.classes.empty())
      throw std::logic_error("tilting_envelope: maximal defect weight without classes");
    WeightModule x = realize_extension(s.mod, cur, cls, cls.classes.front());
    SparseMat step(x.dim(), cur.dim());
    for (int c = 0; c < cur.dim(); ++c) step.col[c] = SparseVec::unit(c);
    inj = compose(Morphism{cur, x, std::move(step)}, inj);
    cur = std::move(x);
  }
  inj.target = cur;
  return {cur, inj};
}

std::vector<WeightModule> tilting_resolution(const WeightModule& m) {
  std::vector<WeightModule> out;
  WeightModule cur = m;
  int guard = 16;
  while (true) {
    if (guard-- < 0) throw std::logic_error("tilting_resolution: failed to terminate");
    EnvelopeResult env = tilting_envelope(cur);
    out.push_back(env.tilting);
    std::vector<SparseVec> img;
    for (const auto& c : env.incl.mat.col) img.push_back(c);
    WeightModule coker = quotient(env.tilting, img).quot;
    if (coker.dim() == 0) break;
    cur = std::move(coker);
  }
  return out;
}

Indecomposability indecomposable_by_end(const WeightModule& m) {
  return hom_space_mats(m, m).size() == 1 ? Indecomposability::indecomposable
                                          : Indecomposability::unknown;
}

}  // namespace kp
