// Kraskiewicz-Pragacz modules, tilting modules, and the full tilting module
// with its commuting second action, index-swap involution, exterior
// multiplication and top-degree pairing.
#pragma once

#include <functional>
#include <string>

#include "kpmod/weightmod.hpp"

namespace kp {

struct KPModule {
  WeightModule mod;  // distinguished = index of the cyclic generator
  Permutation w;
  int shift = 0;  // S_lam = S_w tensor K_{-shift*1}
};

// The KP module S_w: cyclic submodule of a tensor product of exterior powers
// of K^n generated by the wedge of inversion vectors.
KPModule kp_module(const Permutation& w, int n);
// S_lam for arbitrary lam in Z^n, via a shift making the code nonnegative.
KPModule kp_module_gen(const WeightVec& lam, int n, std::optional<int> force_shift = std::nullopt);

// T(lam) for lam in the box: the tensor product over j of the bar(lam)_j-th
// exterior power of K^{n-j}.
WeightModule tilting_module(const WeightVec& lam, int n);

// The costandard module: dual_twist(S_{rho - lam}).
WeightModule costandard_module(const WeightVec& lam, int n);

// The full tilting module: the exterior algebra on basis vectors u_ij
// (i,j >= 1, i+j <= n) with e_pq u_ij = delta_qi u_pj and a commuting second
// action e'_pq u_ij = delta_qj u_ip. Basis vectors are indexed by subsets of
// the pair set in lexicographic bit order; all signs come from sorting wedge
// factors into that order.
struct FullTilting {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;      // lex sorted
  std::map<std::pair<int, int>, int> pair_bit;
  WeightModule mod;                            // the b-action
  std::map<std::pair<int, int>, SparseMat> bprime;  // e'_pq for p <= q
  std::vector<WeightVec> hprime_weights;       // second grading per basis
  SparseMat swap;                              // u_ij -> u_ji, signed

  int dim() const { return mod.dim(); }
  int nbits() const { return static_cast<int>(pairs.size()); }
  const SparseMat& eprime(int p, int q) const { return bprime.at({p, q}); }
  SparseVec wedge(const SparseVec& u, const SparseVec& v) const;
  Rat pairing(const SparseVec& u, const SparseVec& v) const;
};

FullTilting full_tilting(int n);

// The bit mask of J(w) = {(i, n+1-j) : i < j, w(i) > w(j)} for w in S_n.
int kp_mask_in_tilting(const FullTilting& ft, const Permutation& w);
// u_w as an element of the full tilting module.
SparseVec embed_kp_in_T(const FullTilting& ft, const Permutation& w);

// The span of the basis vectors whose second grading is bar(lam), with the
// induced b-action; isomorphic to tilting_module(lam).
SubmoduleResult tilting_summand(const FullTilting& ft, const WeightVec& lam);

// #{r > q : w(p) < w(r) < w(q)}.
int m_pq(const Permutation& w, int p, int q);
// Whether l(w t_pq) = l(w) + 1.
bool is_cover_transposition(const Permutation& w, int p, int q);

struct VpqResult {
  WeightModule ambient;  // S_x tensor K^n
  SparseVec vec;         // e_pq^{m_pq(x)} u_x tensor u_p
};
// Requires l(x t_pq) = l(x) + 1 with p < q <= n+1.
VpqResult v_pq(const Permutation& x, int p, int q, int n);

struct LemmaReport {
  bool pass = true;
  int cases_checked = 0;
  std::string detail;  // first failure, empty when passing
};

// For all admissible (p,q), (p',q') with p,p' <= i < q,q', checks that a
// nonvanishing mixed product forces w(p) <= w(p') and w(q) <= w(q'), and
// that the diagonal case yields a nonzero multiple of u_{w t_pq}.
LemmaReport check_lemma_pqpq(const FullTilting& ft, const Permutation& w, int i);
// Same with a custom second action (used by negative controls).
LemmaReport check_lemma_pqpq_with(
    const FullTilting& ft,
    const std::function<const SparseMat&(int, int)>& eprime,
    const Permutation& w, int i);

}  // namespace kp
