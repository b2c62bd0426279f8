// Finite-dimensional weight modules over the upper-triangular Lie algebra:
// exact generator matrices per strict root e_pq, weight bookkeeping, the
// standard constructions (tensor, exterior power, twisted dual, submodule,
// quotient), and intertwiner solving. All values are immutable after
// construction and every operation is pure.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kpmod/linalg.hpp"
#include "kpmod/perm.hpp"
#include "kpmod/poly.hpp"

namespace kp {

struct WeightModule {
  int n = 0;                        // rank of the ambient Lie algebra
  std::vector<WeightVec> weights;   // one weight per basis vector
  // gens[k] is the action of e_pq where (p,q) = root_pairs(n)[k].
  std::vector<SparseMat> gens;
  std::optional<int> distinguished; // index of a cyclic generator, if any

  int dim() const { return static_cast<int>(weights.size()); }
  const SparseMat& gen(int p, int q) const;
  SparseVec apply_gen(int p, int q, const SparseVec& v) const {
    return gen(p, q).apply(v);
  }
};

// The strict roots (p,q), p<q, in lexicographic order; fixed across the code.
const std::vector<std::pair<int, int>>& root_pairs(int n);
int root_index(int p, int q, int n);

WeightModule one_dim(const WeightVec& lam);
WeightModule vector_rep(int n);             // K^n, e_pq u_i = delta_qi u_p
WeightModule truncated_vector(int n, int i); // K^i inside rank n
WeightModule zero_module(int n);
WeightModule direct_sum(const WeightModule& a, const WeightModule& b);
WeightModule tensor(const WeightModule& a, const WeightModule& b);
// l-th exterior power; basis = strictly increasing index tuples, all signs
// from sorting wedge factors into increasing order.
WeightModule exterior_power(const WeightModule& m, int l);
// Strictly increasing l-tuples from {0..d-1} in lexicographic order, the
// basis enumeration used by exterior_power.
std::vector<std::vector<int>> increasing_tuples(int d, int l);
// M* tensored with K_rho: (e.f)(v) = -f(e.v), weights rho - w.
WeightModule dual_twist(const WeightModule& m);
WeightModule shift_weights(const WeightModule& m, const WeightVec& by);

// nullopt when all invariants hold, otherwise a description of the first
// violated identity (weight shift, bracket, shape).
std::optional<std::string> validate(const WeightModule& m);

MultiPoly character(const WeightModule& m);

struct Morphism {
  WeightModule source;
  WeightModule target;
  SparseMat mat;  // target.dim() x source.dim()
};

bool is_morphism(const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
int morphism_rank(const Morphism& f);
bool is_injective(const Morphism& f);
bool is_surjective(const Morphism& f);
bool is_bijective(const Morphism& f);

struct SubmoduleResult {
  WeightModule sub;
  Morphism incl;  // sub -> ambient
};

struct QuotientResult {
  WeightModule quot;
  Morphism proj;  // ambient -> quot
};

// Closure of the span of the given vectors under every e_pq, with the
// induced action. Vectors are split into weight-homogeneous components
// first. If distinguished_first is set and that single basis vector of the
// ambient module is among the generators, it becomes basis vector 0 of the
// submodule and is marked distinguished there.
SubmoduleResult submodule_generated(const WeightModule& m,
                                    const std::vector<SparseVec>& vectors,
                                    std::optional<int> distinguished_first = std::nullopt);

// Quotient by the span of the given vectors, which must be stable under the
// action (throws std::invalid_argument otherwise). The complement basis is
// the non-pivot columns of the span's reduced echelon form, per weight.
QuotientResult quotient(const WeightModule& m, const std::vector<SparseVec>& sub);

// M / (submodule generated by all weight spaces whose weight fails pred).
QuotientResult largest_quotient(const WeightModule& m,
                                const std::function<bool(const WeightVec&)>& pred);

// Largest submodule all of whose weights are <= mu in the first order.
SubmoduleResult largest_submodule_le(const WeightModule& m, const WeightVec& mu);

// Basis of the space of weight-preserving maps commuting with all e_pq.
std::vector<Morphism> hom_space(const WeightModule& a, const WeightModule& b);
// Same, but only the matrices (cheaper to carry around).
std::vector<SparseMat> hom_space_mats(const WeightModule& a, const WeightModule& b);

// Morphisms f with f(pins[i].first) = pins[i].second on top of the
// intertwiner conditions; one solution if any exists.
std::optional<SparseMat> hom_with_values(
    const WeightModule& a, const WeightModule& b,
    const std::vector<std::pair<SparseVec, SparseVec>>& pins);

// Witness isomorphism, or nullopt when the modules are distinct.
std::optional<Morphism> is_isomorphic(const WeightModule& a, const WeightModule& b);

}  // namespace kp
