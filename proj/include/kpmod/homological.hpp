// Ext groups via the relative cochain complex of the strictly upper
// triangular subalgebra, extension realization, standard filtrations, and
// the tilting machinery (recognition, envelopes, resolutions).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpmod/kpmodule.hpp"
#include "kpmod/weightmod.hpp"

namespace kp {

// Cochain complex computing Ext*(M, N) in the category of weight modules:
// degree-d space = diagonal-weight-zero part of Hom(Wedge^d n+, Hom(M,N)).
struct CochainComplex {
  struct Entry {
    int mask;  // subset of root_pairs(n), bit k = root k
    int r, c;  // Hom(M, N) matrix position
  };
  int n = 0;
  int top = 0;  // dim n+ = n(n-1)/2
  std::vector<std::vector<Entry>> basis;  // per degree 0..top
  std::vector<SparseMat> diff;            // diff[d] : C^d -> C^{d+1}
};

CochainComplex cochain_complex(const WeightModule& m, const WeightModule& nn,
                               int max_degree);

long long ext_dim(const WeightModule& m, const WeightModule& nn, int i);
// All of Ext^0..Ext^maxdeg at once (one complex build).
std::vector<long long> ext_dims(const WeightModule& m, const WeightModule& nn,
                                int max_degree);

struct Ext1Classes {
  CochainComplex cx;                // degrees 0..2
  std::vector<SparseVec> classes;  // 1-cocycles, independent mod coboundaries
};
Ext1Classes ext1_classes(const WeightModule& m, const WeightModule& nn);

// The extension 0 -> N -> X -> M -> 0 attached to a 1-cocycle.
WeightModule realize_extension(const WeightModule& m, const WeightModule& nn,
                               const Ext1Classes& cls, const SparseVec& cocycle);
// Whether the cocycle is a coboundary (the realized sequence splits).
bool extension_splits(const Ext1Classes& cls, const SparseVec& cocycle);

struct FiltrationLayer {
  WeightVec label;
  int multiplicity;
  Morphism witness;  // direct sum of multiplicity copies of S_label -> layer
};

// Layers listed from the top of the weight order downward; the chain of
// submodules is the chain of kernels of the successive largest quotients.
struct Filtration {
  std::vector<FiltrationLayer> layers;
};

// Peels M along a linear extension of the order on its weights; each layer
// is matched against a direct sum of copies of the standard module by the
// cyclic-generator morphism. nullopt when some layer fails.
std::optional<Filtration> standard_filtration(const WeightModule& m);

// dim Hom(M, costandard(lam)); equals the layer count for M with a standard
// filtration.
long long filtration_multiplicity(const WeightModule& m, const WeightVec& lam);

// Ext^1(M, costandard(lam)) = 0 for every lam in the box; requires the
// weights of M to lie in the box.
bool has_standard_filtration(const WeightModule& m);

bool is_tilting(const WeightModule& m);

// Order ideal of the box generated by {lam : Ext^1(S_lam, M) != 0}.
std::vector<WeightVec> defect(const WeightModule& m);
// Order ideal generated by the standard filtration labels.
std::vector<WeightVec> support_ideal(const WeightModule& m);
// Non-maximal elements of an ideal.
std::vector<WeightVec> non_maximal(const std::vector<WeightVec>& ideal);

struct EnvelopeResult {
  WeightModule tilting;
  Morphism incl;  // M -> tilting
};
// Embeds M (with a standard filtration, weights in the box) into a tilting
// by repeatedly realizing extensions at a maximal defect weight.
EnvelopeResult tilting_envelope(const WeightModule& m);

// 0 -> M -> T_0 -> ... -> T_r -> 0 with each T_i a tilting.
std::vector<WeightModule> tilting_resolution(const WeightModule& m);

enum class Indecomposability { indecomposable, unknown };
Indecomposability indecomposable_by_end(const WeightModule& m);

}  // namespace kp
