// Exact sparse linear algebra over arbitrary-precision rationals.
//
// Everything in this project is computed over Q with GMP; there is no
// floating point anywhere. Vectors are sparse (sorted index/value pairs),
// matrices are held column-major. Elimination picks pivots of minimal bit
// length to keep coefficient growth under control.
#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kp {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse vector: entries sorted by index, no explicit zeros.
struct SparseVec {
  std::vector<std::pair<int, Rat>> ents;

  SparseVec() = default;
  static SparseVec unit(int i, const Rat& c = Rat(1));

  bool empty() const { return ents.empty(); }
  int leading_index() const { return ents.front().first; }
  Rat at(int i) const;
  void set(int i, const Rat& c);
  size_t nnz() const { return ents.size(); }

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec operator*(const Rat& c) const;
  bool operator==(const SparseVec& o) const { return ents == o.ents; }
};

// dst += c * src
void axpy(SparseVec& dst, const Rat& c, const SparseVec& src);

// Column-major sparse matrix.
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<SparseVec> col;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
  static SparseMat identity(int d);

  Rat at(int r, int c) const { return col[c].at(r); }
  void set(int r, int c, const Rat& v) { col[c].set(r, v); }
  void add_at(int r, int c, const Rat& v) { col[c].set(r, col[c].at(r) + v); }
  bool is_zero() const;

  SparseVec apply(const SparseVec& v) const;    // this * v
  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat operator*(const Rat& c) const;
  SparseMat transpose() const;
  SparseMat pow(int k) const;
  bool operator==(const SparseMat& o) const;

  // Flatten to a vector indexed by r*cols + c (row-major entry ids).
  SparseVec flatten() const;
  static SparseMat unflatten(const SparseVec& v, int rows, int cols);
};

// Incremental echelon basis. Rows are kept in insertion order; each new row
// is reduced against the existing ones and kept only if independent. With
// provenance tracking the basis can express members of its span as exact
// combinations of the originally inserted (accepted) vectors.
class RowBasis {
 public:
  explicit RowBasis(bool track_provenance = false) : track_(track_provenance) {}

  // Returns the id of the new row, or -1 if v is dependent on the basis.
  int insert(const SparseVec& v);
  // Residual of v after elimination.
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  // Coefficients over the accepted original vectors; nullopt if not in span.
  std::optional<std::vector<Rat>> express(const SparseVec& v) const;
  // Coefficients over the reduced rows themselves; nullopt if not in span.
  std::optional<SparseVec> express_rows(const SparseVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  const SparseVec& row(int i) const { return rows_[i].v; }

 private:
  struct Row {
    SparseVec v;
    SparseVec expr;  // combination of accepted originals giving v
  };
  bool track_;
  std::vector<Row> rows_;
  std::map<int, int> pivot_;  // leading index -> row id
};

// Reduced row echelon form: pivots normalized to 1 and eliminated from all
// other rows; zero rows dropped. pivots lists (column, row-in-output).
struct Rref {
  std::vector<SparseVec> rows;
  std::vector<std::pair<int, int>> pivots;
};
Rref rref(const std::vector<SparseVec>& rows, int ncols);

// Solution basis of {x : row_i . x = 0 for all i} in Q^ncols.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols);

// One solution of {row_i . x = rhs[i]}, free variables set to zero.
std::optional<SparseVec> solve(const std::vector<SparseVec>& rows,
                               const std::vector<Rat>& rhs, int ncols);

int rank_of(const std::vector<SparseVec>& rows);

}  // namespace kp
