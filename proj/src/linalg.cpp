#include "kpmod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kp {

SparseVec SparseVec::unit(int i, const Rat& c) {
  SparseVec v;
  if (c != 0) v.ents.emplace_back(i, c);
  return v;
}

Rat SparseVec::at(int i) const {
  auto it = std::lower_bound(ents.begin(), ents.end(), i,
                             [](const auto& e, int j) { return e.first < j; });
  if (it != ents.end() && it->first == i) return it->second;
  return Rat(0);
}

void SparseVec::set(int i, const Rat& c) {
  auto it = std::lower_bound(ents.begin(), ents.end(), i,
                             [](const auto& e, int j) { return e.first < j; });
  if (it != ents.end() && it->first == i) {
    if (c == 0)
      ents.erase(it);
    else
      it->second = c;
  } else if (c != 0) {
    ents.insert(it, {i, c});
  }
}

void axpy(SparseVec& dst, const Rat& c, const SparseVec& src) {
  if (c == 0 || src.empty()) return;
  std::vector<std::pair<int, Rat>> out;
  out.reserve(dst.ents.size() + src.ents.size());
  auto a = dst.ents.begin(), ae = dst.ents.end();
  auto b = src.ents.begin(), be = src.ents.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      Rat v = c * b->second;
      if (v != 0) out.emplace_back(b->first, v);
      ++b;
    } else {
      Rat v = a->second + c * b->second;
      if (v != 0) out.emplace_back(a->first, v);
      ++a, ++b;
    }
  }
  dst.ents = std::move(out);
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  axpy(*this, Rat(1), o);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  axpy(*this, Rat(-1), o);
  return *this;
}

SparseVec SparseVec::operator*(const Rat& c) const {
  SparseVec r;
  if (c == 0) return r;
  r.ents.reserve(ents.size());
  for (const auto& [i, v] : ents) r.ents.emplace_back(i, v * c);
  return r;
}

SparseMat SparseMat::identity(int d) {
  SparseMat m(d, d);
  for (int i = 0; i < d; ++i) m.col[i] = SparseVec::unit(i);
  return m;
}

bool SparseMat::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  SparseVec r;
  for (const auto& [i, c] : v.ents) axpy(r, c, col[i]);
  return r;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  SparseMat r(rows, o.cols);
  for (int j = 0; j < o.cols; ++j) r.col[j] = apply(o.col[j]);
  return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  SparseMat r = *this;
  for (int j = 0; j < cols; ++j) r.col[j] += o.col[j];
  return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  SparseMat r = *this;
  for (int j = 0; j < cols; ++j) r.col[j] -= o.col[j];
  return r;
}

SparseMat SparseMat::operator*(const Rat& c) const {
  SparseMat r(rows, cols);
  for (int j = 0; j < cols; ++j) r.col[j] = col[j] * c;
  return r;
}

SparseMat SparseMat::transpose() const {
  SparseMat r(cols, rows);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[j].ents) r.col[i].ents.emplace_back(j, v);
  return r;
}

SparseMat SparseMat::pow(int k) const {
  SparseMat r = identity(rows);
  for (int t = 0; t < k; ++t) r = *this * r;
  return r;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows == o.rows && cols == o.cols && col == o.col;
}

SparseVec SparseMat::flatten() const {
  SparseVec v;
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, c] : col[j].ents) v.ents.emplace_back(i * cols + j, c);
  std::sort(v.ents.begin(), v.ents.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

SparseMat SparseMat::unflatten(const SparseVec& v, int rows, int cols) {
  SparseMat m(rows, cols);
  for (const auto& [id, c] : v.ents) m.col[id % cols].set(id / cols, c);
  return m;
}

int RowBasis::insert(const SparseVec& v) {
  SparseVec r = v;
  SparseVec expr;
  int id = static_cast<int>(rows_.size());
  if (track_) expr = SparseVec::unit(id);
  while (!r.empty()) {
    auto it = pivot_.find(r.leading_index());
    if (it == pivot_.end()) break;
    const Row& row = rows_[it->second];
    Rat c = -r.ents.front().second / row.v.ents.front().second;
    axpy(r, c, row.v);
    if (track_) axpy(expr, c, row.expr);
  }
  if (r.empty()) return -1;
  pivot_[r.leading_index()] = id;
  rows_.push_back({std::move(r), std::move(expr)});
  return id;
}

SparseVec RowBasis::reduce(const SparseVec& v) const {
  SparseVec r = v;
  while (!r.empty()) {
    auto it = pivot_.find(r.leading_index());
    if (it == pivot_.end()) break;
    const Row& row = rows_[it->second];
    axpy(r, -r.ents.front().second / row.v.ents.front().second, row.v);
  }
  return r;
}

std::optional<SparseVec> RowBasis::express_rows(const SparseVec& v) const {
  SparseVec r = v;
  SparseVec combo;
  while (!r.empty()) {
    auto it = pivot_.find(r.leading_index());
    if (it == pivot_.end()) return std::nullopt;
    const Row& row = rows_[it->second];
    Rat c = r.ents.front().second / row.v.ents.front().second;
    axpy(r, -c, row.v);
    combo.set(it->second, combo.at(it->second) + c);
  }
  return combo;
}

std::optional<std::vector<Rat>> RowBasis::express(const SparseVec& v) const {
  if (!track_) throw std::logic_error("RowBasis: provenance not tracked");
  SparseVec r = v;
  SparseVec combo;  // over reduced rows
  while (!r.empty()) {
    auto it = pivot_.find(r.leading_index());
    if (it == pivot_.end()) return std::nullopt;
    const Row& row = rows_[it->second];
    Rat c = r.ents.front().second / row.v.ents.front().second;
    axpy(r, -c, row.v);
    combo.set(it->second, combo.at(it->second) + c);
  }
  std::vector<Rat> out(rows_.size(), Rat(0));
  SparseVec over_orig;
  for (const auto& [k, c] : combo.ents) axpy(over_orig, c, rows_[k].expr);
  for (const auto& [k, c] : over_orig.ents) out[k] = c;
  return out;
}

namespace {

size_t bits(const Rat& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

// Full Gauss-Jordan elimination. Pivot per column chosen among eligible rows
// by minimal entry bit length (ties by lowest row id) to limit blowup.
struct Elim {
  std::vector<SparseVec> rows;
  std::vector<int> pivot_col_of_row;       // -1 if row unused
  std::vector<std::pair<int, int>> pivots; // (col, row), in column order

  Elim(std::vector<SparseVec> r, int ncols) : rows(std::move(r)) {
    pivot_col_of_row.assign(rows.size(), -1);
    std::vector<bool> used(rows.size(), false);
    for (int c = 0; c < ncols; ++c) {
      int best = -1;
      size_t best_bits = 0;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (used[i] || rows[i].empty()) continue;
        if (rows[i].leading_index() != c) continue;
        size_t b = bits(rows[i].ents.front().second);
        if (best < 0 || b < best_bits) best = static_cast<int>(i), best_bits = b;
      }
      if (best < 0) continue;
      used[best] = true;
      pivot_col_of_row[best] = c;
      pivots.emplace_back(c, best);
      const Rat inv = Rat(1) / rows[best].ents.front().second;
      rows[best] = rows[best] * inv;
      SparseVec piv = rows[best];
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == best) continue;
        Rat v = rows[i].at(c);
        if (v != 0) axpy(rows[i], -v, piv);
      }
    }
  }
};

}  // namespace

Rref rref(const std::vector<SparseVec>& rows_in, int ncols) {
  Elim e(rows_in, ncols);
  Rref out;
  for (auto [c, r] : e.pivots) {
    out.pivots.emplace_back(c, static_cast<int>(out.rows.size()));
    out.rows.push_back(e.rows[r]);
  }
  return out;
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows_in, int ncols) {
  Elim e(rows_in, ncols);
  std::vector<bool> is_pivot(ncols, false);
  std::map<int, int> row_of_col;
  for (auto [c, r] : e.pivots) is_pivot[c] = true, row_of_col[c] = r;
  std::vector<SparseVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec x = SparseVec::unit(f);
    for (auto [c, r] : e.pivots) {
      Rat v = e.rows[r].at(f);
      if (v != 0) x.set(c, -v);
    }
    std::sort(x.ents.begin(), x.ents.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<SparseVec> solve(const std::vector<SparseVec>& rows_in,
                               const std::vector<Rat>& rhs, int ncols) {
  // Augment with the right-hand side at column ncols.
  std::vector<SparseVec> rows = rows_in;
  for (size_t i = 0; i < rows.size(); ++i)
    if (i < rhs.size() && rhs[i] != 0) rows[i].set(ncols, rhs[i]);
  Elim e(std::move(rows), ncols);
  for (const auto& r : e.rows)
    if (!r.empty() && r.leading_index() >= ncols) return std::nullopt;
  SparseVec x;
  for (auto [c, r] : e.pivots) {
    Rat v = e.rows[r].at(ncols);
    if (v != 0) x.set(c, v);
  }
  std::sort(x.ents.begin(), x.ents.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return x;
}

int rank_of(const std::vector<SparseVec>& rows) {
  RowBasis b;
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

}  // namespace kp
