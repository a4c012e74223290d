#include "ilrc/matrix.hpp"

#include <string>

namespace ilrc {

namespace {

void require_same_field(const GFMatrix& a, const GFMatrix& b) {
  if (!(a.field() == b.field())) throw FieldError("matrices over different fields");
}

std::string shape(const GFMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// row_i -= factor * row_p, starting at column `from`.
void axpy_row(const FiniteField& f, Storage& s, Index i, Index p, Element factor, Index from) {
  for (Index j = from; j < s.cols(); ++j) {
    const Element v = s(p, j);
    if (v != 0) s(i, j) = f.sub(s(i, j), f.mul(factor, v));
  }
}

}  // namespace

GFMatrix::GFMatrix(FiniteField field, Index rows, Index cols)
    : field_(std::move(field)), data_(Storage::Zero(rows, cols)) {}

GFMatrix::GFMatrix(FiniteField field, Storage data) : field_(std::move(field)), data_(std::move(data)) {
  check_entries();
}

GFMatrix::GFMatrix(FiniteField field, Index rows, Index cols, std::initializer_list<Element> row_major)
    : field_(std::move(field)), data_(rows, cols) {
  if (static_cast<Index>(row_major.size()) != rows * cols)
    throw DimensionError("initializer has " + std::to_string(row_major.size()) + " entries");
  auto it = row_major.begin();
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) data_(i, j) = *it++;
  check_entries();
}

GFMatrix GFMatrix::identity(FiniteField field, Index n) {
  return {std::move(field), Storage::Identity(n, n)};
}

GFMatrix GFMatrix::from_rows(FiniteField field, std::span<const Word> rows) {
  const Index cols = rows.empty() ? 0 : rows.front().size();
  GFMatrix m(std::move(field), static_cast<Index>(rows.size()), cols);
  for (Index i = 0; i < m.rows(); ++i) m.set_row(i, rows[static_cast<std::size_t>(i)]);
  m.check_entries();
  return m;
}

void GFMatrix::set_row(Index i, const Word& w) {
  if (w.size() != cols()) throw DimensionError("row length mismatch");
  data_.row(i) = w;
}

void GFMatrix::check_entries() const {
  if (data_.size() > 0 && data_.maxCoeff() > field_.max_element())
    throw FieldError("matrix entry outside of " + field_.to_string());
}

GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
  const FiniteField& f = a.field();
  GFMatrix c(f, a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index l = 0; l < a.cols(); ++l) {
      const Element x = a(i, l);
      if (x == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(l, j)));
    }
  }
  return c;
}

GFMatrix operator+(const GFMatrix& a, const GFMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cannot add " + shape(a) + " and " + shape(b));
  GFMatrix c = a;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

GFMatrix operator-(const GFMatrix& a, const GFMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cannot subtract " + shape(b) + " from " + shape(a));
  GFMatrix c = a;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

Word multiply(const FiniteField& f, const Word& v, const GFMatrix& m) {
  if (v.size() != m.rows()) throw DimensionError("vector length does not match matrix rows");
  Word out = Word::Zero(m.cols());
  for (Index l = 0; l < m.rows(); ++l) {
    const Element x = v(l);
    if (x == 0) continue;
    for (Index j = 0; j < m.cols(); ++j) out(j) = f.add(out(j), f.mul(x, m(l, j)));
  }
  return out;
}

Word add(const FiniteField& f, const Word& a, const Word& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Word out(a.size());
  for (Index j = 0; j < a.size(); ++j) out(j) = f.add(a(j), b(j));
  return out;
}

Word sub(const FiniteField& f, const Word& a, const Word& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Word out(a.size());
  for (Index j = 0; j < a.size(); ++j) out(j) = f.sub(a(j), b(j));
  return out;
}

GFMatrix select_columns(const GFMatrix& m, std::span<const Index> cols) {
  GFMatrix out(m.field(), m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] < 0 || cols[c] >= m.cols()) throw DimensionError("column index out of range");
    out.data().col(static_cast<Index>(c)) = m.data().col(cols[c]);
  }
  return out;
}

GFMatrix select_rows(const GFMatrix& m, std::span<const Index> rows) {
  GFMatrix out(m.field(), static_cast<Index>(rows.size()), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] < 0 || rows[r] >= m.rows()) throw DimensionError("row index out of range");
    out.data().row(static_cast<Index>(r)) = m.data().row(rows[r]);
  }
  return out;
}

GFMatrix hconcat(const GFMatrix& a, const GFMatrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw DimensionError("hconcat of " + shape(a) + " and " + shape(b));
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Storage s(a.rows(), a.cols() + b.cols());
  s << a.data(), b.data();
  return {a.field(), std::move(s)};
}

GFMatrix vconcat(const GFMatrix& a, const GFMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw DimensionError("vconcat of " + shape(a) + " and " + shape(b));
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  Storage s(a.rows() + b.rows(), a.cols());
  s << a.data(), b.data();
  return {a.field(), std::move(s)};
}

RrefResult rref(const GFMatrix& m) {
  const FiniteField& f = m.field();
  GFMatrix r = m;
  Storage& s = r.data();
  IndexSet pivots;
  Index row = 0;
  for (Index col = 0; col < s.cols() && row < s.rows(); ++col) {
    Index p = row;
    while (p < s.rows() && s(p, col) == 0) ++p;
    if (p == s.rows()) continue;
    if (p != row) s.row(p).swap(s.row(row));
    const Element scale = f.inv(s(row, col));
    if (scale != 1)
      for (Index j = col; j < s.cols(); ++j) s(row, j) = f.mul(s(row, j), scale);
    for (Index i = 0; i < s.rows(); ++i) {
      if (i != row && s(i, col) != 0) axpy_row(f, s, i, row, s(i, col), col);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

Index rank(const GFMatrix& m) {
  // Row echelon form without back substitution is enough here.
  const FiniteField& f = m.field();
  Storage s = m.data();
  Index row = 0;
  for (Index col = 0; col < s.cols() && row < s.rows(); ++col) {
    Index p = row;
    while (p < s.rows() && s(p, col) == 0) ++p;
    if (p == s.rows()) continue;
    if (p != row) s.row(p).swap(s.row(row));
    const Element scale = f.inv(s(row, col));
    for (Index i = row + 1; i < s.rows(); ++i) {
      if (s(i, col) != 0) axpy_row(f, s, i, row, f.mul(s(i, col), scale), col);
    }
    ++row;
  }
  return row;
}

GFMatrix kernel_basis(const GFMatrix& m) {
  const FiniteField& f = m.field();
  const auto [r, pivots] = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  GFMatrix basis(f, n - static_cast<Index>(pivots.size()), n);
  Index out = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      basis(out, pivots[i]) = f.neg(r(static_cast<Index>(i), free));
    ++out;
  }
  return basis;
}

SolveResult solve(const GFMatrix& a, const GFMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionError("solve: " + shape(a) + " system with " + shape(b) + " right-hand side");
  const auto [r, pivots] = rref(hconcat(a, b));
  SolveResult result{false, false, GFMatrix(a.field(), a.cols(), b.cols())};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return result;
    for (Index j = 0; j < b.cols(); ++j)
      result.solution(pivots[i], j) = r(static_cast<Index>(i), a.cols() + j);
  }
  result.consistent = true;
  result.unique = static_cast<Index>(pivots.size()) == a.cols();
  return result;
}

bool in_column_space(const GFMatrix& m, const Word& v) {
  if (v.size() != m.rows()) throw DimensionError("vector length does not match matrix rows");
  GFMatrix col(m.field(), m.rows(), 1);
  col.data().col(0) = v.transpose();
  return rank(hconcat(m, col)) == rank(m);
}

ColumnSpace::ColumnSpace(const GFMatrix& m) : field_(m.field()), ambient_(m.rows()) {
  auto [r, pivots] = rref(m.transpose());
  basis_ = r.data().topRows(static_cast<Index>(pivots.size()));
  pivots_ = std::move(pivots);
}

bool ColumnSpace::contains(const Word& v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match column space");
  Word w = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    const Element c = w(pivots_[static_cast<std::size_t>(i)]);
    if (c == 0) continue;
    for (Index j = 0; j < w.size(); ++j) {
      const Element b = basis_(i, j);
      if (b != 0) w(j) = field_.sub(w(j), field_.mul(c, b));
    }
  }
  return (w.array() == Element{0}).all();
}

}  // namespace ilrc
