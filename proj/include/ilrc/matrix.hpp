#ifndef ILRC_MATRIX_HPP
#define ILRC_MATRIX_HPP

#include <Eigen/Core>

#include <initializer_list>
#include <span>
#include <vector>

#include "ilrc/galois.hpp"

namespace ilrc {

using Index = Eigen::Index;
/// Sorted, duplicate-free list of positions.
using IndexSet = std::vector<Index>;

using Storage = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Word = Eigen::Matrix<Element, 1, Eigen::Dynamic>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Dense matrix over a finite field.
 *
 * Storage is an Eigen row-major matrix of canonical representatives; all
 * arithmetic goes through the owning FiniteField, so Eigen's own operators
 * are only used for shape manipulation (blocks, rows, transposes).
 */
class GFMatrix {
 public:
  GFMatrix(FiniteField field, Index rows, Index cols);
  GFMatrix(FiniteField field, Storage data);
  GFMatrix(FiniteField field, Index rows, Index cols, std::initializer_list<Element> row_major);

  static GFMatrix identity(FiniteField field, Index n);
  static GFMatrix from_rows(FiniteField field, std::span<const Word> rows);
  template <class Rng>
  static GFMatrix random(FiniteField field, Index rows, Index cols, Rng& rng) {
    GFMatrix m(std::move(field), rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = m.field_.random(rng);
    return m;
  }

  const FiniteField& field() const noexcept { return field_; }
  Index rows() const noexcept { return data_.rows(); }
  Index cols() const noexcept { return data_.cols(); }

  Element operator()(Index i, Index j) const { return data_(i, j); }
  Element& operator()(Index i, Index j) { return data_(i, j); }

  const Storage& data() const noexcept { return data_; }
  Storage& data() noexcept { return data_; }

  Word row(Index i) const { return data_.row(i); }
  Word col(Index j) const { return data_.col(j).transpose(); }
  void set_row(Index i, const Word& w);

  bool is_zero() const noexcept { return (data_.array() == Element{0}).all(); }
  GFMatrix transpose() const { return {field_, data_.transpose()}; }

  bool operator==(const GFMatrix& o) const noexcept {
    return field_ == o.field_ && data_.rows() == o.data_.rows() &&
           data_.cols() == o.data_.cols() && data_ == o.data_;
  }

 private:
  void check_entries() const;

  FiniteField field_;
  Storage data_;
};

GFMatrix operator*(const GFMatrix& a, const GFMatrix& b);
GFMatrix operator+(const GFMatrix& a, const GFMatrix& b);
GFMatrix operator-(const GFMatrix& a, const GFMatrix& b);
/// Row vector times matrix.
Word multiply(const FiniteField& f, const Word& v, const GFMatrix& m);
Word add(const FiniteField& f, const Word& a, const Word& b);
Word sub(const FiniteField& f, const Word& a, const Word& b);

GFMatrix select_columns(const GFMatrix& m, std::span<const Index> cols);
GFMatrix select_rows(const GFMatrix& m, std::span<const Index> rows);
GFMatrix hconcat(const GFMatrix& a, const GFMatrix& b);
GFMatrix vconcat(const GFMatrix& a, const GFMatrix& b);

struct RrefResult {
  GFMatrix reduced;
  IndexSet pivots;  // pivot column of each nonzero row
  Index rank() const noexcept { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by first-nonzero pivoting.
RrefResult rref(const GFMatrix& m);
Index rank(const GFMatrix& m);

/// Rows form a basis of the right null space {x : m x^T = 0}.
GFMatrix kernel_basis(const GFMatrix& m);

struct SolveResult {
  bool consistent = false;
  bool unique = false;
  GFMatrix solution;  // one solution when consistent (free variables zero)
};

/// Solves a X = b for X. Inconsistency is a result, not an exception.
SolveResult solve(const GFMatrix& a, const GFMatrix& b);

/// rank([m | v]) == rank(m) for a column vector v given as a Word.
bool in_column_space(const GFMatrix& m, const Word& v);

/**
 * Column space of a matrix in reduced echelon form, for repeated membership
 * tests against the same matrix.
 */
class ColumnSpace {
 public:
  explicit ColumnSpace(const GFMatrix& m);

  Index dimension() const noexcept { return static_cast<Index>(pivots_.size()); }
  Index ambient_dimension() const noexcept { return ambient_; }
  bool contains(const Word& v) const;
  bool contains_column(const GFMatrix& m, Index j) const { return contains(m.col(j)); }

 private:
  FiniteField field_;
  Index ambient_;
  Storage basis_;  // reduced rows of m^T
  IndexSet pivots_;
};

}  // namespace ilrc

#endif  // ILRC_MATRIX_HPP
