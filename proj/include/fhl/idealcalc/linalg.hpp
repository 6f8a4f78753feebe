#pragma once

#include <utility>
#include <vector>

#include "fhl/exactnum/cyclotomic.hpp"

namespace fhl {

// Sparse vector as (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<int, CyclotomicNumber>>;

// row += c * other
void axpy(SparseRow& row, const CyclotomicNumber& c, const SparseRow& other);

// Incremental row echelon form over Q(ζ_m). The pivot of a row is its
// smallest column; pivot entries are normalized to 1.
class SparseEchelon {
 public:
  // Entries live in Q(ζ_m).
  SparseEchelon(int ncols, int m);

  int ncols() const { return ncols_; }
  int conductor() const { return m_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool full() const { return rank() == ncols_; }

  // Returns true when the row was independent of the current rows.
  bool insert(SparseRow row);

  // Back-substitution to reduced row echelon form. Rows end up sorted by pivot.
  void reduce_fully();
  bool fully_reduced() const { return reduced_; }

  const std::vector<SparseRow>& rows() const { return rows_; }
  std::vector<int> pivots() const;
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }

  // Basis of {v : row·v = 0 for every row}, one vector per free column f with
  // v_f = 1 and zero on the other free columns. Calls reduce_fully first.
  std::vector<SparseRow> kernel();

  // Remainder of `row` after eliminating every pivot column.
  SparseRow normal_form(SparseRow row) const;

 private:
  int ncols_;
  int m_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
  bool reduced_ = true;
};

}  // namespace fhl
