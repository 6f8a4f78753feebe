#include "fhl/idealcalc/linalg.hpp"

#include <algorithm>

#include "fhl/error.hpp"

namespace fhl {

void axpy(SparseRow& row, const CyclotomicNumber& c, const SparseRow& other) {
  if (c.is_zero() || other.empty()) return;
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, c * other[j].second);
      ++j;
    } else {
      CyclotomicNumber v = row[i].second + c * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

SparseEchelon::SparseEchelon(int ncols, int m) : ncols_(ncols), m_(m), pivot_row_(ncols, -1) {}

bool SparseEchelon::insert(SparseRow row) {
  while (!row.empty()) {
    int lead = row.front().first;
    if (lead < 0 || lead >= ncols_) throw DomainError("sparse row column out of range");
    int r = pivot_row_[lead];
    if (r < 0) break;
    CyclotomicNumber c = -row.front().second;
    axpy(row, c, rows_[r]);
  }
  if (row.empty()) return false;
  CyclotomicNumber inv = row.front().second.inverse();
  for (auto& [col, v] : row) v *= inv;
  pivot_row_[row.front().first] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(row));
  reduced_ = false;
  return true;
}

void SparseEchelon::reduce_fully() {
  if (reduced_) return;
  std::sort(rows_.begin(), rows_.end(), [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  for (std::size_t r = 0; r < rows_.size(); ++r) pivot_row_[rows_[r].front().first] = static_cast<int>(r);
  for (std::size_t r = rows_.size(); r-- > 0;) {
    SparseRow& row = rows_[r];
    // Rows below r are already reduced, so one left-to-right sweep suffices.
    std::size_t pos = 1;
    while (pos < row.size()) {
      int col = row[pos].first;
      int pr = pivot_row_[col];
      if (pr < 0) {
        ++pos;
        continue;
      }
      CyclotomicNumber c = -row[pos].second;
      axpy(row, c, rows_[pr]);
      pos = std::upper_bound(row.begin(), row.end(), col,
                             [](int v, const std::pair<int, CyclotomicNumber>& e) { return v < e.first; }) -
            row.begin();
    }
  }
  reduced_ = true;
}

std::vector<int> SparseEchelon::pivots() const {
  std::vector<int> p;
  for (const auto& row : rows_) p.push_back(row.front().first);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseRow> SparseEchelon::kernel() {
  reduce_fully();
  std::vector<SparseRow> out;
  for (int f = 0; f < ncols_; ++f) {
    if (pivot_row_[f] >= 0) continue;
    SparseRow v;
    for (const auto& row : rows_) {
      if (row.front().first > f) break;
      auto it = std::lower_bound(row.begin(), row.end(), f,
                                 [](const std::pair<int, CyclotomicNumber>& e, int v) { return e.first < v; });
      if (it != row.end() && it->first == f) v.emplace_back(row.front().first, -it->second);
    }
    v.emplace_back(f, CyclotomicNumber(m_, 1));
    out.push_back(std::move(v));
  }
  return out;
}

SparseRow SparseEchelon::normal_form(SparseRow row) const {
  std::size_t pos = 0;
  while (pos < row.size()) {
    int col = row[pos].first;
    int pr = pivot_row_[col];
    if (pr < 0) {
      ++pos;
      continue;
    }
    CyclotomicNumber c = -row[pos].second;
    axpy(row, c, rows_[pr]);
    pos = std::upper_bound(row.begin(), row.end(), col,
                           [](int v, const std::pair<int, CyclotomicNumber>& e) { return v < e.first; }) -
          row.begin();
  }
  return row;
}

}  // namespace fhl
