#include "walg/matrix.hpp"

namespace walg {

QMat QMat::inverse() const {
  int n = n_;
  QMat a = *this;
  QMat inv = QMat::identity(n);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int r = col; r <= n; ++r)
      if (a.at(r, col) != 0) { pivot = r; break; }
    if (pivot == 0) throw std::runtime_error("QMat::inverse: singular matrix");
    if (pivot != col) {
      for (int j = 1; j <= n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Rational p = a.at(col, col);
    for (int j = 1; j <= n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 1; r <= n; ++r) {
      if (r == col) continue;
      Rational f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 1; j <= n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

int rank_of_rows(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  size_t lead = 0;
  for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
    size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    Rational p = rows[r][lead];
    for (size_t j = lead; j < cols; ++j) rows[r][j] /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead] == 0) continue;
      Rational f = rows[i][lead];
      for (size_t j = lead; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace walg
