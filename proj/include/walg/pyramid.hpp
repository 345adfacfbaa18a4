#pragma once

#include <string>
#include <vector>

#include "walg/halfint.hpp"

namespace walg {

// A partition lambda_1 >= lambda_2 >= ... >= lambda_n >= 1.
struct Partition {
  std::vector<int> parts;

  int longest() const { return parts.empty() ? 0 : parts.front(); }
  int rows() const { return static_cast<int>(parts.size()); }
  int boxes() const;
  bool same_parity() const;

  // Throws std::invalid_argument unless nonempty, weakly decreasing, parts >= 1.
  void validate() const;

  static Partition parse(const std::string& csv);  // "6,3,3,2"
};

// Centered box diagram of a partition.  Boxes are numbered 1..N, bottom row
// (row 1) first, left to right.  Columns may sit on the half-integer lattice,
// so every column coordinate is stored doubled.
class Pyramid {
 public:
  explicit Pyramid(Partition lambda);

  int box_count() const { return n_; }
  int row_count() const { return lambda_.rows(); }
  const Partition& lambda() const { return lambda_; }

  int row_of(int box) const { check_box(box); return row_of_[box]; }
  Half col_of(int box) const { check_box(box); return col_of_[box]; }

  // Doubled column of the leftmost box of a row: (lambda_1 - lambda_i)/2 + 1.
  Half row_start_col(int row) const;
  int row_len(int row) const { return lambda_.parts.at(static_cast<size_t>(row - 1)); }

  // Zero-based position of a box inside its row.
  int idx_in_row(int box) const { return (col_of(box) - row_start_col(row_of(box))) / 2; }
  // Inverse lookups; box_at returns 0 when no box of `row` sits at column `col`.
  int box_at(int row, Half col) const;
  int box_by_idx(int row, int idx) const { return box_at(row, row_start_col(row) + 2 * idx); }

  // Weight of a basis vector: delta(e_a) = (lambda_1+1)/2 - col(a).
  Half delta_vec(int box) const { return (lambda_.longest() + 1) - col_of(box); }
  // Weight of a matrix unit: delta(e_{a,b}) = col(b) - col(a).
  Half delta_unit(int a, int b) const { return col_of(b) - col_of(a); }

  // Truncation window for a half-integer k: first/last column labels and the
  // longest row length 2k+1 of the windowed diagram.
  struct Bounds {
    Half s_col;   // doubled
    Half e_col;   // doubled
    int r_len;    // integer
  };
  Bounds truncation_bounds(Half k) const;

  std::string render() const;

 private:
  void check_box(int box) const;

  Partition lambda_;
  int n_ = 0;
  std::vector<int> row_of_;   // 1-based box index
  std::vector<Half> col_of_;  // 1-based box index
};

}  // namespace walg
