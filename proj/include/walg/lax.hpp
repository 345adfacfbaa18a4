#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "walg/laurent.hpp"

namespace walg {

// Handle for the operators attached to a realization, possibly truncated to
// the column window of a highest weight k.  Coefficients are elements of the
// parent enveloping algebra; reduction always uses the parent ideal.
class LaxOp {
 public:
  LaxOp(const Realization& r, Realization::Window w) : r_(&r), w_(std::move(w)) {}
  static LaxOp untruncated(const Realization& r) { return LaxOp(r, r.full_window()); }
  // Requires 2k+1 to be a part of the partition.
  static LaxOp truncated(const Realization& r, Half k);

  const Realization& realization() const { return *r_; }
  const Realization::Window& window() const { return w_; }

  // Matrices of the operators, exact above `floor` (doubled), unreduced.
  LaurentMat series_matrix_l(Half floor) const;
  LaurentMat series_matrix_lr(Half floor) const;

  // Single coefficients of z^{-p} (p doubled), reduced mod the ideal.
  UEA coeff_series_l(int c, int d, Half p) const;
  UEA coeff_series_lr(int c, int d, Half p) const;

  // Signed path sums over factor tuples; equal to the series coefficients.
  UEA pathsum_l(int c, int d, Half p) const;
  UEA pathsum_lr(int c, int d, Half p) const;

  // Factor pairs (d_i, a_i) used by tuples that actually contribute.
  std::set<std::pair<int, int>> pathsum_l_factors(int c, int d, Half p) const;
  std::set<std::pair<int, int>> pathsum_lr_factors(int c, int d, Half p) const;

 private:
  void check_l_entry(int c, int d) const;
  void check_lr_entry(int c, int d) const;

  const Realization* r_;
  Realization::Window w_;
};

struct ZetaMatch {
  int i = 0, j = 0, t = 0;
  int sign = 1;
};

struct GeneratorRecord {
  std::string mode;  // "L", "L_k", "L_R", "L_kR", "T_main"
  int c = 0, d = 0;
  Half k = 0;  // doubled highest weight of the window (T_main: xi)
  Half p = 0;  // doubled exponent of z^{-p}
  UEA value;   // reduced
  std::optional<Half> gr_deg;          // doubled filtration degree (unset when value = 0)
  std::optional<ZetaMatch> zeta;       // stated graded symbol, when applicable
  bool membership = false;
};

// All generator coefficients mandated by the truncated-operator theorems
// (so/sp) or the boundary-block theorem (gl with distinct part sizes).
std::vector<GeneratorRecord> extract_generators(const Realization& r);

std::string records_to_json(const Realization& r, const std::vector<GeneratorRecord>& recs);
std::string realization_to_json(const Realization& r);

}  // namespace walg
