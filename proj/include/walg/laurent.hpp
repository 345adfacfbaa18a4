#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "walg/uea.hpp"

namespace walg {

// Truncated Laurent polynomial in z^{1/2} with UEA coefficients.  Exponents
// are doubled.  `floor` (when set) marks the polynomial as exact only at
// exponents >= floor; coefficients below it have been dropped.
struct LaurentPoly {
  std::map<Half, UEA> c;
  std::optional<Half> floor;

  bool known_zero() const { return c.empty() && !floor; }
  Half top() const;  // largest exponent present; minimal Half when empty
  void add(Half e, const UEA& u);
  void drop_below(Half f);
  UEA coeff(Half e) const;
};

// Matrix of Laurent polynomials between explicit box lists.  A single floor
// is tracked for the whole matrix (the weakest of its operands).
class LaurentMat {
 public:
  LaurentMat() = default;
  LaurentMat(std::vector<int> rows, std::vector<int> cols);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  std::optional<Half> floor() const { return floor_; }
  void set_floor(std::optional<Half> f);

  bool has(int rbox, int cbox) const { return e_.count({rbox, cbox}) > 0; }
  LaurentPoly& entry(int rbox, int cbox);
  const LaurentPoly* entry_if(int rbox, int cbox) const;
  UEA coeff(int rbox, int cbox, Half e) const;

  Half top() const;  // largest exponent over entries

  LaurentMat operator+(const LaurentMat& o) const;
  LaurentMat operator-(const LaurentMat& o) const;

  std::string dump(const Realization& r) const;

 private:
  std::vector<int> rows_, cols_;
  std::map<std::pair<int, int>, LaurentPoly> e_;
  std::optional<Half> floor_;
};

LaurentMat lm_mul(const Realization& r, const LaurentMat& a, const LaurentMat& b);
LaurentMat lm_identity(const std::vector<int>& boxes);
// Entrywise reduction modulo the ideal (right action on the coset of 1).
LaurentMat lm_reduce(const Realization& r, const LaurentMat& a);
// Left-multiplies every entry by a generator, then reduces.
LaurentMat lm_gen_mul_reduce(const Realization& r, int gen, const LaurentMat& a);
LaurentMat lm_scale(const LaurentMat& a, const Rational& c);
LaurentMat lm_shift(const LaurentMat& a, Half dz);  // multiply by z^{dz/2}
bool lm_equal_above(const Realization& r, const LaurentMat& a, const LaurentMat& b, Half floor,
                    std::string* witness = nullptr);

// Box selections for a window: weight predicates on the windowed pyramid.
struct Blocks {
  std::vector<int> top;       // highest-weight boxes (first window column)
  std::vector<int> bottom;    // lowest-weight boxes (last window column)
  std::vector<int> below_top; // weight < xi/2   (column > first)
  std::vector<int> above_bot; // weight > -xi/2  (column < last)
};
Blocks blocks_of(const Realization& r, const Realization::Window& w);

// Operator kernels restricted to a window.
LaurentMat build_y_block(const Realization& r, const Realization::Window& w,
                         const std::vector<int>& rows, const std::vector<int>& cols);
LaurentMat build_z_block(const Realization& r, const Realization::Window& w,
                         const std::vector<int>& rows, const std::vector<int>& cols);
LaurentMat build_z_full(const Realization& r);  // all boxes, no projection

// Alpha is scalar and depends only on the pyramid and the column window.
QMat build_alpha(const Pyramid& p, Half lo, Half hi);
QMat build_alpha_inverse(const Pyramid& p, Half lo, Half hi);
QMat build_alpha(const Realization& r, const Realization::Window& w);
QMat build_alpha_inverse(const Realization& r, const Realization::Window& w);
LaurentMat build_ybar(const Realization& r, const Realization::Window& w);

// Geometric-series inverse of (alpha + Ybar), exact above `floor` (doubled).
LaurentMat invert_interior(const Realization& r, const Realization::Window& w, Half floor);

// The element carried by the entry (a,b) of the grade-restricted Casimir sum
// plus z^{-1} D: f[b,a] as a UEA element, plus the scalar shift on the diagonal.
UEA ybar_entry_elt(const Realization& r, const Realization::Window& w, int a, int b);

LaurentMat qmat_block(const QMat& m, const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace walg
