#pragma once

#include <map>
#include <string>
#include <vector>

#include "walg/matrix.hpp"
#include "walg/pyramid.hpp"
#include "walg/rational.hpp"

namespace walg {

enum class Kind { GL, SO, SP };

std::string kind_str(Kind k);
Kind kind_parse(const std::string& s);

// Element of the Lie algebra as a sparse combination of canonical generators.
using LieElt = std::map<int, Rational>;

LieElt lie_add(const LieElt& x, const LieElt& y);
LieElt lie_scale(const LieElt& x, const Rational& c);
bool lie_is_zero(const LieElt& x);

// One realization of gl_N / so_N / sp_N attached to a pyramid, carrying the
// canonical generator list, structure constants, invariant form, duals and
// the diagonal shift matrix.  Immutable after build().
class Realization {
 public:
  struct Gen {
    int a = 0, b = 0;   // boxes; the generator is f[a,b] (plain e[a,b] for gl)
    Half grade = 0;     // doubled; col(b) - col(a)
  };

  struct Canon {
    bool zero = true;
    int gen = -1;
    int sign = 0;
  };

  // Column window hosting a truncated subalgebra; gens index into the parent.
  struct Window {
    Half lo = 0, hi = 0;  // doubled inclusive column range
    std::vector<int> boxes;
    std::vector<int> gens;
    std::vector<int> win_row_len;  // 1-based; 0 when the row misses the window
    int r_len = 0;                 // longest windowed row
    QMat Dk;                       // shift matrix of the subalgebra, not a projection
  };

  static Realization build(Kind kind, Partition lambda);

  Kind kind() const { return kind_; }
  int eps() const { return eps_; }  // +1 so, -1 sp, 0 gl
  const Pyramid& pyr() const { return pyr_; }
  int dim_v() const { return pyr_.box_count(); }
  int row_prime(int row) const { return row_prime_.at(static_cast<size_t>(row)); }
  int prime_box(int a) const;
  bool even_grading() const { return pyr_.lambda().same_parity(); }

  int dim() const { return static_cast<int>(gens_.size()); }
  const Gen& gen(int g) const { return gens_.at(static_cast<size_t>(g)); }
  const std::vector<Gen>& gens() const { return gens_; }
  const QMat& phi(int g) const { return phi_.at(static_cast<size_t>(g)); }
  const QMat& dual(int g) const { return dual_.at(static_cast<size_t>(g)); }
  const LieElt& dual_elt(int g) const { return dual_elt_.at(static_cast<size_t>(g)); }
  const Rational& f_pairing(int g) const { return f_pair_.at(static_cast<size_t>(g)); }

  const QMat& F() const { return F_; }
  const QMat& FormJ() const { return J_; }  // Gram matrix of the form on V (so/sp only)
  const QMat& D() const { return D_; }

  // Sign function of the realization; branches on row vs paired row.
  int eta(int row, int s) const;

  Canon canon(int a, int b) const { return canon_.at(key(a, b)); }
  // g-part of the coefficient of e_{a,b} in the Casimir sum: f[b,a] as an
  // element (zero for the excluded so-type pairs).
  LieElt casimir_coeff(int a, int b) const;

  Rational form(const QMat& X, const QMat& Y) const;
  QMat sigma(const QMat& X) const;  // -J^{-1} X^T J

  const LieElt& bracket_gens(int g1, int g2) const;
  LieElt bracket(const LieElt& x, const LieElt& y) const;
  QMat mat(const LieElt& x) const;
  LieElt decompose(const QMat& X) const;  // inverse of mat() on the image of g

  std::vector<int> gens_grade_at_least(Half grade) const;
  std::vector<int> gens_with_grade(Half grade) const;

  // Centralizer elements zeta_i^{j,t}; empty map when the element vanishes.
  LieElt zeta(int i, int j, int t) const;
  struct ZetaId { int i = 0, j = 0, t = 0; };
  std::vector<ZetaId> centralizer_basis() const;

  Window window(Half k) const;  // k doubled, 0 <= k <= lambda_1 - 1
  Window full_window() const;

  // Relabeled column inside a window: first window column becomes 1 (doubled).
  Half col_rel(const Window& w, int box) const { return pyr_.col_of(box) - w.lo + 2; }

  std::string id() const;  // "so(3,1)" style tag used in reports/files

 private:
  size_t key(int a, int b) const { return static_cast<size_t>(a - 1) * pyr_.box_count() + static_cast<size_t>(b - 1); }
  LieElt bracket_formula(int g1, int g2) const;

  Kind kind_ = Kind::GL;
  int eps_ = 0;
  Pyramid pyr_{Partition{{1}}};
  std::vector<int> row_prime_;
  std::vector<Gen> gens_;
  std::map<std::pair<int, int>, int> gen_index_;  // (a,b) -> gen id
  std::vector<Canon> canon_;
  std::vector<QMat> phi_;
  std::vector<QMat> dual_;
  std::vector<LieElt> dual_elt_;
  std::vector<Rational> f_pair_;
  QMat F_, J_, Jinv_, D_;
  std::vector<std::vector<LieElt>> bracket_cache_;
};

}  // namespace walg
