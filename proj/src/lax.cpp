#include "walg/lax.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace walg {

using ojson = nlohmann::ordered_json;

LaxOp LaxOp::truncated(const Realization& r, Half k) {
  int len = k + 1;  // 2k+1 with k doubled
  bool found = false;
  for (int part : r.pyr().lambda().parts)
    if (part == len) found = true;
  if (!found)
    throw std::invalid_argument("truncated: 2k+1 = " + std::to_string(len) +
                                " is not a part of the partition");
  return LaxOp(r, r.window(k));
}

LaurentMat LaxOp::series_matrix_lr(Half floor) const {
  Blocks bl = blocks_of(*r_, w_);
  LaurentMat inv = invert_interior(*r_, w_, floor);
  LaurentMat low = build_y_block(*r_, w_, bl.below_top, bl.bottom);
  return lm_mul(*r_, inv, low);
}

LaurentMat LaxOp::series_matrix_l(Half floor) const {
  Blocks bl = blocks_of(*r_, w_);
  LaurentMat inv = invert_interior(*r_, w_, floor);
  LaurentMat top_low = build_y_block(*r_, w_, bl.top, bl.bottom);
  LaurentMat top_gt = build_y_block(*r_, w_, bl.top, bl.above_bot);
  LaurentMat low_low = build_y_block(*r_, w_, bl.below_top, bl.bottom);
  return top_low - lm_mul(*r_, lm_mul(*r_, top_gt, inv), low_low);
}

void LaxOp::check_l_entry(int c, int d) const {
  if (r_->pyr().col_of(c) != w_.lo || r_->pyr().col_of(d) != w_.hi)
    throw std::invalid_argument("operator entry (" + std::to_string(c) + "," + std::to_string(d) +
                                ") is outside the highest/lowest-weight block");
}

void LaxOp::check_lr_entry(int c, int d) const {
  if (r_->pyr().col_of(d) != w_.hi || r_->pyr().col_of(c) >= w_.hi ||
      r_->pyr().col_of(c) < w_.lo)
    throw std::invalid_argument("right-handed operator entry (" + std::to_string(c) + "," +
                                std::to_string(d) + ") is outside its block");
}

UEA LaxOp::coeff_series_l(int c, int d, Half p) const {
  check_l_entry(c, d);
  LaurentMat m = series_matrix_l(-p - 2);
  return reduce_mod_j(*r_, m.coeff(c, d, -p));
}

UEA LaxOp::coeff_series_lr(int c, int d, Half p) const {
  check_lr_entry(c, d);
  LaurentMat m = series_matrix_lr(-p - 2);
  return reduce_mod_j(*r_, m.coeff(c, d, -p));
}

namespace {

struct PathCtx {
  const Realization* r;
  const Realization::Window* w;
  bool right_handed = false;  // the L_R variant carries col(c) and n(c) in its sign
  int c = 0, d = 0;
  UEA acc;
  std::set<std::pair<int, int>>* collect = nullptr;
  std::vector<std::pair<int, int>> path;

  bool row_full(int box) const {
    return w->win_row_len[static_cast<size_t>(r->pyr().row_of(box))] == w->r_len;
  }
  Half col_rel(int box) const { return r->col_rel(*w, box); }

  // prev is c at depth 1, else a_{i-1}; factors multiply left to right.
  void dfs(int pos, int prev, Half remaining, Half col_sum_rel, int n_count, const UEA& prod) {
    const Pyramid& P = r->pyr();
    for (int di : w->boxes) {
      if (P.row_of(di) != P.row_of(prev)) continue;
      bool link_needed = right_handed || pos > 1;
      if (link_needed) {
        if (P.col_of(di) <= w->lo) continue;  // never the first column
        if (row_full(prev)) {
          if (!(P.col_of(prev) < P.col_of(di))) continue;
        } else {
          if (!(P.col_of(prev) >= P.col_of(di))) continue;
        }
      }
      for (int ai : w->boxes) {
        if (P.col_of(di) > P.col_of(ai) + 1) continue;
        Half weight = P.col_of(ai) - P.col_of(di) + 2;
        if (weight > remaining) continue;
        UEA x = ybar_entry_elt(*r, *w, di, ai);
        if (x.is_zero()) continue;
        UEA next = uea_mul(*r, prod, x);
        Half cs = col_sum_rel + col_rel(ai) + col_rel(di);
        int nc = n_count + (row_full(ai) ? 0 : 1);
        path.emplace_back(di, ai);
        if (weight == remaining && P.row_of(ai) == P.row_of(d)) {
          if (cs % 2 != 0) throw std::logic_error("path sum: half-integral sign exponent");
          long long expo = cs / 2 + nc + w->r_len;
          acc = acc + next * Rational(-sign_pow(expo));
          if (collect)
            for (const auto& pr : path) collect->insert(pr);
        }
        if (weight < remaining && P.col_of(ai) < w->hi)
          dfs(pos + 1, ai, remaining - weight, cs, nc, next);
        path.pop_back();
      }
    }
  }
};

}  // namespace

UEA LaxOp::pathsum_l(int c, int d, Half p) const {
  check_l_entry(c, d);
  const Pyramid& P = r_->pyr();
  if (p == 0) {
    Rational v = P.row_of(c) == P.row_of(d) ? Rational(-sign_pow(w_.r_len)) : Rational(0);
    return UEA::scalar(v);
  }
  if (p < 0 || p % 2 != 0) throw std::invalid_argument("pathsum_l: p must be a nonnegative integer");
  PathCtx ctx{r_, &w_, false, c, d, {}};
  ctx.dfs(1, c, p, 0, 0, UEA::one());
  return reduce_mod_j(*r_, ctx.acc);
}

UEA LaxOp::pathsum_lr(int c, int d, Half p) const {
  check_lr_entry(c, d);
  if (p <= 0) throw std::invalid_argument("pathsum_lr: p must be positive");
  PathCtx ctx{r_, &w_, true, c, d, {}};
  int n0 = ctx.row_full(c) ? 0 : 1;
  ctx.dfs(1, c, p, ctx.col_rel(c), n0, UEA::one());
  return reduce_mod_j(*r_, ctx.acc);
}

std::set<std::pair<int, int>> LaxOp::pathsum_l_factors(int c, int d, Half p) const {
  check_l_entry(c, d);
  std::set<std::pair<int, int>> out;
  if (p <= 0) return out;
  PathCtx ctx{r_, &w_, false, c, d, {}};
  ctx.collect = &out;
  ctx.dfs(1, c, p, 0, 0, UEA::one());
  return out;
}

std::set<std::pair<int, int>> LaxOp::pathsum_lr_factors(int c, int d, Half p) const {
  check_lr_entry(c, d);
  std::set<std::pair<int, int>> out;
  if (p <= 0) return out;
  PathCtx ctx{r_, &w_, true, c, d, {}};
  ctx.collect = &out;
  int n0 = ctx.row_full(c) ? 0 : 1;
  ctx.dfs(1, c, p, ctx.col_rel(c), n0, UEA::one());
  return out;
}

namespace {

std::vector<int> boxes_of_rows_at_col(const Realization& r, int part_len, Half col) {
  std::vector<int> out;
  const Pyramid& P = r.pyr();
  for (int box = 1; box <= P.box_count(); ++box)
    if (P.row_len(P.row_of(box)) == part_len && P.col_of(box) == col) out.push_back(box);
  return out;
}

bool record_membership(const Realization& r, const UEA& value) {
  for (int g : r.gens_grade_at_least(2))
    if (!adjoint_action(r, g, value).is_zero()) return false;
  return true;
}

void finish_record(const Realization& r, GeneratorRecord& rec) {
  rec.membership = record_membership(r, rec.value);
  if (!rec.value.is_zero()) rec.gr_deg = gr_symbol(r, rec.value).deg;
}

}  // namespace

std::vector<GeneratorRecord> extract_generators(const Realization& r) {
  const Pyramid& P = r.pyr();
  std::vector<GeneratorRecord> out;
  std::vector<int> sizes;  // distinct part sizes, descending
  for (int part : P.lambda().parts)
    if (sizes.empty() || sizes.back() != part) sizes.push_back(part);

  if (r.kind() == Kind::GL) {
    // Boundary-block coefficients for gl with highest weight vectors of
    // distinct weights: rows of the second part size, strictly past the gap.
    if (sizes.size() < 2)
      throw std::invalid_argument("extract_generators: gl needs at least two distinct part sizes");
    if (!r.even_grading())
      throw std::invalid_argument("extract_generators: gl extraction needs an even grading");
    LaxOp op = LaxOp::untruncated(r);
    int l1 = sizes[0], l2 = sizes[1];
    std::vector<int> cs = boxes_of_rows_at_col(r, l2, P.lambda().longest() + l2);  // last box of those rows
    std::vector<int> ds = boxes_of_rows_at_col(r, l1, 2 * P.lambda().longest());
    for (int c : cs)
      for (int d : ds)
        for (int b = (l1 - l2) / 2 + 1; b <= l1; ++b) {
          GeneratorRecord rec;
          rec.mode = "T_main";
          rec.c = c;
          rec.d = d;
          rec.k = l1 - 1;
          rec.p = 2 * b;
          rec.value = op.pathsum_lr(c, d, 2 * b);
          finish_record(r, rec);
          out.push_back(std::move(rec));
        }
    return out;
  }

  if (!r.even_grading()) throw std::invalid_argument("extract_generators: grading must be even");

  for (size_t si = 0; si < sizes.size(); ++si) {
    int len = sizes[si];
    Half k = len - 1;
    LaxOp op = LaxOp::truncated(r, k);
    const auto& w = op.window();
    std::vector<int> cs = boxes_of_rows_at_col(r, len, w.lo);
    std::vector<int> ds = boxes_of_rows_at_col(r, len, w.hi);
    for (int c : cs)
      for (int d : ds)
        for (int p = 1; p <= len; ++p) {
          GeneratorRecord rec;
          rec.mode = len == sizes[0] ? "L" : "L_k";
          rec.c = c;
          rec.d = d;
          rec.k = k;
          rec.p = 2 * p;
          rec.value = op.pathsum_l(c, d, 2 * p);
          rec.zeta = ZetaMatch{P.row_of(c), P.row_of(d), len - p, sign_pow(p + len)};
          finish_record(r, rec);
          out.push_back(std::move(rec));
        }
  }

  for (size_t si = 0; si + 1 < sizes.size(); ++si) {
    int lj = sizes[si], li = sizes[si + 1];  // adjacent distinct sizes, lj > li
    Half k = lj - 1, l = li - 1;
    LaxOp op = LaxOp::truncated(r, k);
    const auto& w = op.window();
    Half e_l = (P.lambda().longest() + 1) + l;
    std::vector<int> cs = boxes_of_rows_at_col(r, li, e_l);
    std::vector<int> ds = boxes_of_rows_at_col(r, lj, w.hi);
    int e_l_rel = (k + l) / 2 + 1;  // window-relative column label of e_l
    for (int c : cs)
      for (int d : ds)
        for (int q = (lj - li) / 2 + 1; q <= (li + lj) / 2; ++q) {
          GeneratorRecord rec;
          rec.mode = lj == sizes[0] ? "L_R" : "L_kR";
          rec.c = c;
          rec.d = d;
          rec.k = k;
          rec.p = 2 * q;
          rec.value = op.pathsum_lr(c, d, 2 * q);
          rec.zeta = ZetaMatch{P.row_of(c), P.row_of(d), (li + lj) / 2 - q, sign_pow(e_l_rel + 1 + q + lj)};
          finish_record(r, rec);
          out.push_back(std::move(rec));
        }
  }
  return out;
}

namespace {

ojson uea_to_json(const Realization& r, const UEA& u) {
  ojson arr = ojson::array();
  for (const auto& [m, c] : u.terms()) {
    ojson term;
    term["coeff"] = rat_str(c);
    ojson mono = ojson::array();
    for (int g : m.g) mono.push_back(ojson::array({r.gen(g).a, r.gen(g).b}));
    term["monomial"] = mono;
    arr.push_back(term);
  }
  return arr;
}

}  // namespace

std::string records_to_json(const Realization& r, const std::vector<GeneratorRecord>& recs) {
  ojson root;
  root["realization"] = ojson::parse(realization_to_json(r));
  ojson arr = ojson::array();
  for (const auto& rec : recs) {
    ojson j;
    j["mode"] = rec.mode;
    j["c"] = rec.c;
    j["d"] = rec.d;
    j["k"] = half_str(rec.k);
    j["p"] = half_str(rec.p);
    j["value"] = uea_to_json(r, rec.value);
    if (rec.gr_deg)
      j["grDegree"] = half_str(*rec.gr_deg);
    else
      j["grDegree"] = nullptr;
    if (rec.zeta) {
      ojson z;
      z["i"] = rec.zeta->i;
      z["j"] = rec.zeta->j;
      z["t"] = rec.zeta->t;
      z["sign"] = rec.zeta->sign;
      j["zetaMatch"] = z;
    } else {
      j["zetaMatch"] = nullptr;
    }
    j["membership"] = rec.membership;
    arr.push_back(j);
  }
  root["records"] = arr;
  return root.dump(2) + "\n";
}

std::string realization_to_json(const Realization& r) {
  ojson j;
  j["kind"] = kind_str(r.kind());
  j["partition"] = r.pyr().lambda().parts;
  if (r.kind() == Kind::GL)
    j["epsilon"] = nullptr;
  else
    j["epsilon"] = r.eps();
  ojson inv = ojson::array();
  for (int i = 1; i <= r.pyr().row_count(); ++i) inv.push_back(r.row_prime(i));
  j["involution"] = inv;
  ojson basis = ojson::array();
  for (const auto& g : r.gens()) basis.push_back(ojson::array({g.a, g.b}));
  j["basis"] = basis;
  return j.dump();
}

}  // namespace walg
