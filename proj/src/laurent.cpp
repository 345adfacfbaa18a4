#include "walg/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walg {

namespace {
constexpr Half kVeryLow = std::numeric_limits<Half>::min() / 4;
}

Half LaurentPoly::top() const { return c.empty() ? kVeryLow : c.rbegin()->first; }

void LaurentPoly::add(Half e, const UEA& u) {
  if (u.is_zero()) return;
  if (floor && e < *floor) return;
  auto [it, fresh] = c.try_emplace(e, u);
  if (!fresh) {
    it->second = it->second + u;
    if (it->second.is_zero()) c.erase(it);
  }
}

void LaurentPoly::drop_below(Half f) {
  while (!c.empty() && c.begin()->first < f) c.erase(c.begin());
  floor = floor ? std::max(*floor, f) : f;
}

UEA LaurentPoly::coeff(Half e) const {
  if (floor && e < *floor) throw std::logic_error("LaurentPoly::coeff below truncation floor");
  auto it = c.find(e);
  return it == c.end() ? UEA{} : it->second;
}

LaurentMat::LaurentMat(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {}

void LaurentMat::set_floor(std::optional<Half> f) {
  floor_ = f;
  if (!f) return;
  for (auto& [k, p] : e_) p.drop_below(*f);
}

LaurentPoly& LaurentMat::entry(int rbox, int cbox) {
  auto& p = e_[{rbox, cbox}];
  p.floor = floor_;
  return p;
}

const LaurentPoly* LaurentMat::entry_if(int rbox, int cbox) const {
  auto it = e_.find({rbox, cbox});
  return it == e_.end() ? nullptr : &it->second;
}

UEA LaurentMat::coeff(int rbox, int cbox, Half e) const {
  if (floor_ && e < *floor_) throw std::logic_error("LaurentMat::coeff below truncation floor");
  const LaurentPoly* p = entry_if(rbox, cbox);
  if (!p) return UEA{};
  auto it = p->c.find(e);
  return it == p->c.end() ? UEA{} : it->second;
}

Half LaurentMat::top() const {
  Half t = kVeryLow;
  for (const auto& [k, p] : e_) t = std::max(t, p.top());
  return t;
}

LaurentMat LaurentMat::operator+(const LaurentMat& o) const {
  LaurentMat r(rows_, cols_);
  std::optional<Half> f;
  if (floor_ || o.floor_) f = std::max(floor_.value_or(kVeryLow), o.floor_.value_or(kVeryLow));
  r.floor_ = f;
  for (const auto& [k, p] : e_)
    for (const auto& [e, u] : p.c) r.entry(k.first, k.second).add(e, u);
  for (const auto& [k, p] : o.e_)
    for (const auto& [e, u] : p.c) r.entry(k.first, k.second).add(e, u);
  return r;
}

LaurentMat LaurentMat::operator-(const LaurentMat& o) const {
  LaurentMat r(rows_, cols_);
  std::optional<Half> f;
  if (floor_ || o.floor_) f = std::max(floor_.value_or(kVeryLow), o.floor_.value_or(kVeryLow));
  r.floor_ = f;
  for (const auto& [k, p] : e_)
    for (const auto& [e, u] : p.c) r.entry(k.first, k.second).add(e, u);
  for (const auto& [k, p] : o.e_)
    for (const auto& [e, u] : p.c) r.entry(k.first, k.second).add(e, u * Rational(-1));
  return r;
}

std::string LaurentMat::dump(const Realization& r) const {
  std::ostringstream os;
  for (const auto& [k, p] : e_) {
    os << k.first << "->" << k.second << ":";
    for (const auto& [e, u] : p.c) os << " z^(" << half_str(e) << ")*(" << u.str(r) << ")";
    os << "\n";
  }
  return os.str();
}

LaurentMat lm_mul(const Realization& r, const LaurentMat& a, const LaurentMat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("lm_mul: shape mismatch");
  LaurentMat out(a.rows(), b.cols());
  // A product coefficient at exponent d is exact when every contribution with
  // an unknown factor lies below d: unknown(A)*top(B) and top(A)*unknown(B).
  std::optional<Half> f;
  if (a.floor()) f = *a.floor() + b.top();
  if (b.floor()) {
    Half g = a.top() + *b.floor();
    f = f ? std::max(*f, g) : g;
  }
  out.set_floor(f);
  for (int rb : a.rows())
    for (int k : a.cols()) {
      const LaurentPoly* pa = a.entry_if(rb, k);
      if (!pa || pa->c.empty()) continue;
      for (int cb : b.cols()) {
        const LaurentPoly* pb = b.entry_if(k, cb);
        if (!pb || pb->c.empty()) continue;
        LaurentPoly& pe = out.entry(rb, cb);
        for (const auto& [e1, u1] : pa->c)
          for (const auto& [e2, u2] : pb->c) {
            Half e = e1 + e2;
            if (f && e < *f) continue;
            pe.add(e, uea_mul(r, u1, u2));
          }
      }
    }
  return out;
}

LaurentMat lm_identity(const std::vector<int>& boxes) {
  LaurentMat m(boxes, boxes);
  for (int b : boxes) m.entry(b, b).add(0, UEA::one());
  return m;
}

LaurentMat lm_reduce(const Realization& r, const LaurentMat& a) {
  LaurentMat out(a.rows(), a.cols());
  out.set_floor(a.floor());
  for (int rb : a.rows())
    for (int cb : a.cols()) {
      const LaurentPoly* p = a.entry_if(rb, cb);
      if (!p) continue;
      for (const auto& [e, u] : p->c) out.entry(rb, cb).add(e, reduce_mod_j(r, u));
    }
  return out;
}

LaurentMat lm_gen_mul_reduce(const Realization& r, int gen, const LaurentMat& a) {
  LaurentMat out(a.rows(), a.cols());
  out.set_floor(a.floor());
  UEA m = UEA::generator(gen);
  for (int rb : a.rows())
    for (int cb : a.cols()) {
      const LaurentPoly* p = a.entry_if(rb, cb);
      if (!p) continue;
      for (const auto& [e, u] : p->c) out.entry(rb, cb).add(e, reduce_mod_j(r, uea_mul(r, m, u)));
    }
  return out;
}

LaurentMat lm_scale(const LaurentMat& a, const Rational& c) {
  LaurentMat out(a.rows(), a.cols());
  out.set_floor(a.floor());
  for (int rb : a.rows())
    for (int cb : a.cols()) {
      const LaurentPoly* p = a.entry_if(rb, cb);
      if (!p) continue;
      for (const auto& [e, u] : p->c) out.entry(rb, cb).add(e, u * c);
    }
  return out;
}

LaurentMat lm_shift(const LaurentMat& a, Half dz) {
  LaurentMat out(a.rows(), a.cols());
  if (a.floor()) out.set_floor(*a.floor() + dz);
  for (int rb : a.rows())
    for (int cb : a.cols()) {
      const LaurentPoly* p = a.entry_if(rb, cb);
      if (!p) continue;
      for (const auto& [e, u] : p->c) out.entry(rb, cb).add(e + dz, u);
    }
  return out;
}

bool lm_equal_above(const Realization& r, const LaurentMat& a, const LaurentMat& b, Half floor,
                    std::string* witness) {
  if (a.floor() && *a.floor() > floor) throw std::logic_error("lm_equal_above: lhs not exact at floor");
  if (b.floor() && *b.floor() > floor) throw std::logic_error("lm_equal_above: rhs not exact at floor");
  for (int rb : a.rows())
    for (int cb : a.cols()) {
      std::map<Half, char> exps;
      if (const LaurentPoly* p = a.entry_if(rb, cb))
        for (const auto& [e, u] : p->c) exps[e] = 1;
      if (const LaurentPoly* p = b.entry_if(rb, cb))
        for (const auto& [e, u] : p->c) exps[e] = 1;
      for (const auto& [e, tag] : exps) {
        if (e < floor) continue;
        UEA ua = a.coeff(rb, cb, e), ub = b.coeff(rb, cb, e);
        if (!(ua == ub)) {
          if (witness) {
            std::ostringstream os;
            os << "entry " << rb << "->" << cb << " at z^(" << half_str(e) << "): " << ua.str(r)
               << " vs " << ub.str(r);
            *witness = os.str();
          }
          return false;
        }
      }
    }
  return true;
}

Blocks blocks_of(const Realization& r, const Realization::Window& w) {
  Blocks b;
  const Pyramid& P = r.pyr();
  for (int box : w.boxes) {
    Half c = P.col_of(box);
    if (c == w.lo) b.top.push_back(box);
    if (c == w.hi) b.bottom.push_back(box);
    if (c > w.lo) b.below_top.push_back(box);
    if (c < w.hi) b.above_bot.push_back(box);
  }
  return b;
}

// Coefficient of e_{a,b} in the grade-restricted Casimir sum plus z^{-1} D,
// i.e. the entries written as \bar Y_{a,b}: nonzero only when
// col(a) <= col(b) + 1/2, carried by z^{col(a)-col(b)-1}.
UEA ybar_entry_elt(const Realization& r, const Realization::Window& w, int a, int b) {
  UEA u = UEA::from_lie(r.casimir_coeff(a, b));
  if (a == b) u = u + UEA::scalar(w.Dk.at(a, a));
  return u;
}

LaurentMat build_y_block(const Realization& r, const Realization::Window& w,
                         const std::vector<int>& rows, const std::vector<int>& cols) {
  const Pyramid& P = r.pyr();
  LaurentMat m(rows, cols);
  for (int a : rows)
    for (int b : cols) {
      Half d = P.col_of(a) - P.col_of(b);
      if (a == b) m.entry(a, b).add(0, UEA::one());
      if (d == 2 && P.row_of(a) == P.row_of(b)) m.entry(a, b).add(0, UEA::one());  // F part
      if (d <= 1) {
        UEA u = ybar_entry_elt(r, w, a, b);
        if (!u.is_zero()) m.entry(a, b).add(d - 2, u);
      }
    }
  return m;
}

LaurentMat build_z_block(const Realization& r, const Realization::Window& w,
                         const std::vector<int>& rows, const std::vector<int>& cols) {
  const Pyramid& P = r.pyr();
  LaurentMat m(rows, cols);
  for (int a : rows)
    for (int b : cols) {
      if (a == b) m.entry(a, b).add(0, UEA::one());
      UEA u = UEA::from_lie(r.casimir_coeff(a, b));
      if (!u.is_zero()) m.entry(a, b).add(P.col_of(a) - P.col_of(b) - 2, u);
    }
  return m;
}

LaurentMat build_z_full(const Realization& r) {
  std::vector<int> all;
  for (int b = 1; b <= r.dim_v(); ++b) all.push_back(b);
  Realization::Window w = r.full_window();
  return build_z_block(r, w, all, all);
}

QMat build_alpha(const Pyramid& P, Half lo, Half hi) {
  QMat m(P.box_count());
  for (int a = 1; a <= P.box_count(); ++a) {
    Half c = P.col_of(a);
    if (c < lo || c > hi) continue;
    if (c > lo && c < hi) m.at(a, a) = 1;
    if (c > lo) {
      int left = P.box_at(P.row_of(a), c - 2);
      if (left != 0 && P.col_of(left) >= lo) m.at(a, left) = 1;
    }
  }
  return m;
}

QMat build_alpha_inverse(const Pyramid& P, Half lo, Half hi) {
  int r_len = (hi - lo) / 2 + 1;
  QMat m(P.box_count());
  for (int a = 1; a <= P.box_count(); ++a) {
    if (P.col_of(a) < lo || P.col_of(a) >= hi) continue;  // rows: weight > -xi/2
    for (int b = 1; b <= P.box_count(); ++b) {
      if (P.col_of(b) <= lo || P.col_of(b) > hi) continue;  // cols: weight < xi/2
      if (P.row_of(a) != P.row_of(b)) continue;
      Half row_lo = std::max(P.row_start_col(P.row_of(a)), lo);
      Half row_hi = std::min(P.row_start_col(P.row_of(a)) + 2 * (P.row_len(P.row_of(a)) - 1), hi);
      bool full = (row_hi - row_lo) / 2 + 1 == r_len;
      // Signs use the column difference, which stays integral on the
      // half-integer lattice (and equals the printed column-sum parity
      // whenever the labels are integers).
      int par = ((P.col_of(b) - P.col_of(a)) / 2) % 2;
      if (full && P.col_of(a) < P.col_of(b))
        m.at(a, b) = -Rational(sign_pow(par));
      else if (!full && P.col_of(a) >= P.col_of(b))
        m.at(a, b) = Rational(sign_pow(par));
    }
  }
  return m;
}

QMat build_alpha(const Realization& r, const Realization::Window& w) {
  return build_alpha(r.pyr(), w.lo, w.hi);
}

QMat build_alpha_inverse(const Realization& r, const Realization::Window& w) {
  return build_alpha_inverse(r.pyr(), w.lo, w.hi);
}

LaurentMat build_ybar(const Realization& r, const Realization::Window& w) {
  const Pyramid& P = r.pyr();
  Blocks bl = blocks_of(r, w);
  LaurentMat m(bl.below_top, bl.above_bot);
  for (int a : bl.below_top)
    for (int b : bl.above_bot) {
      Half d = P.col_of(a) - P.col_of(b);
      if (d > 1) continue;
      UEA u = ybar_entry_elt(r, w, a, b);
      if (!u.is_zero()) m.entry(a, b).add(d - 2, u);
    }
  return m;
}

LaurentMat qmat_block(const QMat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  LaurentMat out(rows, cols);
  for (int a : rows)
    for (int b : cols)
      if (m.at(a, b) != 0) out.entry(a, b).add(0, UEA::scalar(m.at(a, b)));
  return out;
}

LaurentMat invert_interior(const Realization& r, const Realization::Window& w, Half floor) {
  Blocks bl = blocks_of(r, w);
  QMat alpha_inv = build_alpha_inverse(r, w);
  LaurentMat ainv = qmat_block(alpha_inv, bl.above_bot, bl.below_top);
  LaurentMat ybar = build_ybar(r, w);
  // (alpha + Ybar)^{-1} = sum_m (-alpha^{-1} Ybar)^m alpha^{-1}; every Ybar
  // factor lowers the z-exponent, so the sum is finite above the floor.
  LaurentMat step = lm_scale(lm_mul(r, ainv, ybar), -1);  // square on above_bot
  step.set_floor(floor - std::max<Half>(ainv.top(), 0));
  LaurentMat acc = ainv;
  acc.set_floor(floor);
  LaurentMat term = ainv;
  term.set_floor(floor);
  for (;;) {
    term = lm_mul(r, step, term);
    term.set_floor(floor);
    bool empty = true;
    for (int a : term.rows()) {
      for (int b : term.cols()) {
        const LaurentPoly* p = term.entry_if(a, b);
        if (p && !p->c.empty()) { empty = false; break; }
      }
      if (!empty) break;
    }
    if (empty) break;
    acc = acc + term;
  }
  acc.set_floor(floor);
  return acc;
}

}  // namespace walg
