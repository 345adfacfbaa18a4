#include "walg/liealg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walg {

std::string kind_str(Kind k) {
  switch (k) {
    case Kind::GL: return "gl";
    case Kind::SO: return "so";
    case Kind::SP: return "sp";
  }
  return "?";
}

Kind kind_parse(const std::string& s) {
  if (s == "gl") return Kind::GL;
  if (s == "so") return Kind::SO;
  if (s == "sp") return Kind::SP;
  throw std::invalid_argument("unknown kind '" + s + "' (expected gl|so|sp)");
}

LieElt lie_add(const LieElt& x, const LieElt& y) {
  LieElt r = x;
  for (const auto& [g, c] : y) {
    Rational v = r.count(g) ? r[g] + c : c;
    if (v == 0)
      r.erase(g);
    else
      r[g] = v;
  }
  return r;
}

LieElt lie_scale(const LieElt& x, const Rational& c) {
  LieElt r;
  if (c == 0) return r;
  for (const auto& [g, v] : x) r[g] = v * c;
  return r;
}

bool lie_is_zero(const LieElt& x) { return x.empty(); }

int Realization::prime_box(int a) const {
  int rp = row_prime(pyr_.row_of(a));
  Half colp = 2 * (pyr_.lambda().longest() + 1) - pyr_.col_of(a);
  int b = pyr_.box_at(rp, colp);
  if (b == 0) throw std::logic_error("prime_box: reflected box missing");
  return b;
}

int Realization::eta(int row, int s) const {
  int rp = row_prime(row);
  if (row <= rp) return sign_pow(s);
  return eps_ * sign_pow(pyr_.row_len(row) - 1 - s);
}

Rational Realization::form(const QMat& X, const QMat& Y) const {
  Rational t = (X * Y).trace();
  if (kind_ == Kind::GL) return t;
  return t / 2;
}

QMat Realization::sigma(const QMat& X) const {
  if (kind_ == Kind::GL) throw std::logic_error("sigma: gl has no involution");
  return (Jinv_ * X.transpose() * J_) * Rational(-1);
}

Realization Realization::build(Kind kind, Partition lambda) {
  lambda.validate();
  Realization r;
  r.kind_ = kind;
  r.eps_ = kind == Kind::GL ? 0 : (kind == Kind::SO ? 1 : -1);
  r.pyr_ = Pyramid(lambda);
  const Pyramid& P = r.pyr_;
  const int N = P.box_count();
  const int n = P.row_count();

  // Row involution.  Self-paired when eps*(-1)^lambda_i = -1; otherwise equal
  // parts pair up in adjacent positions, which forces even multiplicity.
  r.row_prime_.assign(static_cast<size_t>(n) + 1, 0);
  if (kind == Kind::GL) {
    for (int i = 1; i <= n; ++i) r.row_prime_[static_cast<size_t>(i)] = i;
  } else {
    if (!lambda.same_parity())
      throw std::invalid_argument("partition is not admissible for kind " + kind_str(kind) +
                                  ": all parts must share one parity for an even grading");
    for (int i = 1; i <= n;) {
      int len = P.row_len(i);
      int j = i;
      while (j <= n && P.row_len(j) == len) ++j;  // block [i, j)
      bool self = (r.eps_ * sign_pow(len)) == -1;
      if (self) {
        for (int t = i; t < j; ++t) r.row_prime_[static_cast<size_t>(t)] = t;
      } else {
        if ((j - i) % 2 != 0)
          throw std::invalid_argument("partition is not admissible for kind " + kind_str(kind) + ": part " +
                                      std::to_string(len) + " occurs " + std::to_string(j - i) +
                                      " times but must have even multiplicity");
        for (int t = i; t < j; t += 2) {
          r.row_prime_[static_cast<size_t>(t)] = t + 1;
          r.row_prime_[static_cast<size_t>(t + 1)] = t;
        }
      }
      i = j;
    }
  }

  // F: e_b <- e_a along rows.
  r.F_ = QMat(N);
  for (int a = 1; a <= N; ++a) {
    int b = P.box_at(P.row_of(a), P.col_of(a) + 2);
    if (b != 0) r.F_.at(b, a) = 1;
  }

  // Gram matrix of the bilinear form on V (so/sp realizations only).
  if (kind != Kind::GL) {
    r.J_ = QMat(N);
    for (int a = 1; a <= N; ++a) {
      int i = P.row_of(a);
      int s = P.idx_in_row(a);
      int b = P.box_by_idx(r.row_prime_[static_cast<size_t>(i)], P.row_len(i) - 1 - s);
      r.J_.at(a, b) = (i <= r.row_prime_[static_cast<size_t>(i)]) ? sign_pow(s)
                                                                  : Rational(r.eps_) * sign_pow(P.row_len(i) - 1 - s);
    }
    r.Jinv_ = r.J_.inverse();
  }

  // Canonical generator list.
  auto make_phi = [&](int a, int b) {
    QMat m = QMat::unit(N, a, b);
    if (kind != Kind::GL) m = m + r.sigma(QMat::unit(N, a, b));
    return m;
  };

  std::vector<Gen> raw;
  const Half sum_mid = 2 * (lambda.longest() + 1);
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      bool take = false;
      if (kind == Kind::GL) {
        take = true;
      } else {
        int ra = P.row_of(a), rb = P.row_of(b);
        int rbp = r.row_prime_[static_cast<size_t>(rb)];
        if (ra != rb && ra != rbp) {
          take = rb < ra;
        } else {
          Half s = P.col_of(a) + P.col_of(b);
          if (s > sum_mid) {
            take = true;
          } else if (s == sum_mid) {
            if (ra == rbp)
              take = r.eps_ == -1;  // nonzero only in the sp-type realization
            else
              take = ra < r.row_prime_[static_cast<size_t>(ra)];  // one row of the pair carries the class
          }
        }
      }
      if (take) raw.push_back(Gen{a, b, P.delta_unit(a, b)});
    }
  // Order: grade ascending, then row/column of each box.  g_{>=1} ends up
  // rightmost in sorted monomials, which keeps ideal reduction a tail scan.
  std::sort(raw.begin(), raw.end(), [&](const Gen& x, const Gen& y) {
    auto k1 = std::tuple(x.grade, P.row_of(x.a), P.col_of(x.a), P.row_of(x.b), P.col_of(x.b));
    auto k2 = std::tuple(y.grade, P.row_of(y.a), P.col_of(y.a), P.row_of(y.b), P.col_of(y.b));
    return k1 < k2;
  });
  r.gens_ = std::move(raw);
  for (int g = 0; g < r.dim(); ++g) r.gen_index_[{r.gens_[static_cast<size_t>(g)].a, r.gens_[static_cast<size_t>(g)].b}] = g;

  if (kind != Kind::GL) {
    int expected = kind == Kind::SO ? N * (N - 1) / 2 : N * (N + 1) / 2;
    if (r.dim() != expected)
      throw std::logic_error("basis count mismatch: got " + std::to_string(r.dim()) + " expected " +
                             std::to_string(expected));
  }

  for (const Gen& g : r.gens_) {
    r.phi_.push_back(make_phi(g.a, g.b));
    if (r.phi_.back().is_zero()) throw std::logic_error("canonical generator has zero image");
  }

  // Canonical form of every box pair.
  r.canon_.assign(static_cast<size_t>(N) * N, Canon{});
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) {
      Canon c;
      auto it = r.gen_index_.find({a, b});
      if (it != r.gen_index_.end()) {
        c = Canon{false, it->second, 1};
      } else if (kind != Kind::GL) {
        QMat m = make_phi(a, b);
        if (!m.is_zero()) {
          int ap = r.prime_box(a), bp = r.prime_box(b);
          auto jt = r.gen_index_.find({bp, ap});
          if (jt == r.gen_index_.end()) throw std::logic_error("canonicalization: partner pair not in basis");
          const QMat& cm = r.phi_[static_cast<size_t>(jt->second)];
          int sign = 0;
          for (int i = 1; i <= N && sign == 0; ++i)
            for (int j = 1; j <= N && sign == 0; ++j)
              if (cm.at(i, j) != 0) sign = (m.at(i, j) == cm.at(i, j)) ? 1 : (m.at(i, j) == -cm.at(i, j) ? -1 : 0);
          if (sign == 0 || !(cm * Rational(sign) == m))
            throw std::logic_error("canonicalization: pair is not +/- its partner");
          c = Canon{false, jt->second, sign};
        }
      }
      r.canon_[r.key(a, b)] = c;
    }

  // Duals: f[b,a] as an element, rescaled so the pairing matrix is the identity.
  for (int g = 0; g < r.dim(); ++g) {
    const Gen& gen = r.gens_[static_cast<size_t>(g)];
    QMat pair_mat = make_phi(gen.b, gen.a);
    Rational c = r.form(r.phi_[static_cast<size_t>(g)], pair_mat);
    if (c == 0) throw std::logic_error("dual basis: degenerate pairing");
    r.dual_.push_back(pair_mat * (Rational(1) / c));
    Canon cn = r.canon_[r.key(gen.b, gen.a)];
    if (cn.zero) throw std::logic_error("dual basis: partner vanishes");
    LieElt de;
    de[cn.gen] = Rational(cn.sign) / c;
    r.dual_elt_.push_back(de);
  }

  // Shift matrix.  The transfer identity linking the full and truncated
  // coupling sums, and invariance of the extracted coefficients, both pin the
  // sign: the dual-ordered sum over the positive part enters negated.
  r.D_ = QMat(N);
  for (int g = 0; g < r.dim(); ++g)
    if (r.gens_[static_cast<size_t>(g)].grade >= 2) r.D_ = r.D_ - r.dual_[static_cast<size_t>(g)] * r.phi_[static_cast<size_t>(g)];
  if (!r.D_.is_diagonal()) throw std::logic_error("shift matrix is not diagonal");

  for (int g = 0; g < r.dim(); ++g) r.f_pair_.push_back(r.form(r.F_, r.phi_[static_cast<size_t>(g)]));

  // Full structure-constant table, so lookups never mutate shared state.
  r.bracket_cache_.assign(static_cast<size_t>(r.dim()), {});
  for (int g1 = 0; g1 < r.dim(); ++g1) {
    r.bracket_cache_[static_cast<size_t>(g1)].assign(static_cast<size_t>(r.dim()), {});
    for (int g2 = 0; g2 < r.dim(); ++g2)
      r.bracket_cache_[static_cast<size_t>(g1)][static_cast<size_t>(g2)] = r.bracket_formula(g1, g2);
  }
  return r;
}

LieElt Realization::casimir_coeff(int a, int b) const {
  Canon c = canon(b, a);
  LieElt out;
  if (!c.zero) out[c.gen] = c.sign;
  return out;
}

const LieElt& Realization::bracket_gens(int g1, int g2) const {
  return bracket_cache_[static_cast<size_t>(g1)][static_cast<size_t>(g2)];
}

LieElt Realization::bracket_formula(int g1, int g2) const {
  const Pyramid& P = pyr_;
  const Gen& x = gens_[static_cast<size_t>(g1)];
  const Gen& y = gens_[static_cast<size_t>(g2)];
  int a = x.a, b = x.b, c = y.a, d = y.b;
  LieElt out;
  auto acc = [&](int u, int v, const Rational& coeff) {
    Canon cn = canon(u, v);
    if (cn.zero || coeff == 0) return;
    Rational add = coeff * cn.sign;
    auto [it, fresh] = out.try_emplace(cn.gen, add);
    if (!fresh) {
      it->second += add;
      if (it->second == 0) out.erase(it);
    }
  };
  if (b == c) acc(a, d, 1);
  if (a == d) acc(c, b, -1);
  if (kind_ != Kind::GL) {
    int q = P.idx_in_row(c);
    if (b == prime_box(d)) {
      Rational coeff = Rational(eps_) * eta(P.row_of(c), q) * eta(P.row_of(b), P.idx_in_row(b));
      acc(a, prime_box(c), -coeff);
    }
    if (a == prime_box(c)) {
      int p = P.idx_in_row(d);
      Rational coeff = Rational(eps_) * eta(P.row_of(c), q) *
                       eta(row_prime(P.row_of(d)), P.row_len(P.row_of(d)) - 1 - p);
      acc(prime_box(d), b, coeff);
    }
  }
  return out;
}

LieElt Realization::bracket(const LieElt& x, const LieElt& y) const {
  LieElt out;
  for (const auto& [g1, c1] : x)
    for (const auto& [g2, c2] : y) {
      for (const auto& [g, c] : bracket_gens(g1, g2)) {
        Rational add = c1 * c2 * c;
        auto [it, fresh] = out.try_emplace(g, add);
        if (!fresh) {
          it->second += add;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  return out;
}

QMat Realization::mat(const LieElt& x) const {
  QMat m(pyr_.box_count());
  for (const auto& [g, c] : x) m = m + phi_[static_cast<size_t>(g)] * c;
  return m;
}

LieElt Realization::decompose(const QMat& X) const {
  LieElt out;
  for (int g = 0; g < dim(); ++g) {
    Rational c = form(X, dual_[static_cast<size_t>(g)]);
    if (c != 0) out[g] = c;
  }
  if (!(mat(out) == X)) throw std::invalid_argument("decompose: matrix is not in the realization's image");
  return out;
}

std::vector<int> Realization::gens_grade_at_least(Half grade) const {
  std::vector<int> out;
  for (int g = 0; g < dim(); ++g)
    if (gens_[static_cast<size_t>(g)].grade >= grade) out.push_back(g);
  return out;
}

std::vector<int> Realization::gens_with_grade(Half grade) const {
  std::vector<int> out;
  for (int g = 0; g < dim(); ++g)
    if (gens_[static_cast<size_t>(g)].grade == grade) out.push_back(g);
  return out;
}

LieElt Realization::zeta(int i, int j, int t) const {
  const Pyramid& P = pyr_;
  if (i < 1 || i > P.row_count() || j < 1 || j > P.row_count()) throw std::out_of_range("zeta: bad rows");
  LieElt out;
  int tp = P.row_len(j) - 1 - t;
  for (int s = 0; s <= t; ++s) {
    if (s >= P.row_len(i)) break;
    int u = s + tp;
    if (u < 0 || u >= P.row_len(j)) continue;
    int bb = P.box_by_idx(i, s);
    int aa = P.box_by_idx(j, u);
    Canon cn = canon(aa, bb);
    if (cn.zero) continue;
    auto [it, fresh] = out.try_emplace(cn.gen, cn.sign);
    if (!fresh) {
      it->second += cn.sign;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

std::vector<Realization::ZetaId> Realization::centralizer_basis() const {
  const Pyramid& P = pyr_;
  int n = P.row_count();
  std::vector<ZetaId> out;
  if (kind_ == Kind::GL) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int t = 0; t < std::min(P.row_len(i), P.row_len(j)); ++t) out.push_back({i, j, t});
    return out;
  }
  for (int i = 1; i <= n; ++i) {
    int ip = row_prime(i);
    int li = P.row_len(i);
    if (i < ip)
      for (int t = 0; t < li; ++t) out.push_back({i, i, t});
    if (i == ip)
      for (int t = 0; t < li; ++t)
        if ((li - t) % 2 == 0) out.push_back({i, i, t});
    if (i != ip)
      for (int t = 0; t < li; ++t)
        if ((li - t) % 2 == 1) out.push_back({i, ip, t});
    for (int j = i + 1; j <= n; ++j) {
      if (j == ip) continue;
      for (int t = 0; t < P.row_len(j); ++t) out.push_back({i, j, t});
    }
  }
  return out;
}

Realization::Window Realization::window(Half k) const {
  auto b = pyr_.truncation_bounds(k);
  Window w;
  w.lo = b.s_col;
  w.hi = b.e_col;
  w.r_len = b.r_len;
  for (int box = 1; box <= pyr_.box_count(); ++box)
    if (pyr_.col_of(box) >= w.lo && pyr_.col_of(box) <= w.hi) w.boxes.push_back(box);
  for (int g = 0; g < dim(); ++g) {
    const Gen& gn = gens_[static_cast<size_t>(g)];
    Half ca = pyr_.col_of(gn.a), cb = pyr_.col_of(gn.b);
    if (ca >= w.lo && ca <= w.hi && cb >= w.lo && cb <= w.hi) w.gens.push_back(g);
  }
  w.win_row_len.assign(static_cast<size_t>(pyr_.row_count()) + 1, 0);
  for (int box : w.boxes) w.win_row_len[static_cast<size_t>(pyr_.row_of(box))]++;
  w.Dk = QMat(pyr_.box_count());
  for (int g : w.gens)
    if (gens_[static_cast<size_t>(g)].grade >= 2) w.Dk = w.Dk - dual_[static_cast<size_t>(g)] * phi_[static_cast<size_t>(g)];
  if (!w.Dk.is_diagonal()) throw std::logic_error("window shift matrix is not diagonal");
  return w;
}

Realization::Window Realization::full_window() const { return window(pyr_.lambda().longest() - 1); }

std::string Realization::id() const {
  std::ostringstream os;
  os << kind_str(kind_) << "(";
  for (size_t i = 0; i < pyr_.lambda().parts.size(); ++i) {
    if (i) os << ",";
    os << pyr_.lambda().parts[i];
  }
  os << ")";
  return os.str();
}

}  // namespace walg
