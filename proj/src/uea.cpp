#include "walg/uea.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walg {

UEA UEA::one() { return scalar(1); }

UEA UEA::scalar(const Rational& c) {
  UEA u;
  if (c != 0) u.t_[Mono{}] = c;
  return u;
}

UEA UEA::generator(int g) {
  UEA u;
  u.t_[Mono{{g}}] = 1;
  return u;
}

UEA UEA::from_lie(const LieElt& x) {
  UEA u;
  for (const auto& [g, c] : x) u.t_[Mono{{g}}] = c;
  return u;
}

Rational UEA::scalar_part() const {
  auto it = t_.find(Mono{});
  return it == t_.end() ? Rational(0) : it->second;
}

UEA UEA::without_scalar() const {
  UEA u = *this;
  u.t_.erase(Mono{});
  return u;
}

void UEA::add_term(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

UEA UEA::operator+(const UEA& o) const {
  UEA u = *this;
  for (const auto& [m, c] : o.t_) u.add_term(m, c);
  return u;
}

UEA UEA::operator-(const UEA& o) const {
  UEA u = *this;
  for (const auto& [m, c] : o.t_) u.add_term(m, -c);
  return u;
}

UEA UEA::operator*(const Rational& c) const {
  UEA u;
  if (c == 0) return u;
  for (const auto& [m, v] : t_) u.t_[m] = v * c;
  return u;
}

std::string UEA::str(const Realization& r) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int g : m.g) os << "*f[" << r.gen(g).a << "," << r.gen(g).b << "]";
  }
  return os.str();
}

namespace {

// Straightens an arbitrary word into PBW normal form by adjacent swaps with
// bracket correction terms.  Terminates by (length, inversion count).
void straighten_into(const Realization& r, std::vector<int> word, Rational coeff, UEA& out) {
  for (;;) {
    size_t bad = word.size();
    for (size_t i = 0; i + 1 < word.size(); ++i)
      if (word[i] > word[i + 1]) { bad = i; break; }
    if (bad == word.size()) {
      out.add_term(Mono{std::move(word)}, coeff);
      return;
    }
    const LieElt& br = r.bracket_gens(word[bad], word[bad + 1]);
    std::swap(word[bad], word[bad + 1]);
    for (const auto& [g, c] : br) {
      std::vector<int> shorter;
      shorter.reserve(word.size() - 1);
      shorter.insert(shorter.end(), word.begin(), word.begin() + static_cast<long>(bad));
      shorter.push_back(g);
      shorter.insert(shorter.end(), word.begin() + static_cast<long>(bad) + 2, word.end());
      straighten_into(r, std::move(shorter), coeff * c, out);
    }
  }
}

}  // namespace

UEA uea_mul(const Realization& r, const UEA& x, const UEA& y) {
  UEA out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      std::vector<int> word = mx.g;
      word.insert(word.end(), my.g.begin(), my.g.end());
      straighten_into(r, std::move(word), cx * cy, out);
    }
  return out;
}

UEA reduce_mod_j(const Realization& r, const UEA& x) {
  // Factors are sorted by grade, so a monomial touches the ideal iff its last
  // factor has grade >= 1; trailing factors peel off as <f|m> scalars.
  UEA out;
  for (const auto& [m, c] : x.terms()) {
    std::vector<int> word = m.g;
    Rational coeff = c;
    while (!word.empty() && r.gen(word.back()).grade >= 2) {
      coeff *= r.f_pairing(word.back());
      if (coeff == 0) break;
      word.pop_back();
    }
    if (coeff != 0) out.add_term(Mono{std::move(word)}, coeff);
  }
  return out;
}

bool is_reduced(const Realization& r, const UEA& x) {
  for (const auto& [m, c] : x.terms())
    for (int g : m.g)
      if (r.gen(g).grade >= 2) return false;
  return true;
}

UEA adjoint_action(const Realization& r, int gen_m, const UEA& x) {
  if (r.gen(gen_m).grade < 2)
    throw std::invalid_argument("adjoint_action: generator grade must be >= 1");
  UEA m = UEA::generator(gen_m);
  return reduce_mod_j(r, uea_mul(r, m, x) - uea_mul(r, x, m));
}

Half filtration_deg(const Realization& r, const Mono& m) {
  Half d = 0;
  for (int g : m.g) d -= r.gen(g).grade;
  return d;
}

GrSymbol gr_symbol(const Realization& r, const UEA& x) {
  if (x.is_zero()) throw std::invalid_argument("gr_symbol: zero element");
  bool have = false;
  Half best = 0;
  for (const auto& [m, c] : x.terms()) {
    Half d = filtration_deg(r, m);
    if (!have || d > best) { best = d; have = true; }
  }
  GrSymbol s;
  s.deg = best;
  for (const auto& [m, c] : x.terms())
    if (filtration_deg(r, m) == best) s.top.add_term(m, c);
  return s;
}

}  // namespace walg
