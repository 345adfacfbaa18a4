#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "walg/liealg.hpp"

namespace walg {

// PBW monomial: generator ids in nondecreasing canonical order.  The empty
// word is the identity.
struct Mono {
  std::vector<int> g;
  auto operator<=>(const Mono&) const = default;
  size_t len() const { return g.size(); }
};

// Exact element of U(g) for a fixed realization: monomial -> coefficient,
// zero coefficients never stored.
class UEA {
 public:
  UEA() = default;
  static UEA one();
  static UEA scalar(const Rational& c);
  static UEA generator(int g);
  static UEA from_lie(const LieElt& x);

  bool is_zero() const { return t_.empty(); }
  bool operator==(const UEA& o) const { return t_ == o.t_; }
  const std::map<Mono, Rational>& terms() const { return t_; }

  // Coefficient of the empty monomial.
  Rational scalar_part() const;
  UEA without_scalar() const;

  void add_term(const Mono& m, const Rational& c);
  UEA operator+(const UEA& o) const;
  UEA operator-(const UEA& o) const;
  UEA operator*(const Rational& c) const;

  std::string str(const Realization& r) const;  // canonical text form

 private:
  std::map<Mono, Rational> t_;
};

// Product in PBW normal form; both operands must belong to `r`.
UEA uea_mul(const Realization& r, const UEA& x, const UEA& y);

// Reduction modulo the left ideal generated by {m - <f|m> : m in g_{>=1}}.
// The result has no factor of grade >= 1; under an even grading it is the
// canonical coset representative in U(g_{<=0}).
UEA reduce_mod_j(const Realization& r, const UEA& x);
bool is_reduced(const Realization& r, const UEA& x);

// reduce(m * x - x * m) for a generator m of grade >= 1; well defined on the
// quotient.  Throws when grade(m) < 1.
UEA adjoint_action(const Realization& r, int gen_m, const UEA& x);

// Filtration degree (doubled) of a monomial: sum of -grade over factors.
Half filtration_deg(const Realization& r, const Mono& m);

struct GrSymbol {
  Half deg = 0;  // doubled
  UEA top;
};
// Top filtration layer of a nonzero element; throws on zero.
GrSymbol gr_symbol(const Realization& r, const UEA& x);

}  // namespace walg
