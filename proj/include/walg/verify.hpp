#pragma once

#include <string>
#include <vector>

#include "walg/lax.hpp"

namespace walg {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // populated on failure
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
  std::string text() const;
  std::string json() const;
};

// Invariance under the positive part: every adjoint action must vanish.
CheckResult check_membership_elt(const Realization& r, const UEA& w, const std::string& label);
CheckResult check_records_membership(const Realization& r, const std::vector<GeneratorRecord>& recs);

// Graded symbol of a record equals its stated centralizer element, including
// the sign; scalar summands are quotiented away first.
CheckResult check_gr_zeta(const Realization& r, const GeneratorRecord& rec);
CheckResult check_records_gr_zeta(const Realization& r, const std::vector<GeneratorRecord>& recs);

// Bracket closure of obtained symbols spans the whole centralizer basis.
CheckResult check_generation(const Realization& r, const std::vector<GeneratorRecord>& recs);

// Operator identities above a doubled floor.
CheckResult check_identity_zy(const Realization& r, Half floor);
CheckResult check_identity_shift_commutator(const Realization& r);  // exact, no floor
CheckResult check_identity_bracket_transfer(const Realization& r, Half floor);

// The membership checker must reject a deliberate non-invariant element.
CheckResult check_negative_control(const Realization& r);

VerificationReport run_realization_suite(const Realization& r, Half floor);
VerificationReport run_standard_suite(Half floor);

// The fixed realization set used by the standard suite.
std::vector<std::pair<Kind, Partition>> standard_manifest();

}  // namespace walg
