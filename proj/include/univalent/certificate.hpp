#pragma once

#include <string_view>

namespace univalent {

enum class StatementId {
  A,               // v(t) >= 0 on [0, pi/2]
  B,               // u decreasing on (0, 3 pi/(2n+2))
  C,               // u(t) < u(pi/(n+1)) on (pi/(n+1), pi/2]
  D,               // v decreasing on (pi/(n+1), pi/2]
  Aux,             // (4/pi) x sin x < 1 - cos^3 x on (0, pi/7]
  SimpleCurve,     // boundary image has no self-crossing
  Nonnegativity,   // sum a_j cos((2j-1) t) >= 0 on [0, pi/2]
  OracleAgreement  // LP optimum vs closed-form gamma ratios
};

std::string_view to_string(StatementId id) noexcept;

/// Outcome of a sampled certificate. worst_margin is signed: positive means
/// the claim holds with that much slack at the worst grid node.
struct CertificateReport {
  StatementId statement = StatementId::A;
  bool passed = false;
  double worst_margin = 0.0;
  double worst_t = 0.0;
  int grid_size = 0;
  double tolerance = 0.0;
  /// Strict claims pass when worst_margin > -tolerance, the rest when
  /// worst_margin >= -tolerance.
  bool strict = false;
};

/// Applies the pass rule above.
CertificateReport make_report(StatementId id, double worst_margin, double worst_t,
                              int grid_size, double tolerance, bool strict);

}  // namespace univalent
