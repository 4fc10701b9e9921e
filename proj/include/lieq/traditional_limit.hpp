#pragma once

#include "lieq/report.hpp"
#include "lieq/uea.hpp"

namespace lieq {

/// Small-velocity boost realization inside the heisenberg3 enveloping algebra,
/// with the central Z specialized to 1.
struct TraditionalLimit {
  LieAlgebra algebra;
  std::vector<Element> K;  // m0*c^2*X_i - c*t*P_i
  std::vector<Element> J;  // eps_ijk X_j P_k
  std::vector<Element> P;
  Element H;               // m0*c^2 + (P.P)/(2*m0)

  static TraditionalLimit build();

  /// Commutator with Z set to 1.
  Element bracket(const Element& a, const Element& b) const;
};

/// Checks [K_i,K_j] = 0, [J_i,K_j] = i eps_ijk K_k, [K_i,P_j] = i delta_ij m0 c^2
/// (and i delta_ij m0 at c = 1), [K_i,H] = i P_i at c = 1.
Report traditional_limit_report();

}  // namespace lieq
