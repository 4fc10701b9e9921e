#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieq/basis_change.hpp"
#include "lieq/lie_algebra.hpp"

namespace lieq {

/// Names accepted by catalog(), in listing order.
const std::vector<std::string>& catalog_names();

/// Kinematical and internal algebras used throughout the project.
///
/// Generator names flatten sub/superscripts: K_x^(G) is `KGx`, K_x^(P) is
/// `KPx`, H-bar is `Hb`. The listed generator order is also the PBW order.
///
///   galilei                    Gtau, Gthx..z, Gux..z, Grx..z
///   galilei_central            H, Jx..z, KGx..z, Px..z, M
///   poincare                   H, Jx..z, KPx..z, Px..z
///   poincare_trivial_ext       poincare + central M
///   poincare_trivial_ext_hbar  same algebra in the basis Hb = H - M
///   u1                         Q
///   heisenberg3                Xx..z, Px..z, Z   with [Xi,Pj] = i delta_ij Z
///   full_relativistic          poincare_trivial_ext x u1
///   full_nonrelativistic       galilei_central x u1
LieAlgebra catalog(const std::string& name);

/// The H -> Hb = H - M change of basis on poincare_trivial_ext.
BasisChange hbar_basis_change(const LieAlgebra& with_h_and_m);

/// Rescaling exponents of the speed-space contraction (P, K by eps; M by eps^2).
std::map<std::string, int> standard_rescaling(const LieAlgebra& algebra);

/// Identifies the contracted Poincare generators with the Galilei ones.
std::map<std::string, std::string> standard_renaming(const LieAlgebra& contracted);

/// Levi-Civita symbol on {0,1,2} with eps(0,1,2) = +1.
int levi_civita(int i, int j, int k);

}  // namespace lieq
