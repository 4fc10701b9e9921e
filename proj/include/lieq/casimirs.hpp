#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieq/uea.hpp"

namespace lieq {

/// Which transcription of a printed Casimir ended up in the catalog.
enum class Ordering {
  Verbatim,     // printed operator order, printed signs
  Symmetrized,  // Weyl ordering of the printed expression
  Corrected,    // explicit corrected transcription (see CatalogCasimir::corrected)
};

std::string to_string(Ordering o);

struct RepairAttempt {
  Ordering ordering;
  bool passed = false;
  std::string witness;  // offending generator, empty on pass
  std::string residue;  // printed commutator residue, empty on pass
};

struct CatalogCasimir {
  std::string label;      // e.g. "C4^G"
  std::string verbatim;   // printed expression, repeated indices expanded
  std::string corrected;  // empty when no correction is on file
  Element element;        // normal form of the selected transcription
  Ordering ordering = Ordering::Verbatim;
  std::vector<RepairAttempt> attempts;
  bool verified = false;  // is_casimir on the catalog algebra
  std::string source;     // algebra the transcription was made in, when transported
};

/// Runs the repair ladder: verbatim, then Weyl-symmetrized, then the corrected
/// transcription; the first candidate that is a Casimir is kept.
CatalogCasimir resolve_casimir(const LieAlgebra& algebra, std::string label, std::string verbatim,
                               std::string corrected = {});

/// Casimir operators of a catalog algebra, in the printed operator ordering
/// when that survives is_casimir. Known names: galilei_central, poincare,
/// poincare_trivial_ext, poincare_trivial_ext_hbar, u1, full_relativistic,
/// full_nonrelativistic.
std::vector<CatalogCasimir> casimir_catalog(const std::string& algebra_name);

/// The contracted quartic Casimir of the extended Poincare algebra, transcribed
/// over an algebra with generators Jx.., KPx.., Px.., M and run through the ladder.
CatalogCasimir contracted_quartic_casimir(const LieAlgebra& contracted);

/// Finds an entry by label; throws UnknownName.
const CatalogCasimir& find_casimir(const std::vector<CatalogCasimir>& entries, const std::string& label);

/// Text builders that expand repeated-index sums into explicit component sums.
namespace transcription {

/// (Ax*Bx + Ay*By + Az*Bz)
std::string dot(const std::string& a, const std::string& b);
/// (sum over ijk of eps_ijk C_k A_i B_j), written with C first: C^k eps_ijk A^i B^j.
std::string levi_contract(const std::string& c, const std::string& a, const std::string& b);
/// (sum over ab of Pa*Kb*Pa*Kb - Pa*Kb*Pb*Ka), the operator (P x K).(P x K).
std::string lagrange(const std::string& p, const std::string& k);

}  // namespace transcription

}  // namespace lieq
