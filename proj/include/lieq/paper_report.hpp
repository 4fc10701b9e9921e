#pragma once

#include <map>
#include <string>

#include "lieq/report.hpp"
#include "lieq/lie_algebra.hpp"

namespace lieq {

struct PaperReportOptions {
  /// Replaces catalog entries of the same name (fault injection).
  std::map<std::string, LieAlgebra> overrides;
};

/// The full reproduction run, in order: catalog validation, Casimir checks,
/// H -> Hb basis change, contraction, Casimir contraction, conceptual limit,
/// traditional limit, full-group contraction, observables, n-particle labels.
/// Failures are report entries; nothing throws.
Report paper_report(const PaperReportOptions& options = {});

}  // namespace lieq
