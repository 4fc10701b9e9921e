#pragma once

#include <string>
#include <vector>

#include "lieq/report.hpp"
#include "lieq/uea.hpp"

namespace lieq {

/// A Casimir together with the labels it carries in an irreducible representation.
struct Observable {
  std::string casimir;     // catalog label, e.g. "C2^G"
  Element element;         // operator over the group's algebra
  std::string operator_label;  // e.g. "m*W"; W itself is only the formal quotient C2^G/m
  std::string eigenvalue;  // e.g. "m*w"
  std::string physical;    // actual-valued observable it names: M, W, S^2 or Q
  std::string rest_form;   // printed rest-frame specialization
  bool verified = false;   // is_casimir on the group's algebra
};

struct GroupDescriptor {
  std::string algebra;
  std::vector<Observable> observables;

  /// Distinct physical tags in listing order.
  std::vector<std::string> physical_observables() const;
  Json to_json() const;
};

/// Known groups: galilei_central, poincare_trivial_ext, full_relativistic,
/// full_nonrelativistic, u1. Throws UnknownName otherwise.
GroupDescriptor actual_valued_observables(const std::string& group);

/// Square root of a Casimir kept as a name; never expanded.
struct RootOf {
  std::string casimir;
  std::string to_string() const { return "(" + casimir + ")^(1/2)"; }
};

struct NParticleObservable {
  std::string name;        // Mass, Spin, Charge, ParticleNumber
  std::string expression;  // e.g. "(C2^PE)^(1/2)*N"
  std::string value;       // evaluated label on |n>
};

struct NParticleLabels {
  long n = 1;
  RootOf mass_root{"C2^PE"};
  RootOf spin_root{"C4^PE"};
  Scalar mass;           // n*m0
  long particle_number;  // n
  std::vector<NParticleObservable> observables;
  std::string note;      // charge carries no factor N

  Json to_json() const;
};

/// Labels of a non-interacting n-particle state; throws for n < 1.
NParticleLabels n_particle_labels(long n);

/// Descriptors for every known group plus n-particle labels for `ns`.
Report mhi_report(const std::vector<long>& ns = {1, 2, 3});

}  // namespace lieq
