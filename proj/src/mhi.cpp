#include "lieq/mhi.hpp"

#include <algorithm>

#include "lieq/casimirs.hpp"
#include "lieq/catalog.hpp"

namespace lieq {

namespace {

struct Labels {
  const char* operator_label;
  const char* eigenvalue;
  const char* physical;
};

Labels labels_for(const std::string& casimir) {
  if (casimir == "C1^G") return {"M", "m", "M"};
  if (casimir == "C2^G") return {"m*W", "m*w", "W"};
  if (casimir == "C4^G") return {"m^2*S^2", "m^2*s(s+1)", "S^2"};
  if (casimir == "C1^PE") return {"M", "m", "M"};
  if (casimir == "C2^PE") return {"M^2", "m0^2", "M"};
  if (casimir == "C4^PE") return {"m0^2*S^2", "m0^2*s(s+1)", "S^2"};
  if (casimir == "C1^U") return {"Q", "e", "Q"};
  throw UnknownName("observable label", casimir);
}

/// P -> 0; H -> m0 in relativistic groups and w otherwise; M -> m.
Element rest_frame(const LieAlgebra& algebra, const Element& e) {
  const bool relativistic = algebra.find("KPx").has_value();
  std::map<std::string, Scalar> values;
  for (const char* p : {"Px", "Py", "Pz"}) {
    if (algebra.find(p)) values[p] = Scalar(0);
  }
  if (algebra.find("H")) values["H"] = Scalar::symbol(relativistic ? "m0" : "w");
  if (algebra.find("M")) values["M"] = Scalar::symbol("m");
  return substitute(algebra, e, Substitution::formal_values(algebra, values));
}

const std::vector<std::string>& known_groups() {
  static const std::vector<std::string> groups = {"galilei_central", "poincare_trivial_ext", "full_relativistic",
                                                  "full_nonrelativistic", "u1"};
  return groups;
}

}  // namespace

std::vector<std::string> GroupDescriptor::physical_observables() const {
  std::vector<std::string> out;
  for (const auto& o : observables) {
    if (std::find(out.begin(), out.end(), o.physical) == out.end()) out.push_back(o.physical);
  }
  return out;
}

Json GroupDescriptor::to_json() const {
  const LieAlgebra alg = catalog(algebra);
  Json j;
  j["group"] = algebra;
  j["actual_valued"] = physical_observables();
  Json list = Json::array();
  for (const auto& o : observables) {
    list.push_back({{"casimir", o.casimir},
                    {"operator", o.operator_label},
                    {"eigenvalue", o.eigenvalue},
                    {"observable", o.physical},
                    {"rest_frame", o.rest_form},
                    {"verified", o.verified},
                    {"terms", o.element.size()}});
  }
  j["casimirs"] = std::move(list);
  return j;
}

GroupDescriptor actual_valued_observables(const std::string& group) {
  if (std::find(known_groups().begin(), known_groups().end(), group) == known_groups().end()) {
    throw UnknownName("group", group);
  }
  const LieAlgebra algebra = catalog(group);
  GroupDescriptor d{group, {}};
  for (const auto& c : casimir_catalog(group)) {
    Labels l = labels_for(c.label);
    Observable o{c.label, c.element, l.operator_label, l.eigenvalue, l.physical, {}, false};
    o.rest_form = to_string(algebra, rest_frame(algebra, c.element));
    o.verified = is_casimir(algebra, c.element).is_casimir;
    d.observables.push_back(std::move(o));
  }
  return d;
}

Json NParticleLabels::to_json() const {
  Json list = Json::array();
  for (const auto& o : observables) list.push_back({{"name", o.name}, {"expression", o.expression}, {"value", o.value}});
  return {{"n", n},
          {"mass", mass.to_string()},
          {"particle_number", particle_number},
          {"observables", std::move(list)},
          {"note", note}};
}

NParticleLabels n_particle_labels(long n) {
  if (n < 1) throw Error("particle number must be at least 1, got " + std::to_string(n));
  NParticleLabels l;
  l.n = n;
  l.mass = Scalar(n) * Scalar::symbol("m0");
  l.particle_number = n;
  l.observables = {
      {"Mass", l.mass_root.to_string() + "*N", l.mass.to_string()},
      {"Spin", l.spin_root.to_string(), "m0*(s(s+1))^(1/2)"},
      {"Charge", "Q", "e"},
      {"ParticleNumber", "N", std::to_string(n)},
  };
  l.note = "Charge is listed as Q, not Q*N, while Mass carries the factor N";
  return l;
}

Report mhi_report(const std::vector<long>& ns) {
  Report report("actual-valued observables");
  for (const auto& group : known_groups()) {
    report.run("descriptor " + group, [&] {
      GroupDescriptor d = actual_valued_observables(group);
      bool ok = std::all_of(d.observables.begin(), d.observables.end(), [](const Observable& o) { return o.verified; });
      std::string tags;
      for (const auto& t : d.physical_observables()) tags += (tags.empty() ? "" : ", ") + t;
      Check c = verdict(ok, "{" + tags + "}");
      c.data = d.to_json();
      return c;
    });
  }
  for (long n : ns) {
    report.run("n-particle labels n=" + std::to_string(n), [&] {
      NParticleLabels l = n_particle_labels(n);
      bool ok = l.particle_number == n && l.mass == Scalar(n) * Scalar::symbol("m0");
      Check c = verdict(ok, "mass " + l.mass.to_string() + ", particle number " + std::to_string(l.particle_number));
      c.data = l.to_json();
      return c;
    });
  }
  if (ns.size() >= 2) {
    report.run("particle number additivity", [&] {
      for (long a : ns) {
        for (long b : ns) {
          if (n_particle_labels(a).particle_number + n_particle_labels(b).particle_number !=
              n_particle_labels(a + b).particle_number) {
            return fail("N(" + std::to_string(a) + ") + N(" + std::to_string(b) + ") differs");
          }
        }
      }
      return pass("N(a) + N(b) = N(a + b) over all listed pairs");
    });
  }
  report.run("charge label", [] {
    Check c = pass(n_particle_labels(1).note);
    c.status = Status::Warn;
    return c;
  });
  return report;
}

}  // namespace lieq
