#include "lieq/contraction.hpp"

#include <algorithm>
#include <set>

#include "lieq/catalog.hpp"

namespace lieq {

namespace {

constexpr int kPowerWindow = 10;
const std::string kEps = "eps";

std::string describe_poles(const std::vector<Pole>& poles) {
  std::string out = "divergent contraction:";
  for (const auto& p : poles) {
    out += " [" + p.a + "," + p.b + "] -> " + p.result + " ~ eps^-" + std::to_string(p.order) + ";";
  }
  out.pop_back();
  return out;
}

std::vector<std::string> with_eps(std::vector<std::string> symbols) {
  if (std::find(symbols.begin(), symbols.end(), kEps) == symbols.end()) {
    symbols.push_back(kEps);
    std::sort(symbols.begin(), symbols.end());
  }
  return symbols;
}

int lowest_eps_power(const Element& e) {
  int lowest = 0;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    int k = c.min_exponent(kEps).value_or(0);
    lowest = first ? k : std::min(lowest, k);
    first = false;
  }
  return lowest;
}

Element rest_frame(const LieAlgebra& algebra, const Element& e) {
  std::map<std::string, Scalar> values;
  for (const auto& g : algebra.generators()) {
    if (g.size() == 2 && g[0] == 'P') values[g] = Scalar(0);
  }
  values[algebra.find("Hb") ? "Hb" : "H"] = Scalar::symbol("w");
  values["M"] = Scalar::symbol("m");
  Element at_rest = substitute(algebra, e, Substitution::formal_values(algebra, values));
  return substitute_symbols(at_rest, {{"m", Scalar::symbol("m0")}, {"w", Scalar::symbol("m0")}});
}

}  // namespace

DivergentContraction::DivergentContraction(std::vector<Pole> poles)
    : Error(describe_poles(poles)), poles_(std::move(poles)) {}

std::vector<int> exponents(const LieAlgebra& algebra, const RescalingMap& map) {
  for (const auto& [name, k] : map) algebra.index_of(name);
  std::vector<int> out;
  out.reserve(algebra.dimension());
  for (const auto& g : algebra.generators()) {
    auto it = map.find(g);
    if (it == map.end()) throw Error("rescaling map has no exponent for generator " + g);
    out.push_back(it->second);
  }
  return out;
}

LieAlgebra rescale_algebra(const LieAlgebra& algebra, const RescalingMap& map, std::string name) {
  const std::vector<int> k = exponents(algebra, map);
  std::vector<BracketEntry> entries;
  for (const auto& [ab, result] : algebra.table()) {
    const auto [a, b] = ab;
    Combination scaled;
    for (const auto& [d, c] : result.terms()) scaled.add(d, Scalar::symbol(kEps, k[a] + k[b] - k[d]) * c);
    entries.push_back({a, b, scaled});
  }
  if (name.empty()) name = algebra.name() + "_rescaled";
  LieAlgebra out(std::move(name), algebra.generators(), with_eps(algebra.symbols()), entries);
  ValidationReport report = validate(out);
  if (!report.ok()) throw JacobiFailure("rescaled algebra fails validation", report);
  return out;
}

LieAlgebra contract(const LieAlgebra& algebra, const RescalingMap& map, std::string name) {
  const LieAlgebra rescaled = rescale_algebra(algebra, map);
  std::vector<BracketEntry> entries;
  std::vector<Pole> poles;
  for (const auto& [ab, result] : rescaled.table()) {
    const auto [a, b] = ab;
    Combination limit;
    for (const auto& [d, c] : result.terms()) {
      int lowest = c.min_exponent(kEps).value_or(0);
      if (lowest < 0) {
        poles.push_back({algebra.generator_name(a), algebra.generator_name(b), algebra.generator_name(d), -lowest});
      } else {
        limit.add(d, c.coefficient(kEps, 0));
      }
    }
    entries.push_back({a, b, limit});
  }
  if (!poles.empty()) throw DivergentContraction(std::move(poles));
  if (name.empty()) name = algebra.name() + "_contracted";
  LieAlgebra out(std::move(name), algebra.generators(), rescaled.symbols(), entries);
  ValidationReport report = validate(out);
  if (!report.ok()) throw JacobiFailure("contracted algebra fails validation", report);
  return out;
}

TableComparison tables_equal(const LieAlgebra& a, const LieAlgebra& b, const Renaming& renaming) {
  TableComparison cmp;
  if (a.dimension() != b.dimension()) {
    cmp.equal = false;
    cmp.diff.push_back("dimension " + std::to_string(a.dimension()) + " vs " + std::to_string(b.dimension()));
    return cmp;
  }
  std::vector<std::size_t> image(a.dimension());
  std::set<std::size_t> hit;
  for (std::size_t g = 0; g < a.dimension(); ++g) {
    const std::string& name = a.generator_name(g);
    auto it = renaming.find(name);
    const std::string& target = it == renaming.end() ? name : it->second;
    auto idx = b.find(target);
    if (!idx) {
      cmp.equal = false;
      cmp.diff.push_back("generator " + target + " (" + a.name() + ") has no counterpart in " + b.name());
      continue;
    }
    image[g] = *idx;
    if (!hit.insert(image[g]).second) throw Error("renaming is not injective at " + name);
  }
  for (const auto& [name, target] : renaming) a.index_of(name);
  if (!cmp.equal) return cmp;

  auto moved = [&](const Combination& c) {
    Combination out;
    for (const auto& [d, coeff] : c.terms()) out.add(image[d], coeff);
    return out;
  };
  for (std::size_t x = 0; x < a.dimension(); ++x) {
    for (std::size_t y = x + 1; y < a.dimension(); ++y) {
      Combination lhs = moved(a.bracket(x, y));
      Combination rhs = b.bracket(image[x], image[y]);
      if (lhs == rhs) continue;
      cmp.equal = false;
      cmp.diff.push_back("[" + b.generator_name(image[x]) + "," + b.generator_name(image[y]) + "]: " +
                         to_string(b, lhs) + " (" + a.name() + ") vs " + to_string(b, rhs) + " (" + b.name() + ")");
    }
  }
  return cmp;
}

Element rescale_element(const LieAlgebra& algebra, const Element& e, const RescalingMap& map) {
  const std::vector<int> k = exponents(algebra, map);
  Element out;
  for (const auto& [w, c] : e.terms()) {
    int total = 0;
    for (std::size_t g : w) total -= k.at(g);
    out.add(w, Scalar::symbol(kEps, total) * c);
  }
  return out;
}

ContractedElement contract_casimir(const LieAlgebra& algebra, const Element& e, const RescalingMap& map,
                                   std::optional<int> power) {
  Element rescaled = rescale_element(algebra, normal_form(algebra, e), map);
  if (rescaled.is_zero()) throw Error("cannot contract the zero element");
  const int lowest = lowest_eps_power(rescaled);
  ContractedElement out;
  if (power) {
    out.power = *power;
    if (out.power + lowest < 0) throw DivergentLimit(-(out.power + lowest));
  } else {
    out.power = -lowest;
    if (out.power < -kPowerWindow || out.power > kPowerWindow) {
      throw Error("compensating power " + std::to_string(out.power) + " outside [-10, 10]");
    }
  }
  for (const auto& [w, c] : rescaled.terms()) out.element.add(w, c.coefficient(kEps, -out.power));
  out.zero_limit = out.element.is_zero();
  return out;
}

ContractionPipeline contraction_pipeline(const LieAlgebra& source, std::optional<RescalingMap> map) {
  const bool needs_hbar = source.find("H") && source.find("M") && !source.find("Hb");
  LieAlgebra hbar = needs_hbar ? change_basis(source, hbar_basis_change(source), source.name() + "_hbar") : source;
  RescalingMap m = map ? *map : standard_rescaling(hbar);
  LieAlgebra rescaled = rescale_algebra(hbar, m);
  LieAlgebra contracted = contract(hbar, m);
  return {source, std::move(hbar), std::move(rescaled), std::move(contracted), std::move(m)};
}

std::vector<ContractedCasimir> contract_casimirs(const ContractionPipeline& pipeline,
                                                 const std::vector<CatalogCasimir>& casimirs) {
  std::vector<ContractedCasimir> out;
  for (const auto& c : casimirs) {
    ContractedCasimir entry{c.label, contract_casimir(pipeline.hbar, c.element, pipeline.map), false};
    entry.is_casimir = is_casimir(pipeline.contracted, entry.result.element).is_casimir;
    out.push_back(std::move(entry));
  }
  return out;
}

Report conceptual_limit_check() {
  Report report("conceptual limit");
  const LieAlgebra galilei = catalog("galilei_central");
  const auto pipeline = contraction_pipeline(catalog("poincare_trivial_ext_hbar"));
  const LieAlgebra& contracted = pipeline.contracted;
  const auto hats = contract_casimirs(pipeline, casimir_catalog("poincare_trivial_ext_hbar"));
  const auto galilean = casimir_catalog("galilei_central");
  auto hat = [&](const std::string& label) -> const Element& {
    for (const auto& h : hats) {
      if (h.label == label) return h.result.element;
    }
    throw UnknownName("Casimir label", label);
  };
  const Renaming to_galilei = standard_renaming(contracted);
  auto compare = [](const LieAlgebra& algebra, const Element& lhs, const Element& rhs, std::string detail) {
    Element diff = normal_form(algebra, lhs - rhs);
    return verdict(diff.is_zero(), std::move(detail), to_string(algebra, diff));
  };

  report.run("C1^PE contracted = M'", [&] {
    return compare(contracted, hat("C1^PE"), Element::generator(contracted.index_of("M")),
                   "C1^PE contracted = " + to_string(contracted, hat("C1^PE")));
  });
  report.run("C2^PE contracted = (C1^PE contracted)^2", [&] {
    Check c = compare(contracted, hat("C2^PE"), product(contracted, hat("C1^PE"), hat("C1^PE")),
                      "operator identity in the contracted algebra");
    if (c.status != Status::Pass) return c;
    Element lhs = rest_frame(contracted, hat("C2^PE"));
    Element rhs = rest_frame(contracted, product(contracted, hat("C1^PE"), hat("C1^PE")));
    Check rest = compare(contracted, lhs, rhs, "rest frame (m = w = m0): both equal " + to_string(contracted, lhs));
    return rest;
  });
  report.run("C2^G = (C1^G)^2 at rest with m = w = m0", [&] {
    const Element& c1 = find_casimir(galilean, "C1^G").element;
    Element lhs = rest_frame(galilei, find_casimir(galilean, "C2^G").element);
    Element rhs = rest_frame(galilei, product(galilei, c1, c1));
    return compare(galilei, lhs, rhs, "both equal " + to_string(galilei, lhs));
  });
  report.run("C4^PE contracted = C4^G under renaming", [&] {
    Element moved = transfer(hat("C4^PE"), contracted, galilei, to_galilei);
    const Element& c4 = find_casimir(galilean, "C4^G").element;
    Check c = compare(galilei, moved, c4, "operator identity after Hb' -> H, KP' -> KG");
    if (c.status != Status::Pass) return c;
    Element at_rest = rest_frame(galilei, c4);
    c.detail += "; rest frame value " + to_string(galilei, at_rest);
    return c;
  });
  return report;
}

}  // namespace lieq
