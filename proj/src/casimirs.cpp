#include "lieq/casimirs.hpp"

#include <array>

#include "lieq/catalog.hpp"
#include "lieq/expression.hpp"

namespace lieq {

namespace transcription {

namespace {
constexpr std::array<const char*, 3> kAxes = {"x", "y", "z"};
}

std::string dot(const std::string& a, const std::string& b) {
  std::string out = "(";
  for (int i = 0; i < 3; ++i) {
    if (i > 0) out += " + ";
    out += a + kAxes[i] + "*" + b + kAxes[i];
  }
  return out + ")";
}

std::string levi_contract(const std::string& c, const std::string& a, const std::string& b) {
  std::string out = "(";
  bool first = true;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        int e = levi_civita(i, j, k);
        if (e == 0) continue;
        if (!first || e < 0) out += e < 0 ? (first ? "-" : " - ") : " + ";
        first = false;
        out += c + kAxes[k] + "*" + a + kAxes[i] + "*" + b + kAxes[j];
      }
    }
  }
  return out + ")";
}

std::string lagrange(const std::string& p, const std::string& k) {
  std::string out = "(";
  bool first = true;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;  // the a == b summands cancel
      std::string pa = p + kAxes[a];
      std::string pb = p + kAxes[b];
      std::string ka = k + kAxes[a];
      std::string kb = k + kAxes[b];
      if (!first) out += " + ";
      first = false;
      out += pa + "*" + kb + "*" + pa + "*" + kb + " - " + pa + "*" + kb + "*" + pb + "*" + ka;
    }
  }
  return out + ")";
}

}  // namespace transcription

namespace {

using transcription::dot;
using transcription::lagrange;
using transcription::levi_contract;

RepairAttempt attempt(const LieAlgebra& algebra, Ordering ordering, const Element& candidate) {
  CasimirCheck check = is_casimir(algebra, candidate);
  RepairAttempt a{ordering, check.is_casimir, {}, {}};
  if (!check.is_casimir) {
    a.witness = algebra.generator_name(*check.witness);
    a.residue = to_string(algebra, check.residue);
  }
  return a;
}

std::vector<CatalogCasimir> galilei_central_casimirs(const LieAlgebra& g) {
  std::vector<CatalogCasimir> out;
  out.push_back(resolve_casimir(g, "C1^G", "M"));
  out.push_back(resolve_casimir(g, "C2^G", "M*H - " + dot("P", "P") + "/2"));
  out.push_back(resolve_casimir(
      g, "C4^G",
      "M^2*" + dot("J", "J") + " + " + dot("P", "P") + "*" + dot("KG", "KG") + " - " + dot("P", "KG") +
          "^2 - 2*M*" + levi_contract("J", "P", "KG"),
      "M^2*" + dot("J", "J") + " + " + lagrange("P", "KG") + " + 2*M*" + levi_contract("J", "P", "KG")));
  return out;
}

std::vector<CatalogCasimir> poincare_casimirs(const LieAlgebra& p) {
  std::vector<CatalogCasimir> out;
  out.push_back(resolve_casimir(p, "C2^P", "H^2 - " + dot("P", "P")));
  out.push_back(resolve_casimir(
      p, "C4^P",
      "H^2*" + dot("J", "J") + " + " + dot("P", "P") + "*" + dot("KP", "KP") + " - " + dot("J", "P") + "^2 - " +
          dot("P", "KP") + "^2 - 2*H*" + levi_contract("J", "P", "KP"),
      "H^2*" + dot("J", "J") + " + " + lagrange("P", "KP") + " - " + dot("J", "P") + "^2 + 2*H*" +
          levi_contract("J", "P", "KP")));
  return out;
}

std::vector<CatalogCasimir> extended_poincare_hbar_casimirs(const LieAlgebra& pe) {
  std::vector<CatalogCasimir> out;
  out.push_back(resolve_casimir(pe, "C1^PE", "M"));
  out.push_back(resolve_casimir(pe, "C2^PE", "-" + dot("P", "P") + " + Hb^2 + M^2 + 2*Hb*M"));
  out.push_back(resolve_casimir(
      pe, "C4^PE",
      "(Hb + M)^2*" + dot("J", "J") + " - " + dot("J", "P") + "^2 + " + dot("P", "P") + "*" + dot("KP", "KP") +
          " - " + dot("P", "KP") + "^2 - 2*(Hb + M)*" + levi_contract("J", "P", "KP"),
      "(Hb + M)^2*" + dot("J", "J") + " - " + dot("J", "P") + "^2 + " + lagrange("P", "KP") + " + 2*(Hb + M)*" +
          levi_contract("J", "P", "KP")));
  return out;
}

std::vector<CatalogCasimir> u1_casimirs(const LieAlgebra& u) { return {resolve_casimir(u, "C1^U", "Q")}; }

/// Re-expresses entries in another algebra via `move` and re-verifies them there.
template <typename Move>
std::vector<CatalogCasimir> transport(const std::vector<CatalogCasimir>& entries, const LieAlgebra& source,
                                      const LieAlgebra& target, Move move) {
  std::vector<CatalogCasimir> out;
  for (const auto& entry : entries) {
    CatalogCasimir moved = entry;
    moved.element = move(entry.element);
    moved.verified = is_casimir(target, moved.element).is_casimir;
    if (moved.source.empty()) moved.source = source.name();
    out.push_back(std::move(moved));
  }
  return out;
}

std::vector<CatalogCasimir> extended_poincare_h_casimirs(const LieAlgebra& ext) {
  LieAlgebra hbar = catalog("poincare_trivial_ext_hbar");
  BasisChange change = hbar_basis_change(ext);
  // Hb-basis letters expand as rows of the change matrix over the H basis.
  return transport(extended_poincare_hbar_casimirs(hbar), hbar, ext,
                   [&](const Element& e) { return linear_substitute(e, change.matrix, ext); });
}

std::vector<CatalogCasimir> by_name(const std::vector<CatalogCasimir>& entries, const LieAlgebra& source,
                                    const LieAlgebra& target) {
  return transport(entries, source, target, [&](const Element& e) { return transfer(e, source, target); });
}

}  // namespace

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Verbatim: return "verbatim";
    case Ordering::Symmetrized: return "symmetrized";
    case Ordering::Corrected: return "corrected";
  }
  return "?";
}

CatalogCasimir resolve_casimir(const LieAlgebra& algebra, std::string label, std::string verbatim,
                               std::string corrected) {
  CatalogCasimir entry;
  entry.label = std::move(label);
  entry.verbatim = std::move(verbatim);
  entry.corrected = std::move(corrected);

  Element printed = parse_expression(algebra, entry.verbatim);
  std::vector<std::pair<Ordering, Element>> ladder = {{Ordering::Verbatim, printed}};
  // A single-letter or commuting word is its own Weyl ordering; skip the rung when nothing changes.
  Element weyl = symmetrize(printed);
  if (!(normal_form(algebra, weyl) == normal_form(algebra, printed))) ladder.emplace_back(Ordering::Symmetrized, weyl);
  if (!entry.corrected.empty()) ladder.emplace_back(Ordering::Corrected, parse_expression(algebra, entry.corrected));

  for (const auto& [ordering, candidate] : ladder) {
    entry.attempts.push_back(attempt(algebra, ordering, candidate));
    entry.ordering = ordering;
    entry.element = normal_form(algebra, candidate);
    if (entry.attempts.back().passed) break;
  }
  entry.verified = entry.attempts.back().passed;
  return entry;
}

std::vector<CatalogCasimir> casimir_catalog(const std::string& algebra_name) {
  if (algebra_name == "galilei_central") return galilei_central_casimirs(catalog(algebra_name));
  if (algebra_name == "poincare") return poincare_casimirs(catalog(algebra_name));
  if (algebra_name == "poincare_trivial_ext_hbar") return extended_poincare_hbar_casimirs(catalog(algebra_name));
  if (algebra_name == "poincare_trivial_ext") return extended_poincare_h_casimirs(catalog(algebra_name));
  if (algebra_name == "u1") return u1_casimirs(catalog(algebra_name));
  if (algebra_name == "full_relativistic" || algebra_name == "full_nonrelativistic") {
    LieAlgebra full = catalog(algebra_name);
    std::string spacetime = algebra_name == "full_relativistic" ? "poincare_trivial_ext" : "galilei_central";
    auto out = by_name(casimir_catalog(spacetime), catalog(spacetime), full);
    auto charge = by_name(casimir_catalog("u1"), catalog("u1"), full);
    out.insert(out.end(), charge.begin(), charge.end());
    return out;
  }
  throw UnknownName("Casimir catalog", algebra_name);
}

CatalogCasimir contracted_quartic_casimir(const LieAlgebra& contracted) {
  return resolve_casimir(
      contracted, "C4^PE contracted",
      "M^2*" + dot("J", "J") + " + " + dot("P", "P") + "*" + dot("KP", "KP") + " - " + dot("P", "KP") +
          "^2 - 2*M*" + levi_contract("J", "P", "KP"),
      "M^2*" + dot("J", "J") + " + " + lagrange("P", "KP") + " + 2*M*" + levi_contract("J", "P", "KP"));
}

const CatalogCasimir& find_casimir(const std::vector<CatalogCasimir>& entries, const std::string& label) {
  for (const auto& e : entries) {
    if (e.label == label) return e;
  }
  throw UnknownName("Casimir label", label);
}

}  // namespace lieq
