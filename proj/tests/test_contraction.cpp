#include <gtest/gtest.h>

#include "lieq/casimirs.hpp"
#include "lieq/catalog.hpp"
#include "lieq/contraction.hpp"
#include "lieq/expression.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

const char* kAx[] = {"x", "y", "z"};

std::string at(const char* stem, int i) { return std::string(stem) + kAx[i]; }

Element N(const LieAlgebra& a, const std::string& text) { return normal_form(a, parse_expression(a, text)); }

Renaming natural_poincare_to_galilei() {
  return {{"H", "Gtau"}, {"Jx", "Gthx"}, {"Jy", "Gthy"}, {"Jz", "Gthz"}, {"KPx", "Gux"},
          {"KPy", "Guy"}, {"KPz", "Guz"}, {"Px", "Grx"}, {"Py", "Gry"}, {"Pz", "Grz"}};
}

RescalingMap zero_map(const LieAlgebra& a) {
  RescalingMap m;
  for (const auto& g : a.generators()) m[g] = 0;
  return m;
}

}  // namespace

TEST(Rescale, SpeedSpaceBrackets) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  LieAlgebra r = rescale_algebra(hb, standard_rescaling(hb));
  const Scalar eps2 = Scalar::symbol("eps", 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Combination kk;
      for (int k = 0; k < 3; ++k) {
        if (int e = oracle::parity(i, j, k)) kk.add(r.index_of(at("J", k)), Scalar(-e) * Scalar::i() * eps2);
      }
      EXPECT_EQ(bracket(r, at("KP", i), at("KP", j)), kk);
      Combination kp;
      if (i == j) {
        kp.add(r.index_of("Hb"), Scalar::i() * eps2);
        kp.add(r.index_of("M"), Scalar::i());
      }
      EXPECT_EQ(bracket(r, at("KP", i), at("P", j)), kp);
    }
  }
  EXPECT_TRUE(validate(r).ok());
}

TEST(Rescale, ZeroMapIsIdentity) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  EXPECT_EQ(rescale_algebra(hb, zero_map(hb)).table(), hb.table());
  EXPECT_EQ(contract(hb, zero_map(hb)).table(), hb.table());
}

TEST(Rescale, MapMustBeTotal) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  RescalingMap m = standard_rescaling(hb);
  m.erase("Jx");
  EXPECT_THROW(rescale_algebra(hb, m), Error);
  m = standard_rescaling(hb);
  m["Bogus"] = 1;
  EXPECT_THROW(rescale_algebra(hb, m), UnknownName);
}

TEST(Rescale, ExponentAdditivity) {
  LieAlgebra gc = catalog("galilei_central");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> k(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    RescalingMap a, b, sum;
    for (const auto& g : gc.generators()) {
      a[g] = k(rng);
      b[g] = k(rng);
      sum[g] = a[g] + b[g];
    }
    EXPECT_EQ(rescale_algebra(rescale_algebra(gc, a), b).table(), rescale_algebra(gc, sum).table());
  }
}

TEST(Contract, ExtendedPoincareGivesCentralGalilei) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  LieAlgebra c = contract(hb, standard_rescaling(hb));
  EXPECT_TRUE(validate(c).ok());
  TableComparison cmp = tables_equal(c, catalog("galilei_central"), standard_renaming(c));
  EXPECT_TRUE(cmp.equal);
  EXPECT_TRUE(cmp.diff.empty());
}

TEST(Contract, PlainPoincareGivesGalilei) {
  LieAlgebra p = catalog("poincare");
  RescalingMap m = standard_rescaling(p);
  LieAlgebra c = contract(p, m);
  // Scaling K and P by eps sends [K,P] = iH to i eps^2 H and [K,K] to eps^2; both vanish.
  EXPECT_TRUE(bracket(c, "KPx", "Px").is_zero());
  EXPECT_TRUE(bracket(c, "KPx", "KPy").is_zero());
  EXPECT_EQ(bracket(c, "KPx", "H"), bracket(p, "KPx", "H"));
  EXPECT_TRUE(tables_equal(c, catalog("galilei"), natural_poincare_to_galilei()).equal);
}

TEST(Contract, DivergentMapReportsPoles) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  RescalingMap m = standard_rescaling(hb);
  m["M"] = 3;  // [KP,P] -> eps^-1 M
  try {
    contract(hb, m);
    FAIL() << "expected DivergentContraction";
  } catch (const DivergentContraction& e) {
    ASSERT_EQ(e.poles().size(), 3u);
    EXPECT_EQ(e.poles()[0].result, "M");
    EXPECT_EQ(e.poles()[0].order, 1);
    EXPECT_NE(std::string(e.what()).find("[KPx,Px]"), std::string::npos);
  }
}

TEST(TablesEqual, Cases) {
  LieAlgebra gc = catalog("galilei_central");
  EXPECT_TRUE(tables_equal(gc, gc, {}).equal);
  TableComparison cmp = tables_equal(catalog("poincare"), catalog("galilei"), natural_poincare_to_galilei());
  EXPECT_FALSE(cmp.equal);
  bool boosts = false;
  for (const auto& d : cmp.diff) boosts = boosts || d.rfind("[Gux,Guy]", 0) == 0;
  EXPECT_TRUE(boosts);
  EXPECT_FALSE(tables_equal(gc, catalog("poincare"), {}).equal);
  EXPECT_THROW(tables_equal(gc, gc, {{"Px", "Py"}}), Error);
}

TEST(RescaleElement, Examples) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  RescalingMap m = standard_rescaling(hb);
  LieAlgebra r = rescale_algebra(hb, m);
  auto cas = casimir_catalog("poincare_trivial_ext_hbar");
  EXPECT_EQ(rescale_element(hb, find_casimir(cas, "C1^PE").element, m), N(r, "eps^-2*M"));
  EXPECT_EQ(rescale_element(hb, find_casimir(cas, "C2^PE").element, m),
            N(r, "-eps^-2*(Px*Px + Py*Py + Pz*Pz) + Hb^2 + eps^-4*M^2 + 2*eps^-2*Hb*M"));
  Element plain = N(hb, "Hb*Jx + 3");
  EXPECT_EQ(rescale_element(hb, plain, zero_map(hb)), plain);
}

TEST(ContractCasimir, Powers) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  RescalingMap m = standard_rescaling(hb);
  auto cas = casimir_catalog("poincare_trivial_ext_hbar");
  ContractedElement c1 = contract_casimir(hb, find_casimir(cas, "C1^PE").element, m, 2);
  EXPECT_EQ(c1.element, Element::generator(hb.index_of("M")));
  ContractedElement c2 = contract_casimir(hb, find_casimir(cas, "C2^PE").element, m, 4);
  EXPECT_EQ(c2.element, N(hb, "M^2"));
  try {
    contract_casimir(hb, find_casimir(cas, "C2^PE").element, m, 2);
    FAIL() << "expected DivergentLimit";
  } catch (const DivergentLimit& e) {
    EXPECT_EQ(e.residual_order(), 2);
  }
  ContractedElement zero = contract_casimir(hb, find_casimir(cas, "C1^PE").element, m, 3);
  EXPECT_TRUE(zero.zero_limit);
  EXPECT_TRUE(zero.element.is_zero());
}

TEST(ContractCasimir, AutoPowerIsMinimal) {
  LieAlgebra hb = catalog("poincare_trivial_ext_hbar");
  RescalingMap m = standard_rescaling(hb);
  const std::map<std::string, int> expected = {{"C1^PE", 2}, {"C2^PE", 4}, {"C4^PE", 4}};
  LieAlgebra c = contract(hb, m);
  for (const auto& cas : casimir_catalog("poincare_trivial_ext_hbar")) {
    ContractedElement hat = contract_casimir(hb, cas.element, m);
    EXPECT_EQ(hat.power, expected.at(cas.label));
    EXPECT_FALSE(hat.element.is_zero());
    EXPECT_THROW(contract_casimir(hb, cas.element, m, hat.power - 1), DivergentLimit);
    EXPECT_TRUE(is_casimir(c, hat.element).is_casimir) << cas.label;
  }
}

TEST(ContractCasimir, QuarticMatchesGalilean) {
  auto p = contraction_pipeline(catalog("poincare_trivial_ext"));
  auto hats = contract_casimirs(p, casimir_catalog("poincare_trivial_ext_hbar"));
  ASSERT_EQ(hats.size(), 3u);
  LieAlgebra gc = catalog("galilei_central");
  Element moved = transfer(hats[2].result.element, p.contracted, gc, standard_renaming(p.contracted));
  EXPECT_EQ(moved, find_casimir(casimir_catalog("galilei_central"), "C4^G").element);
  CatalogCasimir printed = contracted_quartic_casimir(p.contracted);
  EXPECT_TRUE(printed.verified);
  EXPECT_EQ(printed.element, hats[2].result.element);
}

TEST(Pipeline, RecordsIntermediates) {
  auto p = contraction_pipeline(catalog("poincare_trivial_ext"));
  EXPECT_EQ(p.source.name(), "poincare_trivial_ext");
  EXPECT_TRUE(p.hbar.find("Hb").has_value());
  EXPECT_EQ(p.hbar.table(), catalog("poincare_trivial_ext_hbar").table());
  EXPECT_NE(std::find(p.rescaled.symbols().begin(), p.rescaled.symbols().end(), "eps"), p.rescaled.symbols().end());
}

TEST(Pipeline, FullGroup) {
  auto p = contraction_pipeline(catalog("full_relativistic"));
  EXPECT_EQ(p.map.at("Q"), 0);
  EXPECT_TRUE(tables_equal(p.contracted, catalog("full_nonrelativistic"), standard_renaming(p.contracted)).equal);
}

TEST(ConceptualLimit, Report) {
  Report r = conceptual_limit_check();
  EXPECT_TRUE(r.all_pass()) << r.to_text();
  EXPECT_EQ(r.checks().size(), 4u);
}
