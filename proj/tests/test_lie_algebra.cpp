#include <gtest/gtest.h>

#include "lieq/basis_change.hpp"
#include "lieq/catalog.hpp"
#include "lieq/expression.hpp"
#include "lieq/lie_algebra.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

Combination C(const LieAlgebra& a, const char* text) {
  Element e = normal_form(a, parse_expression(a, text));
  Combination c;
  for (const auto& [w, coeff] : e.terms()) {
    if (w.size() != 1) ADD_FAILURE() << text << " is not linear";
    c.add(w.front(), coeff);
  }
  return c;
}

LieAlgebra so3() {
  return LieAlgebra("so3", {"Jx", "Jy", "Jz"}, {},
                    {{0, 1, Combination::of(2, Scalar::i())},
                     {1, 2, Combination::of(0, Scalar::i())},
                     {2, 0, Combination::of(1, Scalar::i())}});
}

/// Sum of [[a,b],c] over cyclic permutations, evaluated straight from the table.
Combination jacobi_by_hand(const LieAlgebra& alg, std::size_t a, std::size_t b, std::size_t c) {
  auto br = [&](const Combination& x, std::size_t y) {
    Combination out;
    for (const auto& [g, s] : x.terms()) out += s * alg.bracket(g, y);
    return out;
  };
  return br(alg.bracket(a, b), c) + br(alg.bracket(b, c), a) + br(alg.bracket(c, a), b);
}

}  // namespace

TEST(Bracket, CatalogExamples) {
  LieAlgebra g = catalog("galilei");
  EXPECT_TRUE(bracket(g, "Gux", "Grx").is_zero());
  LieAlgebra gc = catalog("galilei_central");
  EXPECT_EQ(bracket(gc, "KGx", "Px"), C(gc, "i*M"));
  EXPECT_EQ(bracket(gc, "KGx", "H"), C(gc, "i*Px"));
  for (std::size_t k = 0; k < gc.dimension(); ++k) EXPECT_TRUE(gc.bracket(k, k).is_zero());
}

TEST(Bracket, BilinearAndAntisymmetric) {
  LieAlgebra p = catalog("poincare");
  Combination x = C(p, "2*KPx - i*Jz + H/3");
  Combination y = C(p, "Py + eps*KPy");
  EXPECT_EQ(bracket(p, x, y), -bracket(p, y, x));
  EXPECT_EQ(bracket(p, x, y), Scalar(2) * bracket(p, "KPx", "Py") + Scalar(2) * Scalar::symbol("eps") *
                                                                     bracket(p, "KPx", "KPy") -
                                   Scalar::i() * bracket(p, "Jz", "Py") -
                                   Scalar::i() * Scalar::symbol("eps") * bracket(p, "Jz", "KPy") +
                                   Scalar(Rational(1, 3)) * bracket(p, "H", "Py") +
                                   Scalar(Rational(1, 3)) * Scalar::symbol("eps") * bracket(p, "H", "KPy"));
  EXPECT_TRUE(bracket(p, x, x).is_zero());
}

TEST(Bracket, UnknownGenerator) {
  EXPECT_THROW(bracket(catalog("poincare"), "KGx", "Px"), UnknownName);
}

TEST(Catalog, EveryEntryValidates) {
  for (const auto& name : catalog_names()) {
    LieAlgebra a = catalog(name);
    ValidationReport r = validate(a);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(a.name(), name);
  }
  EXPECT_EQ(catalog_names().size(), 9u);
}

TEST(Catalog, Shapes) {
  EXPECT_EQ(catalog("galilei").dimension(), 10u);
  EXPECT_EQ(catalog("galilei_central").dimension(), 11u);
  EXPECT_EQ(catalog("poincare").dimension(), 10u);
  EXPECT_EQ(catalog("poincare_trivial_ext").dimension(), 11u);
  EXPECT_EQ(catalog("u1").dimension(), 1u);
  EXPECT_EQ(catalog("heisenberg3").dimension(), 7u);
  EXPECT_EQ(catalog("full_relativistic").dimension(), 12u);
  EXPECT_EQ(catalog("full_nonrelativistic").dimension(), 12u);
  EXPECT_THROW(catalog("de_sitter"), UnknownName);
}

TEST(Catalog, PoincareBoostsCloseOnRotations) {
  LieAlgebra p = catalog("poincare");
  EXPECT_EQ(bracket(p, "KPx", "KPy"), C(p, "-i*Jz"));
  EXPECT_EQ(bracket(p, "KPx", "Px"), C(p, "i*H"));
  EXPECT_TRUE(bracket(p, "Px", "H").is_zero());
}

TEST(Catalog, HeisenbergAndU1) {
  LieAlgebra h = catalog("heisenberg3");
  EXPECT_EQ(bracket(h, "Xx", "Px"), C(h, "i*Z"));
  EXPECT_TRUE(bracket(h, "Xx", "Py").is_zero());
  for (std::size_t k = 0; k < h.dimension(); ++k) EXPECT_TRUE(h.bracket(h.index_of("Z"), k).is_zero());
  LieAlgebra u = catalog("u1");
  EXPECT_TRUE(u.table().empty());
}

TEST(Catalog, RotationTablesMatchPermutationParity) {
  LieAlgebra gc = catalog("galilei_central");
  const char* axes[] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Combination expected;
      for (int k = 0; k < 3; ++k) {
        int e = oracle::parity(i, j, k);
        if (e != 0) expected.add(gc.index_of(std::string("P") + axes[k]), Scalar::i() * Scalar(e));
      }
      EXPECT_EQ(bracket(gc, std::string("J") + axes[i], std::string("P") + axes[j]), expected);
      EXPECT_EQ(levi_civita(i, j, (i + j) % 3), oracle::parity(i, j, (i + j) % 3));
    }
  }
}

TEST(Validate, AbelianAlgebraIsClean) {
  LieAlgebra a("abelian", {"A", "B", "C"}, {}, {});
  EXPECT_TRUE(validate(a).ok());
}

TEST(Validate, ZeroedRotationBracket) {
  // In so(3) alone, setting [Jy,Jz] = 0 leaves a Lie algebra (the Euclidean
  // plane algebra); the single triple still sums to zero.
  LieAlgebra s = so3().with_bracket(1, 2, Combination());
  EXPECT_TRUE(jacobi_by_hand(s, 0, 1, 2).is_zero());
  EXPECT_TRUE(validate(s).ok());

  // Inside galilei_central the same change breaks Jacobi on mixed triples.
  LieAlgebra gc = catalog("galilei_central");
  std::size_t jy = gc.index_of("Jy");
  std::size_t jz = gc.index_of("Jz");
  LieAlgebra broken = gc.with_bracket(jy, jz, Combination());
  EXPECT_TRUE(jacobi_by_hand(broken, gc.index_of("Jx"), jy, jz).is_zero());
  Combination by_hand = jacobi_by_hand(broken, jy, jz, gc.index_of("Py"));
  EXPECT_EQ(by_hand, Combination::of(gc.index_of("Pz")));
  ValidationReport r = validate(broken);
  ASSERT_FALSE(r.ok());
  bool found = false;
  for (const auto& v : r.jacobi) {
    if (v.a == jy && v.b == jz && v.c == gc.index_of("Py")) {
      found = true;
      EXPECT_EQ(v.residue, by_hand);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Validate, ContradictoryRawEntriesAreReported) {
  LieAlgebra a("bad", {"A", "B"}, {},
               {{0, 1, Combination::of(0)}, {1, 0, Combination::of(0)}, {1, 1, Combination::of(0)}});
  ValidationReport r = validate(a);
  EXPECT_EQ(r.antisymmetry.size(), 2u);
  EXPECT_FALSE(r.describe(a).empty());
}

TEST(Validate, MutationSuite) {
  // One mutant per nonzero structure constant: 21 for galilei_central, 24 for poincare.
  for (const auto& [name, expected] : {std::pair{"galilei_central", 21u}, std::pair{"poincare", 24u}}) {
    LieAlgebra base = catalog(name);
    std::size_t mutants = 0;
    for (const auto& [ab, result] : base.table()) {
      for (const auto& [d, c] : result.terms()) {
        Combination flipped = result;
        flipped.add(d, Scalar(-2) * c);
        LieAlgebra mutant = base.with_bracket(ab.first, ab.second, flipped);
        EXPECT_FALSE(validate(mutant).ok())
            << name << ": flipping [" << base.generator_name(ab.first) << "," << base.generator_name(ab.second)
            << "] -> " << base.generator_name(d) << " went unnoticed";
        ++mutants;
      }
    }
    EXPECT_EQ(mutants, expected) << name;
  }
}

TEST(Extension, Trivial) {
  LieAlgebra ext = trivial_extension(catalog("poincare"), "M");
  EXPECT_EQ(ext.dimension(), 11u);
  EXPECT_TRUE(ext.is_central(ext.index_of("M")));
  EXPECT_TRUE(validate(trivial_extension(catalog("galilei"), "M")).ok());
  LieAlgebra two = trivial_extension(catalog("u1"), "Z");
  EXPECT_EQ(two.dimension(), 2u);
  EXPECT_TRUE(two.table().empty());
  EXPECT_THROW(trivial_extension(catalog("u1"), "Q"), DuplicateName);
}

TEST(Extension, CentralReproducesPhysicalTable) {
  LieAlgebra g = catalog("galilei");
  std::vector<BracketOverride> overrides;
  for (const char* ax : {"x", "y", "z"}) {
    overrides.push_back({std::string("Gu") + ax, std::string("Gr") + ax, {{"M", Scalar::i()}}});
  }
  LieAlgebra ext = central_extension(g, "M", overrides);
  LieAlgebra physical = rename_generators(
      ext, {{"Gtau", "H"}, {"Gthx", "Jx"}, {"Gthy", "Jy"}, {"Gthz", "Jz"}, {"Gux", "KGx"}, {"Guy", "KGy"},
            {"Guz", "KGz"}, {"Grx", "Px"}, {"Gry", "Py"}, {"Grz", "Pz"}});
  LieAlgebra gc = catalog("galilei_central");
  ASSERT_EQ(physical.generators(), gc.generators());
  EXPECT_EQ(physical.table(), gc.table());
}

TEST(Extension, CentralWithoutOverridesIsTrivial) {
  LieAlgebra g = catalog("galilei");
  EXPECT_EQ(central_extension(g, "M", {}).table(), trivial_extension(g, "M").table());
}

TEST(Extension, InvalidCocycleRejected) {
  LieAlgebra g = catalog("galilei");
  try {
    // Adding M to [Gthz,Gtau] alone breaks the (Gthx,Gthy,Gtau) Jacobi identity.
    central_extension(g, "M", {{"Gthz", "Gtau", {{"M", Scalar::i()}}}});
    FAIL() << "expected JacobiFailure";
  } catch (const JacobiFailure& e) {
    EXPECT_FALSE(e.report().ok());
  }
  EXPECT_THROW(central_extension(g, "Gux", {}), DuplicateName);
}

TEST(BasisChange, HbarBracket) {
  LieAlgebra ext = catalog("poincare_trivial_ext");
  LieAlgebra hb = change_basis(ext, hbar_basis_change(ext));
  EXPECT_EQ(bracket(hb, "KPx", "Px"), C(hb, "i*Hb + i*M"));
  EXPECT_EQ(bracket(hb, "KPx", "Hb"), C(hb, "i*Px"));
  EXPECT_TRUE(validate(hb).ok());
}

TEST(BasisChange, IdentityAndRoundTrip) {
  LieAlgebra ext = catalog("poincare_trivial_ext");
  EXPECT_EQ(change_basis(ext, BasisChange::identity(ext)).table(), ext.table());
  BasisChange change = hbar_basis_change(ext);
  LieAlgebra back = change_basis(change_basis(ext, change), change.inverse(ext));
  EXPECT_EQ(back.generators(), ext.generators());
  EXPECT_EQ(back.table(), ext.table());
}

TEST(BasisChange, Functorial) {
  LieAlgebra gc = catalog("galilei_central");
  BasisChange first = BasisChange::replace(gc, "H", "H1", Combination::of(gc.index_of("H")) -
                                                              Scalar(Rational(1, 2)) * Combination::of(gc.index_of("M")));
  LieAlgebra mid = change_basis(gc, first);
  BasisChange second = BasisChange::replace(mid, "Px", "Qx", Scalar(3) * Combination::of(mid.index_of("Px")) +
                                                                 Scalar::i() * Combination::of(mid.index_of("M")));
  LieAlgebra stepwise = change_basis(mid, second);
  LieAlgebra composed = change_basis(gc, compose(second, first));
  EXPECT_EQ(stepwise.generators(), composed.generators());
  EXPECT_EQ(stepwise.table(), composed.table());
  EXPECT_TRUE(validate(composed).ok());
}

TEST(BasisChange, SingularRejected) {
  LieAlgebra gc = catalog("galilei_central");
  BasisChange bad = BasisChange::replace(gc, "H", "H0", Combination::of(gc.index_of("M")));
  EXPECT_THROW(change_basis(gc, bad), SingularMatrix);
  Matrix m = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  EXPECT_THROW(inverse(m), SingularMatrix);
  Matrix ok = {{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
  EXPECT_EQ(multiply(ok, inverse(ok)), identity_matrix(2));
}

TEST(DirectProduct, BlockDiagonal) {
  LieAlgebra full = direct_product(catalog("poincare_trivial_ext"), catalog("u1"));
  EXPECT_EQ(full.dimension(), 12u);
  EXPECT_TRUE(full.is_central(full.index_of("Q")));
  EXPECT_TRUE(validate(direct_product(catalog("galilei_central"), catalog("u1"))).ok());
  LieAlgebra uu = direct_product(catalog("u1"), catalog("u1"));
  EXPECT_EQ(uu.generators(), (std::vector<std::string>{"Q", "Q_2"}));
  EXPECT_TRUE(uu.table().empty());
}
