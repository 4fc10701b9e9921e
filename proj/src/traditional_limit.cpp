#include "lieq/traditional_limit.hpp"

#include <array>

#include "lieq/catalog.hpp"

namespace lieq {

namespace {

constexpr std::array<const char*, 3> kAxes = {"x", "y", "z"};

Scalar sym(const char* name, int exponent = 1) { return Scalar::symbol(name, exponent); }

/// Runs `expected(i, j)` against `actual(i, j)` over all axis pairs.
template <typename Actual, typename Expected>
Check all_pairs(const LieAlgebra& algebra, Actual actual, Expected expected) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Element diff = normal_form(algebra, actual(i, j) - expected(i, j));
      if (!diff.is_zero()) {
        return fail(std::string("mismatch at i=") + kAxes[i] + ", j=" + kAxes[j], to_string(algebra, diff));
      }
    }
  }
  return pass("all 9 index pairs agree");
}

}  // namespace

TraditionalLimit TraditionalLimit::build() {
  TraditionalLimit t{catalog("heisenberg3"), {}, {}, {}, {}};
  const LieAlgebra& h = t.algebra;
  std::vector<Element> X;
  for (const char* ax : kAxes) {
    X.push_back(Element::generator(h.index_of(std::string("X") + ax)));
    t.P.push_back(Element::generator(h.index_of(std::string("P") + ax)));
  }
  Scalar c = sym("c");
  for (int i = 0; i < 3; ++i) {
    t.K.push_back(sym("m0") * c * c * X[i] - c * sym("t") * t.P[i]);
    Element j;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        int e = levi_civita(i, a, b);
        if (e != 0) j += Scalar(e) * (X[a] * t.P[b]);
      }
    }
    t.J.push_back(normal_form(h, j));
  }
  Element p2;
  for (const auto& p : t.P) p2 += p * p;
  t.H = Element::scalar(sym("m0") * c * c) + (Scalar(Rational(1, 2)) * sym("m0", -1)) * p2;
  return t;
}

Element TraditionalLimit::bracket(const Element& a, const Element& b) const {
  Substitution unit_z;
  unit_z.replacements[algebra.index_of("Z")] = Element::unit();
  return substitute(algebra, commutator(algebra, a, b), unit_z);
}

Report traditional_limit_report() {
  Report report("traditional non-relativistic limit");
  const TraditionalLimit t = TraditionalLimit::build();
  const LieAlgebra& h = t.algebra;
  const Scalar i = Scalar::i();
  auto at_c1 = [](const Element& e) { return substitute_symbols(e, {{"c", Scalar(1)}}); };
  auto delta = [](int a, int b) { return Scalar(a == b ? 1 : 0); };

  report.run("[K_i,K_j] = 0", [&] {
    return all_pairs(h, [&](int a, int b) { return t.bracket(t.K[a], t.K[b]); },
                     [](int, int) { return Element(); });
  });
  report.run("[J_i,K_j] = i eps_ijk K_k", [&] {
    return all_pairs(
        h, [&](int a, int b) { return t.bracket(t.J[a], t.K[b]); },
        [&](int a, int b) {
          Element out;
          for (int k = 0; k < 3; ++k) out += (i * Scalar(levi_civita(a, b, k))) * t.K[k];
          return out;
        });
  });
  report.run("[K_i,P_j] = i delta_ij m0 c^2", [&] {
    return all_pairs(h, [&](int a, int b) { return t.bracket(t.K[a], t.P[b]); },
                     [&](int a, int b) {
                       return Element::scalar(i * delta(a, b) * sym("m0") * sym("c", 2));
                     });
  });
  report.run("[K_i,P_j] = i delta_ij m0 at c = 1", [&] {
    return all_pairs(h, [&](int a, int b) { return at_c1(t.bracket(t.K[a], t.P[b])); },
                     [&](int a, int b) { return Element::scalar(i * delta(a, b) * sym("m0")); });
  });
  report.run("[K_i,H] = i P_i at c = 1", [&] {
    Check c = all_pairs(h, [&](int a, int) { return at_c1(t.bracket(t.K[a], t.H)); },
                        [&](int a, int) { return i * t.P[a]; });
    Element general = t.bracket(t.K[0], t.H);
    c.detail += "; at general c, [K_x,H] = " + to_string(h, general);
    c.data = {{"general_c", to_string(h, general)}};
    return c;
  });
  return report;
}

}  // namespace lieq
