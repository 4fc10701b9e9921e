#include "lieq/catalog.hpp"

#include <array>

namespace lieq {

namespace {

constexpr std::array<const char*, 3> kAxes = {"x", "y", "z"};

const std::vector<std::string>& default_symbols() {
  static const std::vector<std::string> symbols = {"c", "eps", "m", "m0", "t", "w"};
  return symbols;
}

std::vector<std::string> triplet(const std::string& stem) {
  return {stem + kAxes[0], stem + kAxes[1], stem + kAxes[2]};
}

/// Collects bracket entries by generator name.
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> generators) : generators_(std::move(generators)) {}

  std::size_t index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i] == name) return i;
    }
    throw UnknownName("generator", name);
  }

  void set(const std::string& a, const std::string& b, const std::string& result, const Scalar& coeff) {
    entries_.push_back({index(a), index(b), Combination::of(index(result), coeff)});
  }

  // [A_i, B_j] = i eps_ijk C_k
  void rotation(const std::string& a, const std::string& b, const std::string& c, const Scalar& sign = Scalar(1)) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (a == b && j <= i) continue;
        for (int k = 0; k < 3; ++k) {
          int e = levi_civita(i, j, k);
          if (e != 0) set(a + kAxes[i], b + kAxes[j], c + kAxes[k], sign * Scalar::i() * Scalar(e));
        }
      }
    }
  }

  // [A_i, B_j] = coeff delta_ij C
  void diagonal(const std::string& a, const std::string& b, const std::string& c, const Scalar& coeff) {
    for (int i = 0; i < 3; ++i) set(a + kAxes[i], b + kAxes[i], c, coeff);
  }

  // [A_i, B] = coeff C_i
  void vector_result(const std::string& a, const std::string& b, const std::string& c, const Scalar& coeff) {
    for (int i = 0; i < 3; ++i) set(a + kAxes[i], b, c + kAxes[i], coeff);
  }

  LieAlgebra build(std::string name) const {
    return LieAlgebra(std::move(name), generators_, default_symbols(), entries_);
  }

 private:
  std::vector<std::string> generators_;
  std::vector<BracketEntry> entries_;
};

std::vector<std::string> kinematic_generators(const std::string& time, const std::string& rot,
                                              const std::string& boost, const std::string& trans) {
  std::vector<std::string> g{time};
  for (const auto& stem : {rot, boost, trans}) {
    auto t = triplet(stem);
    g.insert(g.end(), t.begin(), t.end());
  }
  return g;
}

LieAlgebra galilei() {
  TableBuilder t(kinematic_generators("Gtau", "Gth", "Gu", "Gr"));
  t.rotation("Gth", "Gth", "Gth");
  t.rotation("Gth", "Gr", "Gr");
  t.rotation("Gth", "Gu", "Gu");
  t.vector_result("Gu", "Gtau", "Gr", Scalar::i());
  return t.build("galilei");
}

LieAlgebra galilei_central() {
  auto g = kinematic_generators("H", "J", "KG", "P");
  g.push_back("M");
  TableBuilder t(g);
  t.rotation("J", "J", "J");
  t.rotation("J", "P", "P");
  t.rotation("J", "KG", "KG");
  t.diagonal("KG", "P", "M", Scalar::i());
  t.vector_result("KG", "H", "P", Scalar::i());
  return t.build("galilei_central");
}

LieAlgebra poincare() {
  TableBuilder t(kinematic_generators("H", "J", "KP", "P"));
  t.rotation("KP", "KP", "J", Scalar(-1));
  t.rotation("J", "J", "J");
  t.rotation("J", "P", "P");
  t.rotation("J", "KP", "KP");
  t.diagonal("KP", "P", "H", Scalar::i());
  t.vector_result("KP", "H", "P", Scalar::i());
  return t.build("poincare");
}

LieAlgebra poincare_trivial_ext() { return trivial_extension(poincare(), "M").with_name("poincare_trivial_ext"); }

LieAlgebra poincare_trivial_ext_hbar() {
  LieAlgebra ext = poincare_trivial_ext();
  return change_basis(ext, hbar_basis_change(ext), "poincare_trivial_ext_hbar");
}

LieAlgebra u1() { return LieAlgebra("u1", {"Q"}, default_symbols(), {}); }

LieAlgebra heisenberg3() {
  auto g = triplet("X");
  auto p = triplet("P");
  g.insert(g.end(), p.begin(), p.end());
  g.push_back("Z");
  TableBuilder t(g);
  t.diagonal("X", "P", "Z", Scalar::i());
  return t.build("heisenberg3");
}

}  // namespace

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "galilei", "galilei_central", "poincare", "poincare_trivial_ext", "poincare_trivial_ext_hbar",
      "u1",      "heisenberg3",     "full_relativistic", "full_nonrelativistic"};
  return names;
}

LieAlgebra catalog(const std::string& name) {
  if (name == "galilei") return galilei();
  if (name == "galilei_central") return galilei_central();
  if (name == "poincare") return poincare();
  if (name == "poincare_trivial_ext") return poincare_trivial_ext();
  if (name == "poincare_trivial_ext_hbar") return poincare_trivial_ext_hbar();
  if (name == "u1") return u1();
  if (name == "heisenberg3") return heisenberg3();
  if (name == "full_relativistic") return direct_product(poincare_trivial_ext(), u1(), "full_relativistic");
  if (name == "full_nonrelativistic") return direct_product(galilei_central(), u1(), "full_nonrelativistic");
  throw UnknownName("catalog algebra", name);
}

BasisChange hbar_basis_change(const LieAlgebra& with_h_and_m) {
  Combination hbar = Combination::of(with_h_and_m.index_of("H")) -
                     Combination::of(with_h_and_m.index_of("M"));
  return BasisChange::replace(with_h_and_m, "H", "Hb", hbar);
}

std::map<std::string, int> standard_rescaling(const LieAlgebra& algebra) {
  std::map<std::string, int> map;
  for (const auto& g : algebra.generators()) {
    int k = 0;
    if (g.rfind("KP", 0) == 0 || g.rfind("KG", 0) == 0 || (g.size() == 2 && g[0] == 'P')) k = 1;
    if (g == "M") k = 2;
    map[g] = k;
  }
  return map;
}

std::map<std::string, std::string> standard_renaming(const LieAlgebra& contracted) {
  std::map<std::string, std::string> renaming;
  for (const auto& g : contracted.generators()) {
    if (g == "Hb") {
      renaming[g] = "H";
    } else if (g.rfind("KP", 0) == 0) {
      renaming[g] = "KG" + g.substr(2);
    } else {
      renaming[g] = g;
    }
  }
  return renaming;
}

}  // namespace lieq
