#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieq/casimirs.hpp"
#include "lieq/report.hpp"
#include "lieq/uea.hpp"

namespace lieq {

/// generator' = eps^k * generator, keyed by generator name. Must be total.
using RescalingMap = std::map<std::string, int>;
/// Generator name in one algebra -> generator name in another.
using Renaming = std::map<std::string, std::string>;

struct Pole {
  std::string a;
  std::string b;
  std::string result;  // generator whose coefficient diverges
  int order;           // k in eps^-k
};

class DivergentContraction : public Error {
 public:
  explicit DivergentContraction(std::vector<Pole> poles);
  const std::vector<Pole>& poles() const { return poles_; }

 private:
  std::vector<Pole> poles_;
};

class DivergentLimit : public Error {
 public:
  explicit DivergentLimit(int residual_order)
      : Error("limit diverges: residual pole eps^-" + std::to_string(residual_order)), order_(residual_order) {}
  int residual_order() const { return order_; }

 private:
  int order_;
};

/// Exponent of every generator, in basis order; throws on a partial or foreign map.
std::vector<int> exponents(const LieAlgebra& algebra, const RescalingMap& map);

/// Structure constants c'_ab^d = eps^(k_a + k_b - k_d) c_ab^d.
LieAlgebra rescale_algebra(const LieAlgebra& algebra, const RescalingMap& map, std::string name = {});

/// eps -> 0 limit of the rescaled table; throws DivergentContraction on poles.
LieAlgebra contract(const LieAlgebra& algebra, const RescalingMap& map, std::string name = {});

struct TableComparison {
  bool equal = true;
  std::vector<std::string> diff;
};

/// Compares structure constants after mapping generator names of `a` through `renaming`.
TableComparison tables_equal(const LieAlgebra& a, const LieAlgebra& b, const Renaming& renaming);

/// Substitutes G_a = eps^(-k_a) G'_a word by word.
Element rescale_element(const LieAlgebra& algebra, const Element& e, const RescalingMap& map);

struct ContractedElement {
  Element element;  // over the contracted algebra (same basis indices)
  int power = 0;
  bool zero_limit = false;  // power larger than needed; the limit vanished
};

/// lim eps->0 of eps^power * rescale_element(e). Without `power`, picks the
/// smallest power giving a finite nonzero limit (searched in [-10, 10]).
ContractedElement contract_casimir(const LieAlgebra& algebra, const Element& e, const RescalingMap& map,
                                   std::optional<int> power = std::nullopt);

/// Algebras along the contraction route; `hbar` equals `source` when no basis change applies.
struct ContractionPipeline {
  LieAlgebra source;
  LieAlgebra hbar;
  LieAlgebra rescaled;
  LieAlgebra contracted;
  RescalingMap map;
};

/// H -> Hb = H - M when both exist and Hb does not, then rescale and contract.
/// Without `map`, the standard speed-space rescaling is used.
ContractionPipeline contraction_pipeline(const LieAlgebra& source, std::optional<RescalingMap> map = std::nullopt);

struct ContractedCasimir {
  std::string label;
  ContractedElement result;
  bool is_casimir = false;  // in the contracted algebra
};

/// Contracts each entry (auto power) from `pipeline.hbar` into `pipeline.contracted`.
std::vector<ContractedCasimir> contract_casimirs(const ContractionPipeline& pipeline,
                                                 const std::vector<CatalogCasimir>& casimirs);

/// Contracted extended-Poincare Casimirs compared with the Galilei ones in the rest frame.
Report conceptual_limit_check();

}  // namespace lieq
