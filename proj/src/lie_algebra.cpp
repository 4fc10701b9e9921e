#include "lieq/lie_algebra.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace lieq {

Combination Combination::of(std::size_t generator, Scalar coeff) {
  Combination c;
  c.add(generator, coeff);
  return c;
}

Scalar Combination::coefficient(std::size_t generator) const {
  auto it = terms_.find(generator);
  return it == terms_.end() ? Scalar() : it->second;
}

void Combination::add(std::size_t generator, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(generator, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Combination& Combination::operator+=(const Combination& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

Combination& Combination::operator-=(const Combination& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

Combination Combination::operator-() const {
  Combination out = *this;
  for (auto& [g, c] : out.terms_) c = -c;
  return out;
}

Combination operator*(const Scalar& s, const Combination& c) {
  Combination out;
  if (s.is_zero()) return out;
  for (const auto& [g, coeff] : c.terms_) out.add(g, s * coeff);
  return out;
}

namespace {

bool valid_identifier(const std::string& name) {
  static const std::regex pattern("[A-Za-z][A-Za-z0-9_]*");
  return std::regex_match(name, pattern);
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> generators, std::vector<std::string> symbols,
                       const std::vector<BracketEntry>& entries)
    : name_(std::move(name)), generators_(std::move(generators)), symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  std::set<std::string> symbol_set(symbols_.begin(), symbols_.end());
  for (const auto& g : generators_) {
    if (!valid_identifier(g) || g == "i") throw Error("invalid generator name: '" + g + "'");
    if (symbol_set.count(g)) throw Error("generator name '" + g + "' collides with a scalar symbol");
    if (!seen.insert(g).second) throw DuplicateName(g);
  }
  std::sort(symbols_.begin(), symbols_.end());
  symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());

  const std::size_t n = generators_.size();
  for (const auto& e : entries) {
    if (e.a >= n || e.b >= n) throw Error("bracket entry references a generator index out of range");
    for (const auto& [g, c] : e.result.terms()) {
      if (g >= n) throw Error("bracket result references a generator index out of range");
    }
    if (e.a == e.b) {
      if (!e.result.is_zero()) violations_.push_back({e.a, e.b, "self-bracket is nonzero"});
      continue;
    }
    auto key = std::minmax(e.a, e.b);
    Combination oriented = e.a < e.b ? e.result : -e.result;
    auto [it, inserted] = table_.try_emplace({key.first, key.second}, oriented);
    if (!inserted && !(it->second == oriented)) {
      violations_.push_back({e.a, e.b, "conflicts with an earlier entry for the same pair"});
    }
  }
  for (auto it = table_.begin(); it != table_.end();) {
    it = it->second.is_zero() ? table_.erase(it) : std::next(it);
  }
}

std::optional<std::size_t> LieAlgebra::find(const std::string& generator) const {
  auto it = std::find(generators_.begin(), generators_.end(), generator);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t LieAlgebra::index_of(const std::string& generator) const {
  auto idx = find(generator);
  if (!idx) throw UnknownName("generator", generator + " (algebra " + name_ + ")");
  return *idx;
}

Combination LieAlgebra::bracket(std::size_t a, std::size_t b) const {
  if (a == b) return {};
  auto it = table_.find({std::min(a, b), std::max(a, b)});
  if (it == table_.end()) return {};
  return a < b ? it->second : -it->second;
}

Combination LieAlgebra::bracket(const Combination& x, const Combination& y) const {
  Combination out;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      if (a == b) continue;
      Combination ab = bracket(a, b);
      if (!ab.is_zero()) out += (ca * cb) * ab;
    }
  }
  return out;
}

bool LieAlgebra::is_central(std::size_t a) const {
  return std::none_of(table_.begin(), table_.end(),
                      [a](const auto& kv) { return kv.first.first == a || kv.first.second == a; });
}

LieAlgebra LieAlgebra::with_name(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

LieAlgebra LieAlgebra::with_bracket(std::size_t a, std::size_t b, const Combination& result) const {
  if (a == b) throw Error("cannot override a self-bracket");
  LieAlgebra copy = *this;
  Combination oriented = a < b ? result : -result;
  std::pair key{std::min(a, b), std::max(a, b)};
  if (oriented.is_zero()) {
    copy.table_.erase(key);
  } else {
    copy.table_[key] = oriented;
  }
  return copy;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  out.reserve(table_.size());
  for (const auto& [key, value] : table_) out.push_back({key.first, key.second, value});
  return out;
}

std::vector<std::string> ValidationReport::describe(const LieAlgebra& algebra) const {
  std::vector<std::string> lines;
  for (const auto& v : antisymmetry) {
    lines.push_back("antisymmetry [" + algebra.generator_name(v.a) + "," + algebra.generator_name(v.b) +
                    "]: " + v.reason);
  }
  for (const auto& v : jacobi) {
    lines.push_back("jacobi (" + algebra.generator_name(v.a) + "," + algebra.generator_name(v.b) + "," +
                    algebra.generator_name(v.c) + "): " + to_string(algebra, v.residue) + " != 0");
  }
  return lines;
}

Combination bracket(const LieAlgebra& algebra, const Combination& x, const Combination& y) {
  return algebra.bracket(x, y);
}

Combination bracket(const LieAlgebra& algebra, const std::string& x, const std::string& y) {
  return algebra.bracket(Combination::of(algebra.index_of(x)), Combination::of(algebra.index_of(y)));
}

Combination jacobi_sum(const LieAlgebra& algebra, std::size_t a, std::size_t b, std::size_t c) {
  Combination ga = Combination::of(a);
  Combination gb = Combination::of(b);
  Combination gc = Combination::of(c);
  return algebra.bracket(algebra.bracket(ga, gb), gc) + algebra.bracket(algebra.bracket(gb, gc), ga) +
         algebra.bracket(algebra.bracket(gc, ga), gb);
}

ValidationReport validate(const LieAlgebra& algebra) {
  ValidationReport report;
  report.antisymmetry = algebra.antisymmetry_violations();
  const std::size_t n = algebra.dimension();
  // The Jacobi sum is totally antisymmetric in its arguments, so a < b < c covers every triple.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        Combination r = jacobi_sum(algebra, a, b, c);
        if (!r.is_zero()) report.jacobi.push_back({a, b, c, std::move(r)});
      }
    }
  }
  return report;
}

LieAlgebra trivial_extension(const LieAlgebra& algebra, const std::string& name) {
  if (algebra.find(name)) throw DuplicateName(name);
  auto generators = algebra.generators();
  generators.push_back(name);
  return LieAlgebra(algebra.name() + "_ext", std::move(generators), algebra.symbols(), algebra.entries());
}

LieAlgebra central_extension(const LieAlgebra& algebra, const std::string& central,
                             const std::vector<BracketOverride>& overrides) {
  LieAlgebra extended = trivial_extension(algebra, central).with_name(algebra.name() + "_central");
  for (const auto& o : overrides) {
    Combination result;
    for (const auto& [gen, coeff] : o.result) result.add(extended.index_of(gen), coeff);
    extended = extended.with_bracket(extended.index_of(o.a), extended.index_of(o.b), result);
  }
  ValidationReport report = validate(extended);
  if (!report.ok()) {
    std::string first = report.describe(extended).front();
    throw JacobiFailure("central extension is not a valid cocycle: " + first, std::move(report));
  }
  return extended;
}

LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b, std::string name) {
  auto generators = a.generators();
  std::set<std::string> taken(generators.begin(), generators.end());
  std::set<std::string> symbols(a.symbols().begin(), a.symbols().end());
  symbols.insert(b.symbols().begin(), b.symbols().end());
  for (const auto& g : b.generators()) {
    std::string candidate = g;
    for (int suffix = 2; taken.count(candidate) || symbols.count(candidate); ++suffix) {
      candidate = g + "_" + std::to_string(suffix);
    }
    taken.insert(candidate);
    generators.push_back(candidate);
  }
  std::vector<BracketEntry> entries = a.entries();
  const std::size_t offset = a.dimension();
  for (const auto& e : b.entries()) {
    Combination shifted;
    for (const auto& [g, c] : e.result.terms()) shifted.add(g + offset, c);
    entries.push_back({e.a + offset, e.b + offset, std::move(shifted)});
  }
  if (name.empty()) name = a.name() + "_x_" + b.name();
  return LieAlgebra(std::move(name), std::move(generators), {symbols.begin(), symbols.end()}, entries);
}

LieAlgebra rename_generators(const LieAlgebra& algebra, const std::map<std::string, std::string>& renaming,
                             std::string name) {
  auto generators = algebra.generators();
  for (auto& g : generators) {
    auto it = renaming.find(g);
    if (it != renaming.end()) g = it->second;
  }
  for (const auto& [from, to] : renaming) {
    if (!algebra.find(from)) throw UnknownName("generator", from);
  }
  if (name.empty()) name = algebra.name();
  return LieAlgebra(std::move(name), std::move(generators), algebra.symbols(), algebra.entries());
}

std::string to_string(const LieAlgebra& algebra, const Combination& c) {
  std::vector<std::pair<Scalar, std::string>> terms;
  for (const auto& [g, coeff] : c.terms()) terms.emplace_back(coeff, algebra.generator_name(g));
  return format_sum(terms);
}

}  // namespace lieq
