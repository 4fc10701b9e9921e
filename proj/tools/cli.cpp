#include "lieq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

#include "lieq/algebra_io.hpp"
#include "lieq/casimirs.hpp"
#include "lieq/catalog.hpp"
#include "lieq/contraction.hpp"
#include "lieq/expression.hpp"
#include "lieq/mhi.hpp"
#include "lieq/paper_report.hpp"
#include "lieq/traditional_limit.hpp"

namespace lieq {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

int status_of(bool ok) { return ok ? kOk : kCheckFailed; }

void print_table(const LieAlgebra& algebra, std::ostream& out) {
  out << algebra.name() << " (" << algebra.dimension() << " generators)\n  generators:";
  for (const auto& g : algebra.generators()) out << " " << g;
  out << "\n";
  for (const auto& [ab, result] : algebra.table()) {
    out << "  [" << algebra.generator_name(ab.first) << "," << algebra.generator_name(ab.second)
        << "] = " << to_string(algebra, result) << "\n";
  }
}

/// Applies H -> Hb first when the map speaks about Hb and the algebra is in the H basis.
LieAlgebra align_basis(const LieAlgebra& algebra, const RescalingMap& map) {
  if (map.count("Hb") && algebra.find("H") && algebra.find("M") && !algebra.find("Hb")) {
    return change_basis(algebra, hbar_basis_change(algebra), algebra.name() + "_hbar");
  }
  return algebra;
}

Element to_aligned(const LieAlgebra& source, const LieAlgebra& aligned, const Element& e) {
  if (source.generators() == aligned.generators()) return e;
  Matrix images = hbar_basis_change(source).inverse(source).matrix;
  return linear_substitute(e, images, aligned);
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& name : catalog_names()) out << name << " (" << catalog(name).dimension() << ")\n";
  return kOk;
}

int cmd_catalog_show(const std::string& name, bool json, std::ostream& out) {
  LieAlgebra a = catalog(name);
  if (json) {
    out << export_algebra(a);
  } else {
    print_table(a, out);
  }
  return kOk;
}

int cmd_validate(const std::string& target, std::ostream& out) {
  LieAlgebra a = load_algebra(target);
  ValidationReport v = validate(a);
  if (v.ok()) {
    out << a.name() << ": valid (" << a.dimension() << " generators)\n";
    return kOk;
  }
  out << a.name() << ": " << v.antisymmetry.size() + v.jacobi.size() << " violation(s)\n";
  for (const auto& line : v.describe(a)) out << "  " << line << "\n";
  return kCheckFailed;
}

int cmd_bracket(const std::string& name, const std::string& x, const std::string& y, std::ostream& out) {
  LieAlgebra a = load_algebra(name);
  Combination result = bracket(a, x, y);
  out << "[" << x << "," << y << "] = " << to_string(a, result) << "\n";
  return kOk;
}

int cmd_casimir_verify(const std::string& name, bool all, const std::string& expr, std::ostream& out) {
  LieAlgebra a = load_algebra(name);
  if (all == !expr.empty()) throw UsageError("casimir verify needs exactly one of --all or --expr");
  if (!all) {
    CasimirCheck c = is_casimir(a, parse_expression(a, expr));
    if (c.is_casimir) {
      out << "pass: Casimir of " << a.name() << "\n";
      return kOk;
    }
    out << "fail: [e," << a.generator_name(*c.witness) << "] = " << to_string(a, c.residue) << "\n";
    return kCheckFailed;
  }
  bool ok = true;
  for (const auto& entry : casimir_catalog(name)) {
    CasimirCheck c = is_casimir(a, entry.element);
    ok = ok && c.is_casimir;
    out << (c.is_casimir ? "pass " : "fail ") << entry.label << " (ordering: " << to_string(entry.ordering) << ")";
    for (const auto& attempt : entry.attempts) {
      if (!attempt.passed) out << "; " << to_string(attempt.ordering) << " fails at " << attempt.witness;
    }
    out << "\n";
  }
  return status_of(ok);
}

int cmd_contract(const std::string& name, const std::string& map_file, const std::string& against,
                 const std::string& rename_file, std::ostream& out) {
  LieAlgebra source = load_algebra(name);
  RescalingMap map = parse_rescaling(read_file(map_file));
  LieAlgebra aligned = align_basis(source, map);
  std::optional<LieAlgebra> contracted;
  try {
    contracted = contract(aligned, map);
  } catch (const DivergentContraction& e) {
    out << "fail: " << e.what() << "\n";
    return kCheckFailed;
  }
  print_table(*contracted, out);
  if (against.empty()) return kOk;
  Renaming renaming = rename_file.empty() ? Renaming{} : parse_renaming(read_file(rename_file));
  TableComparison cmp = tables_equal(*contracted, load_algebra(against), renaming);
  out << (cmp.equal ? "pass" : "fail") << ": contracted table " << (cmp.equal ? "equals " : "differs from ")
      << against << "\n";
  for (const auto& d : cmp.diff) out << "  " << d << "\n";
  return status_of(cmp.equal);
}

int cmd_casimir_contract(const std::string& name, const std::string& map_file, const std::string& expr,
                         const std::string& power_text, std::ostream& out) {
  LieAlgebra source = load_algebra(name);
  RescalingMap map = parse_rescaling(read_file(map_file));
  LieAlgebra aligned = align_basis(source, map);
  std::optional<int> power;
  if (power_text != "auto") {
    try {
      std::size_t used = 0;
      power = std::stoi(power_text, &used);
      if (used != power_text.size()) throw std::invalid_argument(power_text);
    } catch (const std::exception&) {
      throw UsageError("--power must be an integer or 'auto', got " + power_text);
    }
  }
  Element e = to_aligned(source, aligned, normal_form(source, parse_expression(source, expr)));
  LieAlgebra contracted = contract(aligned, map);
  ContractedElement hat;
  try {
    hat = contract_casimir(aligned, e, map, power);
  } catch (const DivergentLimit& d) {
    out << "fail: " << d.what() << "\n";
    return kCheckFailed;
  }
  out << "power " << hat.power << "\n" << "limit " << to_string(contracted, hat.element) << "\n";
  if (hat.zero_limit) {
    out << "warn: limit vanishes, power larger than needed\n";
    return kOk;
  }
  CasimirCheck c = is_casimir(contracted, hat.element);
  out << (c.is_casimir ? "pass" : "fail") << ": Casimir of the contracted algebra\n";
  return status_of(c.is_casimir);
}

int print_report(const Report& r, std::ostream& out) {
  out << r.to_text();
  return status_of(r.all_pass());
}

int cmd_mhi_show(const std::string& group, std::ostream& out) {
  GroupDescriptor d = actual_valued_observables(group);
  out << d.algebra << "\n";
  bool ok = true;
  for (const auto& o : d.observables) {
    ok = ok && o.verified;
    out << "  " << o.casimir << " = " << o.operator_label << " -> " << o.eigenvalue << "  [" << o.physical
        << "]  rest frame: " << o.rest_form << (o.verified ? "" : "  (not a Casimir)") << "\n";
  }
  out << "actual-valued:";
  for (const auto& t : d.physical_observables()) out << " " << t;
  out << "\n";
  return status_of(ok);
}

int cmd_mhi_nparticle(long n, std::ostream& out) {
  if (n < 1) throw UsageError("n must be at least 1");
  NParticleLabels l = n_particle_labels(n);
  out << "n = " << l.n << "\n";
  for (const auto& o : l.observables) out << "  " << o.name << " = " << o.expression << " -> " << o.value << "\n";
  out << "note: " << l.note << "\n";
  return kOk;
}

int cmd_report_paper(const std::string& format, const std::string& out_file, const std::string& override_file,
                     std::ostream& out) {
  PaperReportOptions options;
  if (!override_file.empty()) {
    LieAlgebra replacement = parse_algebra(read_file(override_file));
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), replacement.name()) == names.end()) {
      throw UsageError("override algebra '" + replacement.name() + "' does not name a catalog entry");
    }
    options.overrides.emplace(replacement.name(), replacement);
  }
  Report r = paper_report(options);
  std::string body = format == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
  if (out_file.empty()) {
    out << body;
  } else {
    std::ofstream file(out_file, std::ios::binary);
    if (!file) throw UsageError("cannot write " + out_file);
    file << body;
    out << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, " << r.count(Status::Warn)
        << " warnings; written to " << out_file << "\n";
  }
  return status_of(r.all_pass());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra, Casimir and contraction toolkit", "lieq"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* catalog_cmd = app.add_subcommand("catalog", "Browse the algebra catalog")->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List catalog algebras")->callback([&] {
    action = [&] { return cmd_catalog_list(out); };
  });
  std::string show_name;
  bool show_json = false;
  auto* show = catalog_cmd->add_subcommand("show", "Print an algebra's bracket table");
  show->add_option("name", show_name, "Catalog name")->required();
  show->add_flag("--json", show_json, "Print the algebra file format");
  show->callback([&] { action = [&] { return cmd_catalog_show(show_name, show_json, out); }; });

  std::string validate_target;
  auto* validate_cmd = app.add_subcommand("validate", "Check antisymmetry and Jacobi");
  validate_cmd->add_option("target", validate_target, "Catalog name or algebra file")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(validate_target, out); }; });

  std::string bracket_name, gen_a, gen_b;
  auto* bracket_cmd = app.add_subcommand("bracket", "Bracket of two generators");
  bracket_cmd->add_option("name", bracket_name, "Catalog name or algebra file")->required();
  bracket_cmd->add_option("a", gen_a, "First generator")->required();
  bracket_cmd->add_option("b", gen_b, "Second generator")->required();
  bracket_cmd->callback([&] { action = [&] { return cmd_bracket(bracket_name, gen_a, gen_b, out); }; });

  auto* casimir_cmd = app.add_subcommand("casimir", "Casimir checks")->require_subcommand(1);
  std::string verify_name, verify_expr;
  bool verify_all = false;
  auto* verify = casimir_cmd->add_subcommand("verify", "Check that an element commutes with every generator");
  verify->add_option("name", verify_name, "Catalog name or algebra file")->required();
  auto* all_flag = verify->add_flag("--all", verify_all, "Check every catalog Casimir");
  verify->add_option("--expr", verify_expr, "Element in the expression grammar")->excludes(all_flag);
  verify->callback([&] { action = [&] { return cmd_casimir_verify(verify_name, verify_all, verify_expr, out); }; });
  std::string cc_name, cc_map, cc_expr, cc_power = "auto";
  auto* cc = casimir_cmd->add_subcommand("contract", "Contract a Casimir element");
  cc->add_option("name", cc_name, "Catalog name or algebra file")->required();
  cc->add_option("--map", cc_map, "Rescaling map file")->required();
  cc->add_option("--expr", cc_expr, "Element in the expression grammar")->required();
  cc->add_option("--power", cc_power, "Compensating eps power, or auto");
  cc->callback([&] { action = [&] { return cmd_casimir_contract(cc_name, cc_map, cc_expr, cc_power, out); }; });

  std::string contract_name, contract_map, against, rename_file;
  auto* contract_cmd = app.add_subcommand("contract", "Rescale and take eps -> 0");
  contract_cmd->add_option("name", contract_name, "Catalog name or algebra file")->required();
  contract_cmd->add_option("--map", contract_map, "Rescaling map file")->required();
  auto* against_opt = contract_cmd->add_option("--check-against", against, "Algebra to compare with");
  contract_cmd->add_option("--rename", rename_file, "Renaming file")->needs(against_opt);
  contract_cmd->callback(
      [&] { action = [&] { return cmd_contract(contract_name, contract_map, against, rename_file, out); }; });

  auto* limit_cmd = app.add_subcommand("limit", "Small-velocity limit checks")->require_subcommand(1);
  limit_cmd->add_subcommand("traditional", "Boost realization in the Heisenberg algebra")->callback([&] {
    action = [&] { return print_report(traditional_limit_report(), out); };
  });

  auto* mhi_cmd = app.add_subcommand("mhi", "Actual-valued observables")->require_subcommand(1);
  std::string group;
  auto* mhi_show = mhi_cmd->add_subcommand("show", "Observables of a group");
  mhi_show->add_option("group", group, "Group name")->required();
  mhi_show->callback([&] { action = [&] { return cmd_mhi_show(group, out); }; });
  long particles = 0;
  auto* nparticle = mhi_cmd->add_subcommand("nparticle", "Labels of an n-particle state");
  nparticle->add_option("n", particles, "Particle number")->required();
  nparticle->callback([&] { action = [&] { return cmd_mhi_nparticle(particles, out); }; });

  auto* report_cmd = app.add_subcommand("report", "Reproduction report")->require_subcommand(1);
  std::string format = "text", out_file, override_file;
  auto* paper = report_cmd->add_subcommand("paper", "Run every check in order");
  paper->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  paper->add_option("--out", out_file, "Write the report to a file");
  paper->add_option("--catalog-override", override_file, "Algebra file replacing the catalog entry of its name");
  paper->callback([&] { action = [&] { return cmd_report_paper(format, out_file, override_file, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!action) return kUsage;
  try {
    return action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DuplicateName& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace lieq
