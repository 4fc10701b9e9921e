#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lieq/algebra_io.hpp"
#include "lieq/catalog.hpp"
#include "lieq/cli.hpp"
#include "oracles.hpp"

using namespace lieq;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* file) { return std::string(LIEQ_DATA_DIR) + "/" + file; }

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

/// galilei_central with [KGx,Px] = 2i M instead of i M.
std::string corrupted_galilei() {
  Json j = algebra_to_json(catalog("galilei_central"));
  for (auto& b : j["brackets"]) {
    if (b["a"] == "KGx" && b["b"] == "Px") b["result"][0]["coeff"] = "2*i";
  }
  return write_temp("corrupt_galilei.json", j.dump(2));
}

}  // namespace

TEST(Cli, CatalogCommands) {
  CliRun list = run({"catalog", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("full_nonrelativistic (12)"), std::string::npos);
  CliRun show = run({"catalog", "show", "heisenberg3"});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("[Xx,Px] = i*Z"), std::string::npos);
  CliRun json = run({"catalog", "show", "u1", "--json"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out, export_algebra(catalog("u1")));
  EXPECT_EQ(run({"catalog", "show", "nope"}).code, 2);
}

TEST(Cli, Validate) {
  EXPECT_EQ(run({"validate", "galilei_central"}).code, 0);
  CliRun bad = run({"validate", corrupted_galilei()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("jacobi"), std::string::npos);
  std::string garbage = write_temp("garbage.json", "{ not json");
  CliRun parse = run({"validate", garbage});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find("parse error"), std::string::npos);
}

TEST(Cli, Bracket) {
  CliRun r = run({"bracket", "galilei_central", "KGx", "Px"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[KGx,Px] = i*M\n");
  EXPECT_EQ(run({"bracket", "galilei_central", "KGx", "Foo"}).code, 2);
}

TEST(Cli, CasimirVerify) {
  EXPECT_EQ(run({"casimir", "verify", "poincare", "--expr", "H^2 - Px*Px - Py*Py - Pz*Pz"}).code, 0);
  CliRun fail = run({"casimir", "verify", "galilei_central", "--expr", "H"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("-i*Px"), std::string::npos);
  CliRun all = run({"casimir", "verify", "galilei_central", "--all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("C4^G (ordering: corrected)"), std::string::npos);
  EXPECT_EQ(run({"casimir", "verify", "poincare", "--expr", "H^"}).code, 2);
  EXPECT_EQ(run({"casimir", "verify", "poincare"}).code, 2);
  EXPECT_EQ(run({"casimir", "verify", "poincare", "--all", "--expr", "H"}).code, 2);
}

TEST(Cli, Contract) {
  CliRun r = run({"contract", "poincare_trivial_ext", "--map", data("standard-map.json"), "--check-against",
               "galilei_central", "--rename", data("standard-rename.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("pass: contracted table equals galilei_central"), std::string::npos);
  CliRun wrong = run({"contract", "poincare_trivial_ext", "--map", data("standard-map.json"), "--check-against",
                   "galilei_central"});
  EXPECT_EQ(wrong.code, 1);
  std::string divergent = write_temp("div.json", R"({"Hb":0,"Jx":0,"Jy":0,"Jz":0,"KPx":1,"KPy":1,"KPz":1,
                                                      "Px":1,"Py":1,"Pz":1,"M":3})");
  CliRun pole = run({"contract", "poincare_trivial_ext_hbar", "--map", divergent});
  EXPECT_EQ(pole.code, 1);
  EXPECT_NE(pole.out.find("eps^-1"), std::string::npos);
  EXPECT_EQ(run({"contract", "poincare", "--map", "/nonexistent/map.json"}).code, 2);
}

TEST(Cli, CasimirContract) {
  CliRun c2 = run({"casimir", "contract", "poincare_trivial_ext_hbar", "--map", data("standard-map.json"), "--expr",
                "-Px*Px - Py*Py - Pz*Pz + Hb^2 + M^2 + 2*Hb*M"});
  EXPECT_EQ(c2.code, 0);
  EXPECT_NE(c2.out.find("power 4\nlimit M^2"), std::string::npos);
  CliRun div = run({"casimir", "contract", "poincare_trivial_ext_hbar", "--map", data("standard-map.json"), "--expr",
                 "-Px*Px - Py*Py - Pz*Pz + Hb^2 + M^2 + 2*Hb*M", "--power", "2"});
  EXPECT_EQ(div.code, 1);
  EXPECT_NE(div.out.find("eps^-2"), std::string::npos);
  CliRun h_basis = run({"casimir", "contract", "poincare_trivial_ext", "--map", data("standard-map.json"), "--expr",
                     "H^2 - Px*Px - Py*Py - Pz*Pz"});
  EXPECT_EQ(h_basis.code, 0);
  EXPECT_NE(h_basis.out.find("limit M^2"), std::string::npos);
  CliRun zero = run({"casimir", "contract", "poincare_trivial_ext_hbar", "--map", data("standard-map.json"), "--expr",
                  "M", "--power", "5"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_NE(zero.out.find("warn"), std::string::npos);
  EXPECT_EQ(run({"casimir", "contract", "poincare_trivial_ext_hbar", "--map", data("standard-map.json"), "--expr",
                 "M", "--power", "two"})
                .code,
            2);
}

TEST(Cli, LimitAndMhi) {
  CliRun t = run({"limit", "traditional"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("5 passed, 0 failed"), std::string::npos);
  CliRun show = run({"mhi", "show", "galilei_central"});
  EXPECT_EQ(show.code, 0);
  EXPECT_NE(show.out.find("actual-valued: M W S^2"), std::string::npos);
  EXPECT_EQ(run({"mhi", "show", "poincare"}).code, 2);
  CliRun n = run({"mhi", "nparticle", "3"});
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("Mass = (C2^PE)^(1/2)*N -> 3*m0"), std::string::npos);
  EXPECT_EQ(run({"mhi", "nparticle", "0"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"bracket", "poincare"}).code, 2);
  EXPECT_EQ(run({"report", "paper", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ReportPaperText) {
  CliRun r = run({"report", "paper"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
}

TEST(Cli, ReportPaperJsonIsDeterministic) {
  std::string a = testing::TempDir() + "report_a.json";
  std::string b = testing::TempDir() + "report_b.json";
  ASSERT_EQ(run({"report", "paper", "--format", "json", "--out", a}).code, 0);
  ASSERT_EQ(run({"report", "paper", "--format", "json", "--out", b}).code, 0);
  Json ja = Json::parse(read_file(a));
  Json jb = Json::parse(read_file(b));
  EXPECT_TRUE(ja["summary"]["all_pass"].get<bool>());
  EXPECT_TRUE(ja["checks"][0].contains("elapsed_ms"));
  oracle::strip_timing(ja);
  oracle::strip_timing(jb);
  EXPECT_EQ(ja.dump(2), jb.dump(2));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(Cli, FaultInjectionNamesTheBracket) {
  std::string out = testing::TempDir() + "report_fault.json";
  CliRun r = run({"report", "paper", "--format", "json", "--out", out, "--catalog-override", corrupted_galilei()});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(read_file(out));
  EXPECT_FALSE(j["summary"]["all_pass"].get<bool>());
  bool named = false;
  for (const auto& c : j["checks"]) {
    if (c["status"] == "fail" && c["detail"].get<std::string>().find("[KGx,Px]") != std::string::npos) named = true;
  }
  EXPECT_TRUE(named);
  std::remove(out.c_str());

  std::string stranger = write_temp("stranger.json", R"({"name": "sl2", "symbols": [], "generators": ["E"]})");
  EXPECT_EQ(run({"report", "paper", "--catalog-override", stranger}).code, 2);
}
