// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 only when every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainendo/verify.hpp"
#include "cli.hpp"

namespace ce = chainendo;
using ce::Bounds;
using ce::ClaimId;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> lines;

  void require(bool ok, std::string what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + std::move(what));
  }
};

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

Bounds up_to(int n) {
  Bounds b;
  b.n_max = n;
  b.threads = worker_count();
  b.max_witnesses = 3;
  return b;
}

void expect_claim(Outcome& out, ClaimId claim, const Bounds& b) {
  const auto r = ce::verify(claim, b);
  std::ostringstream line;
  line << ce::to_string(claim) << " n<=" << b.n_max << ": searched=" << r.searched << " violations=" << r.violations;
  out.require(r.holds() && r.searched > 0, line.str());
  for (const auto& w : r.witnesses) {
    std::ostringstream text;
    ce::write_witness_text(text, w);
    out.lines.push_back(text.str());
  }
}

Outcome claims(std::initializer_list<ClaimId> ids, int n) {
  Outcome out;
  for (ClaimId id : ids) expect_claim(out, id, up_to(n));
  return out;
}

ce::Endo table(std::vector<int> v) { return ce::Endo::from_table(static_cast<int>(v.size()), v); }

Outcome maximality() {
  Outcome out = claims({ClaimId::TheoremMaximality}, 5);
  const ce::ProjectionSpec spec(ce::VertexSet::full(5), 1, 3);
  const auto r = ce::leibniz(spec, ce::Endo::identity(5), ce::parse_endo("(0)_1(2)_2(4)_2", 5));
  out.require(!r.holds && r.lhs == table({1, 2, 2, 3, 3}) && r.rhs == table({2, 2, 2, 4, 4}),
              "witness n=5 l=1 m=3: lhs " + ce::format_table(r.lhs) + " rhs " + ce::format_table(r.rhs));
  return out;
}

Outcome counting() {
  Outcome out;
  Bounds small = up_to(10);
  expect_claim(out, ClaimId::CountOn, small);
  expect_claim(out, ClaimId::CountN, small);
  expect_claim(out, ClaimId::PropSpCount, up_to(8));
  const auto on5 = ce::count(ce::SubsetSelector::over_nilpotent(5));
  const auto n5 = ce::count(ce::SubsetSelector::nilpotent(5));
  const auto s53 = ce::count(ce::SubsetSelector::top_section(5, 3));
  out.require(on5 == 42 && n5 == 14 && s53 == 15, "ON_5=" + std::to_string(on5) + " N_5=" + std::to_string(n5) +
                                                      " S_3(n=5)=" + std::to_string(s53));
  return out;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ce::cli::run_command(std::move(args), out, err);
  return {code, out.str()};
}

Outcome cli_conformance(const std::string& python, const std::string& validator, const std::string& schema) {
  Outcome out;
  const auto eval = run_cli({"eval", "--n", "5", "--endo", "(0)_2(2)_2(4)_1", "--point", "3"});
  out.require(eval.code == 0 && eval.out == "2\n", "eval prints 2");
  const auto proj = run_cli({"project", "--n", "5", "--A", "0,1,2,3,4", "--l", "1", "--m", "3", "--endo",
                             "(0)_1(1)_1(2)_1(3)_1(4)_1"});
  out.require(proj.code == 0 && proj.out == "(1)_2(2)_1(3)_2\n", "project prints (1)_2(2)_1(3)_2");
  const auto verify = run_cli({"verify", "--claim", "theorem-leibniz", "--n-max", "5", "--format", "json"});
  bool zero = false;
  try {
    zero = nlohmann::json::parse(verify.out).at("violations") == 0;
  } catch (const std::exception&) {
  }
  out.require(verify.code == 0 && zero, "verify theorem-leibniz exits 0 with violations=0");

  // Holding, violated and aggregated reports all go through the schema.
  const std::vector<std::vector<std::string>> reports = {
      {"verify", "--claim", "theorem-leibniz", "--n-max", "5", "--format", "json"},
      {"verify", "--claim", "top-section-intersection", "--n-max", "4", "--format", "json"},
      {"verify", "--claim", "all", "--n-max", "4", "--format", "json"},
  };
  const auto dir = std::filesystem::temp_directory_path() / ("chainendo-acceptance-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string command = python + " " + validator + " " + schema;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto path = dir / ("report" + std::to_string(i) + ".json");
    std::ofstream(path) << run_cli(reports[i]).out;
    command += " " + path.string();
  }
  const int status = std::system(command.c_str());
  std::filesystem::remove_all(dir);
  out.require(status == 0, "JSON reports validate against the schema");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  std::string python = "python3";
  std::string validator = CHAINENDO_VALIDATOR;
  std::string schema = CHAINENDO_SCHEMA;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_option("--python", python);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"prefix-min addition equals pointwise max, n<=6", [] { return claims({ClaimId::Lemma1}, 6); }},
      {"block composition equals pointwise composition, n<=6", [] { return claims({ClaimId::ComposeRuns}, 6); }},
      {"projection is additive, n<=6", [] { return claims({ClaimId::Lemma2}, 6); }},
      {"S, R, D closed; S and R disjoint, n<=6",
       [] { return claims({ClaimId::Lemma3, ClaimId::Lemma4, ClaimId::Lemma5}, 6); }},
      {"Leibniz rule on D, n<=6", [] { return claims({ClaimId::TheoremLeibniz}, 6); }},
      {"D is maximal, n<=5, plus fixed witness", maximality},
      {"two-step projection equals one-step, n<=6",
       [] { return claims({ClaimId::CompositionTwoStep, ClaimId::CompositionTopSection}, 6); }},
      {"nilpotents closed under projection, n<=7", [] { return claims({ClaimId::CorollaryNClosed}, 7); }},
      {"Catalan and p*C_p counts", counting},
      {"S_p set identities, n<=6",
       [] {
         return claims({ClaimId::S1Singleton, ClaimId::TopSectionInclusion, ClaimId::TopSectionDisjoint, ClaimId::TopSectionIntersection}, 6);
       }},
      {"semiring axioms, n<=5", [] { return claims({ClaimId::SemiringAxioms}, 5); }},
      {"CLI examples and report schema", [&] { return cli_conformance(python, validator, schema); }},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only && only != number) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.require(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (result.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << criteria[i].first << " ("
              << ms << " ms)\n";
    for (const auto& block : result.lines) {
      std::istringstream lines(block);
      for (std::string line; std::getline(lines, line);) std::cout << "      " << line << '\n';
    }
    all = all && result.pass;
  }
  return all ? 0 : 1;
}
