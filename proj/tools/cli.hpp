#pragma once

// Command-line front end: `chainendo <subcommand> [options]`.
//
// Exit codes: 0 when the command succeeds and every checked claim holds,
// 1 when a claim (or a Leibniz identity) is violated, 2 on usage errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainendo/report_json.hpp"

namespace chainendo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  int n = 0;
  std::string vertices;
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<int> p;
  std::string endo;
  std::string alpha;
  std::string beta;
  int point = 0;
  std::string claim;
  int n_min = 1;
  int n_max = 5;
  std::string set = "simplex";
  std::string format = "text";
  std::size_t max_witnesses = 10;
  std::optional<std::uint64_t> ceiling;
  unsigned threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--A expects comma-separated integers, got '" + text + "'");
    }
    if (used != item.size()) throw UsageError("--A expects comma-separated integers, got '" + text + "'");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("--A is empty");
  return out;
}

inline VertexSet vertex_set(const Options& o) {
  if (o.vertices.empty()) return VertexSet::full(o.n);
  return VertexSet(o.n, parse_vertex_list(o.vertices));
}

/// --ceiling, else CHAIN_ENDO_CEILING, else the library default.
inline std::uint64_t effective_ceiling(const Options& o) {
  if (o.ceiling) return *o.ceiling;
  if (const char* env = std::getenv("CHAIN_ENDO_CEILING")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("CHAIN_ENDO_CEILING is not an integer: ") + env);
    }
  }
  return kDefaultCeiling;
}

inline const std::string& endo_text(const Options& o, const std::string& primary) {
  if (!primary.empty()) return primary;
  if (!o.endo.empty()) return o.endo;
  throw UsageError("missing endomorphism argument");
}

inline ProjectionSpec projection_spec(const Options& o) {
  if (!o.lower || !o.upper) throw UsageError("--l and --m are required");
  return ProjectionSpec(vertex_set(o), *o.lower, *o.upper);
}

inline SubsetSelector selector(const Options& o) {
  const std::string& s = o.set;
  if (s == "simplex") return SubsetSelector::simplex(SimplexSpec(vertex_set(o)));
  if (s == "D-cap") return SubsetSelector::d_cap(SimplexSpec(vertex_set(o)));
  if (s == "S") return SubsetSelector::s(projection_spec(o));
  if (s == "R") return SubsetSelector::r(projection_spec(o));
  if (s == "D") return SubsetSelector::d(projection_spec(o));
  if (s == "ON") return SubsetSelector::over_nilpotent(o.n);
  if (s == "N") return SubsetSelector::nilpotent(o.n);
  if (s == "top") {
    if (!o.p) throw UsageError("--set top needs --p");
    return SubsetSelector::top_section(o.n, *o.p);
  }
  throw UsageError("unknown --set '" + s + "'");
}

inline nlohmann::json spec_json(const ProjectionSpec& spec) {
  return {{"n", spec.chain_size()}, {"A", spec.vertices().points()}, {"l", spec.lower()}, {"m", spec.upper()}};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Exact endomorphism calculus and claim verification on finite chains", "chainendo"};
    app.require_subcommand(1);
    app.fallthrough();

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an endomorphism at a chain point");
    chain_option(eval_cmd);
    eval_cmd->add_option("--endo", o_.endo, "Endomorphism, e.g. (0)_2(2)_2(4)_1")->required();
    eval_cmd->add_option("--point", o_.point, "Chain point t")->required();

    auto* add_cmd = app.add_subcommand("add", "Pointwise join alpha + beta");
    auto* compose_cmd = app.add_subcommand("compose", "Product alpha beta: t -> beta(alpha(t))");
    for (auto* cmd : {add_cmd, compose_cmd}) {
      chain_option(cmd);
      cmd->add_option("--alpha", o_.alpha)->required();
      cmd->add_option("--beta", o_.beta)->required();
    }

    auto* project_cmd = app.add_subcommand("project", "Project onto sigma{a_l..a_m}");
    auto* classify_cmd = app.add_subcommand("classify", "Print S/R/D membership");
    for (auto* cmd : {project_cmd, classify_cmd}) {
      projection_options(cmd);
      cmd->add_option("--endo,--alpha", o_.endo)->required();
    }

    auto* leibniz_cmd = app.add_subcommand("leibniz", "Evaluate both sides of the Leibniz rule");
    projection_options(leibniz_cmd);
    leibniz_cmd->add_option("--alpha", o_.alpha)->required();
    leibniz_cmd->add_option("--beta", o_.beta)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify a claim (or 'all')");
    verify_cmd->add_option("--claim", o_.claim, "Claim identifier or 'all'")->required();
    verify_cmd->add_option("--n-max", o_.n_max, "Largest chain size")->check(CLI::Range(1, 16));
    verify_cmd->add_option("--n-min", o_.n_min, "Smallest chain size")->check(CLI::Range(1, 16));
    verify_cmd->add_option("--A", o_.vertices, "Restrict to one vertex set");
    verify_cmd->add_option("--l", o_.lower);
    verify_cmd->add_option("--m", o_.upper);
    verify_cmd->add_option("--p", o_.p);
    verify_cmd->add_option("--max-witnesses", o_.max_witnesses);
    verify_cmd->add_option("--threads", o_.threads)->check(CLI::Range(1u, 256u));
    ceiling_option(verify_cmd);
    format_option(verify_cmd);

    auto* count_cmd = app.add_subcommand("count", "Count a subset by enumeration");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List a subset");
    for (auto* cmd : {count_cmd, enumerate_cmd}) {
      cmd->add_option("--n", o_.n, "Chain size")->required()->check(CLI::Range(1, kMaxChainSize));
      cmd->add_option("--A", o_.vertices, "Comma-separated vertices (default: whole chain)");
      cmd->add_option("--set", o_.set, "simplex | S | R | D | D-cap | ON | N | top");
      cmd->add_option("--l", o_.lower);
      cmd->add_option("--m", o_.upper);
      cmd->add_option("--p", o_.p);
      ceiling_option(cmd);
      format_option(cmd);
    }

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }

    try {
      if (eval_cmd->parsed()) return do_eval();
      if (add_cmd->parsed()) return do_binary(false);
      if (compose_cmd->parsed()) return do_binary(true);
      if (project_cmd->parsed()) return do_project();
      if (classify_cmd->parsed()) return do_classify();
      if (leibniz_cmd->parsed()) return do_leibniz();
      if (verify_cmd->parsed()) return do_verify();
      if (count_cmd->parsed()) return do_count();
      if (enumerate_cmd->parsed()) return do_enumerate();
    } catch (const UsageError& e) {
      err_ << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err_ << "usage error: no subcommand\n";
    return kExitUsage;
  }

 private:
  void chain_option(CLI::App* cmd) {
    cmd->add_option("--n", o_.n, "Chain size")->required()->check(CLI::Range(1, kMaxChainSize));
    format_option(cmd);
  }

  void projection_options(CLI::App* cmd) {
    chain_option(cmd);
    cmd->add_option("--A", o_.vertices, "Comma-separated vertices (default: whole chain)");
    cmd->add_option("--l", o_.lower, "Lower vertex index")->required();
    cmd->add_option("--m", o_.upper, "Upper vertex index")->required();
  }

  void format_option(CLI::App* cmd) {
    cmd->add_option("--format", o_.format)->check(CLI::IsMember({"text", "json"}));
  }

  void ceiling_option(CLI::App* cmd) {
    cmd->add_option("--ceiling", o_.ceiling, "Maximum estimated case count (env CHAIN_ENDO_CEILING)");
  }

  bool json() const { return o_.format == "json"; }

  void emit(const nlohmann::json& j) { out_ << j.dump(2) << '\n'; }

  int do_eval() {
    const Endo alpha = parse_endo(o_.endo, o_.n);
    const int value = eval(alpha, o_.point);
    if (json()) {
      emit({{"n", o_.n}, {"endo", endo_json(alpha)}, {"point", o_.point}, {"value", value}});
    } else {
      out_ << value << '\n';
    }
    return kExitOk;
  }

  int do_binary(bool product) {
    const Endo a = parse_endo(o_.alpha, o_.n);
    const Endo b = parse_endo(o_.beta, o_.n);
    const Endo result = product ? compose(a, b) : add(a, b);
    if (json()) {
      emit({{"n", o_.n}, {"alpha", endo_json(a)}, {"beta", endo_json(b)}, {"result", endo_json(result)}});
    } else {
      out_ << format_runs(result) << '\n';
    }
    return kExitOk;
  }

  int do_project() {
    const ProjectionSpec spec = projection_spec(o_);
    const Endo alpha = parse_endo(endo_text(o_, o_.alpha), o_.n);
    const Endo result = project(spec, alpha);
    if (json()) {
      emit({{"spec", spec_json(spec)}, {"endo", endo_json(alpha)}, {"result", endo_json(result)}});
    } else {
      out_ << format_runs(result) << '\n';
    }
    return kExitOk;
  }

  int do_classify() {
    const ProjectionSpec spec = projection_spec(o_);
    const Endo alpha = parse_endo(endo_text(o_, o_.alpha), o_.n);
    const Membership m = classify(spec, alpha);
    if (json()) {
      emit({{"spec", spec_json(spec)}, {"endo", endo_json(alpha)}, {"S", m.s}, {"R", m.r}, {"D", m.d()}});
    } else {
      auto yn = [](bool b) { return b ? "yes" : "no"; };
      out_ << "S: " << yn(m.s) << "\nR: " << yn(m.r) << "\nD: " << yn(m.d()) << '\n';
    }
    return kExitOk;
  }

  int do_leibniz() {
    const ProjectionSpec spec = projection_spec(o_);
    const Endo a = parse_endo(o_.alpha, o_.n);
    const Endo b = parse_endo(o_.beta, o_.n);
    const LeibnizOutcome result = leibniz(spec, a, b);
    if (json()) {
      emit({{"spec", spec_json(spec)},
            {"alpha", endo_json(a)},
            {"beta", endo_json(b)},
            {"lhs", endo_json(result.lhs)},
            {"rhs", endo_json(result.rhs)},
            {"holds", result.holds}});
    } else {
      out_ << "d(ab)          = " << format_table(result.lhs) << "  " << format_runs(result.lhs) << '\n'
           << "d(a)b + a d(b) = " << format_table(result.rhs) << "  " << format_runs(result.rhs) << '\n'
           << "holds: " << (result.holds ? "yes" : "no") << '\n';
    }
    return result.holds ? kExitOk : kExitViolated;
  }

  Bounds bounds() const {
    Bounds b;
    b.n_min = o_.n_min;
    b.n_max = o_.n_max;
    if (!o_.vertices.empty()) b.vertices = parse_vertex_list(o_.vertices);
    b.lower = o_.lower;
    b.upper = o_.upper;
    b.p = o_.p;
    b.max_witnesses = o_.max_witnesses;
    b.ceiling = effective_ceiling(o_);
    b.threads = o_.threads;
    return b;
  }

  int do_verify() {
    const Bounds b = bounds();
    if (b.n_min > b.n_max) throw UsageError("--n-min exceeds --n-max");
    std::vector<ClaimId> claims;
    if (o_.claim == "all") {
      claims.assign(kAllClaims.begin(), kAllClaims.end());
    } else {
      try {
        claims.push_back(claim_from_string(o_.claim));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }

    std::vector<VerificationReport> reports;
    for (ClaimId c : claims) reports.push_back(verify(c, b));
    const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds(); });

    if (reports.size() == 1) {
      if (json()) {
        emit(to_json(reports.front()));
      } else {
        write_text(out_, reports.front());
      }
    } else if (json()) {
      emit(aggregate_json(reports, b));
    } else {
      for (const auto& r : reports) write_text(out_, r);
      out_ << "all: " << (all_hold ? "HOLDS" : "VIOLATED") << '\n';
    }
    return all_hold ? kExitOk : kExitViolated;
  }

  static nlohmann::json aggregate_json(const std::vector<VerificationReport>& reports, const Bounds& b) {
    std::uint64_t searched = 0, violations = 0;
    long long elapsed = 0;
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& r : reports) {
      searched += r.searched;
      violations += r.violations;
      elapsed += r.elapsed.count();
      for (const Witness& w : r.witnesses) {
        if (witnesses.size() < b.max_witnesses) witnesses.push_back(to_json(w));
      }
      parts.push_back(to_json(r));
    }
    return {{"claim", "all"},     {"holds", violations == 0}, {"searched", searched},
            {"violations", violations}, {"witnesses", witnesses}, {"elapsed_ms", elapsed},
            {"bounds", to_json(b)}, {"notes", nlohmann::json::array()}, {"reports", parts}};
  }

  int do_count() {
    const SubsetSelector sel = selector(o_);
    const std::uint64_t total = count(sel, effective_ceiling(o_));
    if (json()) {
      emit({{"set", o_.set}, {"n", o_.n}, {"count", total}});
    } else {
      out_ << total << '\n';
    }
    return kExitOk;
  }

  int do_enumerate() {
    const SubsetSelector sel = selector(o_);
    const auto members = enumerate_subset(sel, effective_ceiling(o_));
    if (json()) {
      nlohmann::json list = nlohmann::json::array();
      for (const Endo& e : members) list.push_back(endo_json(e));
      emit({{"set", o_.set}, {"n", o_.n}, {"count", members.size()}, {"members", list}});
    } else {
      for (const Endo& e : members) out_ << format_runs(e) << '\n';
    }
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
};

/// `args` excludes the program name.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(std::move(args));
}

}  // namespace chainendo::cli
