#include "g2net/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "g2net/coeffs.hpp"
#include "g2net/diagram.hpp"
#include "g2net/errors.hpp"
#include "g2net/reduce.hpp"
#include "g2net/verify.hpp"

namespace g2net {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEvalError = 1;
constexpr int kExitParseError = 2;
constexpr int kExitVerifyFailure = 3;

Rational parseRationalFlag(const std::string& text) {
  Rational v = ratFromString(text);
  return v;
}

nlohmann::json statsToJson(const EvalStats& stats) {
  nlohmann::json j;
  j["crossing_resolutions"] = stats.crossingResolutions;
  j["rule_applications"] = {
      {"loop", stats.meshApplications[0]},    {"tadpole", stats.meshApplications[1]},
      {"bigon", stats.meshApplications[2]},   {"triangle", stats.meshApplications[3]},
      {"square", stats.meshApplications[4]},  {"pentagon", stats.meshApplications[5]}};
  j["cache_hits"] = stats.cacheHits;
  j["cache_misses"] = stats.cacheMisses;
  j["peak_term_count"] = stats.peakTermCount;
  return j;
}

void printStatsText(std::ostream& out, const EvalStats& stats) {
  out << "# stats: crossings resolved " << stats.crossingResolutions
      << ", rules [loop " << stats.meshApplications[0] << ", bigon "
      << stats.meshApplications[2] << ", triangle " << stats.meshApplications[3]
      << ", square " << stats.meshApplications[4] << ", pentagon "
      << stats.meshApplications[5] << "], cache " << stats.cacheHits << "/"
      << stats.cacheHits + stats.cacheMisses << " hits, peak terms "
      << stats.peakTermCount << "\n";
}

int evalCommand(const RunConfig& cfg, std::istream& in, std::ostream& out,
                std::ostream& err) {
  std::string text;
  if (cfg.inputPath == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(cfg.inputPath);
    if (!file) {
      err << "error: cannot open " << cfg.inputPath << "\n";
      return kExitParseError;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }

  Diagram diagram;
  try {
    diagram = parseNet(text);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  if (cfg.mirrorFlag) diagram = diagram.mirror();

  try {
    MemoCache cache;
    EvalStats stats;
    FieldValue value = evaluate(diagram, cache, &stats);
    if (cfg.rMode == RunConfig::RMode::kuperberg)
      value = value.substituteR(kuperbergR());
    else if (cfg.rMode == RunConfig::RMode::numeric)
      value = value.substituteR(FieldValue(cfg.rValue));
    if (cfg.qMode == RunConfig::QMode::numeric)
      value = value.substituteQ(FieldValue(cfg.qValue));
    if (cfg.json) {
      nlohmann::json j = nlohmann::json::parse(value.toJson());
      if (cfg.stats) {
        nlohmann::json wrapped;
        wrapped["value"] = j;
        wrapped["stats"] = statsToJson(stats);
        out << wrapped.dump() << "\n";
      } else {
        out << j.dump() << "\n";
      }
    } else {
      out << value.toString() << "\n";
      if (cfg.stats) printStatsText(out, stats);
    }
    return kExitOk;
  } catch (const EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kExitEvalError;
  }
}

int verifyCommand(std::ostream& out) {
  std::vector<CheckResult> results = runAllChecks();
  bool allPass = true;
  for (const CheckResult& result : results) {
    out << (result.pass ? "PASS" : "FAIL") << "  " << result.name;
    if (!result.pass && !result.detail.empty()) out << "  (" << result.detail << ")";
    out << "\n";
    allPass = allPass && result.pass;
  }
  out << (allPass ? "all checks passed" : "some checks FAILED") << "\n";
  return allPass ? kExitOk : kExitVerifyFailure;
}

int examplesCommand(bool json, std::ostream& out) {
  bool allMatch = true;
  nlohmann::json rows = nlohmann::json::array();
  MemoCache cache;
  for (const BundledExample& ex : bundledExamples()) {
    FieldValue got = evaluate(parseNet(ex.net), cache);
    bool match = got == ex.expected;
    allMatch = allMatch && match;
    if (json) {
      rows.push_back({{"name", ex.name},
                      {"computed", got.toString()},
                      {"expected", ex.expected.toString()},
                      {"match", match}});
    } else {
      out << (match ? "OK    " : "DIFF  ") << ex.name << "\n"
          << "      computed: " << got.toString() << "\n";
      if (!match) out << "      expected: " << ex.expected.toString() << "\n";
    }
  }
  if (json) out << rows.dump() << "\n";
  return allMatch ? kExitOk : kExitVerifyFailure;
}

int coeffsCommand(bool json, std::ostream& out) {
  const CoefficientTable& tab = coefficientTable();
  const std::vector<std::pair<std::string, const FieldValue*>> rows = {
      {"7c", &tab.sevenC},   {"alpha", &tab.alpha}, {"beta", &tab.beta},
      {"gamma", &tab.gamma}, {"delta", &tab.delta}, {"lambda", &tab.lambda},
      {"mu", &tab.mu},       {"rho", &tab.rho},     {"sigma", &tab.sigma},
      {"t", &tab.t},         {"g", &tab.g},         {"d", &tab.d}};
  if (json) {
    nlohmann::json j;
    for (const auto& [name, value] : rows)
      j[name] = nlohmann::json::parse(value->toJson());
    out << j.dump() << "\n";
  } else {
    for (const auto& [name, value] : rows)
      out << name << " = " << value->toString() << "\n";
  }
  return kExitOk;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"exact evaluator for the two-variable g2 invariant of framed "
               "links and closed 3-nets"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string rFlag, qFlag;
  bool rKuperberg = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a NET file");
  eval->add_option("file", cfg.inputPath, "NET file, or - for stdin")->required();
  eval->add_flag("--mirror", cfg.mirrorFlag, "mirror the diagram first");
  eval->add_flag("--r-kuperberg", rKuperberg,
                 "substitute r = -(q^2+q+1+q^-2+q^-3+q^-4)");
  eval->add_option("--r", rFlag, "substitute a rational value for r");
  eval->add_option("--q", qFlag, "substitute a rational value for q");
  eval->add_flag("--json", cfg.json, "JSON output");
  eval->add_flag("--stats", cfg.stats, "print evaluation statistics");

  CLI::App* verify = app.add_subcommand("verify", "run the internal oracle suite");
  CLI::App* examples =
      app.add_subcommand("examples", "evaluate the bundled reference nets");
  bool examplesJson = false;
  examples->add_flag("--json", examplesJson, "JSON output");
  CLI::App* coeffs = app.add_subcommand("coeffs", "print the coefficient table");
  bool coeffsJson = false;
  coeffs->add_flag("--json", coeffsJson, "JSON output");

  std::vector<const char*> argv;
  static const std::string kProg = "g2net";
  argv.push_back(kProg.c_str());
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitParseError;
  }

  try {
    if (eval->parsed()) {
      if (rKuperberg && !rFlag.empty()) {
        err << "usage error: --r and --r-kuperberg conflict\n";
        return kExitParseError;
      }
      if (rKuperberg) cfg.rMode = RunConfig::RMode::kuperberg;
      if (!rFlag.empty()) {
        cfg.rMode = RunConfig::RMode::numeric;
        cfg.rValue = parseRationalFlag(rFlag);
      }
      if (!qFlag.empty()) {
        cfg.qMode = RunConfig::QMode::numeric;
        cfg.qValue = parseRationalFlag(qFlag);
      }
      return evalCommand(cfg, in, out, err);
    }
    if (verify->parsed()) return verifyCommand(out);
    if (examples->parsed()) return examplesCommand(examplesJson, out);
    if (coeffs->parsed()) return coeffsCommand(coeffsJson, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kExitEvalError;
  }
  err << "usage error: no subcommand\n";
  return kExitParseError;
}

}  // namespace g2net
