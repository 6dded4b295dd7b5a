#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scoped/effects.hpp"
#include "scoped/em.hpp"
#include "scoped/errors.hpp"
#include "scoped/functorial.hpp"
#include "scoped/indexed.hpp"
#include "scoped/laws.hpp"
#include "scoped/prog.hpp"
#include "scoped/serialize.hpp"
#include "scoped/value.hpp"

namespace {

std::string readStdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin),
                     std::istreambuf_iterator<char>());
}

scoped::Value interpret(const scoped::Effect& effect, const std::string& kind,
                        const scoped::Prog& p) {
  if (kind == "functorial") return scoped::handle(effect.algebra, effect.gen, p);
  if (kind == "em") return scoped::handleEM(effect.em, effect.gen, p);
  if (kind == "indexed")
    return scoped::hfold(effect.indexed, 0, scoped::fmap(p, effect.gen)).value;
  if (kind == "oracle") return effect.oracle(p);
  throw scoped::ConfigError("unknown handler kind '" + kind +
                            "'; expected functorial, em, indexed, or oracle");
}

void writeFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw scoped::ConfigError("cannot open '" + path + "' for writing");
  out << text << '\n';
}

struct DemoArgs {
  std::string effect;
  std::string kind;
  std::string program;
  bool fromStdin = false;
  std::int64_t state = 0;
  bool projectState = false;
  std::string jsonPath;
};

int runDemo(const DemoArgs& args) {
  const scoped::Effect& effect = scoped::findEffect(args.effect);
  if (args.program.empty() && !args.fromStdin)
    throw scoped::ConfigError("demo needs --program NAME or --stdin-json");
  const scoped::Prog p = args.fromStdin
                             ? scoped::fromJson(effect.signature, readStdin())
                             : scoped::findDemo(effect, args.program);
  scoped::Value result = interpret(effect, args.kind, p);
  if (args.projectState) result = scoped::runState(result, static_cast<int>(args.state));
  std::printf("%s\n", result.str().c_str());
  if (!args.jsonPath.empty()) {
    nlohmann::ordered_json doc;
    doc["effect"] = effect.name;
    doc["kind"] = args.kind;
    if (!args.program.empty()) doc["program"] = args.program;
    doc["result"] =
        nlohmann::ordered_json::parse(scoped::valueToJson(result));
    writeFile(args.jsonPath, doc.dump(2));
  }
  return 0;
}

struct LawsArgs {
  std::string suite;
  scoped::SuiteConfig cfg;
  std::string jsonPath;
};

int runLaws(const LawsArgs& args) {
  scoped::SuiteConfig cfg = args.cfg;
  if (const char* env = std::getenv("SCOPED_EFFECTS_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw scoped::ConfigError(std::string("SCOPED_EFFECTS_SEED is not a number: ") + env);
    cfg.seed = v;
  }

  std::vector<scoped::LawReport> reports;
  if (args.suite == "all")
    reports = scoped::runAllSuites(cfg);
  else
    reports.push_back(scoped::runLawSuite(args.suite, cfg));

  bool failed = false;
  for (const scoped::LawReport& r : reports) {
    std::printf("%-20s %6d cases  %3zu failures  %6lld ms\n", r.suite.c_str(), r.cases,
                r.failures.size(), static_cast<long long>(r.millis));
    for (const scoped::LawFailure& f : r.failures) {
      std::printf("  %s (%s)\n    program:  %s\n    expected: %s\n    actual:   %s\n",
                  f.law.c_str(), f.algebras.c_str(), f.program.c_str(),
                  f.expected.c_str(), f.actual.c_str());
    }
    failed = failed || !r.passed();
  }
  if (!args.jsonPath.empty()) {
    writeFile(args.jsonPath, args.suite == "all" ? scoped::reportsToJson(reports, 2)
                                                 : scoped::reportToJson(reports.front(), 2));
  }
  return failed ? 1 : 0;
}

int runExport(const std::string& name) {
  for (const scoped::Effect& effect : scoped::effectRegistry()) {
    for (const auto& demo : effect.demos) {
      if (demo.first != name) continue;
      std::printf("%s\n", scoped::toJson(demo.second, 2).c_str());
      return 0;
    }
  }
  std::string known;
  for (const scoped::Effect& effect : scoped::effectRegistry()) {
    for (const auto& demo : effect.demos) {
      if (!known.empty()) known += ", ";
      known += demo.first;
    }
  }
  throw scoped::ConfigError("unknown demo program '" + name + "'; available: " + known);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scoped-effect programs: interpreters, translations, and law suites"};
  app.require_subcommand(1);

  DemoArgs demoArgs;
  CLI::App* demo =
      app.add_subcommand("demo", "Interpret a program with one handler discipline");
  demo->add_option("effect", demoArgs.effect, "registry effect name")->required();
  demo->add_option("kind", demoArgs.kind, "functorial, em, indexed, or oracle")
      ->required();
  CLI::Option* progOpt =
      demo->add_option("--program", demoArgs.program, "name of a demo program");
  CLI::Option* stdinOpt = demo->add_flag("--stdin-json", demoArgs.fromStdin,
                                         "read a canonical JSON program from stdin");
  progOpt->excludes(stdinOpt);
  CLI::Option* stateOpt = demo->add_option(
      "--state", demoArgs.state, "project a state-table result at this initial state");
  demo->add_option("--json", demoArgs.jsonPath, "also write a result document to PATH");

  LawsArgs lawsArgs;
  CLI::App* laws = app.add_subcommand("laws", "Run a law suite over generated corpora");
  std::string suiteHelp = "all";
  for (const std::string& name : scoped::lawSuiteNames()) suiteHelp += ", " + name;
  laws->add_option("suite", lawsArgs.suite, "one of: " + suiteHelp)->required();
  laws->add_option("--seed", lawsArgs.cfg.seed, "corpus seed");
  laws->add_option("--depth", lawsArgs.cfg.depth, "program nesting depth");
  laws->add_option("--cases", lawsArgs.cfg.cases, "programs per corpus");
  laws->add_option("--json", lawsArgs.jsonPath, "write the report document to PATH");

  std::string exportName;
  CLI::App* exportCmd =
      app.add_subcommand("export", "Print a demo program as canonical JSON");
  exportCmd->add_option("program", exportName, "name of a demo program")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (demo->parsed()) {
      demoArgs.projectState = stateOpt->count() > 0;
      return runDemo(demoArgs);
    }
    if (laws->parsed()) return runLaws(lawsArgs);
    if (exportCmd->parsed()) return runExport(exportName);
  } catch (const scoped::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
