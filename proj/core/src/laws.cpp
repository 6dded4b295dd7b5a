#include "scoped/laws.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scoped/effects.hpp"
#include "scoped/em.hpp"
#include "scoped/errors.hpp"
#include "scoped/functorial.hpp"
#include "scoped/generate.hpp"
#include "scoped/indexed.hpp"
#include "scoped/oracles.hpp"
#include "scoped/prog.hpp"
#include "scoped/serialize.hpp"
#include "scoped/translate.hpp"
#include "scoped/value.hpp"

namespace scoped {

namespace {

constexpr std::size_t kMaxRecordedFailures = 8;

std::uint64_t hashTag(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Every corpus gets its own stream so adding a suite never reshuffles the
// programs another suite sees under the same seed.
std::uint64_t corpusSeed(const SuiteConfig& cfg, std::string_view label) {
  Rng rng(cfg.seed ^ hashTag(label));
  return rng.next();
}

GenConfig corpusConfig(const SuiteConfig& cfg, const std::string& effectName,
                       const std::string& label) {
  GenConfig g;
  g.signature = effectName;
  g.maxDepth = cfg.depth;
  g.seed = corpusSeed(cfg, label);
  g.corpusSize = cfg.cases;
  return g;
}

struct Recorder {
  LawReport report;

  explicit Recorder(std::string suite) { report.suite = std::move(suite); }

  void tally() { ++report.cases; }
  bool saturated() const { return report.failures.size() >= kMaxRecordedFailures; }
};

/// Evaluates both sides of a law; expected first, actual second.
using PairEval = std::function<std::pair<Value, Value>(const Prog&)>;

struct Outcome {
  bool ok = false;
  std::string expected;
  std::string actual;
};

Outcome evalOnce(const PairEval& eval, const Prog& p) {
  try {
    const std::pair<Value, Value> sides = eval(p);
    if (sides.first == sides.second) return {true, "", ""};
    return {false, valueToJson(sides.first), valueToJson(sides.second)};
  } catch (const std::exception& e) {
    return {false, "", e.what()};
  }
}

void checkLaw(Recorder& rec, std::string law, std::string algebras, const Value& leaf0,
              const Prog& p, const PairEval& eval) {
  rec.tally();
  if (evalOnce(eval, p).ok) return;
  if (rec.saturated()) return;
  const Prog shrunk = shrinkProgram(
      p, [&eval](const Prog& q) { return !evalOnce(eval, q).ok; }, leaf0);
  Outcome out = evalOnce(eval, shrunk);
  rec.report.failures.push_back({std::move(law), std::move(algebras), toJson(shrunk),
                                 std::move(out.expected), std::move(out.actual)});
}

using Cont = std::function<Prog(const Value&)>;

/// Draws a continuation for the monad laws: the unit, a constant, an
/// operation call resuming with the bound value, or a scope around it.
Cont pickContinuation(const Effect& effect, Rng& rng) {
  const Signature* sig = &effect.signature;
  const Value constant = effect.leafDomain[rng.below(effect.leafDomain.size())];
  const std::uint64_t roll = rng.below(4);
  if (roll == 0) return [](const Value& x) { return ret(x); };
  if (roll == 1) return [constant](const Value&) { return ret(constant); };
  if (roll == 2 && !sig->ops().empty()) {
    const AlgOp& chosen = sig->ops()[rng.below(sig->ops().size())];
    const Value payload = chosen.payloads[rng.below(chosen.payloads.size())];
    const std::string tag = chosen.tag;
    const std::size_t arity = static_cast<std::size_t>(chosen.arity(payload));
    return [sig, tag, payload, arity](const Value& x) {
      return op(*sig, tag, payload, std::vector<Prog>(arity, ret(x)));
    };
  }
  if (!sig->scopes().empty()) {
    const ScopeOp& chosen = sig->scopes()[rng.below(sig->scopes().size())];
    const Value payload = chosen.payloads[rng.below(chosen.payloads.size())];
    const std::string tag = chosen.tag;
    const std::size_t count = static_cast<std::size_t>(chosen.scopeCount(payload));
    return [sig, tag, payload, count](const Value& x) {
      return sc(*sig, tag, payload, std::vector<Prog>(count, ret(x)));
    };
  }
  return [](const Value& x) { return ret(x); };
}

// Return/bind laws as program identities, one signature each (effects
// sharing a signature contribute one corpus). Both sides are compared as
// trees, so the laws hold for every interpretation at once.
void monadSuite(Recorder& rec, const SuiteConfig& cfg) {
  std::vector<std::string> covered;
  for (const Effect& effect : effectRegistry()) {
    const std::string& sigName = effect.signature.name();
    if (std::find(covered.begin(), covered.end(), sigName) != covered.end()) continue;
    covered.push_back(sigName);

    const std::vector<Prog> corpus =
        genPrograms(corpusConfig(cfg, effect.name, "monad/" + effect.name));
    Rng rng(corpusSeed(cfg, "monad-continuations/" + effect.name));
    const Value leaf0 = effect.leafDomain.front();
    for (const Prog& p : corpus) {
      const Cont k = pickContinuation(effect, rng);
      const Cont h = pickContinuation(effect, rng);
      const Value a = effect.leafDomain[rng.below(effect.leafDomain.size())];

      checkLaw(rec, "left-identity", sigName, leaf0, ret(a), [k](const Prog& q) {
        const Prog lhs = scoped::bind(q, k);
        const Prog rhs =
            q.node().kind == ProgNode::Kind::Return ? k(q.node().value) : lhs;
        return std::pair<Value, Value>(Value::program(rhs), Value::program(lhs));
      });
      checkLaw(rec, "right-identity", sigName, leaf0, p, [](const Prog& q) {
        const Prog lhs = scoped::bind(q, [](const Value& x) { return ret(x); });
        return std::pair<Value, Value>(Value::program(q), Value::program(lhs));
      });
      checkLaw(rec, "associativity", sigName, leaf0, p, [k, h](const Prog& q) {
        const Prog lhs = scoped::bind(scoped::bind(q, k), h);
        const Prog rhs = scoped::bind(q, [k, h](const Value& x) { return scoped::bind(k(x), h); });
        return std::pair<Value, Value>(Value::program(rhs), Value::program(lhs));
      });
    }
  }
}

// Each translation must interpret every program exactly as its source
// algebra does, across the whole registry.
void preservationSuite(Recorder& rec, const SuiteConfig& cfg) {
  for (const Effect& effect : effectRegistry()) {
    const FunctorialAlgebra viaEM = emToFunctorial(effect.em);
    const EMAlg viaFunctorial = functorialToEM(effect.algebra);
    const IxAlg viaIndexed = functorialToIndexed(effect.algebra);
    const EMAlg viaIndexedEM = indexedToEM(effect.indexed);
    const std::vector<Prog> corpus =
        genPrograms(corpusConfig(cfg, effect.name, "preservation/" + effect.name));
    const Value leaf0 = effect.leafDomain.front();
    for (const Prog& p : corpus) {
      checkLaw(rec, "em-to-functorial", viaEM.name, leaf0, p, [&](const Prog& q) {
        return std::pair<Value, Value>(handleEM(effect.em, effect.gen, q),
                                       handle(viaEM, effect.gen, q));
      });
      checkLaw(rec, "functorial-to-em", viaFunctorial.name, leaf0, p, [&](const Prog& q) {
        return std::pair<Value, Value>(handle(effect.algebra, effect.gen, q),
                                       handleEM(viaFunctorial, effect.gen, q));
      });
      checkLaw(rec, "functorial-to-indexed", viaIndexed.name, leaf0, p,
               [&](const Prog& q) {
                 return std::pair<Value, Value>(
                     handle(effect.algebra, effect.gen, q),
                     hfold(viaIndexed, 0, fmap(q, effect.gen)).value);
               });
      checkLaw(rec, "indexed-to-em", viaIndexedEM.name, leaf0, p, [&](const Prog& q) {
        return std::pair<Value, Value>(hfold(effect.indexed, 0, fmap(q, effect.gen)).value,
                                       handleEM(viaIndexedEM, effect.gen, q));
      });
    }
  }
}

// Folding results away: the length (or emptiness) of the full result list
// must equal interpreting once with the base that never builds the list.
// The fused bases are first pinned to the reference oracles on their own.
void fusionSuite(Recorder& rec, const SuiteConfig& cfg) {
  const Effect& effect = findEffect("nondet");
  const FunctorialAlgebra full = ndetE();
  const FunctorialAlgebra count = ndetCount();
  const FunctorialAlgebra empty = ndetIsEmpty();

  std::vector<std::pair<std::string, UnaryFn>> gens;
  gens.emplace_back("singleton", [](const Value& v) { return Value::list({v}); });
  gens.emplace_back("duplicate", [](const Value& v) { return Value::list({v, v}); });
  gens.emplace_back("none", [](const Value&) { return Value::list({}); });

  const std::vector<Prog> corpus = genPrograms(corpusConfig(cfg, effect.name, "fusion"));
  const Value leaf0 = effect.leafDomain.front();
  for (const Prog& p : corpus) {
    checkLaw(rec, "count-base-vs-oracle", count.name, leaf0, p, [&](const Prog& q) {
      return std::pair<Value, Value>(
          oracleNondetCount(q),
          handle(count, [](const Value&) { return intV(1); }, q));
    });
    checkLaw(rec, "empty-base-vs-oracle", empty.name, leaf0, p, [&](const Prog& q) {
      return std::pair<Value, Value>(
          oracleNondetIsEmpty(q),
          handle(empty, [](const Value&) { return Value::boolean(false); }, q));
    });
    for (const std::pair<std::string, UnaryFn>& namedGen : gens) {
      const std::string& genName = namedGen.first;
      const UnaryFn& g = namedGen.second;
      checkLaw(rec, "length-fusion/" + genName, full.name + "+" + count.name, leaf0, p,
               [&](const Prog& q) {
                 const Value whole = handle(full, g, q);
                 const Value fused = handle(
                     count,
                     [&g](const Value& v) {
                       return intV(static_cast<std::int64_t>(g(v).elements().size()));
                     },
                     q);
                 return std::pair<Value, Value>(
                     intV(static_cast<std::int64_t>(whole.elements().size())), fused);
               });
      checkLaw(rec, "emptiness-fusion/" + genName, full.name + "+" + empty.name, leaf0, p,
               [&](const Prog& q) {
                 const Value whole = handle(full, g, q);
                 const Value fused = handle(
                     empty,
                     [&g](const Value& v) { return Value::boolean(g(v).elements().empty()); },
                     q);
                 return std::pair<Value, Value>(Value::boolean(whole.elements().empty()),
                                                fused);
               });
    }
  }
}

// Folding a generator-premapped program with the unrolled indexed family at
// level 0 must agree with the one-pass handler whose generator is identity.
void hybridFoldSuite(Recorder& rec, const SuiteConfig& cfg) {
  const UnaryFn keep = [](const Value& v) { return v; };
  for (const Effect& effect : effectRegistry()) {
    const IxAlg unrolled = functorialToIndexed(effect.algebra);
    const std::vector<Prog> corpus =
        genPrograms(corpusConfig(cfg, effect.name, "hybrid-fold/" + effect.name));
    const Value leaf0 = effect.leafDomain.front();
    for (const Prog& p : corpus) {
      checkLaw(rec, "hybrid-fold", unrolled.name, leaf0, p, [&](const Prog& q) {
        const Prog premapped = fmap(q, effect.gen);
        return std::pair<Value, Value>(handle(effect.algebra, keep, premapped),
                                       hfold(unrolled, 0, premapped).value);
      });
    }
  }
}

// All three disciplines against the per-effect reference interpreter.
void oracleEquivalenceSuite(Recorder& rec, const SuiteConfig& cfg) {
  for (const Effect& effect : effectRegistry()) {
    const std::vector<Prog> corpus =
        genPrograms(corpusConfig(cfg, effect.name, "oracle/" + effect.name));
    const Value leaf0 = effect.leafDomain.front();
    for (const Prog& p : corpus) {
      checkLaw(rec, "oracle-vs-functorial", effect.algebra.name, leaf0, p,
               [&](const Prog& q) {
                 return std::pair<Value, Value>(effect.oracle(q),
                                                handle(effect.algebra, effect.gen, q));
               });
      checkLaw(rec, "oracle-vs-em", effect.em.name, leaf0, p, [&](const Prog& q) {
        return std::pair<Value, Value>(effect.oracle(q),
                                       handleEM(effect.em, effect.gen, q));
      });
      checkLaw(rec, "oracle-vs-indexed", effect.indexed.name, leaf0, p,
               [&](const Prog& q) {
                 return std::pair<Value, Value>(
                     effect.oracle(q), hfold(effect.indexed, 0, fmap(q, effect.gen)).value);
               });
    }
  }
}

// Functor laws for every shipped carrier, and naturality of the fold:
// mapping after folding equals folding the premapped program.
void naturalitySuite(Recorder& rec, const SuiteConfig& cfg) {
  const UnaryFn keep = [](const Value& v) { return v; };
  const UnaryFn wrapRecord = [](const Value& v) { return Value::record("tagged", {v}); };
  const UnaryFn wrapList = [](const Value& v) { return Value::list({v}); };

  for (const Effect& effect : effectRegistry()) {
    const EndoAlg& endo = effect.algebra.endo;
    const std::vector<Prog> corpus =
        genPrograms(corpusConfig(cfg, effect.name, "naturality/" + effect.name));
    const Value leaf0 = effect.leafDomain.front();
    for (const Prog& p : corpus) {
      checkLaw(rec, "fold-naturality", endo.name, leaf0, p, [&](const Prog& q) {
        return std::pair<Value, Value>(endo.carrier.map(hcata(endo, q), wrapRecord),
                                       hcata(endo, fmap(q, wrapRecord)));
      });
      checkLaw(rec, "map-identity", endo.carrier.name, leaf0, p, [&](const Prog& q) {
        const Value c = hcata(endo, q);
        return std::pair<Value, Value>(c, endo.carrier.map(c, keep));
      });
      checkLaw(rec, "map-composition", endo.carrier.name, leaf0, p, [&](const Prog& q) {
        const Value c = hcata(endo, q);
        const Value lhs = endo.carrier.map(
            c, [&](const Value& x) { return wrapRecord(wrapList(x)); });
        const Value rhs = endo.carrier.map(endo.carrier.map(c, wrapList), wrapRecord);
        return std::pair<Value, Value>(lhs, rhs);
      });
    }
  }

  // The free carrier is a functor too; its map is fmap on boxed programs.
  const Carrier programs = syntaxCarrier();
  const Effect& nondet = findEffect("nondet");
  const std::vector<Prog> corpus =
      genPrograms(corpusConfig(cfg, nondet.name, "naturality/programs"));
  const Value leaf0 = nondet.leafDomain.front();
  for (const Prog& p : corpus) {
    checkLaw(rec, "map-identity", programs.name, leaf0, p, [&](const Prog& q) {
      const Value c = Value::program(q);
      return std::pair<Value, Value>(c, programs.map(c, keep));
    });
    checkLaw(rec, "map-composition", programs.name, leaf0, p, [&](const Prog& q) {
      const Value c = Value::program(q);
      const Value lhs =
          programs.map(c, [&](const Value& x) { return wrapRecord(wrapList(x)); });
      const Value rhs = programs.map(programs.map(c, wrapList), wrapRecord);
      return std::pair<Value, Value>(lhs, rhs);
    });
  }
}

struct SuiteEntry {
  const char* name;
  void (*run)(Recorder&, const SuiteConfig&);
};

constexpr SuiteEntry kSuites[] = {
    {"monad", monadSuite},
    {"preservation", preservationSuite},
    {"fusion", fusionSuite},
    {"hybrid-fold", hybridFoldSuite},
    {"oracle-equivalence", oracleEquivalenceSuite},
    {"naturality", naturalitySuite},
};

void validateSuiteConfig(const SuiteConfig& cfg) {
  if (cfg.depth < 0 || cfg.depth > 16) {
    throw ConfigError("law suite depth must be in [0, 16], got " +
                      std::to_string(cfg.depth));
  }
  if (cfg.cases < 1 || cfg.cases > 1000000) {
    throw ConfigError("law suite cases must be in [1, 1000000], got " +
                      std::to_string(cfg.cases));
  }
}

// Failure payloads hold JSON text when a side evaluated, or a bare message
// when it threw; embed whichever parses.
nlohmann::ordered_json embedDocument(const std::string& text) {
  if (text.empty()) return nullptr;
  nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(text, nullptr, false);
  if (parsed.is_discarded()) return text;
  return parsed;
}

nlohmann::ordered_json reportJson(const LawReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const LawFailure& f : report.failures) {
    nlohmann::ordered_json entry;
    entry["law"] = f.law;
    entry["algebras"] = f.algebras;
    entry["program"] = embedDocument(f.program);
    entry["expected"] = embedDocument(f.expected);
    entry["actual"] = embedDocument(f.actual);
    failures.push_back(std::move(entry));
  }
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["cases"] = report.cases;
  j["failures"] = std::move(failures);
  j["millis"] = report.millis;
  return j;
}

}  // namespace

const std::vector<std::string>& lawSuiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& entry : kSuites) out.emplace_back(entry.name);
    return out;
  }();
  return names;
}

LawReport runLawSuite(const std::string& suite, const SuiteConfig& cfg) {
  validateSuiteConfig(cfg);
  for (const SuiteEntry& entry : kSuites) {
    if (suite != entry.name) continue;
    const auto start = std::chrono::steady_clock::now();
    Recorder rec(suite);
    entry.run(rec, cfg);
    rec.report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return std::move(rec.report);
  }
  std::string known;
  for (const std::string& name : lawSuiteNames()) {
    if (!known.empty()) known += ", ";
    known += name;
  }
  throw ConfigError("unknown law suite '" + suite + "'; available: " + known);
}

std::vector<LawReport> runAllSuites(const SuiteConfig& cfg) {
  std::vector<LawReport> reports;
  for (const std::string& name : lawSuiteNames()) reports.push_back(runLawSuite(name, cfg));
  return reports;
}

std::string reportToJson(const LawReport& report, int indent) {
  return reportJson(report).dump(indent);
}

std::string reportsToJson(const std::vector<LawReport>& reports, int indent) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const LawReport& r : reports) arr.push_back(reportJson(r));
  return arr.dump(indent);
}

}  // namespace scoped
