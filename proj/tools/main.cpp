#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sadf/adf.hpp"
#include "sadf/af.hpp"
#include "sadf/oracle.hpp"
#include "sadf/strong.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
  std::string file;
  std::string sem = "sadm";
  std::string interp;
  std::string argument;
  std::string mode = "accept";
  std::string format = "text";
  std::size_t cap = sadf::kEnumerationCap;
  std::uint64_t seed = 1;
  std::size_t count = 200;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sadf::DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

sadf::Interpretation parse_interp_flag(const std::string& literal,
                                       const sadf::UniversePtr& universe) {
  try {
    return sadf::parse_interpretation(literal, universe);
  } catch (const sadf::ParseError& e) {
    throw sadf::DomainError(std::string("--interp: ") + e.what());
  } catch (const sadf::DomainError& e) {
    throw sadf::DomainError(std::string("--interp: ") + e.what());
  }
}

std::string braced_list(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  out += "}";
  return out;
}

std::string braced_list(const sadf::Extension& members) {
  return braced_list(std::vector<std::string>(members.begin(), members.end()));
}

ordered_json interpretation_json(const sadf::Interpretation& v) {
  ordered_json values = ordered_json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    values[v.universe()->name(i)] = std::string(1, sadf::to_char(v.value(i)));
  ordered_json out;
  out["values"] = values;
  out["literal"] = v.literal();
  out["set"] = v.set_notation();
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_solve(const Options& o) {
  sadf::Adf adf = sadf::Adf::load(read_file(o.file));
  sadf::Semantics sem = sadf::semantics_from_name(o.sem);
  std::vector<sadf::Interpretation> result = sadf::enumerate(adf, sem, o.cap);
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    doc["semantics"] = o.sem;
    doc["count"] = result.size();
    ordered_json list = ordered_json::array();
    for (const sadf::Interpretation& v : result)
      list.push_back(interpretation_json(v));
    doc["interpretations"] = list;
    emit(doc);
  } else {
    for (const sadf::Interpretation& v : result)
      std::cout << v.set_notation() << "\n";
  }
  return kExitOk;
}

int run_check(const Options& o) {
  sadf::Adf adf = sadf::Adf::load(read_file(o.file));
  sadf::Semantics sem = sadf::semantics_from_name(o.sem);
  sadf::Interpretation v = parse_interp_flag(o.interp, adf.universe());
  bool verdict = sadf::check(adf, v, sem);
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    doc["semantics"] = o.sem;
    doc["interpretation"] = interpretation_json(v);
    doc["verdict"] = verdict;
    emit(doc);
  } else {
    std::cout << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? kExitOk : kExitFalse;
}

int run_credulous(const Options& o) {
  sadf::Adf adf = sadf::Adf::load(read_file(o.file));
  sadf::Semantics sem = sadf::semantics_from_name(o.sem);
  sadf::QueryMode mode = sadf::query_mode_from_name(o.mode);
  sadf::CredulousResult result =
      sadf::credulous(adf, o.argument, mode, sem, o.cap);
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    doc["argument"] = o.argument;
    doc["mode"] = o.mode;
    doc["semantics"] = o.sem;
    doc["verdict"] = result.verdict;
    doc["witness"] = result.witness ? interpretation_json(*result.witness)
                                    : ordered_json(nullptr);
    emit(doc);
  } else {
    std::cout << (result.verdict ? "true" : "false") << "\n";
    if (result.witness)
      std::cout << "witness: " << result.witness->set_notation() << "\n";
  }
  return result.verdict ? kExitOk : kExitFalse;
}

int run_witness(const Options& o) {
  sadf::Adf adf = sadf::Adf::load(read_file(o.file));
  sadf::Interpretation v = parse_interp_flag(o.interp, adf.universe());
  std::optional<sadf::Witness> witness;
  std::string reason;
  try {
    witness.emplace(sadf::least_witness(adf, v, o.argument));
  } catch (const sadf::NoWitnessError& e) {
    reason = e.what();
  }
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    doc["argument"] = o.argument;
    doc["interpretation"] = interpretation_json(v);
    doc["verdict"] = witness.has_value();
    if (witness) {
      doc["ancestors"] = witness->ancestors;
      doc["max_level"] = witness->max_level;
      ordered_json steps = ordered_json::array();
      for (const sadf::WitnessStep& step : witness->steps) {
        ordered_json row;
        row["argument"] = step.argument;
        row["parents"] = step.chosen_parents;
        row["excluded"] = step.excluded;
        row["level"] = step.level;
        steps.push_back(row);
      }
      doc["steps"] = steps;
    } else {
      doc["reason"] = reason;
    }
    emit(doc);
  } else if (witness) {
    std::cout << "true\n";
    std::cout << "ancestors: " << braced_list(witness->ancestors) << "\n";
    std::cout << "max level: " << witness->max_level << "\n";
    std::cout << "steps:\n";
    for (const sadf::WitnessStep& step : witness->steps)
      std::cout << "  " << step.argument << ": parents "
                << braced_list(step.chosen_parents) << " level " << step.level
                << "\n";
  } else {
    std::cout << "false\n";
  }
  return witness ? kExitOk : kExitFalse;
}

int run_lattice(const Options& o) {
  sadf::Adf adf = sadf::Adf::load(read_file(o.file));
  sadf::SadmLattice lattice = sadf::build_lattice(adf, o.cap);
  if (o.format == "json") {
    std::cout << sadf::lattice_json(lattice) << "\n";
  } else if (o.format == "dot") {
    std::cout << sadf::lattice_dot(lattice);
  } else {
    std::cout << "nodes: " << lattice.nodes.size() << "\n";
    for (std::size_t i = 0; i < lattice.nodes.size(); ++i)
      std::cout << "  " << i << ": " << lattice.nodes[i].set_notation()
                << "\n";
    std::cout << "cover edges: " << lattice.cover_edges.size() << "\n";
    for (const auto& [lower, upper] : lattice.cover_edges)
      std::cout << "  " << lower << " -> " << upper << "\n";
    std::cout << "bottom: " << lattice.bottom << "\n";
    std::cout << "top: " << lattice.top << "\n";
  }
  return kExitOk;
}

int run_links(const Options& o) {
  sadf::Adf adf = sadf::Adf::load(read_file(o.file));
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    ordered_json list = ordered_json::array();
    for (const auto& [parent, child] : adf.links()) {
      ordered_json row;
      row["parent"] = adf.name(parent);
      row["child"] = adf.name(child);
      row["type"] = sadf::link_type_name(
          sadf::classify_link(adf, adf.name(parent), adf.name(child)));
      list.push_back(row);
    }
    doc["links"] = list;
    emit(doc);
  } else {
    for (const auto& [parent, child] : adf.links())
      std::cout << adf.name(parent) << " -> " << adf.name(child) << ": "
                << sadf::link_type_name(sadf::classify_link(
                       adf, adf.name(parent), adf.name(child)))
                << "\n";
  }
  return kExitOk;
}

int run_af2adf(const Options& o) {
  sadf::Af af = sadf::Af::load(read_file(o.file));
  sadf::Adf adf = sadf::af_to_adf(af);
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    doc["document"] = adf.document();
    emit(doc);
  } else {
    std::cout << adf.document();
  }
  return kExitOk;
}

int run_af_solve(const Options& o) {
  sadf::Af af = sadf::Af::load(read_file(o.file));
  std::vector<sadf::Extension> extensions =
      sadf::enumerate_strongly_admissible_ext(af, o.cap);
  sadf::Extension ground = sadf::grounded_extension(af);
  if (o.format == "json") {
    ordered_json doc;
    doc["file"] = o.file;
    ordered_json list = ordered_json::array();
    for (const sadf::Extension& ext : extensions)
      list.push_back(std::vector<std::string>(ext.begin(), ext.end()));
    doc["extensions"] = list;
    doc["grounded"] = std::vector<std::string>(ground.begin(), ground.end());
    emit(doc);
  } else {
    for (const sadf::Extension& ext : extensions)
      std::cout << braced_list(ext) << "\n";
    std::cout << "grounded: " << braced_list(ground) << "\n";
  }
  return kExitOk;
}

ordered_json discrepancy_json(const char* kind, const sadf::Discrepancy& d) {
  ordered_json row;
  row["kind"] = kind;
  row["seed"] = d.sample_seed;
  row["interpretation"] = d.interpretation;
  row["operation"] = d.operation;
  row["main"] = d.main_result;
  row["oracle"] = d.oracle_result;
  return row;
}

int run_conform(const Options& o) {
  sadf::CrossValidation report = sadf::cross_validate(o.seed, o.count);
  for (const sadf::Discrepancy& d : report.hard)
    std::cout << discrepancy_json("hard", d).dump() << "\n";
  for (const sadf::Discrepancy& d : report.findings)
    std::cout << discrepancy_json("finding", d).dump() << "\n";
  ordered_json summary;
  summary["samples"] = report.samples;
  summary["hard"] = report.hard.size();
  summary["findings"] = report.findings.size();
  std::cout << summary.dump() << "\n";
  return report.hard.empty() ? kExitOk : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Three-valued argumentation solver", "sadf"};
  app.require_subcommand(1);

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Input document")->required();
  };
  auto add_sem = [&](CLI::App* cmd) {
    cmd->add_option("--sem", o.sem, "Semantics")
        ->check(CLI::IsMember({"cf", "adm", "prf", "grd", "sadm"}));
  };
  auto add_format = [&](CLI::App* cmd,
                        std::vector<std::string> formats = {"text", "json"}) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(formats));
  };

  CLI::App* solve = app.add_subcommand(
      "solve", "Enumerate the interpretations of a semantics");
  add_file(solve);
  add_sem(solve);
  add_format(solve);
  solve->add_option("--cap", o.cap, "Enumeration cap in arguments");

  CLI::App* check = app.add_subcommand(
      "check", "Decide whether an interpretation satisfies a semantics");
  add_file(check);
  add_sem(check);
  add_format(check);
  check->add_option("--interp", o.interp, "Interpretation literal")
      ->required();

  CLI::App* credulous = app.add_subcommand(
      "credulous", "Search a witness interpretation for an argument query");
  add_file(credulous);
  add_sem(credulous);
  add_format(credulous);
  credulous->add_option("--arg", o.argument, "Argument name")->required();
  credulous->add_option("--mode", o.mode, "Query mode")
      ->check(CLI::IsMember({"accept", "deny"}));
  credulous->add_option("--cap", o.cap, "Enumeration cap in arguments");

  CLI::App* witness = app.add_subcommand(
      "witness", "Least ancestor set and derivation for a decided argument");
  add_file(witness);
  add_format(witness);
  witness->add_option("--interp", o.interp, "Interpretation literal")
      ->required();
  witness->add_option("--arg", o.argument, "Argument name")->required();

  CLI::App* lattice = app.add_subcommand(
      "lattice", "Strongly admissible interpretations with cover edges");
  add_file(lattice);
  add_format(lattice, {"text", "json", "dot"});
  lattice->add_option("--cap", o.cap, "Enumeration cap in arguments");

  CLI::App* links =
      app.add_subcommand("links", "Classify every link of the framework");
  add_file(links);
  add_format(links);

  CLI::App* af2adf = app.add_subcommand(
      "af2adf", "Translate an attack framework to acceptance conditions");
  add_file(af2adf);
  add_format(af2adf);

  CLI::App* af_solve = app.add_subcommand(
      "af-solve", "Strongly admissible extensions of an attack framework");
  add_file(af_solve);
  add_format(af_solve);
  CLI::Option* af_cap =
      af_solve->add_option("--cap", o.cap, "Enumeration cap in arguments");

  CLI::App* conform = app.add_subcommand(
      "conform", "Differential sweep against the reference oracles");
  conform->add_option("--seed", o.seed, "Base seed");
  conform->add_option("--count", o.count, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (app.got_subcommand(af_solve) && af_cap->count() == 0)
    o.cap = sadf::kAfEnumerationCap;

  try {
    if (app.got_subcommand(solve)) return run_solve(o);
    if (app.got_subcommand(check)) return run_check(o);
    if (app.got_subcommand(credulous)) return run_credulous(o);
    if (app.got_subcommand(witness)) return run_witness(o);
    if (app.got_subcommand(lattice)) return run_lattice(o);
    if (app.got_subcommand(links)) return run_links(o);
    if (app.got_subcommand(af2adf)) return run_af2adf(o);
    if (app.got_subcommand(af_solve)) return run_af_solve(o);
    if (app.got_subcommand(conform)) return run_conform(o);
  } catch (const sadf::ParseError& e) {
    std::cerr << o.file << ":" << e.line() << ":" << e.column()
              << ": error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sadf::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
