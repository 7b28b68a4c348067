#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "scs/distributed_space.hpp"
#include "scs/extrusion.hpp"
#include "scs/instances.hpp"
#include "scs/io.hpp"

namespace scs::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string input;
  std::string group;
  std::string algorithm;
  std::string at;
  std::string kind = "group";
  std::string method = "sup";
  std::string agent;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t random_agents = 0;
  std::size_t cap = OracleOptions{}.max_join_irreducibles;
};

class Failure : public std::runtime_error {
 public:
  Failure(int code, const std::string& message) : std::runtime_error(message), code(code) {}
  int code;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

Group parse_group(const SCS& scs, const std::string& list) {
  if (list.empty()) return scs.all_agents();
  auto names = split_commas(list);
  return scs.group(names);
}

Algorithm parse_alg(const std::string& name, const Lattice& l) {
  if (name.empty()) return default_algorithm(l);
  auto alg = parse_algorithm(name);
  if (!alg) throw Failure(kInputError, "unknown algorithm '" + name + "' (oracle|part1|part2|part3)");
  return *alg;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out;
}

void print_table(std::ostream& out, const Lattice& l, const std::vector<Elem>& table) {
  std::size_t width = 0;
  for (const auto& n : l.names()) width = std::max(width, n.size());
  for (Elem c = 0; c < l.size(); ++c) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << l.name(c) << " -> " << l.name(table[c])
        << '\n';
  }
}

std::string counts_line(const OpCounts& c) {
  std::ostringstream s;
  s << "op_counts: joins=" << c.joins << " meets=" << c.meets << " implications=" << c.implications
    << " recursive_calls=" << c.recursive_calls << " memo_hits=" << c.memo_hits << " candidates=" << c.candidates;
  return s.str();
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  auto doc = io::read_model(cfg.input);
  json report = json::object();
  int code = kOk;

  auto built = io::build_lattice(doc);
  if (!built) {
    if (cfg.json) {
      report["lattice"] = built.report().to_string();
      out << report.dump(2) << '\n';
    } else {
      out << "lattice: invalid, " << built.report().to_string() << '\n';
    }
    return kPropertyFailure;
  }
  auto lattice = std::make_shared<const Lattice>(std::move(built).value());
  const auto& dist = lattice->distributivity();
  report["lattice"] = "ok";
  report["elements"] = lattice->size();
  report["distributive"] = dist.distributive;
  if (!cfg.json) {
    out << "lattice: ok (" << lattice->size() << " elements)\n";
    out << "distributive: " << (dist.distributive ? "yes" : "no");
  }
  if (!dist.distributive) {
    code = kPropertyFailure;
    const auto& w = *dist.witness;
    std::vector<std::string> names{lattice->name(w[0]), lattice->name(w[1]), lattice->name(w[2])};
    report["witness"] = names;
    if (!cfg.json) out << ", witness (" << names[0] << ", " << names[1] << ", " << names[2] << ")";
  }
  if (!cfg.json) out << '\n';

  if (doc.kind != io::ModelDocument::Kind::Lattice) {
    json agents = json::object();
    std::vector<std::pair<std::string, std::vector<Elem>>> tables;
    if (doc.kind == io::ModelDocument::Kind::Aumann) {
      auto compiled = aumann_scs(*doc.aumann);
      for (AgentId i = 0; i < compiled.agent_count(); ++i)
        tables.emplace_back(compiled.agent_name(i), compiled.space(i).table());
      lattice = compiled.lattice_ptr();
    } else {
      for (const auto& [agent, images] : doc.agents) {
        std::vector<Elem> table;
        for (const auto& img : images) table.push_back(lattice->at(img));
        tables.emplace_back(agent, std::move(table));
      }
    }
    for (const auto& [agent, table] : tables) {
      auto r = check_space_axioms(*lattice, table);
      agents[agent] = r.ok() ? "ok" : r.to_string();
      if (!r.ok()) code = kPropertyFailure;
      if (!cfg.json) out << "agent " << agent << ": " << (r.ok() ? "ok" : r.to_string()) << '\n';
    }
    report["agents"] = agents;
  }
  if (cfg.json) out << report.dump(2) << '\n';
  return code;
}

int cmd_delta(const RunConfig& cfg, std::ostream& out) {
  auto scs = io::load_scs(io::read_model(cfg.input));
  const auto& l = scs.lattice();
  auto group = parse_group(scs, cfg.group);
  auto alg = parse_alg(cfg.algorithm, l);
  OracleOptions options{cfg.cap};

  if (!cfg.at.empty()) {
    const Elem c = l.at(cfg.at);
    OpCounts counts;
    Elem value;
    if (alg == Algorithm::Oracle || group.empty()) {
      auto r = delta(scs, group, alg, options);
      value = r.table(c);
      counts = r.op_counts;
    } else {
      value = delta_part(scs, group, c, alg, &counts);
    }
    if (cfg.json) {
      out << json{{"group", scs.group_names(group)},
                  {"algorithm", to_string(alg)},
                  {"at", l.name(c)},
                  {"value", l.name(value)},
                  {"op_counts", io::to_json(counts)}}
                 .dump(2)
          << '\n';
    } else {
      out << "delta[" << join_names(scs.group_names(group)) << "](" << l.name(c) << ") = " << l.name(value)
          << "  (" << to_string(alg) << ")\n"
          << counts_line(counts) << '\n';
    }
    return kOk;
  }

  auto result = delta(scs, group, alg, options);
  if (cfg.json) {
    out << io::to_json(scs, result).dump(2) << '\n';
  } else {
    out << "group: " << join_names(scs.group_names(group)) << "  algorithm: " << to_string(alg) << '\n';
    print_table(out, l, result.table.table());
    out << counts_line(result.op_counts) << '\n';
  }
  return kOk;
}

int cmd_project(const RunConfig& cfg, std::ostream& out) {
  auto scs = io::load_scs(io::read_model(cfg.input));
  const auto& l = scs.lattice();
  if (cfg.at.empty()) throw Failure(kInputError, "project needs --at ELEM");
  const Elem c = l.at(cfg.at);
  auto group = parse_group(scs, cfg.group);

  Elem value;
  if (cfg.kind == "agent") {
    if (group.size() != 1) throw Failure(kInputError, "--kind agent needs a single-agent --group");
    value = agent_projection(scs, group.members().front(), c);
  } else if (cfg.kind == "join") {
    value = join_projection(scs, group, c);
  } else if (cfg.kind == "group") {
    auto d = delta(scs, group, parse_alg(cfg.algorithm, l), OracleOptions{cfg.cap});
    value = group_projection(scs, group, c, d);
  } else {
    throw Failure(kInputError, "unknown projection kind '" + cfg.kind + "' (agent|join|group)");
  }

  if (cfg.json) {
    out << json{{"kind", cfg.kind}, {"group", scs.group_names(group)}, {"at", l.name(c)}, {"value", l.name(value)}}
               .dump(2)
        << '\n';
  } else {
    out << l.name(value) << '\n';
  }
  return kOk;
}

int cmd_extrude(const RunConfig& cfg, std::ostream& out) {
  auto scs = io::load_scs(io::read_model(cfg.input));
  std::string name = cfg.agent;
  if (name.empty()) {
    auto names = split_commas(cfg.group);
    if (names.size() != 1) throw Failure(kInputError, "extrude needs --agent ID");
    name = names.front();
  }
  const AgentId agent = scs.agent(name);
  const auto& f = scs.space(agent);

  std::optional<ExtrusionFunction> ext;
  if (cfg.method == "sup") {
    ext = extrusion_sup(f);
  } else if (cfg.method == "inf") {
    ext = extrusion_inf(f);
  } else {
    throw Failure(kInputError, "unknown method '" + cfg.method + "' (sup|inf)");
  }

  const auto& l = scs.lattice();
  std::size_t law_checks = 0, law_failures = 0;
  for (Elem c = 0; c < l.size(); ++c)
    for (Elem d = 0; d < l.size(); ++d) {
      ++law_checks;
      if (!verify_extrusion_law(scs, agent, *ext, c, d)) ++law_failures;
    }
  const bool e1 = ext->is_right_inverse_of(f);

  if (cfg.json) {
    auto j = io::to_json(*ext);
    j["agent"] = name;
    j["right_inverse"] = e1;
    j["law_failures"] = law_failures;
    out << j.dump(2) << '\n';
  } else {
    out << "extrusion of agent " << name << " (" << to_string(ext->method()) << ")\n";
    print_table(out, l, ext->table());
    out << "E.1: " << (e1 ? "ok" : "FAILED") << "; extrusion law: " << (law_checks - law_failures) << "/"
        << law_checks << " pairs hold\n";
  }
  return e1 && law_failures == 0 ? kOk : kPropertyFailure;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  auto doc = io::read_model(cfg.input);
  std::optional<SCS> loaded;
  if (cfg.random_agents > 0) {
    auto lattice = std::make_shared<const Lattice>(io::build_lattice(doc).value());
    std::mt19937_64 rng(cfg.seed);
    loaded.emplace(random_scs(lattice, cfg.random_agents, rng));
  } else {
    loaded.emplace(io::load_scs(doc));
  }
  const SCS& scs = *loaded;
  const auto& l = scs.lattice();
  if (!l.is_distributive()) {
    throw Error(ErrorKind::FrameRequired, "bench needs a distributive lattice for the recursive variants");
  }
  auto group = parse_group(scs, cfg.group);
  if (group.empty()) throw Failure(kInputError, "bench needs a non-empty group");

  struct Row {
    Algorithm alg;
    DeltaResult result;
    double millis;
  };
  std::vector<Row> rows;
  auto timed = [&](Algorithm alg) {
    auto start = std::chrono::steady_clock::now();
    auto r = delta(scs, group, alg, OracleOptions{cfg.cap});
    std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
    rows.push_back({alg, std::move(r), took.count()});
  };
  for (auto alg : {Algorithm::Part1, Algorithm::Part2, Algorithm::Part3}) timed(alg);
  const bool with_oracle = l.join_irreducibles().size() <= cfg.cap;
  if (with_oracle) timed(Algorithm::Oracle);

  const auto& reference = rows.back().result.table;
  bool agree = true;
  json variants = json::object();
  for (const auto& row : rows) {
    bool same = row.result.table == reference;
    agree = agree && same;
    variants[to_string(row.alg)] = {{"op_counts", io::to_json(row.result.op_counts)}, {"agrees", same}};
  }
  const bool ordered = rows[2].result.op_counts.candidates <= rows[1].result.op_counts.candidates &&
                       rows[1].result.op_counts.candidates <= rows[0].result.op_counts.candidates;

  if (cfg.json) {
    out << json{{"group", scs.group_names(group)},
                {"elements", l.size()},
                {"reference", with_oracle ? "oracle" : "part3"},
                {"variants", variants},
                {"candidate_order", ordered},
                {"agreement", agree}}
               .dump(2)
        << '\n';
  } else {
    out << "group: " << join_names(scs.group_names(group)) << "  elements: " << l.size()
        << "  reference: " << (with_oracle ? "oracle" : "part3") << '\n';
    out << std::left << std::setw(8) << "alg" << std::right << std::setw(12) << "candidates" << std::setw(12)
        << "joins" << std::setw(12) << "meets" << std::setw(8) << "impl" << std::setw(12) << "calls"
        << std::setw(12) << "memo_hits" << std::setw(11) << "ms" << "  agrees\n";
    for (const auto& row : rows) {
      const auto& c = row.result.op_counts;
      out << std::left << std::setw(8) << to_string(row.alg) << std::right << std::setw(12) << c.candidates
          << std::setw(12) << c.joins << std::setw(12) << c.meets << std::setw(8) << c.implications << std::setw(12)
          << c.recursive_calls << std::setw(12) << c.memo_hits << std::setw(11) << std::fixed
          << std::setprecision(3) << row.millis << "  " << (row.result.table == reference ? "yes" : "NO") << '\n';
    }
    out << "candidate order part3 <= part2 <= part1: " << (ordered ? "ok" : "VIOLATED") << '\n';
    out << "agreement: " << (agree ? "ok" : "MISMATCH") << '\n';
  }
  return agree ? kOk : kPropertyFailure;
}

int cmd_export_dot(const RunConfig& cfg, std::ostream& out) {
  auto doc = io::read_model(cfg.input);
  if (doc.kind == io::ModelDocument::Kind::Lattice) {
    out << io::to_dot(io::build_lattice(doc).value());
  } else {
    auto scs = io::load_scs(doc);
    out << io::to_dot(scs.lattice(), &scs);
  }
  return kOk;
}

int cmd_aumann_compile(const RunConfig& cfg, std::ostream& out) {
  auto doc = io::read_model(cfg.input);
  if (doc.kind != io::ModelDocument::Kind::Aumann) throw Failure(kInputError, "expected an {\"aumann\": ...} model");
  out << io::to_json(io::load_scs(doc)).dump(2) << '\n';
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Schema:
    case ErrorKind::UnknownElement:
    case ErrorKind::UnknownAgent:
    case ErrorKind::TableNotTotal:
    case ErrorKind::InvalidArgument:
    case ErrorKind::GroupMismatch:
    case ErrorKind::CarrierMismatch:
      return kInputError;
    default:
      return kPropertyFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite spatial constraint systems: lattices, space functions, distributed spaces", "scs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "Model JSON file")->required();
    sub->add_flag("--json", cfg.json, "Emit canonical JSON");
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "Comma-separated agent ids (default: all agents)");
  };
  auto add_alg = [&](CLI::App* sub) {
    sub->add_option("--alg", cfg.algorithm, "oracle|part1|part2|part3");
    sub->add_option("--cap", cfg.cap, "Oracle enumeration cap (max join-irreducibles)");
  };

  auto* check = app.add_subcommand("check", "Validate lattice, distributivity and space functions");
  add_common(check);

  auto* delta_cmd = app.add_subcommand("delta", "Compute the distributed space of a group");
  add_common(delta_cmd);
  add_group(delta_cmd);
  add_alg(delta_cmd);
  delta_cmd->add_option("--at", cfg.at, "Evaluate at a single element");

  auto* project = app.add_subcommand("project", "Agent, join or group projection at an element");
  add_common(project);
  add_group(project);
  add_alg(project);
  project->add_option("--at", cfg.at, "Element to project")->required();
  project->add_option("--kind", cfg.kind, "agent|join|group");

  auto* extrude = app.add_subcommand("extrude", "Derive an extrusion (right inverse) of a space function");
  add_common(extrude);
  add_group(extrude);
  extrude->add_option("--agent", cfg.agent, "Agent id");
  extrude->add_option("--method", cfg.method, "sup|inf");

  auto* bench = app.add_subcommand("bench", "Compare the recursive variants and the oracle");
  add_common(bench);
  add_group(bench);
  bench->add_option("--cap", cfg.cap, "Oracle enumeration cap (max join-irreducibles)");
  bench->add_option("--seed", cfg.seed, "Seed for --random-agents");
  bench->add_option("--random-agents", cfg.random_agents, "Replace the agents by N seeded random space functions");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram with space-function edges in DOT");
  dot->add_option("input", cfg.input, "Model JSON file")->required();

  auto* compile = app.add_subcommand("aumann-compile", "Compile an Aumann model to an SCS model");
  compile->add_option("input", cfg.input, "Aumann JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out);
    if (delta_cmd->parsed()) return cmd_delta(cfg, out);
    if (project->parsed()) return cmd_project(cfg, out);
    if (extrude->parsed()) return cmd_extrude(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
    if (dot->parsed()) return cmd_export_dot(cfg, out);
    if (compile->parsed()) return cmd_aumann_compile(cfg, out);
  } catch (const Failure& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const ValidationFailed& e) {
    err << "error: invalid model: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::FrameRequired) err << "hint: use --alg oracle on non-distributive lattices\n";
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace scs::cli
