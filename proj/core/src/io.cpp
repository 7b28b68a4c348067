#include "scs/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace scs::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::Schema, message); }

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key)) schema("unknown field '" + key + "' in " + where);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema("missing field '" + key + "' in " + where);
  return *it;
}

std::vector<std::string> strings(const json& arr, const std::string& where) {
  if (!arr.is_array()) schema(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) schema(where + " must contain only strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

AumannModel parse_aumann(const json& a) {
  only_keys(a, {"states", "partitions"}, "aumann");
  AumannModel model;
  model.states = strings(field(a, "states", "aumann"), "aumann.states");
  const auto& parts = field(a, "partitions", "aumann");
  if (!parts.is_object()) schema("aumann.partitions must be an object");
  for (const auto& [agent, blocks] : parts.items()) {
    const std::string where = "aumann.partitions." + agent;
    if (!blocks.is_array()) schema(where + " must be an array of blocks");
    std::vector<std::vector<std::string>> cells;
    for (const auto& b : blocks) cells.push_back(strings(b, where));
    model.partitions.emplace_back(agent, std::move(cells));
  }
  return model;
}

}  // namespace

ModelDocument parse_model(const json& doc) {
  ModelDocument out;
  if (!doc.is_object()) schema("model must be a JSON object");
  if (doc.contains("aumann")) {
    only_keys(doc, {"aumann"}, "model");
    out.kind = ModelDocument::Kind::Aumann;
    out.aumann = parse_aumann(doc["aumann"]);
    return out;
  }
  only_keys(doc, {"lattice", "agents"}, "model");
  const auto& lat = field(doc, "lattice", "model");
  only_keys(lat, {"elements", "order"}, "lattice");
  out.elements = strings(field(lat, "elements", "lattice"), "lattice.elements");
  const auto& order = field(lat, "order", "lattice");
  if (!order.is_array()) schema("lattice.order must be an array of pairs");
  for (const auto& pair : order) {
    auto p = strings(pair, "lattice.order");
    if (p.size() != 2) schema("lattice.order entries must be [lower, upper] pairs");
    out.order.emplace_back(p[0], p[1]);
  }
  if (!doc.contains("agents")) return out;

  out.kind = ModelDocument::Kind::Scs;
  const std::set<std::string> declared(out.elements.begin(), out.elements.end());
  const auto& agents = doc["agents"];
  if (!agents.is_object()) schema("agents must be an object");
  for (const auto& [agent, table] : agents.items()) {
    const std::string where = "agent " + agent;
    if (!table.is_object()) schema(where + " table must be an object");
    for (const auto& [from, to] : table.items()) {
      if (!declared.contains(from)) schema(where + ": unknown element '" + from + "'");
      if (!to.is_string()) schema(where + ": image of '" + from + "' must be a string");
      if (!declared.contains(to.get<std::string>())) {
        schema(where + ": unknown element '" + to.get<std::string>() + "'");
      }
    }
    std::vector<std::string> images;
    for (const auto& e : out.elements) {
      auto it = table.find(e);
      if (it == table.end()) schema(where + ": table is partial, missing element '" + e + "'");
      images.push_back(it->get<std::string>());
    }
    out.agents.emplace_back(agent, std::move(images));
  }
  return out;
}

ModelDocument read_model_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    schema("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_model(doc);
}

ModelDocument read_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) schema("cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_model_string(buf.str());
}

Outcome<Lattice> build_lattice(const ModelDocument& doc) {
  if (doc.kind == ModelDocument::Kind::Aumann) {
    try {
      return aumann_scs(*doc.aumann).lattice();
    } catch (const Error& e) {
      ValidationReport report;
      report.add("aumann", {e.what()});
      return report;
    }
  }
  return Lattice::build(doc.elements, doc.order);
}

Outcome<SCS> build_scs(const ModelDocument& doc, const LatticePtr& lattice) {
  if (doc.kind == ModelDocument::Kind::Aumann) {
    try {
      return aumann_scs(*doc.aumann);
    } catch (const Error& e) {
      ValidationReport report;
      report.add("aumann", {e.what()});
      return report;
    }
  }
  std::vector<SCS::AgentTable> tables;
  for (const auto& [agent, images] : doc.agents) {
    std::vector<Elem> table;
    for (const auto& img : images) table.push_back(lattice->at(img));
    tables.emplace_back(agent, std::move(table));
  }
  return SCS::build(lattice, std::move(tables));
}

SCS load_scs(const ModelDocument& doc) {
  if (doc.kind == ModelDocument::Kind::Aumann) return build_scs(doc, nullptr).value();
  auto lattice = std::make_shared<const Lattice>(build_lattice(doc).value());
  return build_scs(doc, lattice).value();
}

json to_json(const Lattice& lattice) {
  json order = json::array();
  for (const auto& [lo, hi] : lattice.cover_names()) order.push_back({lo, hi});
  return {{"elements", lattice.names()}, {"order", order}};
}

json to_json(const SpaceFunction& f) {
  json table = json::object();
  const auto& l = f.lattice();
  for (Elem c = 0; c < l.size(); ++c) table[l.name(c)] = l.name(f(c));
  return table;
}

json to_json(const SCS& scs) {
  json agents = json::object();
  for (AgentId i = 0; i < scs.agent_count(); ++i) agents[scs.agent_name(i)] = to_json(scs.space(i));
  return {{"lattice", to_json(scs.lattice())}, {"agents", agents}};
}

json to_json(const OpCounts& c) {
  return {{"joins", c.joins},
          {"meets", c.meets},
          {"implications", c.implications},
          {"recursive_calls", c.recursive_calls},
          {"memo_hits", c.memo_hits},
          {"candidates", c.candidates}};
}

json to_json(const SCS& scs, const DeltaResult& result) {
  return {{"group", scs.group_names(result.group)},
          {"algorithm", to_string(result.algorithm)},
          {"table", to_json(result.table)},
          {"op_counts", to_json(result.op_counts)}};
}

json to_json(const ExtrusionFunction& ext) {
  json table = json::object();
  const auto& l = ext.lattice();
  for (Elem c = 0; c < l.size(); ++c) table[l.name(c)] = l.name(ext(c));
  return {{"method", to_string(ext.method())}, {"table", table}};
}

std::string to_dot(const Lattice& lattice, const SCS* scs) {
  static const char* const kColors[] = {"blue", "red", "darkgreen", "purple", "orange", "brown"};
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };

  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  const auto heights = lattice.heights();
  std::map<std::size_t, std::vector<Elem>> ranks;
  for (Elem e = 0; e < lattice.size(); ++e) ranks[heights[e]].push_back(e);
  for (const auto& [h, elems] : ranks) {
    out << "  { rank=same;";
    for (Elem e : elems) out << ' ' << quote(lattice.name(e)) << ';';
    out << " }\n";
  }
  for (auto [lo, hi] : lattice.covers()) {
    out << "  " << quote(lattice.name(lo)) << " -> " << quote(lattice.name(hi)) << " [arrowhead=none];\n";
  }
  if (scs) {
    for (AgentId i = 0; i < scs->agent_count(); ++i) {
      const char* color = kColors[i % std::size(kColors)];
      for (Elem c = 0; c < lattice.size(); ++c) {
        out << "  " << quote(lattice.name(c)) << " -> " << quote(lattice.name(scs->apply(i, c)))
            << " [label=" << quote(scs->agent_name(i)) << ", color=" << color << ", constraint=false];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace scs::io
