#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "scs/distributed_space.hpp"
#include "scs/extrusion.hpp"
#include "scs/instances.hpp"

namespace scs::io {

/// A model file after schema validation but before any order-theoretic
/// validation. Agent images are element names listed in element order.
struct ModelDocument {
  enum class Kind { Lattice, Scs, Aumann };

  Kind kind = Kind::Lattice;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::vector<std::string>>> agents;
  std::optional<AumannModel> aumann;
};

/// Schema check for the three accepted shapes:
///   {"lattice": {"elements": [...], "order": [[lo, hi], ...]}}
///   {"lattice": {...}, "agents": {"<id>": {"<elem>": "<elem>", ...}}}
///   {"aumann": {"states": [...], "partitions": {"<id>": [[...], ...]}}}
/// Unknown fields and partial agent tables are rejected with Error(Schema).
ModelDocument parse_model(const nlohmann::json& doc);

/// Reads and parses a model file; malformed JSON becomes Error(Schema)
/// with the byte position.
ModelDocument read_model(const std::filesystem::path& path);
ModelDocument read_model_string(const std::string& text);

/// Builds the lattice (for Aumann documents, the event lattice).
Outcome<Lattice> build_lattice(const ModelDocument& doc);
/// Builds the full SCS. Lattice-only documents have no agents and fail.
Outcome<SCS> build_scs(const ModelDocument& doc, const LatticePtr& lattice);
/// Both steps; throws ValidationFailed on the first failing step.
SCS load_scs(const ModelDocument& doc);

nlohmann::json to_json(const Lattice& lattice);
nlohmann::json to_json(const SCS& scs);
nlohmann::json to_json(const SpaceFunction& f);
nlohmann::json to_json(const OpCounts& counts);
nlohmann::json to_json(const SCS& scs, const DeltaResult& result);
nlohmann::json to_json(const ExtrusionFunction& ext);

/// Hasse diagram (covering edges, one rank per lattice height) plus one
/// labeled edge per element and agent when an SCS is given.
std::string to_dot(const Lattice& lattice, const SCS* scs = nullptr);

}  // namespace scs::io
