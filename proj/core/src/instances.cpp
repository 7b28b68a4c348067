#include "scs/instances.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace scs {

namespace {

LatticePtr must(Outcome<Lattice> built) {
  return std::make_shared<const Lattice>(std::move(built).value());
}

std::string mask_name(std::uint32_t mask, const std::vector<std::string>& labels, const std::string& prefix) {
  std::vector<std::string> members;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (mask & (1u << i)) members.push_back(labels[i]);
  std::sort(members.begin(), members.end());
  std::string out = prefix + "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  return out + "}";
}

}  // namespace

SCS m2_scs() {
  auto lattice = must(Lattice::build({"bot", "p", "np", "top"}, std::vector<std::pair<std::string, std::string>>{
                                                                    {"bot", "p"}, {"bot", "np"}, {"p", "top"}, {"np", "top"}}));
  const Elem bot = lattice->at("bot"), p = lattice->at("p"), np = lattice->at("np"), top = lattice->at("top");
  std::vector<Elem> d1(4), d2(4);
  d1[bot] = bot, d1[p] = np, d1[np] = p, d1[top] = top;
  d2[bot] = bot, d2[p] = top, d2[np] = np, d2[top] = top;
  return SCS::build(lattice, {{"1", d1}, {"2", d2}}).value();
}

LatticePtr powerset_lattice(int k) {
  if (k < 0 || k > 6) throw Error(ErrorKind::InvalidArgument, "powerset size must be in [0, 6]");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  const std::uint32_t count = 1u << k;
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> covers;
  for (std::uint32_t m = 0; m < count; ++m) {
    names.push_back(mask_name(m, labels, ""));
    for (int i = 0; i < k; ++i)
      if (!(m & (1u << i))) covers.emplace_back(m, m | (1u << i));
  }
  return must(Lattice::from_relation(std::move(names), covers));
}

LatticePtr m3_lattice() {
  return must(Lattice::build({"bot", "a", "b", "c", "top"},
                             std::vector<std::pair<std::string, std::string>>{
                                 {"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}}));
}

LatticePtr n5_lattice() {
  return must(Lattice::build({"bot", "a", "b", "c", "top"},
                             std::vector<std::pair<std::string, std::string>>{
                                 {"bot", "a"}, {"a", "b"}, {"b", "top"}, {"bot", "c"}, {"c", "top"}}));
}

LatticePtr chain_lattice(std::size_t points) {
  if (points == 0) throw Error(ErrorKind::InvalidArgument, "chain needs at least one point");
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> covers;
  for (std::size_t i = 0; i < points; ++i) {
    names.push_back("c" + std::to_string(i));
    if (i) covers.emplace_back(static_cast<Elem>(i - 1), static_cast<Elem>(i));
  }
  return must(Lattice::from_relation(std::move(names), covers));
}

LatticePtr downset_lattice(std::size_t points, const std::vector<std::vector<bool>>& below) {
  if (points > 6) throw Error(ErrorKind::InvalidArgument, "down-set lattice limited to 6 points");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points; ++i) labels.push_back(std::to_string(i));
  auto is_downset = [&](std::uint32_t m) {
    for (std::size_t j = 0; j < points; ++j) {
      if (!(m & (1u << j))) continue;
      for (std::size_t i = 0; i < points; ++i)
        if (below[i][j] && !(m & (1u << i))) return false;
    }
    return true;
  };
  std::map<std::uint32_t, Elem> index;
  std::vector<std::string> names;
  for (std::uint32_t m = 0; m < (1u << points); ++m) {
    if (!is_downset(m)) continue;
    index.emplace(m, static_cast<Elem>(names.size()));
    names.push_back(mask_name(m, labels, "d"));
  }
  std::vector<std::pair<Elem, Elem>> covers;
  for (auto [m, e] : index)
    for (std::size_t i = 0; i < points; ++i) {
      auto it = index.find(m | (1u << i));
      if (!(m & (1u << i)) && it != index.end()) covers.emplace_back(e, it->second);
    }
  return must(Lattice::from_relation(std::move(names), covers));
}

std::vector<std::vector<bool>> random_poset(std::size_t points, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> below(points, std::vector<bool>(points, false));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = i + 1; j < points; ++j) below[i][j] = coin(rng);
  for (std::size_t k = 0; k < points; ++k)
    for (std::size_t i = 0; i < points; ++i)
      for (std::size_t j = 0; j < points; ++j)
        if (below[i][k] && below[k][j]) below[i][j] = true;
  return below;
}

SpaceFunction random_space_function(const LatticePtr& lattice, std::mt19937_64& rng) {
  const auto& l = *lattice;
  const auto heights = l.heights();
  std::vector<Elem> jis = l.join_irreducibles();
  std::stable_sort(jis.begin(), jis.end(), [&](Elem a, Elem b) { return heights[a] < heights[b]; });

  while (true) {
    std::vector<Elem> image(l.size(), l.bottom());  // images of join-irreducibles only
    for (Elem j : jis) {
      Elem floor = l.bottom();
      for (Elem p : jis) {
        if (p == j) break;
        if (l.leq(p, j)) floor = l.join(floor, image[p]);
      }
      std::vector<Elem> choices;
      for (Elem v = 0; v < l.size(); ++v)
        if (l.leq(floor, v)) choices.push_back(v);
      image[j] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    }
    std::vector<Elem> table(l.size(), l.bottom());
    for (Elem c = 0; c < l.size(); ++c)
      for (Elem j : jis)
        if (l.leq(j, c)) table[c] = l.join(table[c], image[j]);
    auto fn = SpaceFunction::make(lattice, std::move(table));
    if (fn) return std::move(fn).value();
  }
}

SCS random_scs(const LatticePtr& lattice, std::size_t agents, std::mt19937_64& rng) {
  std::vector<SCS::AgentTable> tables;
  for (std::size_t i = 1; i <= agents; ++i)
    tables.emplace_back(std::to_string(i), random_space_function(lattice, rng).table());
  return SCS::build(lattice, std::move(tables)).value();
}

void AumannModel::validate() const {
  if (states.empty()) throw Error(ErrorKind::InvalidArgument, "Aumann model needs at least one state");
  if (states.size() > 6) throw Error(ErrorKind::InvalidArgument, "Aumann model limited to 6 states");
  if (partitions.empty()) throw Error(ErrorKind::InvalidArgument, "Aumann model needs at least one agent");
  std::vector<std::string> sorted = states;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate state");
  }
  const Event all = (1u << states.size()) - 1;
  std::vector<std::string> agents;
  for (const auto& [agent, blocks] : partitions) {
    agents.push_back(agent);
    Event seen = 0;
    for (const auto& block : blocks) {
      if (block.empty()) throw Error(ErrorKind::InvalidArgument, "agent " + agent + ": empty block");
      Event b = event(block);
      if (static_cast<std::size_t>(std::popcount(b)) != block.size() || (seen & b)) {
        throw Error(ErrorKind::InvalidArgument, "agent " + agent + ": blocks overlap");
      }
      seen |= b;
    }
    if (seen != all) throw Error(ErrorKind::InvalidArgument, "agent " + agent + ": blocks do not cover the states");
  }
  std::sort(agents.begin(), agents.end());
  if (std::adjacent_find(agents.begin(), agents.end()) != agents.end()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate agent");
  }
}

std::size_t AumannModel::agent(const std::string& name) const {
  for (std::size_t i = 0; i < partitions.size(); ++i)
    if (partitions[i].first == name) return i;
  throw Error(ErrorKind::UnknownAgent, "unknown agent '" + name + "'");
}

Event AumannModel::event(std::span<const std::string> names) const {
  Event e = 0;
  for (const auto& n : names) {
    auto it = std::find(states.begin(), states.end(), n);
    if (it == states.end()) throw Error(ErrorKind::InvalidArgument, "unknown state '" + n + "'");
    e |= 1u << (it - states.begin());
  }
  return e;
}

Event AumannModel::cell(std::size_t agent, std::size_t state) const {
  for (const auto& block : partitions.at(agent).second) {
    Event b = event(block);
    if (b & (1u << state)) return b;
  }
  throw Error(ErrorKind::InvalidArgument, "state not covered by partition");
}

std::string AumannModel::event_name(Event e) const { return mask_name(e, states, ""); }

Event knowledge(const AumannModel& model, std::size_t agent, Event e) {
  Event out = 0;
  for (std::size_t s = 0; s < model.states.size(); ++s)
    if ((model.cell(agent, s) & ~e) == 0) out |= 1u << s;
  return out;
}

Event distributed_knowledge(const AumannModel& model, std::span<const std::string> group, Event e) {
  std::vector<std::size_t> agents;
  for (const auto& name : group) agents.push_back(model.agent(name));
  const Event all = (1u << model.states.size()) - 1;
  Event out = 0;
  for (std::size_t s = 0; s < model.states.size(); ++s) {
    Event joint = all;
    for (std::size_t i : agents) joint &= model.cell(i, s);
    if ((joint & ~e) == 0) out |= 1u << s;
  }
  return out;
}

SCS aumann_scs(const AumannModel& model) {
  model.validate();
  const std::size_t k = model.states.size();
  const Event count = 1u << k;
  // Element index == event bitmask. e1 ⊑ e2 iff e2 ⊆ e1: removing a state
  // moves up the order.
  std::vector<std::string> names;
  std::vector<std::pair<Elem, Elem>> covers;
  for (Event m = 0; m < count; ++m) {
    names.push_back(model.event_name(m));
    for (std::size_t s = 0; s < k; ++s)
      if (m & (1u << s)) covers.emplace_back(m, m & ~(1u << s));
  }
  auto lattice = must(Lattice::from_relation(std::move(names), covers));

  std::vector<SCS::AgentTable> tables;
  for (std::size_t i = 0; i < model.partitions.size(); ++i) {
    std::vector<Elem> table(count);
    for (Event m = 0; m < count; ++m) table[m] = knowledge(model, i, m);
    tables.emplace_back(model.partitions[i].first, std::move(table));
  }
  return SCS::build(lattice, std::move(tables)).value();
}

Elem aumann_element(const SCS& compiled, const AumannModel& model, Event e) {
  return compiled.lattice().at(model.event_name(e));
}

AumannModel random_aumann_model(std::size_t states, std::size_t agents, std::mt19937_64& rng) {
  AumannModel model;
  for (std::size_t s = 1; s <= states; ++s) model.states.push_back("s" + std::to_string(s));
  std::uniform_int_distribution<std::size_t> pick(0, states - 1);
  for (std::size_t i = 1; i <= agents; ++i) {
    std::vector<std::vector<std::string>> blocks(states);
    for (const auto& s : model.states) blocks[pick(rng)].push_back(s);
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    model.partitions.emplace_back(std::to_string(i), std::move(blocks));
  }
  return model;
}

}  // namespace scs
