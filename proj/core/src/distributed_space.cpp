#include "scs/distributed_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace scs {

OpCounts& OpCounts::operator+=(const OpCounts& o) {
  joins += o.joins;
  meets += o.meets;
  implications += o.implications;
  recursive_calls += o.recursive_calls;
  memo_hits += o.memo_hits;
  candidates += o.candidates;
  return *this;
}

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Part1: return "part1";
    case Algorithm::Part2: return "part2";
    case Algorithm::Part3: return "part3";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
  if (s == "oracle") return Algorithm::Oracle;
  if (s == "part1") return Algorithm::Part1;
  if (s == "part2") return Algorithm::Part2;
  if (s == "part3") return Algorithm::Part3;
  return std::nullopt;
}

namespace {

// Backtracking over assignments of images to join-irreducibles. A space
// function is monotone, so the assignment is monotone along the order of
// join-irreducibles, and f(c) = ⨆{f(j) | j ⊑ c}. On distributive lattices
// every monotone assignment extends to a join-homomorphism (join-irreducibles
// are join-prime there); otherwise the extension is checked against S.2.
class HomSearch {
 public:
  HomSearch(const Lattice& lattice, std::span<const Elem> bound, const OracleOptions& options)
      : l_(lattice) {
    const auto& jis = lattice.join_irreducibles();
    if (jis.size() > options.max_join_irreducibles) {
      throw Error(ErrorKind::CapExceeded,
                  "lattice has " + std::to_string(jis.size()) + " join-irreducibles, enumeration cap is " +
                      std::to_string(options.max_join_irreducibles));
    }
    if (!bound.empty() && bound.size() != jis.size()) {
      throw Error(ErrorKind::InvalidArgument, "bound must give one element per join-irreducible");
    }
    const auto heights = lattice.heights();
    std::vector<std::size_t> order(jis.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return heights[jis[a]] < heights[jis[b]]; });
    for (std::size_t k : order) {
      ji_.push_back(jis[k]);
      bound_.push_back(bound.empty() ? lattice.top() : bound[k]);
    }

    const std::size_t m = ji_.size();
    below_.resize(m);
    options_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t p = 0; p < k; ++p)
        if (l_.leq(ji_[p], ji_[k])) below_[k].push_back(p);
      for (Elem v = 0; v < l_.size(); ++v)
        if (l_.leq(v, bound_[k])) options_[k].push_back(v);
    }
    under_.resize(l_.size());
    for (Elem c = 0; c < l_.size(); ++c)
      for (std::size_t k = 0; k < m; ++k)
        if (l_.leq(ji_[k], c)) under_[c].push_back(k);
    values_.assign(m, l_.bottom());
  }

  std::size_t size() const noexcept { return ji_.size(); }

  template <typename Leaf>
  void run(Leaf&& leaf) {
    descend(0, leaf);
  }

  // Values are indexed in this search's join-irreducible order.
  void extend(std::span<const Elem> values, std::vector<Elem>& table) const {
    table.assign(l_.size(), l_.bottom());
    for (Elem c = 0; c < l_.size(); ++c) table[c] = join_under(values, c);
  }

  Elem join_under(std::span<const Elem> values, Elem c) const {
    Elem acc = l_.bottom();
    for (std::size_t k : under_[c]) acc = l_.join(acc, values[k]);
    return acc;
  }

  bool satisfies_s2(const std::vector<Elem>& table) const {
    const auto n = static_cast<Elem>(l_.size());
    for (Elem c = 0; c < n; ++c)
      for (Elem d = c + 1; d < n; ++d)
        if (table[l_.join(c, d)] != l_.join(table[c], table[d])) return false;
    return true;
  }

 private:
  template <typename Leaf>
  void descend(std::size_t k, Leaf& leaf) {
    if (k == ji_.size()) {
      leaf(std::span<const Elem>(values_));
      return;
    }
    for (Elem v : options_[k]) {
      bool monotone = std::all_of(below_[k].begin(), below_[k].end(),
                                  [&](std::size_t p) { return l_.leq(values_[p], v); });
      if (!monotone) continue;
      values_[k] = v;
      descend(k + 1, leaf);
    }
  }

  const Lattice& l_;
  std::vector<Elem> ji_;
  std::vector<Elem> bound_;
  std::vector<std::vector<std::size_t>> below_;
  std::vector<std::vector<Elem>> options_;
  std::vector<std::vector<std::size_t>> under_;
  std::vector<Elem> values_;
};

void require_frame(const Lattice& l) {
  if (!l.is_distributive()) {
    throw Error(ErrorKind::FrameRequired,
                "recursive Δ algorithms require a distributive lattice; use the oracle");
  }
}

// Recursive halving evaluation of Δ over slices of the sorted group.
class PartEngine {
 public:
  PartEngine(const SCS& scs, const Group& group, Algorithm variant, bool trace)
      : scs_(scs), l_(scs.lattice()), members_(group.members()), variant_(variant), trace_(trace) {
    if (variant == Algorithm::Oracle) throw Error(ErrorKind::InvalidArgument, "oracle is not a recursive variant");
    require_frame(l_);
    if (members_.empty()) throw Error(ErrorKind::EmptyGroup, "recursive Δ needs a non-empty group");
    scs.check(group);
  }

  Elem eval(Elem c) { return eval(0, members_.size(), c); }

  OpCounts counts;
  std::vector<CallRecord> calls;

 private:
  Elem eval(std::size_t lo, std::size_t hi, Elem c) {
    ++counts.recursive_calls;
    if (hi - lo == 1) return scs_.apply(members_[lo], c);

    auto& slot = memo_[{lo, hi}];
    if (slot.empty()) slot.assign(l_.size(), kUnset);
    if (slot[c] != kUnset) {
      ++counts.memo_hits;
      return slot[c];
    }

    const std::size_t mid = lo + (hi - lo) / 2;  // |J| = ⌊|I|/2⌋
    const auto n = static_cast<Elem>(l_.size());
    Elem acc = l_.top();
    std::uint64_t candidates = 0;
    auto take = [&](Elem x, Elem y) {
      ++candidates;
      ++counts.joins;
      ++counts.meets;
      acc = l_.meet(acc, l_.join(x, y));
    };
    switch (variant_) {
      case Algorithm::Part1:
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b) {
            ++counts.joins;
            if (l_.leq(c, l_.join(a, b))) take(eval(lo, mid, a), eval(mid, hi, b));
          }
        break;
      case Algorithm::Part2:
        for (Elem a = 0; a < n; ++a) {
          ++counts.implications;
          take(eval(lo, mid, a), eval(mid, hi, l_.implies(a, c)));
        }
        break;
      case Algorithm::Part3:
        for (Elem a = 0; a < n; ++a) {
          if (!l_.leq(a, c)) continue;
          ++counts.implications;
          take(eval(lo, mid, a), eval(mid, hi, l_.implies(a, c)));
        }
        break;
      case Algorithm::Oracle:
        break;
    }
    counts.candidates += candidates;
    if (trace_) calls.push_back({lo, hi, c, candidates});
    slot[c] = acc;
    return acc;
  }

  static constexpr Elem kUnset = static_cast<Elem>(-1);

  const SCS& scs_;
  const Lattice& l_;
  const std::vector<AgentId>& members_;
  Algorithm variant_;
  bool trace_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>> memo_;
};

}  // namespace

void for_each_space_function(const Lattice& lattice, std::span<const Elem> bound,
                             const std::function<void(std::span<const Elem>)>& visit,
                             const OracleOptions& options) {
  HomSearch search(lattice, bound, options);
  std::vector<Elem> table;
  search.run([&](std::span<const Elem> values) {
    search.extend(values, table);
    if (lattice.is_distributive() || search.satisfies_s2(table)) visit(table);
  });
}

std::uint64_t count_space_functions(const Lattice& lattice, const OracleOptions& options) {
  HomSearch search(lattice, {}, options);
  std::uint64_t count = 0;
  std::vector<Elem> table;
  search.run([&](std::span<const Elem> values) {
    if (lattice.is_distributive()) {
      ++count;
      return;
    }
    search.extend(values, table);
    if (search.satisfies_s2(table)) ++count;
  });
  return count;
}

DeltaResult delta_oracle(const SCS& scs, const Group& group, const OracleOptions& options) {
  scs.check(group);
  const auto& l = scs.lattice();
  const auto& jis = l.join_irreducibles();
  if (jis.size() > options.max_join_irreducibles) {
    throw Error(ErrorKind::CapExceeded,
                "lattice has " + std::to_string(jis.size()) + " join-irreducibles, oracle cap is " +
                    std::to_string(options.max_join_irreducibles));
  }

  // f ⊑̇ δ_i for a join-homomorphism f reduces to f(j) ⊑ δ_i(j) on
  // join-irreducibles, since every element is the join of those below it.
  std::vector<Elem> bound(jis.size(), l.top());
  for (std::size_t k = 0; k < jis.size(); ++k)
    for (AgentId i : group) bound[k] = l.meet(bound[k], scs.apply(i, jis[k]));

  HomSearch search(l, bound, options);
  // Pointwise join of all candidates: (⨆F)(c) = ⨆_{j ⊑ c} ⨆_{f ∈ F} f(j).
  std::vector<Elem> acc(search.size(), l.bottom());
  std::vector<Elem> table;
  OpCounts counts;
  search.run([&](std::span<const Elem> values) {
    if (!l.is_distributive()) {
      search.extend(values, table);
      if (!search.satisfies_s2(table)) return;
    }
    ++counts.candidates;
    for (std::size_t k = 0; k < values.size(); ++k) acc[k] = l.join(acc[k], values[k]);
    counts.joins += values.size();
  });
  search.extend(acc, table);
  return {group, SpaceFunctionAccess::trusted(scs.lattice_ptr(), std::move(table)), Algorithm::Oracle, counts, {}};
}

SpaceFunction delta_empty(const SCS& scs) { return lambda_top(scs.lattice_ptr()); }

Elem delta_part(const SCS& scs, const Group& group, Elem c, Algorithm variant, OpCounts* counts) {
  PartEngine engine(scs, group, variant, false);
  scs.lattice().check(c);
  Elem value = engine.eval(c);
  if (counts) *counts = engine.counts;
  return value;
}

DeltaResult delta_table(const SCS& scs, const Group& group, Algorithm variant, bool trace) {
  PartEngine engine(scs, group, variant, trace);
  std::vector<Elem> table(scs.lattice().size());
  for (Elem c = 0; c < table.size(); ++c) table[c] = engine.eval(c);
  return {group, SpaceFunctionAccess::trusted(scs.lattice_ptr(), std::move(table)), variant, engine.counts,
          std::move(engine.calls)};
}

DeltaResult delta(const SCS& scs, const Group& group, Algorithm algorithm, const OracleOptions& options) {
  scs.check(group);
  if (group.empty()) {
    if (algorithm != Algorithm::Oracle) require_frame(scs.lattice());
    return {group, delta_empty(scs), algorithm, {}, {}};
  }
  if (algorithm == Algorithm::Oracle) return delta_oracle(scs, group, options);
  return delta_table(scs, group, algorithm);
}

Algorithm default_algorithm(const Lattice& lattice) {
  return lattice.is_distributive() ? Algorithm::Part3 : Algorithm::Oracle;
}

Elem agent_projection(const SCS& scs, AgentId agent, Elem c) { return project(scs.space(agent), c); }

Elem join_projection(const SCS& scs, const Group& group, Elem c) {
  scs.check(group);
  const auto& l = scs.lattice();
  l.check(c);
  Elem acc = l.bottom();
  for (AgentId i : group) acc = l.join(acc, agent_projection(scs, i, c));
  return acc;
}

Elem group_projection(const SCS& scs, const Group& group, Elem c, const DeltaResult& delta) {
  if (!(delta.group == group)) {
    throw Error(ErrorKind::GroupMismatch, "Δ was computed for a different group");
  }
  if (delta.table.lattice_ptr() != scs.lattice_ptr()) {
    throw Error(ErrorKind::CarrierMismatch, "Δ was computed over a different lattice");
  }
  return project(delta.table, c);
}

Elem group_projection(const SCS& scs, const Group& group, Elem c) {
  return group_projection(scs, group, c, delta(scs, group, default_algorithm(scs.lattice())));
}

namespace {

Elem delta_at(const SCS& scs, const Group& group, Elem e) {
  if (group.empty()) return delta_empty(scs)(e);
  if (scs.lattice().is_distributive()) return delta_part(scs, group, e, Algorithm::Part3);
  return delta_oracle(scs, group).table(e);
}

}  // namespace

std::optional<Group> finite_witness(const SCS& scs, const Group& group, Elem c, Elem e) {
  scs.check(group);
  const auto& l = scs.lattice();
  l.check(c);
  l.check(e);
  if (!l.leq(delta_at(scs, group, e), c)) return std::nullopt;

  const auto& all = group.members();
  const std::size_t m = all.size();
  std::vector<std::size_t> pick;
  for (std::size_t k = 0; k <= m; ++k) {
    // lexicographic k-combinations of positions in the sorted group
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<AgentId> ids;
      for (std::size_t p : pick) ids.push_back(all[p]);
      Group sub(std::move(ids));
      if (l.leq(delta_at(scs, sub, e), c)) return sub;
      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t q = pos; q < k; ++q) pick[q] = pick[q - 1] + 1;
    }
  }
  return group;  // unreachable: J = I qualifies
}

}  // namespace scs
