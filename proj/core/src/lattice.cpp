#include "scs/lattice.hpp"

#include <algorithm>

namespace scs {

namespace {

constexpr Elem kNone = static_cast<Elem>(-1);

}  // namespace

Outcome<Lattice> Lattice::build(std::vector<std::string> names,
                                std::span<const std::pair<std::string, std::string>> order) {
  ValidationReport report;
  std::unordered_map<std::string, Elem> lookup;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!lookup.emplace(names[i], static_cast<Elem>(i)).second) report.add("duplicate-element", {names[i]});
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(order.size());
  for (const auto& [lo, hi] : order) {
    auto a = lookup.find(lo);
    auto b = lookup.find(hi);
    if (a == lookup.end()) report.add("unknown-element", {lo});
    if (b == lookup.end()) report.add("unknown-element", {hi});
    if (a != lookup.end() && b != lookup.end()) pairs.emplace_back(a->second, b->second);
  }
  if (!report.ok()) return report;
  return from_relation(std::move(names), pairs);
}

Outcome<Lattice> Lattice::from_relation(std::vector<std::string> names,
                                        std::span<const std::pair<Elem, Elem>> order) {
  ValidationReport report;
  const std::size_t n = names.size();
  if (n == 0) {
    report.add("empty-lattice", {});
    return report;
  }

  Lattice l;
  l.names_ = std::move(names);
  for (std::size_t i = 0; i < n; ++i) {
    if (!l.lookup_.emplace(l.names_[i], static_cast<Elem>(i)).second) {
      report.add("duplicate-element", {l.names_[i]});
    }
  }
  for (const auto& [a, b] : order) {
    if (a >= n || b >= n) report.add("unknown-element", {std::to_string(a >= n ? a : b)});
  }
  if (!report.ok()) return report;

  // Reflexive-transitive closure (Warshall).
  auto& leq = l.leq_;
  leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [a, b] : order) leq[std::size_t{a} * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i]) report.add("antisymmetry", {l.names_[i], l.names_[j]});
  if (!report.ok()) return report;

  // |↑x| and |↓x|; an upper bound u of {a,b} is least iff ↑u is the whole
  // set of upper bounds (upper bounds form an up-set).
  std::vector<std::size_t> up_size(n, 0), down_size(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[i * n + j]) {
        ++up_size[i];
        ++down_size[j];
      }

  l.join_.assign(n * n, kNone);
  l.meet_.assign(n * n, kNone);
  auto minimal_names = [&](const std::vector<Elem>& bounds, bool upper) {
    std::vector<std::string> out;
    for (Elem u : bounds) {
      bool minimal = std::none_of(bounds.begin(), bounds.end(), [&](Elem v) {
        return v != u && (upper ? leq[std::size_t{v} * n + u] : leq[std::size_t{u} * n + v]);
      });
      if (minimal) out.push_back(l.names_[u]);
    }
    return out;
  };
  std::vector<Elem> bounds;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (int upper = 1; upper >= 0; --upper) {
        bounds.clear();
        for (std::size_t u = 0; u < n; ++u) {
          bool ok = upper ? (leq[a * n + u] && leq[b * n + u]) : (leq[u * n + a] && leq[u * n + b]);
          if (ok) bounds.push_back(static_cast<Elem>(u));
        }
        Elem best = kNone;
        for (Elem u : bounds) {
          if ((upper ? up_size[u] : down_size[u]) == bounds.size()) best = u;
        }
        if (best == kNone) {
          std::vector<std::string> witness{l.names_[a], l.names_[b]};
          auto mins = minimal_names(bounds, upper != 0);
          witness.insert(witness.end(), mins.begin(), mins.end());
          if (bounds.empty()) {
            report.add(upper ? "no-upper-bound" : "no-lower-bound", std::move(witness));
          } else {
            report.add(upper ? "ambiguous-lub" : "ambiguous-glb", std::move(witness));
          }
          continue;
        }
        auto& table = upper ? l.join_ : l.meet_;
        table[a * n + b] = best;
        table[b * n + a] = best;
      }
    }
  }
  if (!report.ok()) return report;

  // With all binary bounds present, bottom is the element below everything.
  for (std::size_t i = 0; i < n; ++i) {
    if (up_size[i] == n) l.bottom_ = static_cast<Elem>(i);
    if (down_size[i] == n) l.top_ = static_cast<Elem>(i);
  }

  for (Elem a = 0; a < n && l.distributivity_.distributive; ++a)
    for (Elem b = 0; b < n && l.distributivity_.distributive; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), l.join(a, c))) {
          l.distributivity_ = {false, std::array<Elem, 3>{a, b, c}};
          break;
        }
      }

  if (l.is_distributive()) {
    l.implies_.assign(n * n, kNone);
    for (Elem c = 0; c < n; ++c)
      for (Elem d = 0; d < n; ++d) {
        Elem acc = l.top_;
        for (Elem e = 0; e < n; ++e)
          if (l.leq(d, l.join(c, e))) acc = l.meet(acc, e);
        l.implies_[l.index(c, d)] = acc;
      }
  }

  for (Elem e = 0; e < n; ++e) {
    if (e == l.bottom_) continue;
    Elem below = l.bottom_;
    for (Elem x = 0; x < n; ++x)
      if (x != e && l.leq(x, e)) below = l.join(below, x);
    if (below != e) l.join_irreducibles_.push_back(e);
  }
  return l;
}

const std::string& Lattice::name(Elem e) const {
  check(e);
  return names_[e];
}

std::optional<Elem> Lattice::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Elem Lattice::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(name) + "'");
}

void Lattice::throw_unknown(Elem e) {
  throw Error(ErrorKind::UnknownElement, "element index " + std::to_string(e) + " out of range");
}

Elem Lattice::join(std::span<const Elem> elems) const {
  Elem acc = bottom_;
  for (Elem e : elems) {
    check(e);
    acc = join(acc, e);
  }
  return acc;
}

Elem Lattice::meet(std::span<const Elem> elems) const {
  Elem acc = top_;
  for (Elem e : elems) {
    check(e);
    acc = meet(acc, e);
  }
  return acc;
}

Elem Lattice::implies(Elem c, Elem d) const {
  if (!is_distributive()) {
    throw Error(ErrorKind::FrameRequired, "Heyting implication requires a distributive lattice");
  }
  check(c);
  check(d);
  return implies_[index(c, d)];
}

std::vector<std::pair<Elem, Elem>> Lattice::covers() const {
  const auto n = static_cast<Elem>(size());
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool between = false;
      for (Elem x = 0; x < n && !between; ++x)
        between = x != a && x != b && leq(a, x) && leq(x, b);
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::size_t> Lattice::heights() const {
  const auto n = static_cast<Elem>(size());
  // Process in order of down-set size, which is a linear extension.
  std::vector<Elem> order(n);
  std::vector<std::size_t> down(n, 0);
  for (Elem a = 0; a < n; ++a) {
    order[a] = a;
    for (Elem x = 0; x < n; ++x) down[a] += leq(x, a) ? 1 : 0;
  }
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return down[a] < down[b]; });
  std::vector<std::size_t> h(n, 0);
  auto cov = covers();
  for (Elem e : order)
    for (auto [a, b] : cov)
      if (b == e) h[e] = std::max(h[e], h[a] + 1);
  return h;
}

std::vector<std::pair<std::string, std::string>> Lattice::cover_names() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : covers()) out.emplace_back(names_[a], names_[b]);
  return out;
}

}  // namespace scs
