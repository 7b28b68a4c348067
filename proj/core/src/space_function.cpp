#include "scs/space_function.hpp"

#include <string>

namespace scs {

ValidationReport check_space_axioms(const Lattice& lattice, std::span<const Elem> raw) {
  const auto n = static_cast<Elem>(lattice.size());
  if (raw.size() != n) {
    throw Error(ErrorKind::TableNotTotal, "space function table has " + std::to_string(raw.size()) +
                                              " entries, lattice has " + std::to_string(n));
  }
  for (Elem v : raw) lattice.check(v);

  ValidationReport report;
  const Elem bot = lattice.bottom();
  if (raw[bot] != bot) report.add("S.1", {lattice.name(bot), lattice.name(raw[bot])});
  for (Elem c = 0; c < n; ++c)
    for (Elem d = c + 1; d < n; ++d) {
      if (raw[lattice.join(c, d)] != lattice.join(raw[c], raw[d])) {
        report.add("S.2", {lattice.name(c), lattice.name(d)});
      }
    }
  return report;
}

Outcome<SpaceFunction> SpaceFunction::make(LatticePtr lattice, std::vector<Elem> table) {
  if (!lattice) throw Error(ErrorKind::InvalidArgument, "null lattice");
  auto report = check_space_axioms(*lattice, table);
  if (!report.ok()) return report;
  return SpaceFunction(std::move(lattice), std::move(table));
}

namespace {

void require_same_carrier(const SpaceFunction& f, const SpaceFunction& g) {
  if (f.lattice_ptr() != g.lattice_ptr() && !(f.lattice() == g.lattice())) {
    throw Error(ErrorKind::CarrierMismatch, "space functions over different lattices");
  }
}

}  // namespace

bool fn_leq(const SpaceFunction& f, const SpaceFunction& g) {
  require_same_carrier(f, g);
  const auto& l = f.lattice();
  for (Elem c = 0; c < l.size(); ++c)
    if (!l.leq(f(c), g(c))) return false;
  return true;
}

SpaceFunction fn_join(const SpaceFunction& f, const SpaceFunction& g) {
  require_same_carrier(f, g);
  const auto& l = f.lattice();
  std::vector<Elem> table(l.size());
  for (Elem c = 0; c < l.size(); ++c) table[c] = l.join(f(c), g(c));
  return SpaceFunction(f.lattice_ptr(), std::move(table));
}

SpaceFunction lambda_top(const LatticePtr& lattice) {
  std::vector<Elem> table(lattice->size(), lattice->top());
  table[lattice->bottom()] = lattice->bottom();
  return SpaceFunction(lattice, std::move(table));
}

SpaceFunction lambda_bot(const LatticePtr& lattice) {
  return SpaceFunction(lattice, std::vector<Elem>(lattice->size(), lattice->bottom()));
}

Elem project(const SpaceFunction& f, Elem c) {
  const auto& l = f.lattice();
  l.check(c);
  Elem acc = l.bottom();
  for (Elem e = 0; e < l.size(); ++e)
    if (l.leq(f(e), c)) acc = l.join(acc, e);
  return acc;
}

}  // namespace scs
