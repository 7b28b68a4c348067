#include "scs/extrusion.hpp"

#include <string>

namespace scs {

const char* to_string(ExtrusionMethod m) {
  switch (m) {
    case ExtrusionMethod::SupPreimage: return "sup_preimage";
    case ExtrusionMethod::InfPreimage: return "inf_preimage";
    case ExtrusionMethod::External: return "external";
  }
  return "?";
}

bool ExtrusionFunction::is_right_inverse_of(const SpaceFunction& f) const {
  if (!(f.lattice() == *lattice_)) return false;
  for (Elem c = 0; c < table_.size(); ++c)
    if (f(table_[c]) != c) return false;
  return true;
}

ExtrusionFunction ExtrusionFunction::external(const SpaceFunction& f, std::vector<Elem> table) {
  const auto& l = f.lattice();
  if (table.size() != l.size()) {
    throw Error(ErrorKind::TableNotTotal, "extrusion table must have one image per element");
  }
  for (Elem c = 0; c < table.size(); ++c) {
    l.check(table[c]);
    if (f(table[c]) != c) {
      throw Error(ErrorKind::NotRightInverse, "E.1 fails at " + l.name(c));
    }
  }
  return ExtrusionFunction(f.lattice_ptr(), std::move(table), ExtrusionMethod::External);
}

SurjectivityCheck is_surjective(const SpaceFunction& f) {
  const auto& l = f.lattice();
  std::vector<bool> hit(l.size(), false);
  for (Elem c = 0; c < l.size(); ++c) hit[f(c)] = true;
  for (Elem c = 0; c < l.size(); ++c)
    if (!hit[c]) return {false, c};
  return {};
}

bool has_right_inverse_precheck(const SpaceFunction& f) {
  const auto& l = f.lattice();
  return f(l.top()) == l.top();
}

PreservationCheck preserves_meets(const Lattice& l, const std::vector<Elem>& table) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (table[l.meet(a, b)] != l.meet(table[a], table[b])) return {false, std::pair{a, b}};
  if (table[l.top()] != l.top()) return {false, std::pair{l.top(), l.top()}};
  return {};
}

PreservationCheck preserves_joins(const Lattice& l, const std::vector<Elem>& table) {
  const auto n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (table[l.join(a, b)] != l.join(table[a], table[b])) return {false, std::pair{a, b}};
  if (table[l.bottom()] != l.bottom()) return {false, std::pair{l.bottom(), l.bottom()}};
  return {};
}

PreservationCheck preserves_meets(const SpaceFunction& f) { return preserves_meets(f.lattice(), f.table()); }

namespace {

void require_surjective(const SpaceFunction& f) {
  auto s = is_surjective(f);
  if (!s.surjective) {
    throw Error(ErrorKind::NotSurjective, "not surjective, witness " + f.lattice().name(*s.missing));
  }
}

// Folds the preimage of every element with the given binary operation.
template <typename Fold>
std::vector<Elem> fold_preimages(const SpaceFunction& f, Elem unit, Fold fold) {
  const auto& l = f.lattice();
  std::vector<Elem> table(l.size(), unit);
  for (Elem x = 0; x < l.size(); ++x) table[f(x)] = fold(table[f(x)], x);
  return table;
}

}  // namespace

ExtrusionFunction extrusion_sup(const SpaceFunction& f) {
  require_surjective(f);
  const auto& l = f.lattice();
  auto table = fold_preimages(f, l.bottom(), [&](Elem a, Elem b) { return l.join(a, b); });
  ExtrusionFunction ext(f.lattice_ptr(), std::move(table), ExtrusionMethod::SupPreimage);
  if (!ext.is_right_inverse_of(f) || !preserves_meets(l, ext.table()).preserves) {
    throw Error(ErrorKind::InvalidArgument, "sup-preimage construction failed its post-check");
  }
  return ext;
}

ExtrusionFunction extrusion_inf(const SpaceFunction& f) {
  require_surjective(f);
  const auto& l = f.lattice();
  auto meets = preserves_meets(f);
  if (!meets.preserves) {
    throw Error(ErrorKind::NotMeetPreserving, "not meet-preserving, witness (" + l.name(meets.witness->first) +
                                                  ", " + l.name(meets.witness->second) + ")");
  }
  auto table = fold_preimages(f, l.top(), [&](Elem a, Elem b) { return l.meet(a, b); });
  ExtrusionFunction ext(f.lattice_ptr(), std::move(table), ExtrusionMethod::InfPreimage);
  if (!ext.is_right_inverse_of(f) || !preserves_joins(l, ext.table()).preserves) {
    throw Error(ErrorKind::InvalidArgument, "inf-preimage construction failed its post-check");
  }
  return ext;
}

bool verify_extrusion_law(const SCS& scs, AgentId agent, const ExtrusionFunction& ext, Elem c, Elem d) {
  const auto& f = scs.space(agent);
  if (!ext.is_right_inverse_of(f)) {
    throw Error(ErrorKind::NotRightInverse, "extrusion is not a right inverse of agent " + scs.agent_name(agent));
  }
  const auto& l = scs.lattice();
  return f(l.join(c, ext(d))) == l.join(f(c), d);
}

}  // namespace scs
