#include "scs/error.hpp"

#include <sstream>

namespace scs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownElement: return "unknown-element";
    case ErrorKind::UnknownAgent: return "unknown-agent";
    case ErrorKind::FrameRequired: return "frame-required";
    case ErrorKind::EmptyGroup: return "empty-group";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NotSurjective: return "not-surjective";
    case ErrorKind::NotMeetPreserving: return "not-meet-preserving";
    case ErrorKind::NotRightInverse: return "not-right-inverse";
    case ErrorKind::CarrierMismatch: return "carrier-mismatch";
    case ErrorKind::GroupMismatch: return "group-mismatch";
    case ErrorKind::TableNotTotal: return "table-not-total";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Validation: return "validation";
  }
  return "unknown";
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::ostringstream out;
  bool first = true;
  for (const auto& v : violations) {
    if (!first) out << "; ";
    first = false;
    out << v.rule << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) out << ", ";
      out << v.witness[i];
    }
    out << ")";
  }
  return out.str();
}

}  // namespace scs
