#pragma once

#include <string>
#include <string_view>

#include "phigroup/group.hpp"

namespace phigroup {

/// `{"name": str, "order": int, "identity": int, "table": [[int]]}`; an
/// optional "labels" array is carried through.
std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(std::string_view text, const GroupLimits& limits = {});
FiniteGroup load_group_file(const std::string& path, const GroupLimits& limits = {});

class GroupSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds a group from a spec string:
///   cyclic:N  abelian:D1xD2x...  dihedral:M  dicyclic:M  sym:K  alt:K
///   sdp:A:B:R  prod:<spec>,<spec>[,...]  file:<path.json>
/// Nested products need parentheses, e.g. prod:(prod:cyclic:2,cyclic:2),cyclic:3.
/// Throws GroupSpecError on malformed input and OrderCapExceeded above the cap.
FiniteGroup parse_group_spec(std::string_view spec, const GroupLimits& limits = {});

}  // namespace phigroup
