#pragma once

#include <iosfwd>
#include <optional>

#include "cgt/matgroup.hpp"
#include "cgt/permgroup.hpp"

namespace cgt {

// Group spec files. Permutation grammar:
//   # comment
//   degree N
//   order N            (optional; checked when present)
//   gen (1 2 3)(4 5)
// Matrix grammar:
//   field p k
//   dim n
//   order N            (optional; checked when present)
//   gen [[1,2],[0,1]]  (entries integers or "a0+a1*t" over extensions)
struct ParsedGroupFile {
  std::optional<PermGroup> perm;
  std::optional<MatGroup> mat;
  std::optional<u64> declared_order;
};

ParsedGroupFile parse_group_file(const std::string& path);
ParsedGroupFile parse_group_text(const std::string& text, const std::string& origin);

void write_perm_group(std::ostream& out, const PermGroup& g, bool with_order);
std::string perm_group_to_text(const PermGroup& g, bool with_order);

}  // namespace cgt
