#include "polypart/report.hpp"

#include <sstream>

namespace polypart {

std::string AuditReport::to_csv() const {
  std::ostringstream os;
  os << "check_name,observed,bound,pass\n";
  for (const auto& e : entries)
    os << e.name << ',' << e.observed.get_str() << ',' << e.bound.get_str()
       << ',' << (e.pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace polypart
