#include "twisth/abelian_group.hpp"

#include <sstream>

namespace twisth {

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto part = [&](const std::string& s) {
    if (!first) os << " x ";
    os << s;
    first = false;
  };
  if (free_rank == 1) {
    part("Z");
  } else if (free_rank > 1) {
    part("Z^" + std::to_string(free_rank));
  }
  std::size_t i = 0;
  while (i < torsion.size()) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    std::size_t m = j - i;
    std::string base = "Z/" + torsion[i].str();
    part(m == 1 ? base : "(" + base + ")^" + std::to_string(m));
    i = j;
  }
  return os.str();
}

std::string AbelianGroup::machine_string() const {
  std::ostringstream os;
  os << "rank " << free_rank << '\n' << "torsion";
  for (const Int& d : torsion) os << ' ' << d;
  os << '\n';
  return os.str();
}

}  // namespace twisth
