#include "harmonia/space.hpp"

#include <stdexcept>

namespace harmonia {

Space Space::lens(int p) {
  if (p < 1) throw std::invalid_argument("lens space needs p >= 1");
  return {Kind::Lens, p};
}

Space Space::dihedral(int m) {
  if (m < 1) throw std::invalid_argument("dihedral space needs m >= 1");
  return {Kind::Dihedral, m};
}

Space Space::parse(const std::string& tag, int param) {
  if (tag == "S3") return s3();
  if (tag == "L") return lens(param);
  if (tag == "D") return dihedral(param);
  if (tag == "T") return tetrahedral();
  if (tag == "O") return octahedral();
  if (tag == "I") return icosahedral();
  throw std::invalid_argument("unknown space '" + tag + "'");
}

bool Space::is_binary() const {
  switch (kind) {
    case Kind::S3: return false;
    case Kind::Lens: return param % 2 == 0;
    default: return true;
  }
}

std::string Space::letter() const {
  switch (kind) {
    case Kind::S3: return "S3";
    case Kind::Lens: return "L";
    case Kind::Dihedral: return "D";
    case Kind::Tetrahedral: return "T";
    case Kind::Octahedral: return "O";
    case Kind::Icosahedral: return "I";
  }
  return "?";
}

std::string Space::tag() const {
  if (kind == Kind::Lens || kind == Kind::Dihedral) return letter() + std::to_string(param);
  return letter();
}

}  // namespace harmonia
