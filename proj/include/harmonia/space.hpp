#pragma once

#include <string>

namespace harmonia {

/// A globally homogeneous spherical 3-manifold S^3/G.
struct Space {
  enum class Kind { S3, Lens, Dihedral, Tetrahedral, Octahedral, Icosahedral };

  Kind kind = Kind::S3;
  int param = 0;  // p for lens spaces, m for dihedral spaces

  static Space s3() { return {Kind::S3, 0}; }
  static Space lens(int p);
  static Space dihedral(int m);
  static Space tetrahedral() { return {Kind::Tetrahedral, 0}; }
  static Space octahedral() { return {Kind::Octahedral, 0}; }
  static Space icosahedral() { return {Kind::Icosahedral, 0}; }

  /// Parses the CLI letter (S3, L, D, T, O, I) with its parameter.
  static Space parse(const std::string& tag, int param);

  bool is_polyhedral() const {
    return kind == Kind::Tetrahedral || kind == Kind::Octahedral || kind == Kind::Icosahedral;
  }
  /// True when the group contains -1, i.e. odd wavenumbers carry no modes.
  bool is_binary() const;

  /// Short tag: "S3", "L5", "D3", "T", "O", "I".
  std::string tag() const;
  std::string letter() const;

  friend bool operator==(const Space&, const Space&) = default;
};

}  // namespace harmonia
