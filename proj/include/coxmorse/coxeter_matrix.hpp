#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace coxmorse {

/// Symmetric Coxeter matrix with finite off-diagonal entries. Generators are
/// 0-based internally and printed 1-based.
class CoxeterMatrix {
 public:
  /// Validates symmetry, unit diagonal and entries >= 2 off the diagonal.
  CoxeterMatrix(std::vector<std::vector<int>> entries, std::string type_tag = "custom");

  /// Named finite types: An, Bn (= Cn), Dn, E6-E8, F4, G2, H3, H4, I2(m).
  /// Bourbaki numbering; the special bond of Bn sits between n-1 and n.
  static CoxeterMatrix from_type(std::string_view type);

  /// Plain text: optional '#' comments, the rank, then rank rows of integers.
  /// The tokens "inf", "oo" and "0" off the diagonal are rejected as infinite.
  static CoxeterMatrix parse(std::istream& in);
  static CoxeterMatrix from_file(const std::string& path);

  int rank() const noexcept { return static_cast<int>(m_.size()); }
  int operator()(int i, int j) const { return m_[i][j]; }
  const std::string& type_tag() const noexcept { return tag_; }

 private:
  std::vector<std::vector<int>> m_;
  std::string tag_;
};

}  // namespace coxmorse
