#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coxmorse/coxeter_matrix.hpp"

namespace coxmorse::detail {

/// Right regular action of the generators, as produced by enumerating the
/// cosets of the trivial subgroup. table[c * rank + s] = c.s, and coset 0 is
/// the identity.
struct CayleyTable {
  int rank = 0;
  std::size_t size = 0;
  std::vector<std::uint32_t> table;
};

/// Felsch-strategy Todd-Coxeter enumeration over <s_i | s_i^2, (s_i s_j)^m_ij>.
/// Throws GroupTooLarge when live cosets exceed `max_elements` or the coset
/// table exceeds `max_cosets` during enumeration.
CayleyTable enumerate_cosets(const CoxeterMatrix& matrix, std::size_t max_elements, std::size_t max_cosets);

}  // namespace coxmorse::detail
