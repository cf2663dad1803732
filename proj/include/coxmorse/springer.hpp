#pragma once

#include <vector>

#include "coxmorse/cell_pairs.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/reflection_order.hpp"

namespace coxmorse {

/// The pair poset Z_{J,J'}: pairs (v, w) with v <= w such that for i in J,
/// s_i w <= w and v is not below s_i w, and for j in J', v <= s_j v and s_j v
/// is not below w.
struct SpringerPoset {
  const CoxeterSystem* system = nullptr;
  GeneratorSet J;
  GeneratorSet J_prime;
  CellPairPoset cells;
  std::vector<Element> bottoms;  // distinct first coordinates, id order
};

bool in_springer_set(const CoxeterSystem& W, GeneratorSet J, GeneratorSet J_prime, Element v, Element w);

/// Throws OverlappingSubsets unless J and J' are disjoint.
SpringerPoset build_springer_poset(const CoxeterSystem& W, GeneratorSet J, GeneratorSet J_prime);

struct SpringerSlice {
  Element v;
  std::vector<Element> Z;  // {w : (v, w) in Z_{J,J'}}
  std::vector<Element> P;  // {w : v <= w, s_j v not below w for j in J'}
  std::vector<Element> Q;  // {w : v <= w, v not below s_i w for i in J}
};

/// Throws NotMinimalCosetRep unless v has no left descent in J'.
SpringerSlice build_slices(const SpringerPoset& sp, Element v);

/// [v, w0] intersected with the coset W_J w. Throws NotMinimalCosetRep unless
/// w has no left descent in J.
std::vector<Element> coset_piece(const CoxeterSystem& W, GeneratorSet J, Element v, Element w);

/// The least x in W_J with {a in W_J : v <= a * (^J w)} = [x, w_J]. Throws
/// LemmaFalsified if that set is not such an interval, NotComparable unless v <= w.
Element interval_in_parabolic(const CoxeterSystem& W, GeneratorSet J, Element v, Element w);

struct SpringerResult {
  ReflectionOrder order;
  Matching matching;      // on sp.cells.poset
  MorseSummary morse;
  CellPair unmatched;
  std::size_t slices = 0;  // slices matched through [v, w0]
};

/// Matches each slice Z_v, v != w_{J'} w0, by restricting M([v, w0]) under an
/// order with T cap W_{J'} first and T cap W_J last, and checks every step
/// of the contractibility argument. Throws TheoremFalsified with the failing
/// step.
SpringerResult springer_matching(const SpringerPoset& sp);

}  // namespace coxmorse
