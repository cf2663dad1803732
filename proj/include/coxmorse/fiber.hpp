#pragma once

#include <vector>

#include "coxmorse/cell_pairs.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/reflection_order.hpp"

namespace coxmorse {

/// Pairs (v, w) with w in W^K and v <= w, where (v', w') <= (v, w) iff
/// v <= v'u <= w'u <= w for some u in W_K.
struct QKPoset {
  const CoxeterSystem* system = nullptr;
  GeneratorSet K;
  std::vector<CellPair> pairs;  // sorted by (v.id, w.id)
  FinitePoset poset;

  std::optional<std::size_t> find(Element v, Element w) const;
};

bool qk_leq(const CoxeterSystem& W, GeneratorSet K, const CellPair& lower, const CellPair& upper);

/// The poset axioms of the relation are verified while building.
QKPoset build_qk(const CoxeterSystem& W, GeneratorSet K);

/// z = v'^{-1} o_l v. Throws AnchorViolation unless z lies in W_K.
Element z_lower(const CoxeterSystem& W, GeneratorSet K, Element v_prime, Element v);

/// z' with {a in W_K : w' a <= w} = [e, z']. Throws LemmaFalsified if the set
/// is not such an interval.
Element z_upper(const CoxeterSystem& W, GeneratorSet K, Element w_prime, Element w);

struct FiberAnchors {
  Element v_prime, w_prime, v, w;
};

/// Pairs (a, b) in W_K x W_K with a <= b, v <= v'a <= w'b <= w,
/// v'a o_r b^{-1} = v' and l(v'a) = l(v') + l(a), ordered as cells:
/// (a', b') <= (a, b) iff a <= a' <= b' <= b.
struct FiberPoset {
  const CoxeterSystem* system = nullptr;
  GeneratorSet K;
  FiberAnchors anchors;
  Element z;
  Element z_prime;
  std::vector<Element> inversions;  // N_R(v')
  CellPairPoset cells;
};

/// The four descriptions of the fiber, each computed independently over
/// W_K x W_K.
struct FiberDescriptions {
  std::vector<CellPair> definition;     // the defining conditions
  std::vector<CellPair> demazure;       // z <= a <= b <= z', v'a o_r b^{-1} = v'
  std::vector<CellPair> inversion;      // z <= a <= b <= z', ta not below b for t in N_R(v')
  std::vector<CellPair> cover_inversion;  // as above, only t with a <. ta
};

FiberDescriptions fiber_descriptions(const CoxeterSystem& W, GeneratorSet K, const FiberAnchors& anchors);

struct DescriptionMismatch {
  std::string description;
  std::vector<CellPair> difference;  // symmetric difference with the definition
};

/// Every description that differs from the definition.
std::vector<DescriptionMismatch> compare_descriptions(const FiberDescriptions& d);

/// With only the length condition l(v'a) = l(v') + l(a) added to the
/// cover-inversion description; agrees with the definition on every instance
/// we sweep, whereas the bare cover-inversion set can be strictly larger.
std::vector<CellPair> cover_inversion_with_length(const CoxeterSystem& W, const FiberAnchors& anchors,
                                                  const FiberDescriptions& d);

enum class FiberCheck {
  AllDescriptions,  // throw PropositionFalsified unless all four agree
  DefinitionOnly,   // build from the definition without comparing
};

/// Throws NotComparable unless (v', w') <= (v, w) in Q_K, AnchorViolation if
/// the fiber is empty, and PropositionFalsified per `check`.
FiberPoset build_fiber_poset(const CoxeterSystem& W, GeneratorSet K, const FiberAnchors& anchors,
                             FiberCheck check = FiberCheck::AllDescriptions);

struct GeneralizedQuotient {
  std::vector<Element> members;  // {a in [z, z'] : l(v'a) = l(v') + l(a)}, id order
  Element top;                   // its unique maximal element
};

/// Throws NonUniqueMaximum if the maximum is not unique, PropositionFalsified
/// if membership disagrees with (a, a) in F, TheoremFalsified if some a below
/// the top has no cover inside the quotient leading towards it.
GeneralizedQuotient generalized_quotient(const FiberPoset& fp);

struct FiberResult {
  ReflectionOrder order;
  GeneralizedQuotient quotient;
  Matching matching;  // on fp.cells.poset
  MorseSummary morse;
  CellPair unmatched;
};

/// Matches {a} x P_a by restricting M([a, z']) under an order with N_R(v')
/// first, for every a in the quotient other than its top. Throws
/// TheoremFalsified with the failing step.
FiberResult fiber_matching(const FiberPoset& fp);

/// (a, b) in F and a <= a' <= b' <= b imply (a', b') in F. Throws CorollaryFalsified.
void verify_convexity(const FiberPoset& fp);

}  // namespace coxmorse
