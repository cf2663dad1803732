#include "coxmorse/springer.hpp"

#include <algorithm>
#include <iterator>

#include "coxmorse/error.hpp"

namespace coxmorse {

namespace {

[[noreturn]] void falsified(const SpringerPoset& sp, const std::string& what) {
  fail(ErrorCode::TheoremFalsified, "Z_{J,J'} with J=" + format_subset(sp.J) + ", J'=" + format_subset(sp.J_prime) +
                                        ": " + what);
}

}  // namespace

bool in_springer_set(const CoxeterSystem& W, GeneratorSet J, GeneratorSet J_prime, Element v, Element w) {
  if (!W.bruhat_leq(v, w)) return false;
  for (auto i : J.members()) {
    const auto siw = W.left_multiply(i, w);
    if (!W.bruhat_leq(siw, w) || W.bruhat_leq(v, siw)) return false;
  }
  for (auto j : J_prime.members()) {
    const auto sjv = W.left_multiply(j, v);
    if (!W.bruhat_leq(v, sjv) || W.bruhat_leq(sjv, w)) return false;
  }
  return true;
}

SpringerPoset build_springer_poset(const CoxeterSystem& W, GeneratorSet J, GeneratorSet J_prime) {
  const auto all = GeneratorSet::all(W.rank());
  if (!J.subset_of(all) || !J_prime.subset_of(all)) fail(ErrorCode::InvalidSubset, "subset exceeds the rank");
  if (!J.disjoint(J_prime)) fail(ErrorCode::OverlappingSubsets, "J and J' must be disjoint");
  std::vector<CellPair> pairs;
  for (auto v : W.elements()) {
    for (auto w : W.elements()) {
      if (in_springer_set(W, J, J_prime, v, w)) pairs.emplace_back(v, w);
    }
  }
  SpringerPoset sp;
  sp.system = &W;
  sp.J = J;
  sp.J_prime = J_prime;
  sp.cells = cell_pair_poset(W, std::move(pairs));
  for (const auto& p : sp.cells.pairs) {
    if (sp.bottoms.empty() || sp.bottoms.back() != p.first) sp.bottoms.push_back(p.first);
  }
  return sp;
}

SpringerSlice build_slices(const SpringerPoset& sp, Element v) {
  const auto& W = *sp.system;
  if (!(W.descents(v, Side::Left) & sp.J_prime).empty()) {
    fail(ErrorCode::NotMinimalCosetRep, format_element(W, v) + " has a left descent in J'");
  }
  SpringerSlice s;
  s.v = v;
  for (const auto& p : sp.cells.pairs) {
    if (p.first == v) s.Z.push_back(p.second);
  }
  for (auto w : W.interval(v, W.longest())) {
    bool in_p = true;
    for (auto j : sp.J_prime.members()) in_p = in_p && !W.bruhat_leq(W.left_multiply(j, v), w);
    bool in_q = true;
    for (auto i : sp.J.members()) in_q = in_q && !W.bruhat_leq(v, W.left_multiply(i, w));
    if (in_p) s.P.push_back(w);
    if (in_q) s.Q.push_back(w);
  }
  return s;
}

std::vector<Element> coset_piece(const CoxeterSystem& W, GeneratorSet J, Element v, Element w) {
  if (!(W.descents(w, Side::Left) & J).empty()) {
    fail(ErrorCode::NotMinimalCosetRep, format_element(W, w) + " has a left descent in J");
  }
  std::vector<Element> out;
  for (auto a : W.parabolic(J).members) {
    const auto x = W.multiply(a, w);
    if (W.bruhat_leq(v, x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element interval_in_parabolic(const CoxeterSystem& W, GeneratorSet J, Element v, Element w) {
  if (!W.bruhat_leq(v, w)) fail(ErrorCode::NotComparable, format_element(W, v) + " is not below " + format_element(W, w));
  const auto& WJ = W.parabolic(J);
  const auto rep = W.min_rep_left(w, J);
  std::vector<Element> set;
  for (auto a : WJ.members) {
    if (W.bruhat_leq(v, W.multiply(a, rep))) set.push_back(a);
  }
  std::vector<Element> minimal;
  for (auto a : set) {
    bool is_min = true;
    for (auto b : set) is_min = is_min && !W.bruhat_less(b, a);
    if (is_min) minimal.push_back(a);
  }
  const auto where = "{a in W_J : " + format_element(W, v) + " <= a * " + format_element(W, rep) + "}";
  if (minimal.size() != 1) {
    fail(ErrorCode::LemmaFalsified, where + " has " + std::to_string(minimal.size()) + " minimal elements");
  }
  const auto x = minimal.front();
  std::vector<Element> expected;
  for (auto a : WJ.members) {
    if (W.bruhat_leq(x, a) && W.bruhat_leq(a, WJ.longest)) expected.push_back(a);
  }
  if (expected != set) fail(ErrorCode::LemmaFalsified, where + " is not the interval [x, w_J]");
  return x;
}

SpringerResult springer_matching(const SpringerPoset& sp) {
  const auto& W = *sp.system;
  const auto& cells = sp.cells;
  const auto& Z = cells.poset;
  auto order = order_for_springer(W, sp.J_prime, sp.J);

  std::vector<Element> in_jp, out_jp, in_j, out_j;
  for (auto t : W.reflections()) {
    (W.in_parabolic(t, sp.J_prime) ? in_jp : out_jp).push_back(t);
    (W.in_parabolic(t, sp.J) ? in_j : out_j).push_back(t);
  }
  if (!precedes_all(order, in_jp, out_jp) || !precedes_all(order, out_j, in_j)) {
    fail(ErrorCode::Internal, "constructed order violates its segment constraints");
  }

  const auto w0 = W.longest();
  const auto top = W.multiply(W.longest(sp.J_prime), w0);
  for (const auto& p : cells.pairs) {
    const bool bad = !(W.descents(p.first, Side::Left) & sp.J_prime).empty() ||
                     !(W.descents(p.second, Side::Left) & sp.J_prime).empty();
    if (bad) falsified(sp, format_pair(W, p) + " is not a pair of minimal coset representatives");
  }

  auto mate = Matching::unmatched(cells.size());
  std::size_t matched_slices = 0;
  const auto& WJ = W.parabolic(sp.J);
  for (auto v : sp.bottoms) {
    const auto slice = build_slices(sp, v);
    std::vector<Element> meet;
    std::set_intersection(slice.P.begin(), slice.P.end(), slice.Q.begin(), slice.Q.end(), std::back_inserter(meet));
    if (meet != slice.Z) falsified(sp, "Z_v != P_v cap Q_v at v = " + format_element(W, v));
    if (v == top) {
      if (slice.Z != std::vector<Element>{top}) falsified(sp, "the slice of w_{J'} w0 is not a singleton");
      continue;
    }
    const auto I = labeled_interval(W, v, w0);
    const auto M = build_matching(I, order);
    auto indices = [&](const std::vector<Element>& xs) {
      std::vector<std::size_t> out;
      for (auto x : xs) out.push_back(I.index_of(x));
      return out;
    };
    if (!is_M_subset(M, indices(slice.P))) falsified(sp, "P_v is not an M-subset at v = " + format_element(W, v));
    if (!is_M_subset(M, indices(slice.Q))) falsified(sp, "Q_v is not an M-subset at v = " + format_element(W, v));

    // Q_v is [v, w0] minus the coset pieces other than {w_J w}.
    boost::dynamic_bitset<> rest(I.size());
    rest.set();
    for (auto rep : WJ.left_reps) {
      const auto piece = coset_piece(W, sp.J, v, rep);
      if (piece.empty() || piece == std::vector<Element>{W.multiply(WJ.longest, rep)}) continue;
      const auto idx = indices(piece);
      if (!is_M_subset(M, idx)) falsified(sp, "a coset piece is not an M-subset at v = " + format_element(W, v));
      for (auto k : idx) rest.reset(k);
    }
    boost::dynamic_bitset<> q_bits(I.size());
    for (auto k : indices(slice.Q)) q_bits.set(k);
    if (rest != q_bits) falsified(sp, "Q_v differs from the complement of its coset pieces at v = " + format_element(W, v));

    for (auto w : slice.Z) {
      const auto m = I.members[M.mate(I.index_of(w))];
      if (W.length(m) < W.length(w)) continue;
      const auto a = cells.find(v, w);
      const auto b = cells.find(v, m);
      if (!a || !b) falsified(sp, "M leaves the slice at " + format_pair(W, {v, w}));
      if (!Z.covers_pair(*a, *b)) {
        falsified(sp, format_pair(W, {v, w}) + " and " + format_pair(W, {v, m}) + " are not a cover");
      }
      mate.match(*a, *b);
    }
    ++matched_slices;
  }

  for (const auto& e : Z.covers()) {
    const auto& lo = cells.pairs[e.lo];
    const auto& hi = cells.pairs[e.hi];
    if (lo.first == hi.first) continue;
    if (lo.second != hi.second || W.length(lo.first) != W.length(hi.first) + 1) {
      falsified(sp, "cover " + format_pair(W, lo) + " < " + format_pair(W, hi) + " joins slices irregularly");
    }
  }

  const auto acyclic = is_acyclic(Z, mate);
  if (!acyclic.acyclic) falsified(sp, "the matching has a cycle through " + Z.name(acyclic.cycle.front()));
  const auto fixed = mate.fixed_points();
  if (fixed.size() != 1 || cells.pairs[fixed.front()] != CellPair{top, top}) {
    falsified(sp, std::to_string(fixed.size()) + " unmatched elements, expected only (w_{J'} w0, w_{J'} w0)");
  }
  auto morse = morse_counts(Z, mate);
  if (!morse.certificate) falsified(sp, "Morse counts are not (1, 0, ..., 0)");
  return SpringerResult{std::move(order), std::move(mate), std::move(morse), {top, top}, matched_slices};
}

}  // namespace coxmorse
