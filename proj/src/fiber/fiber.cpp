#include "coxmorse/fiber.hpp"

#include <algorithm>
#include <iterator>

#include "coxmorse/error.hpp"

namespace coxmorse {

namespace {

bool id_less(const CellPair& a, const CellPair& b) {
  return std::pair(a.first.id, a.second.id) < std::pair(b.first.id, b.second.id);
}

std::string describe(const CoxeterSystem& W, GeneratorSet K, const FiberAnchors& an) {
  return "fiber K=" + format_subset(K) + " over " + format_pair(W, {an.v_prime, an.w_prime}) + " <= " +
         format_pair(W, {an.v, an.w});
}

std::string list_pairs(const CoxeterSystem& W, const std::vector<CellPair>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + format_pair(W, p);
  return out.empty() ? "none" : out;
}

std::vector<CellPair> symmetric_difference(const std::vector<CellPair>& a, const std::vector<CellPair>& b) {
  std::vector<CellPair> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), id_less);
  return out;
}

}  // namespace

std::optional<std::size_t> QKPoset::find(Element v, Element w) const {
  const CellPair key{v, w};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), key, id_less);
  if (it == pairs.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs.begin());
}

bool qk_leq(const CoxeterSystem& W, GeneratorSet K, const CellPair& lower, const CellPair& upper) {
  const auto& [vp, wp] = lower;
  const auto& [v, w] = upper;
  for (auto u : W.parabolic(K).members) {
    const auto a = W.multiply(vp, u);
    const auto b = W.multiply(wp, u);
    if (W.bruhat_leq(v, a) && W.bruhat_leq(a, b) && W.bruhat_leq(b, w)) return true;
  }
  return false;
}

QKPoset build_qk(const CoxeterSystem& W, GeneratorSet K) {
  if (!K.subset_of(GeneratorSet::all(W.rank()))) fail(ErrorCode::InvalidSubset, "K exceeds the rank");
  QKPoset Q;
  Q.system = &W;
  Q.K = K;
  for (auto w : W.parabolic(K).right_reps) {
    for (auto v : W.interval(W.identity(), w)) Q.pairs.emplace_back(v, w);
  }
  std::sort(Q.pairs.begin(), Q.pairs.end(), id_less);
  std::vector<std::string> names;
  std::vector<int> dims;
  for (const auto& p : Q.pairs) {
    names.push_back(format_pair(W, p));
    dims.push_back(W.length(p.second) - W.length(p.first));
  }
  Q.poset = FinitePoset::from_relation(std::move(names), std::move(dims), [&](std::size_t i, std::size_t j) {
    return qk_leq(W, K, Q.pairs[i], Q.pairs[j]);
  });
  return Q;
}

Element z_lower(const CoxeterSystem& W, GeneratorSet K, Element v_prime, Element v) {
  const auto z = W.circ_l(W.inverse(v_prime), v);
  if (!W.in_parabolic(z, K)) {
    fail(ErrorCode::AnchorViolation, "v'^{-1} o_l v = " + format_element(W, z) + " is not in W_K");
  }
  return z;
}

Element z_upper(const CoxeterSystem& W, GeneratorSet K, Element w_prime, Element w) {
  const auto& WK = W.parabolic(K);
  std::vector<Element> set;
  for (auto a : WK.members) {
    if (W.bruhat_leq(W.multiply(w_prime, a), w)) set.push_back(a);
  }
  const auto where = "{a in W_K : " + format_element(W, w_prime) + " a <= " + format_element(W, w) + "}";
  std::vector<Element> maximal;
  for (auto a : set) {
    bool is_max = true;
    for (auto b : set) is_max = is_max && !W.bruhat_less(a, b);
    if (is_max) maximal.push_back(a);
  }
  if (maximal.size() != 1) {
    fail(ErrorCode::LemmaFalsified, where + " has " + std::to_string(maximal.size()) + " maximal elements");
  }
  const auto top = maximal.front();
  std::vector<Element> expected;
  for (auto a : WK.members) {
    if (W.bruhat_leq(a, top)) expected.push_back(a);
  }
  if (expected != set) fail(ErrorCode::LemmaFalsified, where + " is not a lower interval [e, z']");
  return top;
}

FiberDescriptions fiber_descriptions(const CoxeterSystem& W, GeneratorSet K, const FiberAnchors& an) {
  const auto& WK = W.parabolic(K).members;
  const auto z = z_lower(W, K, an.v_prime, an.v);
  const auto zp = z_upper(W, K, an.w_prime, an.w);
  const auto inversions = W.right_inversion_reflections(an.v_prime);
  const int lvp = W.length(an.v_prime);

  FiberDescriptions d;
  for (auto a : WK) {
    const auto vpa = W.multiply(an.v_prime, a);
    for (auto b : WK) {
      if (!W.bruhat_leq(a, b)) continue;
      const bool demazure = W.circ_r(vpa, W.inverse(b)) == an.v_prime;
      const auto wpb = W.multiply(an.w_prime, b);
      if (W.bruhat_leq(an.v, vpa) && W.bruhat_leq(vpa, wpb) && W.bruhat_leq(wpb, an.w) && demazure &&
          W.length(vpa) == lvp + W.length(a)) {
        d.definition.emplace_back(a, b);
      }
      if (!W.bruhat_leq(z, a) || !W.bruhat_leq(b, zp)) continue;
      if (demazure) d.demazure.emplace_back(a, b);
      bool all_t = true;
      bool cover_t = true;
      for (auto t : inversions) {
        const auto ta = W.multiply(t, a);
        if (!W.bruhat_leq(ta, b)) continue;
        all_t = false;
        if (W.length(ta) == W.length(a) + 1) cover_t = false;
      }
      if (all_t) d.inversion.emplace_back(a, b);
      if (cover_t) d.cover_inversion.emplace_back(a, b);
    }
  }
  for (auto* s : {&d.definition, &d.demazure, &d.inversion, &d.cover_inversion}) std::sort(s->begin(), s->end(), id_less);
  return d;
}

std::vector<DescriptionMismatch> compare_descriptions(const FiberDescriptions& d) {
  std::vector<DescriptionMismatch> out;
  const std::pair<const char*, const std::vector<CellPair>*> others[] = {
      {"demazure", &d.demazure}, {"inversion", &d.inversion}, {"cover-inversion", &d.cover_inversion}};
  for (const auto& [name, set] : others) {
    if (*set != d.definition) out.push_back({name, symmetric_difference(d.definition, *set)});
  }
  return out;
}

std::vector<CellPair> cover_inversion_with_length(const CoxeterSystem& W, const FiberAnchors& an,
                                                  const FiberDescriptions& d) {
  std::vector<CellPair> out;
  for (const auto& p : d.cover_inversion) {
    if (W.length(W.multiply(an.v_prime, p.first)) == W.length(an.v_prime) + W.length(p.first)) out.push_back(p);
  }
  return out;
}

FiberPoset build_fiber_poset(const CoxeterSystem& W, GeneratorSet K, const FiberAnchors& an, FiberCheck check) {
  if (!K.subset_of(GeneratorSet::all(W.rank()))) fail(ErrorCode::InvalidSubset, "K exceeds the rank");
  const auto& right_reps = W.parabolic(K).right_reps;
  auto is_rep = [&](Element x) { return std::binary_search(right_reps.begin(), right_reps.end(), x); };
  if (!is_rep(an.w) || !is_rep(an.w_prime) || !W.bruhat_leq(an.v, an.w) || !W.bruhat_leq(an.v_prime, an.w_prime)) {
    fail(ErrorCode::NotComparable, "anchors are not elements of Q_K");
  }
  if (!qk_leq(W, K, {an.v_prime, an.w_prime}, {an.v, an.w})) {
    fail(ErrorCode::NotComparable, format_pair(W, {an.v_prime, an.w_prime}) + " is not below " +
                                       format_pair(W, {an.v, an.w}) + " in Q_K");
  }
  FiberPoset fp;
  fp.system = &W;
  fp.K = K;
  fp.anchors = an;
  fp.z = z_lower(W, K, an.v_prime, an.v);
  fp.z_prime = z_upper(W, K, an.w_prime, an.w);
  fp.inversions = W.right_inversion_reflections(an.v_prime);

  const auto d = fiber_descriptions(W, K, an);
  if (check == FiberCheck::AllDescriptions) {
    for (const auto& m : compare_descriptions(d)) {
      fail(ErrorCode::PropositionFalsified, describe(W, K, an) + ": definition and the " + m.description +
                                                " description differ in " + list_pairs(W, m.difference));
    }
  }
  if (d.definition.empty()) fail(ErrorCode::AnchorViolation, describe(W, K, an) + " is empty");
  fp.cells = cell_pair_poset(W, d.definition);
  return fp;
}

GeneralizedQuotient generalized_quotient(const FiberPoset& fp) {
  const auto& W = *fp.system;
  const auto where = describe(W, fp.K, fp.anchors);
  const int lvp = W.length(fp.anchors.v_prime);
  GeneralizedQuotient q;
  for (auto a : W.interval(fp.z, fp.z_prime)) {
    const bool member = W.length(W.multiply(fp.anchors.v_prime, a)) == lvp + W.length(a);
    if (member) q.members.push_back(a);
    if (member != fp.cells.find(a, a).has_value()) {
      fail(ErrorCode::PropositionFalsified, where + ": quotient membership of " + format_element(W, a) +
                                                " disagrees with (a, a) in F");
    }
  }
  std::vector<Element> maximal;
  for (auto a : q.members) {
    bool is_max = true;
    for (auto b : q.members) is_max = is_max && !W.bruhat_less(a, b);
    if (is_max) maximal.push_back(a);
  }
  if (maximal.size() != 1) {
    fail(ErrorCode::NonUniqueMaximum, where + ": the quotient has " + std::to_string(maximal.size()) + " maximal elements");
  }
  q.top = maximal.front();
  for (auto a : q.members) {
    if (a == q.top) continue;
    const bool step = std::any_of(q.members.begin(), q.members.end(), [&](Element b) {
      return W.length(b) == W.length(a) + 1 && W.bruhat_leq(a, b) && W.bruhat_leq(b, q.top);
    });
    if (!step) fail(ErrorCode::TheoremFalsified, where + ": no cover of " + format_element(W, a) + " inside the quotient");
  }
  return q;
}

FiberResult fiber_matching(const FiberPoset& fp) {
  const auto& W = *fp.system;
  const auto& cells = fp.cells;
  const auto& F = cells.poset;
  const auto where = describe(W, fp.K, fp.anchors);
  auto falsified = [&](const std::string& what) { fail(ErrorCode::TheoremFalsified, where + ": " + what); };

  auto order = order_for_fiber(W, fp.anchors.v_prime);
  std::vector<Element> rest;
  for (auto t : W.reflections()) {
    if (!std::binary_search(fp.inversions.begin(), fp.inversions.end(), t)) rest.push_back(t);
  }
  if (!precedes_all(order, fp.inversions, rest)) fail(ErrorCode::Internal, "constructed order does not start with N_R(v')");

  auto quotient = generalized_quotient(fp);
  auto mate = Matching::unmatched(cells.size());
  for (auto a : quotient.members) {
    std::vector<Element> Pa;
    for (auto b : W.interval(a, fp.z_prime)) {
      const bool keep = std::none_of(fp.inversions.begin(), fp.inversions.end(),
                                     [&](Element t) { return W.bruhat_leq(W.multiply(t, a), b); });
      if (keep) Pa.push_back(b);
    }
    std::vector<Element> from_cells;
    for (const auto& p : cells.pairs) {
      if (p.first == a) from_cells.push_back(p.second);
    }
    if (Pa != from_cells) falsified("P_a differs from the slice of F at a = " + format_element(W, a));
    const bool singleton = Pa == std::vector<Element>{a};
    if (singleton != (a == quotient.top)) {
      falsified("P_a = {a} fails to characterise the top at a = " + format_element(W, a));
    }
    if (a == quotient.top) continue;

    const auto I = labeled_interval(W, a, fp.z_prime);
    const auto M = build_matching(I, order);
    std::vector<std::size_t> idx;
    for (auto b : Pa) idx.push_back(I.index_of(b));
    if (!is_M_subset(M, idx)) falsified("P_a is not an M-subset at a = " + format_element(W, a));
    for (auto b : Pa) {
      const auto m = I.members[M.mate(I.index_of(b))];
      if (W.length(m) < W.length(b)) continue;
      const auto i = cells.index_of(a, b);
      const auto j = cells.index_of(a, m);
      if (!F.covers_pair(i, j)) falsified(format_pair(W, {a, b}) + " and " + format_pair(W, {a, m}) + " are not a cover");
      mate.match(i, j);
    }
  }

  const auto acyclic = is_acyclic(F, mate);
  if (!acyclic.acyclic) falsified("the matching has a cycle through " + F.name(acyclic.cycle.front()));
  const auto fixed = mate.fixed_points();
  const CellPair expected{quotient.top, quotient.top};
  if (fixed.size() != 1 || cells.pairs[fixed.front()] != expected) {
    falsified(std::to_string(fixed.size()) + " unmatched elements, expected only " + format_pair(W, expected));
  }
  auto morse = morse_counts(F, mate);
  if (!morse.certificate) falsified("Morse counts are not (1, 0, ..., 0)");
  return FiberResult{std::move(order), std::move(quotient), std::move(mate), std::move(morse), expected};
}

void verify_convexity(const FiberPoset& fp) {
  const auto& W = *fp.system;
  for (const auto& [a, b] : fp.cells.pairs) {
    for (auto ap : W.interval(a, b)) {
      for (auto bp : W.interval(ap, b)) {
        if (!fp.cells.find(ap, bp)) {
          fail(ErrorCode::CorollaryFalsified, describe(W, fp.K, fp.anchors) + ": " + format_pair(W, {a, b}) +
                                                  " is in F but " + format_pair(W, {ap, bp}) + " is not");
        }
      }
    }
  }
}

}  // namespace coxmorse
