#include "coxmorse/report.hpp"

#include <map>
#include <sstream>

namespace coxmorse {

namespace {

std::string word(const CoxeterSystem& W, Element x) { return format_element(W, x); }

Json pair_json(const CoxeterSystem& W, const CellPair& p) { return Json::array({word(W, p.first), word(W, p.second)}); }

Json pair_matching_json(const CellPairPoset& cells, const Matching& M) {
  Json out = Json::array();
  for (auto [lo, hi] : M.pairs(cells.poset)) {
    out.push_back(Json::array({pair_json(*cells.system, cells.pairs[lo]), pair_json(*cells.system, cells.pairs[hi])}));
  }
  return out;
}

Json cells_json(const CellPairPoset& cells) {
  Json out = Json::array();
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& [a, b] = cells.pairs[k];
    out.push_back({{"v", word(*cells.system, a)}, {"w", word(*cells.system, b)}, {"dim", cells.poset.dim(k)}});
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

LabelName reflection_names(const CoxeterSystem& W) {
  return [&W](Label l) { return l == kNoLabel ? std::string() : word(W, W.element(static_cast<ElementId>(l))); };
}

Json poset_json(const FinitePoset& P, const LabelName& label) {
  Json elements = Json::array();
  for (std::size_t i = 0; i < P.size(); ++i) elements.push_back({{"id", i}, {"name", P.name(i)}, {"dim", P.dim(i)}});
  Json covers = Json::array();
  for (const auto& e : P.covers()) {
    Json l = nullptr;
    if (e.label != kNoLabel) l = label ? Json(label(e.label)) : Json(e.label);
    covers.push_back({{"lo", e.lo}, {"hi", e.hi}, {"label", l}});
  }
  return {{"elements", elements}, {"covers", covers}};
}

Json morse_json(const MorseSummary& s) {
  Json out = Json::object();
  for (auto [dim, count] : s.counts) out[std::to_string(dim)] = count;
  return out;
}

std::string poset_dot(const FinitePoset& P, const Matching* M, const LabelName& label) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < P.size(); ++i) layers[P.dim(i)].push_back(i);
  for (const auto& [dim, ids] : layers) {
    out << "  { rank=same;";
    for (auto i : ids) out << " n" << i;
    out << " }\n";
  }
  for (std::size_t i = 0; i < P.size(); ++i) {
    out << "  n" << i << " [label=" << dot_quote(P.name(i));
    if (M && !M->is_matched(i)) out << ", fontcolor=blue";
    out << "];\n";
  }
  for (const auto& e : P.covers()) {
    out << "  n" << e.lo << " -> n" << e.hi << " [";
    const bool matched = M && M->mate(e.lo) == e.hi;
    out << (matched ? "color=red, penwidth=2.5" : "color=gray40, penwidth=0.8");
    if (label && e.label != kNoLabel) out << ", label=" << dot_quote(label(e.label)) << ", fontsize=9";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

Json group_report(const CoxeterSystem& W) {
  Json matrix = Json::array();
  for (int i = 0; i < W.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < W.rank(); ++j) row.push_back(W.matrix()(i, j));
    matrix.push_back(row);
  }
  Json parabolics = Json::array();
  const int rank = W.rank();
  for (std::uint32_t bits = 1; bits + 1 < (1u << rank); ++bits) {
    GeneratorSet J(bits);
    if (rank > 5 && J.size() != 1) continue;
    const auto& P = W.parabolic(J);
    parabolics.push_back({{"J", format_subset(J)},
                          {"size", P.members.size()},
                          {"longest", word(W, P.longest)},
                          {"cosets", P.left_reps.size()}});
  }
  return {{"type", W.matrix().type_tag()},
          {"rank", rank},
          {"coxeter_matrix", matrix},
          {"size", W.size()},
          {"reflections", W.reflections().size()},
          {"w0", word(W, W.longest())},
          {"length_w0", W.length(W.longest())},
          {"parabolics", parabolics}};
}

Json order_json(const CoxeterSystem& W, const ReflectionOrder& order) {
  Json seq = Json::array();
  for (auto t : order.sequence()) seq.push_back(word(W, t));
  return {{"word", format_word(order.word())}, {"sequence", seq}};
}

Json matching_report(const LabeledInterval& I, const ReflectionOrder& order, const Matching& M,
                     const MorseSummary& morse, const ShellingReport& shelling) {
  const auto& W = *I.system;
  Json pairs = Json::array();
  for (auto [lo, hi] : M.pairs(I.poset)) pairs.push_back(Json::array({I.poset.name(lo), I.poset.name(hi)}));
  Json unmatched = Json::array();
  for (auto i : M.fixed_points()) unmatched.push_back(I.poset.name(i));
  return {{"interval", Json::array({word(W, I.bottom), word(W, I.top)})},
          {"size", I.size()},
          {"order", order_json(W, order)},
          {"pairs", pairs},
          {"unmatched", unmatched},
          {"morse", morse_json(morse)},
          {"acyclic", morse.acyclic},
          {"complete", M.complete()},
          {"shelling",
           {{"coatom_prefixes", shelling.coatom_prefixes},
            {"atom_prefixes", shelling.atom_prefixes},
            {"top_complement", shelling.top_complement}}}};
}

Json springer_report(const SpringerPoset& sp, const SpringerResult& r) {
  const auto& W = *sp.system;
  return {{"J", format_subset(sp.J)},
          {"J'", format_subset(sp.J_prime)},
          {"order", order_json(W, r.order)},
          {"pairs", cells_json(sp.cells)},
          {"matching", pair_matching_json(sp.cells, r.matching)},
          {"unmatched", Json::array({pair_json(W, r.unmatched)})},
          {"morse", morse_json(r.morse)},
          {"euler_characteristic", euler_characteristic(sp.cells.poset)},
          {"certificate", r.morse.certificate}};
}

Json fiber_report(const FiberPoset& fp, const FiberResult& r, const std::vector<DescriptionMismatch>& mismatches) {
  const auto& W = *fp.system;
  Json quotient = Json::array();
  for (auto a : r.quotient.members) quotient.push_back(word(W, a));
  Json descriptions = Json::array();
  for (const auto& m : mismatches) {
    Json diff = Json::array();
    for (const auto& p : m.difference) diff.push_back(pair_json(W, p));
    descriptions.push_back({{"description", m.description}, {"difference", diff}});
  }
  return {{"K", format_subset(fp.K)},
          {"anchors",
           {{"v'", word(W, fp.anchors.v_prime)},
            {"w'", word(W, fp.anchors.w_prime)},
            {"v", word(W, fp.anchors.v)},
            {"w", word(W, fp.anchors.w)}}},
          {"z", word(W, fp.z)},
          {"z'", word(W, fp.z_prime)},
          {"z_tilde", word(W, r.quotient.top)},
          {"quotient", quotient},
          {"order", order_json(W, r.order)},
          {"pairs", cells_json(fp.cells)},
          {"matching", pair_matching_json(fp.cells, r.matching)},
          {"unmatched", Json::array({pair_json(W, r.unmatched)})},
          {"morse", morse_json(r.morse)},
          {"description_mismatches", descriptions},
          {"certificate", r.morse.certificate}};
}

}  // namespace coxmorse
