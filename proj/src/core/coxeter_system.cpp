#include "coxmorse/coxeter_system.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <string>

#include "coset_enumeration.hpp"
#include "coxmorse/error.hpp"

namespace coxmorse {

namespace {

std::atomic<std::uint32_t> next_tag{1};

constexpr std::size_t kDenseProductLimit = 2048;
constexpr std::size_t kBruhatMatrixLimit = 23'000;

}  // namespace

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (int g = 0; g < 32; ++g) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::size_t max_elements)
    : matrix_(std::move(matrix)), rank_(matrix_.rank()), tag_(next_tag.fetch_add(1)) {
  if (max_elements < 1) fail(ErrorCode::Usage, "max_elements must be >= 1");
  enumerate(max_elements);
  build_tables();
  build_bruhat();
}

void CoxeterSystem::enumerate(std::size_t max_elements) {
  const std::size_t max_cosets = std::max<std::size_t>(4096, 4 * max_elements);
  const auto cayley = detail::enumerate_cosets(matrix_, max_elements, max_cosets);
  const auto n = cayley.size;

  // Breadth-first search along right multiplication, scanning generators in
  // increasing order, visits elements in shortlex order of their normal forms.
  std::vector<std::int64_t> new_id(n, -1);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  new_id[0] = 0;
  order.push_back(0);
  words_.assign(1, Word{});
  length_.assign(1, 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto c = order[head];
    for (int s = 0; s < rank_; ++s) {
      const auto d = cayley.table[c * rank_ + s];
      if (new_id[d] >= 0) continue;
      new_id[d] = static_cast<std::int64_t>(order.size());
      order.push_back(d);
      Word word = words_[head];
      word.push_back(s);
      words_.push_back(std::move(word));
      length_.push_back(length_[head] + 1);
    }
  }
  if (order.size() != n) fail(ErrorCode::Internal, "Cayley graph is not connected");

  right_.resize(n * rank_);
  for (std::size_t id = 0; id < n; ++id) {
    for (int s = 0; s < rank_; ++s) {
      right_[id * rank_ + s] = static_cast<ElementId>(new_id[cayley.table[order[id] * rank_ + s]]);
    }
  }
}

void CoxeterSystem::build_tables() {
  const auto n = size();
  // x = parent(x) * last(x) for every x != e.
  auto parent = [&](std::size_t x) {
    const auto last = words_[x].back();
    return right_[x * rank_ + last];
  };

  left_.resize(n * rank_);
  for (int s = 0; s < rank_; ++s) left_[s] = right_[s];
  for (std::size_t x = 1; x < n; ++x) {
    const auto p = parent(x);
    const auto last = words_[x].back();
    for (int s = 0; s < rank_; ++s) left_[x * rank_ + s] = right_[left_[p * rank_ + s] * rank_ + last];
  }

  inverse_.resize(n);
  inverse_[0] = 0;
  for (std::size_t x = 1; x < n; ++x) {
    inverse_[x] = left_[inverse_[parent(x)] * rank_ + words_[x].back()];
  }

  if (n <= kDenseProductLimit) {
    product_.resize(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      product_[x * n] = static_cast<ElementId>(x);
      for (std::size_t y = 1; y < n; ++y) {
        product_[x * n + y] = right_[product_[x * n + parent(y)] * rank_ + words_[y].back()];
      }
    }
  }

  longest_ = static_cast<ElementId>(n - 1);
  for (std::size_t x = 0; x + 1 < n; ++x) {
    if (length_[x] == length_[longest_]) fail(ErrorCode::Internal, "longest element is not unique");
  }

  // Reflections: closure of the generators under conjugation by generators.
  reflection_index_.assign(n, -1);
  std::vector<ElementId> found;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < rank_; ++s) {
    const auto g = right_[s];
    if (!seen[g]) {
      seen[g] = 1;
      found.push_back(g);
    }
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto t = found[head];
    for (int s = 0; s < rank_; ++s) {
      const auto c = left_[right_[t * rank_ + s] * rank_ + s];
      if (!seen[c]) {
        seen[c] = 1;
        found.push_back(c);
      }
    }
  }
  std::sort(found.begin(), found.end());
  for (auto t : found) {
    reflection_index_[t] = static_cast<int>(reflections_.size());
    reflections_.push_back(make(t));
  }
  if (static_cast<int>(reflections_.size()) != length_[longest_]) {
    fail(ErrorCode::Internal, "|T| differs from the length of the longest element");
  }
}

void CoxeterSystem::build_bruhat() {
  const auto n = size();
  covers_down_.assign(n, {});
  covers_up_.assign(n, {});
  for (std::size_t w = 0; w < n; ++w) {
    for (const auto t : reflections_) {
      // t * w, applying the letters of t from the right end inward.
      auto v = static_cast<ElementId>(w);
      const auto& word = words_[t.id];
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = left_[v * rank_ + *it];
      if (length_[v] + 1 == length_[w]) covers_down_[w].push_back({make(v), t});
    }
    std::sort(covers_down_[w].begin(), covers_down_[w].end(),
              [](const BruhatCover& a, const BruhatCover& b) { return a.lower.id < b.lower.id; });
    for (const auto& c : covers_down_[w]) covers_up_[c.lower.id].push_back(make(static_cast<ElementId>(w)));
  }
  if (n <= kBruhatMatrixLimit) {
    below_.assign(n, boost::dynamic_bitset<>(n));
    for (std::size_t w = 0; w < n; ++w) {
      below_[w].set(w);
      for (const auto& c : covers_down_[w]) below_[w] |= below_[c.lower.id];
    }
  }
}

void CoxeterSystem::check(Element x) const {
  if (x.system != tag_) fail(ErrorCode::MixedSystems, "element belongs to a different Coxeter system");
}

Element CoxeterSystem::generator(Generator s) const {
  if (s < 0 || s >= rank_) fail(ErrorCode::InvalidElement, "generator index out of range");
  return make(right_[s]);
}

Element CoxeterSystem::element(ElementId id) const {
  if (id >= size()) fail(ErrorCode::InvalidElement, "element id out of range");
  return make(id);
}

std::vector<Element> CoxeterSystem::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(make(static_cast<ElementId>(i)));
  return out;
}

Element CoxeterSystem::multiply(Element x, Element y) const {
  const auto xi = index(x);
  const auto yi = index(y);
  if (!product_.empty()) return make(product_[xi * size() + yi]);
  auto r = static_cast<ElementId>(xi);
  for (auto s : words_[yi]) r = right_[r * rank_ + s];
  return make(r);
}

Element CoxeterSystem::from_word(std::span<const Generator> word) const {
  ElementId r = 0;
  for (auto s : word) {
    if (s < 0 || s >= rank_) fail(ErrorCode::InvalidElement, "generator index out of range");
    r = right_[r * rank_ + s];
  }
  return make(r);
}

bool CoxeterSystem::bruhat_leq(Element v, Element w) const {
  auto vi = static_cast<ElementId>(index(v));
  auto wi = static_cast<ElementId>(index(w));
  if (!below_.empty()) return below_[wi].test(vi);
  // Lifting property: for a right descent s of w, v <= w iff min(v, vs) <= ws.
  for (;;) {
    if (length_[vi] > length_[wi]) return false;
    if (length_[vi] == length_[wi]) return vi == wi;
    if (vi == 0) return true;
    const auto s = words_[wi].back();
    const auto vs = right_[vi * rank_ + s];
    if (length_[vs] < length_[vi]) vi = vs;
    wi = right_[wi * rank_ + s];
  }
}

std::vector<Element> CoxeterSystem::interval(Element v, Element w) const {
  std::vector<Element> out;
  if (!bruhat_leq(v, w)) return out;
  if (!below_.empty()) {
    const auto& row = below_[w.id];
    for (auto z = row.find_first(); z != boost::dynamic_bitset<>::npos; z = row.find_next(z)) {
      const auto ze = make(static_cast<ElementId>(z));
      if (bruhat_leq(v, ze)) out.push_back(ze);
    }
    return out;
  }
  for (std::size_t z = v.id; z <= w.id; ++z) {
    const auto ze = make(static_cast<ElementId>(z));
    if (bruhat_leq(v, ze) && bruhat_leq(ze, w)) out.push_back(ze);
  }
  return out;
}

std::vector<Element> CoxeterSystem::right_inversion_reflections(Element v) const {
  std::vector<Element> out;
  for (const auto t : reflections_) {
    if (length(multiply(v, t)) < length(v)) out.push_back(t);
  }
  return out;
}

std::vector<Element> CoxeterSystem::left_inversion_reflections(Element v) const {
  std::vector<Element> out;
  for (const auto t : reflections_) {
    if (length(multiply(t, v)) < length(v)) out.push_back(t);
  }
  return out;
}

GeneratorSet CoxeterSystem::descents(Element x, Side side) const {
  GeneratorSet out;
  for (int s = 0; s < rank_; ++s) {
    const bool descent = side == Side::Right ? is_right_descent(x, s) : is_left_descent(s, x);
    if (descent) out.insert(s);
  }
  return out;
}

bool CoxeterSystem::in_parabolic(Element x, GeneratorSet J) const {
  const auto& word = shortlex_word(x);
  return std::all_of(word.begin(), word.end(), [&](Generator s) { return J.contains(s); });
}

ParabolicSubset CoxeterSystem::build_parabolic(GeneratorSet J) const {
  ParabolicSubset p;
  p.generators = J;
  p.longest = identity();
  for (const auto x : elements()) {
    if (in_parabolic(x, J)) {
      p.members.push_back(x);
      if (length(x) > length(p.longest)) p.longest = x;
    }
    const auto left = descents(x, Side::Left);
    const auto right = descents(x, Side::Right);
    if ((left & J).empty()) p.left_reps.push_back(x);
    if ((right & J).empty()) p.right_reps.push_back(x);
  }
  return p;
}

const ParabolicSubset& CoxeterSystem::parabolic(GeneratorSet J) const {
  if (!J.subset_of(GeneratorSet::all(rank_))) fail(ErrorCode::InvalidSubset, "subset contains unknown generators");
  std::lock_guard lock(parabolic_mutex_);
  auto& slot = parabolic_cache_[J.bits()];
  if (!slot) slot = std::make_unique<ParabolicSubset>(build_parabolic(J));
  return *slot;
}

Element CoxeterSystem::min_rep_left(Element w, GeneratorSet J) const {
  if (!J.subset_of(GeneratorSet::all(rank_))) fail(ErrorCode::InvalidSubset, "subset contains unknown generators");
  for (bool moved = true; moved;) {
    moved = false;
    for (auto s : J.members()) {
      if (is_left_descent(s, w)) {
        w = left_multiply(s, w);
        moved = true;
      }
    }
  }
  return w;
}

Element CoxeterSystem::min_rep_right(Element w, GeneratorSet K) const {
  if (!K.subset_of(GeneratorSet::all(rank_))) fail(ErrorCode::InvalidSubset, "subset contains unknown generators");
  for (bool moved = true; moved;) {
    moved = false;
    for (auto s : K.members()) {
      if (is_right_descent(w, s)) {
        w = right_multiply(w, s);
        moved = true;
      }
    }
  }
  return w;
}

Element CoxeterSystem::demazure_star(Element x, Element y) const {
  check(x);
  for (auto s : shortlex_word(y)) {
    const auto xs = right_multiply(x, s);
    if (length(xs) > length(x)) x = xs;
  }
  return x;
}

Element CoxeterSystem::circ_l(Element x, Element y) const {
  check(y);
  const auto& word = shortlex_word(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto sy = left_multiply(*it, y);
    if (length(sy) < length(y)) y = sy;
  }
  return y;
}

Element CoxeterSystem::circ_r(Element x, Element y) const {
  check(x);
  for (auto s : shortlex_word(y)) {
    const auto xs = right_multiply(x, s);
    if (length(xs) < length(x)) x = xs;
  }
  return x;
}

std::shared_ptr<const CoxeterSystem> build_system(const CoxeterMatrix& matrix, std::size_t max_elements) {
  return std::make_shared<const CoxeterSystem>(matrix, max_elements);
}

Word parse_word(std::string_view text, int rank) {
  Word word;
  std::string trimmed;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  }
  if (trimmed.empty() || trimmed == "e") return word;
  std::size_t pos = 0;
  while (pos <= trimmed.size()) {
    auto end = trimmed.find_first_of(".,", pos);
    if (end == std::string::npos) end = trimmed.size();
    const auto token = trimmed.substr(pos, end - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(ErrorCode::Usage, "bad generator word '" + std::string(text) + "'");
    }
    const int g = std::stoi(token);
    if (g < 1 || g > rank) fail(ErrorCode::Usage, "generator " + token + " out of range 1.." + std::to_string(rank));
    word.push_back(g - 1);
    pos = end + 1;
  }
  return word;
}

std::string format_word(const Word& word, char sep) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(word[i] + 1);
  }
  return out;
}

std::string format_element(const CoxeterSystem& W, Element x, char sep) { return format_word(W.shortlex_word(x), sep); }

Element parse_element(const CoxeterSystem& W, std::string_view text) { return W.from_word(parse_word(text, W.rank())); }

GeneratorSet parse_subset(std::string_view text, int rank) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body.push_back(c);
  }
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') fail(ErrorCode::Usage, "bad subset '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  GeneratorSet set;
  if (body.empty()) return set;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    const auto token = body.substr(pos, end - pos);
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(ErrorCode::Usage, "bad subset '" + std::string(text) + "'");
    }
    const int g = std::stoi(token);
    if (g < 1 || g > rank) fail(ErrorCode::InvalidSubset, "generator " + token + " out of range");
    set.insert(g - 1);
    pos = end + 1;
  }
  return set;
}

std::string format_subset(GeneratorSet set) {
  std::string out = "{";
  bool first = true;
  for (auto g : set.members()) {
    if (!first) out.push_back(',');
    out += std::to_string(g + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace coxmorse
