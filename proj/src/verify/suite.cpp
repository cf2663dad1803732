#include "coxmorse/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "coxmorse/error.hpp"
#include "coxmorse/fiber.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/oracles.hpp"
#include "coxmorse/springer.hpp"

namespace coxmorse {

SuiteLevel parse_level(const std::string& text) {
  if (text == "quick") return SuiteLevel::Quick;
  if (text == "full") return SuiteLevel::Full;
  fail(ErrorCode::Usage, "unknown suite level '" + text + "' (expected quick or full)");
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1u, jobs));
  if (workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < std::min(workers, n); ++k) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<ReflectionOrder> sampled_orders(const CoxeterSystem& W, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ReflectionOrder> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count; ++attempt) {
    Word word;
    for (auto x = W.longest(); W.length(x) > 0;) {
      const auto descents = W.descents(x, Side::Right).members();
      const auto s = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
      word.push_back(s);
      x = W.right_multiply(x, s);
    }
    std::reverse(word.begin(), word.end());
    auto order = order_from_reduced_word(W, word);
    if (std::find(out.begin(), out.end(), order) == out.end()) out.push_back(std::move(order));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.instances << " instances, "
      << r.violations << " violations, " << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.limit_seconds > 0) out << " (limit " << r.limit_seconds << " s)";
  if (!r.detail.empty()) out << "; " << r.detail;
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// What one task found; merged in task order, so reports do not depend on scheduling.
struct Outcome {
  std::size_t instances = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::size_t> counters;

  void violation(std::string what) { violations.push_back(std::move(what)); }
};

struct Tally {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first;
  std::map<std::string, std::size_t> counters;

  void merge(const Outcome& o) {
    instances += o.instances;
    violations += o.violations.size();
    if (first.empty() && !o.violations.empty()) first = o.violations.front();
    for (const auto& [k, v] : o.counters) counters[k] += v;
  }

  void absorb(const Tally& o) {
    instances += o.instances;
    violations += o.violations;
    if (first.empty()) first = o.first;
    for (const auto& [k, v] : o.counters) counters[k] += v;
  }
};

using Task = std::function<void(Outcome&)>;

Tally run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<Outcome> outcomes(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    try {
      tasks[i](outcomes[i]);
    } catch (const Error& e) {
      outcomes[i].violation(e.what());
    }
  });
  Tally t;
  for (const auto& o : outcomes) t.merge(o);
  return t;
}

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

SystemPtr group(const std::string& type) { return build_system(CoxeterMatrix::from_type(type)); }

std::string el(const CoxeterSystem& W, Element x) { return format_element(W, x); }

std::string instance(const CoxeterSystem& W, Element v, Element w) {
  return W.matrix().type_tag() + " [" + el(W, v) + ", " + el(W, w) + "]";
}

std::string order_name(const ReflectionOrder& order) { return "order " + format_word(order.word()); }

std::vector<std::pair<GeneratorSet, GeneratorSet>> disjoint_pairs(int rank) {
  std::vector<std::pair<GeneratorSet, GeneratorSet>> out;
  for (std::uint32_t j = 0; j < (1u << rank); ++j) {
    for (std::uint32_t jp = 0; jp < (1u << rank); ++jp) {
      if ((j & jp) == 0) out.emplace_back(GeneratorSet(j), GeneratorSet(jp));
    }
  }
  return out;
}

// (m0, m1, ...) = (1, 0, ...), zeros listed or not.
bool single_critical_cell(const std::map<int, std::size_t>& counts) {
  for (const auto& [dim, n] : counts) {
    if (n != (dim == 0 ? 1u : 0u)) return false;
  }
  return counts.count(0) > 0;
}

CriterionResult named(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

CriterionResult finish(CriterionResult r, const Tally& t, Clock::time_point start, std::string detail = {}) {
  r.seconds = since(start);
  r.instances = t.instances;
  r.violations = t.violations;
  r.passed = t.violations == 0 && t.instances > 0 && (r.limit_seconds == 0 || r.seconds <= r.limit_seconds);
  if (!t.first.empty()) detail += (detail.empty() ? "" : "; ") + std::string("first: ") + t.first;
  if (t.instances == 0) detail += (detail.empty() ? "" : "; ") + std::string("no instances");
  if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) detail += (detail.empty() ? "" : "; ") + std::string("too slow");
  r.detail = std::move(detail);
  return r;
}

// ---------------------------------------------------------------------------

CriterionResult golden_fixture(const SuiteConfig&) {
  auto r = named(1, "golden fixture matching in S4");
  r.limit_seconds = 1;
  const auto start = Clock::now();
  Outcome o;
  o.instances = 1;
  try {
    const auto Wp = group("A3");
    const auto& W = *Wp;
    auto e = [&](const char* word) { return parse_element(W, word); };
    const auto order = order_from_reduced_word(W, {0, 1, 2, 0, 1, 0});
    if (!validate(W, order).ok) o.violation("the fixture order fails the dihedral criterion");
    const char* chain[] = {"1", "1.2.1", "1.2.3.2.1", "2", "2.3.2", "3"};
    for (int k = 0; k + 1 < 6; ++k) {
      if (!order.precedes(e(chain[k]), e(chain[k + 1]))) {
        o.violation(std::string("order does not put ") + chain[k] + " before " + chain[k + 1]);
      }
    }
    const auto I = labeled_interval(W, e("2"), e("2.3.1.2"));
    const auto M = build_matching(I, order);
    std::vector<std::pair<Element, Element>> got;
    for (auto [lo, hi] : M.pairs(I.poset)) got.emplace_back(I.members[lo], I.members[hi]);
    std::vector<std::pair<Element, Element>> want = {{e("2.1.2"), e("2.3.1.2")},
                                                     {e("2.3"), e("3.2.3")},
                                                     {e("1.2"), e("3.1.2")},
                                                     {e("2.1"), e("2.1.3")},
                                                     {e("2"), e("3.2")}};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      std::string listed;
      for (auto [a, b] : got) listed += " {" + el(W, a) + ", " + el(W, b) + "}";
      o.violation("matching is" + listed);
    }
    if (I.members[M.mate(I.index_of(e("3.2.3")))] != e("2.3")) o.violation("M(3.2.3) != 2.3");
    if (W.bruhat_leq(e("2.3"), e("2.1.2"))) o.violation("2.3 <= 2.1.2, so the witness is not special-matching-free");
    if (!is_acyclic(I.poset, M).acyclic || !M.complete()) o.violation("matching is not complete and acyclic");
  } catch (const Error& err) {
    o.violation(err.what());
  }
  Tally t;
  t.merge(o);
  return finish(r, t, start, "interval [2, 2.3.1.2] (10 elements), order word 1.2.3.1.2.1");
}

struct IntervalSweep {
  SystemPtr W;
  std::vector<ReflectionOrder> orders;
};

std::vector<IntervalSweep> interval_sweeps(bool a_types, const SuiteConfig& config) {
  std::vector<IntervalSweep> out;
  if (a_types) {
    std::vector<std::string> types{"A2"};
    if (config.level == SuiteLevel::Full) types.push_back("A3");
    for (const auto& t : types) {
      auto W = group(t);
      out.push_back({W, oracle::reflection_orders(*W)});
    }
  } else if (config.level == SuiteLevel::Full) {
    for (const auto* t : {"B3", "H3"}) {
      auto W = group(t);
      out.push_back({W, sampled_orders(*W, 5, config.seed)});
    }
  }
  return out;
}

// One task per (system, bottom element), covering every w above it.
std::vector<Task> interval_tasks(const std::vector<IntervalSweep>& sweeps,
                                 std::function<void(Outcome&, const LabeledInterval&, const ReflectionOrder&)> check,
                                 int max_rank = 1 << 20) {
  std::vector<Task> tasks;
  for (const auto& sweep : sweeps) {
    for (auto v : sweep.W->elements()) {
      tasks.push_back([&sweep, check, v, max_rank](Outcome& o) {
        const auto& W = *sweep.W;
        for (auto w : W.interval(v, W.longest())) {
          const int rank = W.length(w) - W.length(v);
          if (rank < 1 || rank > max_rank) continue;
          const auto I = labeled_interval(W, v, w);
          for (const auto& order : sweep.orders) {
            ++o.instances;
            try {
              check(o, I, order);
            } catch (const Error& e) {
              o.violation(instance(W, v, w) + ", " + order_name(order) + ": " + e.what());
            }
          }
        }
      });
    }
  }
  return tasks;
}

std::string sweep_summary(const std::vector<IntervalSweep>& sweeps) {
  std::string out;
  for (const auto& s : sweeps) {
    out += (out.empty() ? "" : ", ") + s.W->matrix().type_tag() + " x " + std::to_string(s.orders.size()) + " orders";
  }
  return out;
}

CriterionResult complete_acyclic(const SuiteConfig& config) {
  auto r = named(2, "matchings are complete and acyclic on every interval");
  const bool full = config.level == SuiteLevel::Full;
  r.limit_seconds = full ? 630 : 30;
  const auto start = Clock::now();
  auto check = [](Outcome& o, const LabeledInterval& I, const ReflectionOrder& order) {
    const auto M = build_matching(I, order);
    M.validate(I.poset);
    const auto report = is_acyclic(I.poset, M);
    if (!M.complete() || !report.acyclic || !oracle::acyclic(I.poset, M)) {
      o.violation(instance(*I.system, I.bottom, I.top) + ", " + order_name(order) + ": not complete and acyclic");
    }
  };
  auto seconds = [](double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << s << " s";
    return out.str();
  };
  const auto a = interval_sweeps(true, config);
  auto t = run_tasks(interval_tasks(a, check), config.jobs);
  const auto a_seconds = since(start);
  std::string detail = sweep_summary(a) + " in " + seconds(a_seconds) + " (limit 30 s)";
  if (full) {
    const auto mid = Clock::now();
    const auto b = interval_sweeps(false, config);
    const auto b_tally = run_tasks(interval_tasks(b, check), config.jobs);
    t.absorb(b_tally);
    detail += "; " + sweep_summary(b) + " in " + seconds(since(mid)) + " (limit 600 s)";
  }
  if (a_seconds > 30) {
    ++t.violations;
    if (t.first.empty()) t.first = "the A-type sweep exceeded 30 s";
  }
  return finish(r, t, start, detail);
}

CriterionResult shelling_subsets(const SuiteConfig& config) {
  auto r = named(3, "coatom and atom prefix unions are M-subsets");
  const auto start = Clock::now();
  auto check = [](Outcome& o, const LabeledInterval& I, const ReflectionOrder& order) {
    const auto M = build_matching(I, order);
    const auto report = verify_shelling_subsets(I, order, M);
    const auto top = I.index_of(I.top);
    const auto bottom = I.index_of(I.bottom);
    const auto coatoms = I.poset.down_edges(top).size();
    const auto atoms = I.poset.up_edges(bottom).size();
    if (report.coatom_prefixes + 1 != coatoms || report.atom_prefixes + 1 != atoms || !report.top_complement) {
      o.violation(instance(*I.system, I.bottom, I.top) + ": not every prefix union was checked");
    }
    o.counters["prefix unions"] += report.coatom_prefixes + report.atom_prefixes;
  };
  const auto sweeps = interval_sweeps(true, config);
  const auto t = run_tasks(interval_tasks(sweeps, check), config.jobs);
  return finish(r, t, start,
                sweep_summary(sweeps) + "; " + std::to_string(t.counters.count("prefix unions") ? t.counters.at("prefix unions") : 0) +
                    " prefix unions checked");
}

CriterionResult el_properties(const SuiteConfig& config) {
  auto r = named(4, "EL properties of the reflection labeling");
  const auto start = Clock::now();
  std::vector<IntervalSweep> sweeps;
  auto W = group(config.level == SuiteLevel::Full ? "A3" : "A2");
  sweeps.push_back({W, oracle::reflection_orders(*W)});
  auto check = [](Outcome& o, const LabeledInterval& I, const ReflectionOrder& order) {
    const auto rep = check_el_labeling(I.poset, order.label_rank(), I.index_of(I.bottom), I.index_of(I.top));
    if (!rep.increasing_lex_minimal || !rep.decreasing_lex_maximal || !rep.increasing_dual_maximal ||
        !rep.atom_minimal || !rep.coatom_maximal) {
      o.violation(instance(*I.system, I.bottom, I.top) + ", " + order_name(order) + ": an EL property fails");
    }
    o.counters["chains"] += rep.chain_count;
  };
  const auto t = run_tasks(interval_tasks(sweeps, check, 5), config.jobs);
  return finish(r, t, start,
                sweep_summary(sweeps) + ", rank <= 5; " + std::to_string(t.counters.count("chains") ? t.counters.at("chains") : 0) +
                    " maximal chains");
}

CriterionResult springer(const SuiteConfig& config) {
  auto r = named(5, "Springer pair posets have a single critical cell");
  r.limit_seconds = 300;
  const auto start = Clock::now();
  std::vector<SystemPtr> systems{group("A2")};
  if (config.level == SuiteLevel::Full) {
    systems.push_back(group("A3"));
    systems.push_back(group("B3"));
  }
  std::vector<Task> tasks;
  for (const auto& W : systems) {
    for (auto [J, Jp] : disjoint_pairs(W->rank())) {
      tasks.push_back([W, J = J, Jp = Jp](Outcome& o) {
        o.instances = 1;
        const auto where = W->matrix().type_tag() + " J=" + format_subset(J) + " J'=" + format_subset(Jp);
        try {
          const auto sp = build_springer_poset(*W, J, Jp);
          const auto res = springer_matching(sp);
          const auto& Z = sp.cells.poset;
          const auto scan = oracle::unmatched_scan(Z, res.matching);
          const auto top = W->multiply(W->longest(Jp), W->longest());
          if (!oracle::acyclic(Z, res.matching)) o.violation(where + ": oracle finds a cycle");
          if (scan.fixed != std::vector<std::size_t>{sp.cells.index_of(top, top)}) o.violation(where + ": oracle unmatched set differs");
          if (!single_critical_cell(scan.counts)) o.violation(where + ": Morse counts differ from (1, 0, ...)");
          if (euler_characteristic(Z) != 1) o.violation(where + ": Euler characteristic " + std::to_string(euler_characteristic(Z)));
          o.counters["pairs"] += sp.cells.size();
        } catch (const Error& e) {
          o.violation(where + ": " + e.what());
        }
      });
    }
  }
  const auto t = run_tasks(tasks, config.jobs);
  std::string detail;
  for (const auto& W : systems) detail += (detail.empty() ? "" : ", ") + W->matrix().type_tag();
  return finish(r, t, start, detail + "; " + std::to_string(t.counters.count("pairs") ? t.counters.at("pairs") : 0) + " cells in total");
}

struct Anchor {
  SystemPtr W;
  GeneratorSet K;
  FiberAnchors anchors;
};

// All (v', w') <= (v, w) in Q_K for every K; A3 (full level) is capped at l(w) <= 5.
std::vector<Anchor> anchor_sweep(const SuiteConfig& config) {
  std::vector<std::pair<SystemPtr, int>> systems{{group("A2"), 1 << 20}};
  if (config.level == SuiteLevel::Full) systems.emplace_back(group("A3"), 5);
  std::vector<Anchor> out;
  for (const auto& [W, cap] : systems) {
    for (std::uint32_t k = 0; k < (1u << W->rank()); ++k) {
      const GeneratorSet K(k);
      const auto Q = build_qk(*W, K);
      for (std::size_t j = 0; j < Q.pairs.size(); ++j) {
        const auto [v, w] = Q.pairs[j];
        if (W->length(w) > cap) continue;
        for (std::size_t i = 0; i < Q.pairs.size(); ++i) {
          if (!Q.poset.leq(i, j)) continue;
          out.push_back({W, K, {Q.pairs[i].first, Q.pairs[i].second, v, w}});
        }
      }
    }
  }
  return out;
}

std::string anchor_name(const Anchor& a) {
  const auto& W = *a.W;
  return W.matrix().type_tag() + " K=" + format_subset(a.K) + " anchors " + format_pair(W, {a.anchors.v_prime, a.anchors.w_prime}) +
         " <= " + format_pair(W, {a.anchors.v, a.anchors.w});
}

std::vector<Task> anchor_tasks(const std::vector<Anchor>& anchors, std::function<void(Outcome&, const Anchor&)> check) {
  std::vector<Task> tasks;
  constexpr std::size_t chunk = 64;
  for (std::size_t start = 0; start < anchors.size(); start += chunk) {
    tasks.push_back([&anchors, check, start](Outcome& o) {
      for (std::size_t k = start; k < std::min(anchors.size(), start + chunk); ++k) {
        ++o.instances;
        try {
          check(o, anchors[k]);
        } catch (const Error& e) {
          o.violation(anchor_name(anchors[k]) + ": " + e.what());
        }
      }
    });
  }
  return tasks;
}

std::string anchor_summary(const std::vector<Anchor>& anchors) {
  std::map<std::string, std::size_t> per;
  for (const auto& a : anchors) ++per[a.W->matrix().type_tag()];
  std::string out;
  for (const auto& [t, n] : per) out += (out.empty() ? "" : ", ") + t + ": " + std::to_string(n);
  return out;
}

std::size_t counter(const Tally& t, const std::string& key) { return t.counters.count(key) ? t.counters.at(key) : 0; }

CriterionResult fiber_descriptions_agree(const SuiteConfig& config) {
  auto r = named(6, "fiber set descriptions coincide and fibers are convex");
  r.limit_seconds = 600;
  const auto start = Clock::now();
  const auto anchors = anchor_sweep(config);
  auto check = [](Outcome& o, const Anchor& a) {
    const auto& W = *a.W;
    const auto d = fiber_descriptions(W, a.K, a.anchors);
    for (const auto& m : compare_descriptions(d)) {
      std::string diff;
      for (const auto& p : m.difference) diff += " " + format_pair(W, p);
      o.violation(anchor_name(a) + ": the " + m.description + " description differs from the definition in" + diff);
      ++o.counters[m.description];
    }
    if (cover_inversion_with_length(W, a.anchors, d) == d.definition) ++o.counters["amended"];
    const auto fp = build_fiber_poset(W, a.K, a.anchors, FiberCheck::DefinitionOnly);
    verify_convexity(fp);
  };
  const auto t = run_tasks(anchor_tasks(anchors, check), config.jobs);
  std::ostringstream detail;
  detail << anchor_summary(anchors) << "; mismatches: demazure " << counter(t, "demazure") << ", inversion "
         << counter(t, "inversion") << ", cover-inversion " << counter(t, "cover-inversion")
         << "; cover-inversion plus l(v'a) = l(v') + l(a) agrees on " << counter(t, "amended") << "/" << t.instances;
  return finish(r, t, start, detail.str());
}

CriterionResult fiber_matchings(const SuiteConfig& config) {
  auto r = named(7, "fiber posets have a single critical cell");
  const auto start = Clock::now();
  const auto anchors = anchor_sweep(config);
  auto check = [](Outcome& o, const Anchor& a) {
    const auto fp = build_fiber_poset(*a.W, a.K, a.anchors, FiberCheck::DefinitionOnly);
    const auto res = fiber_matching(fp);
    const auto& F = fp.cells.poset;
    const auto top = res.quotient.top;
    const auto scan = oracle::unmatched_scan(F, res.matching);
    if (!oracle::acyclic(F, res.matching)) o.violation(anchor_name(a) + ": oracle finds a cycle");
    if (scan.fixed != std::vector<std::size_t>{fp.cells.index_of(top, top)}) o.violation(anchor_name(a) + ": oracle unmatched set differs");
    if (!single_critical_cell(scan.counts)) o.violation(anchor_name(a) + ": Morse counts differ from (1, 0, ...)");
    if (fp.cells.size() > 1) ++o.counters["nontrivial"];
  };
  const auto t = run_tasks(anchor_tasks(anchors, check), config.jobs);
  return finish(r, t, start, anchor_summary(anchors) + "; " + std::to_string(counter(t, "nontrivial")) + " with more than one cell");
}

CriterionResult demazure_oracle(const SuiteConfig& config) {
  auto r = named(8, "Demazure products agree with brute force");
  r.limit_seconds = 30;
  const auto start = Clock::now();
  std::vector<SystemPtr> systems{group(config.level == SuiteLevel::Full ? "A3" : "A2"), group("B2")};
  std::vector<std::vector<boost::dynamic_bitset<>>> tables;
  for (const auto& W : systems) tables.push_back(oracle::bruhat_table(*W));
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    for (auto x : systems[s]->elements()) {
      tasks.push_back([W = systems[s], &below = tables[s], x](Outcome& o) {
        for (auto y : W->elements()) {
          if (W->bruhat_leq(y, x) != below[x.id].test(y.id)) {
            o.violation(W->matrix().type_tag() + ": Bruhat order disagrees with subwords at " + el(*W, y) + ", " + el(*W, x));
          }
          const std::pair<oracle::DemazureOp, Element> ops[] = {{oracle::DemazureOp::Star, W->demazure_star(x, y)},
                                                                {oracle::DemazureOp::CircL, W->circ_l(x, y)},
                                                                {oracle::DemazureOp::CircR, W->circ_r(x, y)}};
          const char* names[] = {"*", "o_l", "o_r"};
          for (int k = 0; k < 3; ++k) {
            ++o.instances;
            try {
              if (oracle::demazure(*W, below, x, y, ops[k].first) != ops[k].second) {
                o.violation(W->matrix().type_tag() + ": " + el(*W, x) + " " + names[k] + " " + el(*W, y) + " disagrees");
              }
            } catch (const Error& e) {
              o.violation(W->matrix().type_tag() + ": " + e.what());
            }
          }
        }
      });
    }
  }
  const auto t = run_tasks(tasks, config.jobs);
  std::string detail;
  for (const auto& W : systems) {
    detail += (detail.empty() ? "" : ", ") + W->matrix().type_tag() + " (" + std::to_string(W->size() * W->size()) + " pairs)";
  }
  return finish(r, t, start, detail + " x 3 operations");
}

CriterionResult orders(const SuiteConfig& config) {
  auto r = named(9, "constructed reflection orders");
  const auto start = Clock::now();
  const bool full = config.level == SuiteLevel::Full;
  std::vector<std::string> types{"A2"};
  if (full) types = {"A2", "A3", "B3", "H3"};
  std::vector<Task> tasks;
  for (const auto& type : types) {
    auto W = group(type);
    tasks.push_back([W](Outcome& o) {
      for (auto [J, Jp] : disjoint_pairs(W->rank())) {
        ++o.instances;
        const auto where = W->matrix().type_tag() + " J=" + format_subset(J) + " J'=" + format_subset(Jp);
        const auto order = order_for_springer(*W, Jp, J);
        std::vector<Element> in_jp, out_jp, in_j, out_j;
        for (auto t : W->reflections()) {
          (W->in_parabolic(t, Jp) ? in_jp : out_jp).push_back(t);
          (W->in_parabolic(t, J) ? in_j : out_j).push_back(t);
        }
        for (auto a : in_jp) {
          for (auto b : out_jp) {
            if (!order.precedes(a, b)) o.violation(where + ": " + el(*W, a) + " in W_J' comes after " + el(*W, b));
          }
        }
        for (auto a : out_j) {
          for (auto b : in_j) {
            if (!order.precedes(a, b)) o.violation(where + ": " + el(*W, b) + " in W_J comes before " + el(*W, a));
          }
        }
        const auto v = validate(*W, order);
        if (!v.ok) o.violation(where + ": " + v.detail);
      }
    });
    tasks.push_back([W](Outcome& o) {
      for (auto vp : W->elements()) {
        ++o.instances;
        const auto order = order_for_fiber(*W, vp);
        const auto inv = W->right_inversion_reflections(vp);
        std::vector<int> ranks;
        for (auto t : inv) ranks.push_back(order.rank(t));
        std::sort(ranks.begin(), ranks.end());
        for (std::size_t k = 0; k < ranks.size(); ++k) {
          if (ranks[k] != static_cast<int>(k)) {
            o.violation(W->matrix().type_tag() + " v'=" + el(*W, vp) + ": N_R(v') is not an initial segment");
            break;
          }
        }
        const auto v = validate(*W, order);
        if (!v.ok) o.violation(W->matrix().type_tag() + " v'=" + el(*W, vp) + ": " + v.detail);
      }
    });
  }
  std::vector<std::pair<std::string, std::size_t>> counts{{"A2", 2}};
  if (full) counts.emplace_back("A3", 16);
  std::string detail;
  for (const auto& [type, expected] : counts) {
    tasks.push_back([type = type, expected = expected](Outcome& o) {
      const auto W = group(type);
      const auto all = oracle::reflection_orders(*W);
      ++o.instances;
      if (all.size() != expected) {
        o.violation(type + ": oracle finds " + std::to_string(all.size()) + " reflection orders, expected " + std::to_string(expected));
      }
      // The validator must accept exactly these among all permutations of T.
      auto perm = W->reflections();
      std::size_t accepted = 0;
      do {
        accepted += validate(*W, perm).ok;
      } while (std::next_permutation(perm.begin(), perm.end()));
      ++o.instances;
      if (accepted != all.size()) {
        o.violation(type + ": the dihedral validator accepts " + std::to_string(accepted) + " permutations of T");
      }
      for (const auto& order : all) {
        ++o.instances;
        if (!validate(*W, order).ok) o.violation(type + ": " + order_name(order) + " fails the dihedral criterion");
        const auto op = opposite(*W, order);
        if (!validate(*W, op).ok || !(opposite(*W, op) == order)) o.violation(type + ": opposite of " + order_name(order) + " is wrong");
      }
    });
    detail += (detail.empty() ? "" : ", ") + type + " has " + std::to_string(expected) + " orders";
  }
  detail += " (the validator accepts no other permutation of T)";
  const auto t = run_tasks(tasks, config.jobs);
  std::string groups;
  for (const auto& type : types) groups += (groups.empty() ? "" : ", ") + type;
  return finish(r, t, start, "Springer and fiber orders on " + groups + "; " + detail);
}

CriterionResult thin_pure(const SuiteConfig& config) {
  auto r = named(10, "Bruhat order is thin and pure");
  const auto start = Clock::now();
  std::vector<std::string> types{"A2", "B2"};
  if (config.level == SuiteLevel::Full) types = {"A3", "B3", "H3"};
  std::vector<Task> tasks;
  for (const auto& type : types) {
    tasks.push_back([type](Outcome& o) {
      const auto W = group(type);
      std::vector<std::string> names;
      std::vector<int> dims;
      std::vector<CoverEdge> covers;
      for (auto x : W->elements()) {
        names.push_back(el(*W, x));
        dims.push_back(W->length(x));
        for (const auto& c : W->bruhat_covers_down(x)) covers.push_back({c.lower.id, x.id, kNoLabel});
      }
      const auto P = FinitePoset::from_covers(std::move(names), std::move(dims), std::move(covers));
      ++o.instances;
      if (!is_pure(P)) o.violation(type + ": not pure");
      ++o.instances;
      if (!is_thin(P)) o.violation(type + ": not thin");
      // Independently, from subword closures.
      const auto below = oracle::bruhat_table(*W);
      for (auto w : W->elements()) {
        for (auto v : W->elements()) {
          if (W->length(w) - W->length(v) != 2 || !below[w.id].test(v.id)) continue;
          ++o.instances;
          std::size_t size = 0;
          for (auto x : W->elements()) size += below[w.id].test(x.id) && below[x.id].test(v.id);
          if (size != 4) o.violation(type + ": [" + el(*W, v) + ", " + el(*W, w) + "] has " + std::to_string(size) + " elements");
        }
      }
    });
  }
  const auto t = run_tasks(tasks, config.jobs);
  std::string groups;
  for (const auto& type : types) groups += (groups.empty() ? "" : ", ") + type;
  return finish(r, t, start, groups + "; every length-2 interval counted by subwords");
}

}  // namespace

CriterionResult run_criterion(int id, const SuiteConfig& config) {
  switch (id) {
    case 1: return golden_fixture(config);
    case 2: return complete_acyclic(config);
    case 3: return shelling_subsets(config);
    case 4: return el_properties(config);
    case 5: return springer(config);
    case 6: return fiber_descriptions_agree(config);
    case 7: return fiber_matchings(config);
    case 8: return demazure_oracle(config);
    case 9: return orders(config);
    case 10: return thin_pure(config);
    default: fail(ErrorCode::Usage, "no criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_suite(const SuiteConfig& config, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> ids = config.only;
  if (ids.empty()) {
    for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);
  }
  std::sort(ids.begin(), ids.end());
  std::vector<CriterionResult> out;
  for (int id : ids) {
    CriterionResult r;
    try {
      r = run_criterion(id, config);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Usage) throw;
      r = named(id, "criterion " + std::to_string(id));
      r.violations = 1;
      r.detail = std::string("aborted: ") + e.what();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace coxmorse
