// coxmorse: build reflection-order matchings and check their certificates.
//
// Exit codes: 0 all checks passed, 1 a check failed (counterexample found),
// 2 bad usage or input, 3 internal error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coxmorse/error.hpp"
#include "coxmorse/fiber.hpp"
#include "coxmorse/oracles.hpp"
#include "coxmorse/report.hpp"
#include "coxmorse/springer.hpp"
#include "coxmorse/suite.hpp"

using namespace coxmorse;

namespace {

struct RunConfig {
  std::string group;
  std::string matrix_file;
  std::string format = "json";
  std::string out;
  bool paranoid = false;
  bool verbose = false;
  unsigned jobs = 1;
  std::size_t max_elements = CoxeterSystem::kDefaultMaxElements;

  std::vector<std::string> interval;
  std::string order_word;
  std::string J = "{}", J_prime = "{}", K = "{}";
  std::vector<std::string> anchors;
  std::string level = "quick";
  std::vector<int> criteria;
};

struct Output {
  Json json;
  std::string text;
  std::string dot;
  bool ok = true;
};

std::shared_ptr<const CoxeterSystem> load_group(const RunConfig& c) {
  if (c.group.empty() == c.matrix_file.empty()) fail(ErrorCode::Usage, "give exactly one of --group and --matrix-file");
  const auto matrix = c.group.empty() ? CoxeterMatrix::from_file(c.matrix_file) : CoxeterMatrix::from_type(c.group);
  return build_system(matrix, c.max_elements);
}

void paranoid_check(bool agrees, const std::string& what) {
  if (!agrees) fail(ErrorCode::TheoremFalsified, "--paranoid: the brute-force check disagrees on " + what);
}

std::string morse_text(const MorseSummary& m) {
  std::string out = "(";
  for (const auto& [dim, n] : m.counts) out += (out.size() > 1 ? ", " : "") + std::to_string(n);
  return out + ")";
}

Output cmd_group(const RunConfig& c) {
  const auto W = load_group(c);
  Output o;
  o.json = group_report(*W);
  std::ostringstream text;
  text << "type " << W->matrix().type_tag() << ", rank " << W->rank() << ", order " << W->size() << ", "
       << W->reflections().size() << " reflections\nw0 = " << format_element(*W, W->longest()) << " (length "
       << W->length(W->longest()) << ")\n";
  for (const auto& p : o.json["parabolics"]) {
    text << "W_" << p["J"].get<std::string>() << ": order " << p["size"] << ", longest " << p["longest"].get<std::string>() << "\n";
  }
  o.text = text.str();
  if (c.format == "dot") {
    const auto I = labeled_interval(*W, W->identity(), W->longest());
    o.dot = poset_dot(I.poset, nullptr, reflection_names(*W));
  }
  if (c.paranoid) {
    const auto below = oracle::bruhat_table(*W);
    for (auto w : W->elements()) {
      for (auto v : W->elements()) paranoid_check(W->bruhat_leq(v, w) == below[w.id].test(v.id), "the Bruhat order");
    }
  }
  return o;
}

ReflectionOrder order_from_flag(const CoxeterSystem& W, const std::string& word) {
  if (word.empty()) return order_from_reduced_word(W, W.shortlex_word(W.longest()));
  return order_from_reduced_word(W, parse_word(word, W.rank()));
}

Output cmd_matching(const RunConfig& c) {
  const auto W = load_group(c);
  if (c.interval.size() != 2) fail(ErrorCode::Usage, "--interval takes two elements");
  const auto v = parse_element(*W, c.interval[0]);
  const auto w = parse_element(*W, c.interval[1]);
  const auto order = order_from_flag(*W, c.order_word);
  const auto I = labeled_interval(*W, v, w);
  const auto M = build_matching(I, order);
  M.validate(I.poset);
  const auto morse = morse_counts(I.poset, M);
  const auto shelling = verify_shelling_subsets(I, order, M);
  if (c.paranoid) {
    paranoid_check(oracle::acyclic(I.poset, M), "acyclicity");
    paranoid_check(oracle::unmatched_scan(I.poset, M).fixed.empty(), "completeness");
    const auto lower = oracle::lower_set(*W, w);
    for (auto x : W->elements()) {
      const bool member = lower.test(x.id) && oracle::bruhat_leq(*W, v, x);
      paranoid_check(member == I.find(x).has_value(), "interval membership");
    }
  }
  Output o;
  o.json = matching_report(I, order, M, morse, shelling);
  o.ok = M.complete() && morse.acyclic;
  std::ostringstream text;
  text << "interval [" << format_element(*W, v) << ", " << format_element(*W, w) << "], " << I.size() << " elements\n"
       << "order word " << format_word(order.word()) << "\n";
  for (const auto& [lo, hi] : named_pairs(I.poset, M)) text << "  " << lo << " -- " << hi << "\n";
  text << (M.complete() ? "complete" : "not complete") << ", " << (morse.acyclic ? "acyclic" : "cyclic") << ", "
       << shelling.coatom_prefixes << " coatom and " << shelling.atom_prefixes << " atom prefix unions are M-subsets\n";
  o.text = text.str();
  if (c.format == "dot") o.dot = poset_dot(I.poset, &M, reflection_names(*W));
  return o;
}

Output cmd_springer(const RunConfig& c) {
  const auto W = load_group(c);
  const auto J = parse_subset(c.J, W->rank());
  const auto Jp = parse_subset(c.J_prime, W->rank());
  const auto sp = build_springer_poset(*W, J, Jp);
  const auto r = springer_matching(sp);
  if (c.paranoid) {
    const auto& Z = sp.cells.poset;
    paranoid_check(oracle::acyclic(Z, r.matching), "acyclicity");
    const auto scan = oracle::unmatched_scan(Z, r.matching);
    paranoid_check(scan.fixed == std::vector<std::size_t>{sp.cells.index_of(r.unmatched.first, r.unmatched.second)},
                   "the unmatched element");
  }
  Output o;
  o.json = springer_report(sp, r);
  o.ok = r.morse.certificate;
  std::ostringstream text;
  text << "J=" << format_subset(J) << " J'=" << format_subset(Jp) << ": " << sp.cells.size() << " pairs, "
       << r.matching.pairs(sp.cells.poset).size() << " matched\nunmatched " << format_pair(*W, r.unmatched)
       << "\nMorse counts " << morse_text(r.morse) << ", Euler characteristic " << euler_characteristic(sp.cells.poset)
       << "\ncertificate " << (r.morse.certificate ? "yes" : "no") << "\n";
  o.text = text.str();
  if (c.format == "dot") o.dot = poset_dot(sp.cells.poset, &r.matching);
  return o;
}

Output cmd_fiber(const RunConfig& c) {
  const auto W = load_group(c);
  if (c.anchors.size() != 4) fail(ErrorCode::Usage, "--anchors takes four elements: v' w' v w");
  const auto K = parse_subset(c.K, W->rank());
  const FiberAnchors an{parse_element(*W, c.anchors[0]), parse_element(*W, c.anchors[1]), parse_element(*W, c.anchors[2]),
                        parse_element(*W, c.anchors[3])};
  const auto fp = build_fiber_poset(*W, K, an, FiberCheck::DefinitionOnly);
  const auto mismatches = compare_descriptions(fiber_descriptions(*W, K, an));
  verify_convexity(fp);
  const auto r = fiber_matching(fp);
  if (c.paranoid) {
    paranoid_check(oracle::acyclic(fp.cells.poset, r.matching), "acyclicity");
    const auto scan = oracle::unmatched_scan(fp.cells.poset, r.matching);
    paranoid_check(scan.fixed == std::vector<std::size_t>{fp.cells.index_of(r.unmatched.first, r.unmatched.second)},
                   "the unmatched element");
  }
  Output o;
  o.json = fiber_report(fp, r, mismatches);
  o.ok = r.morse.certificate && mismatches.empty();
  std::ostringstream text;
  text << "K=" << format_subset(K) << ", z=" << format_element(*W, fp.z) << ", z'=" << format_element(*W, fp.z_prime)
       << ", z~=" << format_element(*W, r.quotient.top) << "\n"
       << fp.cells.size() << " pairs, unmatched " << format_pair(*W, r.unmatched) << ", Morse counts " << morse_text(r.morse)
       << "\n";
  for (const auto& m : mismatches) {
    text << "the " << m.description << " description differs from the definition in";
    for (const auto& p : m.difference) text << " " << format_pair(*W, p);
    text << "\n";
  }
  text << "certificate " << (r.morse.certificate ? "yes" : "no") << "\n";
  o.text = text.str();
  if (c.format == "dot") o.dot = poset_dot(fp.cells.poset, &r.matching);
  return o;
}

Output cmd_suite(const RunConfig& c) {
  SuiteConfig sc;
  sc.level = parse_level(c.level);
  sc.jobs = c.jobs;
  sc.only = c.criteria;
  Output o;
  o.json = Json::array();
  std::ostringstream text;
  const bool stream = c.format == "text" && c.out.empty();
  for (const auto& r : run_suite(sc, [&](const CriterionResult& r) {
         if (stream) std::cout << format_result(r) << std::endl;
         else if (c.verbose) std::cerr << format_result(r) << std::endl;
       })) {
    o.ok = o.ok && r.passed;
    if (!stream) text << format_result(r) << "\n";
    o.json.push_back({{"id", r.id},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"instances", r.instances},
                      {"violations", r.violations},
                      {"seconds", r.seconds},
                      {"limit_seconds", r.limit_seconds},
                      {"detail", r.detail}});
  }
  o.text = text.str();
  return o;
}

void emit(const RunConfig& c, const Output& o) {
  std::string body;
  if (c.format == "json") {
    body = o.json.dump(2) + "\n";
  } else if (c.format == "dot") {
    if (o.dot.empty()) fail(ErrorCode::Usage, "this command has no DOT output");
    body = o.dot;
  } else {
    body = o.text;
  }
  if (c.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream file(c.out);
  if (!file) fail(ErrorCode::Usage, "cannot write " + c.out);
  file << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflection-order matchings on Bruhat intervals and their Morse certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  app.add_option("--group", c.group, "Coxeter type, e.g. A3, B3, H3, I2(5)");
  app.add_option("--matrix-file", c.matrix_file, "Coxeter matrix, one row per line");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", c.out, "Write output to this file");
  app.add_flag("--paranoid", c.paranoid, "Repeat the checks with brute-force references");
  app.add_flag("-v,--verbose", c.verbose, "Report suite progress on stderr");
  app.add_option("--jobs", c.jobs, "Worker threads for the suite")->check(CLI::Range(1u, 256u));
  app.add_option("--max-elements", c.max_elements, "Refuse groups larger than this");

  auto* group = app.add_subcommand("group", "Group facts: order, reflections, w0, parabolic subgroups");
  auto* matching = app.add_subcommand("matching", "Matching of an interval under a reflection order");
  matching->add_option("--interval", c.interval, "Endpoints v w, as words like 1.2.1")->expected(2)->required();
  matching->add_option("--order-word", c.order_word, "Reduced word of w0 defining the order (default: its shortlex word)");
  auto* springer = app.add_subcommand("springer", "Matching of the pair poset for disjoint J, J'");
  springer->add_option("--J", c.J, "Subset like {1,3}");
  springer->add_option("--Jprime", c.J_prime, "Subset like {2}");
  auto* fiber = app.add_subcommand("fiber", "Matching of the fiber poset over anchors (v', w') <= (v, w)");
  fiber->add_option("--K", c.K, "Subset like {1,2}");
  fiber->add_option("--anchors", c.anchors, "v' w' v w")->expected(4)->required();
  auto* suite = app.add_subcommand("suite", "Run the acceptance criteria");
  suite->add_option("level,--level", c.level, "quick or full");
  suite->add_option("--criterion", c.criteria, "Run only these criteria")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    if (*group) out = cmd_group(c);
    if (*matching) out = cmd_matching(c);
    if (*springer) out = cmd_springer(c);
    if (*fiber) out = cmd_fiber(c);
    if (*suite) {
      if (c.format == "dot") fail(ErrorCode::Usage, "the suite has no DOT output");
      out = cmd_suite(c);
    }
    emit(c, out);
    return out.ok ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_falsification(e.code())) return 1;
    return e.code() == ErrorCode::Internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
