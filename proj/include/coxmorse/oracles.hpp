#pragma once

#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "coxmorse/coxeter_system.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/poset.hpp"
#include "coxmorse/reflection_order.hpp"

// Brute-force reference implementations. They use only group multiplication,
// lengths and normal forms; none of them calls the Bruhat, Demazure, order or
// matching code they are compared against.
namespace coxmorse::oracle {

/// All products of subwords of the shortlex word of w, as a bitset over ids.
boost::dynamic_bitset<> lower_set(const CoxeterSystem& W, Element w);

/// Subword test against one fixed reduced word of w.
bool bruhat_leq(const CoxeterSystem& W, Element v, Element w);

/// Bruhat order of the whole group from subword closures, below[w][v] iff v <= w.
std::vector<boost::dynamic_bitset<>> bruhat_table(const CoxeterSystem& W);

enum class DemazureOp { Star, CircL, CircR };

/// Literal optimum over the defining set: the maximum of {x'y' : x' <= x,
/// y' <= y}, the minimum of {x'y : x' <= x}, or the minimum of {xy' : y' <= y}.
/// Throws NonUniqueOptimum if the optimum is not unique.
Element demazure(const CoxeterSystem& W, const std::vector<boost::dynamic_bitset<>>& below, Element x, Element y,
                 DemazureOp op);

/// Every reduced word of w0 by depth-first search. Throws CapExceeded past `cap`.
std::vector<Word> reduced_words_of_w0(const CoxeterSystem& W, std::size_t cap = 100000);

/// Inversion sequences of all reduced words of w0, deduplicated, in the order
/// the words are first found.
std::vector<ReflectionOrder> reflection_orders(const CoxeterSystem& W, std::size_t cap = 100000);

struct UnmatchedScan {
  std::vector<std::size_t> fixed;
  std::map<int, std::size_t> counts;  // dim -> unmatched
};

UnmatchedScan unmatched_scan(const FinitePoset& P, const Matching& M);

/// Acyclicity by repeatedly removing sources (Kahn), independent of the
/// depth-first search in the matching module.
bool acyclic(const FinitePoset& P, const Matching& M);

}  // namespace coxmorse::oracle
