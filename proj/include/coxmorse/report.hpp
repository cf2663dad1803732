#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "coxmorse/fiber.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/springer.hpp"

namespace coxmorse {

using Json = nlohmann::ordered_json;
using LabelName = std::function<std::string(Label)>;

/// Shortlex word of the reflection with the given element id.
LabelName reflection_names(const CoxeterSystem& W);

/// {elements:[{id, name, dim}], covers:[{lo, hi, label}]}
Json poset_json(const FinitePoset& P, const LabelName& label = {});
/// {"0": m0, "1": m1, ...}
Json morse_json(const MorseSummary& s);
/// Hasse diagram with one rank per dimension; matched covers drawn bold red.
std::string poset_dot(const FinitePoset& P, const Matching* M, const LabelName& label = {});

Json group_report(const CoxeterSystem& W);
/// {interval, order, pairs:[[lo, hi]], unmatched, morse, acyclic, complete, shelling}
Json matching_report(const LabeledInterval& I, const ReflectionOrder& order, const Matching& M,
                     const MorseSummary& morse, const ShellingReport& shelling);
Json order_json(const CoxeterSystem& W, const ReflectionOrder& order);
Json springer_report(const SpringerPoset& sp, const SpringerResult& r);
Json fiber_report(const FiberPoset& fp, const FiberResult& r, const std::vector<DescriptionMismatch>& mismatches);

}  // namespace coxmorse
