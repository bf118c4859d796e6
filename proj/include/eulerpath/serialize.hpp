#ifndef EULERPATH_SERIALIZE_HPP
#define EULERPATH_SERIALIZE_HPP

#include <json.hpp>

#include "eulerpath/arborescence.hpp"
#include "eulerpath/digraph.hpp"
#include "eulerpath/euler.hpp"
#include "eulerpath/path.hpp"
#include "eulerpath/pex.hpp"
#include "eulerpath/walks.hpp"
#include "eulerpath/wilson.hpp"

namespace eulerpath {

using Json = nlohmann::json;

// Alternating vertex/edge array: [v0, e0, v1, e1, ..., vk].
Json json_of_path(const Path& p);

// {"<vertex>": [top, ..., bottom], ...}
Json json_of_stacks(const StackConfiguration& s);

// {"edges": {"<vertex>": edge, ...}, "cover": [...]}
Json json_of_arboretum(const InArboretum& a);

// Adds per-vertex "exact"/"truncated" flags and the horizon.
Json json_of_partial(const PartialArboretum& a);

Json json_of_report(const PexTestReport& r);

Json json_of_return(const ReturnEstimate& r);

Json json_of_gibbs(const GibbsPrefixSample& s);

Json json_of_witness(const DegreeWitness& w);

Json json_of_classification(const EulerianClassification& c);

// Counts serialize through decimal strings so arbitrary precision survives
// the round trip.
std::string decimal_string(const BigInt& n);

}  // namespace eulerpath

#endif  // EULERPATH_SERIALIZE_HPP
