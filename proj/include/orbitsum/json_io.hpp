#pragma once

#include <json.hpp>

#include "orbitsum/classify.hpp"
#include "orbitsum/oracle.hpp"
#include "orbitsum/rootsys.hpp"
#include "orbitsum/witness.hpp"

/// JSON views of the domain types. Partitions and shapes travel as plain
/// integer arrays, e.g. [2,2]; parsers require canonical nonincreasing order
/// and reject anything else with std::invalid_argument.
namespace orbitsum::io {

using nlohmann::json;

json to_json(const rootsys::MultiplicityPartition& p);
json to_json(const rootsys::SubsystemShape& s);
json to_json(const criteria::MarginRow& row);
json to_json(const criteria::InequalityEvidence& e);
json to_json(const criteria::SingularWitness& w);
json to_json(const criteria::Verdict& v);
json to_json(const oracle::OracleVerdict& v);

rootsys::MultiplicityPartition parse_partition(const json& j);
rootsys::SubsystemShape parse_shape(const json& j);
criteria::MarginRow parse_margin_row(const json& j);
criteria::SingularWitness parse_witness(const json& j);
criteria::Verdict parse_verdict(const json& j);
oracle::OracleVerdict parse_oracle_verdict(const json& j);

}  // namespace orbitsum::io
