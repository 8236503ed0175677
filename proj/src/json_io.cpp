#include "orbitsum/json_io.hpp"

#include <string>

namespace orbitsum::io {

namespace {

std::vector<int> parse_canonical_ints(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(std::string(what) + ": expected a nonempty integer array");
  }
  std::vector<int> values;
  values.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number_integer()) {
      throw std::invalid_argument(std::string(what) + ": expected integers");
    }
    values.push_back(entry.get<int>());
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1]) {
      throw std::invalid_argument(std::string(what) +
                                  ": entries must be in nonincreasing order");
    }
  }
  return values;
}

json classes_to_json(const std::vector<std::vector<int>>& classes) {
  json out = json::array();
  for (const auto& cls : classes) out.push_back(cls);
  return out;
}

std::vector<std::vector<int>> classes_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<std::vector<int>> classes;
  for (const auto& cls : j) {
    if (!cls.is_array()) throw std::invalid_argument(std::string(what) + ": expected index arrays");
    classes.push_back(cls.get<std::vector<int>>());
  }
  return classes;
}

}  // namespace

json to_json(const rootsys::MultiplicityPartition& p) { return json(p.parts()); }

json to_json(const rootsys::SubsystemShape& s) { return json(s.blocks()); }

json to_json(const criteria::MarginRow& row) {
  return json{{"shape", row.shape.blocks()},
              {"lhs", row.lhs},
              {"rhs", row.rhs},
              {"corank", row.corank},
              {"lhs_min", row.lhs_min}};
}

json to_json(const criteria::InequalityEvidence& e) {
  return json{{"sum_q", e.sum_q}, {"bound", e.bound}, {"exception", e.exception}};
}

json to_json(const criteria::SingularWitness& w) {
  json partitions = json::array();
  for (const auto& p : w.tuple.partitions()) partitions.push_back(p.parts());
  return json{{"family", w.family == criteria::WitnessFamily::linear ? "linear" : "parity"},
              {"case", rootsys::to_string(w.tuple.kind())},
              {"partitions", partitions},
              {"shape", w.shape.blocks()},
              {"shape_blocks", classes_to_json(w.shape_blocks)},
              {"arrangements", [&] {
                 json arr = json::array();
                 for (const auto& a : w.arrangements) arr.push_back(classes_to_json(a));
                 return arr;
               }()}};
}

json to_json(const criteria::Verdict& v) {
  json out{{"classification", criteria::to_string(v.classification)},
           {"measure_class", criteria::to_string(v.measure_class)},
           {"theorem1", to_json(v.theorem1)},
           {"margins", [&] {
              json rows = json::array();
              for (const auto& row : v.margins) rows.push_back(to_json(row));
              return rows;
            }()}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  return out;
}

json to_json(const oracle::OracleVerdict& v) {
  json histogram = json::object();
  for (const auto& [dim, count] : v.dimension_histogram) {
    histogram[std::to_string(dim)] = count;
  }
  json per_sample = json::array();
  for (const auto& record : v.per_sample) {
    per_sample.push_back(json{{"dim", record.dimension},
                              {"gap_ratio", record.gap_ratio},
                              {"confident", record.confident}});
  }
  return json{{"outcome", oracle::to_string(v.outcome)},
              {"samples", v.samples},
              {"seed", v.seed},
              {"tol", v.tol},
              {"dimension_histogram", histogram},
              {"per_sample", per_sample},
              {"gap_summary", json{{"min_ratio", v.gaps.min_ratio},
                                   {"max_ratio", v.gaps.max_ratio},
                                   {"median_ratio", v.gaps.median_ratio}}}};
}

rootsys::MultiplicityPartition parse_partition(const json& j) {
  return rootsys::MultiplicityPartition(parse_canonical_ints(j, "partition"));
}

rootsys::SubsystemShape parse_shape(const json& j) {
  return rootsys::SubsystemShape(parse_canonical_ints(j, "shape"));
}

criteria::MarginRow parse_margin_row(const json& j) {
  criteria::MarginRow row{parse_shape(j.at("shape")), j.at("lhs").get<int>(),
                          j.at("rhs").get<int>(), j.at("corank").get<int>(),
                          j.at("lhs_min").get<int>()};
  return row;
}

criteria::SingularWitness parse_witness(const json& j) {
  std::vector<rootsys::MultiplicityPartition> partitions;
  for (const auto& parts : j.at("partitions")) {
    partitions.push_back(parse_partition(parts));
  }
  const std::string family = j.at("family").get<std::string>();
  if (family != "linear" && family != "parity") {
    throw std::invalid_argument("witness: unknown family " + family);
  }
  return criteria::SingularWitness{
      rootsys::OrbitTuple(std::move(partitions),
                          rootsys::case_kind_from_string(j.at("case").get<std::string>())),
      parse_shape(j.at("shape")),
      classes_from_json(j.at("shape_blocks"), "witness shape blocks"),
      [&] {
        std::vector<std::vector<std::vector<int>>> arrangements;
        for (const auto& a : j.at("arrangements")) {
          arrangements.push_back(classes_from_json(a, "witness arrangement"));
        }
        return arrangements;
      }(),
      family == "linear" ? criteria::WitnessFamily::linear : criteria::WitnessFamily::parity};
}

criteria::Verdict parse_verdict(const json& j) {
  criteria::Verdict v;
  const std::string classification = j.at("classification").get<std::string>();
  if (classification == "Open") {
    v.classification = criteria::Classification::Open;
  } else if (classification == "Singular") {
    v.classification = criteria::Classification::Singular;
  } else {
    throw std::invalid_argument("verdict: unknown classification " + classification);
  }
  const std::string measure = j.at("measure_class").get<std::string>();
  if (measure == "InL2") {
    v.measure_class = criteria::MeasureClass::InL2;
  } else if (measure == "SingularToHaar") {
    v.measure_class = criteria::MeasureClass::SingularToHaar;
  } else {
    throw std::invalid_argument("verdict: unknown measure class " + measure);
  }
  const json& t1 = j.at("theorem1");
  v.theorem1 = criteria::InequalityEvidence{t1.at("sum_q").get<int>(), t1.at("bound").get<int>(),
                                            t1.at("exception").get<bool>()};
  for (const auto& row : j.at("margins")) {
    v.margins.push_back(parse_margin_row(row));
  }
  if (j.contains("witness")) {
    v.witness = parse_witness(j.at("witness"));
  }
  return v;
}

oracle::OracleVerdict parse_oracle_verdict(const json& j) {
  oracle::OracleVerdict v;
  const std::string outcome = j.at("outcome").get<std::string>();
  if (outcome == "OpenCertificate") {
    v.outcome = oracle::OracleOutcome::OpenCertificate;
  } else if (outcome == "SingularEvidence") {
    v.outcome = oracle::OracleOutcome::SingularEvidence;
  } else if (outcome == "Inconclusive") {
    v.outcome = oracle::OracleOutcome::Inconclusive;
  } else {
    throw std::invalid_argument("oracle verdict: unknown outcome " + outcome);
  }
  v.samples = j.at("samples").get<int>();
  v.seed = j.at("seed").get<std::uint64_t>();
  v.tol = j.at("tol").get<double>();
  for (const auto& [key, value] : j.at("dimension_histogram").items()) {
    v.dimension_histogram[std::stoi(key)] = value.get<int>();
  }
  for (const auto& record : j.at("per_sample")) {
    v.per_sample.push_back(oracle::SampleRecord{record.at("dim").get<int>(),
                                                record.at("gap_ratio").get<double>(),
                                                record.at("confident").get<bool>()});
  }
  const json& gaps = j.at("gap_summary");
  v.gaps = oracle::GapSummary{gaps.at("min_ratio").get<double>(),
                              gaps.at("max_ratio").get<double>(),
                              gaps.at("median_ratio").get<double>()};
  return v;
}

}  // namespace orbitsum::io
