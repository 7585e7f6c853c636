#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "tetralab/fourcube.hpp"
#include "tetralab/lattice.hpp"
#include "tetralab/laurent.hpp"
#include "tetralab/sparse_operator.hpp"

namespace tetralab {

using Json = nlohmann::ordered_json;

enum class Status { Holds, Fails, Finding };
std::string to_string(Status s);

struct Report {
  std::string check;
  Json params = Json::object();
  Status status = Status::Holds;
  Json body = Json::object();
  double runtime_ms = 0;
  std::string text;  // table rendering, when the check has one

  bool ok() const { return status != Status::Fails; }
  Json to_json() const;
};

struct CheckOptions {
  std::array<int, 3> size{2, 2, 2};
  CubeDirections dirs{1, 2, 3};
  std::string method = "all";  // partition: spin|edge|network|all
  unsigned threads = 0;
  AReading a_reading = AReading::EdgeDirection;
};

const std::vector<std::string>& check_ids();  // without "all"
/// Runs one check id, or every id in order for "all".
std::vector<Report> run_check(const std::string& id, const CheckOptions& options = {});

/// {"exponent": coefficient}; coefficients beyond 64 bits become strings.
Json laurent_json(const Laurent& p);
Json histogram_json(const std::map<std::string, std::uint64_t>& h);
/// Witness states are unflattened over `slots` legs of dimension `dim`.
Json equation_json(const EquationReport& r, std::size_t slots = 6, std::uint32_t dim = 16);

/// The 8-cycle in I^4, or `words` read as a cycle (vertices or '*' edges).
Report codes_coil_report(int n, const std::vector<std::string>& words = {});
Report codes_distance_report(const std::vector<std::string>& words);
Report partition_report(const CheckOptions& options);

}  // namespace tetralab
