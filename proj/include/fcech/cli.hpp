#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fcech/fixtures.hpp"

namespace fcech::cli {

using Json = nlohmann::ordered_json;

// One requested operation; executed in declared order.
struct Request {
  std::string op;  // homology | cohomology | eta | pair_check | beta_check
  int lo = 0;      // degree range for the degree-indexed operations
  int hi = 2;
  std::optional<BetaExpectation> expected;  // inline table for beta_check
};

// Command-line overrides applied on top of a job document.
struct Overrides {
  std::optional<std::pair<int, int>> degrees;
  std::optional<int> window;
  std::optional<int> depth;
};

// A job document, parsed and built. The cover system is constructed eagerly
// so that schema and cover-validation failures both surface as input errors.
struct Job {
  std::string label;
  CoverSystem system;
  const Fixture* fixture = nullptr;  // set for fixture-backed spaces
  CoefficientGroup coefficients = FgAbGroup::free(1);
  int window = 2;
  std::vector<Request> requests;
  Json echo;  // normalized job body, embedded in the machine report
};

// Throws ParseError with a dotted path into the document on schema errors;
// cover validation errors propagate from the backends.
Job parse_job(const Json& document, const std::string& label, const Overrides& o = {});

// Job equivalent of running a bundled fixture with the default request set.
Job fixture_job(const std::string& name, const Overrides& o = {});

struct Outcome {
  int exit_code = 0;  // 0 clean, 1 at least one check verdict failed
  std::string text;   // human-readable report (includes timing)
  Json machine;       // deterministic machine body (no timing)
};

Outcome run(const Job& job);

// Bundled-fixture catalog with each registered expected table over Z.
Json catalog_machine();
std::string catalog_text();

// Full command-line entry point; `args` excludes the program name.
// Returns the process exit code: 0 success, 1 check failure, 2 input error.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcech::cli
