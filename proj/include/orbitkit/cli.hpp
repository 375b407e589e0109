#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitkit/cech.hpp"
#include "orbitkit/quantize.hpp"

namespace orbitkit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInputError = 3,
  kCapExceeded = 4,
  kTheoremViolation = 5,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct OrbitRequest {
  std::string series;
  Vec coords;
  Basis basis = Basis::ambient;
  std::string lattice = "sc";  // sc | adjoint | custom:FILE
};

/// Full orbit pipeline. Keys are emitted in sorted order.
nlohmann::json orbit_report(const OrbitRequest& request);

nlohmann::json cohomology_json(const cech::CohomologyGroup& h);
nlohmann::json chern_json(const cech::ChernClass& c);

}  // namespace orbitkit::cli
