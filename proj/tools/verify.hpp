#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace equisym::verify {

struct Expectation {
  std::string suite;
  std::string claim;
  long long genus = 0;
  nlohmann::json expected;
  std::string tag;   // PAPER or DERIVED
  std::string note;  // optional context
};

struct Result {
  Expectation expectation;
  nlohmann::json actual;
  bool pass = false;
};

std::vector<Expectation> load_fixtures(const std::string& json_text);
const char* embedded_fixtures();

// Runs every fixture of `suite` (restricted to `genus_filter` when
// non-empty). Throws ValidationError for an unknown suite.
std::vector<Result> run_suite(const std::string& suite, const std::vector<long long>& genus_filter,
                              const std::vector<Expectation>& fixtures, int threads);

std::vector<std::string> suite_names();

}  // namespace equisym::verify
