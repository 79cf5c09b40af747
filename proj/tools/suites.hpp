#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace drshadow::cli {

using Json = nlohmann::ordered_json;

struct SuiteOptions {
  std::string suite;
  std::string space = "cantor";
  std::string sys = "vls";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::uint64_t bound = 1000;
  std::uint64_t depth = 10;
  bool corrupt = false;
};

struct SuiteResult {
  bool pass = true;
  Json record;
};

SuiteResult run_suite(const SuiteOptions& opts);

}  // namespace drshadow::cli
