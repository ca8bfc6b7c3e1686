#pragma once

#include <functional>

#include "cgt/report.hpp"

namespace cgt {

struct VerifyContext {
  std::string data_dir = "data";
  u64 seed = 20260801;
};

struct VerifyCase {
  std::string id;
  std::string scale;  // fast | standard | extended
  std::vector<std::string> required_files;
  std::vector<std::string> criteria;  // acceptance ids this case carries
  std::function<CaseResult(const VerifyContext&)> run;
};

const std::vector<VerifyCase>& verify_registry();
const VerifyCase* find_verify_case(const std::string& id);

// Runs one case with the missing-data skip contract applied.
CaseResult run_verify_case(const VerifyCase& vc, const VerifyContext& ctx);

bool data_file_exists(const std::string& data_dir, const std::string& name);

}  // namespace cgt
