#include "kfock_c.h"

#include "kfock/em_field.hpp"
#include "kfock/scenario.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

kfock_status catch_as_status(const std::exception& e, kfock_status code) {
  set_error(e.what());
  return code;
}

struct ScenarioHandle {
  kfock::Scenario scenario;
};

struct ResultsHandle {
  std::vector<kfock::ResultRecord> records;
  std::uint64_t seed_used = 0;
  std::string json_cache;
  std::string csv_cache;
};

ScenarioHandle* unwrap(kfock_scenario* s) { return reinterpret_cast<ScenarioHandle*>(s); }
const ScenarioHandle* unwrap(const kfock_scenario* s) {
  return reinterpret_cast<const ScenarioHandle*>(s);
}
ResultsHandle* unwrap(kfock_results* r) { return reinterpret_cast<ResultsHandle*>(r); }
const ResultsHandle* unwrap(const kfock_results* r) {
  return reinterpret_cast<const ResultsHandle*>(r);
}

}  // namespace

extern "C" {

const char* kfock_version(void) { return "0.1.0"; }

const char* kfock_last_error(void) { return g_last_error.c_str(); }

kfock_status kfock_scenario_parse(const char* json_text, kfock_scenario** out) {
  if (!json_text || !out) {
    set_error("kfock_scenario_parse: null argument");
    return KFOCK_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    auto handle = new ScenarioHandle{kfock::parse_scenario(json_text)};
    *out = reinterpret_cast<kfock_scenario*>(handle);
    return KFOCK_OK;
  } catch (const std::invalid_argument& e) {
    return catch_as_status(e, KFOCK_ERR_PARSE);
  } catch (const std::exception& e) {
    return catch_as_status(e, KFOCK_ERR_INTERNAL);
  }
}

kfock_status kfock_scenario_parse_file(const char* path, kfock_scenario** out) {
  if (!path || !out) {
    set_error("kfock_scenario_parse_file: null argument");
    return KFOCK_ERR_INVALID_ARGUMENT;
  }
  std::ifstream in(path);
  if (!in) {
    set_error(std::string("kfock_scenario_parse_file: cannot open '") + path + "'");
    return KFOCK_ERR_IO;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return kfock_scenario_parse(text.str().c_str(), out);
}

void kfock_scenario_destroy(kfock_scenario* scenario) { delete unwrap(scenario); }

kfock_status kfock_scenario_run(const kfock_scenario* scenario, const char* request_filter,
                                int use_seed_override, uint64_t seed, kfock_results** out) {
  if (!scenario || !out) {
    set_error("kfock_scenario_run: null argument");
    return KFOCK_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    kfock::RunOptions options;
    if (request_filter) options.request_filter = std::string(request_filter);
    if (use_seed_override) options.seed_override = seed;
    const kfock::Scenario& scn = unwrap(scenario)->scenario;
    auto results = new ResultsHandle;
    results->seed_used = options.seed_override.value_or(scn.seed);
    results->records = kfock::run(scn, options);
    *out = reinterpret_cast<kfock_results*>(results);
    return KFOCK_OK;
  } catch (const std::invalid_argument& e) {
    return catch_as_status(e, KFOCK_ERR_INVALID_ARGUMENT);
  } catch (const std::domain_error& e) {
    return catch_as_status(e, KFOCK_ERR_DOMAIN);
  } catch (const std::exception& e) {
    return catch_as_status(e, KFOCK_ERR_INTERNAL);
  }
}

void kfock_results_destroy(kfock_results* results) { delete unwrap(results); }

int kfock_results_all_passed(const kfock_results* results) {
  if (!results) return 0;
  return kfock::all_passed(unwrap(results)->records) ? 1 : 0;
}

size_t kfock_results_count(const kfock_results* results) {
  if (!results) return 0;
  return unwrap(results)->records.size();
}

const char* kfock_results_request(const kfock_results* results, size_t index) {
  if (!results || index >= unwrap(results)->records.size()) return nullptr;
  return unwrap(results)->records[index].request.c_str();
}

double kfock_results_elapsed_seconds(const kfock_results* results, size_t index) {
  if (!results || index >= unwrap(results)->records.size()) return 0.0;
  return unwrap(results)->records[index].elapsed_seconds;
}

const char* kfock_results_json(kfock_results* results) {
  if (!results) return "";
  ResultsHandle* handle = unwrap(results);
  if (handle->json_cache.empty())
    handle->json_cache =
        kfock::results_to_json(handle->records, handle->seed_used).dump(2) + "\n";
  return handle->json_cache.c_str();
}

const char* kfock_results_csv(kfock_results* results) {
  if (!results) return "";
  ResultsHandle* handle = unwrap(results);
  if (handle->csv_cache.empty()) handle->csv_cache = kfock::results_to_csv(handle->records);
  return handle->csv_cache.c_str();
}

kfock_status kfock_normalization_factor(double kx, double ky, double kz, double* out) {
  if (!out) {
    set_error("kfock_normalization_factor: null output");
    return KFOCK_ERR_INVALID_ARGUMENT;
  }
  try {
    *out = kfock::normalization_factor(kfock::Vec3(kx, ky, kz));
    return KFOCK_OK;
  } catch (const std::domain_error& e) {
    return catch_as_status(e, KFOCK_ERR_DOMAIN);
  }
}

kfock_status kfock_calibrate(double hbar, double c, double epsilon0, double* lambda_l_paper,
                             double* lambda_l_self_consistent) {
  if (!lambda_l_paper || !lambda_l_self_consistent) {
    set_error("kfock_calibrate: null output");
    return KFOCK_ERR_INVALID_ARGUMENT;
  }
  try {
    kfock::PhysicalConstants pc;
    pc.hbar = hbar;
    pc.c = c;
    pc.epsilon0 = epsilon0;
    const kfock::CalibrationResult cal = kfock::calibrate_lambda_l(pc);
    *lambda_l_paper = cal.lambda_l_paper;
    *lambda_l_self_consistent = cal.lambda_l_self_consistent;
    return KFOCK_OK;
  } catch (const std::exception& e) {
    return catch_as_status(e, KFOCK_ERR_INVALID_ARGUMENT);
  }
}

}  // extern "C"
