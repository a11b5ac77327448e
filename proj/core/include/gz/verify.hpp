#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gz/tolerances.hpp"

namespace gz {

// Outcome of one verification suite. failures empty iff the suite passed.
struct RunReport {
  std::string suite;
  long cases = 0;
  struct Failure {
    std::string case_id;
    double discrepancy = 0.0;
  };
  std::vector<Failure> failures;
  std::map<std::string, double> max_discrepancy;  // per invariant
  double wall_time_s = 0.0;

  bool ok() const { return failures.empty(); }
  void note(const std::string& invariant, double d);
  void expect(bool pass, const std::string& case_id, double discrepancy);
  std::string human_text() const;
};

struct VerifyOptions {
  int n = 4;
  long samples = 100;
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
};

RunReport run_interlacing_suite(const VerifyOptions& opt);
RunReport run_roundtrip_suite(const VerifyOptions& opt);
RunReport run_flows_suite(const VerifyOptions& opt);
RunReport run_convexity_suite(const VerifyOptions& opt);
RunReport run_polygon_suite(const VerifyOptions& opt);

// Every suite above, reported one after another.
std::vector<RunReport> run_all_suites(const VerifyOptions& opt);

}  // namespace gz
