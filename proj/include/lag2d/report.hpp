#pragma once

#include <json.hpp>

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace lag2d {

// Outcome of one identity check.  "boundary_deviation" marks parameter
// combinations where a stated relation is known not to hold and the check
// documents the measured deviation instead of failing the run.
enum class check_status { pass, fail, boundary_deviation };

const char* status_name(check_status s);

struct identity_report {
  std::string identity;       // stable id of the relation being checked
  nlohmann::json params;      // indices, beta, samples, ... (flat object)
  double residual = 0.0;
  double tolerance = 0.0;
  check_status status = check_status::pass;
  nlohmann::json extra;       // optional payload (lhs/rhs values, fitted constants)

  // pass iff residual <= tolerance; non-finite residuals always fail.
  static identity_report make(std::string id, nlohmann::json params,
                              double residual, double tolerance);
  static identity_report boundary(std::string id, nlohmann::json params,
                                  double residual, double tolerance);

  nlohmann::json to_json() const;
};

class report_batch {
 public:
  void add(identity_report r) { reports_.push_back(std::move(r)); }
  void append(const report_batch& o);

  const std::vector<identity_report>& reports() const { return reports_; }
  std::size_t count(check_status s) const;
  bool all_pass() const { return count(check_status::fail) == 0 && count(check_status::boundary_deviation) == 0; }
  double worst_residual(check_status s = check_status::pass) const;

  // 0: all pass; 2: no failures but boundary deviations present; 1: failures.
  int exit_code() const;

  nlohmann::json to_json(const std::string& suite, nlohmann::json config) const;
  void write_csv(std::ostream& os) const;

 private:
  std::vector<identity_report> reports_;
};

}  // namespace lag2d
