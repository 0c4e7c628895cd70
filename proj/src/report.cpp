#include "lag2d/report.hpp"

#include <ostream>

#include "lag2d/error.hpp"

namespace lag2d {

const char* errc_name(errc c) {
  switch (c) {
    case errc::pole_in_denominator: return "pole_in_denominator";
    case errc::no_convergence: return "no_convergence";
    case errc::pole_at_zero: return "pole_at_zero";
    case errc::not_a_quaternion_matrix: return "not_a_quaternion_matrix";
    case errc::degenerate_axis: return "degenerate_axis";
    case errc::quadrature_under_resolved: return "quadrature_under_resolved";
    case errc::eigen_failure: return "eigen_failure";
  }
  return "unknown";
}

const char* status_name(check_status s) {
  switch (s) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::boundary_deviation: return "boundary-deviation";
  }
  return "unknown";
}

identity_report identity_report::make(std::string id, nlohmann::json params,
                                      double residual, double tolerance) {
  identity_report r;
  r.identity = std::move(id);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.status = (std::isfinite(residual) && residual <= tolerance)
                 ? check_status::pass
                 : check_status::fail;
  return r;
}

identity_report identity_report::boundary(std::string id, nlohmann::json params,
                                          double residual, double tolerance) {
  identity_report r = make(std::move(id), std::move(params), residual, tolerance);
  r.status = check_status::boundary_deviation;
  return r;
}

nlohmann::json identity_report::to_json() const {
  nlohmann::json j{{"identity", identity},
                   {"params", params},
                   {"residual", residual},
                   {"tolerance", tolerance},
                   {"status", status_name(status)}};
  if (!extra.is_null()) j["extra"] = extra;
  return j;
}

void report_batch::append(const report_batch& o) {
  reports_.insert(reports_.end(), o.reports_.begin(), o.reports_.end());
}

std::size_t report_batch::count(check_status s) const {
  std::size_t n = 0;
  for (const auto& r : reports_) n += (r.status == s);
  return n;
}

double report_batch::worst_residual(check_status s) const {
  double w = 0.0;
  for (const auto& r : reports_)
    if (r.status == s && std::isfinite(r.residual) && r.residual > w) w = r.residual;
  return w;
}

int report_batch::exit_code() const {
  if (count(check_status::fail) > 0) return 1;
  if (count(check_status::boundary_deviation) > 0) return 2;
  return 0;
}

nlohmann::json report_batch::to_json(const std::string& suite,
                                     nlohmann::json config) const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : reports_) rs.push_back(r.to_json());
  return {{"suite", suite},
          {"reports", rs},
          {"config", std::move(config)},
          {"summary",
           {{"pass", count(check_status::pass)},
            {"fail", count(check_status::fail)},
            {"boundary-deviation", count(check_status::boundary_deviation)}}}};
}

void report_batch::write_csv(std::ostream& os) const {
  os << "identity,params,residual,tolerance,status\n";
  for (const auto& r : reports_) {
    std::string params = r.params.dump();
    // CSV-quote the JSON params blob
    std::string quoted = "\"";
    for (char ch : params) {
      if (ch == '"') quoted += "\"\"";
      else quoted += ch;
    }
    quoted += "\"";
    os << r.identity << ',' << quoted << ',' << r.residual << ','
       << r.tolerance << ',' << status_name(r.status) << '\n';
  }
}

}  // namespace lag2d
