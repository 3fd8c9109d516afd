#include "abelian/report.hpp"

namespace abelian {

const char* status_name(ReportStatus s) noexcept {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::informational: return "informational";
    case ReportStatus::skipped: return "skipped";
    case ReportStatus::error: return "error";
  }
  return "error";
}

void VerificationReport::settle(double residual_value, double tolerance_value, bool informational) {
  residual = residual_value;
  tolerance = tolerance_value;
  passed = residual <= tolerance;
  if (informational) {
    status = ReportStatus::informational;
  } else {
    status = passed ? ReportStatus::pass : ReportStatus::fail;
  }
}

}  // namespace abelian
