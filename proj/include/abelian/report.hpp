#pragma once

#include <map>
#include <string>

#include "abelian/complex.hpp"

namespace abelian {

enum class ReportStatus { pass, fail, informational, skipped, error };

const char* status_name(ReportStatus s) noexcept;

/// Outcome of one identity check at one sample point.
struct VerificationReport {
  std::string identity_id;
  Complex point;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;  ///< residual <= tolerance
  ReportStatus status = ReportStatus::fail;
  std::map<std::string, std::string> metadata;

  /// Sets residual, tolerance, passed and status. Informational reports keep
  /// `passed` but never take status fail.
  void settle(double residual_value, double tolerance_value, bool informational = false);
};

}  // namespace abelian
