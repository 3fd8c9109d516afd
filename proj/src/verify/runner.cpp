#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <string>
#include <thread>

#include "json.hpp"

#include "abelian/verify.hpp"

namespace abelian::verify {

std::vector<VerificationReport> run(const IdentityInfo& info, const std::vector<Sample>& samples,
                                    const RunConfig& config) {
  std::vector<VerificationReport> out(samples.size());
  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(samples.size()));
  if (workers <= 1) {
    for (std::size_t j = 0; j < samples.size(); ++j) out[j] = evaluate(info, samples[j], config);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t j = next++; j < samples.size(); j = next++) out[j] = evaluate(info, samples[j], config);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Complex> grid_points(double re0, double re1, double im0, double im1, int steps) {
  if (steps < 1) throw ConfigError("--steps must be at least 1");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
  auto at = [steps](double a, double b, int j) { return steps == 1 ? a : a + (b - a) * j / (steps - 1); };
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) out.emplace_back(at(re0, re1, j), at(im0, im1, i));
  }
  return out;
}

void Summary::add(const VerificationReport& r) {
  switch (r.status) {
    case ReportStatus::pass: ++pass; break;
    case ReportStatus::fail: ++fail; break;
    case ReportStatus::informational: ++informational; break;
    case ReportStatus::skipped: ++skipped; break;
    case ReportStatus::error: ++error; break;
  }
}

namespace {

std::string format_real(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drops the sign of -0
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string format_complex(Complex z, int digits) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string out = format_real(z.real(), digits);
  out += std::signbit(im) ? "-" : "+";
  out += format_real(std::abs(im), digits);
  out += "i";
  return out;
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::json j;
  j["identity"] = r.identity_id;
  j["point"] = {r.point.real(), r.point.imag()};
  j["residual"] = r.residual;
  j["tolerance"] = r.tolerance;
  j["status"] = status_name(r.status);
  j["metadata"] = r.metadata;
  return j.dump();
}

std::string to_human_line(const VerificationReport& r) {
  std::string status = status_name(r.status);
  for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-13s %-24s %-26s residual=%-10.3e tol=%.1e", status.c_str(),
                r.identity_id.c_str(), format_complex(r.point, 6).c_str(), r.residual, r.tolerance);
  std::string out = buf;
  if (const auto it = r.metadata.find("variant"); it != r.metadata.end()) out += "  " + it->second;
  if (const auto it = r.metadata.find("reason"); it != r.metadata.end()) out += "  (" + it->second + ")";
  return out;
}

std::string summary_line(const Summary& s) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "summary: %zu passed, %zu failed, %zu errors, %zu informational, %zu skipped",
                s.pass, s.fail, s.error, s.informational, s.skipped);
  return buf;
}

}  // namespace abelian::verify
