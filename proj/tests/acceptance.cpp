// One line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "abelian/uniformization.hpp"
#include "abelian/verify.hpp"
#include "abelian/weierstrass.hpp"

using namespace abelian;
using namespace abelian::verify;

namespace {

struct Outcome {
  bool ok = true;
  double worst = 0.0;
  std::size_t samples = 0;
  std::string note;
};

// Runs registry identities with the shipped grids; every sample must pass at
// `tol` (or at the registry tolerance when tol <= 0).
Outcome run_ids(const std::vector<std::string>& ids, double tol) {
  Outcome o;
  RunConfig config;
  for (const auto& id : ids) {
    const IdentityInfo& info = *find_identity(id);
    if (tol > 0.0) config.tolerance[id] = tol;
    for (const auto& r : run(info, samples_for(info, config), config)) {
      ++o.samples;
      o.worst = std::max(o.worst, r.residual);
      if (r.status != ReportStatus::pass) {
        o.ok = false;
        o.note = id + " " + status_name(r.status);
      }
    }
  }
  return o;
}

int failures = 0;

void criterion(int n, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt < budget_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s criterion %2d  %-34s samples=%-4zu worst=%.3e time=%.3fs/%.1fs%s%s\n", pass ? "PASS" : "FAIL", n,
              name, o.samples, o.worst, dt, budget_s, in_time ? "" : " over budget",
              o.note.empty() ? "" : ("  " + o.note).c_str());
}

}  // namespace

int main() {
  criterion(1, "u0 digits", 0.1, [] {
    Outcome o;
    const Complex u0 = u0_constant();
    o.worst = std::abs(u0.imag() - 1.402182105325);
    o.samples = 1;
    o.ok = o.worst < 5e-12 && u0.real() == 0.0;
    return o;
  });

  criterion(2, "wp zero at u0", 0.1, [] {
    Outcome o;
    o.worst = std::abs(wp(u0_constant(), EllipticInvariants::equianharmonic()));
    o.samples = 1;
    o.ok = o.worst < 1e-9;
    return o;
  });

  criterion(3, "Schwarz residual, Hauptmoduln", 5.0, [] {
    Outcome o = run_ids({"schwarz-chi", "schwarz-z"}, 1e-8);
    if (o.samples < 10) o.ok = false;
    return o;
  });

  criterion(4, "Schwarz residual, torus form", 10.0, [] {
    return run_ids({"schwarz-u-lemn", "schwarz-u-equi-root", "schwarz-u-equi-rootfree"}, 1e-7);
  });

  criterion(5, "integral-identity oracles", 20.0, [] {
    Outcome o = run_ids({"eq6-oracle", "eq7-oracle", "eq12-oracle"}, 1e-9);
    if (o.samples < 12) o.ok = false;
    return o;
  });

  criterion(6, "wp round trips", 2.0, [] {
    Outcome o = run_ids({"wp-roundtrip-lemn", "wp-roundtrip-equi"}, 1e-9);
    if (o.samples < 20) o.ok = false;
    return o;
  });

  criterion(7, "covering algebra", 2.0, [] {
    Outcome o = run_ids({"cover-cubic", "cover-factored"}, 1e-9);
    if (o.samples < 400) o.ok = false;
    const auto [kp, km] = k_pm(-1.0, kI);
    const double dk = std::max(std::abs(kp - (1.0 + std::sqrt(2.0)) / 2.0), std::abs(km - (1.0 - std::sqrt(2.0)) / 2.0));
    if (!(dk < 1e-14)) {
      o.ok = false;
      o.note = "k+- off by " + std::to_string(dk);
    }
    return o;
  });

  criterion(8, "hyperelliptic U family", 10.0, [] {
    Outcome d = run_ids({"U-derivative"}, 1e-6);
    if (d.samples < 16) d.ok = false;
    RunConfig config;
    config.m = 0;
    const IdentityInfo& q = *find_identity("U-quadrature");
    config.tolerance[q.id] = 1e-8;
    for (const auto& r : run(q, samples_for(q, config), config)) {
      ++d.samples;
      d.worst = std::max(d.worst, r.residual);
      if (r.status != ReportStatus::pass) d.ok = false;
    }
    return d;
  });

  criterion(9, "modular identities", 2.0,
            [] { return run_ids({"jacobi-quartic", "eta-shift", "sqrt-ratio"}, 1e-12); });

  criterion(10, "second- and third-kind integrals", 10.0, [] {
    Outcome o = run_ids({"II-oracle", "III-oracle"}, 1e-8);
    if (o.samples < 18) o.ok = false;
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
