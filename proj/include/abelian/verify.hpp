#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelian/complex.hpp"
#include "abelian/numerics.hpp"
#include "abelian/report.hpp"

namespace abelian::verify {

/// Bad command line, config file or override.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message) : Error("ConfigError", message) {}
};

enum class OutputFormat { human, json };

/// What the complex coordinate of a sample means for an identity.
enum class PointKind { tau, z, x, u, none };

struct IdentityInfo {
  std::string id;
  std::string summary;
  double default_tolerance;
  bool informational;
  PointKind point_kind;
  /// Names of the variants a point is evaluated under (parameter rows,
  /// lattices, signs, m); a single empty name when there are none.
  std::vector<std::string> variants;
};

/// The fixed identity registry in run order.
const std::vector<IdentityInfo>& registry();
const IdentityInfo* find_identity(std::string_view id);

struct RunConfig {
  std::map<std::string, double> tolerance;
  std::map<std::string, std::vector<Complex>> grid;
  std::map<std::string, bool> asserting;
  TruncationPolicy truncation;
  std::optional<double> stencil_radius;
  std::optional<int> stencil_nodes;
  /// Restricts the hyperelliptic identities to one m.
  std::optional<int> m;
  OutputFormat output = OutputFormat::human;
  /// Worker threads for grid points; 0 picks the hardware concurrency.
  unsigned threads = 0;

  double tolerance_for(const IdentityInfo& info) const;
  bool informational(const IdentityInfo& info) const;
  /// Throws ConfigError for unknown identities or invalid values.
  void validate() const;
};

/// `a+bi`, `a-bi`, `bi`, `i`, `-i` or a bare real, exponents allowed.
Complex parse_complex(std::string_view text);

/// Flat `key = value` lines; `#` starts a comment. Keys: `<id>.tolerance`,
/// `<id>.asserting`, `grid.<id>` (comma-separated points), `truncation.rel_tol`,
/// `truncation.max_terms`, `stencil.radius`, `stencil.nodes`, `output`,
/// `threads`, `m`.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

struct Sample {
  Complex point;
  int variant = 0;
};

/// Shipped samples, or the grid override crossed with every variant.
std::vector<Sample> samples_for(const IdentityInfo& info, const RunConfig& config);
/// `points` crossed with the variants allowed by `config`.
std::vector<Sample> expand(const IdentityInfo& info, const std::vector<Complex>& points,
                           const RunConfig& config);

/// One report. Library errors never escape: out-of-domain samples become
/// `skipped`, everything else `error`.
VerificationReport evaluate(const IdentityInfo& info, const Sample& sample, const RunConfig& config);

/// Reports ordered by (identity, sample index) whatever the evaluation order.
std::vector<VerificationReport> run(const IdentityInfo& info, const std::vector<Sample>& samples,
                                    const RunConfig& config);

/// steps x steps lattice over [re0, re1] x [im0, im1], row-major in Im.
std::vector<Complex> grid_points(double re0, double re1, double im0, double im1, int steps);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t informational = 0;
  std::size_t skipped = 0;
  std::size_t error = 0;

  bool ok() const noexcept { return fail == 0 && error == 0; }
  void add(const VerificationReport& r);
};

/// `re<sign>im i` with `digits` significant digits.
std::string format_complex(Complex z, int digits = 15);
std::string to_json_line(const VerificationReport& r);
std::string to_human_line(const VerificationReport& r);
std::string summary_line(const Summary& s);

}  // namespace abelian::verify
