#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "abelian/verify.hpp"

namespace abelian::verify {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("malformed number '" + std::string(whole) + "'");
  }
  return v;
}

double parse_imaginary_coefficient(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

int parse_int(std::string_view s, std::string_view key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view s, std::string_view key) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false");
}

const IdentityInfo& require_identity(std::string_view id) {
  const IdentityInfo* info = find_identity(id);
  if (!info) throw ConfigError("unknown identity '" + std::string(id) + "'");
  return *info;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ConfigError("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, s), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t j = body.size(); j-- > 1;) {
    if ((body[j] == '+' || body[j] == '-') && body[j - 1] != 'e' && body[j - 1] != 'E') {
      split = j;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imaginary_coefficient(body, s)};
  return {parse_real(body.substr(0, split), s), parse_imaginary_coefficient(body.substr(split), s)};
}

double RunConfig::tolerance_for(const IdentityInfo& info) const {
  const auto it = tolerance.find(info.id);
  return it == tolerance.end() ? info.default_tolerance : it->second;
}

bool RunConfig::informational(const IdentityInfo& info) const {
  const auto it = asserting.find(info.id);
  return it == asserting.end() ? info.informational : !it->second;
}

void RunConfig::validate() const {
  for (const auto& [id, tol] : tolerance) {
    require_identity(id);
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ConfigError("tolerance for " + id + " must be positive");
  }
  for (const auto& [id, points] : grid) {
    require_identity(id);
    if (points.empty()) throw ConfigError("grid override for " + id + " is empty");
  }
  for (const auto& [id, flag] : asserting) require_identity(id);
  if (!(truncation.rel_tol > 0.0)) throw ConfigError("truncation.rel_tol must be positive");
  if (truncation.max_terms <= 0) throw ConfigError("truncation.max_terms must be positive");
  try {
    if (stencil_radius || stencil_nodes) {
      DerivativeStencil(stencil_radius.value_or(DerivativeStencil::kDefaultRadius),
                        stencil_nodes.value_or(DerivativeStencil::kDefaultNodes));
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (m && (*m < 0 || *m > 3)) throw ConfigError("m must be 0, 1, 2 or 3");
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "truncation.rel_tol") {
      config.truncation.rel_tol = parse_real(value, value);
    } else if (key == "truncation.max_terms") {
      config.truncation.max_terms = parse_int(value, key);
    } else if (key == "stencil.radius") {
      config.stencil_radius = parse_real(value, value);
    } else if (key == "stencil.nodes") {
      config.stencil_nodes = parse_int(value, key);
    } else if (key == "output") {
      if (value == "json") {
        config.output = OutputFormat::json;
      } else if (value == "human") {
        config.output = OutputFormat::human;
      } else {
        throw ConfigError("output must be human or json");
      }
    } else if (key == "threads") {
      const int n = parse_int(value, key);
      if (n < 0) throw ConfigError("threads must be non-negative");
      config.threads = static_cast<unsigned>(n);
    } else if (key == "m") {
      config.m = parse_int(value, key);
    } else if (key.substr(0, 5) == "grid.") {
      const std::string id(key.substr(5));
      require_identity(id);
      std::vector<Complex> points;
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        points.push_back(parse_complex(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      config.grid[id] = std::move(points);
    } else if (const auto dot = key.rfind('.'); dot != std::string_view::npos) {
      const std::string id(key.substr(0, dot));
      const std::string_view field = key.substr(dot + 1);
      require_identity(id);
      if (field == "tolerance") {
        config.tolerance[id] = parse_real(value, value);
      } else if (field == "asserting") {
        config.asserting[id] = parse_bool(value, key);
      } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
      }
    } else {
      throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
  }
  config.validate();
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(config, text.str());
}

}  // namespace abelian::verify
