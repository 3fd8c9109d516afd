#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "abelian/kernels/reduce.hpp"
#include "abelian/numerics.hpp"

namespace abelian {

Polyline::Polyline(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DomainError("a polyline needs at least two vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!is_finite(vertices_[i])) throw DomainError("polyline vertex is not finite");
    if (i > 0 && vertices_[i] == vertices_[i - 1]) {
      throw DomainError("consecutive polyline vertices must be distinct");
    }
  }
}

Polyline Polyline::then(const Polyline& next) const {
  if (next.front() != back()) throw DomainError("concatenated polylines must share an endpoint");
  std::vector<Complex> joined = vertices_;
  joined.insert(joined.end(), next.vertices_.begin() + 1, next.vertices_.end());
  return Polyline(std::move(joined));
}

namespace {

constexpr int kRuleSize = 16;
constexpr int kMaxGradingLevels = 60;
constexpr int kMaxBisectionDepth = 48;
constexpr std::size_t kEvaluationBudget = 4'000'000;

struct GaussLegendreRule {
  std::array<double, kRuleSize> nodes;
  std::array<double, kRuleSize> weights;
};

GaussLegendreRule build_rule() {
  GaussLegendreRule rule{};
  const int n = kRuleSize;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

const GaussLegendreRule& rule() {
  static const GaussLegendreRule r = build_rule();
  return r;
}

// Integrates f along the straight line z(t) = origin + t * delta over
// sub-intervals of t in [0, 1].
class SegmentIntegrator {
 public:
  SegmentIntegrator(const ComplexFunction& f, std::size_t& evaluations, bool& exhausted)
      : f_(f), evaluations_(evaluations), exhausted_(exhausted) {}

  Complex gauss(Complex origin, Complex delta, double t0, double t1) {
    const auto& r = rule();
    const double half = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t1 + t0);
    std::array<Complex, kRuleSize> values;
    for (int i = 0; i < kRuleSize; ++i) {
      const double t = mid + half * r.nodes[static_cast<std::size_t>(i)];
      const Complex v = f_(origin + t * delta);
      if (!is_finite(v)) throw EvaluationError("non-finite integrand on the quadrature path");
      values[static_cast<std::size_t>(i)] = v;
    }
    evaluations_ += kRuleSize;
    return kernels::weighted_sum(r.weights, values) * (half * delta);
  }

  Complex adaptive(Complex origin, Complex delta, double t0, double t1, double tol, double& err) {
    return refine(origin, delta, t0, t1, gauss(origin, delta, t0, t1), tol, 0, err);
  }

  // Geometric grading toward t = 0 over [0, t_far].
  Complex graded(Complex origin, Complex delta, double t_far, double tol, double& err) {
    Complex total{};
    Complex previous{};
    Complex predicted_rest{};
    bool have_prediction = false;
    double hi = t_far;
    double last_change = std::numeric_limits<double>::infinity();
    Complex last_tail{};
    for (int level = 0; level < kMaxGradingLevels; ++level) {
      const double lo = 0.5 * hi;
      double piece_err = 0.0;
      const Complex piece = adaptive(origin, delta, lo, hi, tol / 256.0, piece_err);
      err += piece_err;
      total += piece;
      if (level >= 1) {
        if (piece == Complex{} && previous == Complex{}) return total;
        if (previous != Complex{}) {
          const Complex ratio = piece / previous;
          if (std::abs(ratio) < 0.999) {
            const Complex tail = piece * ratio / (1.0 - ratio);
            if (have_prediction) {
              last_change = std::abs(predicted_rest - (piece + tail));
              if (last_change < 0.25 * tol) {
                err += last_change;
                return total + tail;
              }
            }
            predicted_rest = tail;
            last_tail = tail;
            have_prediction = true;
          } else {
            have_prediction = false;
          }
        }
      }
      previous = piece;
      hi = lo;
    }
    err += std::isfinite(last_change) ? last_change : std::abs(previous);
    return total + last_tail;
  }

 private:
  Complex refine(Complex origin, Complex delta, double t0, double t1, Complex whole, double tol,
                 int depth, double& err) {
    const double mid = 0.5 * (t0 + t1);
    const Complex left = gauss(origin, delta, t0, mid);
    const Complex right = gauss(origin, delta, mid, t1);
    const Complex sum = left + right;
    const double diff = std::abs(sum - whole);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(sum);
    if (diff <= tol || diff <= floor) {
      err += diff;
      return sum;
    }
    if (depth >= kMaxBisectionDepth || evaluations_ > kEvaluationBudget) {
      exhausted_ = true;
      err += diff;
      return sum;
    }
    return refine(origin, delta, t0, mid, left, 0.5 * tol, depth + 1, err) +
           refine(origin, delta, mid, t1, right, 0.5 * tol, depth + 1, err);
  }

  const ComplexFunction& f_;
  std::size_t& evaluations_;
  bool& exhausted_;
};

}  // namespace

QuadratureResult integrate(const ComplexFunction& f, const Polyline& path, double tol) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  QuadratureResult result;
  bool exhausted = false;
  SegmentIntegrator seg(f, result.evaluations, exhausted);
  const auto& v = path.vertices();
  const std::size_t n = path.segments();
  const double share = tol / static_cast<double>(n + 1);
  double err = 0.0;

  if (n == 1) {
    const Complex mid = 0.5 * (v[0] + v[1]);
    result.value += seg.graded(v[0], mid - v[0], 1.0, 0.5 * share, err);
    result.value -= seg.graded(v[1], mid - v[1], 1.0, 0.5 * share, err);
  } else {
    result.value += seg.graded(v[0], v[1] - v[0], 1.0, share, err);
    for (std::size_t s = 1; s + 1 < n; ++s) {
      result.value += seg.adaptive(v[s], v[s + 1] - v[s], 0.0, 1.0, share, err);
    }
    result.value -= seg.graded(v[n], v[n - 1] - v[n], 1.0, share, err);
  }
  result.error_estimate = err;
  if (exhausted || err > tol) {
    throw AccuracyError("contour quadrature did not reach tolerance " + std::to_string(tol) +
                            " (estimated error " + std::to_string(err) + ")",
                        result.value, err);
  }
  return result;
}

}  // namespace abelian
