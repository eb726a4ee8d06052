#include "dunkl/funcspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "dunkl/errors.hpp"

namespace dunkl::funcspace {

namespace {

// Correctly rounded running sum (Shewchuk partials), independent of summation order.
class ExactSum {
 public:
  void add(double x) {
    std::size_t kept = 0;
    for (double y : partials_) {
      if (std::abs(x) < std::abs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials_[kept++] = lo;
      x = hi;
    }
    partials_.resize(kept);
    partials_.push_back(x);
  }

  double value() const {
    std::size_t n = partials_.size();
    if (n == 0) return 0.0;
    double hi = partials_[--n];
    double lo = 0.0;
    while (n > 0) {
      const double x = hi;
      const double y = partials_[--n];
      hi = x + y;
      lo = y - (hi - x);
      if (lo != 0.0) break;
    }
    if (n > 0 && ((lo < 0.0 && partials_[n - 1] < 0.0) || (lo > 0.0 && partials_[n - 1] > 0.0))) {
      const double y = 2.0 * lo;
      const double x = hi + y;
      if (y == x - hi) hi = x;
    }
    return hi;
  }

 private:
  std::vector<double> partials_;
};

bool all_finite(const std::vector<Complex>& values) {
  return std::all_of(values.begin(), values.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

void require_increasing(const std::vector<double>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw DomainError(std::string(what) + " must be finite");
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw DomainError(std::string(what) + " must be strictly increasing");
    }
  }
}

void require_symmetric(const std::vector<double>& xs, const char* what) {
  const std::size_t n = xs.size();
  const double scale = std::max(std::abs(xs.front()), std::abs(xs.back()));
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(xs[i] + xs[n - 1 - i]) > 1e-12 * scale) {
      throw DomainError(std::string(what) + " must be symmetric about 0");
    }
  }
}

std::vector<double> midpoint_edges(const std::vector<double>& grid) {
  const std::size_t n = grid.size();
  const std::size_t half = n / 2;
  std::vector<double> edges(n + 1);
  // Positive half first, then mirror, so the middle edge is exactly 0.
  edges[half] = 0.0;
  for (std::size_t j = 1; j < half; ++j) {
    edges[half + j] = 0.5 * (grid[half + j - 1] + grid[half + j]);
  }
  const double last_gap = half >= 2 ? grid[n - 1] - grid[n - 2] : 2.0 * grid[n - 1];
  edges[n] = grid[n - 1] + 0.5 * last_gap;
  for (std::size_t j = 1; j <= half; ++j) edges[half - j] = -edges[half + j];
  return edges;
}

// Integral of x^(s-1) over [a, b] for 0 <= a <= b, times s; s = 2 alpha + 2.
double power_difference(double a, double b, double s) {
  if (a == b) return 0.0;
  if (a == 0.0) return std::pow(b, s);
  return std::pow(a, s) * std::expm1(s * std::log1p((b - a) / a));
}

}  // namespace

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() < 2 || grid_.size() % 2 != 0) {
    throw DomainError("a symmetric grid without a node at 0 needs an even number (>= 2) of nodes");
  }
  require_increasing(grid_, "grid");
  require_symmetric(grid_, "grid");
  edges_ = midpoint_edges(grid_);
  validate();
}

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<Complex> values,
                                 std::vector<double> edges)
    : grid_(std::move(grid)), values_(std::move(values)), edges_(std::move(edges)) {
  validate();
}

SampledFunction SampledFunction::with_cells(std::vector<double> edges, std::vector<double> grid,
                                            std::vector<Complex> values) {
  if (grid.size() < 2 || grid.size() % 2 != 0) {
    throw DomainError("a symmetric grid without a node at 0 needs an even number (>= 2) of nodes");
  }
  if (edges.size() != grid.size() + 1) throw DomainError("need exactly one more edge than nodes");
  require_increasing(edges, "edges");
  require_increasing(grid, "grid");
  require_symmetric(edges, "edges");
  require_symmetric(grid, "grid");
  if (edges[grid.size() / 2] != 0.0) throw DomainError("the middle cell edge must be 0");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(edges[i] <= grid[i] && grid[i] <= edges[i + 1])) {
      throw DomainError("each node must lie inside its cell");
    }
  }
  return SampledFunction(std::move(grid), std::move(values), std::move(edges));
}

void SampledFunction::validate() const {
  if (values_.size() != grid_.size()) throw DomainError("grid and values differ in length");
  if (std::find(grid_.begin(), grid_.end(), 0.0) != grid_.end()) {
    throw DomainError("grid must not contain 0");
  }
  if (!all_finite(values_)) throw DomainError("sampled values must be finite");
}

std::vector<double> SampledFunction::offset_grid(std::size_t n, double half_width) {
  if (n < 2 || n % 2 != 0) throw DomainError("offset grid needs an even node count >= 2");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw DomainError("offset grid half-width must be positive");
  }
  const std::size_t half = n / 2;
  const double h = 2.0 * half_width / static_cast<double>(n);
  std::vector<double> grid(n);
  for (std::size_t j = 0; j < half; ++j) {
    const double x = (static_cast<double>(j) + 0.5) * h;
    grid[half + j] = x;
    grid[half - 1 - j] = -x;
  }
  return grid;
}

Complex SampledFunction::operator()(double x) const {
  if (x < edges_.front() || x > edges_.back()) return 0.0;
  return interpolation::lagrange(grid_, values_, x);
}

SampledFunction SampledFunction::scaled(Complex factor) const {
  std::vector<Complex> v = values_;
  for (Complex& c : v) c *= factor;
  return SampledFunction(grid_, std::move(v), edges_);
}

HalfLineFunction::HalfLineFunction(std::vector<double> grid, std::vector<Complex> values,
                                   interpolation::Parity parity)
    : grid_(std::move(grid)), values_(std::move(values)), parity_(parity) {
  if (grid_.empty()) throw DomainError("half-line function needs at least one node");
  if (values_.size() != grid_.size()) throw DomainError("grid and values differ in length");
  require_increasing(grid_, "grid");
  if (!(grid_.front() > 0.0)) throw DomainError("half-line grid must be positive");
  if (!all_finite(values_)) throw DomainError("sampled values must be finite");
  const std::size_t n = grid_.size();
  outer_edge_ = n >= 2 ? grid_[n - 1] + 0.5 * (grid_[n - 1] - grid_[n - 2]) : 2.0 * grid_[0];
}

Complex HalfLineFunction::operator()(double x) const {
  if (x < 0.0 || x > outer_edge_) return 0.0;
  return interpolation::lagrange(grid_, values_, x, parity_);
}

WeightedMeasure::WeightedMeasure(Order alpha)
    : alpha_(alpha),
      normalization_(1.0 / (std::exp2(alpha.value() + 1.0) * specfun::gamma(alpha.value() + 1.0))) {}

double WeightedMeasure::density(double x) const {
  return normalization_ * std::pow(std::abs(x), 2.0 * alpha_.value() + 1.0);
}

double WeightedMeasure::mass(double a, double b) const {
  if (!(a <= b)) throw DomainError("mass requires a <= b");
  const double s = 2.0 * alpha_.value() + 2.0;
  double integral;
  if (a >= 0.0) {
    integral = power_difference(a, b, s);
  } else if (b <= 0.0) {
    integral = power_difference(-b, -a, s);
  } else {
    integral = power_difference(0.0, -a, s) + power_difference(0.0, b, s);
  }
  return normalization_ * integral / s;
}

LorentzIndex::LorentzIndex(double p_, double q_) : p(p_), q(q_) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("Lorentz index needs 1 <= p < inf");
  if (!(q >= 1.0)) throw DomainError("Lorentz index needs q >= 1 or q = inf");
}

double Rearrangement::operator()(double t) const {
  if (!(t >= 0.0)) throw DomainError("rearrangement requires t >= 0");
  const auto it = std::upper_bound(cumulative_mass.begin(), cumulative_mass.end(), t);
  if (it == cumulative_mass.end()) return 0.0;
  return levels[static_cast<std::size_t>(it - cumulative_mass.begin())];
}

std::vector<double> cell_masses(const WeightedMeasure& mu, const SampledFunction& f) {
  const auto& e = f.edges();
  std::vector<double> masses(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) masses[i] = mu.mass(e[i], e[i + 1]);
  return masses;
}

Rearrangement rearrange(const WeightedMeasure& mu, const SampledFunction& f) {
  const std::vector<double> masses = cell_masses(mu, f);
  std::vector<std::pair<double, double>> cells;
  cells.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double level = std::abs(f.values()[i]);
    if (level > 0.0) cells.emplace_back(level, masses[i]);
  }
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  Rearrangement r;
  ExactSum sum;
  for (const auto& [level, mass] : cells) {
    sum.add(mass);
    const double running = sum.value();
    if (!r.levels.empty() && r.levels.back() == level) {
      r.cumulative_mass.back() = running;
    } else {
      r.levels.push_back(level);
      r.cumulative_mass.push_back(running);
    }
  }
  return r;
}

double measure_of_sublevel(const WeightedMeasure& mu, const SampledFunction& f, double s) {
  if (!(s >= 0.0)) throw DomainError("distribution function requires s >= 0");
  const auto& e = f.edges();
  ExactSum total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(f.values()[i]) > s) total.add(mu.mass(e[i], e[i + 1]));
  }
  return total.value();
}

double rearrangement(const WeightedMeasure& mu, const SampledFunction& f, double t) {
  return rearrange(mu, f)(t);
}

double lp_norm(const WeightedMeasure& mu, const SampledFunction& f, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("lp_norm requires 1 <= p < inf");
  const auto& e = f.edges();
  double total = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double v = std::abs(f.values()[i]);
    if (v > 0.0) total += std::pow(v, p) * mu.mass(e[i], e[i + 1]);
  }
  return std::pow(total, 1.0 / p);
}

double lorentz_norm(const Rearrangement& r, LorentzIndex idx) {
  if (r.levels.empty()) return 0.0;
  if (idx.weak()) {
    // sup_t t^(1/p) f*(t), approached at the right end of each step.
    double best = 0.0;
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      best = std::max(best, r.levels[k] * std::pow(r.cumulative_mass[k], 1.0 / idx.p));
    }
    return best;
  }
  // (q/p) int t^(q/p - 1) f*(t)^q dt integrates exactly on each step.
  const double ratio = idx.q / idx.p;
  double total = 0.0;
  double previous = 0.0;
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    const double current = std::pow(r.cumulative_mass[k], ratio);
    total += std::pow(r.levels[k], idx.q) * (current - previous);
    previous = current;
  }
  return std::pow(total, 1.0 / idx.q);
}

double lorentz_norm(const WeightedMeasure& mu, const SampledFunction& f, LorentzIndex idx) {
  return lorentz_norm(rearrange(mu, f), idx);
}

std::pair<HalfLineFunction, HalfLineFunction> even_odd_split(const SampledFunction& f) {
  const std::size_t half = f.size() / 2;
  std::vector<double> grid(half);
  std::vector<Complex> even(half);
  std::vector<Complex> odd(half);
  for (std::size_t j = 0; j < half; ++j) {
    const Complex plus = f.values()[half + j];
    const Complex minus = f.values()[half - 1 - j];
    grid[j] = f.grid()[half + j];
    even[j] = 0.5 * (plus + minus);
    odd[j] = 0.5 * (plus - minus);
  }
  return {HalfLineFunction(grid, std::move(even), interpolation::Parity::Even),
          HalfLineFunction(std::move(grid), std::move(odd), interpolation::Parity::Odd)};
}

EndpointExponents endpoint_exponents(Order alpha) {
  const double a = alpha.value();
  const double p0 = 4.0 * (a + 1.0) / (2.0 * a + 3.0);
  const double denominator = 2.0 * a + 1.0;
  const double p1 = denominator == 0.0 ? kInfiniteExponent : 4.0 * (a + 1.0) / denominator;
  return {p0, p1};
}

double power_weight_exponent(Order alpha, double p) {
  const double a = alpha.value();
  return 2.0 * a + 1.0 - p * (a + 0.5);
}

bool ap_power_weight_check(Order alpha, double p) {
  if (!(p > 1.0)) throw DomainError("the A_p condition needs p > 1");
  const double exponent = power_weight_exponent(alpha, p);
  return -1.0 < exponent && exponent < p - 1.0;
}

}  // namespace dunkl::funcspace
