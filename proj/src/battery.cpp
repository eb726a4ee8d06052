#include "dunkl/battery.hpp"

#include <cmath>

#include "dunkl/errors.hpp"

namespace dunkl::battery {

namespace {

using Complex = std::complex<double>;

std::vector<TestFunction> make_core() {
  return {
      {"gaussian", "exp(-x^2)", [](double x) { return Complex(std::exp(-x * x)); }},
      {"x_gaussian", "x exp(-x^2)", [](double x) { return Complex(x * std::exp(-x * x)); }},
      {"shifted_gaussian", "exp(-(x-1)^2)",
       [](double x) { return Complex(std::exp(-(x - 1.0) * (x - 1.0))); }},
      {"gaussian_cos", "exp(-x^2) cos(x)",
       [](double x) { return Complex(std::exp(-x * x) * std::cos(x)); }},
  };
}

std::vector<TestFunction> make_all() {
  std::vector<TestFunction> fs = make_core();
  fs.push_back({"gaussian_unit", "exp(-x^2/2)",
                [](double x) { return Complex(std::exp(-0.5 * x * x)); }});
  fs.push_back({"x_gaussian_unit", "x exp(-x^2/2)",
                [](double x) { return Complex(x * std::exp(-0.5 * x * x)); }});
  fs.push_back({"gaussian_wide", "exp(-x^2/4)",
                [](double x) { return Complex(std::exp(-0.25 * x * x)); }});
  fs.push_back({"zero", "0", [](double) { return Complex(0.0); }});
  return fs;
}

}  // namespace

const std::vector<TestFunction>& core() {
  static const std::vector<TestFunction> fs = make_core();
  return fs;
}

const std::vector<TestFunction>& all() {
  static const std::vector<TestFunction> fs = make_all();
  return fs;
}

const TestFunction& find(std::string_view id) {
  for (const TestFunction& t : all()) {
    if (t.id == id) return t;
  }
  throw DomainError("unknown test function '" + std::string(id) + "'");
}

}  // namespace dunkl::battery
