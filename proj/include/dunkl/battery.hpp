#ifndef DUNKL_BATTERY_HPP
#define DUNKL_BATTERY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dunkl/transforms.hpp"

namespace dunkl::battery {

struct TestFunction {
  std::string id;
  std::string formula;
  transforms::Signal f;
};

/// exp(-x^2), x exp(-x^2) (odd), exp(-(x-1)^2) (no parity), exp(-x^2) cos x.
const std::vector<TestFunction>& core();

/// core() plus scaled variants and the zero function.
const std::vector<TestFunction>& all();

/// Looks up an id from all(); throws DomainError for unknown ids.
const TestFunction& find(std::string_view id);

}  // namespace dunkl::battery

#endif  // DUNKL_BATTERY_HPP
