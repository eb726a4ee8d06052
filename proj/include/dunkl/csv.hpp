#ifndef DUNKL_CSV_HPP
#define DUNKL_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dunkl/funcspace.hpp"
#include "dunkl/transforms.hpp"

namespace dunkl::csv {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double value);

/// Header `x,re,im`, one node per row.
void write_sampled_function(std::ostream& out, const funcspace::SampledFunction& f);
funcspace::SampledFunction read_sampled_function(std::istream& in);

/// Header `y,re,im`, one frequency per row.
void write_spectrum(std::ostream& out, const transforms::Spectrum& spectrum);
transforms::Spectrum read_spectrum(std::istream& in, specfun::Order order,
                                   transforms::SpectrumKind kind);

/// Row-oriented writer for report tables; cells are strings or doubles.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  Table& add_row(std::vector<std::string> cells);
  const std::vector<std::string>& header() const noexcept { return header_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  void write(std::ostream& out) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace dunkl::csv

#endif  // DUNKL_CSV_HPP
