#include "dunkl/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "dunkl/errors.hpp"

namespace dunkl::csv {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw DomainError("malformed number '" + text + "'");
  return value;
}

struct Columns {
  std::vector<double> abscissae;
  std::vector<std::complex<double>> values;
};

Columns read_three_columns(std::istream& in, const std::string& first) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != first + ",re,im") {
    throw DomainError("expected CSV header '" + first + ",re,im', got '" + line + "'");
  }
  Columns c;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 3) throw DomainError("expected 3 CSV columns in '" + line + "'");
    c.abscissae.push_back(parse_double(cells[0]));
    c.values.emplace_back(parse_double(cells[1]), parse_double(cells[2]));
  }
  return c;
}

void write_three_columns(std::ostream& out, const std::string& first,
                         const std::vector<double>& xs,
                         const std::vector<std::complex<double>>& vs) {
  out << first << ",re,im\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]) << ',' << format_double(vs[i].real()) << ','
        << format_double(vs[i].imag()) << '\n';
  }
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw DomainError("could not format a double");
  return std::string(buffer.data(), ptr);
}

void write_sampled_function(std::ostream& out, const funcspace::SampledFunction& f) {
  write_three_columns(out, "x", f.grid(), f.values());
}

funcspace::SampledFunction read_sampled_function(std::istream& in) {
  Columns c = read_three_columns(in, "x");
  return funcspace::SampledFunction(std::move(c.abscissae), std::move(c.values));
}

void write_spectrum(std::ostream& out, const transforms::Spectrum& spectrum) {
  write_three_columns(out, "y", spectrum.frequencies(), spectrum.values());
}

transforms::Spectrum read_spectrum(std::istream& in, specfun::Order order,
                                   transforms::SpectrumKind kind) {
  Columns c = read_three_columns(in, "y");
  return transforms::Spectrum(std::move(c.abscissae), std::move(c.values), order, kind);
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

Table& Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw DomainError("CSV row width does not match header");
  rows_.push_back(std::move(cells));
  return *this;
}

void Table::write(std::ostream& out) const {
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  emit(header_);
  for (const auto& row : rows_) emit(row);
}

}  // namespace dunkl::csv
