#include "iondecay/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "iondecay/errors.hpp"

namespace iondecay {

std::string format_g9(double value) {
  if (std::isnan(value)) return "nan";
  char buf[40];
  for (int precision = 1; precision <= 9; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

namespace {

void write_comments(std::ostream& out, const std::vector<std::string>& comments) {
  for (const std::string& line : comments) out << "# " << line << '\n';
}

}  // namespace

void write_timeseries_csv(std::ostream& out, const TimeSeries& series,
                          const std::vector<std::string>& comments) {
  series.validate();
  write_comments(out, comments);
  out << "t_s,p_down,sigma_z,mean_n\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << format_g9(series.times[i]) << ',' << format_g9(series.p_down[i]) << ','
        << format_g9(series.sigma_z[i]) << ',' << format_g9(series.mean_n[i]) << '\n';
  }
}

void write_grid_csv(std::ostream& out, const PGrid& grid,
                    const std::vector<std::string>& comments) {
  write_comments(out, comments);
  out << "re,im,p\n";
  for (int i = 0; i < grid.spec.n_re; ++i) {
    for (int j = 0; j < grid.spec.n_im; ++j) {
      out << format_g9(grid.spec.re_at(i)) << ',' << format_g9(grid.spec.im_at(j))
          << ',' << format_g9(grid.values(i, j)) << '\n';
    }
  }
}

void write_xy_csv(std::ostream& out, const std::string& header,
                  const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<std::string>& comments) {
  if (x.size() != y.size()) throw DomainError("write_xy_csv: column size mismatch");
  write_comments(out, comments);
  out << header << '\n';
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << format_g9(x[i]) << ',' << format_g9(y[i]) << '\n';
  }
}

}  // namespace iondecay
