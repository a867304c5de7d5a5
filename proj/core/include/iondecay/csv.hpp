// csv.hpp — deterministic CSV emitters shared by every scenario

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "iondecay/carrier.hpp"
#include "iondecay/states.hpp"

namespace iondecay {

// Shortest decimal that parses back to the same double, capped at nine
// significant digits. Fixed rule, so output bytes are platform-stable.
std::string format_g9(double value);

// Header comment lines ("# ..."), then "t_s,p_down,sigma_z,mean_n" rows.
void write_timeseries_csv(std::ostream& out, const TimeSeries& series,
                          const std::vector<std::string>& comments = {});

// Header comments, then "re,im,p" rows in row-major grid order.
void write_grid_csv(std::ostream& out, const PGrid& grid,
                    const std::vector<std::string>& comments = {});

// Two-column "x,y" table with a caller-chosen header row.
void write_xy_csv(std::ostream& out, const std::string& header,
                  const std::vector<double>& x, const std::vector<double>& y,
                  const std::vector<std::string>& comments = {});

}  // namespace iondecay
