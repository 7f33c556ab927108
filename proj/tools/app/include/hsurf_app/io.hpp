#pragma once

#include <string>
#include <vector>

#include "hsurf/nodal.hpp"
#include "hsurf/polynomial.hpp"

namespace hsurf::app {

/// Whole file, or stdin for "-". Throws InvalidArgument if unreadable.
std::string read_text(const std::string& path);

/// Polynomial file contents with '#' comment lines dropped.
std::string read_polynomial_text(const std::string& path);

std::vector<ProjectivePoint> read_points(const std::string& path, int n);
std::vector<ProjectivePoint> parse_point_list(const std::string& text, int n);

std::vector<RationalPolynomial> read_polynomial_lines(const std::string& path, int n);

}  // namespace hsurf::app
