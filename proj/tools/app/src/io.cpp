#include "hsurf_app/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "hsurf/parse.hpp"

namespace hsurf::app {

std::string read_text(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

std::string read_polynomial_text(const std::string& path) {
  std::istringstream in(read_text(path));
  std::string line, out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out += line;
    out += ' ';
  }
  return out;
}

std::vector<ProjectivePoint> parse_point_list(const std::string& text, int n) {
  std::vector<ProjectivePoint> out;
  for (auto& c : parse_points(text, n)) out.push_back(ProjectivePoint::make(std::move(c)));
  return out;
}

std::vector<ProjectivePoint> read_points(const std::string& path, int n) { return parse_point_list(read_text(path), n); }

std::vector<RationalPolynomial> read_polynomial_lines(const std::string& path, int n) {
  return parse_polynomial_lines(read_text(path), n);
}

}  // namespace hsurf::app
