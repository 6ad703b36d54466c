#include "mvfix/point.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "mvfix/error.hpp"

namespace mvfix {

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double& c : coords_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::NonFinite, "point coordinate is not finite");
    if (c == 0.0) c = 0.0;  // fold -0 so exact equality and ordering agree
  }
}

std::string formatReal(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string formatPoint(const Point& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ';';
    out += formatReal(p[i]);
  }
  return out;
}

Point parsePoint(std::string_view text) {
  std::vector<double> coords;
  std::string buf(text);
  std::size_t pos = 0;
  while (pos <= buf.size()) {
    auto comma = buf.find(',', pos);
    if (comma == std::string::npos) comma = buf.size();
    std::string token = buf.substr(pos, comma - pos);
    char* endp = nullptr;
    double v = std::strtod(token.c_str(), &endp);
    if (token.empty() || endp != token.c_str() + token.size())
      throw Error(ErrorCode::ValidationError, "cannot parse point '" + buf + "'");
    coords.push_back(v);
    pos = comma + 1;
  }
  return Point(std::move(coords));
}

}  // namespace mvfix
