#include "l2greedy/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "l2greedy/error.hpp"

namespace l2g {

void write_sequence(std::ostream& out, const PointList& pts) {
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      if (i) out << '\t';
      out << p[i].to_string();
    }
    out << '\n';
  }
}

std::string format_sequence(const PointList& pts) {
  std::ostringstream out;
  write_sequence(out, pts);
  return out.str();
}

PointList read_sequence(std::istream& in) {
  std::vector<UnitPoint> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream fields(line);
    std::string token;
    std::vector<Scalar> coords;
    while (fields >> token) {
      if (coords.empty() && token.front() == '#') break;
      try {
        coords.emplace_back(Rational::parse(token));
      } catch (const std::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + token + "'");
      }
    }
    if (coords.empty()) continue;
    if (dim == 0) dim = coords.size();
    if (coords.size() != dim) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) +
                       " coordinates, found " + std::to_string(coords.size()));
    }
    rows.emplace_back(std::move(coords));
  }
  if (rows.empty()) throw ParseError("sequence input holds no points");
  PointList pts(dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      pts.push_back(std::move(rows[i]));
    } catch (const DomainError& e) {
      throw ParseError("point " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return pts;
}

PointList read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_sequence(in);
}

}  // namespace l2g
