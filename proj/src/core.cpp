#include "polysum/core.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace polysum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Weight parse_weight(std::string_view text) {
  std::vector<Int> values;
  std::string_view rest = trim(text);
  if (rest.empty()) throw InvalidArgument("weight '" + std::string(text) + "' is empty");
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    Int v = 0;
    const char* first = item.data();
    if (!item.empty() && item.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidArgument("weight '" + std::string(text) + "' is not a comma-separated integer list");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (values.size() > std::size_t(kMaxRank)) {
    throw InvalidArgument("weight '" + std::string(text) + "' has more than " +
                          std::to_string(kMaxRank) + " entries");
  }
  Weight w(Eigen::Index(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) w(Eigen::Index(i)) = values[i];
  return w;
}

std::string format_weight(const IntVector& w) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w(i);
  }
  return out.str();
}

std::string format_tuple(const IntVector& w) { return "(" + format_weight(w) + ")"; }

std::string format_rational(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace polysum
