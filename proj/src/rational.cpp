#include "hamgraph/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace hamgraph {

namespace {

long long parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
  }
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') {
    i = 1;
  }
  if (i == text.size()) {
    throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
  }
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
    }
  }
  errno = 0;
  char* end = nullptr;
  std::string buf(text);
  long long value = std::strtoll(buf.c_str(), &end, 10);
  if (errno == ERANGE || end != buf.c_str() + buf.size()) {
    throw std::invalid_argument("rational out of range '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text, text));
  }
  const long long num = parse_integer(text.substr(0, slash), text);
  const long long den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rat(num, den);
}

std::string rat_to_string(const Rat& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) {
    out += '/';
    out += std::to_string(r.denominator());
  }
  return out;
}

double rat_to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace hamgraph
