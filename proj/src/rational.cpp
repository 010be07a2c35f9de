#include "trunclab/rational.hpp"

#include <cstdlib>

namespace trunclab {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slash = text.find('/');
  try {
    std::size_t used = 0;
    long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash))
      throw std::invalid_argument("trailing characters");
    if (slash == std::string::npos) return Rat(num);
    long long den = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1)
      throw std::invalid_argument("trailing characters");
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("rational literal out of range: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string rat_str(const Rat& q) {
  std::string s = std::to_string(q.numerator());
  if (q.denominator() != 1) s += "/" + std::to_string(q.denominator());
  return s;
}

}  // namespace trunclab
