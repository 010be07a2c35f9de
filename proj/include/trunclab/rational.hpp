#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trunclab {

using Rat = boost::rational<long long>;

inline Rat rat_abs(const Rat& q) { return q < Rat(0) ? -q : q; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

/// (q)+ = max(q, 0)
inline Rat rat_pos(const Rat& q) { return q < Rat(0) ? Rat(0) : q; }

/// Least integer n with n >= q.
inline long long rat_ceil(const Rat& q) {
  long long d = q.numerator() / q.denominator();
  if (Rat(d) < q) ++d;
  return d;
}

/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& text);

/// Renders as "p/q" ("p" when the denominator is 1).
std::string rat_str(const Rat& q);

}  // namespace trunclab
