#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "trunclab/errors.hpp"
#include "trunclab/poset.hpp"
#include "trunclab/rational.hpp"

namespace trunclab {

enum class CarrierKind {
  FinVec,  // rational tuples over a finite index set, truncation at the unit
  EvSeq,   // eventually-zero rational sequences, truncation at the constant 1
};

/// Test fixtures that deliberately break the truncation operation.
enum class TruncMutation { None, Zero, Identity };

struct TruncCarrier;
using CarrierPtr = std::shared_ptr<const TruncCarrier>;

struct TruncCarrier {
  CarrierKind kind = CarrierKind::FinVec;
  int dim = 1;             // |X| for FinVec; window width W for EvSeq
  std::vector<Rat> unit;   // FinVec only; strictly positive, size dim
  TruncMutation mutation = TruncMutation::None;

  /// Throws DomainError unless the unit is strictly positive (FinVec).
  static CarrierPtr fin_vec(std::vector<Rat> unit,
                            TruncMutation mutation = TruncMutation::None);
  static CarrierPtr ev_seq(int window,
                           TruncMutation mutation = TruncMutation::None);

  std::string describe() const;

  /// JSON description file: kind, dimension / window, unit tuple,
  /// optional generator list; rationals as "p/q" text.
  static CarrierPtr parse_json(const std::string& text,
                               std::vector<std::vector<Rat>>* generators);
  std::string to_json() const;
};

/// An element of a trunc carrier. FinVec: `coords` has exactly `dim`
/// entries. EvSeq: `coords` is the finite prefix (any length) and `tail`
/// the eventual constant; members of the trunc itself have tail 0.
struct TruncElement {
  CarrierPtr carrier;
  std::vector<Rat> coords;
  Rat tail = Rat(0);

  Rat at(int i) const;  // coordinate value, using tail beyond the prefix
  int prefix_len() const { return static_cast<int>(coords.size()); }

  bool is_zero() const;
  bool in_trunc() const;  // EvSeq: tail == 0; FinVec: always
  std::string str() const;
};

TruncElement make_element(CarrierPtr carrier, std::vector<Rat> coords,
                          Rat tail = Rat(0));
TruncElement zero_element(CarrierPtr carrier);
/// FinVec: the unit u. EvSeq: the indicator of {i}.
TruncElement unit_element(CarrierPtr carrier);
TruncElement indicator(CarrierPtr carrier, const std::vector<int>& support);

// Coordinatewise lattice-group operations; throw CarrierMismatch when the
// operands disagree on the carrier.
TruncElement add(const TruncElement& a, const TruncElement& b);
TruncElement sub(const TruncElement& a, const TruncElement& b);
TruncElement neg(const TruncElement& a);
TruncElement vee(const TruncElement& a, const TruncElement& b);
TruncElement wedge(const TruncElement& a, const TruncElement& b);
TruncElement abs(const TruncElement& a);
TruncElement scale(const Rat& q, const TruncElement& a);
TruncElement pos_part(const TruncElement& a);
TruncElement neg_part(const TruncElement& a);
bool leq(const TruncElement& a, const TruncElement& b);
bool eq(const TruncElement& a, const TruncElement& b);

/// The truncation a-bar; requires a >= 0 (DomainError otherwise). Subject
/// to the carrier's mutation fixture.
TruncElement truncate(const TruncElement& a);

/// a (-) r = a - r*(a/r)-bar = (a - r*u)+; diminish(a, 0) = a.
/// Requires a >= 0 and r >= 0.
TruncElement diminish(const TruncElement& a, const Rat& r);

/// a equals its own truncation (a is in the truncated part A-bar).
bool is_truncated(const TruncElement& a);

/// Coordinates where the element is nonzero, restricted to [0, dim);
/// throws SizeError for EvSeq elements supported outside the window.
Mask support_mask(const TruncElement& a);

/// Seeded random elements: rational entries with denominator <= max_den
/// and numerator magnitude <= max_num.
TruncElement random_element(CarrierPtr carrier, std::mt19937_64& rng,
                            int max_num = 6, int max_den = 12,
                            bool nonnegative = false);
/// Random element of the truncated part A-bar.
TruncElement random_truncated(CarrierPtr carrier, std::mt19937_64& rng,
                              int max_den = 12);
Rat random_rat(std::mt19937_64& rng, int max_num, int max_den,
               bool nonnegative = false);

}  // namespace trunclab
