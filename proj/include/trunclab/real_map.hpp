#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunclab/pointed.hpp"
#include "trunclab/rational.hpp"

namespace trunclab {

/// A frame map from the frame of reals into a finite frame, stored as a
/// step function of the open upper rays. `steps[i]` gives the value of
/// (r, infinity) for r in [steps[i].first, steps[i+1].first); rays left
/// of the first breakpoint take top, and the final value is bottom.
///
/// Normal form: values strictly decreasing, no repeated values, each
/// value rather below its predecessor (this makes the lower-ray values
/// come out right and characterizes genuine frame maps on finite
/// targets).
struct RealFrameMap {
  FramePtr target;
  std::vector<std::pair<Rat, Mask>> steps;

  Mask upper(const Rat& r) const;  // value at (r, infinity)
  /// value at (-infinity, r): the join of the pseudocomplements of the
  /// upper values at thresholds below r.
  Mask lower(const Rat& r) const;

  std::vector<Rat> breakpoints() const;
  bool normalized() const;
  std::string str() const;
};

/// Drops redundant steps and verifies the normal-form laws; throws
/// DomainError when the steps cannot be a frame map (values not
/// decreasing, last value not bottom, rather-below failure).
RealFrameMap normalize(RealFrameMap f);

bool rfm_eq(const RealFrameMap& a, const RealFrameMap& b);

RealFrameMap rfm_constant(FramePtr target, const Rat& c);

// Pointwise lattice operations and Minkowski-style arithmetic. The sum
// probes the finitely many breakpoint combinations, which is exhaustive
// for step functions.
RealFrameMap rfm_add(const RealFrameMap& f, const RealFrameMap& g);
RealFrameMap rfm_neg(const RealFrameMap& f);
RealFrameMap rfm_sub(const RealFrameMap& f, const RealFrameMap& g);
RealFrameMap rfm_vee(const RealFrameMap& f, const RealFrameMap& g);
RealFrameMap rfm_wedge(const RealFrameMap& f, const RealFrameMap& g);
RealFrameMap rfm_scale(const Rat& q, const RealFrameMap& f);
/// f /\ 1, the truncation used by the hat representation.
RealFrameMap rfm_truncate(const RealFrameMap& f);

/// coz f = f(0,oo) \/ f(-oo,0); con f = f(1,oo) \/ f(-oo,1).
Mask rfm_coz(const RealFrameMap& f);
Mask rfm_con(const RealFrameMap& f);

/// The rational value picked out by composing with a point. Requires the
/// point to be a valid map to 2; the result is always one of the
/// breakpoints or 0 for step functions built here.
Rat rfm_point_value(const FrameMapTable& point, const RealFrameMap& f);

/// Atom-tuple route for atomic Boolean targets: a map is exactly a tuple
/// of rationals indexed by the atoms. Used as an independent cross-check
/// of the step arithmetic; throws DomainError on non-atomic targets.
std::vector<Rat> rfm_to_atom_tuple(const RealFrameMap& f);
RealFrameMap rfm_from_atom_tuple(FramePtr target,
                                 const std::vector<Rat>& values);

/// Pushes f along a frame map h (target of f = source of h).
RealFrameMap rfm_push(const RealFrameMap& f, const FrameMapTable& h);

}  // namespace trunclab
