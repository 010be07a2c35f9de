#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "trunclab/frame_map.hpp"

namespace trunclab {

/// A frame with a designated point (frame map to 2).
struct PointedFrame {
  FramePtr frame;
  FrameMapTable point;  // frame -> 2

  Mask kernel() const;  // largest element sent to bottom
  bool point_of(Mask a) const { return point(a) == point.target->top(); }
  /// point is a valid frame map.
  bool valid() const;
};

/// A frame with an extensionally stored filter.
struct FilteredFrame {
  FramePtr frame;
  std::vector<Mask> filter;  // sorted element masks

  bool in_filter(Mask a) const;
  bool proper() const;  // bottom not in the filter
  /// \/_{b in F} b* = top.
  bool regular_filter() const;
};

/// Validates the filter laws (nonempty, upward closed, meet closed);
/// throws FilterLawError naming the violated law.
void check_filter(const FiniteFrame& frame, const std::vector<Mask>& filter);

/// Upward-closes and meet-closes a generating set.
std::vector<Mask> saturate_filter(const FiniteFrame& frame,
                                  std::vector<Mask> generators);

/// All filters on a (small) frame.
std::vector<std::vector<Mask>> all_filters(const FiniteFrame& frame);

/// The co-free pointed frame 2L = 2 x L with the first projection as
/// point. The product is realized by adjoining a fresh universe bit; the
/// second projection simply drops that bit.
struct Product2 {
  PointedFrame pointed;
  int eps_bit;  // universe bit representing the 2-component

  Mask pair(bool eps, Mask a) const;
  bool eps_of(Mask m) const { return (m >> eps_bit) & 1; }
  Mask drop(Mask m) const { return m & ~(Mask(1) << eps_bit); }
};

Product2 product2(FramePtr frame);

/// The sub-pointed frame 2_F L = {(eps,a) : eps = top implies a in F}.
/// Throws FilterLawError when F is not a filter.
Product2 two_sub_f(FramePtr frame, const std::vector<Mask>& filter);

/// Filtered -> pointed: (L,F) |-> 2_F L.
Product2 functor_d(const FilteredFrame& lf);

struct PointedDecomposition {
  FilteredFrame part;      // (down p, p /\ (M \ down p))
  FrameMapTable open_map;  // M -> down p, a -> a /\ p
};

/// Pointed -> filtered: M |-> (down p_M, {p /\ a : point(a) = top}).
PointedDecomposition functor_e(const PointedFrame& m);

/// The unit M -> D(E(M)), a |-> (point(a), p /\ a). Returns the table into
/// the rebuilt 2_F L.
FrameMapTable equivalence_unit(const PointedFrame& m, const Product2& defm);

/// True when f is a bijective frame map; with points also checked when
/// both sides are pointed.
bool is_frame_isomorphism(const FrameMapTable& f);

/// A filtered frame morphism (c, f): (L,F) -> (N,G): c in N and
/// f: L -> down c with arrow(c, f(a)) in G for every a in F.
struct FilteredMorphism {
  FilteredFrame src;
  FilteredFrame dst;
  Mask c;            // element of dst.frame
  FrameMapTable f;   // src.frame -> (down c) subframe of dst.frame
};

struct FilteredCheck {
  bool valid = true;
  std::string violation;  // names the filter element whose arrow escapes
};

FilteredCheck check_filtered_morphism(const FilteredMorphism& m);

FilteredMorphism identity_filtered(const FilteredFrame& lf);

/// (d,g) after (c,f) = (g(c), g o f).
FilteredMorphism compose_filtered(const FilteredMorphism& first,
                                  const FilteredMorphism& second);

struct FreeIsolated {
  Product2 target;     // 2L with L = point^{-1}(bottom)
  FrameMapTable nu;    // M -> 2L, a -> (point(a), p /\ a); injective
};

/// The free isolated point frame over M.
FreeIsolated free_isolated(const PointedFrame& m);

struct TwoSubFChecks {
  bool projection_dense = false;  // iff the filter is proper
  bool regular = false;
  bool compact = true;  // finite frames are compact
};

TwoSubFChecks frame_checks(const Product2& m, const FilteredFrame& lf);

/// True when the designated point's kernel is complemented.
bool is_isolated(const PointedFrame& m);

/// Pointed frame maps source -> target (frame maps commuting with the
/// points), by exhaustive search over join-irreducible assignments.
std::vector<FrameMapTable> enumerate_pointed_maps(const PointedFrame& source,
                                                  const PointedFrame& target);

/// Text bundle formats: the poset section followed by `filter` lines
/// (label-set per element) or a `point` line (kernel as a label set).
FilteredFrame parse_filtered_bundle(std::istream& in);
PointedFrame parse_pointed_bundle(std::istream& in);
std::string serialize_filtered_bundle(const FilteredFrame& lf,
                                      const Poset& base);

/// DOT export tagging the point kernel (filled) and filter members
/// (doubled border).
std::string pointed_dot(const PointedFrame& m);
std::string filtered_dot(const FilteredFrame& lf);

}  // namespace trunclab
