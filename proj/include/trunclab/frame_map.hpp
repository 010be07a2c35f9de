#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trunclab/frame.hpp"

namespace trunclab {

/// A total assignment from source elements to target elements, indexed in
/// the order of source.elements(). Validity (preservation of bottom, top,
/// binary meets and joins) is checked separately by check_frame_map.
struct FrameMapTable {
  FramePtr source;
  FramePtr target;
  std::vector<Mask> image;  // image[i] = value at source->elements()[i]

  Mask operator()(Mask a) const { return image[source->index(a)]; }

  static FrameMapTable identity(FramePtr frame);
  /// g after f; requires f.target == g.source element-for-element.
  static FrameMapTable compose(const FrameMapTable& f, const FrameMapTable& g);

  bool same_table(const FrameMapTable& other) const;
};

struct MapCheck {
  bool valid = true;
  std::string violation;  // first violating pair, human readable
};

/// Reports preservation of bottom, top, binary meet and binary join.
MapCheck check_frame_map(const FrameMapTable& f);

/// The two-element frame.
FramePtr frame_two();

struct FramePoint {
  FrameMapTable map;  // L -> 2
  Mask kernel;        // largest element sent to bottom
};

/// All frame maps L -> 2. Maps are found through the join-irreducibles of
/// L (a map is determined by where the irreducibles go), then validated.
std::vector<FramePoint> points(FramePtr frame);

/// True when a /\ b <= p implies a <= p or b <= p.
bool is_prime(const FiniteFrame& frame, Mask p);

struct PointQuotients {
  FrameMapTable closed;  // a -> a \/ p, onto the subframe of elements >= p
  FrameMapTable open;    // a -> a /\ p, onto the subframe of elements <= p
};

/// Canonical quotients at a point kernel p. Throws DomainError when p is
/// not prime.
PointQuotients point_quotients(FramePtr frame, Mask p);

/// All frame maps source -> target, enumerated by assigning images to the
/// join-irreducibles of the source and validating the induced table.
/// Intended for small frames only.
std::vector<FrameMapTable> enumerate_frame_maps(FramePtr source,
                                                FramePtr target);

}  // namespace trunclab
