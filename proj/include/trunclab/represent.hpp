#pragma once

#include <random>
#include <string>
#include <vector>

#include "trunclab/kernel_frame.hpp"
#include "trunclab/real_map.hpp"

namespace trunclab {

/// The kernel-valued representation of a carrier element: the step map
/// whose upper ray (r, infinity) is the closure of the diminution at r.
/// Negative elements are handled through the positive/negative parts.
RealFrameMap underline(const KernelFrame& kf, const TruncElement& a);

/// The spectrum-valued representation: underline pushed into M A, with
/// the 2-component top exactly on rays with negative threshold.
RealFrameMap hat(const Spectrum& sp, const TruncElement& a);

/// Whether a step map into a pointed frame composes with the designated
/// point to the constant zero (membership in the pointed reals).
bool in_pointed_reals(const Product2& m, const RealFrameMap& f);

/// The three equivalent readings of "the carrier has a unit", each
/// checked independently; they must agree.
struct UnitalClassification {
  bool dark_unit_zero = false;   // some truncated a0 has dark(a0,1) = 0
  bool point_isolated = false;   // the spectrum point kernel is complemented
  bool has_top_of_trunc = false; // the truncated part has a greatest element
  std::string witness;           // the witness a0, or per-generator evidence
  bool agree() const {
    return dark_unit_zero == point_isolated &&
           point_isolated == has_top_of_trunc;
  }
  bool unital() const { return dark_unit_zero; }
};

UnitalClassification classify_unital(const Spectrum& sp);

/// A truncation-preserving lattice group map between carriers. Each
/// target coordinate reads one source coordinate with a nonnegative
/// scale carrying the source unit value to the target one; for EvSeq
/// targets the tail rule feeds from the source tail.
struct TruncMorphism {
  CarrierPtr source;
  CarrierPtr target;
  struct Coord {
    int src = 0;  // source coordinate; -1 reads the source tail
    Rat scale{1};
  };
  std::vector<Coord> coords;  // one per target window coordinate
  Coord tail_rule;            // EvSeq targets only

  TruncElement apply(const TruncElement& a) const;
};

/// Throws DomainError unless the description is truncation preserving.
TruncMorphism make_morphism(CarrierPtr source, CarrierPtr target,
                            std::vector<TruncMorphism::Coord> coords,
                            TruncMorphism::Coord tail_rule = {});

/// A morphism from a carrier into the pointed reals over a pointed
/// frame, given by the images of the coordinate generators and extended
/// by linearity (exact on these carriers: the generators are disjoint).
struct RealValuedMorphism {
  CarrierPtr source;                     // window-supported inputs only
  Product2 target;                       // the pointed frame L
  std::vector<RealFrameMap> gen_images;  // one per window coordinate

  RealFrameMap apply(const TruncElement& a) const;
};

/// Composes a carrier morphism with the spectrum representation of its
/// target: generator g goes to hat(theta(g)).
RealValuedMorphism compose_with_hat(const TruncMorphism& theta,
                                    const Spectrum& target_spectrum);

/// Randomized validation that the extension really is a trunc morphism
/// (preserves meet, join, truncation, lands in the pointed reals).
/// Returns the first broken identity or empty.
std::string validate_morphism(const RealValuedMorphism& theta,
                              std::mt19937_64& rng, int samples);

struct InducedG {
  FrameMapTable g;             // M(source) -> target pointed frame
  bool valid = false;          // pointed frame map laws hold
  bool square_commutes = false;  // pushing hat(a) along g gives theta(a)
  bool join_stabilized = false;  // the defining joins settled on the grid
  int competing_maps = 0;      // other commuting pointed maps (want 0)
};

/// The unique pointed frame map M(source) -> L through which theta
/// factors: bottom-slot elements go to the join of the cozeros of theta
/// over the kernel's truncated members, top-slot elements to the join of
/// the co-one elements over the bright filter slot. The joins are
/// realized on a deterministic finite grid plus random samples whose
/// stability is asserted. Uniqueness is checked by exhaustive pointed
/// map enumeration when the frames are small.
InducedG induced_g(const RealValuedMorphism& theta, const Spectrum& sp,
                   std::mt19937_64& rng, int samples,
                   bool check_unique = true);

/// The worked failure of functoriality for the unpointed representation,
/// and its pointed repair.
struct NonFunctorialDemo {
  CarrierPtr a;                 // one coordinate
  CarrierPtr b;                 // two coordinates
  TruncMorphism theta;          // a |-> (a, 0)
  int base_map_count = 0;       // frame maps K A -> K B (expect 1)
  std::string probe;            // interval where the unique map disagrees
  Mask lhs = 0, rhs = 0;        // the two values at the probe
  InducedG repair;              // the pointed square that does commute
};

NonFunctorialDemo non_functorial_demo(std::mt19937_64& rng, int samples);

/// The reflection into truncs whose truncation is meet with a designated
/// unit: the image of the carrier inside the atom tuples over its
/// spectrum, together with the adjoined all-ones unit.
struct WReflection {
  CarrierPtr carrier;
  Spectrum sp;
  int tuple_len = 0;        // window coordinates plus tail slot if any
  bool has_tail_slot = false;
  bool already_unital = false;
  std::vector<Rat> unit;    // the adjoined designated unit (all ones)

  std::vector<Rat> embed(const TruncElement& a) const;
  /// Tuple lies in the reflected trunc (the span of the image and the
  /// unit: for EvSeq, window tuples whose tail slot is an arbitrary
  /// rational constant).
  bool member(const std::vector<Rat>& t) const;
};

WReflection w_reflect(CarrierPtr carrier);

/// Factorization counts through the reflection: for each sampled
/// unit-preserving coordinate morphism from the reflection target class
/// into rational tuples, count the extensions of the restricted map back
/// through the reflection. Every entry should be exactly 1.
std::vector<int> reflection_factor_counts(const WReflection& w,
                                          std::mt19937_64& rng, int probes,
                                          int max_target_dim = 3);

}  // namespace trunclab
