#pragma once

#include <random>
#include <string>
#include <vector>

#include "trunclab/trunc.hpp"

namespace trunclab {

/// A truncation kernel of a carrier, stored by its support data. The bits
/// 0..dim-1 select window coordinates; for EvSeq the extra bit `dim`
/// (the tail bit) admits every element supported beyond the window.
struct TruncationKernel {
  CarrierPtr carrier;
  Mask mask = 0;

  int universe_bits() const;
  Mask tail_bit() const;  // 0 for FinVec
  bool has_tail() const;

  bool contains(const TruncElement& a) const;
  bool is_zero() const { return mask == 0; }
  bool is_all() const;
  std::string str() const;
};

TruncationKernel kernel_zero(CarrierPtr carrier);
TruncationKernel kernel_all(CarrierPtr carrier);
TruncationKernel kernel_from_mask(CarrierPtr carrier, Mask mask);
/// Smallest kernel containing `a`.
TruncationKernel principal_kernel(const TruncElement& a);

TruncationKernel kernel_join(const TruncationKernel& j,
                             const TruncationKernel& k);
TruncationKernel kernel_meet(const TruncationKernel& j,
                             const TruncationKernel& k);
bool kernel_leq(const TruncationKernel& j, const TruncationKernel& k);

struct KernelClosure {
  TruncationKernel kernel;
  int stages = 0;  // ladder steps until a fixed point
};

/// Smallest truncation kernel containing the generators: alternates the
/// convex sublattice-subgroup step with the archimedean/absorbing step
/// until the support data stops growing. Stage count is capped; the cap
/// is generous for these carriers (the ladder stabilizes immediately).
KernelClosure kernel_closure(CarrierPtr carrier,
                             const std::vector<TruncElement>& generators);

/// B-polar: elements disjoint in absolute value from every generator.
TruncationKernel polar(CarrierPtr carrier,
                       const std::vector<TruncElement>& generators);
TruncationKernel kernel_polar(const TruncationKernel& k);

/// bright(a, r) = closure of the single diminution a (-) r. Requires
/// a >= 0, r > 0.
TruncationKernel bright(const TruncElement& a, const Rat& r);

/// dark(a, r) = join over s < r of the polars of a (-) s. Computed as a
/// finite stabilizing union over probe thresholds. Requires a >= 0, r > 0.
TruncationKernel dark(const TruncElement& a, const Rat& r);

/// Members of the truncated part lying in K that generate its trace:
/// the largest truncated element supported inside K.
TruncElement zero_part_top(const TruncationKernel& k);
/// K lies in the bright filter slot: u (or every window indicator and the
/// tail) is dark-complemented into K. For the spectrum construction the
/// relevant test is dark(a,1) <= K for designated elements.
bool dark_below(const TruncElement& a, const Rat& r,
                const TruncationKernel& k);

struct AxiomReport {
  bool sandwich = true;        // a /\ b-bar <= a-bar <= a
  bool zero_reflecting = true; // a-bar = 0 forces a = 0
  bool escapes_unit = true;    // na = (na)-bar for all n forces a = 0
  bool tail_vanishes = true;   // the double polars of a (-) n shrink to 0
  bool passed() const {
    return sandwich && zero_reflecting && escapes_unit && tail_vanishes;
  }
  std::vector<std::string> violations;
};

/// Randomized check of the truncation laws on `samples` draws. Mutated
/// carriers are expected to fail with a cited witness.
AxiomReport check_axioms(CarrierPtr carrier, std::mt19937_64& rng,
                         int samples);

}  // namespace trunclab
