#pragma once

#include <random>
#include <string>
#include <vector>

#include "trunclab/kernel.hpp"
#include "trunclab/pointed.hpp"

namespace trunclab {

/// The frame of truncation kernels of a carrier, realized as a concrete
/// mask family: kernel masks double as frame element masks, so the two
/// sides translate without bookkeeping.
struct KernelFrame {
  CarrierPtr carrier;
  FramePtr frame;

  Mask of(const TruncationKernel& k) const;
  TruncationKernel kernel_of(Mask a) const;
};

/// Builds K A. FinVec: the powerset of the index set. EvSeq: the powerset
/// of the window indices plus the tail bit.
KernelFrame kernel_frame(CarrierPtr carrier);

/// Verifies that kernel join/meet agree with the frame operations on
/// every pair of elements; returns the first discrepancy or empty.
std::string cross_check_ops(const KernelFrame& kf);

/// The spectrum filter: the filter of K A generated by the kernels
/// dark(a, 1) for truncated a. FinVec: improper (the darks reach bottom).
/// EvSeq: the proper filter of kernels containing the tail bit.
std::vector<Mask> spectrum_filter(const KernelFrame& kf);

struct Spectrum {
  KernelFrame base;         // K A
  FilteredFrame filtered;   // (K A, dark filter)
  Product2 pointed;         // M A = 2_F K A
};

Spectrum spectrum(CarrierPtr carrier);

/// Frame-theoretic profile used by reports.
struct SpectrumProfile {
  int kernel_count = 0;
  int spectrum_size = 0;
  bool filter_proper = false;
  bool filter_regular = false;
  bool point_isolated = false;
  bool base_boolean = false;
  bool base_atomic = false;
};

SpectrumProfile profile(const Spectrum& sp);

}  // namespace trunclab
