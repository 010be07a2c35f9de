#include "trunclab/kernel_frame.hpp"

#include <algorithm>

namespace trunclab {

Mask KernelFrame::of(const TruncationKernel& k) const {
  frame->index(k.mask);
  return k.mask;
}

TruncationKernel KernelFrame::kernel_of(Mask a) const {
  frame->index(a);
  return kernel_from_mask(carrier, a);
}

KernelFrame kernel_frame(CarrierPtr carrier) {
  if (!carrier) throw DomainError("kernel frame needs a carrier");
  TruncationKernel all = kernel_all(carrier);
  const int bits = all.universe_bits();
  if (bits > 12)
    throw SizeError("kernel frame would have " +
                    std::to_string(Mask(1) << bits) + " elements");
  std::vector<std::string> labels;
  for (int i = 0; i < carrier->dim; ++i)
    labels.push_back("x" + std::to_string(i));
  if (carrier->kind == CarrierKind::EvSeq) labels.push_back("tail");
  std::vector<Mask> elems;
  for (Mask m = 0; m < (Mask(1) << bits); ++m) elems.push_back(m);
  KernelFrame kf;
  kf.carrier = std::move(carrier);
  kf.frame = FiniteFrame::from_elements(std::move(labels), std::move(elems));
  return kf;
}

std::string cross_check_ops(const KernelFrame& kf) {
  for (Mask a : kf.frame->elements())
    for (Mask b : kf.frame->elements()) {
      TruncationKernel ka = kf.kernel_of(a), kb = kf.kernel_of(b);
      if (kernel_join(ka, kb).mask != kf.frame->join(a, b))
        return "join disagrees at " + ka.str() + ", " + kb.str();
      if (kernel_meet(ka, kb).mask != kf.frame->meet(a, b))
        return "meet disagrees at " + ka.str() + ", " + kb.str();
      if (kernel_leq(ka, kb) != kf.frame->leq(a, b))
        return "order disagrees at " + ka.str() + ", " + kb.str();
    }
  return "";
}

std::vector<Mask> spectrum_filter(const KernelFrame& kf) {
  // generated by the darks of a spanning family of truncated elements;
  // the family of window indicators realizes every generator the filter
  // needs, and saturation closes the result
  std::vector<Mask> gens;
  const auto& c = kf.carrier;
  std::vector<int> window;
  for (int i = 0; i < c->dim; ++i) {
    window.push_back(i);
    gens.push_back(dark(truncate(indicator(c, {i})), Rat(1)).mask);
  }
  gens.push_back(dark(truncate(indicator(c, window)), Rat(1)).mask);
  return saturate_filter(*kf.frame, gens);
}

Spectrum spectrum(CarrierPtr carrier) {
  Spectrum sp;
  sp.base = kernel_frame(std::move(carrier));
  sp.filtered.frame = sp.base.frame;
  sp.filtered.filter = spectrum_filter(sp.base);
  sp.pointed = two_sub_f(sp.base.frame, sp.filtered.filter);
  return sp;
}

SpectrumProfile profile(const Spectrum& sp) {
  SpectrumProfile p;
  p.kernel_count = sp.base.frame->size();
  p.spectrum_size = sp.pointed.pointed.frame->size();
  p.filter_proper = sp.filtered.proper();
  p.filter_regular = sp.filtered.regular_filter();
  p.point_isolated = is_isolated(sp.pointed.pointed);
  p.base_boolean = sp.base.frame->is_boolean();
  p.base_atomic = sp.base.frame->is_atomic_boolean();
  return p;
}

}  // namespace trunclab
