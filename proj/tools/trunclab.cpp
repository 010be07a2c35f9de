// Command line surface over the trunclab library: carrier checks, the
// kernel frame and spectrum of a carrier, representations of single
// elements, the induced pointed map, the functoriality demo, the unit
// reflection, and the full verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "trunclab/suites.hpp"

using namespace trunclab;
using nlohmann::ordered_json;

namespace {

struct CarrierOpts {
  std::string kind = "finvec";
  int dim = 3;
  std::string unit;  // comma separated rationals, FinVec only
  std::string mutation = "none";
};

void add_carrier_opts(CLI::App* cmd, CarrierOpts& c) {
  cmd->add_option("--carrier", c.kind, "finvec or evseq")
      ->check(CLI::IsMember({"finvec", "evseq"}));
  cmd->add_option("--dim", c.dim, "coordinate count / window width");
  cmd->add_option("--unit", c.unit,
                  "comma separated unit coordinates (finvec only)");
  cmd->add_option("--mutation", c.mutation,
                  "none, zero or identity (fixtures that must fail)")
      ->check(CLI::IsMember({"none", "zero", "identity"}));
}

CarrierPtr build_carrier(const CarrierOpts& c) {
  TruncMutation mut = TruncMutation::None;
  if (c.mutation == "zero") mut = TruncMutation::Zero;
  if (c.mutation == "identity") mut = TruncMutation::Identity;
  if (c.kind == "evseq") return TruncCarrier::ev_seq(c.dim, mut);
  std::vector<Rat> unit;
  if (c.unit.empty()) {
    unit.assign(static_cast<size_t>(c.dim), Rat(1));
  } else {
    std::stringstream ss(c.unit);
    std::string tok;
    while (std::getline(ss, tok, ',')) unit.push_back(parse_rat(tok));
  }
  return TruncCarrier::fin_vec(std::move(unit), mut);
}

TruncElement parse_element(const CarrierPtr& c, const std::string& text) {
  std::vector<Rat> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(parse_rat(tok));
  return make_element(c, std::move(coords));
}

void write_dot(const std::string& path, const std::string& dot) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open dot output file " + path);
  out << dot;
}

void emit(const RunConfig& cfg, const ordered_json& j,
          const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

ordered_json steps_json(const RealFrameMap& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& [bp, val] : f.steps)
    arr.push_back({{"threshold", rat_str(bp)},
                   {"value", f.target->element_name(val)}});
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite laboratory for truncated lattice groups and "
               "their pointfree spectra"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.add_option("--samples", cfg.samples, "random instances per property");
  app.add_option("--max-dim", cfg.max_dim, "largest tuple carrier size");
  app.add_option("--window", cfg.window, "sequence carrier window width");
  app.add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  std::string dot_path;
  app.add_option("--dot", dot_path, "write a DOT lattice diagram here");

  CarrierOpts copts;
  std::string element_text = "1";

  auto* cmd_axioms = app.add_subcommand("check-axioms",
                                        "truncation laws on one carrier");
  add_carrier_opts(cmd_axioms, copts);

  auto* cmd_kframe = app.add_subcommand("kernel-frame",
                                        "the frame of truncation kernels");
  add_carrier_opts(cmd_kframe, copts);

  auto* cmd_spectrum = app.add_subcommand("spectrum",
                                          "the pointed spectrum and its "
                                          "unital classification");
  add_carrier_opts(cmd_spectrum, copts);

  auto* cmd_represent = app.add_subcommand("represent",
                                           "step form of one element");
  add_carrier_opts(cmd_represent, copts);
  cmd_represent->add_option("--element", element_text,
                            "comma separated coordinates");

  auto* cmd_induce = app.add_subcommand("induce-g",
                                        "induced pointed map for the "
                                        "carrier's own representation");
  add_carrier_opts(cmd_induce, copts);

  auto* cmd_reflect = app.add_subcommand("reflect",
                                         "reflection into unit-bearing "
                                         "truncs");
  add_carrier_opts(cmd_reflect, copts);

  auto* cmd_demo = app.add_subcommand("demo",
                                      "the failure of unpointed "
                                      "functoriality and its repair");

  auto* cmd_suite = app.add_subcommand("suite", "run every verification "
                                                "suite");

  // accept the shared options after the subcommand name too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::mt19937_64 rng(cfg.seed);

    if (cmd_axioms->parsed()) {
      CarrierPtr c = build_carrier(copts);
      AxiomReport r = check_axioms(c, rng, cfg.samples);
      ordered_json j{{"carrier", c->describe()},
                     {"sandwich", r.sandwich},
                     {"zero_reflecting", r.zero_reflecting},
                     {"escapes_unit", r.escapes_unit},
                     {"tail_vanishes", r.tail_vanishes},
                     {"passed", r.passed()},
                     {"violations", r.violations}};
      std::string text = c->describe() + ": " +
                         (r.passed() ? "all truncation laws hold\n"
                                     : "violations found\n");
      for (const auto& v : r.violations) text += "  " + v + "\n";
      emit(cfg, j, text);
      return r.passed() ? 0 : 1;
    }

    if (cmd_kframe->parsed()) {
      CarrierPtr c = build_carrier(copts);
      KernelFrame kf = kernel_frame(c);
      std::string mismatch = cross_check_ops(kf);
      write_dot(dot_path, kf.frame->to_dot());
      ordered_json j{{"carrier", c->describe()},
                     {"elements", kf.frame->size()},
                     {"boolean", kf.frame->is_boolean()},
                     {"atomic", kf.frame->is_atomic_boolean()},
                     {"ops_match", mismatch.empty()}};
      std::string text = c->describe() + ": " +
                         std::to_string(kf.frame->size()) +
                         " kernels\n" + kf.frame->listing();
      emit(cfg, j, text);
      return mismatch.empty() ? 0 : 1;
    }

    if (cmd_spectrum->parsed()) {
      CarrierPtr c = build_carrier(copts);
      Spectrum sp = spectrum(c);
      SpectrumProfile p = profile(sp);
      UnitalClassification u = classify_unital(sp);
      write_dot(dot_path, pointed_dot(sp.pointed.pointed));
      ordered_json j{{"carrier", c->describe()},
                     {"kernels", p.kernel_count},
                     {"spectrum_elements", p.spectrum_size},
                     {"filter_proper", p.filter_proper},
                     {"filter_regular", p.filter_regular},
                     {"point_isolated", p.point_isolated},
                     {"unital", u.unital()},
                     {"readings_agree", u.agree()},
                     {"witness", u.witness}};
      std::string text =
          c->describe() + ": " + std::to_string(p.spectrum_size) +
          " spectrum elements, filter " +
          (p.filter_proper ? "proper" : "improper") + ", " +
          (u.unital() ? "unital" : "not unital") + "\n";
      emit(cfg, j, text);
      return u.agree() ? 0 : 1;
    }

    if (cmd_represent->parsed()) {
      CarrierPtr c = build_carrier(copts);
      TruncElement a = parse_element(c, element_text);
      KernelFrame kf = kernel_frame(c);
      Spectrum sp = spectrum(c);
      RealFrameMap ua = underline(kf, a);
      RealFrameMap ha = hat(sp, a);
      write_dot(dot_path, kf.frame->to_dot());
      ordered_json j{{"carrier", c->describe()},
                     {"element", a.str()},
                     {"kernel_steps", steps_json(ua)},
                     {"spectrum_steps", steps_json(ha)},
                     {"pointed", in_pointed_reals(sp.pointed, ha)}};
      std::string text = "element " + a.str() + "\n  kernel form:   " +
                         ua.str() + "\n  spectrum form: " + ha.str() + "\n";
      emit(cfg, j, text);
      return 0;
    }

    if (cmd_induce->parsed()) {
      CarrierPtr c = build_carrier(copts);
      if (c->kind != CarrierKind::FinVec)
        throw DomainError("induce-g works on tuple carriers");
      Spectrum sp = spectrum(c);
      RealValuedMorphism mu;
      mu.source = c;
      mu.target = sp.pointed;
      for (int i = 0; i < c->dim; ++i)
        mu.gen_images.push_back(hat(sp, indicator(c, {i})));
      InducedG g = induced_g(mu, sp, rng, cfg.samples);
      bool identity =
          g.g.same_table(FrameMapTable::identity(sp.pointed.pointed.frame));
      ordered_json j{{"carrier", c->describe()},
                     {"valid", g.valid},
                     {"square_commutes", g.square_commutes},
                     {"join_stabilized", g.join_stabilized},
                     {"competing_maps", g.competing_maps},
                     {"is_identity", identity}};
      std::string text =
          c->describe() + ": induced map " +
          (g.valid && g.square_commutes ? "commutes" : "FAILS") +
          (identity ? " (identity on the spectrum)" : "") + "\n";
      emit(cfg, j, text);
      return g.valid && g.square_commutes && g.competing_maps == 0 ? 0 : 1;
    }

    if (cmd_reflect->parsed()) {
      CarrierPtr c = build_carrier(copts);
      WReflection w = w_reflect(c);
      auto counts = reflection_factor_counts(w, rng, 20);
      bool unique = true;
      for (int n : counts) unique = unique && n == 1;
      ordered_json j{{"carrier", c->describe()},
                     {"tuple_len", w.tuple_len},
                     {"tail_slot", w.has_tail_slot},
                     {"already_unital", w.already_unital},
                     {"factorizations_unique", unique}};
      std::string text =
          c->describe() + ": reflects onto " + std::to_string(w.tuple_len) +
          " slots" + (w.already_unital ? " (already unital)" : "") + "\n";
      emit(cfg, j, text);
      return unique ? 0 : 1;
    }

    if (cmd_demo->parsed()) {
      NonFunctorialDemo d = non_functorial_demo(rng, cfg.samples);
      if (!dot_path.empty() && d.repair.g.source)
        write_dot(dot_path, d.repair.g.source->to_dot());
      ordered_json j{
          {"base_map_count", d.base_map_count},
          {"probe", d.probe},
          {"lhs", std::to_string(d.lhs)},
          {"rhs", std::to_string(d.rhs)},
          {"mismatch", d.lhs != d.rhs},
          {"repair_valid", d.repair.valid},
          {"repair_commutes", d.repair.square_commutes},
          {"competing_maps", d.repair.competing_maps}};
      std::string text =
          "unpointed route: " + std::to_string(d.base_map_count) +
          " frame map(s); values disagree on " + d.probe +
          "\npointed repair: " +
          (d.repair.square_commutes ? "commutes and is unique" : "FAILS") +
          "\n";
      emit(cfg, j, text);
      bool ok = d.base_map_count == 1 && d.lhs != d.rhs &&
                d.repair.valid && d.repair.square_commutes &&
                d.repair.competing_maps == 0;
      return ok ? 0 : 1;
    }

    if (cmd_suite->parsed()) {
      auto reports = run_all(cfg);
      if (cfg.format == "json")
        std::cout << render_json(reports, cfg);
      else
        std::cout << render_text(reports);
      for (const auto& r : reports)
        if (!r.passed()) return 1;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
