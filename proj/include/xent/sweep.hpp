#pragma once

// Temperature sweeps over a thermal chain: one SweepRecord per temperature,
// rows computed in parallel and emitted in temperature order. CSV columns are
// a stable contract; doubles print with 17 significant digits so parsing a
// sweep back reproduces the values exactly.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "xent/chain.hpp"
#include "xent/entanglement.hpp"
#include "xent/errors.hpp"
#include "xent/format.hpp"
#include "xent/parallel.hpp"
#include "xent/xstate.hpp"

namespace xent {

struct SweepRecord {
  double temperature = 0.0;
  double czz = 0.0;
  double cxx = 0.0;
  double v = 0.0;
  double z_re = 0.0;
  double z_im = 0.0;
  double e_hs = 0.0;
  double b_gbi = 0.0;
  double concurrence = 0.0;
  bool is_ppt = false;
};

inline constexpr const char* kSweepCsvHeader =
    "temperature,czz,cxx,v,z_re,z_im,e_hs,b_gbi,concurrence,is_ppt";

enum class Spacing { linear, geometric };

inline const char* to_string(Spacing s) { return s == Spacing::linear ? "linear" : "geometric"; }

inline std::vector<double> sweep_temperatures(double t_min, double t_max, std::size_t steps,
                                              Spacing spacing) {
  if (!(t_min > 0.0)) throw usage_error("sweep needs t_min > 0, got " + std::to_string(t_min));
  if (!(t_max >= t_min)) {
    throw usage_error("sweep needs t_max >= t_min, got [" + std::to_string(t_min) + ", " +
                      std::to_string(t_max) + "]");
  }
  if (steps < 1) throw usage_error("sweep needs steps >= 1");
  std::vector<double> ts(steps);
  if (steps == 1) {
    ts[0] = t_min;
    return ts;
  }
  const double span = t_max - t_min;
  const double ratio = t_max / t_min;
  for (std::size_t k = 0; k < steps; ++k) {
    const double frac = static_cast<double>(k) / static_cast<double>(steps - 1);
    ts[k] = (spacing == Spacing::linear) ? t_min + span * frac
                                         : t_min * std::pow(ratio, frac);
  }
  ts.back() = t_max;  // pin the endpoint against pow round-off
  return ts;
}

inline SweepRecord sweep_point(const ThermalChain& chain, double temperature) {
  const auto [i, j] = chain.spec().pair;
  const cmat reduced = partial_trace_pair(chain.state(ThermalPoint(temperature)), i, j);
  const Correlators c = detail::correlators_from_pair_state(reduced);
  const XState x = from_correlators(c);
  const double dev = (reduced - to_matrix(x, /*enforce_psd=*/false)).max_abs();
  if (dev > 1e-10) {
    throw model_error("reduced pair state deviates from its correlator X-state by " +
                      std::to_string(dev));
  }
  const EntanglementReport rep = analyze(x);
  SweepRecord rec;
  rec.temperature = temperature;
  rec.czz = c.czz;
  rec.cxx = c.cxx;
  rec.v = x.v();
  rec.z_re = x.z().real();
  rec.z_im = x.z().imag();
  rec.e_hs = rep.e_hs;
  rec.b_gbi = rep.b_gbi;
  rec.concurrence = rep.concurrence;
  rec.is_ppt = ppt_check(reduced).is_ppt;
  return rec;
}

inline std::vector<SweepRecord> run_sweep(const ChainSpec& spec, double t_min, double t_max,
                                          std::size_t steps, Spacing spacing) {
  const std::vector<double> ts = sweep_temperatures(t_min, t_max, steps, spacing);
  const ThermalChain chain(spec);
  std::vector<SweepRecord> records(ts.size());
  par_for(ts.size(), [&](std::size_t k) { records[k] = sweep_point(chain, ts[k]); });
  return records;
}

inline std::string to_csv_line(const SweepRecord& r) {
  std::string line;
  for (double x : {r.temperature, r.czz, r.cxx, r.v, r.z_re, r.z_im, r.e_hs, r.b_gbi,
                   r.concurrence}) {
    line += fmt17(x);
    line += ',';
  }
  line += r.is_ppt ? "true" : "false";
  return line;
}

inline void to_json(nlohmann::json& j, const SweepRecord& r) {
  j = nlohmann::json{{"temperature", r.temperature},
                     {"czz", r.czz},
                     {"cxx", r.cxx},
                     {"v", r.v},
                     {"z_re", r.z_re},
                     {"z_im", r.z_im},
                     {"e_hs", r.e_hs},
                     {"b_gbi", r.b_gbi},
                     {"concurrence", r.concurrence},
                     {"is_ppt", r.is_ppt}};
}

}  // namespace xent
