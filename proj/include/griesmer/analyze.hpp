#ifndef GRIESMER_ANALYZE_HPP
#define GRIESMER_ANALYZE_HPP

// Whole-code summary: parameters, extremality, divisor data, and the
// geometry of the column multiset.  render_analysis produces the canonical
// text block so that equal reports compare byte-for-byte.

#include <string>

#include "griesmer/code.hpp"
#include "griesmer/geometry.hpp"

namespace griesmer {

struct AnalysisReport {
  int p = 0;
  int f = 0;
  long long q = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  long long griesmer_length = 0;
  bool griesmer = false;
  bool projective = false;
  WeightDistribution wd;
  long long divisor = 0;
  int p_exponent = 0;
  long long max_multiplicity = 0;
  long long endpoints = 0;
};

inline AnalysisReport analyze(const LinearCode& C) {
  const FieldSpec& F = *C.field();
  AnalysisReport r;
  r.p = F.p;
  r.f = F.f;
  r.q = F.q;
  r.n = C.n();
  r.k = C.k();
  r.wd = weight_distribution(C);
  r.d = min_distance(r.wd);
  r.griesmer_length = griesmer_bound(F.q, C.k(), r.d);
  r.griesmer = r.n == r.griesmer_length;
  const DivisorInfo di = divisor_and_exponent(C);
  r.divisor = di.delta;
  r.p_exponent = di.p_exponent;
  const PointMultiset ms = multiset_of(C);
  r.max_multiplicity = gamma(ms);
  r.endpoints = endpoint_count(ms);
  r.projective = r.max_multiplicity == 1;
  return r;
}

inline std::string render_analysis(const AnalysisReport& r) {
  std::string out;
  out += "parameters = [" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
         std::to_string(r.d) + "]_" + std::to_string(r.q) + " (p=" +
         std::to_string(r.p) + ", f=" + std::to_string(r.f) + ")\n";
  out += "griesmer_length = " + std::to_string(r.griesmer_length) + "\n";
  out += std::string("is_griesmer = ") + (r.griesmer ? "true" : "false") + "\n";
  out += "weights = {";
  bool first = true;
  for (const auto& [w, count] : r.wd.counts) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(w) + ":" + std::to_string(count);
  }
  out += "}\n";
  out += "divisor = " + std::to_string(r.divisor) + "\n";
  out += "p_exponent = " + std::to_string(r.p_exponent) + "\n";
  out += "max_multiplicity = " + std::to_string(r.max_multiplicity) + "\n";
  out += "endpoints = " + std::to_string(r.endpoints) + "\n";
  out += std::string("projective = ") + (r.projective ? "true" : "false") + "\n";
  return out;
}

}  // namespace griesmer

#endif  // GRIESMER_ANALYZE_HPP
