#include "motifclust/sbm_theory.hpp"

#include <algorithm>
#include <limits>

namespace motifclust {

SbmExpectationPair sbm_expected_scores(const SbmParams& params, double delta) {
  const double p1 = params.p1, p2 = params.p2, q = params.q;

  SbmExpectation inside;
  inside.row = EdgeClass::kInsideB1;
  inside.triangles = p1 * p1 + q * q;
  inside.wedges = 2.0 * (p1 * (1.0 - p1) + q * (1.0 - q));
  inside.degree_sum = 2.0 * (p1 + q);
  inside.tw = 3.0 * p1 * p1 - 2.0 * p1 + 3.0 * q * q - 2.0 * q;
  inside.tectonic = p1 * p1 + q * q - 2.0 * delta * (p1 + q);

  SbmExpectation across;
  across.row = EdgeClass::kAcross;
  across.triangles = p1 * q + p2 * q;
  across.wedges = p1 * (1.0 - q) + p2 * (1.0 - q) + q * (1.0 - p1) + q * (1.0 - p2);
  across.degree_sum = p1 + p2 + 2.0 * q;
  across.tw = 3.0 * p1 * q + 3.0 * p2 * q - p1 - p2 - 2.0 * q;
  across.tectonic = p1 * q + p2 * q - delta * (p1 + p2 + 2.0 * q);

  return {inside, across};
}

double tw_expected_gap(const SbmParams& params) {
  const double n = params.n, p1 = params.p1, p2 = params.p2, q = params.q;
  return n * (p2 - p1) - 3.0 * n * (p1 * (q - p1) + q * (p2 - q));
}

TectonicVerdict tectonic_infeasibility_check(const SbmParams& params) {
  const double p1 = params.p1, p2 = params.p2, q = params.q;
  // Each margin is linear in delta: t - delta * deg_sum, so its sign flips at
  // t / deg_sum. Block 2 is block 1's row with p1 and p2 exchanged.
  auto root = [](double t, double deg_sum) {
    return deg_sum > 0.0 ? t / deg_sum : -std::numeric_limits<double>::infinity();
  };
  const double inside_b1 = root(p1 * p1 + q * q, 2.0 * (p1 + q));
  const double inside_b2 = root(p2 * p2 + q * q, 2.0 * (p2 + q));
  const double across_deg = p1 + p2 + 2.0 * q;
  const double across = across_deg > 0.0 ? (p1 * q + p2 * q) / across_deg : 0.0;

  TectonicVerdict verdict;
  verdict.lower = across;
  verdict.upper = std::min(inside_b1, inside_b2);
  verdict.feasible = verdict.lower < verdict.upper;
  return verdict;
}

}  // namespace motifclust
