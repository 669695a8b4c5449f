#pragma once

#include <optional>

#include "motifclust/generators.hpp"

namespace motifclust {

enum class EdgeClass { kInsideB1, kAcross };

// Expected per-edge quantities in the two-block SBM, each divided by the block
// size n, using the asymptotic n - 2 ≈ n simplification throughout.
struct SbmExpectation {
  EdgeClass row = EdgeClass::kInsideB1;
  double triangles = 0.0;
  double wedges = 0.0;
  double degree_sum = 0.0;
  double tw = 0.0;
  double tectonic = 0.0;  // t - delta * (deg u + deg v), the Tectonic margin at delta
};

struct SbmExpectationPair {
  SbmExpectation inside_b1;
  SbmExpectation across;
};

// Closed forms (p1, p2, q from params; n is not used):
//   inside B1: t = p1^2 + q^2, wedges = 2(p1(1-p1) + q(1-q)), deg sum = 2(p1 + q),
//              TW = 3p1^2 - 2p1 + 3q^2 - 2q, Tec = p1^2 + q^2 - 2 delta (p1 + q)
//   across:    t = p1 q + p2 q, wedges = p1(1-q) + p2(1-q) + q(1-p1) + q(1-p2),
//              deg sum = p1 + p2 + 2q, TW = 3p1 q + 3p2 q - p1 - p2 - 2q,
//              Tec = p1 q + p2 q - delta (p1 + p2 + 2q)
SbmExpectationPair sbm_expected_scores(const SbmParams& params, double delta = 0.0);

// n (E[TW | inside B1] - E[TW | across])
//   = n (p2 - p1) - 3 n (p1 (q - p1) + q (p2 - q)).
// Positive means a TW threshold separates the classes in expectation.
double tw_expected_gap(const SbmParams& params);

// Open interval of Tectonic thresholds with a positive expected margin inside
// both blocks and a negative one across.
struct TectonicVerdict {
  bool feasible = false;
  double lower = 0.0;  // across edges need delta > lower
  double upper = 0.0;  // inside edges need delta < upper
};

TectonicVerdict tectonic_infeasibility_check(const SbmParams& params);

}  // namespace motifclust
