#pragma once

#include <string>
#include <vector>

#include "icoq/rational.hpp"

namespace icoq {

// Well-formed normalization of a weight vector: divide out the overall gcd,
// then repeatedly divide the other weights by any common factor shared by all
// weights but one.
std::vector<long> normalize_weights(std::vector<long> w);

// Anticanonical volume of a degree-d hypersurface in the weighted projective
// space with the given weights: (sum w - d)^dim * d / prod w. For d = 0 the
// ambient space itself is measured on the well-formed model: (sum w)^dim /
// prod w. NonPositiveDegree for d < 0.
Rational wps_kvolume(const std::vector<long>& weights, long d, int dim);

struct PencilBound {
  Rational value;  // dD * dL / prod w
  std::string verdict;  // "pass", "pass-with-basepoint-condition", "fail"
  bool ok;              // verdict != "fail"
};

// Intersection bound of a degree-dD branch divisor with a degree-dL pencil:
// value dD * dL / prod w, measured against 3. Strictly below the bound is a
// pass; exactly 3 passes only under the base-point condition; above 3 fails.
PencilBound pencil_bound(const std::vector<long>& weights, long dD, long dL);

}  // namespace icoq
