#include "icoq/wps.hpp"

#include <numeric>

#include "icoq/errors.hpp"

namespace icoq {

std::vector<long> normalize_weights(std::vector<long> w) {
  if (w.empty()) fail("IndexOutOfRange", "weight vector must be nonempty");
  for (long x : w)
    if (x < 1) fail("NonPositiveDegree", "weights must be positive");
  long g = 0;
  for (long x : w) g = std::gcd(g, x);
  for (long& x : w) x /= g;
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < w.size(); ++i) {
      long h = 0;
      for (size_t j = 0; j < w.size(); ++j)
        if (j != i) h = std::gcd(h, w[j]);
      if (h > 1) {
        for (size_t j = 0; j < w.size(); ++j)
          if (j != i) w[j] /= h;
        changed = true;
      }
    }
  }
  return w;
}

Rational wps_kvolume(const std::vector<long>& weights, long d, int dim) {
  if (d < 0) fail("NonPositiveDegree", "hypersurface degree must be nonnegative");
  if (weights.empty()) fail("IndexOutOfRange", "weight vector must be nonempty");
  for (long x : weights)
    if (x < 1) fail("NonPositiveDegree", "weights must be positive");
  if (d == 0) {
    std::vector<long> w = normalize_weights(weights);
    Rational sum(0), prod(1);
    for (long x : w) {
      sum += Rational(x);
      prod *= Rational(x);
    }
    return sum.pow(dim) / prod;
  }
  Rational sum(0), prod(1);
  for (long x : weights) {
    sum += Rational(x);
    prod *= Rational(x);
  }
  return (sum - Rational(d)).pow(dim) * Rational(d) / prod;
}

PencilBound pencil_bound(const std::vector<long>& weights, long dD, long dL) {
  if (dD < 1 || dL < 1) fail("NonPositiveDegree", "branch and pencil degrees must be positive");
  if (weights.empty()) fail("IndexOutOfRange", "weight vector must be nonempty");
  Rational prod(1);
  for (long x : weights) {
    if (x < 1) fail("NonPositiveDegree", "weights must be positive");
    prod *= Rational(x);
  }
  Rational value = Rational(dD) * Rational(dL) / prod;
  PencilBound out{value, "fail", false};
  Rational three(3);
  if (value < three) {
    out.verdict = "pass";
    out.ok = true;
  } else if (value == three) {
    out.verdict = "pass-with-basepoint-condition";
    out.ok = true;
  }
  return out;
}

}  // namespace icoq
