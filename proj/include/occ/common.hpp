#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace occ {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;

// Default comparison tolerances: relative 1e-9 with absolute floor 1e-12.
constexpr double kRelTol = 1e-9;
constexpr double kAbsTol = 1e-12;

enum class ErrorKind {
  kSingularSeries,
  kOrderUnderflow,
  kInvalidCoordinate,
  kDomain,
  kSingularSewing,
  kCollision,
  kGeometry,
  kInternalConsistency,
  kDepthInsufficient,
  kSchema,
  kSubalgebra,
  kShapeMismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// log z = log|z| + i arg z with arg z in [0, 2pi).
inline cplx log_branch(cplx z) {
  if (z == cplx(0.0, 0.0))
    throw Error(ErrorKind::kInvalidCoordinate, "log of zero");
  double a = std::arg(z);  // (-pi, pi]
  if (a < 0.0) a += 2.0 * kPi;
  return cplx(std::log(std::abs(z)), a);
}

// z^p on the fixed branch.
inline cplx pow_branch(cplx z, cplx p) { return std::exp(p * log_branch(z)); }

inline bool close(cplx a, cplx b, double rel = kRelTol, double abs = kAbsTol) {
  double d = std::abs(a - b);
  return d <= abs + rel * std::max(std::abs(a), std::abs(b));
}

inline bool close(double a, double b, double rel = kRelTol,
                  double abs = kAbsTol) {
  return close(cplx(a, 0), cplx(b, 0), rel, abs);
}

}  // namespace occ
