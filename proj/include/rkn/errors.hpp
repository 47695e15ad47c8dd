#pragma once

#include <stdexcept>
#include <string>

namespace rkn {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A stage evaluation or state update produced a non-finite value.
///
/// `stage` is the zero-based stage index that blew up; the stage count `m`
/// denotes the final position/velocity update, and -1 means the failure
/// happened inside a user-supplied acceleration callback that could not
/// attribute it to a stage. `step` is the zero-based index of the failing
/// step once a driver has annotated it (-1 for a bare `step` call).
class BlowupError : public Error {
  public:
    BlowupError(const std::string& what, int stage, long long step = -1)
        : Error(what), stage_(stage), step_(step) {}

    int stage() const noexcept { return stage_; }
    long long step() const noexcept { return step_; }

  private:
    int stage_;
    long long step_;
};

/// The spectral assumptions behind the phase-lag formulas fail at the
/// requested frequency: Q(z^2) <= 0, or |R/(2 sqrt Q)| exceeds 1 beyond the
/// allowed slack (the one-step propagator no longer has complex conjugate
/// eigenvalues on the unit-modulus branch).
class AnalysisRangeError : public Error {
  public:
    using Error::Error;
};

/// The phase-fitting condition has no usable root at the requested
/// frequency (z outside the method's fitting range).
class FittingError : public Error {
  public:
    using Error::Error;
};

/// Samples of |phase lag| on the given z-grid do not follow a power law.
class NoPowerLawError : public Error {
  public:
    using Error::Error;
};

/// An accuracy measurement was requested for a problem that carries no
/// analytic solution.
class MissingSolutionError : public Error {
  public:
    using Error::Error;
};

}  // namespace rkn
