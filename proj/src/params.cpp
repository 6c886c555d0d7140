#include "rampsi/params.hpp"

#include "rampsi/errors.hpp"

#include <cmath>

namespace rampsi {

void EvalParams::validate() const {
  if (!(tol >= kMinTolerance) || !std::isfinite(tol)) {
    throw DomainError("EvalParams: tol must be finite and >= 1e-15");
  }
  if (k_terms < 1) throw DomainError("EvalParams: k_terms must be >= 1");
  if (n_terms < 1) throw DomainError("EvalParams: n_terms must be >= 1");
  if (!(guard_delta > 0.0 && guard_delta < 0.25)) {
    throw DomainError("EvalParams: guard_delta must lie in (0, 1/4)");
  }
}

}  // namespace rampsi
