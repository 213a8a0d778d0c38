#pragma once

#include <cmath>

#include "cmse/errors.hpp"

namespace cmse {

/// Resolved diagonal coefficient entries at one frequency: the interior and
/// exterior 2x2 diagonal matrices acting on the (electric, magnetic) rows of
/// the surface equations.
struct CoeffEntries {
  double ci_e = 0.0;
  double ci_h = 0.0;
  double ce_e = 0.0;
  double ce_h = 0.0;
};

/// Selects the representative of the operator equivalence class. The interior
/// and exterior matrices must both be nonzero and their sum invertible; the
/// singular sum choice is rejected outright.
class CoefficientChoice {
 public:
  enum class Preset { c1, c2, custom };

  static CoefficientChoice c1() { return CoefficientChoice(Preset::c1); }
  static CoefficientChoice c2() { return CoefficientChoice(Preset::c2); }
  static CoefficientChoice custom(const CoeffEntries& entries) {
    CoefficientChoice c(Preset::custom);
    c.custom_ = entries;
    c.validate(entries);
    return c;
  }

  Preset preset() const { return preset_; }

  /// Whether the intra-body kernel keeps its strongest (1/R^3) singularity;
  /// the material-matched choice weakens it to 1/R.
  bool weakly_singular() const { return preset_ == Preset::c1; }

  /// Gate for assembling self-blocks under a strongly singular choice; the
  /// finite-part diagonal rule must be opted into explicitly.
  bool allow_hypersingular = false;

  CoeffEntries resolve(double eps_body, double mu_body, double eps_ambient,
                       double mu_ambient) const {
    CoeffEntries e;
    switch (preset_) {
      case Preset::c1:
        e = {eps_body, mu_body, eps_ambient, mu_ambient};
        break;
      case Preset::c2:
        e = {1.0, 0.0, 0.0, 1.0};
        break;
      case Preset::custom:
        e = custom_;
        break;
    }
    validate(e);
    return e;
  }

 private:
  explicit CoefficientChoice(Preset p) : preset_(p) {}

  static void validate(const CoeffEntries& e) {
    if (e.ci_e == 0.0 && e.ci_h == 0.0)
      throw ConfigError("coefficient choice: interior matrix is zero");
    if (e.ce_e == 0.0 && e.ce_h == 0.0)
      throw ConfigError("coefficient choice: exterior matrix is zero");
    if (e.ci_e + e.ce_e == 0.0 || e.ci_h + e.ce_h == 0.0)
      throw ConfigError("coefficient choice: interior+exterior not invertible");
    if (!std::isfinite(e.ci_e) || !std::isfinite(e.ci_h) ||
        !std::isfinite(e.ce_e) || !std::isfinite(e.ce_h))
      throw ConfigError("coefficient choice: non-finite entries");
  }

  Preset preset_;
  CoeffEntries custom_{};
};

}  // namespace cmse
