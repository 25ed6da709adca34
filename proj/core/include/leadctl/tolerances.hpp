#pragma once

namespace leadctl {

/// Numeric thresholds used across the analyses. One knob (`scaled`) moves
/// them together so the relative calibration stays fixed.
struct Tolerances {
  /// Eigenvalues closer than spectrum_gap * (1 + ||m||_inf) are merged into
  /// one eigenspace.
  double spectrum_gap = 1e-8;

  /// A coordinate y_i counts as zero iff |y_i| <= coord_zero * ||y||_inf.
  double coord_zero = 1e-8;

  /// Singular values below kernel_rank * max(sigma_max, 1) are treated as
  /// zero when computing kernels of eigenbasis row blocks. The absolute
  /// floor matters: a numerically-zero block has sigma_max ~ 1e-16, and a
  /// purely relative cutoff would report it full-rank.
  double kernel_rank = 1e-9;

  /// Rank decision for the controllability matrix: sigma below
  /// kalman_rank * sigma_max * max(N, N*M) is zero.
  double kalman_rank = 1e-7;

  /// Two eigenvalues collide iff |a - b| <= eigen_match * (1 + ||L||_inf).
  double eigen_match = 1e-7;

  /// All knobs scaled so that `base` plays the role of the default 1e-8.
  static Tolerances scaled(double base) {
    Tolerances t;
    t.spectrum_gap = base;
    t.coord_zero = base;
    t.kernel_rank = base * 0.1;
    t.kalman_rank = base * 10.0;
    t.eigen_match = base * 10.0;
    return t;
  }
};

}  // namespace leadctl
