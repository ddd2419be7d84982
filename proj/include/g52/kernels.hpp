#ifndef G52_KERNELS_HPP
#define G52_KERNELS_HPP

namespace g52::kernels {

// Divided differences of exp. Every removable singularity in the closed-form
// exp(ad_U) tables reduces to one of these three kernels, so continuity
// across the loci {x = 0, y = 0, x + y = 0, lambda x + y = 0} is handled in
// one place. Arguments with spread below kSeriesSwitch are evaluated by a
// truncated Taylor series; both branches agree to 1e-12 at the threshold.

inline constexpr double kSeriesSwitch = 1e-4;

/// phi1(t) = (e^t - 1) / t, phi1(0) = 1.
double phi1(double t);

/// First divided difference (e^a - e^b) / (a - b); e^a when a = b.
double exp_dd2(double a, double b);

/// Second divided difference of exp over nodes {a, b, c}, symmetric,
/// confluent nodes allowed.
double exp_dd3(double a, double b, double c);

// Branch internals, exposed for the branch-agreement tests.
double phi1_series(double t);
double phi1_direct(double t);
double exp_dd3_series(double a, double b, double c);
double exp_dd3_direct(double a, double b, double c);

}  // namespace g52::kernels

#endif
