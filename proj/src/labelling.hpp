#ifndef JASA_LABELLING_HPP
#define JASA_LABELLING_HPP

namespace jasa {

/// Ceiling with a relative integer guard: values within 1e-9 (relative) of an
/// integer are snapped to it before rounding up, so that analytically exact
/// ratios do not drift across one integer boundary in floating point.
long long guarded_ceil(double x);

/// guarded_ceil clamped to an int, saturating at 1e9 so degenerate inputs
/// (near-zero SNR, error rates grazing one half) yield an unaffordable count
/// rather than overflow.
int saturating_ceil(double x);

/// Probability that a majority vote over `size` independent annotators, each
/// mislabelling with probability `error_prob`, produces the wrong label:
///   sum_{i=(size+1)/2..size} C(size, i) e^i (1-e)^(size-i).
/// `size` must be odd and positive; a majority threshold is otherwise undefined.
double exact_rlep(double error_prob, int size);

/// Chernoff-style closed form (4 e (1-e))^(size/2). Upper-bounds exact_rlep
/// for e < 1/2 and admits even cluster sizes.
double approx_rlep(double error_prob, int size);

/// Smallest cluster size whose approximate RLEP meets `target`:
///   max(1, ceil(2 ln target / ln(4 e (1-e)))).
/// Requires 0 < error_prob < 0.5; at e >= 0.5 no finite cluster can help.
int cluster_size(double error_prob, double target);

/// cluster_size rounded up to the next odd integer, so the majority vote has
/// no ties and exact_rlep certifies the target.
int cluster_size_odd(double error_prob, double target);

}  // namespace jasa

#endif  // JASA_LABELLING_HPP
