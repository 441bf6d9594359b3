#pragma once

#include "g2net/coeffs.hpp"
#include "g2net/diagram.hpp"
#include "g2net/linear_combination.hpp"

namespace g2net {

class MemoCache;

/// The two possible attachments of (lambda, mu, rho, sigma) to the four
/// crossing resolutions. Which one realises the invariant is fixed once by
/// calibration against the standard trefoil value; see calibratedConvention.
enum class CrossingConvention { A, B };

/// The frozen result of the trefoil calibration.
CrossingConvention calibratedConvention();

/// Replaces the crossing (darts d1..d4 counterclockwise, d1-d3 over) by the
/// four crossing-free local tangles. Under convention A the arc pairing
/// {d1-d2, d3-d4} carries lambda, {d2-d3, d4-d1} carries mu, the two-vertex
/// tree grouping {d1,d2|d3,d4} carries rho and {d2,d3|d4,d1} carries sigma;
/// convention B swaps lambda<->mu and rho<->sigma. Crossing count drops by
/// one in every term.
LinearCombination resolveCrossing(const Diagram& d, int crossing,
                                  CrossingConvention conv);
LinearCombination resolveCrossing(const Diagram& d, int crossing);

/// Iterated crossing resolution with term merging by canonical code; all
/// resulting terms are crossing-free. `peakTerms`, when given, receives the
/// largest intermediate term count.
LinearCombination expand(const Diagram& d, CrossingConvention conv,
                         std::size_t* peakTerms = nullptr);
LinearCombination expand(const Diagram& d);

/// Swaps the over strand at one crossing.
Diagram flipCrossing(const Diagram& d, int crossing);

/// Evaluates I(d) - [alpha I(d with the crossing flipped) + beta I(first
/// pairing) + gamma I(second pairing) + delta I(first tree)], where the
/// pairings/tree are taken in the calibrated roles. Zero for the true
/// coefficient table.
FieldValue theorem4Residual(const Diagram& d, int crossing, MemoCache& cache);
FieldValue theorem4Residual(const Diagram& d, int crossing, MemoCache& cache,
                            const CoefficientTable& table);

}  // namespace g2net
