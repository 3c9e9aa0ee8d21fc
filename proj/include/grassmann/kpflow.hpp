#pragma once
// Numerical KP tau-function machinery: signed log-domain evaluation, dominant
// exponentials, blow-up (sign change) scanning along piecewise-linear flows,
// the moment map, and dominance grids for contour data.

#include <optional>
#include <string>
#include <vector>

#include "grassmann/schubert.hpp"
#include "grassmann/signs.hpp"

namespace gr {

// Spectral parameters lambda_1 < ... < lambda_n, sum zero, with all k-subset
// sums pairwise distinct, plus the sign vector epsilon.
struct SpectralData {
  int n = 0;
  std::vector<double> lambda;
  KPSigns eps;
};

// Default spectrum: lambda_j = j - (n+1)/2 + j^2/(100 n^2), recentered to
// sum 0. The quadratic perturbation breaks subset-sum resonances (plain
// arithmetic spacing has lambda_1+lambda_4 = lambda_2+lambda_3). Subset-sum
// distinctness for this k is asserted at construction.
SpectralData default_spectral(int k, int n, const KPSigns& eps);

// Time vector (t_1 = x, t_2 = y, t_3, ..., t_{n-1}).
using TimeVector = std::vector<double>;

// s * e^L with the sign tracked exactly and the magnitude in log space.
struct SignedLog {
  int sign = 0;  // +1, 0, -1
  double log_mag = 0.0;
};

// prod_{i<j} (lambda_{sigma_j} - lambda_{sigma_i}); positive by ordering.
double vandermonde_minor(const SpectralData& d, const Symbol& s);

// log of the full term of sigma: log minor + sum_{i in sigma} theta(lambda_i).
double log_term(const SpectralData& d, const Symbol& s, const TimeVector& t);

// tau(t) = sum_sigma eps(sigma) * minor(sigma) * exp(theta_sigma), evaluated
// as a signed log-sum-exp over all C(n,k) terms.
SignedLog tau_eval(int k, const SpectralData& d, const TimeVector& t);

// The symbol with the largest log term; `tied` is set when the runner-up is
// within an exact-tie tolerance (a wall of the dominance decomposition).
struct DominantCell {
  Symbol cell;
  std::optional<Symbol> tied;
};
DominantCell dominant_cell(int k, const SpectralData& d, const TimeVector& t);

// A time point where sigma dominates every other cell by at least `radius`
// in log scale. Found by a deterministic perceptron-style ascent; the radius
// is halved on failure down to a floor before giving up (std::runtime_error).
TimeVector cell_center(const Symbol& sigma, const SpectralData& d,
                       double radius = 2.0);

// Sign changes of tau along the piecewise-linear path through `waypoints`,
// sampled `samples` times per segment. Events carry the bracketing parameter
// interval (global arc parameter in [0, #segments]) and the dominant cells
// at the two bracketing samples.
struct CrossingEvent {
  int segment = 0;
  double s_lo = 0.0;
  double s_hi = 0.0;
  Symbol from_cell;
  Symbol to_cell;
};
std::vector<CrossingEvent> blowup_scan(int k, const SpectralData& d,
                                       const std::vector<TimeVector>& waypoints,
                                       int samples = 4096);

// Moment map: sum_sigma w_sigma * indicator(sigma) / sum w_sigma with
// w_sigma = |eps(sigma) E(sigma;t)|^2; lands in the hypersimplex (all
// coordinates in [0,1], coordinate sum k).
std::vector<double> moment_map(int k, const SpectralData& d,
                               const TimeVector& t);

// Row-major (x,y) grid at fixed t_3 (higher times zero): dominant cell and
// tau sign per node. Throws std::length_error above 4e6 nodes.
struct GridCell {
  double x = 0.0;
  double y = 0.0;
  Symbol cell;
  int tau_sign = 0;
};
std::vector<GridCell> dominance_grid(int k, const SpectralData& d, double t3,
                                     double x_lo, double x_hi, double y_lo,
                                     double y_hi, double step);

}  // namespace gr
