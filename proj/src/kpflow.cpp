#include "grassmann/kpflow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gr {

SpectralData default_spectral(int k, int n, const KPSigns& eps) {
  validate_ambient(k, n);
  SpectralData d;
  d.n = n;
  d.eps = eps;
  d.lambda.resize(n);
  double mean = 0.0;
  for (int j = 1; j <= n; ++j) {
    d.lambda[j - 1] = j - (n + 1) / 2.0 +
                      static_cast<double>(j) * j / (100.0 * n * n);
    mean += d.lambda[j - 1];
  }
  mean /= n;
  for (double& l : d.lambda) l -= mean;

  // the quadratic perturbation breaks the arithmetic-progression resonances,
  // but not every subset-sum tie (k >= 3 has deeper ones), so check
  std::vector<double> sums;
  for (const Symbol& s : enum_symbols(k, n)) {
    double acc = 0.0;
    for (int i : s.e) acc += d.lambda[i - 1];
    sums.push_back(acc);
  }
  std::sort(sums.begin(), sums.end());
  for (size_t i = 1; i < sums.size(); ++i)
    if (sums[i] - sums[i - 1] < 1e-9)
      throw std::invalid_argument(
          "default spectrum has a subset-sum resonance for this (k,n); "
          "supply custom spectral parameters");
  return d;
}

namespace {

double theta(const SpectralData& d, int entry, const TimeVector& t) {
  double lam = d.lambda[entry - 1];
  double acc = 0.0, p = 1.0;
  for (double tr : t) {
    p *= lam;
    acc += p * tr;
  }
  return acc;
}

}  // namespace

double vandermonde_minor(const SpectralData& d, const Symbol& s) {
  double prod = 1.0;
  for (size_t i = 0; i < s.e.size(); ++i)
    for (size_t j = i + 1; j < s.e.size(); ++j)
      prod *= d.lambda[s.e[j] - 1] - d.lambda[s.e[i] - 1];
  return prod;
}

double log_term(const SpectralData& d, const Symbol& s, const TimeVector& t) {
  double acc = std::log(vandermonde_minor(d, s));
  for (int i : s.e) acc += theta(d, i, t);
  return acc;
}

SignedLog tau_eval(int k, const SpectralData& d, const TimeVector& t) {
  auto symbols = enum_symbols(k, d.n);
  std::vector<double> logs(symbols.size());
  double peak = -HUGE_VAL;
  for (size_t i = 0; i < symbols.size(); ++i) {
    logs[i] = log_term(d, symbols[i], t);
    peak = std::max(peak, logs[i]);
  }
  double acc = 0.0;
  for (size_t i = 0; i < symbols.size(); ++i)
    acc += cell_sign(symbols[i], d.eps) * std::exp(logs[i] - peak);
  SignedLog out;
  if (acc == 0.0) {
    out.sign = 0;
    out.log_mag = -HUGE_VAL;
  } else {
    out.sign = acc > 0 ? 1 : -1;
    out.log_mag = peak + std::log(std::fabs(acc));
  }
  return out;
}

DominantCell dominant_cell(int k, const SpectralData& d, const TimeVector& t) {
  auto symbols = enum_symbols(k, d.n);
  int best = -1, second = -1;
  std::vector<double> logs(symbols.size());
  for (size_t i = 0; i < symbols.size(); ++i) {
    logs[i] = log_term(d, symbols[i], t);
    if (best < 0 || logs[i] > logs[best]) {
      second = best;
      best = static_cast<int>(i);
    } else if (second < 0 || logs[i] > logs[second]) {
      second = static_cast<int>(i);
    }
  }
  DominantCell out;
  out.cell = symbols[best];
  if (second >= 0 && logs[best] - logs[second] < 1e-9)
    out.tied = symbols[second];
  return out;
}

TimeVector cell_center(const Symbol& sigma, const SpectralData& d,
                       double radius) {
  auto symbols = enum_symbols(sigma.k, d.n);
  int target = -1;
  for (size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i].e == sigma.e) target = static_cast<int>(i);
  if (target < 0) throw std::invalid_argument("cell not in this Grassmannian");

  // log_term is affine in t: gradient = power-sum feature of the cell.
  int dims = d.n - 1;
  auto feature = [&](const Symbol& s) {
    std::vector<double> f(dims, 0.0);
    for (int entry : s.e) {
      double lam = d.lambda[entry - 1], p = 1.0;
      for (int r = 0; r < dims; ++r) {
        p *= lam;
        f[r] += p;
      }
    }
    return f;
  };
  std::vector<std::vector<double>> feats(symbols.size());
  std::vector<double> offs(symbols.size());
  for (size_t i = 0; i < symbols.size(); ++i) {
    feats[i] = feature(symbols[i]);
    offs[i] = std::log(vandermonde_minor(d, symbols[i]));
  }

  for (double rad = radius; rad >= 1e-3; rad /= 2) {
    TimeVector t(dims, 0.0);
    bool ok = false;
    for (int iter = 0; iter < 20000 && !ok; ++iter) {
      // worst competitor under the current t
      int worst = -1;
      double worst_val = -HUGE_VAL;
      double own = offs[target];
      for (int r = 0; r < dims; ++r) own += feats[target][r] * t[r];
      for (size_t i = 0; i < symbols.size(); ++i) {
        if (static_cast<int>(i) == target) continue;
        double v = offs[i];
        for (int r = 0; r < dims; ++r) v += feats[i][r] * t[r];
        if (v > worst_val) {
          worst_val = v;
          worst = static_cast<int>(i);
        }
      }
      double gap = own - worst_val;
      if (gap >= rad) {
        ok = true;
        break;
      }
      // relaxation step: project onto "own - worst >= rad * 1.5"
      std::vector<double> dir(dims);
      double norm2 = 0.0;
      for (int r = 0; r < dims; ++r) {
        dir[r] = feats[target][r] - feats[worst][r];
        norm2 += dir[r] * dir[r];
      }
      if (norm2 <= 0.0) break;  // identical features: infeasible pair
      double step = (1.5 * rad - gap) / norm2;
      for (int r = 0; r < dims; ++r) t[r] += step * dir[r];
    }
    if (ok) return t;
  }
  throw std::runtime_error("no dominance point found for this cell");
}

std::vector<CrossingEvent> blowup_scan(int k, const SpectralData& d,
                                       const std::vector<TimeVector>& waypoints,
                                       int samples) {
  if (waypoints.size() < 2)
    throw std::invalid_argument("need at least two waypoints");
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  std::vector<CrossingEvent> events;
  int dims = d.n - 1;
  auto at = [&](const TimeVector& a, const TimeVector& b, double u) {
    TimeVector t(dims, 0.0);
    for (int r = 0; r < dims; ++r) {
      double av = r < static_cast<int>(a.size()) ? a[r] : 0.0;
      double bv = r < static_cast<int>(b.size()) ? b[r] : 0.0;
      t[r] = av + (bv - av) * u;
    }
    return t;
  };
  int prev_sign = 0;
  Symbol prev_cell{};
  double prev_s = 0.0;
  bool have_prev = false;
  for (size_t seg = 0; seg + 1 < waypoints.size(); ++seg) {
    for (int j = seg == 0 ? 0 : 1; j <= samples; ++j) {
      double u = static_cast<double>(j) / samples;
      TimeVector t = at(waypoints[seg], waypoints[seg + 1], u);
      SignedLog tau = tau_eval(k, d, t);
      Symbol cell = dominant_cell(k, d, t).cell;
      double s = seg + u;
      if (have_prev && tau.sign != 0 && prev_sign != 0 &&
          tau.sign != prev_sign) {
        CrossingEvent ev;
        ev.segment = static_cast<int>(seg);
        ev.s_lo = prev_s;
        ev.s_hi = s;
        ev.from_cell = prev_cell;
        ev.to_cell = cell;
        events.push_back(ev);
      }
      if (tau.sign != 0) {
        prev_sign = tau.sign;
        prev_cell = cell;
        prev_s = s;
        have_prev = true;
      }
    }
  }
  return events;
}

std::vector<double> moment_map(int k, const SpectralData& d,
                               const TimeVector& t) {
  auto symbols = enum_symbols(k, d.n);
  std::vector<double> logs(symbols.size());
  double peak = -HUGE_VAL;
  for (size_t i = 0; i < symbols.size(); ++i) {
    logs[i] = log_term(d, symbols[i], t);
    peak = std::max(peak, logs[i]);
  }
  std::vector<double> mu(d.n, 0.0);
  double z = 0.0;
  for (size_t i = 0; i < symbols.size(); ++i) {
    double w = std::exp(2.0 * (logs[i] - peak));
    z += w;
    for (int entry : symbols[i].e) mu[entry - 1] += w;
  }
  for (double& x : mu) x /= z;
  return mu;
}

std::vector<GridCell> dominance_grid(int k, const SpectralData& d, double t3,
                                     double x_lo, double x_hi, double y_lo,
                                     double y_hi, double step) {
  if (step <= 0) throw std::invalid_argument("step must be positive");
  if (x_hi < x_lo || y_hi < y_lo)
    throw std::invalid_argument("empty grid range");
  int nx = static_cast<int>(std::floor((x_hi - x_lo) / step)) + 1;
  int ny = static_cast<int>(std::floor((y_hi - y_lo) / step)) + 1;
  if (static_cast<double>(nx) * ny > 4e6)
    throw std::length_error("grid exceeds the node budget");
  int dims = d.n - 1;
  std::vector<GridCell> out;
  out.reserve(static_cast<size_t>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      TimeVector t(dims, 0.0);
      t[0] = x_lo + ix * step;
      if (dims > 1) t[1] = y_lo + iy * step;
      if (dims > 2) t[2] = t3;
      GridCell cell;
      cell.x = t[0];
      cell.y = dims > 1 ? t[1] : 0.0;
      cell.cell = dominant_cell(k, d, t).cell;
      cell.tau_sign = tau_eval(k, d, t).sign;
      out.push_back(cell);
    }
  }
  return out;
}

}  // namespace gr
