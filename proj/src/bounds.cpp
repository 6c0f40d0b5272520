#include "mcvc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcvc {

BranchingVector::BranchingVector(std::vector<int> decreases) : decreases_(std::move(decreases)) {
  if (decreases_.empty()) throw std::invalid_argument("BranchingVector: empty");
  for (int c : decreases_)
    if (c < 1) throw std::invalid_argument("BranchingVector: entries must be >= 1");
}

double branching_number(const BranchingVector& v) {
  const auto& c = v.decreases();
  // x^c - sum x^(c - c_i) = 0  <=>  sum x^(-c_i) = 1 for x > 0; the left side
  // is strictly decreasing, so bisection on a sign change is safe.
  auto excess = [&](double x) {
    double s = 0.0;
    for (int ci : c) s += std::pow(x, -ci);
    return s - 1.0;
  };
  const double t = static_cast<double>(c.size());
  const int min_c = *std::min_element(c.begin(), c.end());
  double lo = 1.0;
  double hi = std::pow(t, 1.0 / min_c) + 1.0;
  if (excess(lo) <= 0.0) return lo;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entropy_crossover_alpha() {
  // Taking log2 of both sides: a = H(a).
  double lo = 0.5;
  double hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (entropy(mid) - mid > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double tradeoff_f(double beta) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return std::pow(phi, beta) * std::exp2(entropy(beta / (1.0 - beta)) * (1.0 - beta));
}

BetaStar tradeoff_beta_star() {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = 1.0 / 3.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = tradeoff_f(c);
  double fd = tradeoff_f(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = tradeoff_f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = tradeoff_f(d);
    }
  }
  const double beta = 0.5 * (a + b);
  return {beta, tradeoff_f(beta)};
}

double tradeoff_beta_closed_form() { return 0.5 - 1.0 / (2.0 * std::sqrt(3.0 + 2.0 * std::sqrt(5.0))); }

double dense_case_constant() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  return std::cbrt(phi) * std::cbrt(4.0);
}

std::string_view class_name(GraphClass c) {
  switch (c) {
    case GraphClass::general: return "general";
    case GraphClass::chordal: return "chordal";
    case GraphClass::chord5: return "chord5";
    case GraphClass::dh: return "dh";
    case GraphClass::split: return "split";
    case GraphClass::cobipartite: return "cobipartite";
  }
  return "unknown";
}

GraphClass class_from_name(std::string_view name) {
  for (auto c : {GraphClass::general, GraphClass::chordal, GraphClass::chord5, GraphClass::dh, GraphClass::split,
                 GraphClass::cobipartite}) {
    if (class_name(c) == name) return c;
  }
  throw std::invalid_argument("unknown graph class '" + std::string(name) + "'");
}

double class_bound(GraphClass c, int n) {
  if (n < 1) throw std::invalid_argument("class_bound: n must be positive");
  const double x = n;
  switch (c) {
    case GraphClass::general: return std::pow(kGeneralBase, x);
    case GraphClass::chordal: return std::pow(3.0, x / 3.0);
    case GraphClass::chord5: return std::pow(kChord5Base, x);
    case GraphClass::dh: return 2.0 * std::pow(3.0, x / 3.0);
    case GraphClass::split: return x;
    case GraphClass::cobipartite: return x * x / 4.0 + x;
  }
  throw std::invalid_argument("class_bound: unknown class");
}

bool verify_leaf_bound(const EnumerationReport& report, double alpha, int n) {
  return static_cast<double>(report.leaves) <= std::pow(alpha, n) * (1.0 + 1e-9);
}

}  // namespace mcvc
