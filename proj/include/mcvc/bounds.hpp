#pragma once

#include <string_view>
#include <vector>

#include "mcvc/report.hpp"

namespace mcvc {

/// Measure decreases (c_1, ..., c_t) of one branching rule; all entries >= 1.
class BranchingVector {
 public:
  explicit BranchingVector(std::vector<int> decreases);
  const std::vector<int>& decreases() const { return decreases_; }

 private:
  std::vector<int> decreases_;
};

/// Unique root >= 1 of x^c - x^(c-c_1) - ... - x^(c-c_t), c = max c_i.
double branching_number(const BranchingVector& v);

/// Binary entropy; H(0) = H(1) = 0. Throws std::domain_error outside [0, 1].
double entropy(double x);

/// Root in (1/2, 1) of 2^a = (1/a)^a (1/(1-a))^(1-a).
double entropy_crossover_alpha();

/// The sub-leaf/subset trade-off f(b) = phi^b * 2^(H(b/(1-b)) (1-b)).
double tradeoff_f(double beta);

struct BetaStar {
  double beta;
  double f_value;
};

/// Maximiser of tradeoff_f on (0, 1/3) by golden-section search.
BetaStar tradeoff_beta_star();
/// 1/2 - 1/(2 sqrt(3 + 2 sqrt 5)).
double tradeoff_beta_closed_form();
/// phi^(1/3) * 2^(2/3).
double dense_case_constant();

enum class GraphClass { general, chordal, chord5, dh, split, cobipartite };

std::string_view class_name(GraphClass c);
/// Throws std::invalid_argument for unknown tags.
GraphClass class_from_name(std::string_view name);

/// Upper bound on the number of minimal connected vertex covers of an
/// n-vertex graph in the class.
double class_bound(GraphClass c, int n);

/// Base of the exponential leaf bound for the class's branching algorithm.
inline constexpr double kGeneralBase = 1.8668;
inline constexpr double kChord5Base = 1.6181;

/// leaves <= alpha^n with 1e-9 relative slack.
bool verify_leaf_bound(const EnumerationReport& report, double alpha, int n);

}  // namespace mcvc
