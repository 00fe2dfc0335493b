#pragma once

// Noiseless capacity of the two symbol constraints: log2 of the Perron root
// of the state-transition matrix.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "tdloco/symbols.hpp"

namespace tdloco {

/// Square matrix of non-negative integer edge counts.
class TransitionMatrix {
 public:
  // Throws std::invalid_argument on an empty order or a negative entry.
  TransitionMatrix(int order, std::vector<std::int64_t> entries);
  // Throws std::invalid_argument on ragged rows.
  static TransitionMatrix from_rows(
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  int order() const { return order_; }
  std::int64_t at(int row, int col) const { return entries_[row * order_ + col]; }
  bool is_zero() const;

 private:
  int order_;
  std::vector<std::int64_t> entries_;
};

// Strong connectivity of the graph whose edges are the nonzero entries.
bool is_irreducible(const TransitionMatrix& t);

struct PowerIterationOptions {
  double tolerance = 1e-9;  // relative change between successive estimates
  long max_iterations = 1'000'000;
};

// Perron root by power iteration with Rayleigh-quotient estimates. The start
// vector defaults to all ones; a supplied one must be strictly positive.
// Throws std::invalid_argument for an all-zero matrix or a bad start vector,
// ConvergenceError when the iteration cap is reached.
double dominant_eigenvalue(const TransitionMatrix& t,
                           const PowerIterationOptions& opts = {},
                           std::span<const double> start = {});

// The 5-state diagram for the GF(8) constraint and the 3-state diagram for
// the GF(4) constraint.
TransitionMatrix q8_transition_matrix();
TransitionMatrix q4_transition_matrix();

// Adjacency of the order-2 De Bruijn graph over the alphabet with the edges
// xy -> yz removed for every forbidden xyz. States are ordered by
// x * alphabet_size + y.
TransitionMatrix build_constraint_adjacency(int alphabet_size,
                                            std::span<const Pattern3> forbidden);

struct CapacityReport {
  double lambda = 0;
  double capacity_bits = 0;  // log2(lambda)
  double normalized = 0;
};

struct CapacityPair {
  // C = log2(lambda), normalized C / 3.
  CapacityReport q8;
  // C' = log2(lambda'), normalized (C' + 1) / 3 for the whole scheme,
  // counting the selection bit.
  CapacityReport q4;

  double gap() const { return q8.normalized - q4.normalized; }
  // Difference of the normalized capacities after rounding each to 4
  // decimals, which is how the gap is usually quoted (0.0054).
  double reported_gap() const;
};

CapacityPair capacities(const PowerIterationOptions& opts = {});

double round_to(double value, int places);

}  // namespace tdloco
