#include "tdloco/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tdloco/errors.hpp"

namespace tdloco {

TransitionMatrix::TransitionMatrix(int order, std::vector<std::int64_t> entries)
    : order_(order), entries_(std::move(entries)) {
  if (order_ <= 0) throw std::invalid_argument("matrix order must be positive");
  if (entries_.size() != static_cast<std::size_t>(order_) * order_) {
    throw std::invalid_argument("matrix is not square");
  }
  if (std::any_of(entries_.begin(), entries_.end(),
                  [](std::int64_t v) { return v < 0; })) {
    throw std::invalid_argument("transition matrix entries must be >= 0");
  }
}

TransitionMatrix TransitionMatrix::from_rows(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int64_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("matrix is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return TransitionMatrix(n, std::move(flat));
}

bool TransitionMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](std::int64_t v) { return v == 0; });
}

bool is_irreducible(const TransitionMatrix& t) {
  const int n = t.order();
  // Every state reaches every other iff state 0 reaches all states both in
  // the graph and in its transpose.
  auto reaches_all = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::vector<int> todo{0};
    seen[0] = 1;
    while (!todo.empty()) {
      const int u = todo.back();
      todo.pop_back();
      for (int v = 0; v < n; ++v) {
        const auto w = transpose ? t.at(v, u) : t.at(u, v);
        if (w > 0 && !seen[v]) {
          seen[v] = 1;
          todo.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
  };
  return reaches_all(false) && reaches_all(true);
}

double dominant_eigenvalue(const TransitionMatrix& t,
                           const PowerIterationOptions& opts,
                           std::span<const double> start) {
  if (t.is_zero()) throw std::invalid_argument("all-zero transition matrix");
  const int n = t.order();
  std::vector<double> x(n, 1.0);
  if (!start.empty()) {
    if (static_cast<int>(start.size()) != n) {
      throw std::invalid_argument("start vector has the wrong length");
    }
    if (std::any_of(start.begin(), start.end(), [](double v) { return !(v > 0); })) {
      throw std::invalid_argument("start vector must be strictly positive");
    }
    x.assign(start.begin(), start.end());
  }

  auto normalize = [](std::vector<double>& v) {
    double norm = 0;
    for (double e : v) norm += e * e;
    norm = std::sqrt(norm);
    for (double& e : v) e /= norm;
  };
  normalize(x);

  std::vector<double> y(n);
  double previous = 0;
  for (long it = 0; it < opts.max_iterations; ++it) {
    for (int r = 0; r < n; ++r) {
      double acc = 0;
      for (int c = 0; c < n; ++c) acc += static_cast<double>(t.at(r, c)) * x[c];
      y[r] = acc;
    }
    // x is unit length, so the Rayleigh quotient is just x . Ax
    double estimate = 0;
    for (int i = 0; i < n; ++i) estimate += x[i] * y[i];
    if (it > 0 && std::abs(estimate - previous) <= opts.tolerance * std::abs(estimate)) {
      return estimate;
    }
    previous = estimate;
    x = y;
    double norm = 0;
    for (double e : x) norm += e * e;
    if (norm == 0) {
      // Nilpotent part swallowed the iterate; the spectral radius is 0.
      return 0.0;
    }
    normalize(x);
  }
  throw ConvergenceError("power iteration did not converge in " +
                         std::to_string(opts.max_iterations) + " iterations");
}

TransitionMatrix q8_transition_matrix() {
  return TransitionMatrix::from_rows({{6, 1, 1, 0, 0},
                                      {5, 1, 1, 1, 0},
                                      {5, 1, 1, 0, 1},
                                      {6, 0, 1, 0, 0},
                                      {6, 1, 0, 0, 0}});
}

TransitionMatrix q4_transition_matrix() {
  return TransitionMatrix::from_rows({{3, 0, 1}, {3, 0, 0}, {2, 1, 1}});
}

TransitionMatrix build_constraint_adjacency(int alphabet_size,
                                            std::span<const Pattern3> forbidden) {
  if (alphabet_size <= 0) throw std::invalid_argument("empty alphabet");
  const int q = alphabet_size;
  for (const auto& p : forbidden) {
    for (int s : p) {
      if (s < 0 || s >= q) {
        throw std::invalid_argument("forbidden pattern symbol outside the alphabet");
      }
    }
  }
  const int states = q * q;
  std::vector<std::int64_t> adj(static_cast<std::size_t>(states) * states, 0);
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      for (int z = 0; z < q; ++z) {
        const Pattern3 word{x, y, z};
        if (std::find(forbidden.begin(), forbidden.end(), word) != forbidden.end()) {
          continue;
        }
        adj[(x * q + y) * states + (y * q + z)] = 1;
      }
    }
  }
  return TransitionMatrix(states, std::move(adj));
}

double round_to(double value, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(value * scale) / scale;
}

double CapacityPair::reported_gap() const {
  return round_to(round_to(q8.normalized, 4) - round_to(q4.normalized, 4), 4);
}

CapacityPair capacities(const PowerIterationOptions& opts) {
  CapacityPair out;
  out.q8.lambda = dominant_eigenvalue(q8_transition_matrix(), opts);
  out.q8.capacity_bits = std::log2(out.q8.lambda);
  out.q8.normalized = out.q8.capacity_bits / 3.0;
  out.q4.lambda = dominant_eigenvalue(q4_transition_matrix(), opts);
  out.q4.capacity_bits = std::log2(out.q4.lambda);
  out.q4.normalized = (out.q4.capacity_bits + 1.0) / 3.0;
  return out;
}

}  // namespace tdloco
