#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectre/graph.hpp"

namespace spectre {

// Dense symmetric matrix, packed lower triangle.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2) {}

  int size() const { return n_; }

  double& at(int i, int j) { return a_[idx(i, j)]; }
  double at(int i, int j) const { return a_[idx(i, j)]; }

  // y = M x
  void multiply(const std::vector<double>& x, std::vector<double>& y) const;

  double trace() const;

 private:
  static std::size_t idx(int i, int j) {
    if (i < j) std::swap(i, j);
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
  }
  int n_ = 0;
  std::vector<double> a_;
};

// Full eigenvalue list, ascending.  approximate stays false: the dense path
// resolves every eigenvalue.
struct Spectrum {
  std::vector<double> values;
  bool approximate = false;
  int iterations = 0;
};

// Graph Laplacian D - A of the subgraph induced by the given component
// (vertices listed ascending).  Rows follow the component order.  Throws
// input_error if the component repeats or leaves the vertex range.
SymmetricMatrix laplacian(const ColoredGraph& g, const std::vector<int>& component);

// All eigenvalues of a symmetric matrix via Householder tridiagonalization
// followed by implicit-shift QL.  The iteration runs in extended precision
// and results are rounded to double, so the returned values depend only on
// the eigenvalue multiset, not on the row order of m.  Throws
// numerical_error if some eigenvalue fails to converge.
Spectrum eigenvalues_full(const SymmetricMatrix& m);

struct PowerResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Largest eigenvalue of a positive semidefinite symmetric matrix by power
// iteration from a seeded random start vector.  Stops once the relative
// residual ||Mv - lambda v|| / max(lambda, 1) drops below tol; returns the
// best estimate with converged=false if max_iter is exhausted.
PowerResult power_method(const SymmetricMatrix& m, int max_iter, double tol,
                         std::uint64_t seed);

// Non-zero part of an ascending eigenvalue list: drops exactly zero_count
// leading entries.  Zero eigenvalues are identified by count (one per
// connected component for a Laplacian), never by magnitude; the guard only
// rejects lists whose dropped entries are far from zero, which indicates a
// caller error.
std::vector<double> drop_zero_eigenvalues(std::vector<double> ascending, int zero_count);

// Non-zero spectrum of the edge Laplacian (boundary^T boundary) of the
// subgraph induced by a connected component.  Equals the non-zero vertex
// Laplacian spectrum of the same subgraph; exposed so that identity can be
// checked through an independent route.
std::vector<double> delta1_nonzero_spectrum(const ColoredGraph& g,
                                            const std::vector<int>& component);

// How spectra are produced per event.
//   full:      dense solve for every event.
//   partial:   dense solve up to partial_threshold vertices, beyond that a
//              single power-method estimate of the largest eigenvalue.
//   scheduled: only a sched_fraction share of the event sequence is
//              evaluated (evenly spaced, final event always included) using
//              the inner mode; the rest are reported skipped.
enum class SpectrumMode { full, partial, scheduled };

struct SpectrumPolicy {
  SpectrumMode mode = SpectrumMode::full;
  SpectrumMode inner = SpectrumMode::partial;  // used by scheduled
  int partial_threshold = 9;
  double sched_fraction = 1.0 / 3.0;
  double power_tol = 1e-8;
  int power_max_iter = 50000;
  std::uint64_t seed = 1;
};

// Evaluated event indices for a scheduled run over total events: the
// ceil(total * fraction) indices floor((j + 1) * total / m) - 1, which are
// evenly spaced and end at total - 1.
std::vector<int> scheduled_indices(int total, double fraction);

// Spectrum of the component's Laplacian within g under the policy, for the
// event at event_index out of total_events.  nullopt marks an event the
// schedule skipped; skipped spectra are never substituted or interpolated.
std::optional<Spectrum> spectrum_for_event(const ColoredGraph& g,
                                           const std::vector<int>& component,
                                           const SpectrumPolicy& policy,
                                           int event_index, int total_events);

}  // namespace spectre
