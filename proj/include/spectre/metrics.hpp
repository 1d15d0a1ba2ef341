#pragma once

#include <utility>
#include <vector>

#include "spectre/descriptors.hpp"
#include "spectre/filtration.hpp"

namespace spectre {

// Ground distance on tuples.
//   rephine: d  = max(|b0-b1|, |d0-d1|) + |alpha0-alpha1| + |gamma0-gamma1|
//   spectre: d' = d + l1 distance of the rho lists, ascending-sorted and
//            zero-padded to a common length.
// Differences against +inf follow |inf - inf| = 0, |inf - finite| = inf.
enum class TupleDistanceKind { rephine, spectre };

double abs_diff_ext(double x, double y);
double spec_distance(const std::vector<double>& rho0, const std::vector<double>& rho1);
double tuple_distance(const DescriptorTuple& a, const DescriptorTuple& b,
                      TupleDistanceKind kind);

struct MatchResult {
  double value = 0.0;                          // kInf when no finite matching exists
  std::vector<std::pair<int, int>> matching;   // (index into A, index into B)
};

// Exact bottleneck assignment: minimizes, over bijections A -> B, the
// maximum tuple distance, by binary search over the sorted pairwise
// distances with a perfect-matching feasibility check per probe.  The
// optimum is always attained, so value is one of the pairwise distances
// (or +inf when every bijection crosses an infinite pair).  Throws
// input_error when |A| != |B|.
MatchResult bott(const std::vector<DescriptorTuple>& a,
                 const std::vector<DescriptorTuple>& b, TupleDistanceKind kind);

struct DiagramDistance {
  double value = 0.0;
  MatchResult dim0;
  MatchResult dim1;
};

// Bottleneck-style diagram distances: the dim0 and dim1 assignment values
// summed.  d_B_R compares RePHINE diagrams under d; d_B_SpecR compares
// SpectRe diagrams under d'.  Cardinalities must match per dimension.
DiagramDistance d_B_R(const Diagram& df, const Diagram& dg);
DiagramDistance d_B_SpecR(const Diagram& df, const Diagram& dg);

// Componentwise sup distances (max |f_v - g_v| over colors, max |f_e - g_e|
// over color pairs).  Throws input_error when the key sets differ.
std::pair<double, double> filtration_sup_distance(const ColorFiltrationSpec& f,
                                                  const ColorFiltrationSpec& g);

}  // namespace spectre
