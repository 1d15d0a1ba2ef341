#pragma once

#include <vector>

#include "spectre/filtration.hpp"
#include "spectre/graph.hpp"

namespace spectre {

// One persistence pair; death == kInf marks a feature of the final graph.
struct PersistencePair {
  double birth = 0.0;
  double death = kInf;
  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

struct PHDiagram {
  std::vector<PersistencePair> dim0;
  std::vector<PersistencePair> dim1;
};

// Two components joined when this edge arrived.  Roots identify components
// across the trace (a component keeps its surviving root's id), so consumers
// can replay the merge history under their own survival rule.  Vertex lists
// are sorted.
struct MergeEvent {
  double time = 0.0;
  Edge edge;
  int surviving_root = -1;
  int dying_root = -1;
  int surviving_vertex = -1;  // elder representative of the surviving side
  int dying_vertex = -1;      // elder representative of the dying side, owns the pair
  double dying_birth = 0.0;
  std::vector<int> members_surviving;  // before the union
  std::vector<int> members_dying;
  std::vector<int> members_after;
  // Component of the edge in the sublevel graph once every cell of this
  // timestamp has been inserted.  This is the component a death at this time
  // belongs to, independent of the insertion micro-order.
  std::vector<int> component_at_time;
};

// This edge closed a cycle: endpoints already connected when it arrived.
struct CycleEvent {
  double time = 0.0;
  Edge edge;
  std::vector<int> component_at_time;
};

// Chronological record of one union-find sweep over a filtration.
struct MergeTrace {
  FiltrationKind kind = FiltrationKind::edge;
  std::vector<MergeEvent> merges;
  std::vector<CycleEvent> cycles;

  // Interleaved processing order of the events above.
  struct EventRef {
    enum class Type { merge, cycle };
    Type type;
    int index;  // into merges or cycles
  };
  std::vector<EventRef> order;

  // Components of the final graph, by surviving root.
  std::vector<int> final_roots;
  std::vector<int> final_vertices;  // elder representative per final component
  std::vector<double> final_births;
  std::vector<std::vector<int>> final_members;
};

struct PersistenceResult {
  PHDiagram diagram;
  MergeTrace trace;
};

// Single-pass union-find sweep over the sublevel filtration of the given
// kind.  Vertices of equal value enter before edges of that value; edges of
// equal value enter in canonical (min, max) lexicographic order.  Deaths
// follow the elder rule: at a merge the component with the older birth
// survives, ties broken toward the lower representative index, and the
// younger side's pair (its birth, current time) is emitted.  Each cycle-
// closing edge emits a dim1 pair (current time, +inf).
//
// edge_order, when given, overrides the canonical micro-order: it must be a
// permutation of edge indices that is still sorted by filtration value.
// The resulting pair multisets do not depend on that micro-order; the hook
// exists so tests can check exactly that.
PersistenceResult compute_persistence(const ColoredGraph& g,
                                      const FiltrationValues& values,
                                      FiltrationKind kind,
                                      const std::vector<int>* edge_order = nullptr);

// Convenience forms.
PHDiagram compute_ph(const ColoredGraph& g, const FiltrationValues& values,
                     FiltrationKind kind);

}  // namespace spectre
