#pragma once

#include <string>
#include <vector>

#include "spectre/filtration.hpp"
#include "spectre/graph.hpp"
#include "spectre/persistence.hpp"
#include "spectre/spectral.hpp"

namespace spectre {

enum class DiagramKind { ph, rephine, spectre, ls };

std::string to_string(DiagramKind kind);          // "PH", "RePHINE", "SpectRe", "LS"
DiagramKind diagram_kind_from_string(const std::string& name);

// One diagram entry.  Field use depends on the diagram kind:
//   PH      : (b, d)
//   RePHINE : (b, d, alpha, gamma)
//   SpectRe : (b, d, alpha, gamma, rho)
//   LS      : (b, d, rho)
// Unused fields stay at their defaults and never influence comparisons.
// rho_skipped marks entries whose spectrum a scheduled policy skipped; such
// entries only ever equal other skipped entries.  gamma_sentinel records
// that gamma is the 0 placeholder of an isolated vertex.  src_vertex /
// src_edge are provenance and excluded from comparison and serialization.
struct DescriptorTuple {
  double b = 0.0;
  double d = kInf;
  double alpha = 0.0;
  double gamma = 0.0;
  std::vector<double> rho;
  bool rho_skipped = false;
  bool gamma_sentinel = false;
  int src_vertex = -1;
  Edge src_edge{-1, -1};
};

struct Diagram {
  DiagramKind kind = DiagramKind::rephine;
  std::vector<DescriptorTuple> dim0;
  std::vector<DescriptorTuple> dim1;
  // Metadata; serialized only when non-default.  Counts rather than vertex
  // ids so canonical output is invariant under relabeling.
  double edge_shift = 0.0;
  int gamma_sentinels = 0;
};

// Death-time descriptor with color terms, from the edge filtration
// (Fig. 2 RePHINE row).  dim0 holds one tuple (0, d, alpha, gamma) per
// vertex where alpha is the vertex's own filtration value and gamma the
// minimum incident edge value (0 with a sentinel flag when the vertex is
// isolated).  At each merge the dying vertex is the one with greater alpha;
// on a tie the one with lower gamma; on a full tie the lower index.  dim1
// holds (1, d, 0, 0) per independent cycle at its edge arrival time.
// flip_index_ties forces the opposite pick when alpha and gamma both tie;
// the canonical diagram must not depend on it (checked by tests).
Diagram rephine_from_values(const ColoredGraph& g, const FiltrationValues& values,
                            bool flip_index_ties = false);
Diagram compute_rephine(const ColoredGraph& g, const ColorFiltrationSpec& spec);

// RePHINE extended with rho: the non-zero Laplacian spectrum of the dying
// vertex's merged component at its death time, of the final component for
// never-dying vertices, and of the surrounding component at birth for
// cycles.  The policy controls how (and whether) each event's spectrum is
// evaluated.
Diagram spectre_from_values(const ColoredGraph& g, const FiltrationValues& values,
                            const SpectrumPolicy& policy = {});
Diagram compute_spectre(const ColoredGraph& g, const ColorFiltrationSpec& spec,
                        const SpectrumPolicy& policy = {});

// SpectRe with alpha and gamma dropped.
Diagram ls_from_values(const ColoredGraph& g, const FiltrationValues& values,
                       const SpectrumPolicy& policy = {});
Diagram compute_ls(const ColoredGraph& g, const ColorFiltrationSpec& spec,
                   const SpectrumPolicy& policy = {});

// Wraps a bare persistence diagram as kind PH.
Diagram diagram_from_ph(const PHDiagram& ph);

// Sorts each dimension by (b, d, alpha, gamma, rho lexicographic, skipped),
// +inf greatest.  Idempotent.
Diagram canonicalize(Diagram d);

// Componentwise comparison of canonical forms under the kind's active
// fields.  +inf matches only +inf; rho lists must have equal length and
// match elementwise within tol; skipped spectra only match skipped spectra.
// Throws input_error if the kinds differ.
bool multiset_equal(const Diagram& a, const Diagram& b, double tol);

// Canonical JSON:
//   {"kind":"SpectRe","dim0":[[0.0,1.0,2.0,1.0,[2.0]],...],
//    "dim1":[[1.0,3.0,0.0,0.0,[2.0,2.0,4.0]]]}
// with "inf" for +inf and "skipped" in place of a skipped rho list.  Rows
// carry exactly the kind's active fields.
std::string serialize_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& json_text);

}  // namespace spectre
