#pragma once

#include <vector>

#include "globular/vgraph.hpp"

namespace globular {

/// Flat presentation of a finite n-globular set: cells per dimension with
/// source/target maps satisfying the globular identities.
struct GlobularSet {
  std::vector<FinSet> cells;      // dimensions 0..n
  std::vector<FinFunction> src;   // src[k] : cells[k+1] -> cells[k]
  std::vector<FinFunction> tgt;

  int dim() const { return static_cast<int>(cells.size()) - 1; }

  /// Throws std::invalid_argument unless the maps are well-formed and
  /// ss = st, ts = tt hold exactly.
  void validate() const;

  bool operator==(const GlobularSet& other) const;
};

/// Reads the cells of an enriched graph off its nesting. The k-cells carry
/// address labels (a,b,c) recording the hom pair they live in; 0-cells keep
/// the object labels.
GlobularSet to_globular(const VGraph& g);

/// Rebuilds the recursive form from the flat form (validates the input).
VGraph from_globular(const GlobularSet& s);

/// The canonical isomorphism X -> from_globular(to_globular(X)); its
/// existence is the roundtrip identity up to relabelling.
VGraphMap globular_roundtrip_iso(const VGraph& g);

/// Cell counts per dimension.
std::vector<std::size_t> globular_cell_counts(const VGraph& g);

}  // namespace globular
