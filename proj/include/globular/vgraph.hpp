#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "globular/finset.hpp"

namespace globular {

/// Enriched graph over the recursive finite base: a graph of dimension 0 is
/// a bare finite set of cells; a graph of dimension d >= 1 has a finite set
/// of objects and, for every ordered pair of objects, a hom graph of
/// dimension d-1. Dimension-n graphs are the same thing as finite n-globular
/// sets. Homs that are empty at every level are not stored; hom() returns
/// the canonical initial graph for absent pairs.
class VGraph {
 public:
  using HomMap = std::map<std::pair<Label, Label>, VGraph>;

  VGraph();  // dimension-0 empty set

  static VGraph cells(FinSet s);  // dimension 0
  static VGraph make(int dim, FinSet objects, HomMap homs);
  static VGraph initial(int dim);
  static VGraph terminal(int dim);
  /// The one-object graph with initial homs (empty sequence).
  static VGraph point(int dim);

  int dim() const { return data_->dim; }
  const FinSet& objects() const { return data_->objects; }
  const HomMap& stored_homs() const { return data_->homs; }
  VGraph hom(const Label& a, const Label& b) const;
  bool has_hom(const Label& a, const Label& b) const;

  bool is_empty() const { return objects().is_empty(); }
  std::size_t total_cell_count() const;

  bool operator==(const VGraph& other) const;
  bool operator!=(const VGraph& other) const { return !(*this == other); }
  std::string str() const;

 private:
  struct Data {
    int dim = 0;
    FinSet objects;
    HomMap homs;
    std::size_t cell_count = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// Morphism of enriched graphs: a function on objects plus a hom map for
/// every ordered pair. At dimension 0 the object function is the whole map.
/// Structure maps of truncated constructions may be partial; total()
/// reports whether every cell at every level is assigned.
class VGraphMap {
 public:
  using HomMapMap = std::map<std::pair<Label, Label>, VGraphMap>;

  VGraphMap();

  static VGraphMap base(FinFunction f);  // dimension 0
  static VGraphMap make(VGraph dom, VGraph cod, FinFunction object_map, HomMapMap hom_maps);
  static VGraphMap identity(const VGraph& g);
  /// Unique map from the initial graph.
  static VGraphMap from_initial(const VGraph& cod);
  /// Builds hom maps via a callback; callback may return std::nullopt for
  /// pairs whose hom is initial.
  static VGraphMap build(
      const VGraph& dom, const VGraph& cod, const FinFunction& object_map,
      const std::function<std::optional<VGraphMap>(const Label&, const Label&)>& make_hom);

  int dim() const { return data_->dim; }
  const VGraph& dom() const { return data_->dom; }
  const VGraph& cod() const { return data_->cod; }
  const FinFunction& object_map() const { return data_->object_map; }
  const HomMapMap& stored_hom_maps() const { return data_->hom_maps; }
  /// Hom component at a pair of domain objects; requires the object map to
  /// be defined at both.
  VGraphMap hom_map(const Label& a, const Label& b) const;

  bool total() const;
  bool is_identity_on_objects() const;
  bool is_fully_faithful() const;
  bool is_isomorphism() const;
  VGraphMap inverse() const;

  bool operator==(const VGraphMap& other) const;
  bool operator!=(const VGraphMap& other) const { return !(*this == other); }
  std::string str() const;

 private:
  struct Data {
    int dim = 0;
    VGraph dom, cod;
    FinFunction object_map;
    HomMapMap hom_maps;
  };
  std::shared_ptr<const Data> data_;
};

VGraphMap compose(const VGraphMap& g, const VGraphMap& f);

/// Regards a list of graphs of dimension d as a graph of dimension d+1 with
/// objects 0..k and hom(i-1,i) the i-th part. `dim` is the dimension of the
/// result (so parts have dimension dim-1); it must be supplied explicitly to
/// cover the empty sequence.
VGraph from_sequence(int dim, const std::vector<VGraph>& parts);

/// Map between sequence graphs of equal length, componentwise.
VGraphMap sequence_map(int dim, const std::vector<VGraphMap>& parts);

/// Inclusion of the subsequence (a..b] of parts into the full sequence
/// graph: objects i |-> a + i.
VGraphMap subsequence_inclusion(int dim, const std::vector<VGraph>& parts, std::size_t a,
                                std::size_t b);

struct VGraphProductResult {
  VGraph graph;
  std::vector<VGraphMap> projections;
};
VGraphProductResult vgraph_product(int dim, const std::vector<VGraph>& factors);
/// Product of maps f_i : X_i -> Y_i.
VGraphMap vgraph_product_map(int dim, const std::vector<VGraphMap>& maps);
/// Universal map into a product from a cone.
VGraphMap product_tuple(const VGraphProductResult& prod, const std::vector<VGraphMap>& cone);

struct VGraphCoproductResult {
  VGraph graph;
  std::vector<VGraphMap> injections;
};
VGraphCoproductResult vgraph_coproduct(int dim, const std::vector<VGraph>& family);

/// Coproduct whose summands are tagged by explicit key labels: a cell c of
/// summand k becomes (k, c) at the object level; homs within a summand are
/// inherited unchanged, cross-summand homs are initial.
struct IndexedCoproductResult {
  VGraph graph;
  std::vector<Label> keys;
  std::vector<VGraphMap> injections;
};
IndexedCoproductResult indexed_coproduct(int dim,
                                         const std::vector<std::pair<Label, VGraph>>& summands);

/// Universal map out of an indexed coproduct given one map per summand.
/// Allow partial: a summand map may be missing entries.
VGraphMap copair(const IndexedCoproductResult& cop, const std::vector<VGraphMap>& maps);
VGraphMap copair(const VGraphCoproductResult& cop, const std::vector<VGraphMap>& maps);

struct VGraphPullbackResult {
  VGraph graph;
  VGraphMap p, q;  // projections to dom(f), dom(g)
};
/// Componentwise pullback over a common codomain; exists at every dimension
/// because the base has all finite limits. Requires total maps.
VGraphPullbackResult vgraph_pullback(const VGraphMap& f, const VGraphMap& g);
/// Pullback along a fully faithful map m (checked); the projection opposite
/// m is again fully faithful.
VGraphPullbackResult pullback_along_ff(const VGraphMap& f, const VGraphMap& m);

struct Pi0Result {
  std::vector<VGraph> components;
  std::vector<VGraphMap> inclusions;
};
/// Connected components under the relation generated by "some hom between a
/// and b has a cell at some level".
Pi0Result pi0_decompose(const VGraph& g);
bool is_connected(const VGraph& g);

/// Full subgraph on a subset of objects, with its inclusion.
struct SubgraphResult {
  VGraph graph;
  VGraphMap inclusion;
};
SubgraphResult full_subgraph(const VGraph& g, const std::vector<Label>& objects);

/// Restricts cells by a predicate on (depth, label); depth >= 1 cells are
/// the objects of iterated homs. Objects of g itself (depth 0) are kept.
VGraph restrict_cells(const VGraph& g,
                      const std::function<bool(int, const Label&)>& keep);

/// Partialises f so that it lands in sub, a cellwise subgraph of cod(f);
/// entries whose image was dropped become undefined.
VGraphMap corestrict(const VGraphMap& f, const VGraph& sub);

/// Checks the universal property of a candidate pullback square by
/// enumerating cones from small graphs (oracle helper; exponential).
bool verify_vgraph_pullback_universal(const VGraphMap& f, const VGraphMap& g, const VGraph& apex,
                                      const VGraphMap& p, const VGraphMap& q,
                                      std::size_t max_objects = 2, std::size_t max_cells = 2);

/// All total maps dom -> cod (oracle helper; exponential).
std::vector<VGraphMap> all_vgraph_maps(const VGraph& dom, const VGraph& cod);

}  // namespace globular
