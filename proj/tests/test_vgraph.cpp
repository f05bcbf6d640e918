#include <doctest.h>

#include "globular/globset.hpp"
#include "globular/vgraph.hpp"

using namespace globular;

namespace {

VGraph edge_graph(const FinSet& z) {  // two objects, hom(0,1) = z
  return from_sequence(1, {VGraph::cells(z)});
}

VGraph free_living_cell(int n) {  // iterated single-edge graph
  VGraph g = VGraph::point(0);
  for (int k = 0; k < n; ++k) g = from_sequence(g.dim() + 1, {g});
  return g;
}

}  // namespace

TEST_CASE("sequence graphs") {
  VGraph zero = from_sequence(1, {});
  CHECK(zero.objects().size() == 1);
  CHECK(zero.total_cell_count() == 1);

  VGraph path3 = from_sequence(1, {VGraph::point(0), VGraph::point(0), VGraph::point(0)});
  CHECK(path3.objects().size() == 4);
  auto counts = globular_cell_counts(path3);
  REQUIRE(counts.size() == 2);
  CHECK(counts[0] == 4);
  CHECK(counts[1] == 3);

  CHECK_THROWS(from_sequence(1, {VGraph::point(1)}));
}

TEST_CASE("free-living cells have two cells per dimension below the top") {
  VGraph two = free_living_cell(2);
  auto counts = globular_cell_counts(two);
  REQUIRE(counts.size() == 3);
  CHECK(counts[0] == 2);
  CHECK(counts[1] == 2);
  CHECK(counts[2] == 1);
}

TEST_CASE("product with terminal is isomorphic to the factor") {
  VGraph x = from_sequence(1, {VGraph::cells(FinSet::range(2)), VGraph::cells(FinSet::range(1))});
  VGraphProductResult p = vgraph_product(1, {x, VGraph::terminal(1)});
  CHECK(p.graph.objects().size() == x.objects().size());
  CHECK(p.graph.total_cell_count() == x.total_cell_count());
  CHECK(p.projections[0].is_fully_faithful());
  CHECK(p.projections[0].object_map().is_bijective());
}

TEST_CASE("product of two single-edge graphs counted by hom products") {
  VGraph e = edge_graph(FinSet::range(1));
  VGraphProductResult p = vgraph_product(1, {e, e});
  CHECK(p.graph.objects().size() == 4);
  // homs: (0,0)->(1,1) has 1 edge; mixed pairs have initial homs
  Label oo = Label::tuple({Label::of(0), Label::of(0)});
  Label ii = Label::tuple({Label::of(1), Label::of(1)});
  Label oi = Label::tuple({Label::of(0), Label::of(1)});
  CHECK(p.graph.hom(oo, ii).objects().size() == 1);
  CHECK(p.graph.hom(oo, oi).is_empty());
  // oracle: maps from the single-edge graph into the product = pairs of maps into factors
  std::size_t into_product = all_vgraph_maps(e, p.graph).size();
  std::size_t into_factor = all_vgraph_maps(e, e).size();
  CHECK(into_product == into_factor * into_factor);
}

TEST_CASE("empty product is terminal") {
  VGraphProductResult p = vgraph_product(1, {});
  CHECK(p.graph == VGraph::terminal(1));
}

TEST_CASE("coproducts: injections fully faithful, empty coproduct strictly initial") {
  VGraph a = edge_graph(FinSet::range(1)), b = edge_graph(FinSet::range(2));
  VGraphCoproductResult c = vgraph_coproduct(1, {a, b});
  CHECK(c.graph.objects().size() == 4);
  std::size_t noninitial = c.graph.stored_homs().size();
  CHECK(noninitial == 2);
  for (const VGraphMap& inj : c.injections) CHECK(inj.is_fully_faithful());
  CHECK(vgraph_coproduct(1, {}).graph.is_empty());
  VGraphCoproductResult single = vgraph_coproduct(1, {a});
  CHECK(single.graph.total_cell_count() == a.total_cell_count());
}

TEST_CASE("pullback along fully faithful maps") {
  VGraph a = edge_graph(FinSet::range(2)), b = edge_graph(FinSet::range(1));
  VGraphCoproductResult c = vgraph_coproduct(1, {a, b});
  // identity along identity
  VGraphMap id = VGraphMap::identity(c.graph);
  VGraphPullbackResult r = pullback_along_ff(id, id);
  CHECK(r.graph.total_cell_count() == c.graph.total_cell_count());

  // pulling back one injection along the other is empty
  VGraphPullbackResult disj = pullback_along_ff(c.injections[0], c.injections[1]);
  CHECK(disj.graph.is_empty());

  // pulling back an injection along itself recovers the summand
  VGraphPullbackResult self = pullback_along_ff(c.injections[0], c.injections[0]);
  CHECK(self.graph.total_cell_count() == a.total_cell_count());
  CHECK(self.p.is_fully_faithful());

  CHECK(verify_vgraph_pullback_universal(c.injections[0], c.injections[1], disj.graph, disj.p,
                                         disj.q));
  CHECK(verify_vgraph_pullback_universal(c.injections[0], c.injections[0], self.graph, self.p,
                                         self.q));
}

TEST_CASE("object sets of limits and colimits are the corresponding (co)limits of objects") {
  VGraph a = edge_graph(FinSet::range(2)), b = edge_graph(FinSet::range(1));
  VGraphProductResult p = vgraph_product(1, {a, b});
  CHECK(p.graph.objects().size() == a.objects().size() * b.objects().size());
  VGraphCoproductResult c = vgraph_coproduct(1, {a, b});
  CHECK(c.graph.objects().size() == a.objects().size() + b.objects().size());
}

TEST_CASE("pi0: components, zig-zags and reassembly") {
  VGraph single = edge_graph(FinSet::range(1));
  CHECK(pi0_decompose(single).components.size() == 1);
  CHECK(is_connected(single));

  VGraphCoproductResult both = vgraph_coproduct(1, {single, edge_graph(FinSet::range(2))});
  Pi0Result two = pi0_decompose(both.graph);
  CHECK(two.components.size() == 2);

  // zig-zag on 5 objects: 0->1<-2->3<-4 is one component
  std::vector<Label> objs;
  for (int i = 0; i < 5; ++i) objs.push_back(Label::of(i));
  VGraph::HomMap homs;
  VGraph one = VGraph::cells(FinSet::range(1));
  homs.emplace(std::make_pair(Label::of(0), Label::of(1)), one);
  homs.emplace(std::make_pair(Label::of(2), Label::of(1)), one);
  homs.emplace(std::make_pair(Label::of(2), Label::of(3)), one);
  homs.emplace(std::make_pair(Label::of(4), Label::of(3)), one);
  VGraph zigzag = VGraph::make(1, FinSet::of(objs), std::move(homs));
  CHECK(pi0_decompose(zigzag).components.size() == 1);

  // coproduct of components reproduces the graph: canonical copair is an iso
  Pi0Result parts = pi0_decompose(both.graph);
  std::vector<VGraph> comps = parts.components;
  VGraphCoproductResult reassembled = vgraph_coproduct(1, comps);
  VGraphMap glue = copair(reassembled, parts.inclusions);
  CHECK(glue.is_isomorphism());
}

TEST_CASE("globular roundtrip") {
  VGraph zero = from_sequence(1, {});
  auto counts = globular_cell_counts(zero);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 0);

  for (int n = 0; n <= 3; ++n) {
    VGraph g = free_living_cell(n);
    CHECK(globular_roundtrip_iso(g).is_isomorphism());
  }
  VGraph path3 = from_sequence(1, {VGraph::point(0), VGraph::point(0), VGraph::point(0)});
  CHECK(globular_roundtrip_iso(path3).is_isomorphism());
  GlobularSet s = to_globular(path3);
  s.validate();
  // path-shaped boundaries
  for (std::size_t i = 0; i < s.cells[1].size(); ++i) {
    Label c = s.cells[1].at(i);
    CHECK(s.src[0].apply(c) == c.parts()[0]);
    CHECK(s.tgt[0].apply(c) == c.parts()[1]);
  }

  // inverse then forward is the identity up to the canonical unwrapping
  GlobularSet t = to_globular(from_globular(s));
  REQUIRE(t.cells.size() == s.cells.size());
  for (std::size_t k = 0; k < s.cells.size(); ++k) CHECK(t.cells[k].size() == s.cells[k].size());

  // globular identities are enforced
  GlobularSet bad = s;
  if (bad.cells[1].size() >= 2) {
    std::vector<int> m = bad.src[0].mapping();
    m[0] = m[0] == 0 ? 1 : 0;
    bad.src[0] = FinFunction::from_indices(bad.cells[1], bad.cells[0], std::move(m));
    // path3 has no 2-cells so this stays globular; force a failure via size mismatch instead
    bad.src.pop_back();
    CHECK_THROWS(bad.validate());
  }
}

TEST_CASE("globular identities reject a 2-cell between non-parallel edges") {
  FinSet c0 = FinSet::of({Label::atom("a"), Label::atom("b")});
  FinSet c1 = FinSet::of({Label::atom("f"), Label::atom("h")});
  FinSet c2 = FinSet::of({Label::atom("al")});
  FinFunction s0 = FinFunction::total(c1, c0, [](const Label& l) {
    return l == Label::atom("f") ? Label::atom("a") : Label::atom("b");
  });
  FinFunction t0 = FinFunction::total(c1, c0, [](const Label& l) {
    return l == Label::atom("f") ? Label::atom("b") : Label::atom("a");
  });
  FinFunction s1 = FinFunction::total(c2, c1, [](const Label&) { return Label::atom("f"); });
  FinFunction t1 = FinFunction::total(c2, c1, [](const Label&) { return Label::atom("h"); });
  GlobularSet bad{{c0, c1, c2}, {s0, s1}, {t0, t1}};
  CHECK_THROWS(bad.validate());
  CHECK_THROWS(from_globular(bad));
}

TEST_CASE("restrict and corestrict") {
  VGraph loops = VGraph::make(
      1, FinSet::range(1),
      {{{Label::of(0), Label::of(0)}, VGraph::cells(FinSet::of({Label::atom("u"), Label::atom("v")}))}});
  VGraph only_u = restrict_cells(loops, [](int depth, const Label& l) {
    return depth != 1 || l == Label::atom("u");
  });
  CHECK(only_u.hom(Label::of(0), Label::of(0)).objects().size() == 1);
  VGraphMap co = corestrict(VGraphMap::identity(loops), only_u);
  CHECK_FALSE(co.total());
}
