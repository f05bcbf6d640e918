#include "globular/vgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace globular {

namespace {

Label star() { return Label::atom("*"); }

}  // namespace

VGraph::VGraph() { data_ = std::make_shared<Data>(); }

VGraph VGraph::cells(FinSet s) {
  auto d = std::make_shared<Data>();
  d->dim = 0;
  d->objects = std::move(s);
  d->cell_count = d->objects.size();
  VGraph g;
  g.data_ = std::move(d);
  return g;
}

VGraph VGraph::make(int dim, FinSet objects, HomMap homs) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (dim == 0) {
    if (!homs.empty()) throw std::invalid_argument("dimension-0 graph with homs");
    return cells(std::move(objects));
  }
  auto d = std::make_shared<Data>();
  d->dim = dim;
  d->objects = std::move(objects);
  d->cell_count = d->objects.size();
  for (auto& [key, h] : homs) {
    if (h.dim() != dim - 1) throw std::invalid_argument("hom dimension mismatch");
    if (!d->objects.contains(key.first) || !d->objects.contains(key.second))
      throw std::invalid_argument("hom keyed by a non-object");
    if (h.is_empty()) continue;  // canonical initial homs are not stored
    d->cell_count += h.total_cell_count();
    d->homs.emplace(key, std::move(h));
  }
  VGraph g;
  g.data_ = std::move(d);
  return g;
}

VGraph VGraph::initial(int dim) {
  if (dim == 0) return cells(FinSet::empty());
  return make(dim, FinSet::empty(), {});
}

VGraph VGraph::terminal(int dim) {
  if (dim == 0) return cells(FinSet::singleton(star()));
  HomMap homs;
  homs.emplace(std::make_pair(star(), star()), terminal(dim - 1));
  return make(dim, FinSet::singleton(star()), std::move(homs));
}

VGraph VGraph::point(int dim) {
  if (dim == 0) return cells(FinSet::singleton(star()));
  return make(dim, FinSet::singleton(Label::of(0)), {});
}

VGraph VGraph::hom(const Label& a, const Label& b) const {
  if (dim() == 0) throw std::logic_error("hom of a dimension-0 graph");
  if (!objects().contains(a) || !objects().contains(b))
    throw std::out_of_range("hom at a non-object");
  auto it = data_->homs.find({a, b});
  if (it == data_->homs.end()) return initial(dim() - 1);
  return it->second;
}

bool VGraph::has_hom(const Label& a, const Label& b) const {
  return data_->homs.count({a, b}) > 0;
}

std::size_t VGraph::total_cell_count() const { return data_->cell_count; }

bool VGraph::operator==(const VGraph& other) const {
  if (data_ == other.data_) return true;
  return dim() == other.dim() && objects() == other.objects() && data_->homs == other.data_->homs;
}

std::string VGraph::str() const {
  if (dim() == 0) return objects().str();
  std::string out = "[dim" + std::to_string(dim()) + " " + objects().str();
  for (const auto& [key, h] : data_->homs)
    out += " " + key.first.str() + "->" + key.second.str() + ":" + h.str();
  return out + "]";
}

VGraphMap::VGraphMap() { data_ = std::make_shared<Data>(); }

VGraphMap VGraphMap::base(FinFunction f) {
  auto d = std::make_shared<Data>();
  d->dim = 0;
  d->dom = VGraph::cells(f.dom());
  d->cod = VGraph::cells(f.cod());
  d->object_map = std::move(f);
  VGraphMap m;
  m.data_ = std::move(d);
  return m;
}

VGraphMap VGraphMap::make(VGraph dom, VGraph cod, FinFunction object_map, HomMapMap hom_maps) {
  if (dom.dim() != cod.dim()) throw std::invalid_argument("map between unequal dimensions");
  if (object_map.dom() != dom.objects() || object_map.cod() != cod.objects())
    throw std::invalid_argument("object map does not match graphs");
  if (dom.dim() == 0) {
    if (!hom_maps.empty()) throw std::invalid_argument("dimension-0 map with hom maps");
    return base(std::move(object_map));
  }
  auto d = std::make_shared<Data>();
  d->dim = dom.dim();
  for (auto& [key, hm] : hom_maps) {
    auto ia = dom.objects().find(key.first);
    auto ib = dom.objects().find(key.second);
    if (!ia || !ib) throw std::invalid_argument("hom map keyed by a non-object");
    int fa = object_map.apply_index(*ia), fb = object_map.apply_index(*ib);
    if (fa < 0 || fb < 0)
      throw std::invalid_argument("hom map at a pair where the object map is undefined");
    if (hm.dom() != dom.hom(key.first, key.second))
      throw std::invalid_argument("hom map domain mismatch at " + key.first.str() + "," +
                                  key.second.str());
    if (hm.cod() != cod.hom(cod.objects().at(fa), cod.objects().at(fb)))
      throw std::invalid_argument("hom map codomain mismatch at " + key.first.str() + "," +
                                  key.second.str());
    if (hm.dom().is_empty()) continue;  // unique map; not stored
    d->hom_maps.emplace(key, std::move(hm));
  }
  // every non-initial hom with defined endpoints needs a hom map
  for (const auto& [key, h] : dom.stored_homs()) {
    auto ia = dom.objects().find(key.first);
    auto ib = dom.objects().find(key.second);
    int fa = object_map.apply_index(*ia), fb = object_map.apply_index(*ib);
    if (fa < 0 || fb < 0) continue;  // partial at objects: deeper cells count as undefined
    if (!d->hom_maps.count(key))
      throw std::invalid_argument("missing hom map at " + key.first.str() + "," +
                                  key.second.str());
  }
  d->dom = std::move(dom);
  d->cod = std::move(cod);
  d->object_map = std::move(object_map);
  VGraphMap m;
  m.data_ = std::move(d);
  return m;
}

VGraphMap VGraphMap::identity(const VGraph& g) {
  if (g.dim() == 0) return base(FinFunction::identity(g.objects()));
  HomMapMap hm;
  for (const auto& [key, h] : g.stored_homs()) hm.emplace(key, identity(h));
  return make(g, g, FinFunction::identity(g.objects()), std::move(hm));
}

VGraphMap VGraphMap::from_initial(const VGraph& cod) {
  if (cod.dim() == 0) return base(FinFunction::empty_to(cod.objects()));
  return make(VGraph::initial(cod.dim()), cod, FinFunction::empty_to(cod.objects()), {});
}

VGraphMap VGraphMap::build(
    const VGraph& dom, const VGraph& cod, const FinFunction& object_map,
    const std::function<std::optional<VGraphMap>(const Label&, const Label&)>& make_hom) {
  if (dom.dim() == 0) return base(object_map);
  HomMapMap hm;
  for (const Label& a : dom.objects().labels())
    for (const Label& b : dom.objects().labels()) {
      auto ia = dom.objects().find(a);
      auto ib = dom.objects().find(b);
      if (object_map.apply_index(*ia) < 0 || object_map.apply_index(*ib) < 0) continue;
      if (dom.hom(a, b).is_empty()) continue;
      auto h = make_hom(a, b);
      if (!h) throw std::logic_error("missing hom map in build at a non-initial hom");
      hm.emplace(std::make_pair(a, b), std::move(*h));
    }
  return make(dom, cod, object_map, std::move(hm));
}

VGraphMap VGraphMap::hom_map(const Label& a, const Label& b) const {
  if (dim() == 0) throw std::logic_error("hom map of a dimension-0 map");
  auto it = data_->hom_maps.find({a, b});
  if (it != data_->hom_maps.end()) return it->second;
  auto ia = dom().objects().find(a);
  auto ib = dom().objects().find(b);
  if (!ia || !ib) throw std::out_of_range("hom map at a non-object");
  int fa = object_map().apply_index(*ia), fb = object_map().apply_index(*ib);
  if (fa < 0 || fb < 0) throw std::domain_error("hom map where the object map is undefined");
  if (!dom().hom(a, b).is_empty()) throw std::logic_error("missing hom map");
  return from_initial(cod().hom(cod().objects().at(fa), cod().objects().at(fb)));
}

bool VGraphMap::total() const {
  if (!object_map().total()) return false;
  for (const auto& [key, hm] : data_->hom_maps)
    if (!hm.total()) return false;
  return true;
}

bool VGraphMap::is_identity_on_objects() const {
  if (dim() == 0) return true;
  return dom().objects() == cod().objects() &&
         object_map() == FinFunction::identity(dom().objects());
}

bool VGraphMap::is_fully_faithful() const {
  if (dim() == 0) return true;
  if (!object_map().total()) return false;
  for (const Label& a : dom().objects().labels())
    for (const Label& b : dom().objects().labels())
      if (!hom_map(a, b).is_isomorphism()) return false;
  return true;
}

bool VGraphMap::is_isomorphism() const {
  if (!object_map().is_bijective()) return false;
  if (dim() == 0) return true;
  return is_fully_faithful();
}

VGraphMap VGraphMap::inverse() const {
  if (dim() == 0) return base(object_map().inverse());
  if (!is_isomorphism()) throw std::logic_error("inverse of a non-isomorphism");
  FinFunction inv = object_map().inverse();
  return build(cod(), dom(), inv, [&](const Label& a, const Label& b) {
    return hom_map(inv.apply(a), inv.apply(b)).inverse();
  });
}

bool VGraphMap::operator==(const VGraphMap& other) const {
  if (data_ == other.data_) return true;
  return dim() == other.dim() && dom() == other.dom() && cod() == other.cod() &&
         object_map() == other.object_map() && data_->hom_maps == other.data_->hom_maps;
}

std::string VGraphMap::str() const {
  std::string out = "map" + std::to_string(dim()) + object_map().str();
  for (const auto& [key, hm] : data_->hom_maps)
    out += " @" + key.first.str() + "," + key.second.str() + hm.str();
  return out;
}

VGraphMap compose(const VGraphMap& g, const VGraphMap& f) {
  if (f.cod() != g.dom()) throw std::invalid_argument("vgraph map composition mismatch");
  FinFunction obj = compose(g.object_map(), f.object_map());
  if (f.dim() == 0) return VGraphMap::base(obj);
  VGraphMap::HomMapMap hm;
  for (const Label& a : f.dom().objects().labels())
    for (const Label& b : f.dom().objects().labels()) {
      auto ia = f.dom().objects().find(a);
      auto ib = f.dom().objects().find(b);
      if (obj.apply_index(*ia) < 0 || obj.apply_index(*ib) < 0) continue;
      if (f.dom().hom(a, b).is_empty()) continue;
      Label fa = f.object_map().apply(a), fb = f.object_map().apply(b);
      hm.emplace(std::make_pair(a, b), compose(g.hom_map(fa, fb), f.hom_map(a, b)));
    }
  return VGraphMap::make(f.dom(), g.cod(), obj, std::move(hm));
}

VGraph from_sequence(int dim, const std::vector<VGraph>& parts) {
  if (dim < 1) throw std::invalid_argument("sequence graph needs dimension >= 1");
  for (const VGraph& p : parts)
    if (p.dim() != dim - 1) throw std::invalid_argument("sequence part dimension mismatch");
  std::vector<Label> objs;
  for (std::size_t i = 0; i <= parts.size(); ++i) objs.push_back(Label::of(i));
  VGraph::HomMap homs;
  for (std::size_t i = 0; i < parts.size(); ++i)
    homs.emplace(std::make_pair(Label::of(i), Label::of(i + 1)), parts[i]);
  return VGraph::make(dim, FinSet::of(std::move(objs)), std::move(homs));
}

VGraphMap sequence_map(int dim, const std::vector<VGraphMap>& parts) {
  std::vector<VGraph> doms, cods;
  for (const VGraphMap& p : parts) {
    doms.push_back(p.dom());
    cods.push_back(p.cod());
  }
  VGraph d = from_sequence(dim, doms), c = from_sequence(dim, cods);
  FinFunction obj = FinFunction::identity(d.objects());
  return VGraphMap::build(d, c, obj, [&](const Label& a, const Label& b) -> std::optional<VGraphMap> {
    std::size_t i = std::stoull(b.atom_name());
    (void)a;
    return parts[i - 1];
  });
}

VGraphMap subsequence_inclusion(int dim, const std::vector<VGraph>& parts, std::size_t a,
                                std::size_t b) {
  if (a > b || b > parts.size()) throw std::invalid_argument("bad subsequence bounds");
  std::vector<VGraph> sub(parts.begin() + a, parts.begin() + b);
  VGraph d = from_sequence(dim, sub), c = from_sequence(dim, parts);
  FinFunction obj = FinFunction::total(d.objects(), c.objects(), [&](const Label& l) {
    return Label::of(std::stoll(l.atom_name()) + static_cast<long long>(a));
  });
  return VGraphMap::build(d, c, obj,
                          [&](const Label& x, const Label& y) -> std::optional<VGraphMap> {
                            std::size_t i = std::stoull(y.atom_name());
                            (void)x;
                            return VGraphMap::identity(sub[i - 1]);
                          });
}

VGraphProductResult vgraph_product(int dim, const std::vector<VGraph>& factors) {
  for (const VGraph& f : factors)
    if (f.dim() != dim) throw std::invalid_argument("product factor dimension mismatch");
  if (factors.empty()) return {VGraph::terminal(dim), {}};
  if (dim == 0) {
    std::vector<FinSet> sets;
    for (const VGraph& f : factors) sets.push_back(f.objects());
    FinSet p = product_set(sets);
    VGraph graph = VGraph::cells(p);
    std::vector<VGraphMap> projections;
    for (std::size_t i = 0; i < factors.size(); ++i)
      projections.push_back(VGraphMap::base(
          FinFunction::total(p, sets[i], [i](const Label& l) { return l.parts()[i]; })));
    return {graph, std::move(projections)};
  }
  std::vector<FinSet> objsets;
  for (const VGraph& f : factors) objsets.push_back(f.objects());
  FinSet objs = product_set(objsets);
  VGraph::HomMap homs;
  std::map<std::pair<Label, Label>, VGraphProductResult> homprods;
  for (const Label& x : objs.labels())
    for (const Label& y : objs.labels()) {
      std::vector<VGraph> homfactors;
      for (std::size_t i = 0; i < factors.size(); ++i)
        homfactors.push_back(factors[i].hom(x.parts()[i], y.parts()[i]));
      VGraphProductResult hp = vgraph_product(dim - 1, homfactors);
      if (!hp.graph.is_empty()) {
        homs.emplace(std::make_pair(x, y), hp.graph);
        homprods.emplace(std::make_pair(x, y), std::move(hp));
      }
    }
  VGraph graph = VGraph::make(dim, objs, std::move(homs));
  std::vector<VGraphMap> projections;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    FinFunction obj = FinFunction::total(objs, factors[i].objects(),
                                         [i](const Label& l) { return l.parts()[i]; });
    projections.push_back(VGraphMap::build(
        graph, factors[i], obj, [&](const Label& x, const Label& y) -> std::optional<VGraphMap> {
          return homprods.at({x, y}).projections[i];
        }));
  }
  return {graph, std::move(projections)};
}

VGraphMap vgraph_product_map(int dim, const std::vector<VGraphMap>& maps) {
  std::vector<VGraph> doms, cods;
  for (const VGraphMap& m : maps) {
    doms.push_back(m.dom());
    cods.push_back(m.cod());
  }
  VGraphProductResult dp = vgraph_product(dim, doms);
  VGraphProductResult cp = vgraph_product(dim, cods);
  std::vector<VGraphMap> cone;
  for (std::size_t i = 0; i < maps.size(); ++i) cone.push_back(compose(maps[i], dp.projections[i]));
  return product_tuple(cp, cone);
}

namespace {

VGraphMap map_to_terminal(const VGraph& g) {
  if (g.dim() == 0)
    return VGraphMap::base(FinFunction::total(g.objects(), FinSet::singleton(star()),
                                              [](const Label&) { return star(); }));
  VGraph t = VGraph::terminal(g.dim());
  FinFunction obj = FinFunction::total(g.objects(), t.objects(), [](const Label&) { return star(); });
  return VGraphMap::build(g, t, obj, [&](const Label& a, const Label& b) -> std::optional<VGraphMap> {
    return map_to_terminal(g.hom(a, b));
  });
}

}  // namespace

VGraphMap product_tuple(const VGraphProductResult& prod, const std::vector<VGraphMap>& cone) {
  if (prod.projections.empty()) {
    if (!cone.empty()) throw std::invalid_argument("cone size mismatch");
    // empty product: terminal graph
    throw std::invalid_argument("product_tuple into an empty product needs an explicit apex");
  }
  if (cone.size() != prod.projections.size()) throw std::invalid_argument("cone size mismatch");
  const VGraph& w = cone[0].dom();
  for (const VGraphMap& c : cone)
    if (c.dom() != w) throw std::invalid_argument("cone legs have different domains");
  if (w.dim() == 0) {
    FinFunction f = FinFunction::total(w.objects(), prod.graph.objects(), [&](const Label& l) {
      std::vector<Label> parts;
      for (const VGraphMap& c : cone) parts.push_back(c.object_map().apply(l));
      return Label::tuple(std::move(parts));
    });
    return VGraphMap::base(f);
  }
  FinFunction obj = FinFunction::total(w.objects(), prod.graph.objects(), [&](const Label& l) {
    std::vector<Label> parts;
    for (const VGraphMap& c : cone) parts.push_back(c.object_map().apply(l));
    return Label::tuple(std::move(parts));
  });
  return VGraphMap::build(w, prod.graph, obj,
                          [&](const Label& a, const Label& b) -> std::optional<VGraphMap> {
                            Label fa = obj.apply(a), fb = obj.apply(b);
                            std::vector<VGraph> homfactors;
                            std::vector<VGraphMap> homcone;
                            for (std::size_t i = 0; i < cone.size(); ++i) {
                              homfactors.push_back(cone[i].cod().hom(fa.parts()[i], fb.parts()[i]));
                              homcone.push_back(cone[i].hom_map(a, b));
                            }
                            VGraphProductResult hp = vgraph_product(w.dim() - 1, homfactors);
                            if (hp.graph != prod.graph.hom(fa, fb))
                              throw std::logic_error("product structure mismatch");
                            if (homcone.empty()) return map_to_terminal(w.hom(a, b));
                            return product_tuple(hp, homcone);
                          });
}

VGraphCoproductResult vgraph_coproduct(int dim, const std::vector<VGraph>& family) {
  std::vector<std::pair<Label, VGraph>> summands;
  for (std::size_t i = 0; i < family.size(); ++i)
    summands.emplace_back(Label::of(static_cast<long long>(i)), family[i]);
  IndexedCoproductResult r = indexed_coproduct(dim, summands);
  return {std::move(r.graph), std::move(r.injections)};
}

IndexedCoproductResult indexed_coproduct(int dim,
                                         const std::vector<std::pair<Label, VGraph>>& summands) {
  for (const auto& [key, g] : summands)
    if (g.dim() != dim) throw std::invalid_argument("coproduct summand dimension mismatch");
  std::vector<Label> objs;
  for (const auto& [key, g] : summands)
    for (const Label& o : g.objects().labels()) objs.push_back(Label::tuple({key, o}));
  FinSet objects = FinSet::of(std::move(objs));
  VGraph graph;
  if (dim == 0) {
    graph = VGraph::cells(objects);
  } else {
    VGraph::HomMap homs;
    for (const auto& [key, g] : summands)
      for (const auto& [pair, h] : g.stored_homs())
        homs.emplace(std::make_pair(Label::tuple({key, pair.first}), Label::tuple({key, pair.second})),
                     h);
    graph = VGraph::make(dim, objects, std::move(homs));
  }
  IndexedCoproductResult out;
  out.graph = graph;
  for (const auto& [key, g] : summands) {
    out.keys.push_back(key);
    FinFunction obj = FinFunction::total(g.objects(), objects, [&key = key](const Label& l) {
      return Label::tuple({key, l});
    });
    if (dim == 0) {
      out.injections.push_back(VGraphMap::base(obj));
    } else {
      const VGraph& gg = g;
      out.injections.push_back(VGraphMap::build(
          gg, graph, obj, [&gg](const Label& a, const Label& b) -> std::optional<VGraphMap> {
            return VGraphMap::identity(gg.hom(a, b));
          }));
    }
  }
  return out;
}

namespace {

VGraphMap copair_impl(const VGraph& cop, const std::vector<VGraphMap>& injections,
                      const std::vector<VGraphMap>& maps) {
  if (injections.size() != maps.size()) throw std::invalid_argument("copair arity mismatch");
  if (maps.empty()) {
    throw std::invalid_argument("copair over an empty coproduct needs an explicit codomain");
  }
  const VGraph& target = maps[0].cod();
  for (const VGraphMap& m : maps)
    if (m.cod() != target) throw std::invalid_argument("copair legs have different codomains");
  // locate the summand of each object of the coproduct
  std::vector<int> summand_of(cop.objects().size(), -1);
  std::vector<int> index_in(cop.objects().size(), -1);
  for (std::size_t s = 0; s < injections.size(); ++s) {
    const FinFunction& inj = injections[s].object_map();
    for (std::size_t i = 0; i < inj.dom().size(); ++i) {
      int v = inj.apply_index(i);
      summand_of[v] = static_cast<int>(s);
      index_in[v] = static_cast<int>(i);
    }
  }
  std::vector<int> objmap(cop.objects().size(), -1);
  for (std::size_t i = 0; i < cop.objects().size(); ++i) {
    if (summand_of[i] < 0) throw std::logic_error("coproduct object outside every summand");
    objmap[i] = maps[summand_of[i]].object_map().apply_index(index_in[i]);
  }
  FinFunction obj = FinFunction::from_indices(cop.objects(), target.objects(), std::move(objmap), true);
  if (cop.dim() == 0) return VGraphMap::base(obj);
  VGraphMap::HomMapMap hm;
  for (const auto& [pair, h] : cop.stored_homs()) {
    std::size_t ia = cop.objects().index_of(pair.first);
    std::size_t ib = cop.objects().index_of(pair.second);
    if (obj.apply_index(ia) < 0 || obj.apply_index(ib) < 0) continue;
    if (summand_of[ia] != summand_of[ib])
      throw std::logic_error("cross-summand hom in a coproduct");
    int s = summand_of[ia];
    Label a0 = injections[s].dom().objects().at(index_in[ia]);
    Label b0 = injections[s].dom().objects().at(index_in[ib]);
    hm.emplace(pair, maps[s].hom_map(a0, b0));
  }
  return VGraphMap::make(cop, target, obj, std::move(hm));
}

}  // namespace

VGraphMap copair(const IndexedCoproductResult& cop, const std::vector<VGraphMap>& maps) {
  return copair_impl(cop.graph, cop.injections, maps);
}

VGraphMap copair(const VGraphCoproductResult& cop, const std::vector<VGraphMap>& maps) {
  return copair_impl(cop.graph, cop.injections, maps);
}

VGraphPullbackResult vgraph_pullback(const VGraphMap& f, const VGraphMap& g) {
  if (f.cod() != g.cod()) throw std::invalid_argument("pullback codomain mismatch");
  if (f.dim() == 0) {
    PullbackResult pb = pullback(f.object_map(), g.object_map());
    return {VGraph::cells(pb.set), VGraphMap::base(pb.p), VGraphMap::base(pb.q)};
  }
  PullbackResult ob = pullback(f.object_map(), g.object_map());
  VGraph::HomMap homs;
  std::map<std::pair<Label, Label>, VGraphPullbackResult> homres;
  for (const Label& x : ob.set.labels())
    for (const Label& y : ob.set.labels()) {
      Label ax = x.parts()[0], bx = x.parts()[1];
      Label ay = y.parts()[0], by = y.parts()[1];
      VGraphPullbackResult hp = vgraph_pullback(f.hom_map(ax, ay), g.hom_map(bx, by));
      if (!hp.graph.is_empty()) {
        homs.emplace(std::make_pair(x, y), hp.graph);
        homres.emplace(std::make_pair(x, y), std::move(hp));
      }
    }
  VGraph graph = VGraph::make(f.dim(), ob.set, std::move(homs));
  FinFunction pobj = FinFunction::total(graph.objects(), f.dom().objects(),
                                        [](const Label& l) { return l.parts()[0]; });
  FinFunction qobj = FinFunction::total(graph.objects(), g.dom().objects(),
                                        [](const Label& l) { return l.parts()[1]; });
  VGraphMap p = VGraphMap::build(graph, f.dom(), pobj,
                                 [&](const Label& x, const Label& y) -> std::optional<VGraphMap> {
                                   return homres.at({x, y}).p;
                                 });
  VGraphMap q = VGraphMap::build(graph, g.dom(), qobj,
                                 [&](const Label& x, const Label& y) -> std::optional<VGraphMap> {
                                   return homres.at({x, y}).q;
                                 });
  return {graph, p, q};
}

VGraphPullbackResult pullback_along_ff(const VGraphMap& f, const VGraphMap& m) {
  if (!m.is_fully_faithful())
    throw std::invalid_argument("pullback_along_ff: map is not fully faithful");
  VGraphPullbackResult r = vgraph_pullback(f, m);
  if (!r.p.is_fully_faithful())
    throw std::logic_error("projection opposite a fully faithful map must be fully faithful");
  return r;
}

Pi0Result pi0_decompose(const VGraph& g) {
  if (g.dim() == 0) throw std::invalid_argument("pi0 of a dimension-0 graph");
  std::size_t n = g.objects().size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [pair, h] : g.stored_homs()) {
    if (h.total_cell_count() == 0) continue;
    std::size_t a = g.objects().index_of(pair.first);
    std::size_t b = g.objects().index_of(pair.second);
    parent[find(a)] = find(b);
  }
  std::map<std::size_t, std::vector<Label>> classes;
  for (std::size_t i = 0; i < n; ++i) classes[find(i)].push_back(g.objects().at(i));
  Pi0Result out;
  for (auto& [root, members] : classes) {
    SubgraphResult sub = full_subgraph(g, members);
    out.components.push_back(std::move(sub.graph));
    out.inclusions.push_back(std::move(sub.inclusion));
  }
  return out;
}

bool is_connected(const VGraph& g) { return pi0_decompose(g).components.size() == 1; }

SubgraphResult full_subgraph(const VGraph& g, const std::vector<Label>& objects) {
  FinSet objs = FinSet::of(objects);
  VGraph::HomMap homs;
  for (const Label& a : objects)
    for (const Label& b : objects) {
      VGraph h = g.hom(a, b);
      if (!h.is_empty()) homs.emplace(std::make_pair(a, b), h);
    }
  VGraph sub = VGraph::make(g.dim(), objs, std::move(homs));
  FinFunction obj = FinFunction::total(objs, g.objects(), [](const Label& l) { return l; });
  VGraphMap inc = VGraphMap::build(sub, g, obj,
                                   [&](const Label& a, const Label& b) -> std::optional<VGraphMap> {
                                     return VGraphMap::identity(sub.hom(a, b));
                                   });
  return {sub, inc};
}

namespace {

VGraph restrict_cells_impl(const VGraph& g, const std::function<bool(int, const Label&)>& keep,
                           int depth) {
  if (g.dim() == 0) {
    std::vector<Label> kept;
    for (const Label& l : g.objects().labels())
      if (depth == 0 || keep(depth, l)) kept.push_back(l);
    return VGraph::cells(FinSet::of(std::move(kept)));
  }
  std::vector<Label> kept;
  for (const Label& l : g.objects().labels())
    if (depth == 0 || keep(depth, l)) kept.push_back(l);
  FinSet objs = FinSet::of(kept);
  VGraph::HomMap homs;
  for (const auto& [pair, h] : g.stored_homs()) {
    if (!objs.contains(pair.first) || !objs.contains(pair.second)) continue;
    VGraph hr = restrict_cells_impl(h, keep, depth + 1);
    if (!hr.is_empty()) homs.emplace(pair, std::move(hr));
  }
  return VGraph::make(g.dim(), objs, std::move(homs));
}

}  // namespace

VGraph restrict_cells(const VGraph& g, const std::function<bool(int, const Label&)>& keep) {
  return restrict_cells_impl(g, keep, 0);
}

VGraphMap corestrict(const VGraphMap& f, const VGraph& sub) {
  if (f.dim() == 0) {
    std::vector<int> m(f.dom().objects().size(), -1);
    for (std::size_t i = 0; i < f.dom().objects().size(); ++i) {
      int v = f.object_map().apply_index(i);
      if (v < 0) continue;
      auto j = sub.objects().find(f.cod().objects().at(v));
      if (j) m[i] = static_cast<int>(*j);
    }
    return VGraphMap::base(
        FinFunction::from_indices(f.dom().objects(), sub.objects(), std::move(m), true));
  }
  std::vector<int> m(f.dom().objects().size(), -1);
  for (std::size_t i = 0; i < f.dom().objects().size(); ++i) {
    int v = f.object_map().apply_index(i);
    if (v < 0) continue;
    auto j = sub.objects().find(f.cod().objects().at(v));
    if (j) m[i] = static_cast<int>(*j);
  }
  FinFunction obj = FinFunction::from_indices(f.dom().objects(), sub.objects(), std::move(m), true);
  VGraphMap::HomMapMap hm;
  for (const Label& a : f.dom().objects().labels())
    for (const Label& b : f.dom().objects().labels()) {
      std::size_t ia = f.dom().objects().index_of(a), ib = f.dom().objects().index_of(b);
      if (obj.apply_index(ia) < 0 || obj.apply_index(ib) < 0) continue;
      if (f.dom().hom(a, b).is_empty()) continue;
      Label fa = sub.objects().at(obj.apply_index(ia));
      Label fb = sub.objects().at(obj.apply_index(ib));
      hm.emplace(std::make_pair(a, b), corestrict(f.hom_map(a, b), sub.hom(fa, fb)));
    }
  return VGraphMap::make(f.dom(), sub, obj, std::move(hm));
}

std::vector<VGraphMap> all_vgraph_maps(const VGraph& dom, const VGraph& cod) {
  std::vector<VGraphMap> out;
  if (dom.dim() == 0) {
    for (const FinFunction& f : all_functions(dom.objects(), cod.objects()))
      out.push_back(VGraphMap::base(f));
    return out;
  }
  for (const FinFunction& obj : all_functions(dom.objects(), cod.objects())) {
    // candidate hom maps per pair with non-initial homs
    std::vector<std::pair<Label, Label>> pairs;
    std::vector<std::vector<VGraphMap>> choices;
    bool feasible = true;
    for (const auto& [pair, h] : dom.stored_homs()) {
      Label fa = obj.apply(pair.first), fb = obj.apply(pair.second);
      std::vector<VGraphMap> cs = all_vgraph_maps(h, cod.hom(fa, fb));
      if (cs.empty()) {
        feasible = false;
        break;
      }
      pairs.push_back(pair);
      choices.push_back(std::move(cs));
    }
    if (!feasible) continue;
    std::vector<std::size_t> idx(pairs.size(), 0);
    while (true) {
      VGraphMap::HomMapMap hm;
      for (std::size_t i = 0; i < pairs.size(); ++i) hm.emplace(pairs[i], choices[i][idx[i]]);
      out.push_back(VGraphMap::make(dom, cod, obj, std::move(hm)));
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
  }
  return out;
}

namespace {

// all graphs of the given dimension with <= max_objects objects and
// <= max_cells cells in homs, used as probes for universal-property checks
void enumerate_probe_graphs(int dim, std::size_t max_objects, std::size_t max_cells,
                            std::vector<VGraph>& out) {
  if (dim == 0) {
    for (std::size_t n = 0; n <= max_cells; ++n) out.push_back(VGraph::cells(FinSet::range(n)));
    return;
  }
  std::vector<VGraph> homcands;
  enumerate_probe_graphs(dim - 1, max_objects, max_cells, homcands);
  for (std::size_t n = 0; n <= max_objects; ++n) {
    FinSet objs = FinSet::range(n);
    std::vector<std::pair<Label, Label>> pairs;
    for (const Label& a : objs.labels())
      for (const Label& b : objs.labels()) pairs.emplace_back(a, b);
    // distribute homs over pairs keeping the total cell budget
    std::function<void(std::size_t, std::size_t, VGraph::HomMap&)> rec =
        [&](std::size_t i, std::size_t budget, VGraph::HomMap& homs) {
          if (i == pairs.size()) {
            VGraph::HomMap copy = homs;
            out.push_back(VGraph::make(dim, objs, std::move(copy)));
            return;
          }
          for (const VGraph& h : homcands) {
            std::size_t c = h.total_cell_count();
            if (c > budget) continue;
            if (h.is_empty()) {
              rec(i + 1, budget, homs);
            } else {
              homs.emplace(pairs[i], h);
              rec(i + 1, budget - c, homs);
              homs.erase(pairs[i]);
            }
          }
        };
    VGraph::HomMap homs;
    rec(0, max_cells, homs);
  }
}

}  // namespace

bool verify_vgraph_pullback_universal(const VGraphMap& f, const VGraphMap& g, const VGraph& apex,
                                      const VGraphMap& p, const VGraphMap& q,
                                      std::size_t max_objects, std::size_t max_cells) {
  if (compose(f, p) != compose(g, q)) return false;
  std::vector<VGraph> probes;
  enumerate_probe_graphs(f.dom().dim(), max_objects, max_cells, probes);
  for (const VGraph& w : probes) {
    std::vector<VGraphMap> to_apex = all_vgraph_maps(w, apex);
    for (const VGraphMap& h : all_vgraph_maps(w, f.dom()))
      for (const VGraphMap& k : all_vgraph_maps(w, g.dom())) {
        if (compose(f, h) != compose(g, k)) continue;
        std::size_t fillers = 0;
        for (const VGraphMap& u : to_apex)
          if (compose(p, u) == h && compose(q, u) == k) ++fillers;
        if (fillers != 1) return false;
      }
  }
  return true;
}

}  // namespace globular
