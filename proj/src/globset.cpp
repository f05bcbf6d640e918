#include "globular/globset.hpp"

#include <stdexcept>

namespace globular {

void GlobularSet::validate() const {
  if (cells.empty()) throw std::invalid_argument("globular set needs at least dimension 0");
  if (src.size() + 1 != cells.size() || tgt.size() != src.size())
    throw std::invalid_argument("globular set: map count mismatch");
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (src[k].dom() != cells[k + 1] || src[k].cod() != cells[k])
      throw std::invalid_argument("globular set: bad source map at dimension " +
                                  std::to_string(k + 1));
    if (tgt[k].dom() != cells[k + 1] || tgt[k].cod() != cells[k])
      throw std::invalid_argument("globular set: bad target map at dimension " +
                                  std::to_string(k + 1));
    if (!src[k].total() || !tgt[k].total())
      throw std::invalid_argument("globular set: partial boundary map");
  }
  for (std::size_t k = 0; k + 1 < src.size(); ++k) {
    if (compose(src[k], src[k + 1]) != compose(src[k], tgt[k + 1]))
      throw std::invalid_argument("globular identity ss = st fails at dimension " +
                                  std::to_string(k + 2));
    if (compose(tgt[k], src[k + 1]) != compose(tgt[k], tgt[k + 1]))
      throw std::invalid_argument("globular identity ts = tt fails at dimension " +
                                  std::to_string(k + 2));
  }
}

bool GlobularSet::operator==(const GlobularSet& other) const {
  return cells == other.cells && src == other.src && tgt == other.tgt;
}

GlobularSet to_globular(const VGraph& g) {
  GlobularSet out;
  if (g.dim() == 0) {
    out.cells.push_back(g.objects());
    return out;
  }
  out.cells.resize(g.dim() + 1);
  std::vector<std::vector<Label>> cells(g.dim() + 1);
  cells[0] = g.objects().labels();
  // wrapped boundary maps, collected label-to-label before sets are frozen
  std::vector<std::vector<std::pair<Label, Label>>> srcs(g.dim()), tgts(g.dim());
  for (const Label& a : g.objects().labels())
    for (const Label& b : g.objects().labels()) {
      VGraph h = g.hom(a, b);
      if (h.is_empty()) continue;
      GlobularSet hs = to_globular(h);
      for (int k = 0; k <= h.dim(); ++k) {
        for (const Label& c : hs.cells[k].labels())
          cells[k + 1].push_back(Label::tuple({a, b, c}));
        if (k == 0) {
          for (const Label& c : hs.cells[0].labels()) {
            srcs[0].emplace_back(Label::tuple({a, b, c}), a);
            tgts[0].emplace_back(Label::tuple({a, b, c}), b);
          }
        } else {
          for (const Label& c : hs.cells[k].labels()) {
            srcs[k].emplace_back(Label::tuple({a, b, c}),
                                 Label::tuple({a, b, hs.src[k - 1].apply(c)}));
            tgts[k].emplace_back(Label::tuple({a, b, c}),
                                 Label::tuple({a, b, hs.tgt[k - 1].apply(c)}));
          }
        }
      }
    }
  for (int k = 0; k <= g.dim(); ++k) out.cells[k] = FinSet::of(std::move(cells[k]));
  for (int k = 0; k < g.dim(); ++k) {
    std::unordered_map<Label, Label, LabelHash> sm, tm;
    for (auto& [c, v] : srcs[k]) sm.emplace(c, v);
    for (auto& [c, v] : tgts[k]) tm.emplace(c, v);
    out.src.push_back(FinFunction::total(out.cells[k + 1], out.cells[k],
                                         [&](const Label& l) { return sm.at(l); }));
    out.tgt.push_back(FinFunction::total(out.cells[k + 1], out.cells[k],
                                         [&](const Label& l) { return tm.at(l); }));
  }
  return out;
}

namespace {

VGraph from_globular_impl(const GlobularSet& s) {
  if (s.dim() == 0) return VGraph::cells(s.cells[0]);
  // precompute the iterated source down to dimension 1 for each cell
  std::vector<FinFunction> down(s.dim());  // down[k] : cells[k+1] -> cells[1]
  if (s.dim() >= 1) {
    down[0] = FinFunction::identity(s.cells[1]);
    for (int k = 1; k < s.dim(); ++k) down[k] = compose(down[k - 1], s.src[k]);
  }
  VGraph::HomMap homs;
  for (const Label& a : s.cells[0].labels())
    for (const Label& b : s.cells[0].labels()) {
      GlobularSet hs;
      hs.cells.resize(s.dim());
      std::vector<std::vector<Label>> cells(s.dim());
      for (std::size_t i = 0; i < s.cells[1].size(); ++i) {
        const Label& c = s.cells[1].at(i);
        if (s.src[0].apply(c) == a && s.tgt[0].apply(c) == b) cells[0].push_back(c);
      }
      for (int k = 2; k <= s.dim(); ++k)
        for (const Label& c : s.cells[k].labels()) {
          Label base = down[k - 1].apply(c);
          if (s.src[0].apply(base) == a && s.tgt[0].apply(base) == b)
            cells[k - 1].push_back(c);
        }
      bool empty = true;
      for (auto& v : cells) empty = empty && v.empty();
      if (empty) continue;
      for (int k = 0; k < s.dim(); ++k) hs.cells[k] = FinSet::of(cells[k]);
      for (int k = 1; k < s.dim(); ++k) {
        hs.src.push_back(FinFunction::total(hs.cells[k], hs.cells[k - 1], [&](const Label& l) {
          return s.src[k].apply(l);
        }));
        hs.tgt.push_back(FinFunction::total(hs.cells[k], hs.cells[k - 1], [&](const Label& l) {
          return s.tgt[k].apply(l);
        }));
      }
      VGraph h = from_globular_impl(hs);
      if (!h.is_empty()) homs.emplace(std::make_pair(a, b), std::move(h));
    }
  return VGraph::make(s.dim(), s.cells[0], std::move(homs));
}

using Wrapper = std::function<Label(const Label&)>;

VGraphMap build_wrap_iso(const VGraph& x, const VGraph& r, const Wrapper& w) {
  if (x.dim() == 0)
    return VGraphMap::base(FinFunction::total(x.objects(), r.objects(), w));
  FinFunction obj = FinFunction::total(x.objects(), r.objects(), w);
  return VGraphMap::build(x, r, obj,
                          [&](const Label& a, const Label& b) -> std::optional<VGraphMap> {
                            Wrapper inner = [&w, a, b](const Label& e) {
                              return w(Label::tuple({a, b, e}));
                            };
                            return build_wrap_iso(x.hom(a, b), r.hom(w(a), w(b)), inner);
                          });
}

}  // namespace

VGraph from_globular(const GlobularSet& s) {
  s.validate();
  return from_globular_impl(s);
}

VGraphMap globular_roundtrip_iso(const VGraph& g) {
  VGraph r = from_globular(to_globular(g));
  return build_wrap_iso(g, r, [](const Label& l) { return l; });
}

std::vector<std::size_t> globular_cell_counts(const VGraph& g) {
  GlobularSet s = to_globular(g);
  std::vector<std::size_t> out;
  for (const FinSet& c : s.cells) out.push_back(c.size());
  return out;
}

}  // namespace globular
