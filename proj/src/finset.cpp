#include "globular/finset.hpp"

#include <algorithm>
#include <stdexcept>

namespace globular {

FinSet::FinSet() : data_(std::make_shared<Data>()) {}

FinSet FinSet::of(std::vector<Label> labels) {
  auto d = std::make_shared<Data>();
  d->labels = std::move(labels);
  d->index.reserve(d->labels.size());
  for (std::size_t i = 0; i < d->labels.size(); ++i) {
    auto [it, inserted] = d->index.emplace(d->labels[i], i);
    if (!inserted)
      throw std::invalid_argument("duplicate label in finite set: " + d->labels[i].str());
  }
  FinSet s;
  s.data_ = std::move(d);
  return s;
}

FinSet FinSet::range(std::size_t n) {
  std::vector<Label> ls;
  ls.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ls.push_back(Label::of(static_cast<long long>(i)));
  return of(std::move(ls));
}

bool FinSet::contains(const Label& l) const { return data_->index.count(l) > 0; }

std::size_t FinSet::index_of(const Label& l) const {
  auto it = data_->index.find(l);
  if (it == data_->index.end())
    throw std::out_of_range("label not in set: " + l.str() + " in " + str());
  return it->second;
}

std::optional<std::size_t> FinSet::find(const Label& l) const {
  auto it = data_->index.find(l);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

bool FinSet::operator==(const FinSet& other) const {
  if (data_ == other.data_) return true;
  return data_->labels == other.data_->labels;
}

std::string FinSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += at(i).str();
  }
  return out + "}";
}

FinFunction::FinFunction() = default;

FinFunction FinFunction::total(FinSet dom, FinSet cod,
                               const std::function<Label(const Label&)>& f) {
  std::vector<int> mapping(dom.size(), -1);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    Label image = f(dom.at(i));
    mapping[i] = static_cast<int>(cod.index_of(image));
  }
  return from_indices(std::move(dom), std::move(cod), std::move(mapping));
}

FinFunction FinFunction::from_indices(FinSet dom, FinSet cod, std::vector<int> mapping,
                                      bool allow_partial) {
  if (mapping.size() != dom.size())
    throw std::invalid_argument("mapping size does not match domain");
  for (int v : mapping) {
    if (v < 0) {
      if (!allow_partial) throw std::invalid_argument("undefined entry in total function");
      continue;
    }
    if (static_cast<std::size_t>(v) >= cod.size())
      throw std::invalid_argument("mapping entry outside codomain");
  }
  FinFunction f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.mapping_ = std::move(mapping);
  return f;
}

FinFunction FinFunction::identity(const FinSet& s) {
  std::vector<int> m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) m[i] = static_cast<int>(i);
  return from_indices(s, s, std::move(m));
}

FinFunction FinFunction::empty_to(const FinSet& cod) {
  return from_indices(FinSet::empty(), cod, {});
}

bool FinFunction::total() const {
  return std::all_of(mapping_.begin(), mapping_.end(), [](int v) { return v >= 0; });
}

Label FinFunction::apply(const Label& l) const {
  int v = mapping_[dom_.index_of(l)];
  if (v < 0) throw std::domain_error("function undefined at " + l.str());
  return cod_.at(static_cast<std::size_t>(v));
}

std::optional<Label> FinFunction::try_apply(const Label& l) const {
  auto i = dom_.find(l);
  if (!i) return std::nullopt;
  int v = mapping_[*i];
  if (v < 0) return std::nullopt;
  return cod_.at(static_cast<std::size_t>(v));
}

bool FinFunction::is_injective() const {
  std::vector<char> seen(cod_.size(), 0);
  for (int v : mapping_) {
    if (v < 0) continue;
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool FinFunction::is_surjective() const {
  std::vector<char> seen(cod_.size(), 0);
  for (int v : mapping_)
    if (v >= 0) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

FinFunction FinFunction::inverse() const {
  if (!is_bijective()) throw std::logic_error("inverse of a non-bijection");
  std::vector<int> inv(cod_.size(), -1);
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = static_cast<int>(i);
  return from_indices(cod_, dom_, std::move(inv));
}

bool FinFunction::operator==(const FinFunction& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && mapping_ == other.mapping_;
}

std::string FinFunction::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (i) out += ", ";
    out += dom_.at(i).str() + "->";
    out += mapping_[i] < 0 ? std::string("?") : cod_.at(mapping_[i]).str();
  }
  return out + "]";
}

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (f.cod() != g.dom()) throw std::invalid_argument("composition mismatch");
  std::vector<int> m(f.dom().size(), -1);
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    int v = f.mapping()[i];
    if (v >= 0) m[i] = g.mapping()[v];
  }
  return FinFunction::from_indices(f.dom(), g.cod(), std::move(m), true);
}

ProductResult product(const FinSet& a, const FinSet& b) {
  std::vector<Label> labels;
  labels.reserve(a.size() * b.size());
  for (const Label& x : a.labels())
    for (const Label& y : b.labels()) labels.push_back(Label::tuple({x, y}));
  FinSet p = FinSet::of(std::move(labels));
  FinFunction p1 = FinFunction::total(p, a, [](const Label& l) { return l.parts()[0]; });
  FinFunction p2 = FinFunction::total(p, b, [](const Label& l) { return l.parts()[1]; });
  return {p, p1, p2};
}

FinSet product_set(const std::vector<FinSet>& factors) {
  std::vector<Label> labels{Label::tuple({})};
  for (const FinSet& f : factors) {
    std::vector<Label> next;
    next.reserve(labels.size() * f.size());
    for (const Label& prefix : labels)
      for (const Label& x : f.labels()) {
        std::vector<Label> parts = prefix.parts();
        parts.push_back(x);
        next.push_back(Label::tuple(std::move(parts)));
      }
    labels = std::move(next);
  }
  return FinSet::of(std::move(labels));
}

CoproductResult coproduct(const std::vector<FinSet>& family) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const Label& x : family[i].labels()) labels.push_back(Label::tagged(i, x));
  FinSet s = FinSet::of(std::move(labels));
  std::vector<FinFunction> injections;
  injections.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    injections.push_back(FinFunction::total(
        family[i], s, [i](const Label& l) { return Label::tagged(i, l); }));
  return {s, std::move(injections)};
}

PullbackResult pullback(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.cod()) throw std::invalid_argument("pullback: codomain mismatch");
  if (!f.total() || !g.total()) throw std::invalid_argument("pullback of partial functions");
  std::vector<Label> labels;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < g.dom().size(); ++j)
      if (f.mapping()[i] == g.mapping()[j])
        labels.push_back(Label::tuple({f.dom().at(i), g.dom().at(j)}));
  FinSet s = FinSet::of(std::move(labels));
  FinFunction p = FinFunction::total(s, f.dom(), [](const Label& l) { return l.parts()[0]; });
  FinFunction q = FinFunction::total(s, g.dom(), [](const Label& l) { return l.parts()[1]; });
  return {s, p, q};
}

bool squares_commute(const FinFunction& top, const FinFunction& right, const FinFunction& left,
                     const FinFunction& bottom) {
  return compose(right, top) == compose(bottom, left);
}

bool is_coproduct_cocone(const std::vector<FinFunction>& legs, const FinSet& apex) {
  std::vector<char> hit(apex.size(), 0);
  for (const FinFunction& leg : legs) {
    if (!leg.total() || leg.cod() != apex) return false;
    if (!leg.is_injective()) return false;
    for (int v : leg.mapping()) {
      if (hit[v]) return false;  // overlapping images
      hit[v] = 1;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool check_extensive_family(const std::vector<CoconeSquare>& squares, const FinFunction& right) {
  std::vector<FinFunction> bottoms;
  bottoms.reserve(squares.size());
  for (const CoconeSquare& sq : squares) {
    if (!squares_commute(sq.top, right, sq.left, sq.bottom))
      throw std::invalid_argument("check_extensive_family: non-commuting square");
    bottoms.push_back(sq.bottom);
  }
  if (!is_coproduct_cocone(bottoms, right.cod()))
    throw std::invalid_argument("check_extensive_family: bottom legs are not a coproduct cocone");

  bool all_pullbacks = true;
  for (const CoconeSquare& sq : squares) {
    PullbackResult pb = pullback(right, sq.bottom);
    // comparison X_i -> P induced by (top, left)
    bool iso = true;
    if (sq.top.dom().size() != pb.set.size()) iso = false;
    std::vector<char> seen(pb.set.size(), 0);
    for (std::size_t i = 0; iso && i < sq.top.dom().size(); ++i) {
      Label pair = Label::tuple({sq.top.cod().at(sq.top.mapping()[i]),
                                 sq.bottom.dom().at(sq.left.mapping()[i])});
      auto idx = pb.set.find(pair);
      if (!idx || seen[*idx]) {
        iso = false;
        break;
      }
      seen[*idx] = 1;
    }
    if (!iso) all_pullbacks = false;
  }

  std::vector<FinFunction> tops;
  tops.reserve(squares.size());
  for (const CoconeSquare& sq : squares) tops.push_back(sq.top);
  bool tops_cocone = is_coproduct_cocone(tops, right.dom());

  if (all_pullbacks != tops_cocone)
    throw std::logic_error("extensivity violated: pullback and cocone verdicts disagree");
  return all_pullbacks;
}

std::vector<FinFunction> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<FinFunction> out;
  if (dom.is_empty()) {
    out.push_back(FinFunction::from_indices(dom, cod, {}));
    return out;
  }
  if (cod.is_empty()) return out;
  std::vector<int> m(dom.size(), 0);
  while (true) {
    out.push_back(FinFunction::from_indices(dom, cod, m));
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (++m[i] < static_cast<int>(cod.size())) break;
      m[i] = 0;
    }
    if (i == m.size()) break;
  }
  return out;
}

bool verify_pullback_universal(const FinFunction& f, const FinFunction& g, const FinSet& apex,
                               const FinFunction& p, const FinFunction& q,
                               std::size_t max_carrier) {
  if (compose(f, p) != compose(g, q)) return false;
  for (std::size_t n = 0; n <= max_carrier; ++n) {
    FinSet carrier = FinSet::range(n);
    for (const FinFunction& h : all_functions(carrier, f.dom()))
      for (const FinFunction& k : all_functions(carrier, g.dom())) {
        if (compose(f, h) != compose(g, k)) continue;
        // count factorisations through the apex
        std::size_t fillers = 0;
        for (const FinFunction& u : all_functions(carrier, apex))
          if (compose(p, u) == h && compose(q, u) == k) ++fillers;
        if (fillers != 1) return false;
      }
  }
  return true;
}

}  // namespace globular
