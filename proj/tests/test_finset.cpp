#include <doctest.h>

#include <random>

#include "globular/finset.hpp"

using namespace globular;

namespace {

FinSet named(std::initializer_list<const char*> names) {
  std::vector<Label> ls;
  for (const char* n : names) ls.push_back(Label::atom(n));
  return FinSet::of(std::move(ls));
}

// oracle: pullback size by scanning all pairs
std::size_t pullback_size_oracle(const FinFunction& f, const FinFunction& g) {
  std::size_t n = 0;
  for (int a : f.mapping())
    for (int b : g.mapping())
      if (a == b) ++n;
  return n;
}

FinFunction random_function(const FinSet& dom, const FinSet& cod, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(cod.size()) - 1);
  std::vector<int> m(dom.size());
  for (auto& v : m) v = pick(rng);
  return FinFunction::from_indices(dom, cod, std::move(m));
}

}  // namespace

TEST_CASE("labels order, print and parse") {
  Label a = Label::atom("a");
  Label t = Label::tuple({a, Label::of(3)});
  Label g = Label::tagged(2, t);
  CHECK(a.str() == "a");
  CHECK(t.str() == "(a,3)");
  CHECK(g.str() == "2#(a,3)");
  CHECK(Label::parse(g.str()) == g);
  CHECK(Label::parse("()") == Label::tuple({}));
  CHECK(Label::parse("(x,(y,z))").parts()[1].parts()[0] == Label::atom("y"));
  CHECK(a < t);
  CHECK_THROWS(Label::atom("has space no"));
  CHECK_THROWS(Label::parse("(a"));
}

TEST_CASE("product sizes and labels") {
  FinSet ab = named({"a", "b"});
  FinSet x = named({"x"});
  CHECK(product(ab, x).set.size() == 2);
  CHECK(product(FinSet::empty(), x).set.size() == 0);
  FinSet two = FinSet::range(2), three = FinSet::range(3);
  ProductResult p = product(two, three);
  CHECK(p.set.size() == 6);
  CHECK(p.set.contains(Label::tuple({Label::of(1), Label::of(2)})));
  CHECK(p.proj1.apply(Label::tuple({Label::of(1), Label::of(2)})) == Label::of(1));
}

TEST_CASE("coproduct tags distinguish repeated labels") {
  CoproductResult c1 = coproduct({named({"a"}), named({"b"})});
  CHECK(c1.set.size() == 2);
  CHECK(coproduct({}).set.size() == 0);
  CoproductResult c2 = coproduct({named({"x", "y"}), named({"x"})});
  CHECK(c2.set.size() == 3);
  CHECK(is_coproduct_cocone(c2.injections, c2.set));
  for (const FinFunction& inj : c2.injections) CHECK(inj.is_injective());
  // pairwise disjoint images and pullback of distinct injections empty
  CHECK(pullback(c2.injections[0], c2.injections[1]).set.size() == 0);
}

TEST_CASE("pullback identity case and random scan oracle") {
  FinSet three = FinSet::range(3), four = FinSet::range(4);
  std::mt19937_64 rng(7);
  FinFunction f = random_function(four, three, rng);
  PullbackResult along_id = pullback(FinFunction::identity(three), f);
  CHECK(along_id.set.size() == f.dom().size());
  for (std::size_t i = 0; i < along_id.set.size(); ++i) {
    const Label& pair = along_id.set.at(i);
    CHECK(pair.parts()[0] == f.apply(pair.parts()[1]));
  }
  for (int trial = 0; trial < 25; ++trial) {
    FinFunction a = random_function(FinSet::range(trial % 5), three, rng);
    FinFunction b = random_function(FinSet::range((trial * 3) % 4), three, rng);
    CHECK(pullback(a, b).set.size() == pullback_size_oracle(a, b));
  }
  CHECK_THROWS(pullback(f, FinFunction::identity(four)));
}

TEST_CASE("pullback universal property via cone enumeration") {
  std::mt19937_64 rng(11);
  FinSet c = FinSet::range(3);
  for (int trial = 0; trial < 5; ++trial) {
    FinFunction f = random_function(FinSet::range(3), c, rng);
    FinFunction g = random_function(FinSet::range(2), c, rng);
    PullbackResult pb = pullback(f, g);
    CHECK(verify_pullback_universal(f, g, pb.set, pb.p, pb.q, 3));
  }
  // a wrong apex fails: drop one element when nonempty
  FinFunction f = FinFunction::identity(c);
  PullbackResult pb = pullback(f, f);
  std::vector<Label> fewer(pb.set.labels().begin(), pb.set.labels().end() - 1);
  FinSet small = FinSet::of(fewer);
  FinFunction p = FinFunction::total(small, f.dom(), [](const Label& l) { return l.parts()[0]; });
  FinFunction q = FinFunction::total(small, f.dom(), [](const Label& l) { return l.parts()[1]; });
  CHECK_FALSE(verify_pullback_universal(f, f, small, p, q, 2));
}

TEST_CASE("pullback symmetric up to label swap") {
  std::mt19937_64 rng(3);
  FinSet c = FinSet::range(3);
  FinFunction f = random_function(FinSet::range(4), c, rng);
  FinFunction g = random_function(FinSet::range(3), c, rng);
  PullbackResult fg = pullback(f, g), gf = pullback(g, f);
  REQUIRE(fg.set.size() == gf.set.size());
  for (const Label& l : fg.set.labels())
    CHECK(gf.set.contains(Label::tuple({l.parts()[1], l.parts()[0]})));
}

TEST_CASE("product and coproduct universal properties on small carriers") {
  FinSet a = FinSet::range(2), b = FinSet::range(3);
  ProductResult p = product(a, b);
  for (std::size_t n = 0; n <= 3; ++n) {
    FinSet w = FinSet::range(n);
    for (const FinFunction& h : all_functions(w, a))
      for (const FinFunction& k : all_functions(w, b)) {
        std::size_t fillers = 0;
        for (const FinFunction& u : all_functions(w, p.set))
          if (compose(p.proj1, u) == h && compose(p.proj2, u) == k) ++fillers;
        CHECK(fillers == 1);
      }
  }
  CoproductResult c = coproduct({a, b});
  FinSet w = FinSet::range(2);
  for (const FinFunction& h : all_functions(a, w))
    for (const FinFunction& k : all_functions(b, w)) {
      std::size_t fillers = 0;
      for (const FinFunction& u : all_functions(c.set, w))
        if (compose(u, c.injections[0]) == h && compose(u, c.injections[1]) == k) ++fillers;
      CHECK(fillers == 1);
    }
}

TEST_CASE("extensive family check") {
  FinSet y0 = named({"p"}), y1 = named({"q", "r"});
  CoproductResult cop = coproduct({y0, y1});
  // canonical family: X_i the fibres of a map into the coproduct
  FinSet x = named({"u", "v", "w"});
  FinFunction right = FinFunction::total(x, cop.set, [&](const Label& l) {
    if (l == Label::atom("u")) return Label::tagged(0, Label::atom("p"));
    if (l == Label::atom("v")) return Label::tagged(1, Label::atom("q"));
    return Label::tagged(1, Label::atom("r"));
  });
  FinSet x0 = named({"u"}), x1 = named({"v", "w"});
  CoconeSquare s0{FinFunction::total(x0, x, [](const Label& l) { return l; }),
                  FinFunction::total(x0, y0, [](const Label&) { return Label::atom("p"); }),
                  cop.injections[0]};
  CoconeSquare s1{FinFunction::total(x1, x, [](const Label& l) { return l; }),
                  FinFunction::total(x1, y1,
                                     [](const Label& l) {
                                       return l == Label::atom("v") ? Label::atom("q")
                                                                    : Label::atom("r");
                                     }),
                  cop.injections[1]};
  CHECK(check_extensive_family({s0, s1}, right));

  // single-summand family: identity cocone
  CoconeSquare id_square{FinFunction::identity(x), FinFunction::identity(x),
                         FinFunction::identity(x)};
  CHECK(check_extensive_family({id_square}, FinFunction::identity(x)));

  // a non-injective top leg (two elements collapsed) spoils both verdicts at once
  FinSet x1twice = named({"v", "w"});
  FinFunction right2 = FinFunction::total(x, cop.set, [&](const Label& l) {
    if (l == Label::atom("u")) return Label::tagged(0, Label::atom("p"));
    return Label::tagged(1, Label::atom("q"));
  });
  CoconeSquare collapse{FinFunction::total(x1twice, x, [](const Label&) { return Label::atom("v"); }),
                        FinFunction::total(x1twice, y1, [](const Label&) { return Label::atom("q"); }),
                        cop.injections[1]};
  CHECK_FALSE(check_extensive_family({s0, collapse}, right2));
}

TEST_CASE("composition is partial where either factor is undefined") {
  FinSet a = FinSet::range(2), b = FinSet::range(2);
  FinFunction part = FinFunction::from_indices(a, b, {0, -1}, true);
  CHECK_FALSE(part.total());
  FinFunction comp = compose(FinFunction::identity(b), part);
  CHECK(comp.apply_index(1) == -1);
  CHECK(comp.apply_index(0) == 0);
  CHECK_THROWS(FinFunction::from_indices(a, b, {0, -1}));
}
