#pragma once

#include <map>
#include <string>
#include <vector>

#include "globular/finset.hpp"

namespace globular {

/// Substitution shape: outer arity k followed by the k inner arities.
using SubstShape = std::vector<int>;

/// Finite non-symmetric operad in sets, truncated at arity_bound. All
/// substitution tables whose flattened arity stays within the bound are
/// stored explicitly; make() checks the unit laws and associativity for
/// every composite that stays within the bound.
class NSOperad {
 public:
  using SubstFn =
      std::function<Label(const Label& outer, const std::vector<Label>& inner, const SubstShape&)>;

  static NSOperad make(std::string name, int arity_bound, std::vector<FinSet> components,
                       Label unit, const SubstFn& subst);
  /// Table-backed construction (used by the JSON reader); same validation.
  static NSOperad from_tables(std::string name, int arity_bound, std::vector<FinSet> components,
                              Label unit, std::map<SubstShape, std::vector<int>> tables);

  const std::string& name() const { return name_; }
  int arity_bound() const { return arity_bound_; }
  const FinSet& component(int n) const;
  const Label& unit() const { return unit_; }

  bool has_shape(const SubstShape& shape) const { return tables_.count(shape) > 0; }
  Label subst(const SubstShape& shape, const Label& outer,
              const std::vector<Label>& inner) const;
  const std::map<SubstShape, std::vector<int>>& tables() const { return tables_; }

  bool operator==(const NSOperad& other) const;

 private:
  std::string name_;
  int arity_bound_ = 0;
  std::vector<FinSet> components_;
  Label unit_;
  std::map<SubstShape, std::vector<int>> tables_;

  std::size_t row_index(const SubstShape& shape, const Label& outer,
                        const std::vector<Label>& inner) const;
  void validate() const;
};

/// A_n a singleton for every n.
NSOperad terminal_operad(int arity_bound);
/// A_1 a singleton, all other components empty.
NSOperad identity_only_operad(int arity_bound);

/// Finite monoid presented by labels; drives the graded operad family.
struct FiniteMonoid {
  std::string name;
  FinSet elements;
  Label id;
  std::function<Label(const Label&, const Label&)> mult;
};
FiniteMonoid cyclic_monoid(int order);  // integers mod n under addition
FiniteMonoid join_monoid();             // {0,1} under max

/// A_n = M for every n, with substitution multiplying all entries.
NSOperad monoid_graded_operad(int arity_bound, const FiniteMonoid& m);

/// Deterministic family of small valid operads for corpus work.
std::vector<NSOperad> operad_corpus(int arity_bound);

}  // namespace globular
