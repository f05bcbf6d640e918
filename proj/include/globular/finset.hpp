#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "globular/label.hpp"

namespace globular {

/// Finite set with a deterministic element order. Immutable; cheap to copy.
class FinSet {
 public:
  FinSet();
  static FinSet of(std::vector<Label> labels);
  static FinSet empty() { return FinSet(); }
  static FinSet singleton(Label l) { return of({std::move(l)}); }
  static FinSet range(std::size_t n);  // atoms "0".."n-1"

  std::size_t size() const { return data_->labels.size(); }
  bool is_empty() const { return size() == 0; }
  const std::vector<Label>& labels() const { return data_->labels; }
  const Label& at(std::size_t i) const { return data_->labels.at(i); }
  bool contains(const Label& l) const;
  std::size_t index_of(const Label& l) const;  // throws if absent
  std::optional<std::size_t> find(const Label& l) const;

  bool operator==(const FinSet& other) const;
  bool operator!=(const FinSet& other) const { return !(*this == other); }
  std::string str() const;

 private:
  struct Data {
    std::vector<Label> labels;
    std::unordered_map<Label, std::size_t, LabelHash> index;
  };
  std::shared_ptr<const Data> data_;
};

/// Assignment between finite sets. Entries may be left undefined (the
/// partial form shows up as the out-of-bound part of truncated structure
/// maps); `total()` distinguishes the two.
class FinFunction {
 public:
  FinFunction();

  /// Total map; throws if any entry is missing or lands outside cod.
  static FinFunction total(FinSet dom, FinSet cod,
                           const std::function<Label(const Label&)>& f);
  static FinFunction from_indices(FinSet dom, FinSet cod, std::vector<int> mapping,
                                  bool allow_partial = false);
  static FinFunction identity(const FinSet& s);
  static FinFunction empty_to(const FinSet& cod);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<int>& mapping() const { return mapping_; }

  bool total() const;
  bool defined_at(std::size_t i) const { return mapping_[i] >= 0; }
  Label apply(const Label& l) const;  // throws when undefined
  std::optional<Label> try_apply(const Label& l) const;
  int apply_index(std::size_t i) const { return mapping_[i]; }

  bool is_injective() const;   // on defined entries
  bool is_surjective() const;
  bool is_bijective() const { return total() && is_injective() && is_surjective(); }
  FinFunction inverse() const;  // requires bijective

  bool operator==(const FinFunction& other) const;
  bool operator!=(const FinFunction& other) const { return !(*this == other); }
  std::string str() const;

 private:
  FinSet dom_, cod_;
  std::vector<int> mapping_;
};

/// g after f. Undefined wherever f is undefined or f's value is outside
/// the defined part of g.
FinFunction compose(const FinFunction& g, const FinFunction& f);

struct ProductResult {
  FinSet set;
  FinFunction proj1, proj2;
};
ProductResult product(const FinSet& a, const FinSet& b);
FinSet product_set(const std::vector<FinSet>& factors);  // n-ary, tuple labels

struct CoproductResult {
  FinSet set;
  std::vector<FinFunction> injections;
};
CoproductResult coproduct(const std::vector<FinSet>& family);

struct PullbackResult {
  FinSet set;  // pair labels (a,b) with f(a) = g(b)
  FinFunction p, q;
};
/// Requires cod(f) = cod(g) and both total.
PullbackResult pullback(const FinFunction& f, const FinFunction& g);

/// One square of a family over a coproduct cocone:
///
///   X_i --top--> X
///    |           |
///  left        right
///    v           v
///   Y_i --bot--> Y
struct CoconeSquare {
  FinFunction top, left, bottom;
};

/// Decides, for a family of commuting squares sharing the right leg whose
/// bottom legs form a coproduct cocone, whether the top legs form a
/// coproduct cocone; also checks that this agrees with all squares being
/// pullbacks. Throws on a non-commuting square or when the bottom legs do
/// not form a cocone.
bool check_extensive_family(const std::vector<CoconeSquare>& squares, const FinFunction& right);

bool is_coproduct_cocone(const std::vector<FinFunction>& legs, const FinSet& apex);

/// Exhaustive enumeration of all total functions dom -> cod (oracle use).
std::vector<FinFunction> all_functions(const FinSet& dom, const FinSet& cod);

bool squares_commute(const FinFunction& top, const FinFunction& right, const FinFunction& left,
                     const FinFunction& bottom);

/// Checks the universal property of a candidate pullback cone (P, p, q)
/// over the cospan (f, g) by enumerating all cones from carriers up to
/// max_carrier elements.
bool verify_pullback_universal(const FinFunction& f, const FinFunction& g, const FinSet& apex,
                               const FinFunction& p, const FinFunction& q,
                               std::size_t max_carrier = 4);

}  // namespace globular
