#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace globular {

/// Structured element identifier. Labels are immutable trees built from
/// atoms, tuples and tagged values, so elements of constructed sets
/// (products, disjoint unions, path cells) are self-describing and compare
/// stably across independent reconstructions.
class Label {
 public:
  enum class Kind : std::uint8_t { Atom, Tuple, Tagged };

  Label();  // empty tuple

  static Label atom(std::string name);
  static Label of(long long n);
  static Label tuple(std::vector<Label> parts);
  static Label tagged(std::size_t tag, Label value);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_tuple() const { return kind() == Kind::Tuple; }
  bool is_tagged() const { return kind() == Kind::Tagged; }

  const std::string& atom_name() const;
  const std::vector<Label>& parts() const;
  std::size_t tag() const;
  const Label& tag_value() const;

  std::size_t hash() const { return node_->hash; }
  std::string str() const;

  bool operator==(const Label& other) const;
  bool operator!=(const Label& other) const { return !(*this == other); }
  bool operator<(const Label& other) const;

  /// Inverse of str(). Throws std::invalid_argument on malformed input.
  static Label parse(const std::string& text);

 private:
  struct Node {
    Kind kind;
    std::string name;          // Atom
    std::vector<Label> kids;   // Tuple (all) / Tagged (single)
    std::size_t tag = 0;       // Tagged
    std::size_t hash = 0;
  };

  explicit Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::size_t compute_hash(const Node& n);
  int compare(const Label& other) const;

  std::shared_ptr<const Node> node_;
};

struct LabelHash {
  std::size_t operator()(const Label& l) const { return l.hash(); }
};

}  // namespace globular
