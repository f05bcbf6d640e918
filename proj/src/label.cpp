#include "globular/label.hpp"

#include <stdexcept>

namespace globular {

namespace {

bool atom_char(char c) {
  if (c >= 'a' && c <= 'z') return true;
  if (c >= 'A' && c <= 'Z') return true;
  if (c >= '0' && c <= '9') return true;
  return c == '_' || c == '*' || c == '.' || c == ':' || c == '+' || c == '-' ||
         c == '\'' || c == '!' || c == '?' || c == '/' || c == '=';
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Label::Label() : Label(tuple({})) {}

std::size_t Label::compute_hash(const Node& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x9ae16a3b2f90404fULL;
  switch (n.kind) {
    case Kind::Atom:
      h = mix(h, std::hash<std::string>{}(n.name));
      break;
    case Kind::Tuple:
      for (const Label& k : n.kids) h = mix(h, k.hash());
      h = mix(h, n.kids.size());
      break;
    case Kind::Tagged:
      h = mix(h, n.tag);
      h = mix(h, n.kids[0].hash());
      break;
  }
  return h;
}

Label Label::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty atom label");
  for (char c : name)
    if (!atom_char(c))
      throw std::invalid_argument("atom label contains reserved character: " + name);
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->hash = compute_hash(*n);
  return Label(std::move(n));
}

Label Label::of(long long v) { return atom(std::to_string(v)); }

Label Label::tuple(std::vector<Label> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tuple;
  n->kids = std::move(parts);
  n->hash = compute_hash(*n);
  return Label(std::move(n));
}

Label Label::tagged(std::size_t tag, Label value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tagged;
  n->tag = tag;
  n->kids.push_back(std::move(value));
  n->hash = compute_hash(*n);
  return Label(std::move(n));
}

const std::string& Label::atom_name() const {
  if (!is_atom()) throw std::logic_error("label is not an atom");
  return node_->name;
}

const std::vector<Label>& Label::parts() const {
  if (!is_tuple()) throw std::logic_error("label is not a tuple");
  return node_->kids;
}

std::size_t Label::tag() const {
  if (!is_tagged()) throw std::logic_error("label is not tagged");
  return node_->tag;
}

const Label& Label::tag_value() const {
  if (!is_tagged()) throw std::logic_error("label is not tagged");
  return node_->kids[0];
}

bool Label::operator==(const Label& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash) return false;
  return compare(other) == 0;
}

bool Label::operator<(const Label& other) const {
  if (node_ == other.node_) return false;
  return compare(other) < 0;
}

int Label::compare(const Label& other) const {
  if (node_ == other.node_) return 0;
  if (kind() != other.kind())
    return static_cast<int>(kind()) < static_cast<int>(other.kind()) ? -1 : 1;
  switch (kind()) {
    case Kind::Atom: {
      int c = node_->name.compare(other.node_->name);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Tuple: {
      const auto& a = node_->kids;
      const auto& b = other.node_->kids;
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = a[i].compare(b[i]);
        if (c != 0) return c;
      }
      if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
      return 0;
    }
    case Kind::Tagged: {
      if (node_->tag != other.node_->tag) return node_->tag < other.node_->tag ? -1 : 1;
      return node_->kids[0].compare(other.node_->kids[0]);
    }
  }
  return 0;
}

std::string Label::str() const {
  switch (kind()) {
    case Kind::Atom:
      return node_->name;
    case Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < node_->kids.size(); ++i) {
        if (i) out += ",";
        out += node_->kids[i].str();
      }
      out += ")";
      return out;
    }
    case Kind::Tagged:
      return std::to_string(node_->tag) + "#" + node_->kids[0].str();
  }
  return "";
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  char peek() const { return pos < s.size() ? s[pos] : '\0'; }

  Label parse_label() {
    if (peek() == '(') return parse_tuple();
    std::size_t start = pos;
    while (pos < s.size() && atom_char(s[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("bad label syntax: " + s);
    std::string word = s.substr(start, pos - start);
    if (peek() == '#') {
      ++pos;
      std::size_t tag = 0;
      try {
        tag = static_cast<std::size_t>(std::stoull(word));
      } catch (...) {
        throw std::invalid_argument("bad tag in label: " + s);
      }
      return Label::tagged(tag, parse_label());
    }
    return Label::atom(word);
  }

  Label parse_tuple() {
    ++pos;  // '('
    std::vector<Label> parts;
    if (peek() == ')') {
      ++pos;
      return Label::tuple({});
    }
    while (true) {
      parts.push_back(parse_label());
      if (peek() == ',') {
        ++pos;
        continue;
      }
      if (peek() == ')') {
        ++pos;
        return Label::tuple(std::move(parts));
      }
      throw std::invalid_argument("bad tuple syntax: " + s);
    }
  }
};

}  // namespace

Label Label::parse(const std::string& text) {
  Parser p{text};
  Label l = p.parse_label();
  if (p.pos != text.size()) throw std::invalid_argument("trailing characters in label: " + text);
  return l;
}

}  // namespace globular
