#include "decabracket/ainf.hpp"

#include <stdexcept>

namespace decabracket {

PlantedTree PlantedTree::leaf() { return PlantedTree{}; }

PlantedTree PlantedTree::join(const PlantedTree& left, const PlantedTree& right) {
  PlantedTree out;
  out.nodes_.clear();
  const int offset = static_cast<int>(left.nodes_.size());
  out.nodes_ = left.nodes_;
  for (Node node : right.nodes_) {
    if (node.left >= 0) {
      node.left += offset;
      node.right += offset;
    }
    out.nodes_.push_back(node);
  }
  Node root;
  root.left = left.root_;
  root.right = right.root_ + offset;
  root.leaves = left.leaves() + right.leaves();
  out.nodes_.push_back(root);
  out.root_ = static_cast<int>(out.nodes_.size()) - 1;
  return out;
}

int PlantedTree::sign() const {
  int s = 1;
  for (const Node& node : nodes_) {
    if (node.left < 0) continue;
    const std::size_t i = nodes_[node.left].leaves;
    const std::size_t j = nodes_[node.right].leaves;
    if ((i * (j + 1)) % 2 == 1) s = -s;
  }
  return s;
}

class TreeWalker {
 public:
  TreeWalker(const PlantedTree& tree, std::span<const HElement> args) : tree_(tree), args_(args) {}

  std::string render(int node, std::size_t& next_leaf) const {
    const auto& n = tree_.nodes_[node];
    if (n.left < 0) return "x" + std::to_string(++next_leaf);
    std::string l = render(n.left, next_leaf);
    std::string r = render(n.right, next_leaf);
    return "(" + l + r + ")";
  }

  // Cochain flowing out of `node`: iota at leaves, Q(mu(.,.)) at inner
  // vertices below the root.
  CechElement lift(int node, std::size_t& next_leaf) const {
    const auto& n = tree_.nodes_[node];
    if (n.left < 0) return include(args_[next_leaf++]);
    CechElement l = lift(n.left, next_leaf);
    CechElement r = lift(n.right, next_leaf);
    return homotopy(multiply(l, r));
  }

  HElement evaluate() const {
    std::size_t next_leaf = 0;
    const auto& root = tree_.nodes_[tree_.root_];
    if (root.left < 0) return project(include(args_[0]));
    CechElement l = lift(root.left, next_leaf);
    CechElement r = lift(root.right, next_leaf);
    return project(multiply(l, r));
  }

 private:
  const PlantedTree& tree_;
  std::span<const HElement> args_;
};

std::string PlantedTree::to_string() const {
  std::size_t next_leaf = 0;
  return TreeWalker(*this, {}).render(root_, next_leaf);
}

std::vector<PlantedTree> binary_trees(std::size_t leaves) {
  if (leaves == 0) return {};
  if (leaves == 1) return {PlantedTree::leaf()};
  std::vector<PlantedTree> out;
  for (std::size_t k = 1; k < leaves; ++k)
    for (const auto& l : binary_trees(k))
      for (const auto& r : binary_trees(leaves - k)) out.push_back(PlantedTree::join(l, r));
  return out;
}

const std::array<PlantedTree, 5>& four_leaf_trees() {
  static const std::array<PlantedTree, 5> trees = [] {
    const auto x = PlantedTree::leaf();
    const auto join = [](const PlantedTree& l, const PlantedTree& r) { return PlantedTree::join(l, r); };
    return std::array<PlantedTree, 5>{
        join(join(x, join(x, x)), x),  // T1
        join(x, join(join(x, x), x)),  // T2
        join(x, join(x, join(x, x))),  // T3
        join(join(x, x), join(x, x)),  // T4
        join(join(join(x, x), x), x),  // T5
    };
  }();
  return trees;
}

HElement eval_tree(const PlantedTree& tree, std::span<const HElement> args) {
  if (args.size() != tree.leaves()) throw std::invalid_argument("eval_tree: arity does not match the tree");
  if (args.empty()) throw std::invalid_argument("eval_tree: no arguments");
  const int n = args.front().ambient();
  int top_slots = 0;
  for (const auto& h : args) {
    if (h.ambient() != n) throw std::invalid_argument("eval_tree: ambient dimension mismatch");
    if (!h.top().empty()) ++top_slots;
  }
  if (top_slots > 1) throw OutOfScopeError("eval_tree: more than one argument in top degree is not supported");
  return TreeWalker(tree, args).evaluate();
}

int rho(const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c) {
  return alpha[0] + a[0] >= 0 && alpha[1] + a[1] < 0 && alpha[1] + a[1] + b[1] >= 0 &&
                 alpha[2] + a[2] + b[2] < 0 && alpha[2] + a[2] + b[2] + c[2] >= 0
             ? 1
             : 0;
}

std::string_view to_string(M4Ordering ordering) {
  switch (ordering) {
    case M4Ordering::efgh: return "efgh";
    case M4Ordering::fegh: return "fegh";
    case M4Ordering::fgeh: return "fgeh";
    case M4Ordering::fghe: return "fghe";
  }
  return "?";
}

M4Ordering parse_ordering(std::string_view text) {
  for (M4Ordering o : kAllOrderings)
    if (to_string(o) == text) return o;
  throw std::invalid_argument("unknown m4 ordering '" + std::string(text) + "' (expected efgh, fegh, fgeh or fghe)");
}

HElement M4Value::as_element() const {
  if (coefficient == 0) return HElement(static_cast<int>(exponent.size()) - 1);
  return HElement::monomial(exponent, coefficient);
}

namespace {

void check_m4_data(const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c) {
  if (alpha.size() != 3 || a.size() != 3 || b.size() != 3 || c.size() != 3)
    throw std::invalid_argument("m4: exponent vectors must have length 3");
  if (!alpha.all_negative()) throw std::invalid_argument("m4: alpha must be strictly negative");
  if (!a.all_nonnegative() || !b.all_nonnegative() || !c.all_nonnegative())
    throw std::invalid_argument("m4: a, b, c must be nonnegative");
}

}  // namespace

M4Value m4_closed(M4Ordering ordering, const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b,
                  const MultiIndex& c) {
  check_m4_data(alpha, a, b, c);
  int coefficient = 0;
  switch (ordering) {
    case M4Ordering::efgh:
      coefficient = -rho(alpha, a, b, c);
      break;
    case M4Ordering::fegh:
      coefficient = -rho(alpha, a, b, c) + rho(alpha, b, a, c) - rho(alpha, b, c, a);
      break;
    case M4Ordering::fgeh:
      coefficient = rho(alpha, b, a, c) - rho(alpha, b, c, a) + rho(alpha, c, b, a);
      break;
    case M4Ordering::fghe:
      coefficient = rho(alpha, c, b, a);
      break;
  }
  return M4Value{coefficient, alpha + a + b + c};
}

HElement m4_tree(std::span<const HElement> args) {
  if (args.size() != 4) throw std::invalid_argument("m4_tree: expected four arguments");
  HElement out(args.front().ambient());
  for (const auto& tree : four_leaf_trees()) {
    HElement value = eval_tree(tree, args);
    out -= Rational(tree.sign()) * value;
  }
  return out;
}

std::array<HElement, 4> m4_arguments(M4Ordering ordering, const MultiIndex& alpha, const MultiIndex& a,
                                     const MultiIndex& b, const MultiIndex& c) {
  check_m4_data(alpha, a, b, c);
  const HElement e = HElement::top_monomial(alpha);
  const HElement f = HElement::monomial(a);
  const HElement g = HElement::monomial(b);
  const HElement h = HElement::monomial(c);
  switch (ordering) {
    case M4Ordering::efgh: return {e, f, g, h};
    case M4Ordering::fegh: return {f, e, g, h};
    case M4Ordering::fgeh: return {f, g, e, h};
    case M4Ordering::fghe: return {f, g, h, e};
  }
  throw std::logic_error("m4_arguments: bad ordering");
}

HElement m4_tree(M4Ordering ordering, const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b,
                 const MultiIndex& c) {
  const auto args = m4_arguments(ordering, alpha, a, b, c);
  return m4_tree(std::span<const HElement>(args));
}

}  // namespace decabracket
