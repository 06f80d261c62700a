#pragma once

// The quartic A-infinity product m4 on the cohomology of line bundles on P^2,
// computed two independent ways:
//
//  * m4_tree: homotopy transfer summed over planted binary trees
//    (iota at the leaves, the Cech product at inner vertices, Q on interior
//    edges, pi at the root), m4 = -sum_T eps(T) m_T;
//  * m4_closed: the closed 0/1 formulas in terms of rho.
//
// Only arguments with exactly one class in H^2 are supported.

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "decabracket/cech.hpp"
#include "decabracket/multi_index.hpp"

namespace decabracket {

/// Raised for inputs the engine deliberately does not handle (two H^2 slots).
class OutOfScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rooted binary tree whose leaves are read left to right.
class PlantedTree {
 public:
  static PlantedTree leaf();
  static PlantedTree join(const PlantedTree& left, const PlantedTree& right);

  std::size_t leaves() const { return nodes_[root_].leaves; }
  bool is_leaf() const { return nodes_[root_].left < 0; }

  /// Sign of the tree in the m4 sum: the product over inner vertices of
  /// (-1)^{i(j+1)}, i and j the leaf counts of the left and right subtrees.
  int sign() const;

  /// Bracketing with leaves named x1, x2, ..., e.g. "((x1(x2x3))x4)".
  std::string to_string() const;

  friend bool operator==(const PlantedTree& lhs, const PlantedTree& rhs) {
    return lhs.to_string() == rhs.to_string();
  }

 private:
  struct Node {
    int left = -1;
    int right = -1;
    std::size_t leaves = 1;
  };
  friend class TreeWalker;

  std::vector<Node> nodes_{Node{}};
  int root_ = 0;
};

/// All planted binary trees with the given number of leaves (Catalan many).
std::vector<PlantedTree> binary_trees(std::size_t leaves);

/// T1..T5 for four leaves, in the order
/// ((x1(x2x3))x4), x1((x2x3)x4), x1(x2(x3x4)), (x1x2)(x3x4), ((x1x2)x3)x4.
const std::array<PlantedTree, 5>& four_leaf_trees();

/// m_T on H-arguments. Throws OutOfScopeError when two or more arguments
/// have a degree-n component, std::invalid_argument on an arity mismatch.
HElement eval_tree(const PlantedTree& tree, std::span<const HElement> args);

/// 1 iff alpha0+a0 >= 0, alpha1+a1 < 0, alpha1+a1+b1 >= 0,
/// alpha2+a2+b2 < 0 and alpha2+a2+b2+c2 >= 0.
int rho(const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b, const MultiIndex& c);

/// Position of the H^2 argument among the four slots; f, g, h keep their
/// relative order.
enum class M4Ordering { efgh, fegh, fgeh, fghe };

inline constexpr std::array<M4Ordering, 4> kAllOrderings = {M4Ordering::efgh, M4Ordering::fegh,
                                                            M4Ordering::fgeh, M4Ordering::fghe};

std::string_view to_string(M4Ordering ordering);
/// Parses "efgh", "fegh", "fgeh", "fghe"; throws std::invalid_argument.
M4Ordering parse_ordering(std::string_view text);

/// Coefficient times x^exponent in H^0.
struct M4Value {
  int coefficient = 0;
  MultiIndex exponent;

  HElement as_element() const;
  friend bool operator==(const M4Value&, const M4Value&) = default;
};

/// Closed-form m4 with e = x^alpha_{012} and f, g, h = x^a, x^b, x^c placed
/// according to the ordering.
M4Value m4_closed(M4Ordering ordering, const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b,
                  const MultiIndex& c);

/// -sum_T eps(T) m_T(args) over the five four-leaf trees.
HElement m4_tree(std::span<const HElement> args);

/// Tree-evaluated m4 for the same monomial data as m4_closed.
HElement m4_tree(M4Ordering ordering, const MultiIndex& alpha, const MultiIndex& a, const MultiIndex& b,
                 const MultiIndex& c);

/// The four arguments in slot order for the given monomial data.
std::array<HElement, 4> m4_arguments(M4Ordering ordering, const MultiIndex& alpha, const MultiIndex& a,
                                     const MultiIndex& b, const MultiIndex& c);

}  // namespace decabracket
