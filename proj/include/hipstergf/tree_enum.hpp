#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hipstergf/families.hpp"

namespace hipstergf {

enum class Slot : std::uint8_t { Only, Left, Right };
enum class EdgeColor : std::uint8_t { None, Blue, Red };

struct ChildEdge;

/// Rooted plane tree with per-edge annotations. The default-constructed value
/// is the empty (zero-vertex) tree; child subtrees are never empty.
class PlaneTree {
 public:
  PlaneTree() = default;
  static PlaneTree leaf();
  static PlaneTree node(std::vector<ChildEdge> children);

  bool empty() const { return vertex_count_ == 0; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<ChildEdge>& children() const { return children_; }

 private:
  std::vector<ChildEdge> children_;
  int vertex_count_ = 0;
};

struct ChildEdge {
  Slot slot = Slot::Only;
  EdgeColor color = EdgeColor::None;
  PlaneTree subtree;
};

/// Guard against combinatorial explosion; overridable per call.
inline constexpr int kDefaultEnumLimit = 16;

/// Structural validity of `t` under the family's arity/annotation rules.
bool valid_for_family(FamilyId family, const PlaneTree& t);

/// True iff no vertex of `t` has two children with isomorphic subtrees, where
/// the comparison covers everything below each child (including deeper marks
/// and colors) but not the children's own incoming edge annotations.
/// Throws std::invalid_argument when `t` is not valid for the family.
bool is_hipster(FamilyId family, const PlaneTree& t);

/// Injective encoding: two subtrees are isomorphic (in the is_hipster sense)
/// iff their encodings are equal.
std::string canonical_encode(FamilyId family, const PlaneTree& t);

std::int64_t count_total(FamilyId family, int n, int limit = kDefaultEnumLimit);
std::int64_t count_hipster(FamilyId family, int n, int limit = kDefaultEnumLimit);

/// Visits every n-vertex tree of the family exactly once, in a deterministic
/// order; n = 0 visits the single empty tree.
void for_each_tree(FamilyId family, int n, const std::function<void(const PlaneTree&)>& visit,
                   int limit = kDefaultEnumLimit);

std::vector<PlaneTree> enumerate_trees(FamilyId family, int n, int limit = kDefaultEnumLimit);

}  // namespace hipstergf
