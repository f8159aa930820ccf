#include "hipstergf/tree_enum.hpp"

#include <limits>
#include <mutex>
#include <stdexcept>

namespace hipstergf {

PlaneTree PlaneTree::leaf() {
  PlaneTree t;
  t.vertex_count_ = 1;
  return t;
}

PlaneTree PlaneTree::node(std::vector<ChildEdge> children) {
  PlaneTree t;
  t.vertex_count_ = 1;
  for (const ChildEdge& edge : children) {
    if (edge.subtree.empty()) {
      throw std::invalid_argument("PlaneTree::node: child subtree may not be empty");
    }
    t.vertex_count_ += edge.subtree.vertex_count();
  }
  t.children_ = std::move(children);
  return t;
}

namespace {

// Annotation of an edge, packed into one code. Doubles as the byte emitted
// by canonical_encode.
enum AnnotCode : std::uint8_t {
  kOnly = 0,
  kLeft = 1,
  kRight = 2,
  kRightBlue = 3,
  kRightRed = 4,
};

AnnotCode annot_code(Slot slot, EdgeColor color) {
  if (slot == Slot::Only) return kOnly;
  if (slot == Slot::Left) return kLeft;
  if (color == EdgeColor::Blue) return kRightBlue;
  if (color == EdgeColor::Red) return kRightRed;
  return kRight;
}

ChildEdge decode_annot(AnnotCode code, PlaneTree subtree) {
  switch (code) {
    case kOnly:
      return {Slot::Only, EdgeColor::None, std::move(subtree)};
    case kLeft:
      return {Slot::Left, EdgeColor::None, std::move(subtree)};
    case kRight:
      return {Slot::Right, EdgeColor::None, std::move(subtree)};
    case kRightBlue:
      return {Slot::Right, EdgeColor::Blue, std::move(subtree)};
    case kRightRed:
      return {Slot::Right, EdgeColor::Red, std::move(subtree)};
  }
  throw std::logic_error("decode_annot: bad code");
}

// Annotation choices per family: for a single child, and for the ordered
// (first, second) children of a two-child vertex.
struct FamilyShape {
  std::vector<AnnotCode> single;
  std::vector<std::pair<AnnotCode, AnnotCode>> pair;
};

const FamilyShape& family_shape(FamilyId family) {
  static const FamilyShape binary{{kLeft, kRight}, {{kLeft, kRight}}};
  static const FamilyShape one2{{kOnly}, {{kOnly, kOnly}}};
  static const FamilyShape colored{{kLeft, kRightBlue, kRightRed},
                                   {{kLeft, kRightBlue}, {kLeft, kRightRed}}};
  switch (family) {
    case FamilyId::BinaryPlane:
      return binary;
    case FamilyId::PlaneOneTwo:
      return one2;
    case FamilyId::ColoredRightBinary:
      return colored;
  }
  throw std::invalid_argument("family_shape: unknown family");
}

// One tree of size n, as a pair of references into the pools of smaller
// sizes. size_a == 0 means "no children"; size_b == 0 means "one child".
// A subtree reference (size, index) identifies the subtree's full structure
// below its root, excluding its incoming annotation, which lives here in the
// parent record; two sibling subtrees are isomorphic iff their (size, index)
// pairs coincide, because each distinct tree is generated exactly once.
struct TreeRec {
  std::uint32_t child_a = 0;
  std::uint32_t child_b = 0;
  std::uint8_t size_a = 0;
  std::uint8_t size_b = 0;
  std::uint8_t annot_a = 0;
  std::uint8_t annot_b = 0;
};
static_assert(sizeof(TreeRec) == 12);

constexpr int kMaxPoolSize = 40;  // outer reservation bound, far beyond feasible n

class TreeUniverse {
 public:
  explicit TreeUniverse(FamilyId family) : family_(family) {
    pools_.reserve(kMaxPoolSize + 1);
    hip_flags_.reserve(kMaxPoolSize + 1);
    hip_counts_.reserve(kMaxPoolSize + 1);
    pools_.push_back({TreeRec{}});  // the empty tree
    hip_flags_.push_back(std::vector<bool>{true});
    hip_counts_.push_back(1);
  }

  std::recursive_mutex& mutex() { return mutex_; }

  // Builds pools for all sizes up to n. Caller holds the mutex.
  void ensure(int n) {
    while (static_cast<int>(pools_.size()) <= n) {
      build_next();
    }
  }

  std::int64_t total(int n) const { return static_cast<std::int64_t>(pools_[n].size()); }
  std::int64_t hipster(int n) const { return hip_counts_[n]; }

  PlaneTree reconstruct(int size, std::uint32_t index) const {
    if (size == 0) return PlaneTree();
    const TreeRec& rec = pools_[size][index];
    if (rec.size_a == 0) return PlaneTree::leaf();
    std::vector<ChildEdge> children;
    children.push_back(decode_annot(static_cast<AnnotCode>(rec.annot_a),
                                    reconstruct(rec.size_a, rec.child_a)));
    if (rec.size_b != 0) {
      children.push_back(decode_annot(static_cast<AnnotCode>(rec.annot_b),
                                      reconstruct(rec.size_b, rec.child_b)));
    }
    return PlaneTree::node(std::move(children));
  }

 private:
  void build_next() {
    const int n = static_cast<int>(pools_.size());
    const FamilyShape& shape = family_shape(family_);
    std::vector<TreeRec> pool;
    std::vector<bool> hip;
    std::int64_t hip_count = 0;

    auto push = [&](const TreeRec& rec, bool hipster) {
      pool.push_back(rec);
      hip.push_back(hipster);
      if (hipster) ++hip_count;
    };

    if (n == 1) {
      push(TreeRec{}, true);
    } else {
      const int m = n - 1;
      std::int64_t expected = static_cast<std::int64_t>(shape.single.size()) * total(m);
      for (int i = 1; i < m; ++i) {
        expected += static_cast<std::int64_t>(shape.pair.size()) * total(i) * total(m - i);
      }
      if (expected > static_cast<std::int64_t>(std::numeric_limits<std::uint32_t>::max())) {
        throw std::length_error("tree pool for size " + std::to_string(n) +
                                " exceeds the supported index range");
      }
      pool.reserve(static_cast<std::size_t>(expected));
      hip.reserve(static_cast<std::size_t>(expected));

      for (AnnotCode annot : shape.single) {
        const std::size_t count = pools_[m].size();
        for (std::size_t idx = 0; idx < count; ++idx) {
          TreeRec rec;
          rec.child_a = static_cast<std::uint32_t>(idx);
          rec.size_a = static_cast<std::uint8_t>(m);
          rec.annot_a = annot;
          push(rec, hip_flags_[m][idx]);
        }
      }
      for (int i = 1; i < m; ++i) {
        const int j = m - i;
        const std::size_t count_a = pools_[i].size();
        const std::size_t count_b = pools_[j].size();
        for (std::size_t a = 0; a < count_a; ++a) {
          const bool hip_a = hip_flags_[i][a];
          for (std::size_t b = 0; b < count_b; ++b) {
            // Siblings with identical subtrees (same pool slot) break the
            // hipster condition regardless of their incoming annotations.
            const bool hipster = hip_a && hip_flags_[j][b] && !(i == j && a == b);
            for (const auto& [annot_a, annot_b] : shape.pair) {
              TreeRec rec;
              rec.child_a = static_cast<std::uint32_t>(a);
              rec.child_b = static_cast<std::uint32_t>(b);
              rec.size_a = static_cast<std::uint8_t>(i);
              rec.size_b = static_cast<std::uint8_t>(j);
              rec.annot_a = annot_a;
              rec.annot_b = annot_b;
              push(rec, hipster);
            }
          }
        }
      }
    }

    pools_.push_back(std::move(pool));
    hip_flags_.push_back(std::move(hip));
    hip_counts_.push_back(hip_count);
  }

  FamilyId family_;
  std::recursive_mutex mutex_;
  std::vector<std::vector<TreeRec>> pools_;
  std::vector<std::vector<bool>> hip_flags_;
  std::vector<std::int64_t> hip_counts_;
};

TreeUniverse& universe(FamilyId family) {
  static TreeUniverse binary(FamilyId::BinaryPlane);
  static TreeUniverse one2(FamilyId::PlaneOneTwo);
  static TreeUniverse colored(FamilyId::ColoredRightBinary);
  switch (family) {
    case FamilyId::BinaryPlane:
      return binary;
    case FamilyId::PlaneOneTwo:
      return one2;
    case FamilyId::ColoredRightBinary:
      return colored;
  }
  throw std::invalid_argument("universe: unknown family");
}

void check_enum_args(int n, int limit) {
  if (n < 0) {
    throw std::invalid_argument("tree enumeration: negative size " + std::to_string(n));
  }
  if (limit < 0 || limit > kMaxPoolSize) {
    throw std::invalid_argument("tree enumeration: limit " + std::to_string(limit) +
                                " outside [0, " + std::to_string(kMaxPoolSize) + "]");
  }
  if (n > limit) {
    throw std::invalid_argument("tree enumeration: size " + std::to_string(n) +
                                " above the enumeration limit " + std::to_string(limit));
  }
}

bool valid_rec(FamilyId family, const PlaneTree& t) {
  if (t.empty()) return t.children().empty();
  const std::size_t arity = t.children().size();
  if (arity > 2) return false;
  if (family == FamilyId::PlaneOneTwo) {
    for (const ChildEdge& edge : t.children()) {
      if (edge.slot != Slot::Only || edge.color != EdgeColor::None) return false;
    }
  } else {
    if (arity == 1) {
      const Slot s = t.children()[0].slot;
      if (s != Slot::Left && s != Slot::Right) return false;
    } else if (arity == 2) {
      if (t.children()[0].slot != Slot::Left || t.children()[1].slot != Slot::Right) return false;
    }
    for (const ChildEdge& edge : t.children()) {
      if (family == FamilyId::ColoredRightBinary) {
        const bool right = edge.slot == Slot::Right;
        if (right && edge.color == EdgeColor::None) return false;
        if (!right && edge.color != EdgeColor::None) return false;
      } else if (edge.color != EdgeColor::None) {
        return false;
      }
    }
  }
  for (const ChildEdge& edge : t.children()) {
    if (edge.subtree.empty() || !valid_rec(family, edge.subtree)) return false;
  }
  return true;
}

void encode_rec(const PlaneTree& t, std::string& out) {
  if (t.empty()) {
    out += 'e';
    return;
  }
  out += '(';
  for (const ChildEdge& edge : t.children()) {
    out += static_cast<char>('0' + annot_code(edge.slot, edge.color));
    encode_rec(edge.subtree, out);
  }
  out += ')';
}

std::string encode_subtree(const PlaneTree& t) {
  std::string out;
  encode_rec(t, out);
  return out;
}

bool hipster_rec(const PlaneTree& t) {
  if (t.children().size() == 2 &&
      encode_subtree(t.children()[0].subtree) == encode_subtree(t.children()[1].subtree)) {
    return false;
  }
  for (const ChildEdge& edge : t.children()) {
    if (!hipster_rec(edge.subtree)) return false;
  }
  return true;
}

}  // namespace

bool valid_for_family(FamilyId family, const PlaneTree& t) { return valid_rec(family, t); }

bool is_hipster(FamilyId family, const PlaneTree& t) {
  if (!valid_for_family(family, t)) {
    throw std::invalid_argument(std::string("is_hipster: tree is not a valid ") +
                                std::string(family_name(family)) + " tree");
  }
  return hipster_rec(t);
}

std::string canonical_encode(FamilyId /*family*/, const PlaneTree& t) {
  return encode_subtree(t);
}

std::int64_t count_total(FamilyId family, int n, int limit) {
  check_enum_args(n, limit);
  TreeUniverse& u = universe(family);
  std::lock_guard lock(u.mutex());
  u.ensure(n);
  return u.total(n);
}

std::int64_t count_hipster(FamilyId family, int n, int limit) {
  check_enum_args(n, limit);
  TreeUniverse& u = universe(family);
  std::lock_guard lock(u.mutex());
  u.ensure(n);
  return u.hipster(n);
}

void for_each_tree(FamilyId family, int n, const std::function<void(const PlaneTree&)>& visit,
                   int limit) {
  check_enum_args(n, limit);
  TreeUniverse& u = universe(family);
  std::lock_guard lock(u.mutex());
  u.ensure(n);
  const std::int64_t count = u.total(n);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    visit(u.reconstruct(n, static_cast<std::uint32_t>(idx)));
  }
}

std::vector<PlaneTree> enumerate_trees(FamilyId family, int n, int limit) {
  std::vector<PlaneTree> out;
  for_each_tree(
      family, n, [&out](const PlaneTree& t) { out.push_back(t); }, limit);
  return out;
}

}  // namespace hipstergf
