// Copyright 2026 The Scoreplay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hash-consed immutable game trees.
//
// Every BasicTree handle points into a process-wide pool that holds at most
// one live node per distinct (label, left options, right options) triple.
// Because children are themselves interned, two handles are structurally
// identical (G ≅ H) exactly when they point at the same node, so identity is
// an O(1) pointer test and memo tables can key on node addresses. Entries
// are weak: a node leaves the pool when its last handle goes away.
//
// Options are kept sorted by a canonical structural order, so the option
// lists of a node are multisets and printing is deterministic.

#ifndef SCOREPLAY_DETAIL_TREE_HPP_
#define SCOREPLAY_DETAIL_TREE_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <type_traits>
#include <unordered_set>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scoreplay {
namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::size_t value) {
  // boost::hash_combine with a 64-bit constant.
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

template <class Label>
struct TreeNode;

template <class Label>
class TreePool;

template <class Label>
class BasicTree {
 public:
  using Node = TreeNode<Label>;
  using Options = std::vector<BasicTree>;

  // A leaf carrying `label`.
  explicit BasicTree(Label label = Label{})
      : BasicTree(std::move(label), Options{}, Options{}) {}

  // Builds and interns a node; option order is normalized here.
  BasicTree(Label label, Options left, Options right);

  const Label& label() const { return node_->label; }
  // Node score, for labelled (scoring-play) trees.
  const Label& score() const
    requires(!std::is_empty_v<Label>)
  {
    return node_->label;
  }
  std::span<const BasicTree> left() const { return node_->left; }
  std::span<const BasicTree> right() const { return node_->right; }
  bool is_leaf() const { return node_->left.empty() && node_->right.empty(); }

  // Longest path of moves from the root.
  int depth() const { return node_->depth; }
  // Number of distinct subtrees (the DAG size, counting this node).
  std::size_t dag_size() const;

  std::size_t hash() const { return node_->hash; }
  const void* id() const { return node_.get(); }

  // Structural identity (≅).
  friend bool operator==(const BasicTree& a, const BasicTree& b) {
    return a.node_ == b.node_;
  }

 private:
  friend class TreePool<Label>;
  explicit BasicTree(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

template <class Label>
struct TreeNode {
  Label label;
  std::vector<BasicTree<Label>> left;
  std::vector<BasicTree<Label>> right;
  std::size_t hash = 0;
  int depth = 0;
};

// Canonical structural order: label, option counts, then options
// lexicographically. Distinct interned nodes never compare equal.
template <class Label>
std::strong_ordering structural_compare(const BasicTree<Label>& a,
                                        const BasicTree<Label>& b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = a.label() <=> b.label(); c != 0) return c;
  if (auto c = a.left().size() <=> b.left().size(); c != 0) return c;
  if (auto c = a.right().size() <=> b.right().size(); c != 0) return c;
  for (std::size_t i = 0; i < a.left().size(); ++i) {
    if (auto c = structural_compare(a.left()[i], b.left()[i]); c != 0) return c;
  }
  for (std::size_t i = 0; i < a.right().size(); ++i) {
    if (auto c = structural_compare(a.right()[i], b.right()[i]); c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

template <class Label>
struct StructuralLess {
  bool operator()(const BasicTree<Label>& a, const BasicTree<Label>& b) const {
    return structural_compare(a, b) < 0;
  }
};

template <class Label>
class TreePool {
 public:
  using Node = TreeNode<Label>;
  using Tree = BasicTree<Label>;

  static TreePool& instance() {
    // Leaked on purpose: handles held by static objects may outlive main().
    static TreePool* pool = new TreePool;
    return *pool;
  }

  std::shared_ptr<const Node> intern(Label label, std::vector<Tree> left,
                                     std::vector<Tree> right) {
    std::size_t h = std::hash<Label>{}(label);
    h = hash_mix(h, left.size());
    for (const Tree& t : left) h = hash_mix(h, t.hash());
    h = hash_mix(h, 0x51ed27ULL);
    for (const Tree& t : right) h = hash_mix(h, t.hash());

    Shard& shard = shards_[h % kShards];
    std::lock_guard<std::mutex> lock(shard.mutex);
    auto [first, last] = shard.entries.equal_range(h);
    for (auto it = first; it != last; ++it) {
      // The raw node stays valid here even if it is dying: its deleter
      // must take this shard's lock before freeing it.
      const Node* n = it->second.raw;
      if (n->label == label && n->left == left && n->right == right) {
        if (auto alive = it->second.weak.lock()) return alive;
      }
    }
    int depth = 0;
    for (const Tree& t : left) depth = std::max(depth, t.depth() + 1);
    for (const Tree& t : right) depth = std::max(depth, t.depth() + 1);
    auto* raw = new Node{std::move(label), std::move(left), std::move(right),
                         h, depth};
    std::shared_ptr<const Node> owned(raw, [](const Node* p) {
      instance().release(p);
      delete p;
    });
    shard.entries.emplace(h, Entry{raw, owned});
    return owned;
  }

  std::size_t live_nodes() {
    std::size_t n = 0;
    for (Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mutex);
      n += s.entries.size();
    }
    return n;
  }

 private:
  static constexpr std::size_t kShards = 64;

  struct Entry {
    const Node* raw;
    std::weak_ptr<const Node> weak;
  };
  struct Shard {
    std::mutex mutex;
    std::unordered_multimap<std::size_t, Entry> entries;
  };

  void release(const Node* p) {
    Shard& shard = shards_[p->hash % kShards];
    std::lock_guard<std::mutex> lock(shard.mutex);
    auto [first, last] = shard.entries.equal_range(p->hash);
    for (auto it = first; it != last; ++it) {
      if (it->second.raw == p) {
        shard.entries.erase(it);
        return;
      }
    }
  }

  std::array<Shard, kShards> shards_;
};

template <class Label>
BasicTree<Label>::BasicTree(Label label, Options left, Options right) {
  std::sort(left.begin(), left.end(), StructuralLess<Label>{});
  std::sort(right.begin(), right.end(), StructuralLess<Label>{});
  node_ = TreePool<Label>::instance().intern(std::move(label), std::move(left),
                                             std::move(right));
}

template <class Label>
std::size_t BasicTree<Label>::dag_size() const {
  std::unordered_set<const void*> seen;
  std::vector<BasicTree> stack{*this};
  while (!stack.empty()) {
    BasicTree t = stack.back();
    stack.pop_back();
    if (!seen.insert(t.id()).second) continue;
    for (const BasicTree& c : t.left()) stack.push_back(c);
    for (const BasicTree& c : t.right()) stack.push_back(c);
  }
  return seen.size();
}

}  // namespace detail
}  // namespace scoreplay

template <class Label>
struct std::hash<scoreplay::detail::BasicTree<Label>> {
  std::size_t operator()(const scoreplay::detail::BasicTree<Label>& t) const {
    return t.hash();
  }
};

#endif  // SCOREPLAY_DETAIL_TREE_HPP_
