#include "subpal/suffix_tree.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace subpal {

std::string_view to_string(ChildStorageMode mode) noexcept {
  return mode == ChildStorageMode::Ordered ? "ordered" : "unordered";
}

std::optional<ChildStorageMode> parse_child_storage_mode(std::string_view text) noexcept {
  if (text == "ordered") return ChildStorageMode::Ordered;
  if (text == "unordered") return ChildStorageMode::Unordered;
  return std::nullopt;
}

SuffixTree::SuffixTree(ChildStorageMode mode) : mode_(mode) {
  nodes_.emplace_back();
}

std::size_t SuffixTree::edge_length(const Node &node) const noexcept {
  const std::size_t end = node.end == kOpenEnd ? text_.size() : node.end;
  return end - node.start;
}

std::size_t SuffixTree::string_depth(NodeId id) const noexcept {
  const Node &node = nodes_[id];
  if (node.end != kOpenEnd) return node.depth;
  return nodes_[node.parent].depth + edge_length(node);
}

std::span<const SuffixTree::Child> SuffixTree::children_of(NodeId id) const noexcept {
  const Node &node = nodes_[id];
  return {children_.data() + node.block, node.child_count};
}

SuffixTree::NodeId SuffixTree::find_child(NodeId parent, Symbol first,
                                          std::uint64_t *probes) const {
  const auto children = children_of(parent);
  std::uint64_t count = 0;
  NodeId found = kNoNode;
  if (mode_ == ChildStorageMode::Ordered) {
    auto it = std::lower_bound(children.begin(), children.end(), first,
                               [&count](const Child &c, Symbol s) {
                                 ++count;
                                 return c.first < s;
                               });
    if (it != children.end()) {
      ++count;
      if (!(first < it->first)) found = it->node;
    }
  } else {
    for (const Child &c : children) {
      ++count;
      if (c.first == first) {
        found = c.node;
        break;
      }
    }
  }
  if (probes != nullptr) *probes += count;
  return found;
}

void SuffixTree::attach_child(NodeId parent, Symbol first, NodeId child) {
  const Index count = nodes_[parent].child_count;
  if (count == 0 || (count >= 2 && std::has_single_bit(count))) {
    const Index capacity = count == 0 ? 2 : 2 * count;
    const auto block = static_cast<Index>(children_.size());
    children_.resize(children_.size() + capacity);
    std::copy_n(children_.begin() + nodes_[parent].block, count, children_.begin() + block);
    nodes_[parent].block = block;
  }

  const auto begin = children_.begin() + nodes_[parent].block;
  auto pos = begin + count;
  if (mode_ == ChildStorageMode::Ordered) {
    pos = std::lower_bound(begin, begin + count, first, [this](const Child &c, Symbol s) {
      ++counters_.child_probes;
      return c.first < s;
    });
    std::move_backward(pos, begin + count, begin + count + 1);
  }
  *pos = Child{first, child};
  ++nodes_[parent].child_count;
}

void SuffixTree::replace_child(NodeId parent, Symbol first, NodeId child) {
  const auto begin = children_.begin() + nodes_[parent].block;
  const auto end = begin + nodes_[parent].child_count;
  if (mode_ == ChildStorageMode::Ordered) {
    auto it = std::lower_bound(begin, end, first, [this](const Child &c, Symbol s) {
      ++counters_.child_probes;
      return c.first < s;
    });
    assert(it != end && it->first == first);
    it->node = child;
  } else {
    for (auto it = begin; it != end; ++it) {
      ++counters_.child_probes;
      if (it->first == first) {
        it->node = child;
        return;
      }
    }
    assert(false && "replace_child: no edge with that first symbol");
  }
}

SuffixTree::NodeId SuffixTree::new_leaf(NodeId parent, std::size_t start) {
  const auto id = static_cast<NodeId>(nodes_.size());
  Node leaf;
  leaf.start = static_cast<Index>(start);
  leaf.end = kOpenEnd;
  leaf.depth = static_cast<Index>(nodes_[parent].depth + (text_.size() - start));
  leaf.parent = parent;
  nodes_.push_back(leaf);
  attach_child(parent, text_[start], id);
  ++counters_.leaves;
  ++counters_.explicit_nodes;
  return id;
}

SuffixTree::NodeId SuffixTree::split_edge(NodeId parent, NodeId child, std::size_t offset) {
  assert(offset > 0 && offset < edge_length(nodes_[child]));
  const auto id = static_cast<NodeId>(nodes_.size());
  const Index start = nodes_[child].start;
  const auto cut = static_cast<Index>(offset);

  Node mid;
  mid.start = start;
  mid.end = start + cut;
  mid.depth = nodes_[parent].depth + cut;
  mid.parent = parent;
  nodes_.push_back(mid);

  replace_child(parent, text_[start], id);
  nodes_[child].start = start + cut;
  nodes_[child].parent = id;
  attach_child(id, text_[start + offset], child);

  ++counters_.internal_nodes;
  ++counters_.explicit_nodes;
  return id;
}

void SuffixTree::canonicalize() {
  while (active_.length > 0) {
    const NodeId child =
        find_child(active_.node, text_[active_.edge], &counters_.child_probes);
    assert(child != kNoNode);
    const std::size_t len = edge_length(nodes_[child]);
    if (active_.length < len) break;
    active_.node = child;
    active_.edge += len;
    active_.length -= len;
  }
}

void SuffixTree::add_letter(Symbol c) {
  if (text_.size() >= kOpenEnd - 1)
    throw std::length_error("SuffixTree::add_letter: text exceeds 32-bit positions");
  text_.push_back(c);
  const std::size_t pos = text_.size() - 1;
  ++remainder_;

  // Internal vertex created earlier in this phase, still waiting for its link.
  NodeId pending = kNoNode;
  auto link_pending = [&](NodeId target) {
    if (pending != kNoNode) {
      nodes_[pending].link = target;
      pending = kNoNode;
    }
  };

  while (remainder_ > 0) {
    if (active_.length == 0) active_.edge = pos;

    const NodeId child =
        find_child(active_.node, text_[active_.edge], &counters_.child_probes);
    if (child == kNoNode) {
      assert(active_.length == 0);
      new_leaf(active_.node, pos);
      link_pending(active_.node);
    } else {
      const std::size_t len = edge_length(nodes_[child]);
      if (active_.length >= len) {
        active_.node = child;
        active_.edge += len;
        active_.length -= len;
        continue;
      }
      if (text_[nodes_[child].start + active_.length] == c) {
        assert(pending == kNoNode || active_.length == 0);
        link_pending(active_.node);
        ++active_.length;
        break;
      }
      const NodeId mid = split_edge(active_.node, child, active_.length);
      new_leaf(mid, pos);
      link_pending(mid);
      pending = mid;
    }

    --remainder_;
    if (active_.node == kRoot) {
      if (active_.length > 0) {
        --active_.length;
        active_.edge = pos - remainder_ + 1;
      }
    } else if (nodes_[active_.node].link != kNoNode) {
      active_.node = nodes_[active_.node].link;
      ++counters_.suffix_link_hops;
    } else {
      // Skip-count from the root over the next shorter suffix, minus its last letter.
      active_.node = kRoot;
      active_.edge = pos - remainder_ + 1;
      active_.length = remainder_ == 0 ? 0 : remainder_ - 1;
      ++counters_.root_rewalks;
    }
  }

  canonicalize();
  assert(nodes_[active_.node].depth + active_.length == remainder_);
  assert(counters_.explicit_nodes <= 2 * text_.size());
}

std::size_t SuffixTree::longest_repeated_suffix() const noexcept {
  return nodes_[active_.node].depth + active_.length;
}

std::size_t SuffixTree::min_unique_suff() const {
  if (text_.empty())
    throw std::logic_error("SuffixTree::min_unique_suff: the text is empty");
  return longest_repeated_suffix() + 1;
}

bool SuffixTree::contains(std::span<const Symbol> pattern) const {
  NodeId node = kRoot;
  std::size_t matched = 0;
  while (matched < pattern.size()) {
    const NodeId child = find_child(node, pattern[matched], nullptr);
    if (child == kNoNode) return false;
    const Node &edge = nodes_[child];
    const std::size_t len = edge_length(edge);
    for (std::size_t k = 0; k < len && matched < pattern.size(); ++k, ++matched) {
      if (text_[edge.start + k] != pattern[matched]) return false;
    }
    node = child;
  }
  return true;
}

std::vector<ExportedNode> SuffixTree::export_nodes() const {
  std::vector<ExportedNode> out;
  out.reserve(nodes_.size());
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    const Node &node = nodes_[id];
    ExportedNode e;
    e.id = id;
    e.parent = node.parent;
    e.depth = string_depth(id);
    e.suffix_link = node.link;
    e.leaf = node.end == kOpenEnd;
    if (id != kRoot) {
      e.label_first = node.start + 1;
      e.label_last = node.start + edge_length(node);
    }
    out.push_back(e);
  }
  return out;
}

void SuffixTree::write_adjacency(std::ostream &out) const {
  auto id_or_dash = [&out](NodeId id) -> std::ostream & {
    if (id == kNoNode) return out << '-';
    return out << id;
  };
  for (const ExportedNode &e : export_nodes()) {
    out << e.id << ' ';
    id_or_dash(e.parent) << ' ' << e.label_first << ' ' << e.label_last << ' '
                         << e.depth << ' ';
    id_or_dash(e.suffix_link) << '\n';
  }
}

} // namespace subpal
