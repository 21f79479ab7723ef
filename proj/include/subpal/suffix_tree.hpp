#ifndef SUBPAL_SUFFIX_TREE_HPP
#define SUBPAL_SUFFIX_TREE_HPP

#include "subpal/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace subpal {

/// How the children of a suffix-tree vertex are stored and searched.
enum class ChildStorageMode : std::uint8_t {
  /// Sorted by first symbol, binary search. Needs a total order on symbols.
  Ordered,
  /// Insertion order, linear scan. Needs only equality.
  Unordered,
};

std::string_view to_string(ChildStorageMode mode) noexcept;
std::optional<ChildStorageMode> parse_child_storage_mode(std::string_view text) noexcept;

/// Instrumentation totals. Every field is monotone non-decreasing.
struct SuffixTreeCounters {
  std::uint64_t explicit_nodes = 1; ///< root + internal vertices + leaves
  std::uint64_t leaves = 0;
  std::uint64_t internal_nodes = 0; ///< branching vertices, root excluded
  std::uint64_t suffix_link_hops = 0;
  std::uint64_t root_rewalks = 0;    ///< suffix-link fallbacks through the root
  std::uint64_t child_probes = 0;    ///< symbol comparisons in child lookups

  friend bool operator==(const SuffixTreeCounters &, const SuffixTreeCounters &) = default;
};

/// One vertex as seen from outside, with 1-based inclusive label positions.
///
/// For the root, `parent`, `label_first` and `label_last` are 0. Leaves are
/// open-ended; their `label_last` is the current text length.
struct ExportedNode {
  using Id = std::uint32_t;
  static constexpr Id kNone = std::numeric_limits<Id>::max();

  Id id = 0;
  Id parent = kNone;
  std::size_t label_first = 0;
  std::size_t label_last = 0;
  std::size_t depth = 0;
  Id suffix_link = kNone;
  bool leaf = false;
};

/// Online suffix tree (Ukkonen's construction) of the growing text.
///
/// No terminator is appended: after each letter the tree is the implicit
/// suffix tree of the text so far, whose leaves are exactly the suffixes that
/// occur once. The active point (v, e, i) locates the longest suffix that
/// occurs at least twice; it is kept canonical, i.e. i < |label(e)| whenever
/// an edge is held. Every internal vertex records its string depth when it
/// is created, which turns the shortest-unique-suffix query into
/// depth(v) + i + 1.
class SuffixTree {
public:
  using NodeId = ExportedNode::Id;

  struct ActivePoint {
    NodeId node = 0;
    /// Text position (0-based) of the first symbol on the active edge; only
    /// meaningful when `length > 0`.
    std::size_t edge = 0;
    std::size_t length = 0;
  };

  explicit SuffixTree(ChildStorageMode mode = ChildStorageMode::Ordered);

  void add_letter(Symbol c);

  /// Length of the shortest suffix of the text that occurs exactly once.
  /// Throws std::logic_error on an empty text.
  std::size_t min_unique_suff() const;

  /// Length of the longest suffix that occurs at least twice.
  std::size_t longest_repeated_suffix() const noexcept;

  /// True if `pattern` is a substring of the current text.
  bool contains(std::span<const Symbol> pattern) const;

  const SuffixTreeCounters &counters() const noexcept { return counters_; }
  const ActivePoint &active_point() const noexcept { return active_; }
  ChildStorageMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return text_.size(); }
  std::span<const Symbol> text() const noexcept { return text_; }

  /// All vertices in creation order (root first).
  std::vector<ExportedNode> export_nodes() const;

  /// Writes one line per vertex: `id parent first last depth link`, using
  /// 1-based positions and `-` for an absent parent or suffix link.
  void write_adjacency(std::ostream &out) const;

private:
  using Index = std::uint32_t;
  static constexpr NodeId kRoot = 0;
  static constexpr NodeId kNoNode = ExportedNode::kNone;
  static constexpr Index kOpenEnd = std::numeric_limits<Index>::max();

  struct Child {
    Symbol first;
    NodeId node;
  };

  // Children of a vertex live in one block of `children_`, sized to the next
  // power of two; a full block is copied to a fresh one twice as large.
  struct Node {
    Index start = 0;          ///< label start, 0-based
    Index end = 0;            ///< label end, exclusive; kOpenEnd for leaves
    Index depth = 0;          ///< string depth; leaves: depth at creation
    NodeId parent = kNoNode;
    NodeId link = kNoNode;
    Index block = 0;          ///< offset of the child block in children_
    Index child_count = 0;
  };

  std::span<const Child> children_of(NodeId id) const noexcept;
  std::size_t edge_length(const Node &node) const noexcept;
  std::size_t string_depth(NodeId id) const noexcept;

  /// Child of `parent` whose label starts with `first`, or kNoNode.
  NodeId find_child(NodeId parent, Symbol first, std::uint64_t *probes) const;
  void attach_child(NodeId parent, Symbol first, NodeId child);
  void replace_child(NodeId parent, Symbol first, NodeId child);

  NodeId new_leaf(NodeId parent, std::size_t start);
  NodeId split_edge(NodeId parent, NodeId child, std::size_t offset);

  /// Descends while the active length covers the whole active edge.
  void canonicalize();

  ChildStorageMode mode_;
  Word text_;
  std::vector<Node> nodes_;
  std::vector<Child> children_;
  ActivePoint active_;
  std::size_t remainder_ = 0;
  SuffixTreeCounters counters_;
};

} // namespace subpal

#endif // SUBPAL_SUFFIX_TREE_HPP
