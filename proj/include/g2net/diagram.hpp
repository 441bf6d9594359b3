#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace g2net {

enum class NodeKind { crossing, trivalent };

/// A node of the combinatorial map. Darts are listed counterclockwise; at a
/// crossing the strand through slots 0 and 2 passes over the strand through
/// slots 1 and 3.
struct Node {
  NodeKind kind = NodeKind::trivalent;
  std::array<int, 4> darts{-1, -1, -1, -1};
  int arity() const { return kind == NodeKind::crossing ? 4 : 3; }
};

/// One face orbit of the map. The boundary lists darts in traversal order
/// (next dart = predecessor in the rotation at the far end of the current
/// edge). A face is simple when its boundary repeats no node and no edge.
struct Face {
  std::vector<int> boundary;
  int trivalentCount = 0;
  bool simple = false;
  bool allTrivalent = false;
};

class Diagram;

/// Assembles a diagram from node lines. Shared by the NET parser and all
/// internal rewiring; every edge label must occur exactly twice, and the
/// assembled rotation system must have genus 0 on every component.
class DiagramBuilder {
 public:
  DiagramBuilder& addCrossing(long a, long b, long c, long d);
  DiagramBuilder& addTrivalent(long a, long b, long c);
  DiagramBuilder& addFreeLoops(int n);
  Diagram build() const;

 private:
  struct Line {
    NodeKind kind;
    std::array<long, 4> labels;
  };
  std::vector<Line> lines_;
  int freeLoops_ = 0;
};

/// A closed 3-net diagram: crossings and trivalent vertices with a rotation
/// system, an edge pairing on darts, and a counter of vertex-free circles.
/// Immutable after construction; all surgery builds fresh diagrams.
class Diagram {
 public:
  Diagram() = default;

  const std::vector<Node>& nodes() const { return nodes_; }
  int nodeCount() const { return static_cast<int>(nodes_.size()); }
  int crossingCount() const;
  int trivalentNodeCount() const;
  int dartCount() const { return static_cast<int>(partner_.size()); }
  int edgeCount() const { return dartCount() / 2; }
  int freeLoops() const { return freeLoops_; }
  bool empty() const { return nodes_.empty() && freeLoops_ == 0; }

  int dartNode(int dart) const { return dartNode_[dart]; }
  int dartSlot(int dart) const { return dartSlot_[dart]; }
  /// Counterclockwise successor around the dart's node.
  int sigma(int dart) const;
  int sigmaInv(int dart) const;
  /// The other dart of the same edge.
  int theta(int dart) const { return partner_[dart]; }
  /// Edge index; the two darts of an edge share it.
  int edgeId(int dart) const { return edgeId_[dart]; }
  bool dartIsOver(int dart) const;

  std::vector<Face> faces() const;
  int faceCount() const { return static_cast<int>(faces().size()); }

  /// Complete invariant of the rotation system with over/under data, up to
  /// relabeling. Mirror images get distinct codes.
  std::string canonicalCode() const;

  /// Swaps the over strand at every crossing; rotation system unchanged.
  Diagram mirror() const;

  /// Node-bearing connected components (free loops are not distributed;
  /// each returned component has freeLoops() == 0).
  std::vector<Diagram> connectedComponents() const;
  Diagram withoutFreeLoops() const;

  /// True if some edge of some component is a bridge. Self-loops and
  /// parallel duplicates are never bridges.
  bool hasBridge() const;

 private:
  friend class DiagramBuilder;
  std::vector<Node> nodes_;
  std::vector<int> partner_;
  std::vector<int> dartNode_;
  std::vector<int> dartSlot_;
  std::vector<int> edgeId_;
  int freeLoops_ = 0;
};

/// Parses the NET text format. One node per line, `#` starts a comment:
///   X a b c d   crossing, darts counterclockwise, strand a-c over
///   V a b c     trivalent vertex, darts counterclockwise
///   O           one vertex-free circle component
/// Edge labels are positive integers, each appearing exactly twice.
Diagram parseNet(const std::string& text);

Diagram disjointUnion(const Diagram& a, const Diagram& b);

/// Local rewiring pattern: `arcs` joins port pairs, `newNodes` are trivalent
/// nodes whose slots reference ports (values >= 0) or bridges between new
/// nodes (value -1-k for bridge k; each bridge id appears exactly twice).
/// Ports and node slots are in counterclockwise / boundary-traversal order.
struct Replacement {
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::array<int, 3>> newNodes;
  static int bridge(int k) { return -1 - k; }
};

/// Removes `removedNodes`, consumes each port (a dart of a removed node)
/// once according to the pattern, and reconnects the severed edges. Closed
/// chains that never reach the remaining diagram become free loops.
Diagram replaceNodes(const Diagram& d, const std::vector<int>& removedNodes,
                     const std::vector<int>& ports, const Replacement& rep);

}  // namespace g2net
