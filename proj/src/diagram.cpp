#include "g2net/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "g2net/errors.hpp"

namespace g2net {

DiagramBuilder& DiagramBuilder::addCrossing(long a, long b, long c, long d) {
  lines_.push_back({NodeKind::crossing, {a, b, c, d}});
  return *this;
}

DiagramBuilder& DiagramBuilder::addTrivalent(long a, long b, long c) {
  lines_.push_back({NodeKind::trivalent, {a, b, c, 0}});
  return *this;
}

DiagramBuilder& DiagramBuilder::addFreeLoops(int n) {
  freeLoops_ += n;
  return *this;
}

Diagram DiagramBuilder::build() const {
  Diagram d;
  d.freeLoops_ = freeLoops_;
  std::map<long, std::vector<int>> labelDarts;
  for (const auto& line : lines_) {
    Node node;
    node.kind = line.kind;
    int nodeIdx = static_cast<int>(d.nodes_.size());
    for (int s = 0; s < node.arity(); ++s) {
      int dart = static_cast<int>(d.partner_.size());
      node.darts[s] = dart;
      d.partner_.push_back(-1);
      d.dartNode_.push_back(nodeIdx);
      d.dartSlot_.push_back(s);
      labelDarts[line.labels[s]].push_back(dart);
    }
    d.nodes_.push_back(node);
  }
  d.edgeId_.assign(d.partner_.size(), -1);
  int nextEdge = 0;
  for (const auto& [label, darts] : labelDarts) {
    if (darts.size() != 2)
      throw ParseError("edge label " + std::to_string(label) + " appears " +
                       std::to_string(darts.size()) + " times (expected 2)");
    d.partner_[darts[0]] = darts[1];
    d.partner_[darts[1]] = darts[0];
    d.edgeId_[darts[0]] = d.edgeId_[darts[1]] = nextEdge++;
  }

  // Genus check per connected component: V - E + F = 2.
  int n = d.nodeCount();
  std::vector<int> comp(n, -1);
  int compCount = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> stack{start};
    comp[start] = compCount;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int s = 0; s < d.nodes_[v].arity(); ++s) {
        int w = d.dartNode_[d.theta(d.nodes_[v].darts[s])];
        if (comp[w] == -1) {
          comp[w] = compCount;
          stack.push_back(w);
        }
      }
    }
    ++compCount;
  }
  std::vector<int> vCount(compCount, 0), dCount(compCount, 0), fCount(compCount, 0);
  for (int v = 0; v < n; ++v) ++vCount[comp[v]];
  for (int dart = 0; dart < d.dartCount(); ++dart) ++dCount[comp[d.dartNode_[dart]]];
  for (const Face& f : d.faces()) ++fCount[comp[d.dartNode_[f.boundary[0]]]];
  for (int c = 0; c < compCount; ++c) {
    int euler = vCount[c] - dCount[c] / 2 + fCount[c];
    if (euler != 2)
      throw ParseError("not a planar diagram (component has genus " +
                       std::to_string((2 - euler) / 2) + ")");
  }
  return d;
}

int Diagram::crossingCount() const {
  int n = 0;
  for (const Node& node : nodes_)
    if (node.kind == NodeKind::crossing) ++n;
  return n;
}

int Diagram::trivalentNodeCount() const {
  return nodeCount() - crossingCount();
}

int Diagram::sigma(int dart) const {
  const Node& node = nodes_[dartNode_[dart]];
  return node.darts[(dartSlot_[dart] + 1) % node.arity()];
}

int Diagram::sigmaInv(int dart) const {
  const Node& node = nodes_[dartNode_[dart]];
  return node.darts[(dartSlot_[dart] + node.arity() - 1) % node.arity()];
}

bool Diagram::dartIsOver(int dart) const {
  return nodes_[dartNode_[dart]].kind == NodeKind::crossing &&
         dartSlot_[dart] % 2 == 0;
}

std::vector<Face> Diagram::faces() const {
  std::vector<Face> out;
  std::vector<char> seen(dartCount(), 0);
  for (int start = 0; start < dartCount(); ++start) {
    if (seen[start]) continue;
    Face f;
    int d = start;
    do {
      seen[d] = 1;
      f.boundary.push_back(d);
      d = sigmaInv(theta(d));
    } while (d != start);
    std::set<int> nodesSeen, edgesSeen;
    bool repeat = false;
    f.allTrivalent = true;
    for (int b : f.boundary) {
      if (!nodesSeen.insert(dartNode_[b]).second) repeat = true;
      if (!edgesSeen.insert(edgeId_[b]).second) repeat = true;
      if (nodes_[dartNode_[b]].kind == NodeKind::crossing) f.allTrivalent = false;
    }
    for (int node : nodesSeen)
      if (nodes_[node].kind == NodeKind::trivalent) ++f.trivalentCount;
    f.simple = !repeat;
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Rooted breadth-first code: darts are numbered in discovery order
// (sigma-image first, then theta-image); the emitted triples reconstruct
// the map, so equal codes mean isomorphic rooted components.
std::vector<int> rootedCode(const Diagram& d, int root) {
  std::vector<int> index(d.dartCount(), -1);
  std::vector<int> order;
  order.reserve(d.dartCount());
  index[root] = 0;
  order.push_back(root);
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int nb : {d.sigma(order[k]), d.theta(order[k])}) {
      if (index[nb] == -1) {
        index[nb] = static_cast<int>(order.size());
        order.push_back(nb);
      }
    }
  }
  std::vector<int> code;
  code.reserve(order.size() * 3);
  for (int dart : order) {
    code.push_back(index[d.sigma(dart)]);
    code.push_back(index[d.theta(dart)]);
    int flag = d.nodes()[d.dartNode(dart)].kind == NodeKind::trivalent ? 0
               : d.dartIsOver(dart)                                    ? 1
                                                                       : 2;
    code.push_back(flag);
  }
  return code;
}

}  // namespace

std::string Diagram::canonicalCode() const {
  // Minimal rooted code per component, components sorted.
  std::vector<int> comp(dartCount(), -1);
  std::vector<std::vector<int>> compDarts;
  for (int start = 0; start < dartCount(); ++start) {
    if (comp[start] != -1) continue;
    int c = static_cast<int>(compDarts.size());
    compDarts.emplace_back();
    std::vector<int> stack{start};
    comp[start] = c;
    while (!stack.empty()) {
      int dart = stack.back();
      stack.pop_back();
      compDarts[c].push_back(dart);
      for (int nb : {sigma(dart), theta(dart)}) {
        if (comp[nb] == -1) {
          comp[nb] = c;
          stack.push_back(nb);
        }
      }
    }
  }
  std::vector<std::vector<int>> codes;
  for (const auto& darts : compDarts) {
    std::vector<int> best;
    for (int root : darts) {
      std::vector<int> code = rootedCode(*this, root);
      if (best.empty() || code < best) best = std::move(code);
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::ostringstream os;
  os << 'L' << freeLoops_;
  for (const auto& code : codes) {
    os << '|';
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i) os << ',';
      os << code[i];
    }
  }
  return os.str();
}

Diagram Diagram::mirror() const {
  Diagram m = *this;
  for (std::size_t i = 0; i < m.nodes_.size(); ++i) {
    Node& node = m.nodes_[i];
    if (node.kind != NodeKind::crossing) continue;
    std::array<int, 4> rotated{node.darts[1], node.darts[2], node.darts[3],
                               node.darts[0]};
    node.darts = rotated;
    for (int s = 0; s < 4; ++s) m.dartSlot_[node.darts[s]] = s;
  }
  return m;
}

namespace {

// Re-emits a set of nodes through the builder, reusing edge ids as labels.
void emitNodes(DiagramBuilder& b, const Diagram& d, const std::vector<int>& nodes) {
  for (int v : nodes) {
    const Node& node = d.nodes()[v];
    std::array<long, 4> labels{};
    for (int s = 0; s < node.arity(); ++s)
      labels[s] = d.edgeId(node.darts[s]) + 1;
    if (node.kind == NodeKind::crossing)
      b.addCrossing(labels[0], labels[1], labels[2], labels[3]);
    else
      b.addTrivalent(labels[0], labels[1], labels[2]);
  }
}

}  // namespace

std::vector<Diagram> Diagram::connectedComponents() const {
  std::vector<int> comp(nodeCount(), -1);
  std::vector<std::vector<int>> groups;
  for (int start = 0; start < nodeCount(); ++start) {
    if (comp[start] != -1) continue;
    int c = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<int> stack{start};
    comp[start] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      groups[c].push_back(v);
      for (int s = 0; s < nodes_[v].arity(); ++s) {
        int w = dartNode_[theta(nodes_[v].darts[s])];
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<Diagram> out;
  for (const auto& group : groups) {
    DiagramBuilder b;
    emitNodes(b, *this, group);
    out.push_back(b.build());
  }
  return out;
}

Diagram Diagram::withoutFreeLoops() const {
  Diagram d = *this;
  d.freeLoops_ = 0;
  return d;
}

bool Diagram::hasBridge() const {
  // Iterative lowlink over the node multigraph; only the exact edge used to
  // enter a node is skipped, so parallel edges are handled correctly.
  int n = nodeCount();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  for (int start = 0; start < n; ++start) {
    if (disc[start] != -1) continue;
    struct Frame {
      int node;
      int viaEdge;
      int slot;
    };
    std::vector<Frame> stack{{start, -1, 0}};
    disc[start] = low[start] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const Node& node = nodes_[fr.node];
      if (fr.slot < node.arity()) {
        int dart = node.darts[fr.slot++];
        int eid = edgeId_[dart];
        int w = dartNode_[theta(dart)];
        if (w == fr.node) continue;  // self-loop
        if (eid == fr.viaEdge) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, eid, 0});
        } else {
          low[fr.node] = std::min(low[fr.node], disc[w]);
        }
      } else {
        int v = fr.node;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().node;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > disc[parent]) return true;
        }
      }
    }
  }
  return false;
}

Diagram parseNet(const std::string& text) {
  DiagramBuilder b;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto readLabels = [&](int count) {
      std::array<long, 4> labels{};
      for (int i = 0; i < count; ++i) {
        if (!(ls >> labels[i]) || labels[i] <= 0)
          throw ParseError("line " + std::to_string(lineNo) +
                           ": expected " + std::to_string(count) +
                           " positive edge labels after " + tag);
      }
      long extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineNo) + ": trailing tokens");
      return labels;
    };
    if (tag == "X") {
      auto l = readLabels(4);
      b.addCrossing(l[0], l[1], l[2], l[3]);
    } else if (tag == "V") {
      auto l = readLabels(3);
      b.addTrivalent(l[0], l[1], l[2]);
    } else if (tag == "O") {
      long extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineNo) + ": trailing tokens");
      b.addFreeLoops(1);
    } else {
      throw ParseError("line " + std::to_string(lineNo) + ": unknown node tag '" +
                       tag + "'");
    }
  }
  return b.build();
}

Diagram disjointUnion(const Diagram& a, const Diagram& b) {
  DiagramBuilder builder;
  std::vector<int> allA(a.nodeCount()), allB(b.nodeCount());
  for (int i = 0; i < a.nodeCount(); ++i) allA[i] = i;
  for (int i = 0; i < b.nodeCount(); ++i) allB[i] = i;
  emitNodes(builder, a, allA);
  // Shift b's labels past a's.
  for (int v : allB) {
    const Node& node = b.nodes()[v];
    std::array<long, 4> labels{};
    for (int s = 0; s < node.arity(); ++s)
      labels[s] = b.edgeId(node.darts[s]) + 1 + a.edgeCount();
    if (node.kind == NodeKind::crossing)
      builder.addCrossing(labels[0], labels[1], labels[2], labels[3]);
    else
      builder.addTrivalent(labels[0], labels[1], labels[2]);
  }
  builder.addFreeLoops(a.freeLoops() + b.freeLoops());
  return builder.build();
}

Diagram replaceNodes(const Diagram& d, const std::vector<int>& removedNodes,
                     const std::vector<int>& ports, const Replacement& rep) {
  std::vector<char> removed(d.nodeCount(), 0);
  for (int v : removedNodes) removed[v] = 1;

  // Consumer of each port: arc partner or new-node slot.
  struct Consumer {
    bool isArc = false;
    int arcPartner = -1;
    int node = -1, slot = -1;
  };
  std::map<int, Consumer> consumers;
  for (const auto& [i, j] : rep.arcs) {
    consumers[ports[i]] = {true, ports[j], -1, -1};
    consumers[ports[j]] = {true, ports[i], -1, -1};
  }
  for (std::size_t n = 0; n < rep.newNodes.size(); ++n) {
    for (int s = 0; s < 3; ++s) {
      int ref = rep.newNodes[n][s];
      if (ref >= 0)
        consumers[ports[ref]] = {false, -1, static_cast<int>(n), s};
    }
  }
  if (consumers.size() != ports.size())
    throw InternalError("replaceNodes: pattern must consume each port once");
  for (int dart = 0; dart < d.dartCount(); ++dart) {
    if (!removed[d.dartNode(dart)] || consumers.count(dart)) continue;
    int far = d.theta(dart);
    if (!removed[d.dartNode(far)] || consumers.count(far))
      throw InternalError("replaceNodes: non-port dart leaves the removed set");
  }

  long nextLabel = d.edgeCount() + 1;
  std::map<int, long> dartLabel;                 // surviving dart -> new label
  std::map<std::pair<int, int>, long> slotLabel; // (new node, slot) -> label
  std::set<int> visited;

  // Walks from a port along old edges and arcs until it reaches a surviving
  // dart or a new-node slot; labels that terminal with `label`. Returns
  // false if the walk closed up into a loop.
  auto walk = [&](int firstPort, long label) {
    int p = firstPort;
    while (true) {
      visited.insert(p);
      const Consumer& c = consumers.at(p);
      if (!c.isArc) {
        slotLabel[{c.node, c.slot}] = label;
        return true;
      }
      int q = c.arcPartner;
      if (visited.count(q)) return false;  // closed chain
      visited.insert(q);
      int far = d.theta(q);
      if (!removed[d.dartNode(far)]) {
        dartLabel[far] = label;
        return true;
      }
      p = far;
    }
  };

  // Chains entered from the surviving side.
  for (int dart = 0; dart < d.dartCount(); ++dart) {
    if (removed[d.dartNode(dart)] || dartLabel.count(dart)) continue;
    int far = d.theta(dart);
    if (!removed[d.dartNode(far)]) continue;
    long label = nextLabel++;
    dartLabel[dart] = label;
    if (!walk(far, label))
      throw InternalError("replaceNodes: chain from surviving dart closed up");
  }
  // Chains starting at new-node slots (both ends may be slots).
  for (std::size_t n = 0; n < rep.newNodes.size(); ++n) {
    for (int s = 0; s < 3; ++s) {
      int ref = rep.newNodes[n][s];
      if (ref < 0 || slotLabel.count({static_cast<int>(n), s})) continue;
      long label = nextLabel++;
      slotLabel[{static_cast<int>(n), s}] = label;
      int far = d.theta(ports[ref]);
      visited.insert(ports[ref]);
      if (!removed[d.dartNode(far)]) {
        dartLabel[far] = label;
      } else if (!walk(far, label)) {
        throw InternalError("replaceNodes: chain from new slot closed up");
      }
    }
  }
  // Remaining ports close into vertex-free circles.
  int newLoops = 0;
  for (int port : ports) {
    if (visited.count(port)) continue;
    ++newLoops;
    int p = port;
    while (!visited.count(p)) {
      visited.insert(p);
      int q = consumers.at(p).arcPartner;
      visited.insert(q);
      p = d.theta(q);
    }
  }

  // Bridge labels between new nodes.
  std::map<int, long> bridgeLabel;
  for (const auto& nn : rep.newNodes)
    for (int ref : nn)
      if (ref < 0 && !bridgeLabel.count(-1 - ref)) bridgeLabel[-1 - ref] = nextLabel++;

  DiagramBuilder b;
  for (int v = 0; v < d.nodeCount(); ++v) {
    if (removed[v]) continue;
    const Node& node = d.nodes()[v];
    std::array<long, 4> labels{};
    for (int s = 0; s < node.arity(); ++s) {
      int dart = node.darts[s];
      auto it = dartLabel.find(dart);
      labels[s] = it != dartLabel.end() ? it->second : d.edgeId(dart) + 1;
    }
    if (node.kind == NodeKind::crossing)
      b.addCrossing(labels[0], labels[1], labels[2], labels[3]);
    else
      b.addTrivalent(labels[0], labels[1], labels[2]);
  }
  for (std::size_t n = 0; n < rep.newNodes.size(); ++n) {
    std::array<long, 3> labels{};
    for (int s = 0; s < 3; ++s) {
      int ref = rep.newNodes[n][s];
      labels[s] = ref >= 0 ? slotLabel.at({static_cast<int>(n), s})
                           : bridgeLabel.at(-1 - ref);
    }
    b.addTrivalent(labels[0], labels[1], labels[2]);
  }
  b.addFreeLoops(d.freeLoops() + newLoops);
  return b.build();
}

}  // namespace g2net
