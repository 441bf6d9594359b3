#pragma once

#include <array>
#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "g2net/diagram.hpp"
#include "g2net/field_value.hpp"
#include "g2net/linear_combination.hpp"

namespace g2net {

/// Shared value cache keyed by canonical code. A key, once bound, is never
/// rebound to a different value; concurrent insert-or-read of equal values
/// is safe.
class MemoCache {
 public:
  std::optional<FieldValue> lookup(const std::string& key) const;
  void store(const std::string& key, const FieldValue& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, FieldValue> map_;
};

/// Mesh sizes handled by the reduction. loop0 is realised by free-loop
/// stripping, tadpole1 by the bridge shortcut; both kept for completeness.
enum class MeshKind : int {
  loop0 = 0,
  tadpole1 = 1,
  bigon2 = 2,
  triangle3 = 3,
  square4 = 4,
  pentagon5 = 5,
};

/// A simple face with only trivalent boundary nodes, ready for replacement.
/// externalDarts lists the legs leaving the mesh in boundary-traversal
/// (cyclic) order.
struct MeshMatch {
  Face face;
  MeshKind kind = MeshKind::loop0;
  std::vector<int> externalDarts;
};

/// Evaluation knobs. The defaults give the invariant; the others exist for
/// the closure oracle (rule restriction) and mutation tests.
struct RuleOptions {
  int maxMeshKind = 5;
  bool swapPentagonShapes = false;
  bool useCache = true;
};

/// Counters reported by --stats.
struct EvalStats {
  long crossingResolutions = 0;
  std::array<long, 6> meshApplications{};  // indexed by mesh size; [0] = loops
  long cacheHits = 0;
  long cacheMisses = 0;
  std::size_t peakTermCount = 0;
};

/// Smallest usable mesh of a crossing-free diagram, ties broken toward the
/// lowest dart id. Empty when no simple all-trivalent face has at most
/// maxKind vertices.
std::optional<MeshMatch> findMesh(const Diagram& d, int maxKind = 5);

/// Builds a MeshMatch for a given face of d (the face must qualify).
MeshMatch makeMeshMatch(const Diagram& d, const Face& face);

/// The replacement sum for one mesh. Throws if the match is stale.
LinearCombination applyMeshRule(const Diagram& d, const MeshMatch& m,
                                const RuleOptions& opts = {});

/// Value of a crossing-free closed diagram: strips free loops, splits
/// connected components, kills bridges, then recursively eliminates minimal
/// meshes with memoization. Total face count strictly decreases at each
/// step (checked).
FieldValue reduceClosedPlanar(const Diagram& d, MemoCache& cache,
                              EvalStats* stats = nullptr,
                              const RuleOptions& opts = {});

/// Full evaluation of any closed diagram: skein expansion followed by
/// planar reduction.
FieldValue evaluate(const Diagram& d, MemoCache& cache,
                    EvalStats* stats = nullptr, const RuleOptions& opts = {});
FieldValue evaluate(const Diagram& d);

/// Consistency oracle for the square and pentagon replacement rules: caps
/// the mesh with every non-crossing pairing (plus-Y for the pentagon) and
/// checks that both sides of the rule evaluate equally using only strictly
/// smaller meshes. Also checks that the closed-up tadpole vanishes both by
/// the bridge shortcut and by its own rule.
struct ClosureReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool allPass() const {
    for (const auto& item : items)
      if (!item.pass) return false;
    return true;
  }
};
ClosureReport verifyRuleClosures(const RuleOptions& opts = {});

}  // namespace g2net
