#ifndef SENET_PARTITION_HPP
#define SENET_PARTITION_HPP

#include <vector>

#include "senet/graph.hpp"

namespace senet {

/// Total assignment of vertices 0..n-1 to module ids 0..L-1. Module ids are
/// canonical: renumbered by first occurrence when scanning vertices 0..n-1,
/// so every id in [0, L) is non-empty.
class Partition {
 public:
  explicit Partition(std::vector<int> assignment);
  static Partition from_modules(int n, const std::vector<VertexSet>& modules);
  static Partition trivial(int n);
  static Partition singletons(int n);

  int size() const { return static_cast<int>(assign_.size()); }
  int module_count() const { return count_; }
  int module_of(int v) const;
  const std::vector<int>& assignment() const { return assign_; }
  std::vector<VertexSet> modules() const;

  /// Canonical partition with modules i and j merged.
  Partition merged(int i, int j) const;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<int> assign_;
  int count_ = 0;
};

}  // namespace senet

#endif
