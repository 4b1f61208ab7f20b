#include "senet/partition.hpp"

#include <string>
#include <unordered_map>

namespace senet {

Partition::Partition(std::vector<int> assignment) : assign_(std::move(assignment)) {
  std::unordered_map<int, int> relabel;
  for (int& a : assign_) {
    if (a < 0) throw InputError("negative module id");
    auto [it, inserted] = relabel.try_emplace(a, static_cast<int>(relabel.size()));
    a = it->second;
  }
  count_ = static_cast<int>(relabel.size());
}

Partition Partition::from_modules(int n, const std::vector<VertexSet>& modules) {
  std::vector<int> assign(n, -1);
  for (int j = 0; j < static_cast<int>(modules.size()); ++j)
    for (int v : modules[j]) {
      if (v < 0 || v >= n) throw InputError("module vertex out of range");
      if (assign[v] != -1)
        throw InputError("vertex " + std::to_string(v) +
                         " appears in two modules");
      assign[v] = j;
    }
  for (int v = 0; v < n; ++v)
    if (assign[v] == -1)
      throw InputError("vertex " + std::to_string(v) + " unassigned");
  return Partition(std::move(assign));
}

Partition Partition::trivial(int n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::singletons(int n) {
  std::vector<int> a(n);
  for (int v = 0; v < n; ++v) a[v] = v;
  return Partition(std::move(a));
}

int Partition::module_of(int v) const {
  if (v < 0 || v >= size())
    throw InputError("vertex " + std::to_string(v) + " out of range");
  return assign_[v];
}

std::vector<VertexSet> Partition::modules() const {
  std::vector<VertexSet> out(count_);
  for (int v = 0; v < size(); ++v) out[assign_[v]].push_back(v);
  return out;
}

Partition Partition::merged(int i, int j) const {
  if (i < 0 || i >= count_ || j < 0 || j >= count_ || i == j)
    throw InputError("merged: invalid module pair");
  std::vector<int> a = assign_;
  for (int& x : a)
    if (x == j) x = i;
  return Partition(std::move(a));
}

}  // namespace senet
