#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "tropbun/rational.hpp"

namespace tropbun {

// Chip firing on a connected multigraph given as index pairs. Self-edges are
// ignored (they never move chips). Provides q-reduction, emptiness of the
// complete linear system, and memoized rank.
class ChipEngine {
 public:
  ChipEngine(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }

  // The unique q-reduced divisor equivalent to d.
  std::vector<Int> reduce(std::vector<Int> d, int q) const;

  // Whether d is equivalent to an effective divisor.
  bool winnable(const std::vector<Int>& d, int q = 0) const;

  int rank(const std::vector<Int>& d);

 private:
  struct VecHash {
    size_t operator()(const std::vector<Int>& v) const {
      size_t h = 1469598103934665603ull;
      for (Int x : v) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  std::vector<int> bfs_layers(int q) const;  // distance from q, -1 unreachable

  int n_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, multiplicity)
  std::vector<Int> degree_;                            // without self-edges
  std::unordered_map<std::vector<Int>, int, VecHash> rank_memo_;
};

}  // namespace tropbun
