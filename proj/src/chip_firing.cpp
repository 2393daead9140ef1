#include "tropbun/chip_firing.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "tropbun/errors.hpp"

namespace tropbun {

ChipEngine::ChipEngine(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  check_internal(n >= 1, "empty engine");
  std::vector<std::map<int, int>> mult(static_cast<size_t>(n));
  for (auto [a, b] : edges) {
    check_internal(a >= 0 && a < n && b >= 0 && b < n, "edge index out of range");
    if (a == b) continue;
    mult[static_cast<size_t>(a)][b]++;
    mult[static_cast<size_t>(b)][a]++;
  }
  adj_.resize(static_cast<size_t>(n));
  degree_.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (auto [u, m] : mult[static_cast<size_t>(v)]) {
      adj_[static_cast<size_t>(v)].emplace_back(u, m);
      degree_[static_cast<size_t>(v)] += m;
    }
  }
  auto layers = bfs_layers(0);
  for (int v = 0; v < n; ++v)
    check_internal(layers[static_cast<size_t>(v)] >= 0, "engine graph not connected");
}

std::vector<int> ChipEngine::bfs_layers(int q) const {
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  std::deque<int> queue{q};
  dist[static_cast<size_t>(q)] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [u, m] : adj_[static_cast<size_t>(v)]) {
      (void)m;
      if (dist[static_cast<size_t>(u)] < 0) {
        dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::vector<Int> ChipEngine::reduce(std::vector<Int> d, int q) const {
  check_internal(d.size() == static_cast<size_t>(n_), "divisor length mismatch");
  check_internal(q >= 0 && q < n_, "base out of range");
  const auto dist = bfs_layers(q);
  const int radius = *std::max_element(dist.begin(), dist.end());

  // Phase 1: clear debt outside q, one BFS layer at a time from the rim
  // inward. Firing the complement of {dist < k} in reverse moves chips into
  // layer k without touching deeper layers.
  for (int k = radius; k >= 1; --k) {
    Int shots = 0;
    for (int v = 0; v < n_; ++v) {
      if (dist[static_cast<size_t>(v)] != k || d[static_cast<size_t>(v)] >= 0) continue;
      Int gain = 0;
      for (auto [u, m] : adj_[static_cast<size_t>(v)])
        if (dist[static_cast<size_t>(u)] < k) gain += m;
      check_internal(gain > 0, "layer vertex without inward edge");
      Int need = (-d[static_cast<size_t>(v)] + gain - 1) / gain;
      shots = std::max(shots, need);
    }
    if (shots == 0) continue;
    for (int v = 0; v < n_; ++v) {
      if (dist[static_cast<size_t>(v)] < k) {
        // Outside the fired set: loses along edges into it.
        for (auto [u, m] : adj_[static_cast<size_t>(v)])
          if (dist[static_cast<size_t>(u)] >= k) d[static_cast<size_t>(v)] -= shots * m;
      } else if (dist[static_cast<size_t>(v)] == k) {
        for (auto [u, m] : adj_[static_cast<size_t>(v)])
          if (dist[static_cast<size_t>(u)] < k) d[static_cast<size_t>(v)] += shots * m;
      }
    }
  }

  // Phase 2: Dhar burning; fire the unburnt set in bulk until all burns.
  constexpr long kMaxRounds = 4000000;
  for (long round = 0;; ++round) {
    check_internal(round < kMaxRounds, "reduction did not terminate");
    std::vector<Int> threat(static_cast<size_t>(n_), 0);
    std::vector<char> burnt(static_cast<size_t>(n_), 0);
    std::deque<int> queue{q};
    burnt[static_cast<size_t>(q)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [u, m] : adj_[static_cast<size_t>(v)]) {
        if (burnt[static_cast<size_t>(u)]) continue;
        threat[static_cast<size_t>(u)] += m;
        if (threat[static_cast<size_t>(u)] > d[static_cast<size_t>(u)]) {
          burnt[static_cast<size_t>(u)] = 1;
          queue.push_back(u);
        }
      }
    }
    bool all = true;
    Int shots = 0;
    for (int v = 0; v < n_ && all; ++v)
      if (!burnt[static_cast<size_t>(v)]) all = false;
    if (all) return d;
    bool first = true;
    for (int v = 0; v < n_; ++v) {
      if (burnt[static_cast<size_t>(v)]) continue;
      Int out = 0;
      for (auto [u, m] : adj_[static_cast<size_t>(v)])
        if (burnt[static_cast<size_t>(u)]) out += m;
      if (out == 0) continue;
      Int cap = d[static_cast<size_t>(v)] / out;
      check_internal(cap >= 1, "unburnt vertex cannot fire");
      shots = first ? cap : std::min(shots, cap);
      first = false;
    }
    check_internal(!first, "unburnt set with no boundary");
    for (int v = 0; v < n_; ++v) {
      if (burnt[static_cast<size_t>(v)]) {
        for (auto [u, m] : adj_[static_cast<size_t>(v)])
          if (!burnt[static_cast<size_t>(u)]) d[static_cast<size_t>(v)] += shots * m;
      } else {
        for (auto [u, m] : adj_[static_cast<size_t>(v)])
          if (burnt[static_cast<size_t>(u)]) d[static_cast<size_t>(v)] -= shots * m;
      }
    }
  }
}

bool ChipEngine::winnable(const std::vector<Int>& d, int q) const {
  Int deg = std::accumulate(d.begin(), d.end(), Int{0});
  if (deg < 0) return false;
  auto r = reduce(d, q);
  return r[static_cast<size_t>(q)] >= 0;
}

int ChipEngine::rank(const std::vector<Int>& d) {
  Int deg = std::accumulate(d.begin(), d.end(), Int{0});
  if (deg < 0) return -1;
  auto r = reduce(d, 0);
  if (r[0] < 0) return -1;
  auto it = rank_memo_.find(r);
  if (it != rank_memo_.end()) return it->second;
  int best = -2;
  for (int v = 0; v < n_; ++v) {
    auto next = r;
    next[static_cast<size_t>(v)] -= 1;
    int sub = rank(next);
    if (best == -2 || sub < best) best = sub;
    if (best == -1) break;
  }
  int value = 1 + best;
  rank_memo_.emplace(std::move(r), value);
  return value;
}

}  // namespace tropbun
