// Copyright 2026 The groundml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "network_simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace groundml::detail {
namespace {

constexpr int kUp = 1;     // tree arc points from the node to its parent
constexpr int kDown = -1;  // tree arc points from the parent to the node
constexpr std::int8_t kTree = 0;
constexpr std::int8_t kLower = 1;

class NetworkSimplex {
 public:
  NetworkSimplex(const Matrix& costs, const Vector& supply, const Vector& demand)
      : costs_(costs),
        n_(static_cast<int>(costs.rows())),
        m_(static_cast<int>(costs.cols())),
        node_count_(n_ + m_ + 1),
        root_(n_ + m_),
        real_arcs_(static_cast<std::int64_t>(n_) * m_) {
    const std::int64_t all_arcs = real_arcs_ + n_ + m_;
    flow_.assign(static_cast<std::size_t>(all_arcs), 0.0);
    state_.assign(static_cast<std::size_t>(all_arcs), kLower);
    parent_.assign(node_count_, -1);
    pred_.assign(node_count_, -1);
    pred_dir_.assign(node_count_, kUp);
    pi_.assign(node_count_, 0.0);
    depth_.assign(node_count_, 0);
    art_cost_.assign(static_cast<std::size_t>(n_ + m_), 0.0);

    double max_cost = 0.0;
    for (Index j = 0; j < costs.cols(); ++j) {
      for (Index i = 0; i < costs.rows(); ++i) max_cost = std::max(max_cost, std::abs(costs(i, j)));
    }
    const double art = (max_cost + 1.0) * node_count_;
    eps_ = 1e-12 * (max_cost + 1.0);

    block_size_ = std::max<std::int64_t>(
        10, static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(real_arcs_)))));

    // Initial strongly feasible tree: every node hangs off the root through an
    // artificial arc carrying its own supply.
    for (int u = 0; u < n_ + m_; ++u) {
      const double s = u < n_ ? supply(u) : -demand(u - n_);
      const std::int64_t e = real_arcs_ + u;
      parent_[u] = root_;
      pred_[u] = e;
      depth_[u] = 1;
      state_[static_cast<std::size_t>(e)] = kTree;
      if (s >= 0.0) {
        pred_dir_[u] = kUp;
        flow_[static_cast<std::size_t>(e)] = s;
        art_cost_[u] = 0.0;
        pi_[u] = 0.0;
      } else {
        pred_dir_[u] = kDown;
        flow_[static_cast<std::size_t>(e)] = -s;
        art_cost_[u] = art;
        pi_[u] = art;
      }
    }
  }

  TransportSolution run() {
    long iterations = 0;
    while (find_entering_arc()) {
      find_join_node();
      find_leaving_arc();
      change_flow();
      update_tree();
      ++iterations;
    }
    TransportSolution out;
    out.iterations = iterations;
    out.flow = Matrix::Zero(n_, m_);
    double cost = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < m_; ++j) {
        const double f = flow_[static_cast<std::size_t>(static_cast<std::int64_t>(i) * m_ + j)];
        out.flow(i, j) = f;
        cost += f * costs_(i, j);
      }
    }
    double stray = 0.0;
    for (int u = 0; u < n_ + m_; ++u) stray += flow_[static_cast<std::size_t>(real_arcs_ + u)];
    if (stray > 1e-9) throw std::logic_error("transport problem is unbalanced");
    out.cost = cost;
    // Reduced cost c + pi_i - pi_j >= 0, so u = -pi (sources), v = pi (sinks).
    out.source_potential.resize(n_);
    out.target_potential.resize(m_);
    const double shift = n_ > 0 ? pi_[0] : 0.0;
    for (int i = 0; i < n_; ++i) out.source_potential(i) = shift - pi_[i];
    for (int j = 0; j < m_; ++j) out.target_potential(j) = pi_[n_ + j] - shift;
    return out;
  }

 private:
  int source_of(std::int64_t e) const {
    if (e < real_arcs_) return static_cast<int>(e / m_);
    const int u = static_cast<int>(e - real_arcs_);
    return pred_dir_initial(u) == kUp ? u : root_;
  }
  int target_of(std::int64_t e) const {
    if (e < real_arcs_) return n_ + static_cast<int>(e % m_);
    const int u = static_cast<int>(e - real_arcs_);
    return pred_dir_initial(u) == kUp ? root_ : u;
  }
  // Orientation of the artificial arc of u, fixed at construction.
  int pred_dir_initial(int u) const { return art_cost_[u] == 0.0 ? kUp : kDown; }
  double cost_of(std::int64_t e) const {
    if (e < real_arcs_) return costs_(static_cast<Index>(e / m_), static_cast<Index>(e % m_));
    return art_cost_[static_cast<std::size_t>(e - real_arcs_)];
  }

  // Block search pricing over the real arcs.
  bool find_entering_arc() {
    double best = -eps_;
    std::int64_t count = block_size_;
    bool found = false;
    std::int64_t e = next_arc_;
    for (std::int64_t scanned = 0; scanned < real_arcs_; ++scanned) {
      if (state_[static_cast<std::size_t>(e)] == kLower) {
        const int i = static_cast<int>(e / m_);
        const int j = n_ + static_cast<int>(e % m_);
        const double c = costs_(i, j - n_) + pi_[i] - pi_[j];
        if (c < best) {
          best = c;
          in_arc_ = e;
          found = true;
        }
      }
      if (++e == real_arcs_) e = 0;
      if (--count == 0) {
        if (found) break;
        count = block_size_;
      }
    }
    next_arc_ = e;
    return found;
  }

  void find_join_node() {
    int u = source_of(in_arc_);
    int v = target_of(in_arc_);
    while (u != v) {
      if (depth_[u] >= depth_[v]) u = parent_[u];
      else v = parent_[v];
    }
    join_ = u;
  }

  // Strongly feasible leaving rule: ties on the first path go to the node
  // nearest the entering arc, ties on the second path to the node nearest
  // the join.
  void find_leaving_arc() {
    first_ = source_of(in_arc_);
    second_ = target_of(in_arc_);
    delta_ = std::numeric_limits<double>::infinity();
    int result = 0;
    for (int u = first_; u != join_; u = parent_[u]) {
      if (pred_dir_[u] != kUp) continue;
      const double d = flow_[static_cast<std::size_t>(pred_[u])];
      if (d < delta_) {
        delta_ = d;
        u_out_ = u;
        result = 1;
      }
    }
    for (int u = second_; u != join_; u = parent_[u]) {
      if (pred_dir_[u] != kDown) continue;
      const double d = flow_[static_cast<std::size_t>(pred_[u])];
      if (d <= delta_) {
        delta_ = d;
        u_out_ = u;
        result = 2;
      }
    }
    if (result == 0) throw std::logic_error("network simplex: unbounded cycle");
    if (result == 1) {
      u_in_ = first_;
      v_in_ = second_;
    } else {
      u_in_ = second_;
      v_in_ = first_;
    }
  }

  void change_flow() {
    if (delta_ <= 0.0) return;
    flow_[static_cast<std::size_t>(in_arc_)] += delta_;
    for (int u = first_; u != join_; u = parent_[u]) {
      flow_[static_cast<std::size_t>(pred_[u])] -= pred_dir_[u] * delta_;
    }
    for (int u = second_; u != join_; u = parent_[u]) {
      flow_[static_cast<std::size_t>(pred_[u])] += pred_dir_[u] * delta_;
    }
    // The blocking arc leaves with exactly zero flow.
    flow_[static_cast<std::size_t>(pred_[u_out_])] = 0.0;
  }

  void update_tree() {
    state_[static_cast<std::size_t>(pred_[u_out_])] = kLower;
    state_[static_cast<std::size_t>(in_arc_)] = kTree;

    // Re-hang the path u_in .. u_out below v_in, reversing its arcs.
    int prev_node = v_in_;
    std::int64_t prev_arc = in_arc_;
    int prev_dir = source_of(in_arc_) == u_in_ ? kUp : kDown;
    int u = u_in_;
    while (true) {
      const int next = parent_[u];
      const std::int64_t old_arc = pred_[u];
      const int old_dir = pred_dir_[u];
      parent_[u] = prev_node;
      pred_[u] = prev_arc;
      pred_dir_[u] = prev_dir;
      if (u == u_out_) break;
      prev_node = u;
      prev_arc = old_arc;
      prev_dir = -old_dir;
      u = next;
    }
    refresh_potentials();
  }

  // Recomputes depth and potentials top-down from the root.
  void refresh_potentials() {
    child_start_.assign(node_count_ + 1, 0);
    for (int u = 0; u < node_count_; ++u) {
      if (u != root_) ++child_start_[parent_[u] + 1];
    }
    for (int u = 0; u < node_count_; ++u) child_start_[u + 1] += child_start_[u];
    children_.assign(node_count_, 0);
    fill_.assign(child_start_.begin(), child_start_.end() - 1);
    for (int u = 0; u < node_count_; ++u) {
      if (u != root_) children_[fill_[parent_[u]]++] = u;
    }
    queue_.clear();
    queue_.push_back(root_);
    depth_[root_] = 0;
    pi_[root_] = 0.0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int p = queue_[head];
      for (int c = child_start_[p]; c < child_start_[p + 1]; ++c) {
        const int u = children_[c];
        const double cost = cost_of(pred_[u]);
        pi_[u] = pred_dir_[u] == kUp ? pi_[p] - cost : pi_[p] + cost;
        depth_[u] = depth_[p] + 1;
        queue_.push_back(u);
      }
    }
  }

  const Matrix& costs_;
  int n_;
  int m_;
  int node_count_;
  int root_;
  std::int64_t real_arcs_;
  double eps_ = 0.0;
  std::int64_t block_size_ = 10;
  std::int64_t next_arc_ = 0;

  std::vector<double> flow_;
  std::vector<std::int8_t> state_;
  std::vector<double> art_cost_;
  std::vector<int> parent_;
  std::vector<std::int64_t> pred_;
  std::vector<int> pred_dir_;
  std::vector<double> pi_;
  std::vector<int> depth_;

  std::vector<int> child_start_;
  std::vector<int> children_;
  std::vector<int> fill_;
  std::vector<int> queue_;

  std::int64_t in_arc_ = -1;
  int join_ = -1;
  int first_ = -1;
  int second_ = -1;
  int u_in_ = -1;
  int v_in_ = -1;
  int u_out_ = -1;
  double delta_ = 0.0;
};

}  // namespace

TransportSolution solve_transport(const Matrix& costs, const Vector& supply, const Vector& demand) {
  return NetworkSimplex(costs, supply, demand).run();
}

}  // namespace groundml::detail
