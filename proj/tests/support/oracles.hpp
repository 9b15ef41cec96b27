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
// Independent reference implementations used only by tests. Nothing here
// calls into the solver, clustering, or metric code paths it checks.

#ifndef GROUNDML_TESTS_ORACLES_HPP_
#define GROUNDML_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "groundml/dataset.hpp"
#include "groundml/types.hpp"

namespace groundml::testing {

// Minimum of (1/n) sum_i c(i, perm(i)) over all permutations. For uniform
// marginals of equal size this equals the transport optimum (Birkhoff).
inline double exhaustive_matching_cost(const Matrix& costs) {
  const Index n = costs.rows();
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (Index i = 0; i < n; ++i) total += costs(i, perm[static_cast<std::size_t>(i)]);
    best = std::min(best, total / static_cast<double>(n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Enumerates every choice of n + m - 1 cells as a candidate basis, solves the
// equality system on those cells, keeps the nonnegative solutions and returns
// the cheapest. Exponential; meant for n, m <= 4.
inline double lp_vertex_enumeration_cost(const Matrix& costs, const Vector& a, const Vector& b) {
  const Index n = costs.rows();
  const Index m = costs.cols();
  const Index cells = n * m;
  const Index basis = n + m - 1;
  // Constraint rows: all row sums, then the first m-1 column sums (the last
  // column sum is implied by total mass).
  Matrix full(n + m - 1, cells);
  full.setZero();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      full(i, i * m + j) = 1.0;
      if (j < m - 1) full(n + j, i * m + j) = 1.0;
    }
  }
  Vector rhs(n + m - 1);
  rhs.head(n) = a;
  rhs.tail(m - 1) = b.head(m - 1);

  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> pick(static_cast<std::size_t>(cells), false);
  std::fill(pick.begin(), pick.begin() + basis, true);
  do {
    std::vector<Index> chosen;
    for (Index c = 0; c < cells; ++c) {
      if (pick[static_cast<std::size_t>(c)]) chosen.push_back(c);
    }
    Matrix sub(basis, basis);
    for (Index c = 0; c < basis; ++c) sub.col(c) = full.col(chosen[static_cast<std::size_t>(c)]);
    Eigen::FullPivLU<Matrix> lu(sub);
    if (lu.rank() < basis) continue;
    const Vector x = lu.solve(rhs);
    if ((x.array() < -1e-12).any()) continue;
    double cost = 0.0;
    for (Index c = 0; c < basis; ++c) {
      const Index cell = chosen[static_cast<std::size_t>(c)];
      cost += std::max(0.0, x(c)) * costs(cell / m, cell % m);
    }
    best = std::min(best, cost);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

// W1 between equal-size uniform 1-D samples: mean gap of the sorted samples.
inline double sorted_matching_1d(std::vector<double> x, std::vector<double> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += std::abs(x[i] - y[i]);
  return total / static_cast<double>(x.size());
}

// Central differences of a scalar function of a matrix, one entry at a time.
inline Matrix central_difference(const std::function<double(const Matrix&)>& f, const Matrix& at,
                                 double step) {
  Matrix grad(at.rows(), at.cols());
  for (Index r = 0; r < at.rows(); ++r) {
    for (Index c = 0; c < at.cols(); ++c) {
      Matrix plus = at;
      Matrix minus = at;
      plus(r, c) += step;
      minus(r, c) -= step;
      grad(r, c) = (f(plus) - f(minus)) / (2.0 * step);
    }
  }
  return grad;
}

// True when forward and backward differences agree for every entry, i.e. no
// kink (plan switch or hinge change) lies within one step.
inline bool one_sided_consistent(const std::function<double(const Matrix&)>& f, const Matrix& at,
                                 double step, double tol) {
  const double f0 = f(at);
  for (Index r = 0; r < at.rows(); ++r) {
    for (Index c = 0; c < at.cols(); ++c) {
      Matrix plus = at;
      Matrix minus = at;
      plus(r, c) += step;
      minus(r, c) -= step;
      const double fwd = (f(plus) - f0) / step;
      const double bwd = (f0 - f(minus)) / step;
      if (std::abs(fwd - bwd) > tol * std::max(1.0, std::abs(fwd))) return false;
    }
  }
  return true;
}

inline double relative_error(const Matrix& got, const Matrix& want) {
  return (got - want).norm() / std::max(want.norm(), 1e-12);
}

// Naive agglomeration: every step recomputes the linkage between all current
// clusters from the original matrix and merges the closest pair (ties: pair
// of smallest member indices). Stops at `target` clusters or, when
// `threshold` is finite, before a merge above the threshold.
inline std::vector<int> naive_agglomerative(const Matrix& d, const std::string& linkage, int target,
                                            double threshold = std::numeric_limits<double>::infinity()) {
  const Index n = d.rows();
  std::vector<std::vector<Index>> clusters;
  for (Index i = 0; i < n; ++i) clusters.push_back({i});
  auto link = [&](const std::vector<Index>& u, const std::vector<Index>& v) {
    double sum = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (Index p : u) {
      for (Index q : v) {
        sum += d(p, q);
        lo = std::min(lo, d(p, q));
        hi = std::max(hi, d(p, q));
      }
    }
    if (linkage == "single") return lo;
    if (linkage == "complete") return hi;
    return sum / static_cast<double>(u.size() * v.size());
  };
  while (static_cast<int>(clusters.size()) > target) {
    std::size_t bu = 0, bv = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < clusters.size(); ++u) {
      for (std::size_t v = u + 1; v < clusters.size(); ++v) {
        const double l = link(clusters[u], clusters[v]);
        if (l < best) {
          best = l;
          bu = u;
          bv = v;
        }
      }
    }
    if (best > threshold) break;
    clusters[bu].insert(clusters[bu].end(), clusters[bv].begin(), clusters[bv].end());
    std::sort(clusters[bu].begin(), clusters[bu].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bv));
    std::sort(clusters.begin(), clusters.end());
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  // Clusters are sorted by smallest member, so numbering follows first occurrence.
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (Index i : clusters[c]) labels[static_cast<std::size_t>(i)] = static_cast<int>(c);
  }
  return labels;
}

struct ReferenceScores {
  double mi, ari, vi;
};

// MI and entropies by direct probability sums over the label alphabets, and
// ARI by explicit pair counting over all item pairs.
inline ReferenceScores reference_clustering_scores(const std::vector<int>& u, const std::vector<int>& v) {
  const std::size_t n = u.size();
  const std::set<int> lu(u.begin(), u.end());
  const std::set<int> lv(v.begin(), v.end());
  auto prob = [&](const std::function<bool(std::size_t)>& pred) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += pred(i) ? 1 : 0;
    return static_cast<double>(c) / static_cast<double>(n);
  };
  double mi = 0.0, hu = 0.0, hv = 0.0;
  for (int a : lu) {
    const double pa = prob([&](std::size_t i) { return u[i] == a; });
    hu -= pa * std::log(pa);
    for (int b : lv) {
      const double pb = prob([&](std::size_t i) { return v[i] == b; });
      const double pab = prob([&](std::size_t i) { return u[i] == a && v[i] == b; });
      if (pab > 0.0) mi += pab * std::log(pab / (pa * pb));
    }
  }
  for (int b : lv) {
    const double pb = prob([&](std::size_t i) { return v[i] == b; });
    hv -= pb * std::log(pb);
  }
  // Pair counting: same/same, same-in-u, same-in-v over unordered pairs.
  double both = 0.0, in_u = 0.0, in_v = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool su = u[i] == u[j];
      const bool sv = v[i] == v[j];
      both += (su && sv) ? 1.0 : 0.0;
      in_u += su ? 1.0 : 0.0;
      in_v += sv ? 1.0 : 0.0;
      pairs += 1.0;
    }
  }
  const double expected = pairs > 0.0 ? in_u * in_v / pairs : 0.0;
  const double maximum = 0.5 * (in_u + in_v);
  const double ari = maximum == expected ? 1.0 : (both - expected) / (maximum - expected);
  return {mi, ari, hu + hv - 2.0 * mi};
}

// Naive weighted kNN by full sort per query.
inline std::vector<int> naive_knn(const Matrix& dist, const std::vector<int>& labels, int k) {
  std::vector<int> out;
  for (Index r = 0; r < dist.rows(); ++r) {
    std::vector<std::pair<double, Index>> row;
    for (Index c = 0; c < dist.cols(); ++c) row.emplace_back(dist(r, c), c);
    std::sort(row.begin(), row.end());
    std::map<int, double> weight, total;
    for (int i = 0; i < std::min<int>(k, static_cast<int>(row.size())); ++i) {
      const int l = labels[static_cast<std::size_t>(row[static_cast<std::size_t>(i)].second)];
      weight[l] += 1.0 / (row[static_cast<std::size_t>(i)].first + 1e-12);
      total[l] += row[static_cast<std::size_t>(i)].first;
    }
    int best = -1;
    for (const auto& [l, w] : weight) {
      if (best < 0 || w > weight[best] || (w == weight[best] && total[l] < total[best])) best = l;
    }
    out.push_back(best);
  }
  return out;
}

// Random distribution with uniform weights.
inline EmpiricalDistribution random_distribution(std::mt19937_64& rng, Index n, Index dim,
                                                 const std::string& id, int label, double shift = 0.0) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RowMatrix pts(n, dim);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < dim; ++c) pts(r, c) = normal(rng) + (c == 0 ? shift : 0.0);
  }
  return make_distribution(id, std::move(pts), label);
}

// `classes` x `per_class` random distributions; class c is shifted by c along axis 0.
inline LabeledDataset random_dataset(std::mt19937_64& rng, int classes, int per_class, Index points,
                                     Index dim, double separation = 1.0) {
  std::vector<EmpiricalDistribution> dists;
  std::vector<std::string> names;
  for (int c = 0; c < classes; ++c) {
    names.push_back("k" + std::to_string(c));
    for (int d = 0; d < per_class; ++d) {
      dists.push_back(random_distribution(rng, points, dim, "k" + std::to_string(c) + "_" + std::to_string(d), c,
                                          separation * c));
    }
  }
  return LabeledDataset(std::move(dists), std::move(names), dim);
}

inline Vector random_simplex(std::mt19937_64& rng, Index n) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  Vector w(n);
  for (Index i = 0; i < n; ++i) w(i) = u(rng);
  return w / w.sum();
}

inline Matrix random_costs(std::mt19937_64& rng, Index n, Index m) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix c(n, m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) c(i, j) = u(rng);
  }
  return c;
}

}  // namespace groundml::testing

#endif  // GROUNDML_TESTS_ORACLES_HPP_
