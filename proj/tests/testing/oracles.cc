/*
 * Copyright 2026 The simfuse Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

namespace simfuse::testing {
namespace {

int rows_of(const Grid& g) { return static_cast<int>(g.size()); }
int cols_of(const Grid& g) { return g.empty() ? 0 : static_cast<int>(g[0].size()); }

Grid zeros(int r, int c) { return Grid(r, std::vector<double>(c, 0.0)); }

Grid multiply(const Grid& a, const Grid& b) {
  Grid out = zeros(rows_of(a), cols_of(b));
  for (int i = 0; i < rows_of(a); ++i) {
    for (int j = 0; j < cols_of(b); ++j) {
      double s = 0.0;
      for (int l = 0; l < cols_of(a); ++l) s += a[i][l] * b[l][j];
      out[i][j] = s;
    }
  }
  return out;
}

Grid transpose(const Grid& a) {
  Grid out = zeros(cols_of(a), rows_of(a));
  for (int i = 0; i < rows_of(a); ++i) {
    for (int j = 0; j < cols_of(a); ++j) out[j][i] = a[i][j];
  }
  return out;
}

double frobenius_inner(const Grid& a, const Grid& b) {
  double s = 0.0;
  for (int i = 0; i < rows_of(a); ++i) {
    for (int j = 0; j < cols_of(a); ++j) s += a[i][j] * b[i][j];
  }
  return s;
}

double alignment(const Grid& a, const Grid& b) {
  return frobenius_inner(a, b) / std::sqrt(frobenius_inner(a, a) * frobenius_inner(b, b));
}

bool row_empty(const Grid& y, int i) {
  for (double v : y[i]) {
    if (v != 0.0) return false;
  }
  return true;
}

double type7(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * q;
  const double lo = std::floor(h);
  const auto a = static_cast<std::size_t>(lo);
  const std::size_t b = std::min(a + 1, v.size() - 1);
  return v[a] + (h - lo) * (v[b] - v[a]);
}

}  // namespace

Grid to_grid(const Matrix& m) {
  Grid g = zeros(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  }
  return g;
}

Matrix from_grid(const Grid& g) {
  Matrix m(rows_of(g), cols_of(g));
  for (int i = 0; i < rows_of(g); ++i) {
    for (int j = 0; j < cols_of(g); ++j) m(i, j) = g[i][j];
  }
  return m;
}

std::vector<Grid> to_grids(const std::vector<SimilarityView>& views) {
  std::vector<Grid> out;
  for (const auto& v : views) out.push_back(to_grid(v.matrix));
  return out;
}

std::vector<int> oracle_neighbors(const std::vector<double>& row, int self, int k,
                                  const std::vector<int>* pool) {
  std::vector<int> order;
  for (int l = 0; l < static_cast<int>(row.size()); ++l) {
    if (l == self) continue;
    if (pool != nullptr && std::find(pool->begin(), pool->end(), l) == pool->end()) continue;
    order.push_back(l);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return row[a] > row[b]; });
  if (static_cast<int>(order.size()) > k) order.resize(k);
  return order;
}

Grid oracle_lic_matrix(const Grid& s, const Grid& y, int k, bool literal) {
  const int n = rows_of(y);
  const int nt = cols_of(y);
  Grid c = zeros(n, nt);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> nn = oracle_neighbors(s[i], i, k);
    for (int j = 0; j < nt; ++j) {
      double num = 0.0;
      double den = 0.0;
      for (int l : nn) {
        const double other = literal ? y[i][l] : y[l][j];
        num += s[i][l] * (other == y[i][j] ? 1.0 : 0.0);
        den += s[i][l];
      }
      c[i][j] = den == 0.0 ? 0.0 : num / den;
    }
  }
  return c;
}

std::vector<double> oracle_lic_weights(const std::vector<Grid>& views, const Grid& y, int k) {
  std::vector<double> c;
  for (const Grid& s : views) {
    const Grid ch = oracle_lic_matrix(s, y, k);
    double total = 0.0;
    int count = 0;
    for (int i = 0; i < rows_of(y); ++i) {
      for (int j = 0; j < cols_of(y); ++j) {
        if (y[i][j] == 1.0) {
          total += ch[i][j];
          ++count;
        }
      }
    }
    c.push_back(total / count);
  }
  const double sum = std::accumulate(c.begin(), c.end(), 0.0);
  for (double& v : c) v /= sum;
  return c;
}

std::vector<double> oracle_ka_weights(const std::vector<Grid>& views, const Grid& y) {
  const Grid z = multiply(y, transpose(y));
  std::vector<double> a;
  for (const Grid& s : views) a.push_back(alignment(s, z));
  const double sum = std::accumulate(a.begin(), a.end(), 0.0);
  for (double& v : a) v /= sum;
  return a;
}

OracleFgs oracle_fgs(const std::vector<Grid>& views, const Grid& y, int k, double rho) {
  const int n = rows_of(y);
  const int nt = cols_of(y);
  const int m = static_cast<int>(views.size());

  std::vector<Grid> c;
  for (const Grid& s : views) c.push_back(oracle_lic_matrix(s, y, k));

  std::vector<int> fresh, known;
  for (int i = 0; i < n; ++i) (row_empty(y, i) ? fresh : known).push_back(i);

  Grid w = zeros(n, m);
  for (int i = 0; i < n; ++i) {
    for (int h = 0; h < m; ++h) {
      for (int j = 0; j < nt; ++j) w[i][h] += c[h][i][j] * y[i][j];
    }
  }

  std::vector<double> v(m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int h = 0; h < m; ++h) v[h] += w[i][h];
  }
  std::vector<double> rescue = v;
  if (std::all_of(rescue.begin(), rescue.end(), [](double x) { return x == 0.0; })) {
    rescue.assign(m, 1.0);
  }

  for (int i : known) {
    if (row_empty(w, i)) w[i] = rescue;
  }

  for (int x : fresh) {
    for (int h = 0; h < m; ++h) {
      double total = 0.0;
      for (int l : oracle_neighbors(views[h][x], x, k, &known)) total += w[l][h];
      w[x][h] = total;
    }
    if (row_empty(w, x)) w[x] = rescue;
  }

  const int drop = std::min(static_cast<int>(std::floor(rho * m + 1e-9)), m - 1);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> taken(m, false);
    const std::vector<double> before = w[i];
    for (int r = 0; r < drop; ++r) {
      int best = -1;
      for (int h = 0; h < m; ++h) {
        if (taken[h]) continue;
        if (best < 0 || before[h] < before[best]) best = h;
      }
      taken[best] = true;
      w[i][best] = 0.0;
    }
  }

  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int h = 0; h < m; ++h) s += w[i][h];
    for (int h = 0; h < m; ++h) w[i][h] /= s;
  }

  Grid fused = zeros(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int h = 0; h < m; ++h) fused[i][j] += w[i][h] * views[h][i][j];
    }
  }
  return {w, fused};
}

Grid oracle_snf_normalize(const Grid& s, int mode) {
  const int n = rows_of(s);
  Grid p = zeros(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        p[i][j] = 0.5;
        continue;
      }
      double den = 0.0;
      for (int l = 0; l < n; ++l) {
        if (mode == 0 && l != i) den += s[l][j];
        if (mode == 1 && l != j) den += s[l][j];
        if (mode == 2 && l != i) den += s[i][l];
      }
      p[i][j] = s[i][j] / (2.0 * den);
    }
  }
  return p;
}

Grid oracle_snf_local(const Grid& s, int k) {
  const int n = rows_of(s);
  Grid q = zeros(n, n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> nn = oracle_neighbors(s[i], i, k);
    double den = 0.0;
    for (int l : nn) den += s[i][l];
    for (int l : nn) q[i][l] = s[i][l] / den;
  }
  return q;
}

Grid oracle_snf(const std::vector<Grid>& views, int k, int iters, int mode) {
  const int m = static_cast<int>(views.size());
  const int n = rows_of(views[0]);
  std::vector<Grid> p, q;
  for (const Grid& s : views) {
    p.push_back(oracle_snf_normalize(s, mode));
    q.push_back(oracle_snf_local(s, k));
  }
  for (int t = 0; t < iters; ++t) {
    std::vector<Grid> next;
    for (int h = 0; h < m; ++h) {
      Grid avg = zeros(n, n);
      for (int o = 0; o < m; ++o) {
        if (o == h) continue;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) avg[i][j] += p[o][i][j] / (m - 1);
        }
      }
      next.push_back(multiply(multiply(q[h], avg), transpose(q[h])));
    }
    p = next;
  }
  Grid out = zeros(n, n);
  for (int h = 0; h < m; ++h) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) out[i][j] += p[h][i][j] / m;
    }
  }
  return out;
}

std::vector<int> oracle_snfh(const std::vector<Grid>& views, double c1, double c2) {
  const int m = static_cast<int>(views.size());
  std::vector<double> entropy;
  for (const Grid& s : views) {
    const int n = rows_of(s);
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
      const double total = std::accumulate(s[i].begin(), s[i].end(), 0.0);
      double h = 0.0;
      for (double x : s[i]) {
        if (x > 0.0) h += -(x / total) * std::log(x / total);
      }
      mean += h / std::log(static_cast<double>(n)) / n;
    }
    entropy.push_back(mean);
  }
  const double cut1 = type7(entropy, c1);
  std::set<int> alive;
  for (int h = 0; h < m; ++h) {
    if (entropy[h] <= cut1) alive.insert(h);
  }
  std::vector<std::tuple<double, int, int>> pairs;
  std::vector<double> dist;
  for (int a : alive) {
    for (int b : alive) {
      if (b <= a) continue;
      double d2 = 0.0;
      for (std::size_t i = 0; i < views[a].size(); ++i) {
        for (std::size_t j = 0; j < views[a].size(); ++j) {
          d2 += (views[a][i][j] - views[b][i][j]) * (views[a][i][j] - views[b][i][j]);
        }
      }
      pairs.emplace_back(std::sqrt(d2), a, b);
      dist.push_back(std::sqrt(d2));
    }
  }
  if (!pairs.empty()) {
    const double cut2 = type7(dist, c2);
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [d, a, b] : pairs) {
      if (!alive.count(a) || !alive.count(b)) continue;
      if (d == 0.0 || d < cut2) alive.erase(entropy[a] > entropy[b] ? a : b);
    }
  }
  return {alive.begin(), alive.end()};
}

double oracle_auc(const std::vector<double>& scores, const std::vector<double>& labels) {
  double wins = 0.0;
  double pairs = 0.0;
  for (std::size_t p = 0; p < scores.size(); ++p) {
    if (labels[p] <= 0.5) continue;
    for (std::size_t q = 0; q < scores.size(); ++q) {
      if (labels[q] > 0.5) continue;
      pairs += 1.0;
      if (scores[p] > scores[q]) wins += 1.0;
      if (scores[p] == scores[q]) wins += 0.5;
    }
  }
  return wins / pairs;
}

double oracle_aupr(const std::vector<double>& scores, const std::vector<double>& labels) {
  std::set<double, std::greater<>> thresholds(scores.begin(), scores.end());
  double positives = 0.0;
  for (double l : labels) positives += l > 0.5 ? 1.0 : 0.0;
  double ap = 0.0;
  double last_recall = 0.0;
  for (double t : thresholds) {
    double tp = 0.0, fp = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] < t) continue;
      (labels[i] > 0.5 ? tp : fp) += 1.0;
    }
    const double recall = tp / positives;
    ap += (recall - last_recall) * tp / (tp + fp);
    last_recall = recall;
  }
  return ap;
}

double oracle_hsic_objective(const std::vector<Grid>& views, const Grid& y,
                             double lambda1, double lambda2,
                             const std::vector<double>& w) {
  const int n = rows_of(y);
  const int m = static_cast<int>(views.size());
  Grid h = zeros(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i][j] = (i == j ? 1.0 : 0.0) - 1.0 / n;
  }
  const Grid z = multiply(y, transpose(y));
  const Grid hzh = multiply(multiply(h, z), h);
  Grid fused = zeros(n, n);
  for (int v = 0; v < m; ++v) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) fused[i][j] += w[v] * views[v][i][j];
    }
  }
  const Grid prod = multiply(fused, hzh);
  double trace = 0.0;
  for (int i = 0; i < n; ++i) trace += prod[i][i];

  double quad = 0.0;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const double u = alignment(views[a], views[b]);
      // L = diag(U e) - U, so w^T L w = 1/2 sum_ab U_ab (w_a - w_b)^2.
      quad += 0.5 * u * (w[a] - w[b]) * (w[a] - w[b]);
    }
  }
  double norm2 = 0.0;
  for (double x : w) norm2 += x * x;
  return trace / (static_cast<double>(n) * n) + lambda1 * quad + lambda2 * norm2;
}

double oracle_neighborhood_score(const Grid& sd, const Grid& st, const Grid& y,
                                 int k, double eta, int drug, int target) {
  const int nd = rows_of(y);
  const int nt = cols_of(y);
  std::vector<int> known_d, known_t;
  for (int i = 0; i < nd; ++i) {
    if (!row_empty(y, i)) known_d.push_back(i);
  }
  const Grid yt = transpose(y);
  for (int j = 0; j < nt; ++j) {
    if (!row_empty(yt, j)) known_t.push_back(j);
  }
  auto weights = [&](const Grid& s, int self, const std::vector<int>& pool) {
    std::vector<std::pair<int, double>> out;
    const std::vector<int> nn = oracle_neighbors(s[self], self, k, &pool);
    for (std::size_t r = 0; r < nn.size(); ++r) {
      out.emplace_back(nn[r], std::pow(eta, static_cast<double>(r)) * s[self][nn[r]]);
    }
    return out;
  };
  const auto a = weights(sd, drug, known_d);
  const auto b = weights(st, target, known_t);
  auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
  double num_d = 0.0, den_d = 0.0, num_t = 0.0, den_t = 0.0;
  for (const auto& [l, w] : a) {
    num_d += w * y[l][target];
    den_d += w;
  }
  for (const auto& [l, w] : b) {
    num_t += w * y[drug][l];
    den_t += w;
  }
  const bool dk = !row_empty(y, drug);
  const bool tk = !row_empty(yt, target);
  if (dk && tk) return 0.5 * (ratio(num_d, den_d) + ratio(num_t, den_t));
  if (!dk && tk) return ratio(num_d, den_d);
  if (dk && !tk) return ratio(num_t, den_t);
  double num = 0.0;
  for (const auto& [l, wa] : a) {
    for (const auto& [r, wb] : b) num += wa * wb * y[l][r];
  }
  return ratio(num, den_d * den_t);
}

}  // namespace simfuse::testing
