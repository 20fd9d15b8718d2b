#include "oddplanar/matching.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace oddplanar {

namespace {

// Port of the classic primal-dual blossom implementation. Vertices are
// 0..n-1, blossoms n..2n-1; endpoint p of edge k is vertex
// endpoint[p], p = 2k or 2k+1. Labels: 0 free, 1 S, 2 T (5 marks a scan).
class Blossom {
 public:
  Blossom(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : n_(n), edges_(edges), max_card_(max_cardinality) {
    const int m = static_cast<int>(edges_.size());
    std::int64_t maxw = 0;
    for (auto& e : edges_) {
      e.weight *= 2;  // keeps every dual change integral
      maxw = std::max(maxw, e.weight);
    }
    endpoint_.resize(2 * m);
    neighbend_.resize(n);
    for (int k = 0; k < m; ++k) {
      endpoint_[2 * k] = edges_[k].u;
      endpoint_[2 * k + 1] = edges_[k].v;
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(n, -1);
    label_.assign(2 * n, 0);
    labelend_.assign(2 * n, -1);
    inblossom_.resize(n);
    for (int v = 0; v < n; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * n, -1);
    blossomchilds_.assign(2 * n, {});
    blossombase_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) blossombase_[v] = v;
    blossomendps_.assign(2 * n, {});
    bestedge_.assign(2 * n, -1);
    blossombestedges_.assign(2 * n, {});
    has_bestedges_.assign(2 * n, false);
    for (int b = n; b < 2 * n; ++b) unused_.push_back(b);
    dualvar_.assign(2 * n, 0);
    for (int v = 0; v < n; ++v) dualvar_[v] = maxw;
    allowedge_.assign(m, false);
  }

  std::vector<int> solve() {
    if (edges_.empty()) return std::vector<int>(n_, -1);
    const int m = static_cast<int>(edges_.size());
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        std::int64_t delta = 0;
        int deltaedge = -1, deltablossom = -1;
        if (!max_card_) {
          deltatype = 1;
          delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
        }
        for (int v = 0; v < n_; ++v)
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const std::int64_t d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        for (int b = 0; b < 2 * n_; ++b)
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const std::int64_t d = slack(bestedge_[b]) / 2;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        for (int b = n_; b < 2 * n_; ++b)
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        if (deltatype == -1) {
          deltatype = 1;
          delta = std::max<std::int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
        }

        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 1)
            dualvar_[v] -= delta;
          else if (label_[inblossom_[v]] == 2)
            dualvar_[v] += delta;
        }
        for (int b = n_; b < 2 * n_; ++b)
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }

        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = edges_[deltaedge].u, j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0)
          expand_blossom(b, true);
    }
    (void)m;
    std::vector<int> out(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
    return out;
  }

 private:
  std::int64_t slack(int k) const {
    return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].weight;
  }

  void leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : blossomchilds_[b]) leaves(t, out);
  }

  std::vector<int> leaves(int b) const {
    std::vector<int> out;
    leaves(b, out);
    return out;
  }

  static int wrap(int j, int size) { return ((j % size) + size) % size; }

  void assign_label(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossombase_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u, w = edges_[k].v;
    const int bb = inblossom_[base];
    int bv = inblossom_[v], bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    auto& path = blossomchilds_[b];
    auto& endps = blossomendps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossomparent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0;
    for (int x : leaves(b)) {
      if (label_[inblossom_[x]] == 2) queue_.push_back(x);
      inblossom_[x] = b;
    }
    std::vector<int> bestedgeto(2 * n_, -1);
    for (int sub : path) {
      std::vector<int> candidates;
      if (!has_bestedges_[sub]) {
        for (int x : leaves(sub))
          for (int p : neighbend_[x]) candidates.push_back(p / 2);
      } else {
        candidates = blossombestedges_[sub];
      }
      for (int e : candidates) {
        int i = edges_[e].u, j = edges_[e].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(e) < slack(bestedgeto[bj])))
          bestedgeto[bj] = e;
      }
      blossombestedges_[sub].clear();
      has_bestedges_[sub] = false;
      bestedge_[sub] = -1;
    }
    blossombestedges_[b].clear();
    for (int e : bestedgeto)
      if (e != -1) blossombestedges_[b].push_back(e);
    has_bestedges_[b] = true;
    bestedge_[b] = -1;
    for (int e : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(e) < slack(bestedge_[b])) bestedge_[b] = e;
  }

  void expand_blossom(int b, bool endstage) {
    const std::vector<int> childs = blossomchilds_[b];
    for (int s : childs) {
      blossomparent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        for (int x : leaves(s)) inblossom_[x] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& ch = blossomchilds_[b];
      const auto& ep = blossomendps_[b];
      const int size = static_cast<int>(ch.size());
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= size;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[ep[wrap(j - endptrick, size)] ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[ep[wrap(j - endptrick, size)] / 2] = true;
        j += jstep;
        p = ep[wrap(j - endptrick, size)] ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      const int bv = ch[wrap(j, size)];
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (ch[wrap(j, size)] != entrychild) {
        const int sub = ch[wrap(j, size)];
        if (label_[sub] == 1) {
          j += jstep;
          continue;
        }
        int reached = -1;
        for (int x : leaves(sub))
          if (label_[x] != 0) {
            reached = x;
            break;
          }
        if (reached >= 0) {
          label_[reached] = 0;
          label_[endpoint_[mate_[blossombase_[sub]]]] = 0;
          assign_label(reached, 2, labelend_[reached]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    has_bestedges_[b] = false;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= n_) augment_blossom(t, v);
    auto& ch = blossomchilds_[b];
    auto& ep = blossomendps_[b];
    const int size = static_cast<int>(ch.size());
    const int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= size;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = ch[wrap(j, size)];
      const int p = ep[wrap(j - endptrick, size)] ^ endptrick;
      if (t >= n_) augment_blossom(t, endpoint_[p]);
      j += jstep;
      t = ch[wrap(j, size)];
      if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    blossombase_[b] = blossombase_[ch[0]];
  }

  void augment_matching(int k) {
    const int ends[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
    for (const auto& start : ends) {
      int s = start[0], p = start[1];
      while (true) {
        const int bs = inblossom_[s];
        if (bs >= n_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  int n_;
  std::vector<WeightedEdge> edges_;
  bool max_card_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

void check_square(const WeightMatrix& w) {
  const std::size_t n = w.size();
  if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even number of vertices, got " + std::to_string(n));
  for (const auto& row : w)
    if (row.size() != n) throw std::invalid_argument("weight matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (w[i][j] != w[j][i]) throw std::invalid_argument("weight matrix is not symmetric");
      if (i != j && w[i][j] < 0) throw std::invalid_argument("weights must be non-negative");
    }
}

Matching from_mate(const WeightMatrix& w, const std::vector<int>& mate) {
  Matching out;
  for (int i = 0; i < static_cast<int>(mate.size()); ++i)
    if (mate[i] > i) {
      out.pairs.emplace_back(i, mate[i]);
      out.weight += w[i][mate[i]];
    }
  return out;
}

}  // namespace

std::vector<int> max_weight_matching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                     bool max_cardinality) {
  for (const auto& e : edges)
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count || e.u == e.v)
      throw std::invalid_argument("bad matching edge");
  return Blossom(vertex_count, edges, max_cardinality).solve();
}

Matching min_weight_perfect_matching(const WeightMatrix& weights) {
  check_square(weights);
  const int n = static_cast<int>(weights.size());
  if (n == 0) return {};
  std::int64_t maxw = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) maxw = std::max(maxw, weights[i][j]);
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j, maxw - weights[i][j]});
  const auto mate = max_weight_matching(n, edges, true);
  for (int v : mate)
    if (v < 0) throw std::logic_error("blossom returned an imperfect matching");
  return from_mate(weights, mate);
}

Matching matching_oracle(const WeightMatrix& weights) {
  check_square(weights);
  const int n = static_cast<int>(weights.size());
  if (n > 20) throw std::invalid_argument("matching oracle limited to 20 vertices");
  if (n == 0) return {};
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::int64_t> best(std::size_t{1} << n, kInf);
  std::vector<std::int8_t> partner(std::size_t{1} << n, -1);
  best[0] = 0;
  // best[S] = minimum perfect matching of S; the lowest vertex of S is
  // matched to some other member.
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (__builtin_popcount(s) % 2 != 0) continue;
    const int i = __builtin_ctz(s);
    const std::uint32_t rest = s & ~(std::uint32_t{1} << i);
    for (std::uint32_t r = rest; r; r &= r - 1) {
      const int j = __builtin_ctz(r);
      const std::int64_t sub = best[rest & ~(std::uint32_t{1} << j)];
      if (sub == kInf) continue;
      if (sub + weights[i][j] < best[s]) {
        best[s] = sub + weights[i][j];
        partner[s] = static_cast<std::int8_t>(j);
      }
    }
  }
  std::vector<int> mate(n, -1);
  for (std::uint32_t s = full; s;) {
    const int i = __builtin_ctz(s), j = partner[s];
    mate[i] = j;
    mate[j] = i;
    s &= ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j));
  }
  return from_mate(weights, mate);
}

}  // namespace oddplanar
