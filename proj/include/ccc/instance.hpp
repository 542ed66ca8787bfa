// Copyright 2026 The ccc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Problem data model: a complete signed graph with must-link (friendly) and
// cannot-link (hostile) pairs, its supernode structure, the consistent-form
// normalization, and clustering cost/feasibility.

#ifndef CCC_INSTANCE_HPP_
#define CCC_INSTANCE_HPP_

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccc/common.hpp"
#include "ccc/union_find.hpp"

namespace ccc {

enum class Sign : std::uint8_t { kNegative = 0, kPositive = 1 };

class SignedInstance {
 public:
  SignedInstance() = default;

  // All pairs start negative with no constraints.
  explicit SignedInstance(int n) : n_(n), positive_(n, 0), constraint_(n, kNone) {
    if (n < 0) throw std::invalid_argument("node count must be non-negative");
  }

  int num_nodes() const { return n_; }

  Sign sign(int u, int v) const { return positive_.get(u, v) ? Sign::kPositive : Sign::kNegative; }
  bool is_positive(int u, int v) const { return positive_.get(u, v) != 0; }

  void set_sign(int u, int v, Sign s) {
    check_pair(u, v);
    positive_.set(u, v, s == Sign::kPositive ? 1 : 0);
  }

  void add_friendly(int u, int v) { add_constraint(u, v, kFriendly, friendly_); }
  void add_hostile(int u, int v) { add_constraint(u, v, kHostile, hostile_); }

  bool is_friendly(int u, int v) const { return constraint_.get(u, v) == kFriendly; }
  bool is_hostile(int u, int v) const { return constraint_.get(u, v) == kHostile; }

  // Constraint pairs in insertion order.
  const std::vector<NodePair>& friendly() const { return friendly_; }
  const std::vector<NodePair>& hostile() const { return hostile_; }

  // Positive pairs in ascending lexicographic order.
  std::vector<NodePair> positive_edges() const {
    std::vector<NodePair> out;
    for (int u = 0; u < n_; ++u) {
      const auto* row = positive_.row(u);
      for (int v = u + 1; v < n_; ++v) {
        if (row[v]) out.emplace_back(u, v);
      }
    }
    return out;
  }

  const SymmetricMatrix<std::uint8_t>& positive_matrix() const { return positive_; }

  friend bool operator==(const SignedInstance& a, const SignedInstance& b) {
    return a.n_ == b.n_ && a.positive_ == b.positive_ && a.constraint_ == b.constraint_;
  }

 private:
  static constexpr std::uint8_t kNone = 0;
  static constexpr std::uint8_t kFriendly = 1;
  static constexpr std::uint8_t kHostile = 2;

  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw std::invalid_argument("node index out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("pair endpoints must differ");
  }

  void add_constraint(int u, int v, std::uint8_t kind, std::vector<NodePair>& list) {
    check_pair(u, v);
    const std::uint8_t current = constraint_.get(u, v);
    if (current == kind) throw std::invalid_argument("duplicate constraint pair");
    if (current != kNone) throw std::invalid_argument("pair is both friendly and hostile");
    constraint_.set(u, v, kind);
    list.emplace_back(u, v);
  }

  int n_ = 0;
  SymmetricMatrix<std::uint8_t> positive_;
  SymmetricMatrix<std::uint8_t> constraint_;
  std::vector<NodePair> friendly_;
  std::vector<NodePair> hostile_;
};

// Connected components of the friendly graph ("supernodes") and the hostile
// relation lifted to them.
struct SupernodeStructure {
  std::vector<int> supernode_of;
  std::vector<std::vector<int>> members;
  std::vector<std::pair<int, int>> hostile_superedges;  // (A, B) with A < B, sorted
  SymmetricMatrix<std::uint8_t> hostile_matrix;

  int count() const { return static_cast<int>(members.size()); }
  int of(int u) const { return supernode_of[u]; }
  bool same(int u, int v) const { return supernode_of[u] == supernode_of[v]; }
  bool hostile(int a, int b) const { return hostile_matrix.get(a, b) != 0; }
  bool hostile_nodes(int u, int v) const { return hostile(supernode_of[u], supernode_of[v]); }
};

// Supernode indices follow the ascending order of each component's smallest
// member. Throws InfeasibleInstance if a hostile pair is inside a component.
inline SupernodeStructure compute_supernodes(const SignedInstance& inst) {
  const int n = inst.num_nodes();
  UnionFind uf(n);
  for (const auto& e : inst.friendly()) uf.merge(e.u, e.v);

  SupernodeStructure sn;
  sn.supernode_of.assign(n, -1);
  std::vector<int> index_of_root(n, -1);
  for (int u = 0; u < n; ++u) {
    const int root = uf.find(u);
    if (index_of_root[root] < 0) {
      index_of_root[root] = static_cast<int>(sn.members.size());
      sn.members.emplace_back();
    }
    sn.supernode_of[u] = index_of_root[root];
    sn.members[index_of_root[root]].push_back(u);
  }

  const int k = sn.count();
  sn.hostile_matrix = SymmetricMatrix<std::uint8_t>(k, 0);
  std::set<std::pair<int, int>> superedges;
  for (const auto& e : inst.hostile()) {
    const int a = sn.supernode_of[e.u];
    const int b = sn.supernode_of[e.v];
    if (a == b) {
      throw InfeasibleInstance("hostile pair (" + std::to_string(e.u) + ", " +
                               std::to_string(e.v) + ") lies inside one friendly component");
    }
    superedges.emplace(std::min(a, b), std::max(a, b));
    sn.hostile_matrix.set(a, b, 1);
  }
  sn.hostile_superedges.assign(superedges.begin(), superedges.end());
  return sn;
}

struct ConsistentForm {
  SignedInstance instance;
  std::int64_t forced_mistakes = 0;
};

// Makes every intra-supernode pair positive and every pair across a hostile
// superedge negative. forced_mistakes counts the pairs whose sign changed;
// every feasible clustering of the input errs on exactly those pairs.
inline ConsistentForm to_consistent_form(const SignedInstance& inst, const SupernodeStructure& sn) {
  ConsistentForm out{inst, 0};
  const int n = inst.num_nodes();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Sign want = inst.sign(u, v);
      if (sn.same(u, v)) {
        want = Sign::kPositive;
      } else if (sn.hostile_nodes(u, v)) {
        want = Sign::kNegative;
      }
      if (want != inst.sign(u, v)) {
        out.instance.set_sign(u, v, want);
        ++out.forced_mistakes;
      }
    }
  }
  return out;
}

inline ConsistentForm to_consistent_form(const SignedInstance& inst) {
  return to_consistent_form(inst, compute_supernodes(inst));
}

// True iff intra-supernode pairs are positive and hostile-superedge pairs
// negative.
inline bool is_consistent(const SignedInstance& inst, const SupernodeStructure& sn) {
  const int n = inst.num_nodes();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (sn.same(u, v) && !inst.is_positive(u, v)) return false;
      if (sn.hostile_nodes(u, v) && inst.is_positive(u, v)) return false;
    }
  }
  return true;
}

// A partition of 0..n-1. Cluster ids are renumbered by first appearance, so
// two clusterings describing the same partition compare equal.
class Clustering {
 public:
  Clustering() = default;

  static Clustering from_labels(const std::vector<int>& labels) {
    Clustering c;
    c.assignment_.resize(labels.size());
    std::unordered_map<int, int> dense;
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 0) throw std::invalid_argument("cluster labels must be non-negative");
      const auto [it, inserted] = dense.try_emplace(labels[i], next);
      if (inserted) ++next;
      c.assignment_[i] = it->second;
    }
    c.num_clusters_ = next;
    return c;
  }

  static Clustering from_clusters(int n, const std::vector<std::vector<int>>& clusters) {
    std::vector<int> labels(n, -1);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (int u : clusters[i]) {
        if (u < 0 || u >= n || labels[u] >= 0) {
          throw std::invalid_argument("clusters must partition the node set");
        }
        labels[u] = static_cast<int>(i);
      }
    }
    for (int l : labels) {
      if (l < 0) throw std::invalid_argument("clusters must cover every node");
    }
    return from_labels(labels);
  }

  int num_nodes() const { return static_cast<int>(assignment_.size()); }
  int num_clusters() const { return num_clusters_; }
  int cluster_of(int u) const { return assignment_[u]; }
  const std::vector<int>& assignment() const { return assignment_; }

  std::vector<std::vector<int>> clusters() const {
    std::vector<std::vector<int>> out(num_clusters_);
    for (int u = 0; u < num_nodes(); ++u) out[assignment_[u]].push_back(u);
    return out;
  }

  friend bool operator==(const Clustering&, const Clustering&) = default;

 private:
  std::vector<int> assignment_;
  int num_clusters_ = 0;
};

// Positive pairs split across clusters plus negative pairs inside clusters.
inline std::int64_t clustering_cost(const SignedInstance& inst, const Clustering& c) {
  const int n = inst.num_nodes();
  if (c.num_nodes() != n) throw std::invalid_argument("clustering size does not match instance");
  std::int64_t cost = 0;
  for (int u = 0; u < n; ++u) {
    const auto* row = inst.positive_matrix().row(u);
    const int cu = c.cluster_of(u);
    for (int v = u + 1; v < n; ++v) {
      const bool together = cu == c.cluster_of(v);
      cost += (row[v] != 0) != together ? 1 : 0;
    }
  }
  return cost;
}

inline bool is_feasible(const SignedInstance& inst, const Clustering& c) {
  if (c.num_nodes() != inst.num_nodes()) return false;
  for (const auto& e : inst.friendly()) {
    if (c.cluster_of(e.u) != c.cluster_of(e.v)) return false;
  }
  for (const auto& e : inst.hostile()) {
    if (c.cluster_of(e.u) == c.cluster_of(e.v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// `ccc v1` text format.

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

inline long long parse_integer(const std::string& tok, int line) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace detail

inline SignedInstance parse_instance(std::string_view text) {
  SignedInstance inst;
  int stage = 0;  // 0: want header, 1: want node count, 2: body
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (stage == 0) {
      if (tokens.size() != 2 || tokens[0] != "ccc" || tokens[1] != "v1") {
        throw ParseError(line_no, "expected header 'ccc v1'");
      }
      stage = 1;
    } else if (stage == 1) {
      if (tokens.size() != 2 || tokens[0] != "nodes") {
        throw ParseError(line_no, "expected 'nodes <n>'");
      }
      const long long n = detail::parse_integer(tokens[1], line_no);
      if (n < 0 || n > 1'000'000) throw ParseError(line_no, "node count out of range");
      inst = SignedInstance(static_cast<int>(n));
      stage = 2;
    } else {
      const std::string& kind = tokens[0];
      if (kind != "positive" && kind != "friendly" && kind != "hostile") {
        throw ParseError(line_no, "unknown directive '" + kind + "'");
      }
      if (tokens.size() != 3) throw ParseError(line_no, "expected '" + kind + " <u> <v>'");
      const long long u = detail::parse_integer(tokens[1], line_no);
      const long long v = detail::parse_integer(tokens[2], line_no);
      const int n = inst.num_nodes();
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "node index out of range");
      if (u == v) throw ParseError(line_no, "pair endpoints must differ");
      const int a = static_cast<int>(u);
      const int b = static_cast<int>(v);
      if (kind == "positive") {
        if (inst.is_positive(a, b)) throw ParseError(line_no, "duplicate positive pair");
        inst.set_sign(a, b, Sign::kPositive);
      } else {
        const bool friendly = kind == "friendly";
        if (inst.is_friendly(a, b) || inst.is_hostile(a, b)) {
          const bool same_kind = friendly ? inst.is_friendly(a, b) : inst.is_hostile(a, b);
          throw ParseError(line_no, same_kind ? "duplicate " + kind + " pair"
                                              : "pair listed as both friendly and hostile");
        }
        friendly ? inst.add_friendly(a, b) : inst.add_hostile(a, b);
      }
    }
    if (end == text.size()) break;
  }
  if (stage == 0) throw ParseError(line_no, "missing header 'ccc v1'");
  if (stage == 1) throw ParseError(line_no, "missing 'nodes <n>' line");
  return inst;
}

inline SignedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

inline std::string format_instance(const SignedInstance& inst) {
  std::ostringstream out;
  out << "ccc v1\nnodes " << inst.num_nodes() << "\n";
  for (const auto& e : inst.positive_edges()) out << "positive " << e.u << " " << e.v << "\n";
  for (const auto& e : inst.friendly()) out << "friendly " << e.u << " " << e.v << "\n";
  for (const auto& e : inst.hostile()) out << "hostile " << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace ccc

#endif  // CCC_INSTANCE_HPP_
