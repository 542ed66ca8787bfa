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

#ifndef CCC_COMMON_HPP_
#define CCC_COMMON_HPP_

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccc {

// Unordered pair of distinct nodes, always stored with u < v.
struct NodePair {
  int u = 0;
  int v = 0;

  constexpr NodePair() = default;
  constexpr NodePair(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

// Dense symmetric n x n table. Storage is the full square so lookups need no
// index canonicalization; n stays in the hundreds for this library.
template <typename T>
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int n, T fill = T{})
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  int size() const { return n_; }

  T get(int u, int v) const { return data_[index(u, v)]; }

  void set(int u, int v, T value) {
    data_[index(u, v)] = value;
    data_[index(v, u)] = value;
  }

  // Row view, valid for read access to all entries of row u.
  const T* row(int u) const { return data_.data() + static_cast<std::size_t>(u) * n_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<T> data_;
};

// Raised when a hostile pair lies inside a friendly component, so no
// clustering can satisfy the constraints.
class InfeasibleInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace ccc

#endif  // CCC_COMMON_HPP_
