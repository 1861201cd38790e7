#pragma once

// Endomorphisms of the finite chain C_n = {0 < 1 < ... < n-1} and the two
// semiring operations on them: pointwise join and left-to-right composition.
//
// Every operation exists twice where a closed formula over run-length forms
// is available: once as the pointwise definition on function tables (the
// oracle) and once through the run-length formula. The test suite checks the
// two against each other exhaustively.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "chainendo/error.hpp"

namespace chainendo {

inline constexpr int kMaxChainSize = 64;

namespace detail {

inline void check_chain_size(int n) {
  if (n < 1 || n > kMaxChainSize) {
    throw Error(ErrorKind::OutOfRange,
                "chain size " + std::to_string(n) + " outside [1, " + std::to_string(kMaxChainSize) + "]", n);
  }
}

}  // namespace detail

/// An order-preserving self-map of C_n, stored as its function table.
/// Two endomorphisms are equal iff their tables are equal.
class Endo {
 public:
  static Endo from_table(int n, std::span<const int> values) {
    detail::check_chain_size(n);
    if (static_cast<int>(values.size()) != n) {
      throw Error(ErrorKind::BadLength,
                  "table has " + std::to_string(values.size()) + " entries, chain size is " + std::to_string(n),
                  static_cast<long long>(values.size()));
    }
    return generate(n, [&](int t) { return values[t]; });
  }

  /// Builds t -> fn(t) for t in [0, n). Validates range and monotonicity.
  template <typename Fn>
  static Endo generate(int n, Fn&& fn) {
    detail::check_chain_size(n);
    Endo e(n);
    for (int t = 0; t < n; ++t) {
      const int v = fn(t);
      if (v < 0 || v >= n) {
        throw Error(ErrorKind::OutOfRange,
                    "value " + std::to_string(v) + " at point " + std::to_string(t) + " outside [0, " +
                        std::to_string(n - 1) + "]",
                    v);
      }
      if (t > 0 && v < e.table_[t - 1]) {
        throw Error(ErrorKind::NotMonotone,
                    "value decreases between points " + std::to_string(t - 1) + " and " + std::to_string(t), t);
      }
      e.table_[t] = static_cast<std::uint8_t>(v);
    }
    return e;
  }

  static Endo identity(int n) {
    return generate(n, [](int t) { return t; });
  }

  static Endo constant(int n, int value) {
    return generate(n, [value](int) { return value; });
  }

  int size() const noexcept { return size_; }

  /// Unchecked lookup; `t` must lie in [0, size()).
  int operator[](int t) const noexcept { return table_[t]; }

  int at(int t) const {
    if (t < 0 || t >= size_) {
      throw Error(ErrorKind::OutOfRange,
                  "point " + std::to_string(t) + " outside [0, " + std::to_string(size_ - 1) + "]", t);
    }
    return table_[t];
  }

  std::vector<int> table() const { return {table_.begin(), table_.begin() + size_}; }

  bool operator==(const Endo&) const = default;
  // Orders by chain size, then lexicographically by table (unused slots are zero).
  auto operator<=>(const Endo&) const = default;

 private:
  explicit Endo(int n) : size_(static_cast<std::uint8_t>(n)) {}

  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxChainSize> table_{};
};

/// A = {a_0 < a_1 < ... < a_{k-1}} inside C_n.
class VertexSet {
 public:
  VertexSet(int n, std::span<const int> points) : chain_size_(n) {
    detail::check_chain_size(n);
    if (points.empty()) throw Error(ErrorKind::InvalidVertexSet, "vertex set is empty");
    index_.fill(-1);
    for (std::size_t p = 0; p < points.size(); ++p) {
      const int a = points[p];
      if (a < 0 || a >= n) {
        throw Error(ErrorKind::OutOfRange,
                    "vertex " + std::to_string(a) + " outside [0, " + std::to_string(n - 1) + "]", a);
      }
      if (p > 0 && a <= points[p - 1]) {
        throw Error(ErrorKind::InvalidVertexSet, "vertices must be strictly increasing", a);
      }
      points_[p] = static_cast<std::uint8_t>(a);
      index_[a] = static_cast<std::int8_t>(p);
    }
    size_ = static_cast<int>(points.size());
  }

  VertexSet(int n, std::initializer_list<int> points) : VertexSet(n, std::span<const int>(points.begin(), points.size())) {}

  static VertexSet full(int n) {
    detail::check_chain_size(n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return VertexSet(n, all);
  }

  int chain_size() const noexcept { return chain_size_; }
  int size() const noexcept { return size_; }
  int operator[](int p) const noexcept { return points_[p]; }
  int front() const noexcept { return points_[0]; }
  int back() const noexcept { return points_[size_ - 1]; }

  bool contains(int value) const noexcept {
    return value >= 0 && value < chain_size_ && index_[value] >= 0;
  }

  /// Position p with a_p == value, or -1.
  int index_of(int value) const noexcept {
    return (value >= 0 && value < chain_size_) ? index_[value] : -1;
  }

  std::vector<int> points() const { return {points_.begin(), points_.begin() + size_}; }

  /// {a_lo, ..., a_hi} over the same chain.
  VertexSet slice(int lo, int hi) const {
    if (lo < 0 || hi >= size_ || lo > hi) {
      throw Error(ErrorKind::OutOfRange, "slice [" + std::to_string(lo) + ", " + std::to_string(hi) + "] of " +
                                             std::to_string(size_) + " vertices");
    }
    std::vector<int> sub(points_.begin() + lo, points_.begin() + hi + 1);
    return VertexSet(chain_size_, sub);
  }

  bool operator==(const VertexSet& other) const noexcept {
    return chain_size_ == other.chain_size_ && size_ == other.size_ &&
           std::equal(points_.begin(), points_.begin() + size_, other.points_.begin());
  }

 private:
  int chain_size_ = 0;
  int size_ = 0;
  std::array<std::uint8_t, kMaxChainSize> points_{};
  std::array<std::int8_t, kMaxChainSize> index_{};
};

/// (a_0)_{i_0} (a_1)_{i_1} ... (a_{k-1})_{i_{k-1}} relative to a vertex set.
/// Zero multiplicities are allowed so that every member of sigma(A) has a form.
struct RunLengthForm {
  VertexSet vertices;
  std::vector<int> multiplicities;

  static RunLengthForm make(VertexSet vertices, std::vector<int> multiplicities) {
    if (static_cast<int>(multiplicities.size()) != vertices.size()) {
      throw Error(ErrorKind::BadLength,
                  std::to_string(multiplicities.size()) + " multiplicities for " + std::to_string(vertices.size()) +
                      " vertices",
                  static_cast<long long>(multiplicities.size()));
    }
    long long sum = 0;
    for (int i : multiplicities) {
      if (i < 0) throw Error(ErrorKind::OutOfRange, "negative multiplicity", i);
      sum += i;
    }
    if (sum != vertices.chain_size()) {
      throw Error(ErrorKind::BadMultiplicitySum,
                  "multiplicities sum to " + std::to_string(sum) + ", chain size is " +
                      std::to_string(vertices.chain_size()),
                  sum);
    }
    return RunLengthForm{std::move(vertices), std::move(multiplicities)};
  }

  int chain_size() const noexcept { return vertices.chain_size(); }

  bool operator==(const RunLengthForm&) const = default;
};

/// sigma^{(n)}(A): every endomorphism whose image lies in A.
struct SimplexSpec {
  VertexSet vertices;

  explicit SimplexSpec(VertexSet v) : vertices(std::move(v)) {}

  int chain_size() const noexcept { return vertices.chain_size(); }
  int dimension() const noexcept { return vertices.size(); }

  bool contains(const Endo& e) const noexcept {
    if (e.size() != vertices.chain_size()) return false;
    for (int t = 0; t < e.size(); ++t) {
      if (!vertices.contains(e[t])) return false;
    }
    return true;
  }

  bool operator==(const SimplexSpec&) const = default;
};

/// Groups consecutive vertices of A by their common image under beta:
/// beta(a_p) = blockImages[u] for blockEnds[u-1] < p <= blockEnds[u].
struct CompositionPartition {
  std::vector<int> blockEnds;
  std::vector<int> blockImages;

  bool operator==(const CompositionPartition&) const = default;
};

// ---------------------------------------------------------------------------
// Representation

inline Endo endo_from_table(int n, std::span<const int> values) { return Endo::from_table(n, values); }

inline Endo endo_from_runs(const RunLengthForm& form) {
  const int n = form.chain_size();
  long long sum = 0;
  for (int i : form.multiplicities) sum += i;
  if (sum != n) {
    throw Error(ErrorKind::BadMultiplicitySum,
                "multiplicities sum to " + std::to_string(sum) + ", chain size is " + std::to_string(n), sum);
  }
  std::vector<int> table;
  table.reserve(n);
  for (int p = 0; p < form.vertices.size(); ++p) {
    table.insert(table.end(), form.multiplicities[p], form.vertices[p]);
  }
  return Endo::from_table(n, table);
}

inline RunLengthForm runs_relative_to(const Endo& alpha, const VertexSet& vertices) {
  if (alpha.size() != vertices.chain_size()) {
    throw Error(ErrorKind::ChainMismatch, "endomorphism and vertex set live on different chains");
  }
  std::vector<int> mult(vertices.size(), 0);
  for (int t = 0; t < alpha.size(); ++t) {
    const int p = vertices.index_of(alpha[t]);
    if (p < 0) {
      throw Error(ErrorKind::ImageNotInVertexSet, "value " + std::to_string(alpha[t]) + " is not a vertex",
                  alpha[t]);
    }
    ++mult[p];
  }
  return RunLengthForm{vertices, std::move(mult)};
}

inline int eval(const Endo& alpha, int t) { return alpha.at(t); }

// ---------------------------------------------------------------------------
// Addition

namespace detail {

inline void require_same_chain(const Endo& a, const Endo& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ChainMismatch,
                "chain sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " differ");
  }
}

}  // namespace detail

/// Pointwise join. This is the defining (oracle) form of +.
inline Endo add(const Endo& alpha, const Endo& beta) {
  detail::require_same_chain(alpha, beta);
  return Endo::generate(alpha.size(), [&](int t) { return std::max(alpha[t], beta[t]); });
}

/// Sum through multiplicities: h_0 = min(i_0, j_0) and
/// h_s = min(I_s - H_{s-1}, J_s - H_{s-1}) with I, J, H the prefix sums.
inline RunLengthForm add_via_prefix_mins(const RunLengthForm& x, const RunLengthForm& y) {
  if (!(x.vertices == y.vertices)) {
    throw Error(ErrorKind::VertexSetMismatch, "summands are written over different vertex sets");
  }
  const int k = x.vertices.size();
  std::vector<int> h(k);
  long long prefix_i = 0, prefix_j = 0, prefix_h = 0;
  for (int s = 0; s < k; ++s) {
    prefix_i += x.multiplicities[s];
    prefix_j += y.multiplicities[s];
    h[s] = static_cast<int>(std::min(prefix_i - prefix_h, prefix_j - prefix_h));
    prefix_h += h[s];
  }
  return RunLengthForm::make(x.vertices, std::move(h));
}

// ---------------------------------------------------------------------------
// Multiplication

/// (alpha beta)(t) = beta(alpha(t)): alpha acts first.
inline Endo compose(const Endo& alpha, const Endo& beta) {
  detail::require_same_chain(alpha, beta);
  return Endo::generate(alpha.size(), [&](int t) { return beta[alpha[t]]; });
}

inline CompositionPartition composition_partition(const Endo& beta, const VertexSet& vertices) {
  if (beta.size() != vertices.chain_size()) {
    throw Error(ErrorKind::ChainMismatch, "endomorphism and vertex set live on different chains");
  }
  CompositionPartition part;
  for (int p = 0; p < vertices.size(); ++p) {
    const int image = beta[vertices[p]];
    if (!part.blockImages.empty() && part.blockImages.back() == image) {
      part.blockEnds.back() = p;
    } else {
      part.blockImages.push_back(image);
      part.blockEnds.push_back(p);
    }
  }
  return part;
}

/// alpha beta from alpha's run form: block u of the partition of A under
/// beta contributes a run of beta's common image with length equal to the
/// summed multiplicities of that block. The result is written over `output`.
inline RunLengthForm compose_via_runs(const RunLengthForm& x, const Endo& beta, const VertexSet& output) {
  if (beta.size() != x.chain_size() || output.chain_size() != x.chain_size()) {
    throw Error(ErrorKind::ChainMismatch, "operands live on different chains");
  }
  const CompositionPartition part = composition_partition(beta, x.vertices);
  std::vector<int> mult(output.size(), 0);
  int first = 0;
  for (std::size_t u = 0; u < part.blockEnds.size(); ++u) {
    const int q = output.index_of(part.blockImages[u]);
    if (q < 0) {
      throw Error(ErrorKind::ImageNotInVertexSet,
                  "block image " + std::to_string(part.blockImages[u]) + " is not an output vertex",
                  part.blockImages[u]);
    }
    for (int p = first; p <= part.blockEnds[u]; ++p) mult[q] += x.multiplicities[p];
    first = part.blockEnds[u] + 1;
  }
  return RunLengthForm{output, std::move(mult)};
}

inline RunLengthForm compose_via_runs(const RunLengthForm& x, const Endo& beta) {
  return compose_via_runs(x, beta, VertexSet::full(x.chain_size()));
}

/// Pointwise order: alpha(t) <= beta(t) for every t.
inline bool leq(const Endo& alpha, const Endo& beta) {
  detail::require_same_chain(alpha, beta);
  for (int t = 0; t < alpha.size(); ++t) {
    if (alpha[t] > beta[t]) return false;
  }
  return true;
}

inline Endo operator+(const Endo& alpha, const Endo& beta) { return add(alpha, beta); }
inline Endo operator*(const Endo& alpha, const Endo& beta) { return compose(alpha, beta); }

}  // namespace chainendo
