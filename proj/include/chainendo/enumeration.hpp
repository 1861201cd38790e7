#pragma once

// Enumeration of simplices and of their distinguished subsets, plus the
// exact counting helpers (binomials, Catalan numbers) used to check them.

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "chainendo/projection.hpp"

namespace chainendo {

/// Default ceiling on elementary checks before an enumeration is refused.
inline constexpr std::uint64_t kDefaultCeiling = 100'000'000;

/// Exact C(n, r); throws Overflow when the value leaves 64 bits.
inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    // acc * (n - r + i) / i stays integral at every step.
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > UINT64_MAX) throw Error(ErrorKind::Overflow, "binomial exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

/// C_p = binom(2p, p) / (p + 1), exact for every p whose value fits in 64 bits.
inline std::uint64_t catalan(int p) {
  if (p < 0) throw Error(ErrorKind::OutOfRange, "negative Catalan index", p);
  unsigned __int128 c = 1;
  for (int q = 0; q < p; ++q) {
    c = c * 2 * (2 * q + 1) / (q + 2);
    if (c > UINT64_MAX) throw Error(ErrorKind::Overflow, "Catalan number exceeds 64 bits", p);
  }
  return static_cast<std::uint64_t>(c);
}

/// |sigma^{(n)}(A)| = C(n + k - 1, k - 1).
inline std::uint64_t simplex_size(const SimplexSpec& spec) {
  return binomial(spec.chain_size() + spec.dimension() - 1, spec.dimension() - 1);
}

/// Members of sigma^{(n)}(A), each once, in increasing lexicographic order of
/// their tables. That is decreasing lexicographic order of the multiplicity
/// vectors: (a_0)_n comes first and (a_{k-1})_n last.
class SimplexStream {
 public:
  explicit SimplexStream(SimplexSpec spec) : spec_(std::move(spec)) {}

  class iterator {
   public:
    using value_type = Endo;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(const SimplexSpec* spec)
        : spec_(spec), index_(spec->chain_size(), 0), current_(Endo::constant(spec->chain_size(), spec->vertices[0])) {}

    const Endo& operator*() const noexcept { return current_; }
    const Endo* operator->() const noexcept { return &current_; }

    iterator& operator++() {
      const int k = spec_->dimension();
      int t = static_cast<int>(index_.size()) - 1;
      while (t >= 0 && index_[t] == k - 1) --t;
      if (t < 0) {
        spec_ = nullptr;
        return *this;
      }
      const int next = index_[t] + 1;
      std::fill(index_.begin() + t, index_.end(), next);
      const VertexSet& a = spec_->vertices;
      current_ = Endo::generate(static_cast<int>(index_.size()), [&](int s) { return a[index_[s]]; });
      return *this;
    }

    void operator++(int) { ++*this; }

    bool operator==(std::default_sentinel_t) const noexcept { return spec_ == nullptr; }

   private:
    const SimplexSpec* spec_ = nullptr;
    std::vector<int> index_;
    Endo current_ = Endo::constant(1, 0);
  };

  iterator begin() const { return iterator(&spec_); }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  SimplexSpec spec_;
};

inline std::vector<Endo> enumerate_simplex(const SimplexSpec& spec) {
  std::vector<Endo> out;
  out.reserve(simplex_size(spec));
  for (const Endo& e : SimplexStream(spec)) out.push_back(e);
  return out;
}

/// alpha(t) <= t everywhere.
inline bool is_over_nilpotent(const Endo& alpha) {
  for (int t = 0; t < alpha.size(); ++t) {
    if (alpha[t] > t) return false;
  }
  return true;
}

/// alpha(t) < t for t >= 1; monotonicity then forces alpha(0) = 0.
inline bool is_strictly_decreasing_map(const Endo& alpha) {
  if (alpha[0] != 0) return false;
  for (int t = 1; t < alpha.size(); ++t) {
    if (alpha[t] >= t) return false;
  }
  return true;
}

/// Some power of alpha is the constant zero map.
inline bool is_nilpotent(const Endo& alpha) {
  const Endo zero = Endo::constant(alpha.size(), 0);
  Endo power = alpha;
  for (int j = 1; j <= alpha.size(); ++j) {
    if (power == zero) return true;
    power = compose(power, alpha);
  }
  return power == zero;
}

/// alpha(a_m) <= a_m for every vertex: the intersection of all D_m (l = 0).
inline bool in_D_cap(const SimplexSpec& spec, const Endo& alpha) {
  const VertexSet& a = spec.vertices;
  for (int p = 0; p < a.size(); ++p) {
    if (alpha[a[p]] > a[p]) return false;
  }
  return true;
}

enum class SubsetKind { Simplex, S, R, D, DCap, OverNilpotent, Nilpotent, TopSection };

/// Names a subset of some simplex: the simplex itself, S/R/D of a projection,
/// the intersection of the D_m, ON_n, N_n, or S_p^{n-1} on the full chain.
class SubsetSelector {
 public:
  static SubsetSelector simplex(SimplexSpec spec) { return SubsetSelector(SubsetKind::Simplex, std::move(spec)); }
  static SubsetSelector d_cap(SimplexSpec spec) { return SubsetSelector(SubsetKind::DCap, std::move(spec)); }
  static SubsetSelector s(ProjectionSpec spec) { return SubsetSelector(SubsetKind::S, std::move(spec)); }
  static SubsetSelector r(ProjectionSpec spec) { return SubsetSelector(SubsetKind::R, std::move(spec)); }
  static SubsetSelector d(ProjectionSpec spec) { return SubsetSelector(SubsetKind::D, std::move(spec)); }
  static SubsetSelector over_nilpotent(int n) {
    return SubsetSelector(SubsetKind::OverNilpotent, SimplexSpec(VertexSet::full(n)));
  }
  static SubsetSelector nilpotent(int n) {
    return SubsetSelector(SubsetKind::Nilpotent, SimplexSpec(VertexSet::full(n)));
  }

  /// S_p^{n-1}: the S set of the projection onto {p', ..., n-1} with
  /// l = n - 1 - p, m = n - 1, on the full chain. Needs 1 <= p <= n - 2.
  static SubsetSelector top_section(int n, int p) {
    if (p < 1 || p > n - 2) {
      throw Error(ErrorKind::InvalidSelector, "S_p^{n-1} needs 1 <= p <= n-2, got p=" + std::to_string(p) +
                                                  ", n=" + std::to_string(n));
    }
    SubsetSelector sel(SubsetKind::TopSection, ProjectionSpec(VertexSet::full(n), n - 1 - p, n - 1));
    sel.p_ = p;
    return sel;
  }

  SubsetKind kind() const noexcept { return kind_; }
  const SimplexSpec& ambient() const noexcept { return ambient_; }
  const std::optional<ProjectionSpec>& projection() const noexcept { return projection_; }
  int p() const noexcept { return p_; }

  bool contains(const Endo& alpha) const {
    if (!ambient_.contains(alpha)) return false;
    switch (kind_) {
      case SubsetKind::Simplex: return true;
      case SubsetKind::S:
      case SubsetKind::TopSection: return in_S(*projection_, alpha);
      case SubsetKind::R: return in_R(*projection_, alpha);
      case SubsetKind::D: return in_D(*projection_, alpha);
      case SubsetKind::DCap: return in_D_cap(ambient_, alpha);
      case SubsetKind::OverNilpotent: return is_over_nilpotent(alpha);
      case SubsetKind::Nilpotent: return is_strictly_decreasing_map(alpha);
    }
    return false;
  }

 private:
  SubsetSelector(SubsetKind kind, SimplexSpec ambient) : kind_(kind), ambient_(std::move(ambient)) {}
  SubsetSelector(SubsetKind kind, ProjectionSpec proj)
      : kind_(kind), ambient_(proj.simplex()), projection_(std::move(proj)) {}

  SubsetKind kind_;
  SimplexSpec ambient_;
  std::optional<ProjectionSpec> projection_;
  int p_ = 0;
};

namespace detail {

inline void check_ceiling(std::uint64_t estimate, std::uint64_t ceiling) {
  if (estimate > ceiling) {
    throw Error(ErrorKind::BoundsTooLarge,
                "estimated " + std::to_string(estimate) + " cases exceeds the ceiling of " + std::to_string(ceiling),
                static_cast<long long>(std::min<std::uint64_t>(estimate, INT64_MAX)));
  }
}

}  // namespace detail

inline std::vector<Endo> enumerate_subset(const SubsetSelector& sel, std::uint64_t ceiling = kDefaultCeiling) {
  detail::check_ceiling(simplex_size(sel.ambient()), ceiling);
  std::vector<Endo> out;
  for (const Endo& e : SimplexStream(sel.ambient())) {
    if (sel.contains(e)) out.push_back(e);
  }
  return out;
}

/// Cardinality by filtered enumeration.
inline std::uint64_t count(const SubsetSelector& sel, std::uint64_t ceiling = kDefaultCeiling) {
  detail::check_ceiling(simplex_size(sel.ambient()), ceiling);
  std::uint64_t total = 0;
  for (const Endo& e : SimplexStream(sel.ambient())) {
    if (sel.contains(e)) ++total;
  }
  return total;
}

}  // namespace chainendo
