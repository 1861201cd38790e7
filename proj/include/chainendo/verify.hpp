#pragma once

// Exhaustive verification of the algebraic and counting claims about
// projections in sigma^{(n)}(A). Each claim enumerates every instance inside
// the given bounds (chain sizes, vertex sets, projection indices) and every
// element, pair or triple it quantifies over. Reports carry an exact
// violation count and a capped list of witnesses.

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "chainendo/enumeration.hpp"
#include "chainendo/notation.hpp"

namespace chainendo {

enum class ClaimId {
  Lemma1,
  ComposeRuns,
  SemiringAxioms,
  SimplexCount,
  ProjectionClamp,
  Lemma2,
  Lemma3,
  Lemma4,
  Lemma5,
  TheoremLeibniz,
  LeibnizLowerBound,
  TheoremMaximality,
  LeftIdeal,
  SubsimplexInD,
  CompositionTwoStep,
  CompositionTopSection,
  CorollaryNClosed,
  NIdeal,
  Nilpotency,
  CountOn,
  CountN,
  PropSpCount,
  S1Singleton,
  TopSectionInclusion,
  TopSectionDisjoint,
  TopSectionIntersection,
};

inline constexpr std::array kAllClaims = {
    ClaimId::Lemma1, ClaimId::ComposeRuns, ClaimId::SemiringAxioms,
    ClaimId::SimplexCount, ClaimId::ProjectionClamp, ClaimId::Lemma2,
    ClaimId::Lemma3, ClaimId::Lemma4, ClaimId::Lemma5,
    ClaimId::TheoremLeibniz, ClaimId::LeibnizLowerBound, ClaimId::TheoremMaximality,
    ClaimId::LeftIdeal, ClaimId::SubsimplexInD, ClaimId::CompositionTwoStep,
    ClaimId::CompositionTopSection, ClaimId::CorollaryNClosed, ClaimId::NIdeal,
    ClaimId::Nilpotency, ClaimId::CountOn, ClaimId::CountN,
    ClaimId::PropSpCount, ClaimId::S1Singleton, ClaimId::TopSectionInclusion,
    ClaimId::TopSectionDisjoint, ClaimId::TopSectionIntersection,
};

constexpr std::string_view to_string(ClaimId claim) {
  switch (claim) {
    case ClaimId::Lemma1: return "lemma1";
    case ClaimId::ComposeRuns: return "compose-runs";
    case ClaimId::SemiringAxioms: return "semiring-axioms";
    case ClaimId::SimplexCount: return "simplex-count";
    case ClaimId::ProjectionClamp: return "projection-clamp";
    case ClaimId::Lemma2: return "lemma2";
    case ClaimId::Lemma3: return "lemma3";
    case ClaimId::Lemma4: return "lemma4";
    case ClaimId::Lemma5: return "lemma5";
    case ClaimId::TheoremLeibniz: return "theorem-leibniz";
    case ClaimId::LeibnizLowerBound: return "leibniz-lower-bound";
    case ClaimId::TheoremMaximality: return "theorem-maximality";
    case ClaimId::LeftIdeal: return "left-ideal";
    case ClaimId::SubsimplexInD: return "subsimplex-in-d";
    case ClaimId::CompositionTwoStep: return "composition-two-step";
    case ClaimId::CompositionTopSection: return "composition-top-section";
    case ClaimId::CorollaryNClosed: return "corollary-n-closed";
    case ClaimId::NIdeal: return "n-ideal";
    case ClaimId::Nilpotency: return "nilpotency";
    case ClaimId::CountOn: return "count-on";
    case ClaimId::CountN: return "count-n";
    case ClaimId::PropSpCount: return "prop-sp-count";
    case ClaimId::S1Singleton: return "s1-singleton";
    case ClaimId::TopSectionInclusion: return "top-section-inclusion";
    case ClaimId::TopSectionDisjoint: return "top-section-disjoint";
    case ClaimId::TopSectionIntersection: return "top-section-intersection";
  }
  return "unknown";
}

inline ClaimId claim_from_string(std::string_view name) {
  for (ClaimId c : kAllClaims) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorKind::UnknownClaim, "no claim named '" + std::string(name) + "'");
}

/// Search space for a verification run. Optional filters narrow it; an
/// absent vertex filter means every non-empty A inside each chain.
struct Bounds {
  int n_min = 1;
  int n_max = 5;
  std::optional<std::vector<int>> vertices;
  std::optional<int> lower;
  std::optional<int> upper;
  std::optional<int> p;
  std::size_t max_witnesses = 10;
  std::uint64_t ceiling = kDefaultCeiling;
  unsigned threads = 1;
};

struct Witness {
  int n = 0;
  std::vector<int> vertices;
  std::optional<int> lower;
  std::optional<int> upper;
  std::vector<std::pair<std::string, Endo>> endos;
  std::string detail;
};

struct VerificationReport {
  ClaimId claim{};
  std::uint64_t searched = 0;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
  std::chrono::milliseconds elapsed{0};
  Bounds bounds;
  std::vector<std::string> notes;

  bool holds() const noexcept { return violations == 0; }
};

namespace detail {

/// Running totals for one claim; merging is associative.
class Tally {
 public:
  explicit Tally(std::size_t cap) : cap_(cap) {}

  template <typename MakeWitness>
  void check(bool ok, MakeWitness&& make) {
    ++searched_;
    if (ok) return;
    ++violations_;
    if (witnesses_.size() < cap_) witnesses_.push_back(make());
  }

  void merge(Tally&& other) {
    searched_ += other.searched_;
    violations_ += other.violations_;
    for (auto& w : other.witnesses_) {
      if (witnesses_.size() >= cap_) break;
      witnesses_.push_back(std::move(w));
    }
  }

  /// Folds in totals computed elsewhere.
  void absorb(std::uint64_t searched, std::uint64_t violations, std::vector<Witness> witnesses) {
    searched_ += searched;
    violations_ += violations;
    for (auto& w : witnesses) {
      if (witnesses_.size() >= cap_) break;
      witnesses_.push_back(std::move(w));
    }
  }

  std::uint64_t searched() const noexcept { return searched_; }
  std::uint64_t violations() const noexcept { return violations_; }
  std::vector<Witness>& witnesses() noexcept { return witnesses_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
  std::uint64_t searched_ = 0;
  std::uint64_t violations_ = 0;
  std::vector<Witness> witnesses_;
};

/// Runs body(i, tally) for i in [0, count), split into contiguous index
/// ranges across threads. Ranges are merged in order so the witness list is
/// the same as a sequential run.
inline void parallel_indices(std::size_t count, unsigned threads, Tally& tally,
                             const std::function<void(std::size_t, Tally&)>& body) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (workers == 1 || count < 64) {
    for (std::size_t i = 0; i < count; ++i) body(i, tally);
    return;
  }
  std::vector<Tally> partial(workers, Tally(tally.cap()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = count * w / workers;
        const std::size_t hi = count * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) body(i, partial[w]);
      });
    }
  }
  for (auto& t : partial) tally.merge(std::move(t));
}

/// Every (alpha, beta) in xs x ys.
template <typename Fn>
void for_each_pair(const std::vector<Endo>& xs, const std::vector<Endo>& ys, unsigned threads, Tally& tally,
                   Fn&& fn) {
  parallel_indices(xs.size(), threads, tally, [&](std::size_t i, Tally& t) {
    for (const Endo& y : ys) fn(xs[i], y, t);
  });
}

inline std::vector<Endo> filter(const std::vector<Endo>& xs, const std::function<bool(const Endo&)>& keep) {
  std::vector<Endo> out;
  std::copy_if(xs.begin(), xs.end(), std::back_inserter(out), keep);
  return out;
}

inline bool contains_sorted(const std::vector<Endo>& sorted, const Endo& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

/// All strictly increasing subsets of {0..n-1} with at least `min_k` points,
/// or just the filter when one is given and fits the chain.
inline std::vector<VertexSet> vertex_sets(int n, const Bounds& b, int min_k) {
  std::vector<VertexSet> out;
  if (b.vertices) {
    const auto& pts = *b.vertices;
    const bool fits = !pts.empty() && std::all_of(pts.begin(), pts.end(), [n](int a) { return a >= 0 && a < n; });
    if (fits && static_cast<int>(pts.size()) >= min_k) out.emplace_back(n, pts);
    return out;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> pts;
    for (int a = 0; a < n; ++a) {
      if (mask & (std::uint64_t{1} << a)) pts.push_back(a);
    }
    if (static_cast<int>(pts.size()) >= min_k) out.emplace_back(n, pts);
  }
  // Deterministic order: by size, then lexicographically.
  std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.points() < y.points();
  });
  return out;
}

/// Projection specs (A, l, m) inside the bounds.
inline std::vector<ProjectionSpec> projections(const VertexSet& a, const Bounds& b) {
  std::vector<ProjectionSpec> out;
  const int k = a.size();
  for (int l = 0; l < k; ++l) {
    if (b.lower && *b.lower != l) continue;
    for (int m = l + 1; m < k; ++m) {
      if (b.upper && *b.upper != m) continue;
      out.emplace_back(a, l, m);
    }
  }
  return out;
}

inline Witness witness(const VertexSet& a, std::vector<std::pair<std::string, Endo>> endos, std::string detail) {
  return Witness{a.chain_size(), a.points(), std::nullopt, std::nullopt, std::move(endos), std::move(detail)};
}

inline Witness witness(const ProjectionSpec& spec, std::vector<std::pair<std::string, Endo>> endos,
                       std::string detail) {
  Witness w = witness(spec.vertices(), std::move(endos), std::move(detail));
  w.lower = spec.lower();
  w.upper = spec.upper();
  return w;
}

inline std::uint64_t saturating_pow(std::uint64_t base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

inline std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  return (x != 0 && y > UINT64_MAX / x) ? UINT64_MAX : x * y;
}

inline std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) { return x > UINT64_MAX - y ? UINT64_MAX : x + y; }

// Instance families.
enum class Family { Simplex, Projection, TopSection, FullChain };

struct ClaimShape {
  Family family;
  int arity;    // elements quantified per instance: size^arity cases
  int k_power;  // extra loops over vertex indices: k^k_power
  int min_k;    // smallest |A| the claim is defined for
};

inline ClaimShape shape_of(ClaimId claim) {
  switch (claim) {
    case ClaimId::Lemma1:
    case ClaimId::ComposeRuns: return {Family::Simplex, 2, 0, 1};
    case ClaimId::SemiringAxioms: return {Family::Simplex, 3, 0, 1};
    case ClaimId::SimplexCount: return {Family::Simplex, 1, 0, 1};
    case ClaimId::ProjectionClamp:
    case ClaimId::Lemma2:
    case ClaimId::Lemma3:
    case ClaimId::Lemma4:
    case ClaimId::Lemma5:
    case ClaimId::TheoremLeibniz:
    case ClaimId::LeibnizLowerBound:
    case ClaimId::TheoremMaximality: return {Family::Projection, 2, 2, 2};
    case ClaimId::LeftIdeal: return {Family::Projection, 2, 3, 2};
    case ClaimId::SubsimplexInD: return {Family::Projection, 1, 2, 2};
    case ClaimId::CompositionTwoStep:
    case ClaimId::CompositionTopSection: return {Family::Simplex, 1, 2, 3};
    case ClaimId::S1Singleton: return {Family::Simplex, 1, 0, 2};
    case ClaimId::TopSectionInclusion:
    case ClaimId::TopSectionDisjoint: return {Family::Simplex, 1, 2, 3};
    case ClaimId::TopSectionIntersection: return {Family::Simplex, 1, 1, 3};
    case ClaimId::CorollaryNClosed: return {Family::FullChain, 1, 1, 1};
    case ClaimId::Nilpotency: return {Family::FullChain, 1, 1, 1};
    case ClaimId::CountOn:
    case ClaimId::CountN: return {Family::FullChain, 1, 0, 1};
    case ClaimId::NIdeal: return {Family::FullChain, 2, 0, 1};
    case ClaimId::PropSpCount: return {Family::TopSection, 1, 1, 1};
  }
  return {Family::Simplex, 1, 0, 1};
}

/// Upper estimate of the elementary checks a claim performs in `b`.
inline std::uint64_t estimate_cases(ClaimId claim, const Bounds& b) {
  const ClaimShape shape = shape_of(claim);
  std::uint64_t total = 0;
  auto add_for = [&](int n, int k, std::uint64_t sets) {
    const std::uint64_t size = binomial(n + k - 1, k - 1);
    const std::uint64_t per = saturating_pow(static_cast<std::uint64_t>(k), shape.k_power);
    total = saturating_add(total, saturating_mul(saturating_mul(saturating_pow(size, shape.arity), sets), per));
  };
  for (int n = std::max(1, b.n_min); n <= b.n_max; ++n) {
    if (shape.family == Family::FullChain || shape.family == Family::TopSection) {
      add_for(n, n, 1);
    } else if (b.vertices) {
      const int k = static_cast<int>(b.vertices->size());
      if (k >= shape.min_k && std::all_of(b.vertices->begin(), b.vertices->end(), [n](int a) { return a < n; })) {
        add_for(n, k, 1);
      }
    } else {
      for (int k = shape.min_k; k <= n; ++k) add_for(n, k, binomial(n, k));
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Per-instance checkers. Each one enumerates what it quantifies over and
// feeds one verdict per elementary case into the tally.

using Named = std::vector<std::pair<std::string, Endo>>;

inline void check_lemma1(const VertexSet& a, const Bounds& b, Tally& tally) {
  const auto elems = enumerate_simplex(SimplexSpec(a));
  for_each_pair(elems, elems, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    const Endo via_runs = endo_from_runs(add_via_prefix_mins(runs_relative_to(x, a), runs_relative_to(y, a)));
    const Endo oracle = add(x, y);
    t.check(via_runs == oracle, [&] {
      return witness(a, Named{{"alpha", x}, {"beta", y}, {"prefix_mins", via_runs}, {"pointwise_max", oracle}},
                     "prefix-min sum differs from pointwise join");
    });
  });
}

inline void check_compose_runs(const VertexSet& a, const Bounds& b, Tally& tally) {
  const auto elems = enumerate_simplex(SimplexSpec(a));
  for_each_pair(elems, elems, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    const Endo via_runs = endo_from_runs(compose_via_runs(runs_relative_to(x, a), y, a));
    const Endo oracle = compose(x, y);
    t.check(via_runs == oracle, [&] {
      return witness(a, Named{{"alpha", x}, {"beta", y}, {"block_sums", via_runs}, {"pointwise", oracle}},
                     "block-sum product differs from pointwise composition");
    });
  });
}

inline void check_semiring_axioms(const VertexSet& a, const Bounds& b, Tally& tally) {
  const SimplexSpec simplex(a);
  const auto elems = enumerate_simplex(simplex);
  for (const Endo& x : elems) {
    tally.check(add(x, x) == x, [&] { return witness(a, Named{{"x", x}}, "x + x != x"); });
  }
  for_each_pair(elems, elems, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    t.check(add(x, y) == add(y, x), [&] { return witness(a, Named{{"x", x}, {"y", y}}, "x + y != y + x"); });
    t.check(simplex.contains(add(x, y)) && simplex.contains(compose(x, y)),
            [&] { return witness(a, Named{{"x", x}, {"y", y}}, "sum or product leaves the simplex"); });
  });
  detail::parallel_indices(elems.size(), b.threads, tally, [&](std::size_t i, Tally& t) {
    const Endo& x = elems[i];
    for (const Endo& y : elems) {
      const Endo xy_sum = add(x, y);
      const Endo xy = compose(x, y);
      for (const Endo& z : elems) {
        auto named = [&] { return Named{{"x", x}, {"y", y}, {"z", z}}; };
        t.check(add(xy_sum, z) == add(x, add(y, z)),
                [&] { return witness(a, named(), "(x + y) + z != x + (y + z)"); });
        t.check(compose(xy, z) == compose(x, compose(y, z)), [&] { return witness(a, named(), "(xy)z != x(yz)"); });
        t.check(compose(x, add(y, z)) == add(xy, compose(x, z)),
                [&] { return witness(a, named(), "x(y + z) != xy + xz"); });
        t.check(compose(xy_sum, z) == add(compose(x, z), compose(y, z)),
                [&] { return witness(a, named(), "(x + y)z != xz + yz"); });
      }
    }
  });
}

inline void check_simplex_count(const VertexSet& a, const Bounds&, Tally& tally) {
  const SimplexSpec simplex(a);
  const auto elems = enumerate_simplex(simplex);
  const bool strictly_sorted = std::adjacent_find(elems.begin(), elems.end(), std::greater_equal<>()) == elems.end();
  const bool all_members = std::all_of(elems.begin(), elems.end(), [&](const Endo& e) { return simplex.contains(e); });
  // Independent count: every monotone table over C_n, filtered by image.
  std::uint64_t brute = 0;
  for (const Endo& e : SimplexStream(SimplexSpec(VertexSet::full(a.chain_size())))) {
    if (simplex.contains(e)) ++brute;
  }
  const std::uint64_t expected = simplex_size(simplex);
  tally.check(strictly_sorted && all_members && elems.size() == expected && brute == expected, [&] {
    return witness(a, Named{}, "enumerated " + std::to_string(elems.size()) + ", brute force " +
                                   std::to_string(brute) + ", expected C(n+k-1,k-1) = " + std::to_string(expected));
  });
}

inline void check_projection_clamp(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  const auto elems = enumerate_simplex(spec.simplex());
  const SimplexSpec image = spec.image();
  for (const Endo& x : elems) {
    const Endo runs = project(spec, x);
    const Endo clamp = project_clamp(spec, x);
    tally.check(runs == clamp && project(spec, runs) == runs && image.contains(runs), [&] {
      return witness(spec, Named{{"alpha", x}, {"run_form", runs}, {"clamp", clamp}},
                     "run-length projection, clamp, idempotence or image disagree");
    });
  }
  for_each_pair(elems, elems, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    if (!leq(x, y)) return;
    t.check(leq(project(spec, x), project(spec, y)),
            [&] { return witness(spec, Named{{"alpha", x}, {"beta", y}}, "projection is not monotone"); });
  });
}

inline void check_lemma2(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  const auto elems = enumerate_simplex(spec.simplex());
  for_each_pair(elems, elems, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    t.check(additivity(spec, x, y), [&] {
      return witness(spec,
                     Named{{"alpha", x},
                           {"beta", y},
                           {"d(alpha+beta)", project(spec, add(x, y))},
                           {"d(alpha)+d(beta)", add(project(spec, x), project(spec, y))}},
                     "projection is not additive");
    });
  });
}

inline void check_closure(const ProjectionSpec& spec, const Bounds& b, Tally& tally,
                          bool (*member)(const ProjectionSpec&, const Endo&), std::string_view set_name) {
  const auto elems = enumerate_simplex(spec.simplex());
  const auto set = filter(elems, [&](const Endo& e) { return member(spec, e); });
  for_each_pair(set, set, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    const Endo sum = add(x, y);
    const Endo product = compose(x, y);
    t.check(member(spec, sum), [&] {
      return witness(spec, Named{{"alpha", x}, {"beta", y}, {"sum", sum}}, std::string(set_name) + " not closed under +");
    });
    t.check(member(spec, product), [&] {
      return witness(spec, Named{{"alpha", x}, {"beta", y}, {"product", product}},
                     std::string(set_name) + " not closed under composition");
    });
  });
}

inline void check_lemma5(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  check_closure(spec, b, tally, &in_D, "D");
  for (const Endo& x : enumerate_simplex(spec.simplex())) {
    tally.check(classify(spec, x).disjoint(),
                [&] { return witness(spec, Named{{"alpha", x}}, "element lies in both S and R"); });
  }
}

inline Witness leibniz_witness(const ProjectionSpec& spec, const Endo& x, const Endo& y, const LeibnizOutcome& out,
                               std::string detail) {
  return witness(spec, Named{{"alpha", x}, {"beta", y}, {"lhs", out.lhs}, {"rhs", out.rhs}}, std::move(detail));
}

inline void check_theorem_leibniz(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  const auto d = filter(enumerate_simplex(spec.simplex()), [&](const Endo& e) { return in_D(spec, e); });
  for_each_pair(d, d, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    const LeibnizOutcome out = leibniz(spec, x, y);
    t.check(out.holds, [&] { return leibniz_witness(spec, x, y, out, "d(ab) != d(a)b + a d(b) on D"); });
  });
}

inline void check_leibniz_lower_bound(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  const auto d = filter(enumerate_simplex(spec.simplex()), [&](const Endo& e) { return in_D(spec, e); });
  for_each_pair(d, d, b.threads, tally, [&](const Endo& x, const Endo& y, Tally& t) {
    const Endo left = compose(project(spec, x), y);
    const Endo right = project(spec, compose(x, y));
    t.check(leq(left, right), [&] {
      return witness(spec, Named{{"alpha", x}, {"beta", y}, {"d(a)b", left}, {"d(ab)", right}},
                     "d(a)b is not below d(ab)");
    });
  });
}

inline void check_theorem_maximality(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  const auto elems = enumerate_simplex(spec.simplex());
  const auto outside = filter(elems, [&](const Endo& e) { return !in_D(spec, e); });
  detail::parallel_indices(outside.size(), b.threads, tally, [&](std::size_t i, Tally& t) {
    const Endo& y = outside[i];
    const bool found = std::any_of(elems.begin(), elems.end(), [&](const Endo& x) { return !leibniz(spec, x, y).holds; });
    t.check(found, [&] { return witness(spec, Named{{"beta", y}}, "no alpha breaks the Leibniz rule for this beta"); });
  });
}

inline void check_left_ideal(const ProjectionSpec& spec, const Bounds& b, Tally& tally) {
  const auto d = filter(enumerate_simplex(spec.simplex()), [&](const Endo& e) { return in_D(spec, e); });
  for (int r = spec.lower(); r < spec.upper(); ++r) {
    const SimplexSpec sub(spec.vertices().slice(r, spec.upper()));
    const auto gammas = enumerate_simplex(sub);
    for_each_pair(d, gammas, b.threads, tally, [&](const Endo& delta, const Endo& gamma, Tally& t) {
      const Endo product = compose(delta, gamma);
      t.check(sub.contains(product), [&] {
        return witness(spec, Named{{"delta", delta}, {"gamma", gamma}, {"product", product}},
                       "delta gamma leaves sigma{a_" + std::to_string(r) + "..a_m}");
      });
    });
  }
}

inline void check_subsimplex_in_d(const ProjectionSpec& spec, const Bounds&, Tally& tally) {
  for (const Endo& g : enumerate_simplex(spec.image())) {
    tally.check(in_D(spec, g),
                [&] { return witness(spec, Named{{"gamma", g}}, "member of sigma{a_l..a_m} outside D"); });
  }
}

inline void check_composition_two_step(const VertexSet& a, const Bounds&, Tally& tally) {
  const int k = a.size();
  const auto elems = enumerate_simplex(SimplexSpec(a));
  for (int m = 2; m <= k - 1; ++m) {
    for (int m1 = 1; m1 < m; ++m1) {
      const ProjectionSpec outer(a, 0, m);
      const ProjectionSpec direct(a, 0, m1);
      const ProjectionSpec inner(outer.image().vertices, 0, m1);
      for (const Endo& x : elems) {
        if (!in_D(outer, x) || !in_D(direct, x)) continue;
        const Endo two_step = project_then_project(outer, inner, x);
        const Endo one_step = project(direct, x);
        tally.check(two_step == one_step, [&] {
          return witness(direct, Named{{"alpha", x}, {"two_step", two_step}, {"one_step", one_step}},
                         "d^m_{m1}(d^{k-1}_m(alpha)) != d^{k-1}_{m1}(alpha) with m=" + std::to_string(m));
        });
      }
    }
  }
}

inline void check_composition_top_section(const VertexSet& a, const Bounds&, Tally& tally) {
  const int k = a.size();
  const auto elems = enumerate_simplex(SimplexSpec(a));
  for (int l = 0; l < k - 1; ++l) {
    for (int l1 = l + 1; l1 < k - 1; ++l1) {
      const ProjectionSpec outer(a, l, k - 1);
      const ProjectionSpec direct(a, l1, k - 1);
      const ProjectionSpec inner(outer.image().vertices, l1 - l, k - 1 - l);
      for (const Endo& x : elems) {
        if (!in_D(outer, x) || !in_D(direct, x)) continue;
        const Endo two_step = project_then_project(outer, inner, x);
        const Endo one_step = project(direct, x);
        tally.check(two_step == one_step, [&] {
          return witness(direct, Named{{"alpha", x}, {"two_step", two_step}, {"one_step", one_step}},
                         "two-step projection through l=" + std::to_string(l) + " differs from one step");
        });
      }
    }
  }
}

inline void check_s1_singleton(const VertexSet& a, const Bounds&, Tally& tally) {
  const int k = a.size();
  const int n = a.chain_size();
  const ProjectionSpec spec(a, k - 2, k - 1);
  const Endo top = Endo::constant(n, a.back());
  for (const Endo& x : enumerate_simplex(SimplexSpec(a))) {
    tally.check(in_S(spec, x) == (x == top), [&] {
      return witness(spec, Named{{"alpha", x}},
                     x == top ? "(a_{k-1})_n is not in S_1" : "S_1 contains an element other than (a_{k-1})_n");
    });
  }
}

inline void check_top_section_inclusion(const VertexSet& a, const Bounds&, Tally& tally, std::vector<std::string>& notes) {
  const int k = a.size();
  const auto elems = enumerate_simplex(SimplexSpec(a));
  for (int l = 1; l <= k - 2; ++l) {
    for (int l1 = l + 1; l1 <= k - 2; ++l1) {
      const ProjectionSpec big(a, l, k - 1);
      const ProjectionSpec small(a, l1, k - 1);
      bool strict = false;
      for (const Endo& x : elems) {
        const bool in_small = in_S(small, x);
        const bool in_big = in_S(big, x);
        if (in_big && !in_small) strict = true;
        if (!in_small) continue;
        tally.check(in_big, [&] {
          return witness(small, Named{{"alpha", x}},
                         "element of S for l1=" + std::to_string(l1) + " missing from S for l=" + std::to_string(l));
        });
      }
      if (!strict && notes.size() < 50) {
        std::string pts;
        for (int v : a.points()) pts += (pts.empty() ? "" : ",") + std::to_string(v);
        notes.push_back("n=" + std::to_string(a.chain_size()) + " A={" + pts + "}: inclusion for l=" +
                        std::to_string(l) + ", l1=" + std::to_string(l1) + " is not strict");
      }
    }
  }
}

inline void check_top_section_disjoint(const VertexSet& a, const Bounds&, Tally& tally) {
  const int k = a.size();
  const auto elems = enumerate_simplex(SimplexSpec(a));
  for (int l = 1; l <= k - 2; ++l) {
    for (int l1 = 1; l1 <= k - 2; ++l1) {
      const ProjectionSpec r_spec(a, l, k - 1);
      const ProjectionSpec s_spec(a, l1, k - 1);
      for (const Endo& x : elems) {
        tally.check(!(in_S(s_spec, x) && in_R(r_spec, x)), [&] {
          return witness(r_spec, Named{{"alpha", x}},
                         "alpha in S (l1=" + std::to_string(l1) + ") and in R (l=" + std::to_string(l) + ")");
        });
      }
    }
  }
}

inline void check_top_section_intersection(const VertexSet& a, const Bounds&, Tally& tally) {
  const int k = a.size();
  const int n = a.chain_size();
  const SimplexSpec simplex(a);
  const Endo top = Endo::constant(n, a.back());
  std::vector<ProjectionSpec> specs;
  for (int l = 1; l <= k - 2; ++l) specs.emplace_back(a, l, k - 1);
  for (const Endo& x : SimplexStream(simplex)) {
    const bool lhs = std::all_of(specs.begin(), specs.end(), [&](const ProjectionSpec& s) { return in_D(s, x); });
    const bool rhs = x == top || in_D_cap(simplex, x);
    tally.check(lhs == rhs, [&] {
      return witness(a, Named{{"alpha", x}},
                     lhs ? "in every D_{k-l-1} but not in {(a_{k-1})_n} u D"
                         : "in {(a_{k-1})_n} u D but missing from some D_{k-l-1}");
    });
  }
}

inline Witness chain_witness(int n, Named endos, std::string detail) {
  return witness(VertexSet::full(n), std::move(endos), std::move(detail));
}

inline void check_corollary_n_closed(int n, const Bounds&, Tally& tally) {
  const auto nil = enumerate_subset(SubsetSelector::nilpotent(n));
  for (int m = 1; m <= n - 2; ++m) {
    const ProjectionSpec spec(VertexSet::full(n), 0, m);
    for (const Endo& x : nil) {
      const Endo image = project(spec, x);
      tally.check(is_strictly_decreasing_map(image), [&] {
        return witness(spec, Named{{"alpha", x}, {"projection", image}}, "projection leaves N_n");
      });
    }
  }
}

inline void check_nilpotency(int n, const Bounds&, Tally& tally) {
  for (const Endo& x : SimplexStream(SimplexSpec(VertexSet::full(n)))) {
    tally.check(is_strictly_decreasing_map(x) == is_nilpotent(x), [&] {
      return chain_witness(n, Named{{"alpha", x}}, "alpha(t) < t characterisation disagrees with nilpotency");
    });
  }
}

inline void check_count(std::uint64_t counted, std::uint64_t expected, int n, const std::string& what, Tally& tally) {
  tally.check(counted == expected, [&] {
    return chain_witness(n, Named{}, what + ": counted " + std::to_string(counted) + ", expected " +
                                         std::to_string(expected));
  });
}

}  // namespace detail

inline std::string describe_ideal_side(bool two_sided) { return two_sided ? "two-sided" : "left"; }

/// Checks that `sub` absorbs products with `host`: r i in sub for every r in
/// host and i in sub (left ideal), and also i r in sub when two-sided.
/// Products are compositions with the left factor applied first.
inline VerificationReport ideal_check(const SubsetSelector& sub, const SubsetSelector& host, bool two_sided,
                                      const Bounds& bounds = {}, ClaimId claim = ClaimId::NIdeal) {
  const auto start = std::chrono::steady_clock::now();
  if (sub.ambient().chain_size() != host.ambient().chain_size()) {
    throw Error(ErrorKind::ChainMismatch, "ideal and host live on different chains");
  }
  const std::uint64_t estimate =
      simplex_size(sub.ambient()) + simplex_size(host.ambient()) +
      detail::saturating_pow(std::max(simplex_size(sub.ambient()), simplex_size(host.ambient())), 2) *
          (two_sided ? 2 : 1);
  detail::check_ceiling(estimate, bounds.ceiling);

  const auto ideal = enumerate_subset(sub, bounds.ceiling);
  const auto ring = enumerate_subset(host, bounds.ceiling);
  detail::Tally tally(bounds.max_witnesses);
  const VertexSet& a = sub.ambient().vertices;
  detail::for_each_pair(ring, ideal, bounds.threads, tally, [&](const Endo& r, const Endo& i, detail::Tally& t) {
    const Endo left = compose(r, i);
    t.check(sub.contains(left),
            [&] { return detail::witness(a, detail::Named{{"r", r}, {"i", i}, {"ri", left}}, "r i leaves the ideal"); });
    if (two_sided) {
      const Endo right = compose(i, r);
      t.check(sub.contains(right), [&] {
        return detail::witness(a, detail::Named{{"r", r}, {"i", i}, {"ir", right}}, "i r leaves the ideal");
      });
    }
  });

  VerificationReport report;
  report.claim = claim;
  report.searched = tally.searched();
  report.violations = tally.violations();
  report.witnesses = std::move(tally.witnesses());
  report.bounds = bounds;
  report.notes.push_back(describe_ideal_side(two_sided) + " ideal check");
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

/// Exhaustively checks `claim` over every instance inside `bounds`.
/// Throws BoundsTooLarge when the estimated case count exceeds the ceiling.
inline VerificationReport verify(ClaimId claim, const Bounds& bounds) {
  using namespace detail;
  const auto start = std::chrono::steady_clock::now();
  if (bounds.n_max > 16) {
    throw Error(ErrorKind::BoundsTooLarge, "chain sizes above 16 are not enumerable", bounds.n_max);
  }
  check_ceiling(estimate_cases(claim, bounds), bounds.ceiling);

  VerificationReport report;
  report.claim = claim;
  report.bounds = bounds;
  Tally tally(bounds.max_witnesses);
  const ClaimShape shape = shape_of(claim);

  for (int n = std::max(1, bounds.n_min); n <= bounds.n_max; ++n) {
    switch (shape.family) {
      case Family::Simplex:
        for (const VertexSet& a : vertex_sets(n, bounds, shape.min_k)) {
          switch (claim) {
            case ClaimId::Lemma1: check_lemma1(a, bounds, tally); break;
            case ClaimId::ComposeRuns: check_compose_runs(a, bounds, tally); break;
            case ClaimId::SemiringAxioms: check_semiring_axioms(a, bounds, tally); break;
            case ClaimId::SimplexCount: check_simplex_count(a, bounds, tally); break;
            case ClaimId::CompositionTwoStep: check_composition_two_step(a, bounds, tally); break;
            case ClaimId::CompositionTopSection: check_composition_top_section(a, bounds, tally); break;
            case ClaimId::S1Singleton: check_s1_singleton(a, bounds, tally); break;
            case ClaimId::TopSectionInclusion: check_top_section_inclusion(a, bounds, tally, report.notes); break;
            case ClaimId::TopSectionDisjoint: check_top_section_disjoint(a, bounds, tally); break;
            case ClaimId::TopSectionIntersection: check_top_section_intersection(a, bounds, tally); break;
            default: break;
          }
        }
        break;
      case Family::Projection:
        for (const VertexSet& a : vertex_sets(n, bounds, shape.min_k)) {
          for (const ProjectionSpec& spec : projections(a, bounds)) {
            switch (claim) {
              case ClaimId::ProjectionClamp: check_projection_clamp(spec, bounds, tally); break;
              case ClaimId::Lemma2: check_lemma2(spec, bounds, tally); break;
              case ClaimId::Lemma3: check_closure(spec, bounds, tally, &in_S, "S"); break;
              case ClaimId::Lemma4: check_closure(spec, bounds, tally, &in_R, "R"); break;
              case ClaimId::Lemma5: check_lemma5(spec, bounds, tally); break;
              case ClaimId::TheoremLeibniz: check_theorem_leibniz(spec, bounds, tally); break;
              case ClaimId::LeibnizLowerBound: check_leibniz_lower_bound(spec, bounds, tally); break;
              case ClaimId::TheoremMaximality: check_theorem_maximality(spec, bounds, tally); break;
              case ClaimId::LeftIdeal: check_left_ideal(spec, bounds, tally); break;
              case ClaimId::SubsimplexInD: check_subsimplex_in_d(spec, bounds, tally); break;
              default: break;
            }
          }
        }
        break;
      case Family::FullChain:
        switch (claim) {
          case ClaimId::CorollaryNClosed: check_corollary_n_closed(n, bounds, tally); break;
          case ClaimId::Nilpotency: check_nilpotency(n, bounds, tally); break;
          case ClaimId::CountOn:
            check_count(count(SubsetSelector::over_nilpotent(n), bounds.ceiling), catalan(n), n, "|ON_n| vs C_n",
                        tally);
            break;
          case ClaimId::CountN:
            check_count(count(SubsetSelector::nilpotent(n), bounds.ceiling), catalan(n - 1), n, "|N_n| vs C_{n-1}",
                        tally);
            break;
          case ClaimId::NIdeal: {
            Bounds inner;
            inner.max_witnesses = bounds.max_witnesses;
            inner.ceiling = bounds.ceiling;
            inner.threads = bounds.threads;
            VerificationReport sub =
                ideal_check(SubsetSelector::nilpotent(n), SubsetSelector::over_nilpotent(n), true, inner);
            tally.absorb(sub.searched, sub.violations, std::move(sub.witnesses));
            break;
          }
          default: break;
        }
        break;
      case Family::TopSection:
        for (int p = 1; p <= n - 2; ++p) {
          if (bounds.p && *bounds.p != p) continue;
          const std::uint64_t expected = static_cast<std::uint64_t>(p) * catalan(p);
          check_count(count(SubsetSelector::top_section(n, p), bounds.ceiling), expected, n,
                      "|S_" + std::to_string(p) + "^{n-1}| vs p*C_p", tally);
        }
        break;
    }
  }

  report.searched = tally.searched();
  report.violations = tally.violations();
  report.witnesses = std::move(tally.witnesses());
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace chainendo
