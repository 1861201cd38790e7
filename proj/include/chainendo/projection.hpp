#pragma once

// Projection of sigma(A) onto the sub-simplex on the consecutive vertices
// a_l, ..., a_m, the distinguished sets S, R and D = S u R on which the
// projection satisfies the Leibniz rule, and the checks built on them.

#include <string>

#include "chainendo/endo.hpp"

namespace chainendo {

/// (A, l, m) with 0 <= l < m <= k-1.
class ProjectionSpec {
 public:
  ProjectionSpec(SimplexSpec simplex, int lower, int upper)
      : simplex_(std::move(simplex)), lower_(lower), upper_(upper) {
    const int k = simplex_.dimension();
    if (lower < 0 || lower >= upper || upper > k - 1) {
      throw Error(ErrorKind::InvalidProjection, "need 0 <= l < m <= k-1, got l=" + std::to_string(lower) +
                                                    ", m=" + std::to_string(upper) + ", k=" + std::to_string(k));
    }
  }

  ProjectionSpec(VertexSet vertices, int lower, int upper)
      : ProjectionSpec(SimplexSpec(std::move(vertices)), lower, upper) {}

  const SimplexSpec& simplex() const noexcept { return simplex_; }
  const VertexSet& vertices() const noexcept { return simplex_.vertices; }
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }
  int chain_size() const noexcept { return simplex_.chain_size(); }

  int lower_vertex() const noexcept { return vertices()[lower_]; }
  int upper_vertex() const noexcept { return vertices()[upper_]; }

  /// sigma{a_l, ..., a_m}.
  SimplexSpec image() const { return SimplexSpec(vertices().slice(lower_, upper_)); }

  bool operator==(const ProjectionSpec&) const = default;

 private:
  SimplexSpec simplex_;
  int lower_;
  int upper_;
};

namespace detail {

inline void require_in_simplex(const ProjectionSpec& spec, const Endo& alpha) {
  if (!spec.simplex().contains(alpha)) {
    throw Error(ErrorKind::NotInSimplex, "endomorphism is not in the projection's simplex");
  }
}

}  // namespace detail

/// Run-length definition: the mass of a_0..a_l collapses onto a_l, the mass
/// of a_m..a_{k-1} onto a_m, the runs in between are kept.
inline Endo project(const ProjectionSpec& spec, const Endo& alpha) {
  detail::require_in_simplex(spec, alpha);
  const RunLengthForm x = runs_relative_to(alpha, spec.vertices());
  const int k = spec.vertices().size();
  std::vector<int> mult(k, 0);
  for (int p = 0; p < k; ++p) {
    mult[std::clamp(p, spec.lower(), spec.upper())] += x.multiplicities[p];
  }
  return endo_from_runs(RunLengthForm{spec.vertices(), std::move(mult)});
}

/// Pointwise form t -> max(a_l, min(alpha(t), a_m)).
inline Endo project_clamp(const ProjectionSpec& spec, const Endo& alpha) {
  detail::require_in_simplex(spec, alpha);
  const int lo = spec.lower_vertex();
  const int hi = spec.upper_vertex();
  return Endo::generate(alpha.size(), [&](int t) { return std::max(lo, std::min(alpha[t], hi)); });
}

// Membership is decided by evaluating alpha at the vertex points a_p only.

inline bool in_S(const ProjectionSpec& spec, const Endo& alpha) {
  detail::require_in_simplex(spec, alpha);
  const VertexSet& a = spec.vertices();
  const int common = alpha[a[0]];
  for (int p = 1; p <= spec.lower(); ++p) {
    if (alpha[a[p]] != common) return false;
  }
  return common >= a[spec.lower() + 1] && alpha[a[spec.upper()]] <= a[spec.upper()];
}

inline bool in_R(const ProjectionSpec& spec, const Endo& alpha) {
  detail::require_in_simplex(spec, alpha);
  const VertexSet& a = spec.vertices();
  return alpha[a[spec.lower()]] <= a[spec.lower()] && alpha[a[spec.upper()]] <= a[spec.upper()];
}

inline bool in_D(const ProjectionSpec& spec, const Endo& alpha) { return in_S(spec, alpha) || in_R(spec, alpha); }

struct Membership {
  bool s = false;
  bool r = false;

  bool d() const noexcept { return s || r; }
  /// S and R never share an element.
  bool disjoint() const noexcept { return !(s && r); }
};

inline Membership classify(const ProjectionSpec& spec, const Endo& alpha) {
  return Membership{in_S(spec, alpha), in_R(spec, alpha)};
}

struct LeibnizOutcome {
  Endo lhs;  // d(alpha beta)
  Endo rhs;  // d(alpha) beta + alpha d(beta)
  bool holds;
};

inline LeibnizOutcome leibniz(const ProjectionSpec& spec, const Endo& alpha, const Endo& beta) {
  detail::require_in_simplex(spec, alpha);
  detail::require_in_simplex(spec, beta);
  Endo lhs = project(spec, compose(alpha, beta));
  Endo rhs = add(compose(project(spec, alpha), beta), compose(alpha, project(spec, beta)));
  const bool holds = lhs == rhs;
  return LeibnizOutcome{lhs, rhs, holds};
}

/// d(alpha + beta) == d(alpha) + d(beta).
inline bool additivity(const ProjectionSpec& spec, const Endo& alpha, const Endo& beta) {
  detail::require_in_simplex(spec, alpha);
  detail::require_in_simplex(spec, beta);
  return project(spec, add(alpha, beta)) == add(project(spec, alpha), project(spec, beta));
}

/// The one-step projection on outer's simplex with the same target as
/// applying `outer` and then `inner`.
inline ProjectionSpec composed_target(const ProjectionSpec& outer, const ProjectionSpec& inner) {
  if (!(inner.simplex() == outer.image())) {
    throw Error(ErrorKind::IncompatibleSpecs, "inner projection must act on the image simplex of the outer one");
  }
  return ProjectionSpec(outer.simplex(), outer.lower() + inner.lower(), outer.lower() + inner.upper());
}

/// inner(outer(alpha)).
inline Endo project_then_project(const ProjectionSpec& outer, const ProjectionSpec& inner, const Endo& alpha) {
  if (!(inner.simplex() == outer.image())) {
    throw Error(ErrorKind::IncompatibleSpecs, "inner projection must act on the image simplex of the outer one");
  }
  return project(inner, project(outer, alpha));
}

}  // namespace chainendo
