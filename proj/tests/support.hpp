#pragma once

// Random instance generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the code under test for the quantity it
// is meant to cross-check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "interdec/factor_spaces.hpp"
#include "interdec/linalg.hpp"
#include "interdec/poset.hpp"
#include "interdec/projectors.hpp"
#include "interdec/split_functors.hpp"

namespace testing_support {

using namespace interdec;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Rat random_rat(Rng& rng, long span = 5, long max_den = 4) {
  const long num = std::uniform_int_distribution<long>(-span, span)(rng);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return make_rat(num, den);
}

inline RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long span = 3) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rat(rng, span, 2);
  return m;
}

inline RatMatrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    RatMatrix m = random_matrix(rng, n, n);
    if (is_invertible(m)) return m;
  }
}

/// Random poset on n elements: a random DAG over a random linear extension,
/// then transitive closure. Names are "e0", "e1", ... in index order.
inline FinitePoset random_poset(Rng& rng, std::size_t n, double edge_prob = 0.4) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution edge(edge_prob);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) pairs.emplace_back(names[order[i]], names[order[j]]);
  return FinitePoset::from_generators(std::move(names), pairs);
}

/// Moebius matrix by inverting the integer zeta matrix Z(a, b) = [b <= a]
/// directly: order elements by down-set size (a linear extension), where Z is
/// unitriangular, and back-substitute in 64-bit integers.
inline std::vector<std::vector<std::int64_t>> mobius_by_zeta_inversion(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> ext(n);
  std::iota(ext.begin(), ext.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) below[a] += p.leq(b, a);
  std::stable_sort(ext.begin(), ext.end(), [&](auto x, auto y) { return below[x] < below[y]; });
  // Z in the extension order is lower unitriangular; solve Z M = I column by column.
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::int64_t> x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t rhs = i == col ? 1 : 0;
      for (std::size_t k = 0; k < i; ++k)
        if (p.leq(ext[k], ext[i])) rhs -= x[k];
      x[i] = rhs;
    }
    for (std::size_t i = 0; i < n; ++i) m[ext[i]][ext[col]] = x[i];
  }
  return m;  // m[a][b] = mu(a, b)
}

/// Projector onto the span of the chosen columns of `basis` along the others.
inline RatMatrix block_projector(const RatMatrix& basis, const RatMatrix& basis_inv,
                                 const std::vector<bool>& keep) {
  RatVector d(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) d[i] = keep[i] ? 1 : 0;
  return basis * RatMatrix::diagonal(d) * basis_inv;
}

/// A family decomposable by construction: Q^n = (+)_{a in A + top} S_a with
/// S_a spanned by a block of columns of a random invertible matrix, and
/// pi_a the projection onto (+)_{b <= a} S_b along the rest.
struct PlantedFamily {
  ProjectorFamily family;
  std::vector<Subspace> planted;  // per element, then top
};

inline PlantedFamily planted_family(Rng& rng, const FinitePoset& p, std::size_t n) {
  std::vector<std::size_t> owner(n);
  for (auto& o : owner) o = uniform(rng, 0, p.size());  // p.size() is top
  const RatMatrix basis = random_invertible(rng, n);
  const RatMatrix inv = inverse(basis);
  std::vector<RatMatrix> pi;
  for (std::size_t a = 0; a < p.size(); ++a) {
    std::vector<bool> keep(n);
    for (std::size_t i = 0; i < n; ++i) keep[i] = owner[i] < p.size() && p.leq(owner[i], a);
    pi.push_back(block_projector(basis, inv, keep));
  }
  std::vector<Subspace> planted;
  for (std::size_t a = 0; a <= p.size(); ++a) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i)
      if (owner[i] == a) cols.push_back(i);
    planted.push_back(image(basis.select_cols(cols)));
  }
  return {ProjectorFamily(p, n, std::move(pi)), std::move(planted)};
}

/// Random idempotent of random rank.
inline RatMatrix random_projector(Rng& rng, std::size_t n) {
  const RatMatrix basis = random_invertible(rng, n);
  std::vector<bool> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = uniform(rng, 0, 1) == 1;
  return block_projector(basis, inverse(basis), keep);
}

/// s_a computed from the zeta-inversion oracle instead of MobiusTable.
inline std::vector<RatMatrix> s_by_oracle(const ProjectorFamily& f) {
  const auto mu = mobius_by_zeta_inversion(f.poset());
  std::vector<RatMatrix> s;
  for (std::size_t a = 0; a < f.poset().size(); ++a) {
    RatMatrix acc(f.dim(), f.dim());
    for (std::size_t b = 0; b < f.poset().size(); ++b)
      if (mu[a][b] != 0) acc += Rat(static_cast<long>(mu[a][b])) * f.at(b);
    s.push_back(std::move(acc));
  }
  return s;
}

/// Whether pi_a pi_b = sum_{c <= a, b} s_c fails at (a, b), with s from the oracle.
inline bool intersection_identity_fails_at(const ProjectorFamily& f, const std::vector<RatMatrix>& s, std::size_t a,
                           std::size_t b) {
  RatMatrix rhs(f.dim(), f.dim());
  for (std::size_t c = 0; c < f.poset().size(); ++c)
    if (f.poset().leq(c, a) && f.poset().leq(c, b)) rhs += s[c];
  return f.at(a) * f.at(b) != rhs;
}

/// Random split functor as a direct sum of components with random arrows.
/// Component arrows come from frames: arrow_c(lo, hi) = T_c(hi) T_c(lo)^-1,
/// so they compose coherently.
struct FramedSum {
  FinitePoset poset;
  std::vector<std::size_t> component_dims;
  std::vector<std::vector<RatMatrix>> frames;  // frames[c][x] for c <= x
  ComponentArrows arrows;
};

inline FramedSum framed_sum(Rng& rng, const FinitePoset& p, std::size_t max_dim = 3) {
  FramedSum fs{p, {}, {}, {}};
  const std::size_t n = p.size();
  fs.component_dims.resize(n);
  fs.frames.assign(n, std::vector<RatMatrix>(n));
  for (std::size_t c = 0; c < n; ++c) {
    fs.component_dims[c] = uniform(rng, 0, max_dim);
    for (std::size_t x = 0; x < n; ++x)
      if (p.leq(c, x)) fs.frames[c][x] = random_invertible(rng, fs.component_dims[c]);
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t lo = 0; lo < n; ++lo)
      for (std::size_t hi = 0; hi < n; ++hi)
        if (p.leq(c, lo) && p.covers(lo, hi))
          fs.arrows[{c, lo, hi}] = fs.frames[c][hi] * inverse(fs.frames[c][lo]);
  return fs;
}

/// Offset of component c's block inside G(x) (blocks in down_set(x) order).
inline std::size_t block_offset(const FinitePoset& p, const std::vector<std::size_t>& dims, std::size_t x,
                                std::size_t c) {
  std::size_t off = 0;
  for (auto e : p.down_set(x)) {
    if (e == c) return off;
    off += dims[e];
  }
  return off;
}

/// A split functor that differs from the framed sum by
///   F'^beta_gamma = F^beta_gamma + [b <= gamma][d <= beta][d !<= gamma] T_b(gamma) K T_d(beta)^-1
/// reading the d-block and writing the b-block. For incomparable b, d this is
/// still a valid couple, and at any common upper bound u the projectors
/// pi'_b and pi'_d no longer commute, so the intersection property fails.
struct Perturbation {
  std::size_t b = 0;
  std::size_t d = 0;
  std::size_t changed_generators = 0;
  SplitFunctor functor;
};

inline std::optional<Perturbation> perturb(Rng& rng, const FramedSum& fs) {
  const auto& p = fs.poset;
  const std::size_t n = p.size();
  const SplitFunctor base = sum_of_components(p, fs.component_dims, fs.arrows);

  // Choose (b, d) changing the fewest covering F arrows.
  const auto changed = [&](std::size_t b, std::size_t d) {
    std::size_t count = 0;
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t be = 0; be < n; ++be)
        if (p.covers(g, be) && p.leq(b, g) && p.leq(d, be) && !p.leq(d, g)) ++count;
    return count;
  };
  std::optional<std::pair<std::size_t, std::size_t>> pick;
  std::size_t best = SIZE_MAX;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t d = 0; d < n; ++d) {
      if (b == d || p.leq(b, d) || p.leq(d, b)) continue;
      if (fs.component_dims[b] == 0 || fs.component_dims[d] == 0) continue;
      bool common = false;
      for (std::size_t u = 0; u < n; ++u) common = common || (p.leq(b, u) && p.leq(d, u));
      if (!common) continue;
      const std::size_t c = changed(b, d);
      if (c < best) {
        best = c;
        pick = {b, d};
      }
    }
  if (!pick) return std::nullopt;
  const auto [b, d] = *pick;

  RatMatrix k = random_matrix(rng, fs.component_dims[b], fs.component_dims[d]);
  while (k.is_zero()) k = random_matrix(rng, fs.component_dims[b], fs.component_dims[d]);

  ArrowMap g;
  ArrowMap f;
  for (const auto& [lo, hi] : p.strict_pairs()) {
    if (!p.covers(lo, hi)) continue;
    g[{lo, hi}] = base.g(lo, hi);
    RatMatrix fm = base.f(hi, lo);
    if (p.leq(b, lo) && p.leq(d, hi) && !p.leq(d, lo)) {
      const RatMatrix block = fs.frames[b][lo] * k * inverse(fs.frames[d][hi]);
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          fm(block_offset(p, fs.component_dims, lo, b) + i, block_offset(p, fs.component_dims, hi, d) + j) +=
              block(i, j);
    }
    f[{lo, hi}] = std::move(fm);
  }
  return Perturbation{b, d, best, SplitFunctor::from_generators(p, base.dims(), g, f)};
}

/// Random change of basis at every element: G'(lo, hi) = Q_hi G Q_lo^-1,
/// F'(hi, lo) = Q_lo F Q_hi^-1. An isomorphic couple with no visible blocks.
inline SplitFunctor conjugate(Rng& rng, const SplitFunctor& sf) {
  const auto& p = sf.poset();
  std::vector<RatMatrix> q, qi;
  for (std::size_t x = 0; x < p.size(); ++x) {
    q.push_back(random_invertible(rng, sf.dim(x)));
    qi.push_back(inverse(q.back()));
  }
  ArrowMap g, f;
  for (const auto& [lo, hi] : p.strict_pairs()) {
    if (!p.covers(lo, hi)) continue;
    g[{lo, hi}] = q[hi] * sf.g(lo, hi) * qi[lo];
    f[{lo, hi}] = q[lo] * sf.f(hi, lo) * qi[hi];
  }
  return SplitFunctor::from_generators(p, sf.dims(), g, f);
}

}  // namespace testing_support
