#include "interdec/split_functors.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace interdec {

namespace {

void put_block(RatMatrix& dst, std::size_t r0, std::size_t c0, const RatMatrix& src) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
}

std::string shape_of(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// Number of elements in the interval [lo, hi].
std::size_t interval_size(const FinitePoset& p, std::size_t lo, std::size_t hi) {
  std::size_t n = 0;
  for (std::size_t c = 0; c < p.size(); ++c) n += p.leq(lo, c) && p.leq(c, hi);
  return n;
}

// Strict pairs lo < hi, shortest intervals first so composites only need
// already computed pieces.
std::vector<std::pair<std::size_t, std::size_t>> pairs_by_interval(const FinitePoset& p) {
  auto pairs = p.strict_pairs();
  std::vector<std::size_t> len;
  len.reserve(pairs.size());
  for (const auto& [lo, hi] : pairs) len.push_back(interval_size(p, lo, hi));
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return len[x] < len[y]; });
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pairs.size());
  for (auto k : order) out.push_back(pairs[k]);
  return out;
}

// Elements ordered by size of their down-set, then by index.
std::vector<std::size_t> bottom_up(const FinitePoset& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> size(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) size[a] = p.down_set(a).size();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return size[x] < size[y]; });
  return order;
}

std::size_t position_in(const ElementSet& set, std::size_t x) {
  return static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), x) - set.begin());
}

}  // namespace

std::size_t SplitFunctor::slot(std::size_t lo, std::size_t hi) const {
  if (lo >= poset_.size() || hi >= poset_.size() || !poset_.leq(lo, hi)) {
    const auto name = [&](std::size_t x) { return x < poset_.size() ? poset_.name(x) : std::to_string(x); };
    throw SplitError(SplitError::Kind::kShape, name(lo), name(hi), "elements are not comparable");
  }
  return lo * poset_.size() + hi;
}

const RatMatrix& SplitFunctor::g(std::size_t lo, std::size_t hi) const { return g_[slot(lo, hi)]; }
const RatMatrix& SplitFunctor::f(std::size_t hi, std::size_t lo) const { return f_[slot(lo, hi)]; }

SplitFunctor SplitFunctor::from_generators(FinitePoset poset, std::vector<std::size_t> dims,
                                           const ArrowMap& g, const ArrowMap& f) {
  using K = SplitError::Kind;
  SplitFunctor sf;
  sf.poset_ = std::move(poset);
  sf.dims_ = std::move(dims);
  const auto& p = sf.poset_;
  const std::size_t n = p.size();
  if (sf.dims_.size() != n) {
    throw SplitError(K::kShape, "", "", "expected " + std::to_string(n) + " dimensions, got " +
                                            std::to_string(sf.dims_.size()));
  }

  const auto check_keys = [&](const ArrowMap& m, bool is_g) {
    for (const auto& [key, mat] : m) {
      const auto [lo, hi] = key;
      if (lo >= n || hi >= n || !p.less(lo, hi)) {
        throw SplitError(K::kShape, lo < n ? p.name(lo) : "?", hi < n ? p.name(hi) : "?",
                         std::string(is_g ? "G" : "F") + " generator on a pair that is not lo < hi");
      }
      const std::size_t r = is_g ? sf.dims_[hi] : sf.dims_[lo];
      const std::size_t c = is_g ? sf.dims_[lo] : sf.dims_[hi];
      if (mat.rows() != r || mat.cols() != c) {
        throw SplitError(K::kShape, p.name(lo), p.name(hi),
                         std::string(is_g ? "G" : "F") + " on " + p.name(lo) + " <= " + p.name(hi) + " is " +
                             shape_of(mat.rows(), mat.cols()) + ", expected " + shape_of(r, c));
      }
    }
  };
  check_keys(g, true);
  check_keys(f, false);

  sf.g_.assign(n * n, RatMatrix());
  sf.f_.assign(n * n, RatMatrix());
  for (std::size_t a = 0; a < n; ++a) {
    sf.g_[a * n + a] = RatMatrix::identity(sf.dims_[a]);
    sf.f_[a * n + a] = RatMatrix::identity(sf.dims_[a]);
  }

  for (const auto& [lo, hi] : pairs_by_interval(p)) {
    const std::size_t k = lo * n + hi;
    if (p.covers(lo, hi)) {
      const auto gi = g.find({lo, hi});
      const auto fi = f.find({lo, hi});
      if (gi == g.end() || fi == f.end()) {
        throw SplitError(K::kMissingGenerator, p.name(lo), p.name(hi),
                         std::string("missing ") + (gi == g.end() ? "G" : "F") + " generator for " + p.name(lo) +
                             " <= " + p.name(hi));
      }
      sf.g_[k] = gi->second;
      sf.f_[k] = fi->second;
      continue;
    }
    std::size_t mid = n;
    for (std::size_t c = 0; c < n && mid == n; ++c)
      if (p.covers(lo, c) && p.less(c, hi)) mid = c;
    sf.g_[k] = sf.g_[mid * n + hi] * sf.g_[lo * n + mid];
    sf.f_[k] = sf.f_[lo * n + mid] * sf.f_[mid * n + hi];
    const auto gi = g.find({lo, hi});
    const auto fi = f.find({lo, hi});
    if ((gi != g.end() && gi->second != sf.g_[k]) || (fi != f.end() && fi->second != sf.f_[k])) {
      throw SplitError(K::kFunctoriality, p.name(lo), p.name(hi),
                       "given arrow on " + p.name(lo) + " <= " + p.name(hi) + " differs from the composite");
    }
  }
  sf.validate();
  return sf;
}

void SplitFunctor::validate() const {
  using K = SplitError::Kind;
  const auto& p = poset_;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.less(b, a)) continue;
      if (f(a, b) * g(b, a) != RatMatrix::identity(dims_[b])) {
        throw SplitError(K::kSplit, p.name(b), p.name(a),
                         "F G is not the identity on " + p.name(b) + " <= " + p.name(a));
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!p.less(c, b)) continue;
        if (g(c, a) != g(b, a) * g(c, b)) {
          throw SplitError(K::kFunctoriality, p.name(c), p.name(a),
                           "G is not functorial on " + p.name(c) + " <= " + p.name(b) + " <= " + p.name(a));
        }
        if (f(a, c) != f(b, c) * f(a, b)) {
          throw SplitError(K::kFunctoriality, p.name(c), p.name(a),
                           "F is not functorial on " + p.name(c) + " <= " + p.name(b) + " <= " + p.name(a));
        }
        if (f(a, b) * g(c, a) != g(c, b)) {
          throw SplitError(K::kFunctoriality, p.name(c), p.name(b),
                           "F G does not restrict to G on " + p.name(c) + " <= " + p.name(b) + " <= " + p.name(a));
        }
      }
    }
  }
}

SplitFunctor validate_split(FinitePoset poset, std::vector<std::size_t> dims, const ArrowMap& g,
                            const ArrowMap& f) {
  return SplitFunctor::from_generators(std::move(poset), std::move(dims), g, f);
}

ProjectorFamily projector_family_at(const SplitFunctor& sf, std::size_t alpha) {
  const auto& p = sf.poset();
  const ElementSet down = p.down_set(alpha);
  std::vector<RatMatrix> pi;
  pi.reserve(down.size());
  for (auto a : down) pi.push_back(sf.g(a, alpha) * sf.f(alpha, a));
  return ProjectorFamily(p.restrict(down), sf.dim(alpha), std::move(pi));
}

bool intersection_holds_at(const SplitFunctor& sf, std::size_t alpha) {
  return check_intersection_general(projector_family_at(sf, alpha));
}

SplitIntersectionReport check_intersection(const SplitFunctor& sf) {
  const auto& p = sf.poset();
  SplitIntersectionReport rep;
  rep.holds_at.assign(p.size(), true);
  for (auto alpha : bottom_up(p)) {
    bool inherited = false;
    for (auto b : p.down_set(alpha)) inherited = inherited || (b != alpha && !rep.holds_at[b]);
    if (inherited) {
      rep.holds_at[alpha] = false;
      continue;
    }
    const ProjectorFamily fam = projector_family_at(sf, alpha);
    const auto w = intersection_witness(fam, compute_s(fam));
    if (w) {
      const ElementSet down = p.down_set(alpha);
      rep.holds_at[alpha] = false;
      rep.witnesses.push_back({alpha, down[w->a], down[w->b]});
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const SplitWitness& x, const SplitWitness& y) { return x.alpha < y.alpha; });
  rep.holds = rep.witnesses.empty();
  return rep;
}

std::size_t CouplingData::index(std::size_t alpha, std::size_t a) const {
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] == std::pair{alpha, a}) return k;
  throw SplitError(SplitError::Kind::kShape, "", "", "pair is not in A1");
}

namespace {

// Matrix of the ambient map `m` between R-spaces, in echelon coordinates.
RatMatrix restricted(const RatMatrix& m, const Subspace& from, const Subspace& to, const FinitePoset& a1,
                     std::size_t lo, std::size_t hi) {
  try {
    return to.coordinates(m * from.basis_columns());
  } catch (const DimensionError&) {
    throw SplitError(SplitError::Kind::kCoherence, a1.name(lo), a1.name(hi),
                     "transported map leaves its target space");
  }
}

RatMatrix lookup(const ArrowMap& m, std::size_t lo, std::size_t hi, std::size_t dim) {
  if (lo == hi) return RatMatrix::identity(dim);
  return m.at({lo, hi});
}

}  // namespace

CouplingData build_couplings(const SplitFunctor& sf) {
  const auto& p = sf.poset();
  CouplingData cd;
  std::vector<std::string> names;
  for (std::size_t alpha = 0; alpha < p.size(); ++alpha) {
    for (auto a : p.down_set(alpha)) {
      cd.pairs.emplace_back(alpha, a);
      names.push_back("(" + p.name(alpha) + "," + p.name(a) + ")");
      cd.r_spaces.push_back(image(sf.g(a, alpha)));
    }
  }
  const std::size_t m = cd.pairs.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      leq[x][y] = p.leq(cd.pairs[x].first, cd.pairs[y].first) && p.leq(cd.pairs[x].second, cd.pairs[y].second);
  cd.a1 = FinitePoset::from_relation(std::move(names), leq);

  // Generators: same top alpha, and same bottom a.
  ArrowMap l_gen;
  ArrowMap r_gen;
  for (std::size_t lo = 0; lo < m; ++lo) {
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (!cd.a1.less(lo, hi)) continue;
      const auto [beta, b] = cd.pairs[lo];
      const auto [alpha, a] = cd.pairs[hi];
      const auto& rlo = cd.r_spaces[lo];
      const auto& rhi = cd.r_spaces[hi];
      if (alpha == beta) {
        const RatMatrix pi_b = sf.g(b, alpha) * sf.f(alpha, b);
        l_gen[{lo, hi}] = restricted(RatMatrix::identity(sf.dim(alpha)), rlo, rhi, cd.a1, lo, hi);
        r_gen[{lo, hi}] = restricted(pi_b, rhi, rlo, cd.a1, lo, hi);
      } else if (a == b) {
        l_gen[{lo, hi}] = restricted(sf.g(beta, alpha), rlo, rhi, cd.a1, lo, hi);
        r_gen[{lo, hi}] = restricted(sf.f(alpha, beta), rhi, rlo, cd.a1, lo, hi);
      }
    }
  }

  // (beta,b) <= (alpha,b) <= (alpha,a).
  for (std::size_t lo = 0; lo < m; ++lo) {
    for (std::size_t hi = 0; hi < m; ++hi) {
      if (!cd.a1.less(lo, hi)) continue;
      const auto [beta, b] = cd.pairs[lo];
      const auto [alpha, a] = cd.pairs[hi];
      const std::size_t mid = cd.index(alpha, b);
      const std::size_t d_lo = cd.r_spaces[lo].dim();
      const std::size_t d_mid = cd.r_spaces[mid].dim();
      cd.l_maps[{lo, hi}] = lookup(l_gen, mid, hi, d_mid) * lookup(l_gen, lo, mid, d_lo);
      cd.r_maps[{lo, hi}] = lookup(r_gen, lo, mid, d_lo) * lookup(r_gen, mid, hi, d_mid);
    }
  }
  return cd;
}

namespace {

// Block layout of V(alpha, a) = prod_{c <= a} G(alpha).
RatMatrix zeta_blocks(const FinitePoset& p, const ElementSet& down, std::size_t d) {
  RatMatrix z(down.size() * d, down.size() * d);
  for (std::size_t i = 0; i < down.size(); ++i)
    for (std::size_t j = 0; j < down.size(); ++j)
      if (p.leq(down[j], down[i]))
        for (std::size_t t = 0; t < d; ++t) z(i * d + t, j * d + t) = 1;
  return z;
}

RatMatrix mobius_blocks(const MobiusTable& mu, const ElementSet& down, std::size_t d) {
  RatMatrix z(down.size() * d, down.size() * d);
  for (std::size_t i = 0; i < down.size(); ++i)
    for (std::size_t j = 0; j < down.size(); ++j) {
      const auto v = mu.value(down[i], down[j]);
      if (v != 0)
        for (std::size_t t = 0; t < d; ++t) z(i * d + t, j * d + t) = Rat(static_cast<long>(v));
    }
  return z;
}

// V_r from V(alpha, a) to V(beta, b): keep the blocks c <= b, apply F^alpha_beta.
RatMatrix v_r(const SplitFunctor& sf, std::size_t alpha, std::size_t a, std::size_t beta, std::size_t b) {
  const auto& p = sf.poset();
  const ElementSet da = p.down_set(a);
  const ElementSet db = p.down_set(b);
  const RatMatrix& f = sf.f(alpha, beta);
  RatMatrix out(db.size() * sf.dim(beta), da.size() * sf.dim(alpha));
  for (std::size_t i = 0; i < db.size(); ++i) put_block(out, i * sf.dim(beta), position_in(da, db[i]) * sf.dim(alpha), f);
  return out;
}

// V_l from V(beta, b) to V(alpha, a): apply G^beta_alpha, include blocks c <= b.
RatMatrix v_l(const SplitFunctor& sf, std::size_t beta, std::size_t b, std::size_t alpha, std::size_t a) {
  const auto& p = sf.poset();
  const ElementSet da = p.down_set(a);
  const ElementSet db = p.down_set(b);
  const RatMatrix& g = sf.g(beta, alpha);
  RatMatrix out(da.size() * sf.dim(alpha), db.size() * sf.dim(beta));
  for (std::size_t i = 0; i < db.size(); ++i) put_block(out, position_in(da, db[i]) * sf.dim(alpha), i * sf.dim(beta), g);
  return out;
}

}  // namespace

CouplingReport verify_couplings(const SplitFunctor& sf, const CouplingData& cd) {
  const auto& p = sf.poset();
  const auto& a1 = cd.a1;
  const std::size_t m = cd.pairs.size();
  const MobiusTable mu(p);
  CouplingReport rep;

  const auto dim = [&](std::size_t x) { return cd.r_spaces[x].dim(); };
  const auto L = [&](std::size_t lo, std::size_t hi) { return lookup(cd.l_maps, lo, hi, dim(lo)); };
  const auto R = [&](std::size_t lo, std::size_t hi) { return lookup(cd.r_maps, lo, hi, dim(lo)); };

  // alpha >= beta >= a >= b.
  for (std::size_t alpha = 0; alpha < p.size(); ++alpha)
    for (auto beta : p.down_set(alpha))
      for (auto a : p.down_set(beta))
        for (auto b : p.down_set(a)) {
          const auto aa = cd.index(alpha, a), ab = cd.index(alpha, b);
          const auto ba = cd.index(beta, a), bb = cd.index(beta, b);
          rep.squares = rep.squares && L(ba, aa) * L(bb, ba) == L(ab, aa) * L(bb, ab);
          rep.squares = rep.squares && R(bb, ba) * R(ba, aa) == R(bb, ab) * R(ab, aa);
        }

  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (!a1.leq(x, y)) continue;
      rep.split = rep.split && R(x, y) * L(x, y) == RatMatrix::identity(dim(x));
      for (std::size_t z = 0; z < m && rep.functorial_extension; ++z) {
        if (!a1.leq(y, z)) continue;
        rep.functorial_extension = L(y, z) * L(x, y) == L(x, z) && R(x, y) * R(y, z) == R(x, z);
      }
    }

  for (std::size_t alpha = 0; alpha < p.size(); ++alpha)
    for (auto a : p.down_set(alpha)) {
      const auto lo = cd.index(a, a), hi = cd.index(alpha, alpha);
      rep.boundary = rep.boundary && L(lo, hi) == sf.g(a, alpha) && R(lo, hi) == sf.f(alpha, a);
      for (auto beta : p.down_set(alpha)) {
        if (beta == alpha || !p.leq(a, beta)) continue;
        const auto l = L(cd.index(beta, a), cd.index(alpha, a));
        rep.inverses = rep.inverses && is_invertible(l) && inverse(l) == R(cd.index(beta, a), cd.index(alpha, a));
      }
    }

  // zeta and mu commute with every V_r arrow.
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (!a1.leq(x, y)) continue;
      const auto [beta, b] = cd.pairs[x];
      const auto [alpha, a] = cd.pairs[y];
      const ElementSet da = p.down_set(a), db = p.down_set(b);
      const RatMatrix t = v_r(sf, alpha, a, beta, b);
      rep.zeta_naturality = rep.zeta_naturality &&
                            t * zeta_blocks(p, da, sf.dim(alpha)) == zeta_blocks(p, db, sf.dim(beta)) * t &&
                            t * mobius_blocks(mu, da, sf.dim(alpha)) == mobius_blocks(mu, db, sf.dim(beta)) * t;
    }

  // phi(alpha, a) : R(alpha, a) -> V(alpha, a), v -> (pi^alpha_c v)_{c <= a}, and j = mu phi.
  std::vector<RatMatrix> j(m);
  for (std::size_t x = 0; x < m; ++x) {
    const auto [alpha, a] = cd.pairs[x];
    const ElementSet da = p.down_set(a);
    const std::size_t d = sf.dim(alpha);
    const RatMatrix basis = cd.r_spaces[x].basis_columns();
    std::vector<RatMatrix> pi;
    for (auto c : da) pi.push_back(sf.g(c, alpha) * sf.f(alpha, c));

    RatMatrix phi(da.size() * d, dim(x));
    for (std::size_t i = 0; i < da.size(); ++i) put_block(phi, i * d, 0, pi[i] * basis);

    // M(alpha, a): v_c in im pi_c and pi_{c1} v_c = v_{c1} for c1 <= c.
    std::vector<RatMatrix> rows;
    for (std::size_t i = 0; i < da.size(); ++i) {
      RatMatrix r(d, da.size() * d);
      put_block(r, 0, i * d, RatMatrix::identity(d) - pi[i]);
      rows.push_back(std::move(r));
      for (std::size_t k = 0; k < da.size(); ++k) {
        if (k == i || !p.leq(da[k], da[i])) continue;
        RatMatrix c(d, da.size() * d);
        put_block(c, 0, i * d, pi[k]);
        put_block(c, 0, k * d, -1 * RatMatrix::identity(d));
        rows.push_back(std::move(c));
      }
    }
    RatMatrix constraints(0, da.size() * d);
    for (const auto& r : rows) constraints = vstack(constraints, r);
    const Subspace limit = kernel(constraints);
    rep.limit_isomorphism = rep.limit_isomorphism && rank(phi) == dim(x) && limit.contains_columns(phi) &&
                            limit.dim() == dim(x);

    j[x] = mobius_blocks(mu, da, d) * phi;
    rep.j_monomorphism = rep.j_monomorphism && rank(j[x]) == dim(x);
  }

  std::vector<bool> holds(p.size());
  for (std::size_t alpha = 0; alpha < p.size(); ++alpha) holds[alpha] = intersection_holds_at(sf, alpha);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (!a1.less(x, y)) continue;
      const auto [beta, b] = cd.pairs[x];
      const auto [alpha, a] = cd.pairs[y];
      const bool m2 = a == b;
      const bool m1 = alpha == beta && holds[alpha];
      if (!m1 && !m2) continue;
      rep.j_naturality = rep.j_naturality && j[y] * L(x, y) == v_l(sf, beta, b, alpha, a) * j[x];
    }
  return rep;
}

SplitDecomposeResult decompose_split(const SplitFunctor& sf) {
  const auto& p = sf.poset();
  const std::size_t n = p.size();
  const auto report = check_intersection(sf);
  if (!report.holds) return SplitFailure{report.witnesses};

  bool ok = true;
  // s[alpha][k]: s^alpha at down_set(alpha)[k].
  std::vector<std::vector<RatMatrix>> s(n);
  for (std::size_t alpha = 0; alpha < n; ++alpha) s[alpha] = compute_s(projector_family_at(sf, alpha)).s;
  const auto s_at = [&](std::size_t alpha, std::size_t b) -> const RatMatrix& {
    return s[alpha][position_in(p.down_set(alpha), b)];
  };

  SplitDecomposition out;
  out.components.resize(n);
  // transported[b][alpha] = G^b_alpha base_basis(b).
  std::vector<std::vector<RatMatrix>> transported(n, std::vector<RatMatrix>(n));
  for (std::size_t b = 0; b < n; ++b) {
    auto& comp = out.components[b];
    const Subspace base = image(s_at(b, b));
    comp.dim = base.dim();
    comp.base_basis = base.basis_columns();
    for (auto alpha : p.up_set(b)) {
      transported[b][alpha] = sf.g(b, alpha) * comp.base_basis;
      ok = ok && image(transported[b][alpha]) == image(s_at(alpha, b));
    }
    for (auto lo : p.up_set(b))
      for (auto hi : p.up_set(lo)) {
        if (lo == hi) continue;
        auto arrow = solve(transported[b][hi], sf.g(lo, hi) * transported[b][lo]);
        auto co_arrow = solve(transported[b][lo], sf.f(hi, lo) * transported[b][hi]);
        if (!arrow || !co_arrow || !is_invertible(*arrow) || *co_arrow * *arrow != RatMatrix::identity(comp.dim)) {
          ok = false;
          continue;
        }
        comp.arrows[{lo, hi}] = std::move(*arrow);
        comp.co_arrows[{lo, hi}] = std::move(*co_arrow);
      }
  }
  if (!ok) return out;

  const auto arrow = [&](std::size_t c, std::size_t lo, std::size_t hi, bool co) {
    if (lo == hi) return RatMatrix::identity(out.components[c].dim);
    return co ? out.components[c].co_arrows.at({lo, hi}) : out.components[c].arrows.at({lo, hi});
  };

  out.psi.resize(n);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    RatMatrix psi(0, sf.dim(alpha));
    for (auto b : p.down_set(alpha)) {
      auto coords = solve(transported[b][alpha], s_at(alpha, b));
      if (!coords) return out;
      psi = vstack(psi, *coords);
    }
    ok = ok && is_invertible(psi);
    out.psi[alpha] = std::move(psi);
  }

  // Block offsets of (+)_{c <= x} C_c(x).
  const auto offsets = [&](std::size_t x) {
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (auto c : p.down_set(x)) {
      off.push_back(acc);
      acc += out.components[c].dim;
    }
    off.push_back(acc);
    return off;
  };
  for (std::size_t a = 0; a < n && ok; ++a) {
    const ElementSet da = p.down_set(a);
    const auto off_a = offsets(a);
    for (std::size_t b : da) {
      if (b == a) continue;
      const ElementSet db = p.down_set(b);
      const auto off_b = offsets(b);
      RatMatrix proj(off_b.back(), off_a.back());
      RatMatrix incl(off_a.back(), off_b.back());
      for (std::size_t i = 0; i < db.size(); ++i) {
        const std::size_t k = position_in(da, db[i]);
        put_block(proj, off_b[i], off_a[k], arrow(db[i], b, a, true));
        put_block(incl, off_a[k], off_b[i], arrow(db[i], b, a, false));
      }
      ok = proj * out.psi[a] == out.psi[b] * sf.f(a, b) && out.psi[a] * sf.g(b, a) == incl * out.psi[b];
      if (!ok) break;
    }
  }
  out.certified = ok;
  return out;
}

SplitFunctor sum_of_components(const FinitePoset& poset, const std::vector<std::size_t>& component_dims,
                               const ComponentArrows& arrows) {
  using K = SplitError::Kind;
  const std::size_t n = poset.size();
  if (component_dims.size() != n) {
    throw SplitError(K::kShape, "", "", "expected " + std::to_string(n) + " component dimensions");
  }
  for (const auto& [key, mat] : arrows) {
    const auto [c, lo, hi] = key;
    if (c >= n || lo >= n || hi >= n || !poset.leq(c, lo) || !poset.covers(lo, hi)) {
      throw SplitError(K::kShape, lo < n ? poset.name(lo) : "?", hi < n ? poset.name(hi) : "?",
                       "component arrow on an invalid triple");
    }
    if (mat.rows() != component_dims[c] || mat.cols() != component_dims[c]) {
      throw SplitError(K::kShape, poset.name(lo), poset.name(hi),
                       "component arrow for '" + poset.name(c) + "' must be " +
                           shape_of(component_dims[c], component_dims[c]));
    }
    if (!is_invertible(mat)) {
      throw SplitError(K::kNotInvertible, poset.name(lo), poset.name(hi),
                       "component arrow for '" + poset.name(c) + "' on " + poset.name(lo) + " <= " +
                           poset.name(hi) + " is not invertible");
    }
  }

  std::vector<std::size_t> dims(n, 0);
  std::vector<std::vector<std::size_t>> offset(n);
  for (std::size_t x = 0; x < n; ++x)
    for (auto c : poset.down_set(x)) {
      offset[x].push_back(dims[x]);
      dims[x] += component_dims[c];
    }

  ArrowMap g;
  ArrowMap f;
  for (const auto& [lo, hi] : poset.strict_pairs()) {
    if (!poset.covers(lo, hi)) continue;
    const ElementSet dlo = poset.down_set(lo);
    const ElementSet dhi = poset.down_set(hi);
    RatMatrix gm(dims[hi], dims[lo]);
    RatMatrix fm(dims[lo], dims[hi]);
    for (std::size_t i = 0; i < dlo.size(); ++i) {
      const std::size_t c = dlo[i];
      const auto it = arrows.find({c, lo, hi});
      const RatMatrix a = it == arrows.end() ? RatMatrix::identity(component_dims[c]) : it->second;
      const std::size_t k = position_in(dhi, c);
      put_block(gm, offset[hi][k], offset[lo][i], a);
      put_block(fm, offset[lo][i], offset[hi][k], inverse(a));
    }
    g[{lo, hi}] = std::move(gm);
    f[{lo, hi}] = std::move(fm);
  }
  return SplitFunctor::from_generators(poset, std::move(dims), g, f);
}

}  // namespace interdec
