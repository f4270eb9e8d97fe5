#include "interdec/poset.hpp"

#include <algorithm>
#include <map>

namespace interdec {

namespace {

std::string pair_text(const std::vector<std::string>& names, std::size_t a, std::size_t b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> names,
                                       const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = names.size();
  if (leq.size() != n) throw PosetError(PosetError::Kind::kShape, "relation table is not square");
  for (const auto& row : leq) {
    if (row.size() != n) throw PosetError(PosetError::Kind::kShape, "relation table is not square");
  }
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw PosetError(PosetError::Kind::kShape, "duplicate element name");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) {
      throw PosetError(PosetError::Kind::kReflexivity, "reflexivity violated at " + names[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq[a][b] && leq[b][a]) {
        throw PosetError(PosetError::Kind::kAntisymmetry,
                         "antisymmetry violated at " + pair_text(names, a, b));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) {
          throw PosetError(PosetError::Kind::kTransitivity,
                           "transitivity violated: " + names[a] + " <= " + names[b] + " <= " +
                               names[c] + " but not " + names[a] + " <= " + names[c]);
        }

  FinitePoset p;
  p.names_ = std::move(names);
  p.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.leq_[a * n + b] = leq[a][b] ? 1 : 0;
  return p;
}

FinitePoset FinitePoset::from_generators(
    std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(names[i], i);
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) {
      throw PosetError(PosetError::Kind::kUnknownElement, "unknown element '" + s + "'");
    }
    return it->second;
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : pairs) leq[lookup(lo)][lookup(hi)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return from_relation(std::move(names), leq);
}

FinitePoset FinitePoset::chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return from_relation(std::move(names), leq);
}

FinitePoset FinitePoset::antichain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    leq[i][i] = true;
  }
  return from_relation(std::move(names), leq);
}

std::optional<std::size_t> FinitePoset::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FinitePoset::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw PosetError(PosetError::Kind::kUnknownElement, "unknown element '" + name + "'");
}

void FinitePoset::check_element(std::size_t a) const {
  if (a >= size()) {
    throw PosetError(PosetError::Kind::kUnknownElement,
                     "unknown element index " + std::to_string(a));
  }
}

bool FinitePoset::covers(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return false;
  for (std::size_t c = 0; c < size(); ++c) {
    if (less(a, c) && less(c, b)) return false;
  }
  return true;
}

ElementSet FinitePoset::down_set(std::size_t a) const {
  check_element(a);
  ElementSet out;
  for (std::size_t b = 0; b < size(); ++b)
    if (leq(b, a)) out.push_back(b);
  return out;
}

ElementSet FinitePoset::up_set(std::size_t a) const {
  check_element(a);
  ElementSet out;
  for (std::size_t b = 0; b < size(); ++b)
    if (leq(a, b)) out.push_back(b);
  return out;
}

bool FinitePoset::is_lower_set(std::span<const std::size_t> subset) const {
  std::vector<bool> in(size(), false);
  for (auto b : subset) {
    check_element(b);
    in[b] = true;
  }
  for (auto b : subset)
    for (std::size_t a = 0; a < size(); ++a)
      if (leq(a, b) && !in[a]) return false;
  return true;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  check_element(a);
  check_element(b);
  for (std::size_t d = 0; d < size(); ++d) {
    if (!leq(d, a) || !leq(d, b)) continue;
    bool greatest = true;
    for (std::size_t c = 0; c < size() && greatest; ++c) {
      if (leq(c, a) && leq(c, b) && !leq(c, d)) greatest = false;
    }
    if (greatest) return d;
  }
  return std::nullopt;
}

bool FinitePoset::is_meet_semilattice() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!meet(a, b)) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::strict_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (up_set(a).size() == size()) return a;
  }
  return std::nullopt;
}

FinitePoset FinitePoset::restrict(std::span<const std::size_t> subset) const {
  FinitePoset p;
  const std::size_t m = subset.size();
  p.leq_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    check_element(subset[i]);
    p.names_.push_back(names_[subset[i]]);
    for (std::size_t j = 0; j < m; ++j) p.leq_[i * m + j] = leq(subset[i], subset[j]) ? 1 : 0;
  }
  return p;
}

AugmentedPoset augment(const FinitePoset& base, const std::string& top_name) {
  if (base.find(top_name)) {
    throw PosetError(PosetError::Kind::kShape, "top name '" + top_name + "' already used");
  }
  const std::size_t n = base.size();
  std::vector<std::string> names = base.names();
  names.push_back(top_name);
  std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = base.leq(a, b);
    leq[a][n] = true;
  }
  leq[n][n] = true;
  return {FinitePoset::from_relation(std::move(names), leq), n};
}

MobiusTable::MobiusTable(const FinitePoset& poset) : n_(poset.size()), mu_(n_ * n_, 0) {
  std::vector<std::size_t> height(n_);
  for (std::size_t a = 0; a < n_; ++a) height[a] = poset.down_set(a).size();
  for (std::size_t a = 0; a < n_; ++a) {
    ElementSet below = poset.down_set(a);
    // Anything strictly above b has a strictly larger down-set, so this order
    // visits every c in (b, a] before b.
    std::sort(below.begin(), below.end(),
              [&](std::size_t x, std::size_t y) { return height[x] > height[y]; });
    for (std::size_t b : below) {
      if (b == a) {
        mu_[a * n_ + a] = 1;
        continue;
      }
      std::int64_t acc = 0;
      for (std::size_t c : below)
        if (poset.less(b, c)) acc += mu_[a * n_ + c];
      mu_[a * n_ + b] = -acc;
    }
  }
}

MobiusTable mobius(const FinitePoset& poset) { return MobiusTable(poset); }

namespace {

void check_vector_family(const FinitePoset& poset, const VectorFamily& m) {
  if (m.size() != poset.size()) throw DimensionError("family size differs from poset size");
  for (const auto& v : m) {
    if (v.size() != m.front().size()) throw DimensionError("coefficient dimension mismatch");
  }
}

void check_matrix_family(const FinitePoset& poset, const MatrixFamily& m) {
  if (m.size() != poset.size()) throw DimensionError("family size differs from poset size");
  for (const auto& x : m) {
    if (x.rows() != m.front().rows() || x.cols() != m.front().cols()) {
      throw DimensionError("coefficient shape mismatch");
    }
  }
}

}  // namespace

VectorFamily zeta_apply(const FinitePoset& poset, const VectorFamily& m) {
  check_vector_family(poset, m);
  const std::size_t d = m.empty() ? 0 : m.front().size();
  VectorFamily out(poset.size(), RatVector(d));
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t b : poset.down_set(a))
      for (std::size_t k = 0; k < d; ++k) out[a][k] += m[b][k];
  return out;
}

VectorFamily mobius_apply(const FinitePoset& poset, const VectorFamily& m) {
  check_vector_family(poset, m);
  const MobiusTable mu(poset);
  const std::size_t d = m.empty() ? 0 : m.front().size();
  VectorFamily out(poset.size(), RatVector(d));
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b : poset.down_set(a)) {
      const std::int64_t c = mu.value(a, b);
      if (c == 0) continue;
      for (std::size_t k = 0; k < d; ++k) out[a][k] += Rat(static_cast<long>(c)) * m[b][k];
    }
  }
  return out;
}

MatrixFamily zeta_apply(const FinitePoset& poset, const MatrixFamily& m) {
  check_matrix_family(poset, m);
  MatrixFamily out;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    RatMatrix acc(m.front().rows(), m.front().cols());
    for (std::size_t b : poset.down_set(a)) acc += m[b];
    out.push_back(std::move(acc));
  }
  return out;
}

MatrixFamily mobius_apply(const FinitePoset& poset, const MobiusTable& mu, const MatrixFamily& m) {
  check_matrix_family(poset, m);
  if (mu.size() != poset.size()) throw DimensionError("Moebius table does not match poset");
  MatrixFamily out;
  for (std::size_t a = 0; a < poset.size(); ++a) {
    RatMatrix acc(m.front().rows(), m.front().cols());
    for (std::size_t b : poset.down_set(a)) {
      const std::int64_t c = mu.value(a, b);
      if (c != 0) acc += Rat(static_cast<long>(c)) * m[b];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

namespace {

// Class label of each element under a ~ c  <=>  down(a) & B == down(c) & B.
std::vector<std::size_t> w_classes(const FinitePoset& poset, std::span<const std::size_t> lower_set) {
  if (!poset.is_lower_set(lower_set)) {
    throw PosetError(PosetError::Kind::kShape, "subset is not a lower-set");
  }
  std::vector<bool> in(poset.size(), false);
  for (auto b : lower_set) in[b] = true;
  std::map<std::vector<bool>, std::size_t> label;
  std::vector<std::size_t> cls(poset.size());
  for (std::size_t a = 0; a < poset.size(); ++a) {
    std::vector<bool> key(poset.size(), false);
    for (std::size_t b = 0; b < poset.size(); ++b) key[b] = in[b] && poset.leq(b, a);
    cls[a] = label.emplace(std::move(key), label.size()).first->second;
  }
  return cls;
}

}  // namespace

bool w_space_membership(const FinitePoset& poset, std::span<const std::size_t> lower_set,
                        const VectorFamily& u) {
  check_vector_family(poset, u);
  const auto cls = w_classes(poset, lower_set);
  for (std::size_t a = 0; a < poset.size(); ++a)
    for (std::size_t c = a + 1; c < poset.size(); ++c)
      if (cls[a] == cls[c] && u[a] != u[c]) return false;
  return true;
}

Subspace w_space(const FinitePoset& poset, std::span<const std::size_t> lower_set) {
  const auto cls = w_classes(poset, lower_set);
  const std::size_t k = poset.size() == 0 ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  RatMatrix vectors(k, poset.size());
  for (std::size_t a = 0; a < poset.size(); ++a) vectors(cls[a], a) = 1;
  return Subspace::row_span(vectors);
}

}  // namespace interdec
