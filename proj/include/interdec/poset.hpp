#pragma once

// Finite posets, their lower-sets and meets, and the zeta / Moebius transforms
// of families of coefficients indexed by the poset.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "interdec/errors.hpp"
#include "interdec/linalg.hpp"

namespace interdec {

/// Sorted list of element indices.
using ElementSet = std::vector<std::size_t>;

class PosetError : public Error {
 public:
  enum class Kind { kReflexivity, kAntisymmetry, kTransitivity, kUnknownElement, kShape };

  PosetError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Validates a full relation table: leq[i][j] means names[i] <= names[j].
  static FinitePoset from_relation(std::vector<std::string> names,
                                   const std::vector<std::vector<bool>>& leq);

  /// Reflexive-transitive closure of the generating pairs (lo, hi), then an
  /// antisymmetry check.
  static FinitePoset from_generators(std::vector<std::string> names,
                                     const std::vector<std::pair<std::string, std::string>>& pairs);

  static FinitePoset chain(std::size_t n);
  static FinitePoset antichain(std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Throws PosetError(kUnknownElement).
  std::size_t index_of(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * names_.size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// b covers a: a < b with nothing strictly between.
  bool covers(std::size_t a, std::size_t b) const;

  /// {b : b <= a}.
  ElementSet down_set(std::size_t a) const;
  /// {b : a <= b}.
  ElementSet up_set(std::size_t a) const;
  bool is_lower_set(std::span<const std::size_t> subset) const;
  /// Greatest lower bound, none when lower bounds have no unique maximum.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
  bool is_meet_semilattice() const;
  /// Pairs (a, b) with a < b.
  std::vector<std::pair<std::size_t, std::size_t>> strict_pairs() const;
  std::optional<std::size_t> bottom() const;

  /// Induced subposet on `subset` (kept in the given order).
  FinitePoset restrict(std::span<const std::size_t> subset) const;

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  void check_element(std::size_t a) const;

  std::vector<std::string> names_;
  std::vector<char> leq_;  // row-major size() x size()
};

/// A poset with a fresh element above everything else.
struct AugmentedPoset {
  FinitePoset poset;
  std::size_t top = 0;
};

inline constexpr const char* kTopName = "⊤";

AugmentedPoset augment(const FinitePoset& base, const std::string& top_name = kTopName);

/// Moebius function of a finite poset: value(a, b) for b <= a, zero otherwise.
class MobiusTable {
 public:
  explicit MobiusTable(const FinitePoset& poset);

  std::int64_t value(std::size_t a, std::size_t b) const { return mu_[a * n_ + b]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> mu_;
};

MobiusTable mobius(const FinitePoset& poset);

/// Family of coefficient vectors, one per element, all of the same length.
using VectorFamily = std::vector<RatVector>;
/// Family of matrices, one per element, all of the same shape.
using MatrixFamily = std::vector<RatMatrix>;

/// zeta(m)(a) = sum_{b <= a} m_b.
VectorFamily zeta_apply(const FinitePoset& poset, const VectorFamily& m);
/// mu(m)(a) = sum_{b <= a} mu(a, b) m_b.
VectorFamily mobius_apply(const FinitePoset& poset, const VectorFamily& m);
MatrixFamily zeta_apply(const FinitePoset& poset, const MatrixFamily& m);
MatrixFamily mobius_apply(const FinitePoset& poset, const MobiusTable& mu, const MatrixFamily& m);

/// u belongs to W_A(B) iff u_a = u_c whenever down(a) & B == down(c) & B.
/// Throws PosetError when B is not a lower-set.
bool w_space_membership(const FinitePoset& poset, std::span<const std::size_t> lower_set,
                        const VectorFamily& u);

/// W_A(B) for scalar coefficients, as a subspace of Q^|A|.
Subspace w_space(const FinitePoset& poset, std::span<const std::size_t> lower_set);

}  // namespace interdec
