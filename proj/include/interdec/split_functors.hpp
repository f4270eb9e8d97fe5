#pragma once

// Functor/presheaf couples (G, F) from a finite poset to finite-dimensional
// rational vector spaces with F^a_b G^b_a = id for every b <= a, and their
// decomposition into components (C_a, C^a).
//
// Conventions: for lo <= hi, g(lo, hi) is the matrix of G^lo_hi : G(lo) -> G(hi)
// (shape dim(hi) x dim(lo)) and f(hi, lo) the matrix of F^hi_lo : G(hi) -> G(lo)
// (shape dim(lo) x dim(hi)).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "interdec/linalg.hpp"
#include "interdec/poset.hpp"
#include "interdec/projectors.hpp"

namespace interdec {

class SplitError : public Error {
 public:
  enum class Kind { kShape, kMissingGenerator, kFunctoriality, kSplit, kNotInvertible, kCoherence };

  SplitError(Kind kind, std::string lo, std::string hi, const std::string& what)
      : Error(what), kind_(kind), lo_(std::move(lo)), hi_(std::move(hi)) {}

  Kind kind() const { return kind_; }
  /// The witnessing pair lo <= hi (empty when not applicable).
  const std::string& lo() const { return lo_; }
  const std::string& hi() const { return hi_; }

 private:
  Kind kind_;
  std::string lo_;
  std::string hi_;
};

/// Keyed by (lo, hi) with lo < hi.
using ArrowMap = std::map<std::pair<std::size_t, std::size_t>, RatMatrix>;

class SplitFunctor {
 public:
  /// Builds and validates a couple from generators. `g` holds G^lo_hi and `f`
  /// holds F^hi_lo, both keyed by (lo, hi). Every covering pair needs both
  /// generators; other pairs are composed along covering chains unless given,
  /// in which case they must agree with the composite.
  static SplitFunctor from_generators(FinitePoset poset, std::vector<std::size_t> dims,
                                      const ArrowMap& g, const ArrowMap& f);

  const FinitePoset& poset() const { return poset_; }
  std::size_t dim(std::size_t a) const { return dims_.at(a); }
  const std::vector<std::size_t>& dims() const { return dims_; }

  /// G^lo_hi (identity when lo == hi). Throws SplitError unless lo <= hi.
  const RatMatrix& g(std::size_t lo, std::size_t hi) const;
  /// F^hi_lo (identity when lo == hi). Throws SplitError unless lo <= hi.
  const RatMatrix& f(std::size_t hi, std::size_t lo) const;

 private:
  void validate() const;
  std::size_t slot(std::size_t lo, std::size_t hi) const;

  FinitePoset poset_;
  std::vector<std::size_t> dims_;
  std::vector<RatMatrix> g_;  // slot(lo, hi)
  std::vector<RatMatrix> f_;  // slot(lo, hi)
};

/// Named alias for construction + validation.
SplitFunctor validate_split(FinitePoset poset, std::vector<std::size_t> dims, const ArrowMap& g,
                            const ArrowMap& f);

/// (G^a_alpha F^alpha_a)_{a <= alpha} on G(alpha), over the subposet down(alpha)
/// (element k of the family is down_set(alpha)[k]).
ProjectorFamily projector_family_at(const SplitFunctor& sf, std::size_t alpha);

struct SplitWitness {
  std::size_t alpha = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

struct SplitIntersectionReport {
  bool holds = true;
  /// One witness for each minimal alpha where the property fails.
  std::vector<SplitWitness> witnesses;
  /// Per element: whether the property holds at it.
  std::vector<bool> holds_at;
};

/// Intersection property at every alpha. Failure at alpha forces failure at
/// every beta >= alpha, which is recorded without recomputation.
SplitIntersectionReport check_intersection(const SplitFunctor& sf);
bool intersection_holds_at(const SplitFunctor& sf, std::size_t alpha);

/// Left and right couplings over A1 = {(alpha, a) : a <= alpha}.
struct CouplingData {
  FinitePoset a1;
  /// a1 element -> (alpha, a).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// R(alpha, a) = im G^a_alpha inside G(alpha).
  std::vector<Subspace> r_spaces;
  /// For lo <= hi in A1: L : R(lo) -> R(hi) and R : R(hi) -> R(lo), in the
  /// echelon coordinates of the R-spaces. Keyed by (lo, hi).
  ArrowMap l_maps;
  ArrowMap r_maps;

  std::size_t index(std::size_t alpha, std::size_t a) const;
};

/// Throws SplitError(kCoherence) when a transported map leaves its target
/// space, which can only happen for an unvalidated couple.
CouplingData build_couplings(const SplitFunctor& sf);

struct CouplingReport {
  bool squares = true;              // two-generator commuting squares
  bool functorial_extension = true; // composites over A1 are functorial
  bool split = true;                // R L = id on every A1 arrow
  bool inverses = true;             // L^{beta a}_{alpha a} invertible, inverse R^{alpha a}_{beta a}
  bool boundary = true;             // L^{aa}_{alpha alpha} = G^a_alpha, R^{alpha alpha}_{aa} = F^alpha_a
  bool zeta_naturality = true;      // zeta and mu commute with V_r transport
  bool limit_isomorphism = true;    // phi : R -> M is an isomorphism
  bool j_monomorphism = true;       // j = mu phi injective
  bool j_naturality = true;         // natural on same-bottom arrows; same-top where intersection holds

  bool all() const {
    return squares && functorial_extension && split && inverses && boundary && zeta_naturality &&
           limit_isomorphism && j_monomorphism && j_naturality;
  }
};

CouplingReport verify_couplings(const SplitFunctor& sf, const CouplingData& cd);

struct SplitComponent {
  std::size_t dim = 0;
  /// Columns: basis of C_a(a) = im s^a_a inside G(a).
  RatMatrix base_basis;
  /// (C_a)^lo_hi and (C^a)^hi_lo for a <= lo <= hi, keyed (lo, hi), in the
  /// transported bases G^a_x base_basis.
  ArrowMap arrows;
  ArrowMap co_arrows;
};

struct SplitDecomposition {
  std::vector<SplitComponent> components;
  /// psi[alpha] : G(alpha) -> (+)_{b <= alpha} C_b(alpha), blocks in
  /// down_set(alpha) order.
  std::vector<RatMatrix> psi;
  bool certified = false;
};

struct SplitFailure {
  std::vector<SplitWitness> witnesses;
};

using SplitDecomposeResult = std::variant<SplitDecomposition, SplitFailure>;

SplitDecomposeResult decompose_split(const SplitFunctor& sf);

/// Component arrows keyed (component, lo, hi) for covering pairs lo < hi with
/// component <= lo; missing entries default to the identity.
using ComponentArrows = std::map<std::tuple<std::size_t, std::size_t, std::size_t>, RatMatrix>;

/// (prod_a C_a 1[a <= .], prod_a C^a 1[a <= .]): G(x) = (+)_{c <= x} Q^{dims[c]}
/// (blocks in down_set(x) order), block inclusions along C_c and block
/// projections along the inverse arrows.
SplitFunctor sum_of_components(const FinitePoset& poset, const std::vector<std::size_t>& component_dims,
                               const ComponentArrows& arrows = {});

}  // namespace interdec
