#pragma once

// Poset-indexed families of projectors on one ambient space Q^n and their
// interaction decomposition.
//
// Given projectors pi_a, the Moebius transform s_a = sum_{b<=a} mu(a,b) pi_b
// always reconstructs pi_a = sum_{b<=a} s_b. The family is decomposable when
// the s_a (together with the residual s_top = id - sum_a s_a) are mutually
// annihilating projectors, which happens exactly when
//
//     pi_a pi_b == sum_{c <= a, c <= b} s_c     for all a, b.
//
// On a meet semi-lattice this reads pi_a pi_b == pi_{a meet b}.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "interdec/linalg.hpp"
#include "interdec/poset.hpp"

namespace interdec {

class FamilyError : public Error {
 public:
  enum class Kind { kShape, kNotIdempotent, kNotSemilattice };

  FamilyError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ProjectorFamily {
 public:
  /// Throws FamilyError when a matrix has the wrong shape or is not idempotent.
  ProjectorFamily(FinitePoset poset, std::size_t dim, std::vector<RatMatrix> projectors);

  const FinitePoset& poset() const { return poset_; }
  std::size_t dim() const { return dim_; }
  const RatMatrix& at(std::size_t a) const { return pi_.at(a); }
  const std::vector<RatMatrix>& projectors() const { return pi_; }

 private:
  FinitePoset poset_;
  std::size_t dim_;
  std::vector<RatMatrix> pi_;
};

struct ElementPair {
  std::size_t a = 0;
  std::size_t b = 0;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
};

struct SFamily {
  std::vector<RatMatrix> s;  // indexed like the poset
  RatMatrix s_top;           // id - sum_a s_a
};

/// pi_a pi_b == pi_b for every b <= a, i.e. a <= b implies im pi_a <= im pi_b.
bool check_functorial(const ProjectorFamily& f);
std::optional<ElementPair> functoriality_witness(const ProjectorFamily& f);

/// pi_b pi_a == pi_b for every b <= a, i.e. ker pi_a <= ker pi_b.
bool check_presheafable(const ProjectorFamily& f);
std::optional<ElementPair> presheafability_witness(const ProjectorFamily& f);

SFamily compute_s(const ProjectorFamily& f);

/// pi_a pi_b == pi_{a meet b}. Throws FamilyError(kNotSemilattice) when some
/// pair has no meet.
bool check_intersection_semilattice(const ProjectorFamily& f);

/// Lexicographically first (a, b) with pi_a pi_b != sum_{c<=a, c<=b} s_c.
std::optional<ElementPair> intersection_witness(const ProjectorFamily& f, const SFamily& s);
bool check_intersection_general(const ProjectorFamily& f);

/// Image form of the same condition: the Moebius transform of
/// (pi_c pi_b)_c is supported on down(b), i.e. s_c pi_b == 0 for c not <= b.
bool check_intersection_image_form(const ProjectorFamily& f);

struct Decomposition {
  SFamily s;
  /// im s_a for every element, followed by im s_top as the last entry.
  std::vector<Subspace> subspaces;
  bool certified = false;
};

struct DecompositionFailure {
  ElementPair witness;
};

using DecomposeResult = std::variant<Decomposition, DecompositionFailure>;

/// Certified decomposition when the intersection property holds, otherwise the
/// first pair where it fails.
DecomposeResult decompose(const ProjectorFamily& f);

/// s_a s_b == [a == b] s_a over all of A plus top, and the images form a
/// direct sum equal to the ambient space.
bool verify_certificate(const SFamily& s, const std::vector<Subspace>& subspaces);

}  // namespace interdec
