#pragma once

// Finite configuration spaces E = prod_i E_i, rational probability measures on
// them, conditional expectations onto factor spaces and the interaction
// decomposition of the resulting projector family over the subsets of I.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "interdec/linalg.hpp"
#include "interdec/projectors.hpp"

namespace interdec {

class MeasureError : public Error {
 public:
  using Error::Error;
};

/// Subset of the factor index set, one bit per factor (declaration order).
using FactorMask = std::uint32_t;

/// E = prod_i E_i with E_i = {0, .., size_i - 1}. Configurations are numbered
/// mixed-radix with the first factor varying slowest.
class ConfigurationSpace {
 public:
  ConfigurationSpace(std::vector<std::string> names, std::vector<std::size_t> sizes);

  std::size_t factor_count() const { return names_.size(); }
  const std::vector<std::string>& factor_names() const { return names_; }
  const std::vector<std::size_t>& factor_sizes() const { return sizes_; }
  std::size_t size() const { return total_; }

  std::size_t factor_index(const std::string& name) const;
  FactorMask mask_of(const std::vector<std::string>& factor_names) const;

  std::size_t index_of(const std::vector<std::size_t>& config) const;
  std::vector<std::size_t> config_of(std::size_t index) const;

  /// Number of values of the restriction omega_a, and the index of omega_a
  /// among them (mixed radix over the factors of a, in declaration order).
  std::size_t restricted_size(FactorMask a) const;
  std::size_t restricted_index(std::size_t index, FactorMask a) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 1;
};

class Measure {
 public:
  /// Weights indexed by configuration; must be nonnegative and sum to 1.
  Measure(ConfigurationSpace space, std::vector<Rat> weights);

  const ConfigurationSpace& space() const { return space_; }
  const std::vector<Rat>& weights() const { return weights_; }
  const Rat& weight(std::size_t index) const { return weights_.at(index); }
  bool full_support() const;

 private:
  ConfigurationSpace space_;
  std::vector<Rat> weights_;
};

/// Product of the given single-factor distributions.
Measure product_measure(const ConfigurationSpace& space, const std::vector<std::vector<Rat>>& factors);

/// P_a(x) = sum over omega with omega_a = x, indexed by restricted_index.
std::vector<Rat> marginal(const Measure& m, FactorMask a);

/// How E[.|F_a] is defined on P-null configurations.
enum class NullConvention {
  /// Row omega is zero when P_a(omega_a) == 0.
  kMarginalSupport,
  /// Row omega is zero when P(omega) == 0.
  kJointSupport,
};

/// Matrix of f -> E[f | F_a] on Q^E; entry (omega, omega') is
/// [omega'_a == omega_a] P(omega') / P_a(omega_a) outside the null rows.
RatMatrix conditional_expectation(const Measure& m, FactorMask a,
                                  NullConvention convention = NullConvention::kMarginalSupport);

/// Boolean lattice of factor subsets, element k being the subset with mask k.
/// Element names are "{}", "{x}", "{x,y}", ...
FinitePoset subset_lattice(const ConfigurationSpace& space);
std::string subset_name(const ConfigurationSpace& space, FactorMask a);

/// (E[.|F_a], a subset of I) over subset_lattice(space).
ProjectorFamily build_family(const Measure& m,
                             NullConvention convention = NullConvention::kJointSupport);

struct ProductTest {
  bool is_product = false;
  /// Single-factor marginals (always filled in).
  std::vector<std::vector<Rat>> factors;
};

ProductTest is_product(const Measure& m);

DecomposeResult interaction_decomposition(const Measure& m);

}  // namespace interdec
