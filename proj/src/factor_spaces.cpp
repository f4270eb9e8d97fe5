#include "interdec/factor_spaces.hpp"

#include <algorithm>
#include <utility>

namespace interdec {

ConfigurationSpace::ConfigurationSpace(std::vector<std::string> names, std::vector<std::size_t> sizes)
    : names_(std::move(names)), sizes_(std::move(sizes)) {
  if (names_.size() != sizes_.size()) throw MeasureError("factor names and sizes differ in length");
  if (names_.size() > 16) throw MeasureError("at most 16 factors are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (sizes_[i] == 0) throw MeasureError("factor '" + names_[i] + "' has size 0");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw MeasureError("duplicate factor '" + names_[i] + "'");
    total_ *= sizes_[i];
  }
}

std::size_t ConfigurationSpace::factor_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw MeasureError("unknown factor '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

FactorMask ConfigurationSpace::mask_of(const std::vector<std::string>& factor_names) const {
  FactorMask mask = 0;
  for (const auto& n : factor_names) mask |= FactorMask{1} << factor_index(n);
  return mask;
}

std::size_t ConfigurationSpace::index_of(const std::vector<std::size_t>& config) const {
  if (config.size() != sizes_.size()) throw MeasureError("configuration has wrong arity");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (config[i] >= sizes_[i]) throw MeasureError("configuration value out of range");
    idx = idx * sizes_[i] + config[i];
  }
  return idx;
}

std::vector<std::size_t> ConfigurationSpace::config_of(std::size_t index) const {
  std::vector<std::size_t> config(sizes_.size());
  for (std::size_t i = sizes_.size(); i-- > 0;) {
    config[i] = index % sizes_[i];
    index /= sizes_[i];
  }
  return config;
}

std::size_t ConfigurationSpace::restricted_size(FactorMask a) const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < sizes_.size(); ++i)
    if (a & (FactorMask{1} << i)) n *= sizes_[i];
  return n;
}

std::size_t ConfigurationSpace::restricted_index(std::size_t index, FactorMask a) const {
  const auto config = config_of(index);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i)
    if (a & (FactorMask{1} << i)) idx = idx * sizes_[i] + config[i];
  return idx;
}

Measure::Measure(ConfigurationSpace space, std::vector<Rat> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size()) {
    throw MeasureError("expected " + std::to_string(space_.size()) + " weights, got " +
                       std::to_string(weights_.size()));
  }
  Rat total = 0;
  for (const auto& w : weights_) {
    if (sgn(w) < 0) throw MeasureError("negative weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw MeasureError("weights sum to " + to_string(total) + ", not 1");
}

bool Measure::full_support() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rat& w) { return sgn(w) > 0; });
}

Measure product_measure(const ConfigurationSpace& space, const std::vector<std::vector<Rat>>& factors) {
  if (factors.size() != space.factor_count()) throw MeasureError("one distribution per factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].size() != space.factor_sizes()[i]) throw MeasureError("factor size mismatch");
  }
  std::vector<Rat> w(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) {
    const auto config = space.config_of(k);
    w[k] = 1;
    for (std::size_t i = 0; i < config.size(); ++i) w[k] *= factors[i][config[i]];
  }
  return Measure(space, std::move(w));
}

std::vector<Rat> marginal(const Measure& m, FactorMask a) {
  const auto& space = m.space();
  if (a >> space.factor_count()) throw MeasureError("unknown factor in subset");
  std::vector<Rat> out(space.restricted_size(a));
  for (std::size_t k = 0; k < space.size(); ++k) out[space.restricted_index(k, a)] += m.weight(k);
  return out;
}

RatMatrix conditional_expectation(const Measure& m, FactorMask a, NullConvention convention) {
  const auto& space = m.space();
  const std::vector<Rat> pa = marginal(m, a);
  const std::size_t n = space.size();
  std::vector<std::size_t> cls(n);
  for (std::size_t k = 0; k < n; ++k) cls[k] = space.restricted_index(k, a);
  RatMatrix e(n, n);
  for (std::size_t row = 0; row < n; ++row) {
    const Rat& mass = pa[cls[row]];
    if (sgn(mass) == 0) continue;
    if (convention == NullConvention::kJointSupport && sgn(m.weight(row)) == 0) continue;
    for (std::size_t col = 0; col < n; ++col)
      if (cls[col] == cls[row]) e(row, col) = m.weight(col) / mass;
  }
  return e;
}

std::string subset_name(const ConfigurationSpace& space, FactorMask a) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    if (!(a & (FactorMask{1} << i))) continue;
    if (!first) out += ",";
    out += space.factor_names()[i];
    first = false;
  }
  return out + "}";
}

FinitePoset subset_lattice(const ConfigurationSpace& space) {
  const std::size_t count = std::size_t{1} << space.factor_count();
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    names.push_back(subset_name(space, static_cast<FactorMask>(a)));
    for (std::size_t b = 0; b < count; ++b) leq[a][b] = (a & b) == a;
  }
  return FinitePoset::from_relation(std::move(names), leq);
}

ProjectorFamily build_family(const Measure& m, NullConvention convention) {
  FinitePoset lattice = subset_lattice(m.space());
  std::vector<RatMatrix> pi;
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    pi.push_back(conditional_expectation(m, static_cast<FactorMask>(a), convention));
  }
  return ProjectorFamily(std::move(lattice), m.space().size(), std::move(pi));
}

ProductTest is_product(const Measure& m) {
  const auto& space = m.space();
  ProductTest res;
  for (std::size_t i = 0; i < space.factor_count(); ++i) {
    res.factors.push_back(marginal(m, FactorMask{1} << i));
  }
  res.is_product = true;
  for (std::size_t k = 0; k < space.size() && res.is_product; ++k) {
    const auto config = space.config_of(k);
    Rat prod = 1;
    for (std::size_t i = 0; i < config.size(); ++i) prod *= res.factors[i][config[i]];
    res.is_product = prod == m.weight(k);
  }
  return res;
}

DecomposeResult interaction_decomposition(const Measure& m) { return decompose(build_family(m)); }

}  // namespace interdec
