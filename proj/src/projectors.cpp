#include "interdec/projectors.hpp"

#include <utility>

namespace interdec {

ProjectorFamily::ProjectorFamily(FinitePoset poset, std::size_t dim, std::vector<RatMatrix> projectors)
    : poset_(std::move(poset)), dim_(dim), pi_(std::move(projectors)) {
  if (pi_.size() != poset_.size()) {
    throw FamilyError(FamilyError::Kind::kShape,
                      "expected " + std::to_string(poset_.size()) + " projectors, got " +
                          std::to_string(pi_.size()));
  }
  for (std::size_t a = 0; a < pi_.size(); ++a) {
    if (pi_[a].rows() != dim_ || pi_[a].cols() != dim_) {
      throw FamilyError(FamilyError::Kind::kShape,
                        "projector '" + poset_.name(a) + "' is not " + std::to_string(dim_) + "x" +
                            std::to_string(dim_));
    }
    if (!is_projector(pi_[a])) {
      throw FamilyError(FamilyError::Kind::kNotIdempotent,
                        "matrix for '" + poset_.name(a) + "' is not idempotent");
    }
  }
}

std::optional<ElementPair> functoriality_witness(const ProjectorFamily& f) {
  const auto& p = f.poset();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(b, a) && f.at(a) * f.at(b) != f.at(b)) return ElementPair{a, b};
  return std::nullopt;
}

bool check_functorial(const ProjectorFamily& f) { return !functoriality_witness(f); }

std::optional<ElementPair> presheafability_witness(const ProjectorFamily& f) {
  const auto& p = f.poset();
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(b, a) && f.at(b) * f.at(a) != f.at(b)) return ElementPair{a, b};
  return std::nullopt;
}

bool check_presheafable(const ProjectorFamily& f) { return !presheafability_witness(f); }

SFamily compute_s(const ProjectorFamily& f) {
  SFamily out;
  out.s = mobius_apply(f.poset(), MobiusTable(f.poset()), f.projectors());
  out.s_top = RatMatrix::identity(f.dim());
  for (const auto& s : out.s) out.s_top -= s;
  return out;
}

bool check_intersection_semilattice(const ProjectorFamily& f) {
  const auto& p = f.poset();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      const auto m = p.meet(a, b);
      if (!m) {
        throw FamilyError(FamilyError::Kind::kNotSemilattice,
                          "no meet for (" + p.name(a) + ", " + p.name(b) + ")");
      }
      if (f.at(a) * f.at(b) != f.at(*m)) return false;
    }
  }
  return true;
}

std::optional<ElementPair> intersection_witness(const ProjectorFamily& f, const SFamily& s) {
  const auto& p = f.poset();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      RatMatrix rhs(f.dim(), f.dim());
      for (std::size_t c = 0; c < p.size(); ++c)
        if (p.leq(c, a) && p.leq(c, b)) rhs += s.s[c];
      if (f.at(a) * f.at(b) != rhs) return ElementPair{a, b};
    }
  }
  return std::nullopt;
}

bool check_intersection_general(const ProjectorFamily& f) {
  return !intersection_witness(f, compute_s(f));
}

bool check_intersection_image_form(const ProjectorFamily& f) {
  const auto& p = f.poset();
  const SFamily s = compute_s(f);
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t c = 0; c < p.size(); ++c)
      if (!p.leq(c, b) && !(s.s[c] * f.at(b)).is_zero()) return false;
  return true;
}

bool verify_certificate(const SFamily& s, const std::vector<Subspace>& subspaces) {
  std::vector<const RatMatrix*> all;
  for (const auto& m : s.s) all.push_back(&m);
  all.push_back(&s.s_top);
  if (subspaces.size() != all.size()) return false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      const RatMatrix prod = *all[i] * *all[j];
      if (i == j ? prod != *all[i] : !prod.is_zero()) return false;
    }
    if (!(image(*all[i]) == subspaces[i])) return false;
  }
  return direct_sum_is_ambient(subspaces);
}

DecomposeResult decompose(const ProjectorFamily& f) {
  SFamily s = compute_s(f);
  if (auto w = intersection_witness(f, s)) return DecompositionFailure{*w};
  Decomposition d;
  for (const auto& m : s.s) d.subspaces.push_back(image(m));
  d.subspaces.push_back(image(s.s_top));
  d.s = std::move(s);
  d.certified = verify_certificate(d.s, d.subspaces);
  return d;
}

}  // namespace interdec
