#include "manin/invariants.hpp"

#include "manin/errors.hpp"

namespace manin {

PolarizedSpace::PolarizedSpace(std::string name, std::vector<std::string> basis_labels, PolyCone pseff,
                               RatVec canonical, RatVec polarization, std::optional<PolyCone> nef,
                               std::optional<bool> adjoint_rigid)
    : name_(std::move(name)),
      basis_labels_(std::move(basis_labels)),
      pseff_(std::move(pseff)),
      canonical_(std::move(canonical)),
      polarization_(std::move(polarization)),
      nef_(std::move(nef)),
      adjoint_rigid_(adjoint_rigid) {
  const std::size_t rho = pseff_.ambient_dim();
  if (!basis_labels_.empty() && basis_labels_.size() != rho)
    throw InputError(name_ + ": " + std::to_string(basis_labels_.size()) + " basis labels for rank " +
                     std::to_string(rho));
  if (canonical_.dim() != rho) throw InputError(name_ + ": canonical class has the wrong dimension");
  if (polarization_.dim() != rho) throw InputError(name_ + ": polarization has the wrong dimension");
  if (nef_) {
    if (nef_->ambient_dim() != rho) throw InputError(name_ + ": nef cone has the wrong dimension");
    for (const auto& g : nef_->generators())
      if (!pseff_.contains(g))
        throw InputError(name_ + ": nef generator " + g.to_string() + " is not pseudo-effective");
  }
}

void PolarizedSpace::validate() const {
  if (!polarization_is_big()) throw PreconditionError(name_ + ": polarization not big");
}

PolarizedSpace PolarizedSpace::with_polarization(RatVec polarization) const {
  return PolarizedSpace(name_, basis_labels_, pseff_, canonical_, std::move(polarization), nef_, adjoint_rigid_);
}

Rational a_invariant(const PolarizedSpace& space) {
  space.validate();
  const PolyCone& cone = space.pseff();
  std::optional<Rational> best;
  for (const auto& f : cone.facets()) {
    const Rational ratio = -cone.evaluate(space.canonical(), f) / cone.evaluate(space.polarization(), f);
    if (!best || ratio > *best) best = ratio;
  }
  return *best;
}

RatVec adjoint_class(const PolarizedSpace& space) {
  return a_invariant(space) * space.polarization() + space.canonical();
}

std::size_t b_invariant(const PolarizedSpace& space) { return compute_ab(space).b; }

ABResult compute_ab(const PolarizedSpace& space) {
  ABResult out;
  out.a = a_invariant(space);
  out.adjoint_class = out.a * space.polarization() + space.canonical();
  SupportedFace face = minimal_supported_face(space.pseff(), out.adjoint_class);
  out.b = face.codim;
  out.tight_facets = std::move(face.tight_facets);
  return out;
}

std::strong_ordering compare_lex(const ABResult& left, const ABResult& right) {
  const int c = cmp(left.a, right.a);
  if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return left.b <=> right.b;
}

std::string to_string(BalanceVerdict v) {
  switch (v) {
    case BalanceVerdict::balanced: return "balanced";
    case BalanceVerdict::weakly_balanced_only: return "weakly_balanced_only";
    case BalanceVerdict::not_weakly_balanced: return "not_weakly_balanced";
    case BalanceVerdict::pullback_not_big: return "pullback_not_big";
  }
  return "unknown";
}

BalanceVerdict balanced_verdict(const ABResult& base, const ABResult& other, bool pullback_big) {
  if (!pullback_big) return BalanceVerdict::pullback_not_big;
  const auto order = compare_lex(other, base);
  if (order < 0) return BalanceVerdict::balanced;
  if (order == 0) return BalanceVerdict::weakly_balanced_only;
  return BalanceVerdict::not_weakly_balanced;
}

}  // namespace manin
