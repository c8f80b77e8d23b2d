#include "sl2coh/groupschemes/group_hom.hpp"

#include "sl2coh/errors.hpp"

namespace sl2coh {

GroupHom::GroupHom(std::string name, GroupPtr source, GroupPtr target,
                   std::vector<Polynomial> pullback)
    : name_(std::move(name)),
      source_(std::move(source)),
      target_(std::move(target)),
      pullback_(std::move(pullback)) {
  if (source_->ring() != target_->ring())
    throw RingMismatch("group homomorphism between groups over different rings");
  if (pullback_.size() != target_->generator_count())
    throw ShapeMismatch("pullback must assign every generator of " + target_->name());
  for (auto& p : pullback_) {
    if (!same_vars(p.vars(), source_->copies(1)))
      throw ShapeMismatch("pullback values must be functions on " + source_->name());
    p = source_->normal_form(p, 1);
  }
  verify();
}

Polynomial GroupHom::pull(const Polynomial& f, int ncopies) const {
  const VarsPtr target = source_->copies(ncopies);
  std::vector<Polynomial> values;
  for (int k = 1; k <= ncopies; ++k)
    for (const auto& p : pullback_)
      values.push_back(place_copies(*source_, p, 1, {k}, target, ncopies));
  return source_->normal_form(substitute(f, values, target), ncopies);
}

void GroupHom::verify() const {
  // Delta_G(phi(h)) == (phi (x) phi)(Delta_H(h)) and eps_G(phi(h)) == eps_H(h)
  for (std::size_t t = 0; t < pullback_.size(); ++t) {
    Polynomial lhs = source_->comultiply(pullback_[t]);
    Polynomial rhs = pull(target_->comultiplication()[t], 2);
    if (lhs != rhs)
      throw VerificationFailed(name_ + ": not compatible with comultiplication on " +
                                   target_->generators()[t].name,
                               (lhs - rhs).to_string());
    Polynomial e = source_->apply_counit(pullback_[t]);
    if (e != Polynomial::constant(e.vars(), e.ring(), target_->counit()[t]))
      throw VerificationFailed(name_ + ": not compatible with the counit", e.to_string());
  }
}

GroupHom GroupHom::base_change(const Ring& ring) const {
  GroupPtr src = source_->base_change(ring), tgt = target_->base_change(ring);
  std::vector<Polynomial> pb;
  for (const auto& p : pullback_) pb.push_back(change_ring(p, ring));
  return GroupHom(name_, src, tgt, std::move(pb));
}

GroupHom GroupHom::then(const GroupHom& next) const {
  if (!same_group(target_, next.source_))
    throw ShapeMismatch("cannot compose " + name_ + " with " + next.name_);
  std::vector<Polynomial> pb;
  for (const auto& p : next.pullback_) pb.push_back(pull(p, 1));
  return GroupHom(next.name_ + "." + name_, source_, next.target_, std::move(pb));
}

namespace {

struct Builder {
  GroupPtr source;
  VarsPtr one;
  Ring ring;
  explicit Builder(GroupKind kind, const Ring& r)
      : source(make_group(kind, r)), one(source->copies(1)), ring(r) {}
  Polynomial v(const char* n) const { return Polynomial::variable(one, ring, n); }
  Polynomial k(long c) const { return Polynomial::constant(one, ring, c); }
  Polynomial pw(const char* n, int e) const {
    Exponents ex(one->size(), 0);
    ex[*Polynomial(one, ring).index_of(n)] = e;
    return Polynomial::monomial(one, ring, ex);
  }
};

}  // namespace

GroupHom root_hom(const Ring& ring) {
  Builder b(GroupKind::Ga, ring);
  return GroupHom("x_alpha", b.source, make_group(GroupKind::SL2, ring),
                  {b.k(1), b.k(0), b.v("X"), b.k(1)});
}

GroupHom torus_hom(const Ring& ring) {
  Builder b(GroupKind::T, ring);
  return GroupHom("T->SL2", b.source, make_group(GroupKind::SL2, ring),
                  {b.v("u"), b.k(0), b.k(0), b.pw("u", -1)});
}

GroupHom borel_hom(const Ring& ring) {
  Builder b(GroupKind::B, ring);
  return GroupHom("B->SL2", b.source, make_group(GroupKind::SL2, ring),
                  {b.v("a"), b.k(0), b.v("c"), b.pw("a", -1)});
}

GroupHom borel_xu_hom(const Ring& ring) {
  Builder b(GroupKind::BorelXU, ring);
  return GroupHom("B[x,u]->SL2", b.source, make_group(GroupKind::SL2, ring),
                  {b.v("u"), b.k(0), b.v("x") * b.v("u"), b.pw("u", -1)});
}

GroupHom root_into_borel(const Ring& ring) {
  Builder b(GroupKind::Ga, ring);
  return GroupHom("U_alpha->B[x,u]", b.source, make_group(GroupKind::BorelXU, ring),
                  {b.v("X"), b.k(1)});
}

GroupHom torus_into_borel(const Ring& ring) {
  Builder b(GroupKind::T, ring);
  return GroupHom("T->B[x,u]", b.source, make_group(GroupKind::BorelXU, ring), {b.k(0), b.v("u")});
}

GroupHom borel_xu_to_ac(const Ring& ring) {
  Builder b(GroupKind::BorelXU, ring);
  return GroupHom("B[x,u]->B", b.source, make_group(GroupKind::B, ring),
                  {b.v("u"), b.v("x") * b.v("u")});
}

GroupHom borel_ac_to_xu(const Ring& ring) {
  Builder b(GroupKind::B, ring);
  return GroupHom("B->B[x,u]", b.source, make_group(GroupKind::BorelXU, ring),
                  {b.v("c") * b.pw("a", -1), b.v("a")});
}

}  // namespace sl2coh
