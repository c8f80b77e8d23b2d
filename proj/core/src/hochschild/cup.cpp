#include "sl2coh/hochschild/cup.hpp"

#include <map>
#include <numeric>

#include "sl2coh/errors.hpp"

namespace sl2coh {

Pairing::Pairing(ComodulePtr left, ComodulePtr right, ComodulePtr out, std::vector<Entry> entries)
    : left_(std::move(left)), right_(std::move(right)), out_(std::move(out)), entries_(std::move(entries)) {
  if (!same_group(left_->group(), right_->group()) || !same_group(left_->group(), out_->group()))
    throw ShapeMismatch("pairing between comodules over different groups");
  for (const auto& e : entries_)
    if (e.left >= left_->rank() || e.right >= right_->rank() || e.out >= out_->rank())
      throw ShapeMismatch("pairing entry out of range");
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.left, a.right, a.out) < std::tie(b.left, b.right, b.out);
  });
}

std::vector<std::pair<std::size_t, mpz_class>> Pairing::value(std::size_t a, std::size_t b) const {
  std::vector<std::pair<std::size_t, mpz_class>> out;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(a, b),
                             [](const Entry& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::tie(e.left, e.right) < std::tie(key.first, key.second);
                             });
  for (; it != entries_.end() && it->left == a && it->right == b; ++it)
    out.emplace_back(it->out, it->coefficient);
  return out;
}

Pairing trivial_pairing(const GroupPtr& group) {
  ComodulePtr k = trivial_comodule(group);
  return Pairing(k, k, k, {{0, 0, 0, 1}});
}

Pairing unit_pairing(const ComodulePtr& m) {
  std::vector<Pairing::Entry> entries;
  for (std::size_t b = 0; b < m->rank(); ++b) entries.push_back({0, b, b, 1});
  return Pairing(trivial_comodule(m->group()), m, m, std::move(entries));
}

Pairing tensor_pairing(const ComodulePtr& u, const ComodulePtr& v) {
  std::vector<Pairing::Entry> entries;
  for (std::size_t a = 0; a < u->rank(); ++a)
    for (std::size_t b = 0; b < v->rank(); ++b) entries.push_back({a, b, a * v->rank() + b, 1});
  return Pairing(u, v, tensor(u, v), std::move(entries));
}

Pairing evaluation_pairing(const ComodulePtr& v, int m) {
  ComodulePtr gm = div_power(v, m);
  ComodulePtr sm = sym_power(dual(v), m);
  std::vector<Pairing::Entry> entries;
  for (std::size_t l = 0; l < gm->rank(); ++l) entries.push_back({l, l, 0, 1});
  return Pairing(gm, sm, trivial_comodule(v->group()), std::move(entries));
}

Pairing extend_right(const Pairing& phi, const ComodulePtr& w) {
  const std::size_t nw = w->rank();
  std::vector<Pairing::Entry> entries;
  for (const auto& e : phi.entries())
    for (std::size_t x = 0; x < nw; ++x) entries.push_back({e.left, e.right * nw + x, e.out * nw + x, e.coefficient});
  return Pairing(phi.left(), tensor(phi.right(), w), tensor(phi.out(), w), std::move(entries));
}

Pairing pull_back(const Pairing& phi, const ComoduleMap& f, const ComoduleMap& g) {
  if (!same_comodule(f.target(), phi.left()) || !same_comodule(g.target(), phi.right()))
    throw ShapeMismatch("pull_back: maps do not land in the paired modules");
  // rows of f and g: source indices hitting each target basis vector
  auto rows = [](const ComoduleMap& h) {
    std::vector<std::vector<std::pair<std::size_t, mpz_class>>> out(h.target()->rank());
    for (std::size_t j = 0; j < h.columns().size(); ++j)
      for (const auto& [i, c] : h.column(j)) out[i].emplace_back(j, c);
    return out;
  };
  const auto fr = rows(f), gr = rows(g);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, mpz_class> acc;
  for (const auto& e : phi.entries())
    for (const auto& [a, ca] : fr[e.left])
      for (const auto& [b, cb] : gr[e.right]) acc[{a, b, e.out}] += ca * cb * e.coefficient;
  const Ring& ring = phi.out()->ring();
  std::vector<Pairing::Entry> entries;
  for (auto& [key, c] : acc) {
    ring.reduce(c);
    if (c != 0) entries.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
  return Pairing(f.source(), g.source(), phi.out(), std::move(entries));
}

Pairing base_change(const Pairing& phi, const Ring& ring) {
  std::vector<Pairing::Entry> entries;
  for (auto e : phi.entries()) {
    ring.reduce(e.coefficient);
    if (e.coefficient != 0) entries.push_back(std::move(e));
  }
  return Pairing(base_change(phi.left(), ring), base_change(phi.right(), ring),
                 base_change(phi.out(), ring), std::move(entries));
}

void check_equivariant(const Pairing& phi) {
  const Comodule &u = *phi.left(), &v = *phi.right(), &z = *phi.out();
  const GroupScheme& g = *u.group();
  for (std::size_t a = 0; a < u.rank(); ++a)
    for (std::size_t b = 0; b < v.rank(); ++b) {
      std::map<std::size_t, Polynomial> diff;
      auto add = [&](std::size_t k, const Polynomial& p) {
        auto [it, inserted] = diff.try_emplace(k, p);
        if (!inserted) it->second += p;
      };
      for (const auto& [a2, ru] : u.column(a))
        for (const auto& [b2, rv] : v.column(b))
          for (const auto& [k, c] : phi.value(a2, b2)) add(k, (ru * rv).scaled(c));
      for (const auto& [k2, c] : phi.value(a, b))
        for (const auto& [k, rz] : z.column(k2)) add(k, rz.scaled(-c));
      for (const auto& [k, p] : diff) {
        Polynomial nf = g.normal_form(p, 1);
        if (!nf.is_zero())
          throw VerificationFailed("pairing is not equivariant at " + u.labels()[a] + " (x) " + v.labels()[b] +
                                       " -> " + z.labels()[k],
                                   nf.to_string());
      }
    }
}

Cochain cup(const Cochain& f, const Cochain& g, const Pairing& phi) {
  if (!same_comodule(f.coefficients(), phi.left()) || !same_comodule(g.coefficients(), phi.right()))
    throw ShapeMismatch("cup: cochain coefficients do not match the pairing");
  if (!same_vars(f.params(), g.params())) throw ShapeMismatch("cup: cochains carry different parameters");
  const GroupScheme& grp = *f.group();
  const int i = f.degree(), j = g.degree();
  const VarsPtr target = cochain_vars(grp, i + j, f.params());
  const Ring& ring = f.ring();
  const Comodule& v = *g.coefficients();

  std::vector<int> first(i), second(j);
  std::iota(first.begin(), first.end(), 1);
  std::iota(second.begin(), second.end(), i + 1);

  std::vector<Polynomial> translated(v.rank(), Polynomial(target, ring));
  std::vector<Polynomial> law;
  if (i > 0)
    for (const auto& c : grp.group_law(i)) law.push_back(place_copies(grp, c, i, first, target, i + j));
  for (std::size_t b2 = 0; b2 < v.rank(); ++b2) {
    if (g.component(b2).is_zero()) continue;
    Polynomial gb = place_copies(grp, g.component(b2), j, second, target, i + j);
    if (i == 0) {
      translated[b2] += gb;
      continue;
    }
    for (const auto& [b, rho] : v.column(b2)) translated[b] += substitute(rho, law, target) * gb;
  }

  std::vector<Polynomial> placed_f;
  for (const auto& c : f.components()) placed_f.push_back(place_copies(grp, c, i, first, target, i + j));

  std::vector<Polynomial> out(phi.out()->rank(), Polynomial(target, ring));
  for (const auto& e : phi.entries()) {
    if (placed_f[e.left].is_zero() || translated[e.right].is_zero()) continue;
    out[e.out] += (placed_f[e.left] * translated[e.right]).scaled(e.coefficient);
  }
  return Cochain(phi.out(), i + j, std::move(out), f.params());
}

}  // namespace sl2coh
