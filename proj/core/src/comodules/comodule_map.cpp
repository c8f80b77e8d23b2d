#include "sl2coh/comodules/comodule_map.hpp"

#include <algorithm>
#include <map>

#include "sl2coh/errors.hpp"

namespace sl2coh {

namespace {

void normalize(MapColumn& col, const Ring& ring) {
  std::map<std::size_t, mpz_class> acc;
  for (auto& [i, c] : col) acc[i] += c;
  col.clear();
  for (auto& [i, c] : acc) {
    ring.reduce(c);
    if (c != 0) col.emplace_back(i, std::move(c));
  }
}

}  // namespace

ComoduleMap::ComoduleMap(ComodulePtr source, ComodulePtr target, std::vector<MapColumn> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (!same_group(source_->group(), target_->group()))
    throw ShapeMismatch("comodule map between different groups");
  if (columns_.size() != source_->rank()) throw ShapeMismatch("one map column per source basis vector");
  for (auto& col : columns_) {
    for (const auto& [i, c] : col)
      if (i >= target_->rank()) throw ShapeMismatch("map row out of range");
    normalize(col, ring());
  }
}

mpz_class ComoduleMap::entry(std::size_t i, std::size_t j) const {
  for (const auto& [row, c] : column(j))
    if (row == i) return c;
  return 0;
}

std::vector<Polynomial> ComoduleMap::apply(const std::vector<Polynomial>& v) const {
  if (v.size() != source_->rank()) throw ShapeMismatch("map applied to a vector of the wrong length");
  if (v.empty()) throw ShapeMismatch("map applied to an empty vector");
  std::vector<Polynomial> out(target_->rank(), Polynomial(v[0].vars(), v[0].ring()));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, c] : columns_[j]) out[i] += v[j].scaled(c);
  }
  return out;
}

std::vector<mpz_class> ComoduleMap::apply(const std::vector<mpz_class>& v) const {
  if (v.size() != source_->rank()) throw ShapeMismatch("map applied to a vector of the wrong length");
  std::vector<mpz_class> out(target_->rank());
  for (std::size_t j = 0; j < v.size(); ++j)
    for (const auto& [i, c] : columns_[j]) out[i] += c * v[j];
  for (auto& x : out) ring().reduce(x);
  return out;
}

IntegerMatrix ComoduleMap::to_matrix(std::size_t max_dim) const {
  if (target_->rank() > max_dim || source_->rank() > max_dim)
    throw InvalidArgument("matrix dimension exceeds the cap of " + std::to_string(max_dim));
  IntegerMatrix m(target_->rank(), source_->rank());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, c] : columns_[j]) m(i, j) = c;
  return m;
}

ComoduleMap identity_map(const ComodulePtr& m) {
  std::vector<MapColumn> cols(m->rank());
  for (std::size_t j = 0; j < m->rank(); ++j) cols[j] = {{j, 1}};
  return ComoduleMap(m, m, std::move(cols));
}

ComoduleMap zero_map(const ComodulePtr& source, const ComodulePtr& target) {
  return ComoduleMap(source, target, std::vector<MapColumn>(source->rank()));
}

ComoduleMap compose(const ComoduleMap& g, const ComoduleMap& f) {
  if (!same_comodule(f.target(), g.source())) throw ShapeMismatch("compose: target/source mismatch");
  std::vector<MapColumn> cols(f.source()->rank());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : f.column(j))
      for (const auto& [i, d] : g.column(k)) cols[j].emplace_back(i, c * d);
  return ComoduleMap(f.source(), g.target(), std::move(cols));
}

ComoduleMap base_change(const ComoduleMap& f, const Ring& ring) {
  return ComoduleMap(base_change(f.source(), ring), base_change(f.target(), ring), f.columns());
}

ComoduleMap div_power_map(const ComoduleMap& f, int m) {
  ComodulePtr src = div_power(f.source(), m);
  ComodulePtr tgt = div_power(f.target(), m);
  const Ring& ring = f.ring();
  const VarsPtr none = make_vars(VariableList{});
  const Polynomial one = Polynomial::constant(none, ring, 1);
  const std::size_t nt = f.target()->rank();
  std::vector<MapColumn> cols(src->rank());
  for (std::size_t l = 0; l < src->rank(); ++l) {
    const Exponents& lambda = src->multisets()[l];
    GradedElement acc{{Exponents(nt, 0), one}};
    for (std::size_t j = 0; j < lambda.size() && !acc.empty(); ++j) {
      if (lambda[j] == 0) continue;
      LinearCombination image;
      for (const auto& [i, c] : f.column(j)) image.emplace_back(i, Polynomial::constant(none, ring, c));
      acc = divided_product(acc, divided_power_of(image, nt, lambda[j], one));
    }
    for (const auto& [key, c] : acc) cols[l].emplace_back(*tgt->index_of_multiset(key), c.constant_term());
  }
  return ComoduleMap(src, tgt, std::move(cols));
}

ComoduleMap sym_power_map(const ComoduleMap& f, int m) {
  ComodulePtr src = sym_power(f.source(), m);
  ComodulePtr tgt = sym_power(f.target(), m);
  const Ring& ring = f.ring();
  const VarsPtr none = make_vars(VariableList{});
  const Polynomial one = Polynomial::constant(none, ring, 1);
  const std::size_t nt = f.target()->rank();
  std::vector<MapColumn> cols(src->rank());
  for (std::size_t l = 0; l < src->rank(); ++l) {
    const Exponents& mu = src->multisets()[l];
    GradedElement acc{{Exponents(nt, 0), one}};
    for (std::size_t j = 0; j < mu.size() && !acc.empty(); ++j) {
      if (mu[j] == 0) continue;
      LinearCombination image;
      for (const auto& [i, c] : f.column(j)) image.emplace_back(i, Polynomial::constant(none, ring, c));
      acc = symmetric_product(acc, symmetric_power_of(image, nt, mu[j], one));
    }
    for (const auto& [key, c] : acc)
      if (!c.is_zero()) cols[l].emplace_back(*tgt->index_of_multiset(key), c.constant_term());
  }
  return ComoduleMap(src, tgt, std::move(cols));
}

ComoduleMap gamma_composition_map(const ComodulePtr& v, int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("gamma_composition_map needs m, N >= 1");
  ComodulePtr src = div_power(v, m * n);
  ComodulePtr inner = div_power(v, n);
  ComodulePtr tgt = div_power(inner, m);
  std::vector<MapColumn> cols(src->rank());
  for (std::size_t t = 0; t < tgt->rank(); ++t) {
    const Exponents& kappa = tgt->multisets()[t];
    Exponents lambda(v->rank(), 0);
    for (std::size_t q = 0; q < kappa.size(); ++q) {
      if (kappa[q] == 0) continue;
      const Exponents& mu = inner->multisets()[q];
      for (std::size_t i = 0; i < mu.size(); ++i) lambda[i] += kappa[q] * mu[i];
    }
    cols[*src->index_of_multiset(lambda)].emplace_back(t, 1);
  }
  return ComoduleMap(src, tgt, std::move(cols));
}

ComoduleMap twist_projection(const ComodulePtr& vbar, int s) {
  ComodulePtr tgt = frobenius_twist(vbar, s);
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), vbar->ring().modulus().get_mpz_t(), static_cast<unsigned long>(s));
  ComodulePtr src = div_power(vbar, static_cast<int>(q.get_si()));
  std::vector<MapColumn> cols(src->rank());
  for (std::size_t i = 0; i < vbar->rank(); ++i) {
    Exponents pure(vbar->rank(), 0);
    pure[i] = static_cast<int>(q.get_si());
    cols[*src->index_of_multiset(pure)] = {{i, 1}};
  }
  return ComoduleMap(src, tgt, std::move(cols));
}

void check_equivariant(const ComoduleMap& f, const std::optional<std::vector<std::size_t>>& source_columns) {
  const Comodule& s = *f.source();
  const Comodule& t = *f.target();
  const GroupScheme& g = *s.group();
  const VarsPtr one = g.copies(1);
  std::vector<std::size_t> cols;
  if (source_columns) {
    cols = *source_columns;
  } else {
    for (std::size_t j = 0; j < s.rank(); ++j) cols.push_back(j);
  }
  for (std::size_t j : cols) {
    std::map<std::size_t, Polynomial> lhs, rhs;
    auto add = [&](std::map<std::size_t, Polynomial>& acc, std::size_t i, const Polynomial& p) {
      auto [it, inserted] = acc.try_emplace(i, p);
      if (!inserted) it->second += p;
    };
    for (const auto& [k, c] : f.column(j))
      for (const auto& [i, rho] : t.column(k)) add(lhs, i, rho.scaled(c));
    for (const auto& [l, rho] : s.column(j))
      for (const auto& [i, c] : f.column(l)) add(rhs, i, rho.scaled(c));
    for (auto& [i, p] : rhs) add(lhs, i, -p);
    for (const auto& [i, p] : lhs) {
      Polynomial diff = g.normal_form(p, 1);
      if (!diff.is_zero())
        throw VerificationFailed("map " + s.descriptor() + " -> " + t.descriptor() +
                                     " is not equivariant at (" + t.labels()[i] + ", " +
                                     s.labels()[j] + ")",
                                 diff.to_string());
    }
  }
}

}  // namespace sl2coh
