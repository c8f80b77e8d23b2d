#include "sl2coh/comodules/comodule.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sl2coh/errors.hpp"

namespace sl2coh {

Comodule::Comodule(Info info, ColumnFn columns)
    : info_(std::move(info)), compute_(std::move(columns)), cache_(info_.labels.size()) {
  if (!info_.group) throw InvalidArgument("comodule without a group");
  if (info_.weights && info_.weights->size() != info_.labels.size())
    throw ShapeMismatch("weights do not match the rank");
}

std::optional<std::size_t> Comodule::index_of_multiset(const Exponents& e) const {
  // multisets are generated in strictly decreasing lex order
  auto it = std::lower_bound(info_.multisets.begin(), info_.multisets.end(), e,
                             [](const Exponents& a, const Exponents& b) { return a > b; });
  if (it == info_.multisets.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - info_.multisets.begin());
}

std::optional<std::size_t> Comodule::index_of_label(const std::string& label) const {
  for (std::size_t i = 0; i < info_.labels.size(); ++i)
    if (info_.labels[i] == label) return i;
  return std::nullopt;
}

const CoactionColumn& Comodule::column(std::size_t j) const {
  if (j >= rank()) throw InvalidArgument("coaction column out of range");
  {
    std::lock_guard lock(mutex_);
    if (cache_[j]) return *cache_[j];
  }
  auto col = std::make_unique<CoactionColumn>(compute_(j));
  std::sort(col->begin(), col->end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::lock_guard lock(mutex_);
  if (!cache_[j]) cache_[j] = std::move(col);
  return *cache_[j];
}

Polynomial Comodule::entry(std::size_t i, std::size_t j) const {
  for (const auto& [row, f] : column(j))
    if (row == i) return f;
  return Polynomial(group()->copies(1), ring());
}

std::vector<Polynomial> Comodule::coact(const std::vector<mpz_class>& v) const {
  if (v.size() != rank()) throw ShapeMismatch("coact: vector length mismatch");
  std::vector<Polynomial> out(rank(), Polynomial(group()->copies(1), ring()));
  for (std::size_t j = 0; j < rank(); ++j) {
    if (ring().reduced(v[j]) == 0) continue;
    for (const auto& [i, f] : column(j)) out[i] += f.scaled(v[j]);
  }
  return out;
}

std::string Comodule::to_string() const {
  std::ostringstream os;
  os << descriptor() << " over " << group()->name() << "/" << ring().name() << ", rank " << rank();
  for (std::size_t j = 0; j < rank(); ++j) {
    os << "\nrho(" << labels()[j] << ") =";
    bool first = true;
    for (const auto& [i, f] : column(j)) {
      os << (first ? " " : " + ") << labels()[i] << " (x) (" << f.to_string() << ")";
      first = false;
    }
    if (first) os << " 0";
  }
  return os.str();
}

bool same_comodule(const ComodulePtr& a, const ComodulePtr& b) {
  if (a == b) return true;
  return a->descriptor() == b->descriptor() && same_group(a->group(), b->group()) &&
         a->rank() == b->rank();
}

bool structurally_equal(const Comodule& a, const Comodule& b) {
  if (!same_group(a.group(), b.group()) || a.rank() != b.rank()) return false;
  for (std::size_t j = 0; j < a.rank(); ++j) {
    const auto& ca = a.column(j);
    const auto& cb = b.column(j);
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k)
      if (ca[k].first != cb[k].first || ca[k].second != cb[k].second) return false;
  }
  return true;
}

ComodulePtr make_comodule(std::string descriptor, GroupPtr group, std::vector<std::string> labels,
                          std::vector<CoactionColumn> columns,
                          std::optional<std::vector<int>> weights) {
  if (columns.size() != labels.size()) throw ShapeMismatch("one coaction column per basis vector");
  for (auto& col : columns)
    for (auto& [i, f] : col) {
      if (i >= labels.size()) throw ShapeMismatch("coaction row out of range");
      if (!same_vars(f.vars(), group->copies(1)))
        throw ShapeMismatch("coaction entries must be functions on " + group->name());
      f = group->normal_form(f, 1);
    }
  for (auto& col : columns)
    col.erase(std::remove_if(col.begin(), col.end(), [](const auto& e) { return e.second.is_zero(); }),
              col.end());
  Comodule::Info info;
  info.descriptor = std::move(descriptor);
  info.group = std::move(group);
  info.labels = std::move(labels);
  info.weights = std::move(weights);
  auto shared = std::make_shared<const std::vector<CoactionColumn>>(std::move(columns));
  return std::make_shared<const Comodule>(std::move(info),
                                          [shared](std::size_t j) { return (*shared)[j]; });
}

ComodulePtr trivial_comodule(const GroupPtr& group) {
  CoactionColumn col{{0, Polynomial::constant(group->copies(1), group->ring(), 1)}};
  return make_comodule("trivial", group, {"1"}, {col}, std::vector<int>{0});
}

ComodulePtr gl2_conjugation(const Ring& ring) {
  GroupPtr sl2 = make_group(GroupKind::SL2, ring);
  const VarsPtr one = sl2->copies(1);
  const Matrix2 g = matrix_point(*sl2);
  const Matrix2 ginv = matrix_point_inverse(*sl2);
  // basis order e11, e21, e12, e22 as (row, col) positions
  const int pos[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<CoactionColumn> columns;
  std::vector<int> weights;
  for (int j = 0; j < 4; ++j) {
    Matrix2 unit{std::vector<Polynomial>(4, Polynomial(one, ring))};
    unit(pos[j][0], pos[j][1]) = Polynomial::constant(one, ring, 1);
    Matrix2 conj = g * unit * ginv;
    CoactionColumn col;
    for (int i = 0; i < 4; ++i) col.emplace_back(i, sl2->normal_form(conj(pos[i][0], pos[i][1]), 1));
    columns.push_back(std::move(col));
    weights.push_back(torus_weight_of_matrix_unit(pos[j][0], pos[j][1]));
  }
  return make_comodule("gl2", sl2, {"e11", "e21", "e12", "e22"}, std::move(columns), weights);
}

namespace {

std::string multiset_label(const std::vector<std::string>& base, const Exponents& e, bool divided) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    bool compound = base[i].find_first_of("*^#") != std::string::npos && base[i].front() != '(';
    out += compound ? "(" + base[i] + ")" : base[i];
    if (divided)
      out += "^[" + std::to_string(e[i]) + "]";
    else if (e[i] != 1)
      out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::optional<std::vector<int>> multiset_weights(const Comodule& base,
                                                 const std::vector<Exponents>& basis) {
  if (!base.weights()) return std::nullopt;
  std::vector<int> w;
  for (const auto& e : basis) {
    int s = 0;
    for (std::size_t i = 0; i < e.size(); ++i) s += e[i] * (*base.weights())[i];
    w.push_back(s);
  }
  return w;
}

CoactionColumn to_column(const Comodule& target, const GradedElement& element, const GroupScheme& g) {
  CoactionColumn col;
  for (const auto& [key, f] : element) {
    auto idx = target.index_of_multiset(key);
    if (!idx) throw ShapeMismatch("multiset outside the basis");
    Polynomial nf = g.normal_form(f, 1);
    if (!nf.is_zero()) col.emplace_back(*idx, std::move(nf));
  }
  return col;
}

ComodulePtr graded_power(const ComodulePtr& m, int power, bool divided) {
  if (power < 0) throw InvalidArgument("negative exponent for Gamma^m / S^m");
  Comodule::Info info;
  info.kind = divided ? Comodule::Kind::DividedPower : Comodule::Kind::SymmetricPower;
  info.descriptor = (divided ? "Gamma^" : "S^") + std::to_string(power) + "(" + m->descriptor() + ")";
  info.group = m->group();
  info.parents = {m};
  info.power = power;
  info.multisets = multiset_basis(m->rank(), power);
  for (const auto& e : info.multisets) info.labels.push_back(multiset_label(m->labels(), e, divided));
  info.weights = multiset_weights(*m, info.multisets);
  auto holder = std::make_shared<std::weak_ptr<const Comodule>>();
  auto result = std::make_shared<const Comodule>(std::move(info), [m, holder, divided](std::size_t j) {
    auto self = holder->lock();
    const Exponents& lambda = self->multisets()[j];
    const GroupScheme& g = *m->group();
    const Polynomial one = Polynomial::constant(g.copies(1), g.ring(), 1);
    GradedElement acc{{Exponents(m->rank(), 0), one}};
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i] == 0) continue;
      const CoactionColumn& col = m->column(i);
      LinearCombination v(col.begin(), col.end());
      if (divided)
        acc = divided_product(acc, divided_power_of(v, m->rank(), lambda[i], one));
      else
        acc = symmetric_product(acc, symmetric_power_of(v, m->rank(), lambda[i], one));
    }
    return to_column(*self, acc, g);
  });
  *holder = result;
  return result;
}

Polynomial frobenius_exponents(const Polynomial& f, int q) {
  Polynomial out(f.vars(), f.ring());
  for (const auto& [e, c] : f.terms()) {
    Exponents scaled(e);
    for (int& x : scaled) x *= q;
    out.add_term(scaled, c);
  }
  return out;
}

std::optional<std::vector<Polynomial>> lattice_coordinates(const IntegerLattice& lat,
                                                           std::vector<Polynomial> w) {
  const IntegerMatrix& b = lat.basis();
  std::vector<Polynomial> coords;
  std::size_t col = 0;
  for (std::size_t s = 0; s < lat.rank(); ++s) {
    const std::size_t pc = lat.pivot_columns()[s];
    for (; col < pc; ++col)
      if (!w[col].is_zero()) return std::nullopt;
    Polynomial c = w[pc];
    try {
      c = exact_div_scalar(w[pc], b(s, pc));
    } catch (const NotDivisible&) {
      return std::nullopt;
    }
    for (std::size_t j = pc; j < lat.ambient_dim(); ++j)
      if (b(s, j) != 0) w[j] -= c.scaled(b(s, j));
    coords.push_back(std::move(c));
    col = pc + 1;
  }
  for (; col < lat.ambient_dim(); ++col)
    if (!w[col].is_zero()) return std::nullopt;
  return coords;
}

}  // namespace

ComodulePtr div_power(const ComodulePtr& m, int power) { return graded_power(m, power, true); }
ComodulePtr sym_power(const ComodulePtr& m, int power) { return graded_power(m, power, false); }

ComodulePtr dual(const ComodulePtr& m) {
  Comodule::Info info;
  info.kind = Comodule::Kind::Dual;
  info.descriptor = "dual(" + m->descriptor() + ")";
  info.group = m->group();
  info.parents = {m};
  for (const auto& l : m->labels()) info.labels.push_back(l + "#");
  if (m->weights()) {
    std::vector<int> w;
    for (int x : *m->weights()) w.push_back(-x);
    info.weights = w;
  }
  struct Rows {
    std::once_flag once;
    std::vector<CoactionColumn> rows;
  };
  auto rows = std::make_shared<Rows>();
  return std::make_shared<const Comodule>(std::move(info), [m, rows](std::size_t j) {
    std::call_once(rows->once, [&] {
      rows->rows.resize(m->rank());
      for (std::size_t c = 0; c < m->rank(); ++c)
        for (const auto& [i, f] : m->column(c)) rows->rows[i].emplace_back(c, f);
    });
    CoactionColumn col;
    for (const auto& [i, f] : rows->rows[j]) col.emplace_back(i, m->group()->apply_antipode(f));
    return col;
  });
}

ComodulePtr restrict(const ComodulePtr& m, const GroupHom& phi) {
  if (!same_group(phi.target(), m->group()))
    throw ShapeMismatch("restrict: " + phi.name() + " does not land in " + m->group()->name());
  Comodule::Info info;
  info.kind = Comodule::Kind::Restricted;
  info.descriptor = "res[" + phi.name() + "](" + m->descriptor() + ")";
  info.group = phi.source();
  info.labels = m->labels();
  info.weights = m->weights();
  info.parents = {m};
  info.hom = std::make_shared<const GroupHom>(phi);
  auto hom = info.hom;
  return std::make_shared<const Comodule>(std::move(info), [m, hom](std::size_t j) {
    CoactionColumn col;
    for (const auto& [i, f] : m->column(j)) {
      Polynomial g = hom->pull(f, 1);
      if (!g.is_zero()) col.emplace_back(i, std::move(g));
    }
    return col;
  });
}

ComodulePtr base_change(const ComodulePtr& m, const Ring& ring) {
  if (m->ring() == ring) return m;
  if (!m->ring().reduces_to(ring))
    throw RingMismatch("no base change " + m->ring().name() + " -> " + ring.name());
  const auto& ps = m->parents();
  switch (m->kind()) {
    case Comodule::Kind::DividedPower: return div_power(base_change(ps[0], ring), m->power());
    case Comodule::Kind::SymmetricPower: return sym_power(base_change(ps[0], ring), m->power());
    case Comodule::Kind::Dual: return dual(base_change(ps[0], ring));
    case Comodule::Kind::Twist: return frobenius_twist(base_change(ps[0], ring), m->power());
    case Comodule::Kind::Tensor: return tensor(base_change(ps[0], ring), base_change(ps[1], ring));
    case Comodule::Kind::DirectSum:
      return direct_sum(base_change(ps[0], ring), base_change(ps[1], ring));
    case Comodule::Kind::Restricted:
      return restrict(base_change(ps[0], ring), m->hom()->base_change(ring));
    case Comodule::Kind::BaseChanged: return base_change(ps[0], ring);
    case Comodule::Kind::Explicit:
    case Comodule::Kind::Sub: break;
  }
  Comodule::Info info;
  info.kind = Comodule::Kind::BaseChanged;
  info.descriptor = m->descriptor();
  info.group = m->group()->base_change(ring);
  info.labels = m->labels();
  info.weights = m->weights();
  info.parents = {m};
  GroupPtr g = info.group;
  return std::make_shared<const Comodule>(std::move(info), [m, ring, g](std::size_t j) {
    CoactionColumn col;
    for (const auto& [i, f] : m->column(j)) {
      Polynomial r = change_ring(f, ring);
      if (!r.is_zero()) col.emplace_back(i, std::move(r));
    }
    return col;
  });
}

ComodulePtr frobenius_twist(const ComodulePtr& m, int s) {
  if (s < 0) throw InvalidArgument("negative Frobenius twist");
  const Ring& ring = m->ring();
  if (ring.is_integers() || !is_prime(ring.modulus()))
    throw RingMismatch("Frobenius twist needs base ring ZZ/p, got " + ring.name());
  if (s == 0) return m;
  mpz_class qz;
  mpz_pow_ui(qz.get_mpz_t(), ring.modulus().get_mpz_t(), static_cast<unsigned long>(s));
  if (!qz.fits_sint_p()) throw InvalidArgument("Frobenius twist exponent too large");
  const int q = static_cast<int>(qz.get_si());
  Comodule::Info info;
  info.kind = Comodule::Kind::Twist;
  info.descriptor = "twist^" + std::to_string(s) + "(" + m->descriptor() + ")";
  info.group = m->group();
  info.parents = {m};
  info.power = s;
  for (const auto& l : m->labels()) info.labels.push_back(l + "^(" + std::to_string(s) + ")");
  if (m->weights()) {
    std::vector<int> w;
    for (int x : *m->weights()) w.push_back(q * x);
    info.weights = w;
  }
  return std::make_shared<const Comodule>(std::move(info), [m, q](std::size_t j) {
    CoactionColumn col;
    for (const auto& [i, f] : m->column(j)) col.emplace_back(i, frobenius_exponents(f, q));
    return col;
  });
}

ComodulePtr tensor(const ComodulePtr& a, const ComodulePtr& b) {
  if (!same_group(a->group(), b->group())) throw ShapeMismatch("tensor: different groups");
  Comodule::Info info;
  info.kind = Comodule::Kind::Tensor;
  info.descriptor = "(" + a->descriptor() + ")x(" + b->descriptor() + ")";
  info.group = a->group();
  info.parents = {a, b};
  for (const auto& la : a->labels())
    for (const auto& lb : b->labels()) info.labels.push_back(la + "|" + lb);
  if (a->weights() && b->weights()) {
    std::vector<int> w;
    for (int x : *a->weights())
      for (int y : *b->weights()) w.push_back(x + y);
    info.weights = w;
  }
  return std::make_shared<const Comodule>(std::move(info), [a, b](std::size_t j) {
    const std::size_t nb = b->rank();
    CoactionColumn col;
    for (const auto& [i, f] : a->column(j / nb))
      for (const auto& [k, g] : b->column(j % nb)) {
        Polynomial e = a->group()->normal_form(f * g, 1);
        if (!e.is_zero()) col.emplace_back(i * nb + k, std::move(e));
      }
    return col;
  });
}

ComodulePtr direct_sum(const ComodulePtr& a, const ComodulePtr& b) {
  if (!same_group(a->group(), b->group())) throw ShapeMismatch("direct_sum: different groups");
  Comodule::Info info;
  info.kind = Comodule::Kind::DirectSum;
  info.descriptor = "(" + a->descriptor() + ")+(" + b->descriptor() + ")";
  info.group = a->group();
  info.parents = {a, b};
  for (const auto& l : a->labels()) info.labels.push_back(l + "'1");
  for (const auto& l : b->labels()) info.labels.push_back(l + "'2");
  if (a->weights() && b->weights()) {
    std::vector<int> w(*a->weights());
    w.insert(w.end(), b->weights()->begin(), b->weights()->end());
    info.weights = w;
  }
  return std::make_shared<const Comodule>(std::move(info), [a, b](std::size_t j) {
    const std::size_t na = a->rank();
    if (j < na) return a->column(j);
    CoactionColumn col;
    for (const auto& [i, f] : b->column(j - na)) col.emplace_back(i + na, f);
    return col;
  });
}

ComodulePtr induced_subcomodule(const ComodulePtr& m, const IntegerLattice& sub) {
  if (!m->ring().is_integers())
    throw RingMismatch("induced_subcomodule is implemented over ZZ only");
  if (sub.ambient_dim() != m->rank()) throw ShapeMismatch("sublattice in the wrong ambient space");
  const IntegerMatrix& b = sub.basis();
  std::vector<CoactionColumn> columns;
  for (std::size_t t = 0; t < sub.rank(); ++t) {
    auto coords = lattice_coordinates(sub, m->coact(b.row_vector(t)));
    if (!coords) {
      std::ostringstream os;
      os << "rho of basis vector " << t << " leaves the sublattice";
      throw VerificationFailed("sublattice is not coaction-stable", os.str());
    }
    CoactionColumn col;
    for (std::size_t s = 0; s < coords->size(); ++s)
      if (!(*coords)[s].is_zero()) col.emplace_back(s, (*coords)[s]);
    columns.push_back(std::move(col));
  }
  std::vector<std::string> labels;
  std::optional<std::vector<int>> weights;
  if (m->weights()) weights.emplace();
  std::ostringstream key;
  for (std::size_t t = 0; t < sub.rank(); ++t) {
    std::string label;
    std::optional<int> w;
    bool single_weight = true;
    for (std::size_t i = 0; i < sub.ambient_dim(); ++i) {
      const mpz_class& c = b(t, i);
      key << c.get_str() << ',';
      if (c == 0) continue;
      if (!label.empty()) label += (c > 0 ? "+" : "");
      label += (c == 1 ? "" : c == -1 ? "-" : c.get_str() + "*") + m->labels()[i];
      if (m->weights()) {
        int wi = (*m->weights())[i];
        if (w && *w != wi) single_weight = false;
        w = wi;
      }
    }
    key << ';';
    labels.push_back(label.empty() ? "0" : label);
    if (weights) {
      if (single_weight)
        weights->push_back(w.value_or(0));
      else
        weights.reset();
    }
  }
  auto result = make_comodule("sub[" + key.str() + "](" + m->descriptor() + ")", m->group(),
                              std::move(labels), std::move(columns), std::move(weights));
  return result;
}

GeneratedSubcomodule generated_subcomodule(const ComodulePtr& m, const std::vector<mpz_class>& v) {
  std::vector<Polynomial> image = m->coact(v);
  std::set<Exponents> monomials;
  for (const auto& f : image)
    for (const auto& [e, c] : f.terms()) monomials.insert(e);
  IntegerMatrix gens(0, m->rank());
  for (const auto& e : monomials) {
    std::vector<mpz_class> row(m->rank());
    for (std::size_t i = 0; i < m->rank(); ++i) row[i] = image[i].coefficient(e);
    gens.append_row(row);
  }
  IntegerLattice lat = saturation(gens);
  if (!lat.contains(v)) throw VerificationFailed("generating vector outside its subcomodule", "");
  return {lat, induced_subcomodule(m, lat)};
}

void check_coassociative(const Comodule& m) {
  const GroupScheme& g = *m.group();
  const VarsPtr two = g.copies(2);
  for (std::size_t j = 0; j < m.rank(); ++j) {
    std::map<std::size_t, Polynomial> expected;
    for (const auto& [k, rkj] : m.column(j)) {
      Polynomial right = place_copies(g, rkj, 1, {2}, two, 2);
      for (const auto& [i, rik] : m.column(k)) {
        Polynomial term = place_copies(g, rik, 1, {1}, two, 2) * right;
        auto [it, inserted] = expected.try_emplace(i, term);
        if (!inserted) it->second += term;
      }
    }
    std::map<std::size_t, Polynomial> actual;
    for (const auto& [i, rij] : m.column(j)) actual.emplace(i, g.comultiply(rij));
    std::set<std::size_t> rows;
    for (const auto& [i, f] : expected) rows.insert(i);
    for (const auto& [i, f] : actual) rows.insert(i);
    for (std::size_t i : rows) {
      Polynomial lhs = actual.count(i) ? actual.at(i) : Polynomial(two, g.ring());
      Polynomial rhs = expected.count(i) ? g.normal_form(expected.at(i), 2) : Polynomial(two, g.ring());
      if (lhs != rhs)
        throw VerificationFailed(m.descriptor() + ": coassociativity fails at (" + m.labels()[i] +
                                     ", " + m.labels()[j] + ")",
                                 (lhs - rhs).to_string());
    }
  }
}

void check_counit(const Comodule& m) {
  const GroupScheme& g = *m.group();
  for (std::size_t j = 0; j < m.rank(); ++j) {
    bool diagonal_seen = false;
    for (const auto& [i, f] : m.column(j)) {
      Polynomial e = g.apply_counit(f);
      mpz_class want = i == j ? 1 : 0;
      if (i == j) diagonal_seen = true;
      if (e != Polynomial::constant(e.vars(), e.ring(), want))
        throw VerificationFailed(m.descriptor() + ": counit fails at (" + m.labels()[i] + ", " +
                                     m.labels()[j] + ")",
                                 e.to_string());
    }
    if (!diagonal_seen)
      throw VerificationFailed(m.descriptor() + ": counit fails at diagonal " + m.labels()[j], "0");
  }
}

}  // namespace sl2coh
