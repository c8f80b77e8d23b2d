#include "sl2coh/pairlat/pairing_diagram.hpp"

#include <map>
#include <sstream>

#include "sl2coh/errors.hpp"
#include "sl2coh/exactalg/integer_matrix.hpp"

namespace sl2coh {

namespace {

unsigned long prime_power(const mpz_class& p, int r) {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  if (r < 1) throw InvalidArgument("r must be at least 1");
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
  return q.get_ui();
}

// x with a x == e_i mod p, for every i.
std::vector<std::vector<mpz_class>> lifts(const IntegerMatrix& a, const mpz_class& p) {
  const std::size_t k = a.rows(), n = a.cols();
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t i = 0; i < k; ++i) {
    IntegerMatrix aug(k, n + 1);
    for (std::size_t s = 0; s < k; ++s)
      for (std::size_t t = 0; t < n; ++t) aug(s, t) = a(s, t);
    aug(i, n) = 1;
    IntegerMatrix ker = kernel_mod(aug, p);
    bool found = false;
    for (std::size_t row = 0; row < ker.rows() && !found; ++row) {
      mpz_class c = ker(row, n);
      if (c % p == 0) continue;
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
      std::vector<mpz_class> x(n);
      for (std::size_t t = 0; t < n; ++t) {
        x[t] = -inv * ker(row, t);
        mpz_fdiv_r(x[t].get_mpz_t(), x[t].get_mpz_t(), p.get_mpz_t());
      }
      out.push_back(std::move(x));
      found = true;
    }
    if (!found) throw InvalidArgument("projection is not onto: basis vector " + std::to_string(i) + " has no preimage");
  }
  return out;
}

}  // namespace

PairingLattices build_pairing_lattices(const ComodulePtr& x, const ComoduleMap& projection) {
  if (!x->ring().is_integers()) throw RingMismatch("X must be a comodule over ZZ");
  const Ring& fp = projection.ring();
  if (fp.is_integers() || !is_prime(fp.modulus()))
    throw RingMismatch("the projection must be defined over ZZ/p");
  const mpz_class p = fp.modulus();
  if (!same_comodule(projection.source(), mod_p(x, p)))
    throw ShapeMismatch("projection source is not X mod p");

  const IntegerMatrix a = projection.to_matrix();
  if (rank_mod(a, p) != projection.target()->rank()) throw InvalidArgument("projection is not onto");
  IntegerLattice k = lattice_preimage_mod(a, p);
  induced_subcomodule(x, k);

  // f in Y iff B f == 0 mod p for the basis rows B of K
  IntegerLattice y = lattice_preimage_mod(k.basis(), p);
  ComodulePtr xd = dual(x);
  ComodulePtr y_module = induced_subcomodule(xd, y);

  const IntegerMatrix& yb = y.basis();
  std::vector<MapColumn> inc(yb.rows());
  for (std::size_t j = 0; j < yb.rows(); ++j)
    for (std::size_t t = 0; t < yb.cols(); ++t)
      if (yb(j, t) != 0) inc[j].emplace_back(t, yb(j, t));
  ComoduleMap y_inclusion(y_module, xd, std::move(inc));

  const auto lift = lifts(a, p);
  std::vector<MapColumn> red(yb.rows());
  for (std::size_t j = 0; j < yb.rows(); ++j)
    for (std::size_t i = 0; i < lift.size(); ++i) {
      mpz_class v = 0;
      for (std::size_t t = 0; t < yb.cols(); ++t) v += yb(j, t) * lift[i][t];
      red[j].emplace_back(i, v);
    }
  ComoduleMap y_reduction(mod_p(y_module, p), dual(projection.target()), std::move(red));

  return PairingLattices{p, x, projection, std::move(k), std::move(y), std::move(y_module),
                         std::move(y_inclusion), std::move(y_reduction)};
}

ComodulePtr lattice_X(const mpz_class& p, int r) {
  return div_power(gl2_conjugation(), static_cast<int>(prime_power(p, r)));
}

ComoduleMap build_X_map(const mpz_class& p, int r) {
  prime_power(p, r);
  return twist_projection(mod_p(gl2_conjugation(), p), r);
}

PairingLattices pairing_lattices(const mpz_class& p, int r) {
  return build_pairing_lattices(lattice_X(p, r), build_X_map(p, r));
}

IntegerLattice build_K(const mpz_class& p, int r) { return pairing_lattices(p, r).k; }
IntegerLattice build_Y(const mpz_class& p, int r) { return pairing_lattices(p, r).y; }

Pairing top_pairing(const PairingLattices& data, int m) {
  Pairing ev = evaluation_pairing(data.x, m);
  return pull_back(ev, identity_map(ev.left()), sym_power_map(data.y_inclusion, m));
}

Pairing top_pairing(const mpz_class& p, int r, int m) { return top_pairing(pairing_lattices(p, r), m); }

Pairing bottom_pairing(const PairingLattices& data, int m) { return evaluation_pairing(data.v(), m); }

DiagramCheck check_diagram(const PairingLattices& data, int m, const Ring& base) {
  const mpz_class& p = data.p;
  if (!base.is_integers()) {
    mpz_class q = base.modulus();
    while (q % p == 0) q /= p;
    if (q != 1 || base.modulus() == 1) throw InvalidArgument("base ring must be ZZ or ZZ/p^e");
  }
  DiagramCheck out;
  out.base = base.name();

  Pairing top = top_pairing(data, m);
  if (!base.is_integers()) top = base_change(top, base);
  const Pairing bottom = bottom_pairing(data, m);
  const ComoduleMap left = div_power_map(data.projection, m);
  const ComoduleMap right = sym_power_map(data.y_reduction, m);

  out.left_surjective = rank_mod(left.to_matrix(), p) == left.target()->rank() &&
                        rank_mod(right.to_matrix(), p) == right.target()->rank();

  const std::size_t nl = top.left()->rank(), nr = top.right()->rank();
  out.pairs = nl * nr;
  std::map<std::pair<std::size_t, std::size_t>, mpz_class> upper;
  for (const auto& e : top.entries()) {
    mpz_class v = e.coefficient;
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    upper[{e.left, e.right}] += v;
  }

  const std::size_t nb = bottom.right()->rank();
  out.commutes = true;
  for (std::size_t l = 0; l < nl && out.commutes; ++l) {
    // u = bottom(left(e_l), -) as a functional on S^m V^#
    std::vector<mpz_class> u(nb);
    for (const auto& [a, c] : left.column(l))
      for (const auto& e : bottom.entries())
        if (e.left == a) u[e.right] += c * e.coefficient;
    for (std::size_t s = 0; s < nr; ++s) {
      mpz_class lower = 0;
      for (const auto& [b, d] : right.column(s)) lower += u[b] * d;
      mpz_fdiv_r(lower.get_mpz_t(), lower.get_mpz_t(), p.get_mpz_t());
      auto it = upper.find({l, s});
      mpz_class top_value = it == upper.end() ? mpz_class(0) : it->second;
      mpz_fdiv_r(top_value.get_mpz_t(), top_value.get_mpz_t(), p.get_mpz_t());
      if (top_value != lower) {
        std::ostringstream w;
        w << top.left()->labels()[l] << " (x) " << top.right()->labels()[s] << ": top " << top_value
          << ", bottom " << lower;
        out.witness = w.str();
        out.commutes = false;
        break;
      }
    }
  }
  return out;
}

DiagramCheck diagram_commutes(const mpz_class& p, int r, int m, const Ring& base) {
  return check_diagram(pairing_lattices(p, r), m, base);
}

PairingLattices doubled_gl2_lattices(const mpz_class& p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  ComodulePtr g = gl2_conjugation();
  ComodulePtr x = direct_sum(g, g);
  const std::size_t n = g->rank();
  std::vector<MapColumn> cols(2 * n);
  for (std::size_t j = 0; j < 2 * n; ++j) cols[j] = {{j % n, 1}};
  ComoduleMap pi(mod_p(x, p), mod_p(g, p), std::move(cols));
  return build_pairing_lattices(x, pi);
}

}  // namespace sl2coh
