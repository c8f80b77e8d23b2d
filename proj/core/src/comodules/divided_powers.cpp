#include "sl2coh/comodules/divided_powers.hpp"

#include "sl2coh/exactalg/scalar.hpp"

namespace sl2coh {

namespace {

void enumerate(std::size_t n, std::size_t pos, int remaining, Exponents& cur,
               std::vector<Exponents>& out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate(n, pos + 1, remaining - k, cur, out);
  }
}

// Visits all mu over the support of v with |mu| = k, accumulating prod c_i^{mu_i}.
template <class Visit>
void compositions(const LinearCombination& v, std::vector<std::vector<Polynomial>>& powers,
                  std::size_t pos, int remaining, Exponents& mu, const Polynomial& acc,
                  Visit&& visit) {
  if (pos + 1 == v.size()) {
    auto& cache = powers[pos];
    while (static_cast<int>(cache.size()) <= remaining) cache.push_back(cache.back() * v[pos].second);
    Polynomial c = acc * cache[remaining];
    if (c.is_zero()) return;
    mu[v[pos].first] = remaining;
    visit(mu, c, pos);
    mu[v[pos].first] = 0;
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    auto& cache = powers[pos];
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * v[pos].second);
    Polynomial c = acc * cache[k];
    if (c.is_zero()) continue;
    mu[v[pos].first] = k;
    compositions(v, powers, pos + 1, remaining - k, mu, c, visit);
    mu[v[pos].first] = 0;
  }
}

void accumulate(GradedElement& out, const Exponents& key, const Polynomial& c) {
  if (c.is_zero()) return;
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

template <class Coefficient>
GradedElement power_of(const LinearCombination& v, std::size_t n, int k, const Polynomial& one,
                       Coefficient&& coefficient) {
  GradedElement out;
  Exponents mu(n, 0);
  if (k == 0) {
    out.emplace(mu, one);
    return out;
  }
  if (v.empty()) return out;
  std::vector<std::vector<Polynomial>> powers(v.size(), std::vector<Polynomial>{one});
  compositions(v, powers, 0, k, mu, one, [&](const Exponents& m, const Polynomial& c, std::size_t) {
    accumulate(out, m, c.scaled(coefficient(m)));
  });
  return out;
}

}  // namespace

std::vector<Exponents> multiset_basis(std::size_t n, int m) {
  std::vector<Exponents> out;
  if (m < 0) return out;
  if (n == 0) {
    if (m == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  enumerate(n, 0, m, cur, out);
  return out;
}

GradedElement divided_power_of(const LinearCombination& v, std::size_t n, int k,
                               const Polynomial& one) {
  return power_of(v, n, k, one, [](const Exponents&) { return mpz_class(1); });
}

GradedElement symmetric_power_of(const LinearCombination& v, std::size_t n, int k,
                                 const Polynomial& one) {
  return power_of(v, n, k, one, [k](const Exponents& mu) {
    // k! / prod mu_i!
    mpz_class c = 1;
    int left = k;
    for (int e : mu) {
      if (e == 0) continue;
      c *= binomial(static_cast<unsigned long>(left), static_cast<unsigned long>(e));
      left -= e;
    }
    return c;
  });
}

GradedElement divided_product(const GradedElement& a, const GradedElement& b) {
  GradedElement out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      mpz_class coeff = 1;
      for (std::size_t i = 0; i < ea.size(); ++i) {
        e[i] = ea[i] + eb[i];
        if (ea[i] && eb[i]) coeff *= binomial(static_cast<unsigned long>(e[i]), static_cast<unsigned long>(ea[i]));
      }
      accumulate(out, e, (ca * cb).scaled(coeff));
    }
  return out;
}

GradedElement symmetric_product(const GradedElement& a, const GradedElement& b) {
  GradedElement out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(out, e, ca * cb);
    }
  return out;
}

}  // namespace sl2coh
