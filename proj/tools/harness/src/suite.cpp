#include "sl2coh/harness/suite.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <optional>
#include <sstream>

#include "sl2coh/classes/universal.hpp"
#include "sl2coh/classes/witt.hpp"
#include "sl2coh/errors.hpp"
#include "sl2coh/harness/random_objects.hpp"
#include "sl2coh/hochschild/bounded.hpp"
#include "sl2coh/hochschild/torus.hpp"
#include "sl2coh/pairlat/pairing_diagram.hpp"
#include "sl2coh/version.hpp"

namespace sl2coh::harness {

namespace {

struct Outcome {
  bool ok = true;
  std::string witness;
  std::string message;
};

Outcome failed(std::string message, std::string witness = {}) {
  return {false, std::move(witness), std::move(message)};
}

class Recorder {
 public:
  Recorder(const SuiteConfig& config, VerificationReport& report, const RecordSink& sink)
      : config_(config), report_(report), sink_(sink) {}

  bool wanted(const std::string& suite, const Params& params) const {
    return !config_.include || config_.include(suite, params);
  }

  void run(const std::string& suite, const std::string& name, const Params& params,
           const std::function<Outcome()>& body) {
    CheckRecord rec{suite, name, params, Status::pass, {}, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      rec.status = o.ok ? Status::pass : Status::fail;
      rec.witness = std::move(o.witness);
      rec.message = std::move(o.message);
    } catch (const VerificationFailed& e) {
      rec.status = Status::fail;
      rec.witness = e.witness();
      rec.message = e.what();
    } catch (const std::exception& e) {
      rec.status = Status::fail;
      rec.message = std::string("error: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    push(std::move(rec));
  }

  void skip(const std::string& suite, const std::string& name, const Params& params, std::string why) {
    push(CheckRecord{suite, name, params, Status::skipped, {}, std::move(why), 0});
  }

 private:
  void push(CheckRecord rec) {
    report_.checks.push_back(std::move(rec));
    if (sink_) sink_(report_.checks.back());
  }

  const SuiteConfig& config_;
  VerificationReport& report_;
  const RecordSink& sink_;
};

unsigned long power(int p, int e) {
  unsigned long q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<unsigned long>(p);
  return q;
}

std::string rank_cap_message(const mpz_class& rank, std::size_t cap) {
  return "coefficient rank " + rank.get_str() + " exceeds cap " + std::to_string(cap);
}

// rank of Gamma^n of a rank-k module
mpz_class gamma_rank(unsigned long k, unsigned long n) { return binomial(n + k - 1, k - 1); }

// ---------------------------------------------------------------- exactalg

mpz_class determinant(IntegerMatrix a) {
  // Bareiss fraction-free elimination
  const std::size_t n = a.rows();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<std::string> hermite_violation(const IntegerMatrix& a, const HermiteResult& h) {
  if (!(h.transform * a == h.form)) return "transform * input != form";
  if (!(hnf(h.transform).form == IntegerMatrix::identity(a.rows()))) return "transform is not unimodular";
  if (h.pivot_columns.size() != h.rank) return "pivot count differs from rank";
  for (std::size_t i = 0; i < h.form.rows(); ++i) {
    if (i >= h.rank) {
      if (!h.form.is_zero_row(i)) return "nonzero row below the rank";
      continue;
    }
    const std::size_t c = h.pivot_columns[i];
    if (i > 0 && c <= h.pivot_columns[i - 1]) return "pivots not strictly increasing";
    for (std::size_t j = 0; j < c; ++j)
      if (h.form(i, j) != 0) return "entry left of a pivot";
    if (h.form(i, c) <= 0) return "nonpositive pivot";
    for (std::size_t s = 0; s < i; ++s)
      if (h.form(s, c) < 0 || h.form(s, c) >= h.form(i, c)) return "entry above a pivot not reduced";
    for (std::size_t s = i + 1; s < h.form.rows(); ++s)
      if (h.form(s, c) != 0) return "entry below a pivot";
  }
  return std::nullopt;
}

void exactalg_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "exactalg";
  if (!rec.wanted(S, {})) return;
  rec.run(S, "hnf.properties", {}, [&]() -> Outcome {
    Rng rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int k = 0; k < cfg.samples; ++k) {
      IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng), 9);
      if (auto bad = hermite_violation(a, hnf(a))) return failed(*bad, a.to_string());
    }
    return {};
  });
  rec.run(S, "snf.determinant", {}, [&]() -> Outcome {
    Rng rng(cfg.seed + 1);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int k = 0; k < cfg.samples; ++k) {
      const std::size_t n = dim(rng);
      IntegerMatrix a = random_matrix(rng, n, n, 5);
      mpz_class det = abs(determinant(a));
      auto inv = smith_invariants(a);
      mpz_class prod = 1;
      for (const auto& d : inv) prod *= d;
      for (std::size_t i = 1; i < inv.size(); ++i)
        if (inv[i] % inv[i - 1] != 0) return failed("invariant factors do not divide", a.to_string());
      if (det == 0 ? inv.size() == n : (inv.size() != n || prod != det))
        return failed("product of invariant factors " + prod.get_str() + " vs |det| " + det.get_str(),
                      a.to_string());
    }
    return {};
  });
  rec.run(S, "lattice.preimage_mod", {}, [&]() -> Outcome {
    Rng rng(cfg.seed + 2);
    std::uniform_int_distribution<std::size_t> rows(1, 4), cols(1, 6);
    const int primes[] = {2, 3, 5};
    for (int k = 0; k < cfg.samples; ++k) {
      IntegerMatrix a = random_matrix(rng, rows(rng), cols(rng), 6);
      const mpz_class p = primes[k % 3];
      IntegerLattice lat = lattice_preimage_mod(a, p);
      for (std::size_t i = 0; i < lat.rank(); ++i)
        for (std::size_t s = 0; s < a.rows(); ++s) {
          mpz_class v = 0;
          for (std::size_t t = 0; t < a.cols(); ++t) v += a(s, t) * lat.basis()(i, t);
          if (v % p != 0) return failed("basis vector not in the preimage", a.to_string());
        }
      mpz_class want;
      mpz_pow_ui(want.get_mpz_t(), p.get_mpz_t(), rank_mod(a, p));
      if (lat.index() != want)
        return failed("index " + lat.index().get_str() + ", expected " + want.get_str(), a.to_string());
    }
    return {};
  });
  rec.run(S, "kernel.integer", {}, [&]() -> Outcome {
    Rng rng(cfg.seed + 3);
    std::uniform_int_distribution<std::size_t> rows(1, 5), cols(1, 7);
    for (int k = 0; k < cfg.samples; ++k) {
      IntegerMatrix a = random_matrix(rng, rows(rng), cols(rng), 4);
      IntegerMatrix ker = integer_kernel(a);
      if (ker.rows() + hnf(a).rank != a.cols()) return failed("rank + nullity != columns", a.to_string());
      if (!(a * ker.transpose() == IntegerMatrix(a.rows(), ker.rows())))
        return failed("kernel vector not killed", a.to_string());
    }
    return {};
  });
}

// ---------------------------------------------------------------- hopf

struct NamedGroup {
  std::string name;
  GroupKind kind;
};

const std::vector<NamedGroup>& all_groups() {
  static const std::vector<NamedGroup> g{{"Ga", GroupKind::Ga},
                                         {"T", GroupKind::T},
                                         {"B", GroupKind::B},
                                         {"SL2", GroupKind::SL2},
                                         {"BorelXU", GroupKind::BorelXU}};
  return g;
}

ComodulePtr gl2_on(GroupKind kind) {
  ComodulePtr g = gl2_conjugation();
  switch (kind) {
    case GroupKind::SL2: return g;
    case GroupKind::Ga: return restrict(g, root_hom());
    case GroupKind::T: return restrict(g, torus_hom());
    case GroupKind::B: return restrict(g, borel_hom());
    case GroupKind::BorelXU: return restrict(g, borel_xu_hom());
  }
  return g;
}

void hopf_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "hopf";
  std::vector<int> moduli{0};
  moduli.insert(moduli.end(), cfg.grid.p.begin(), cfg.grid.p.end());
  for (const auto& grp : all_groups())
    for (int p : moduli) {
      Params params{{"p", p}};
      if (!rec.wanted(S, params)) continue;
      rec.run(S, "hopf.axioms." + grp.name, params, [&]() -> Outcome {
        make_group(grp.kind, p == 0 ? Ring::integers() : Ring::modulo(p))->verify_hopf_axioms();
        return {};
      });
    }
  for (std::size_t gi = 0; gi < all_groups().size(); ++gi) {
    const auto& grp = all_groups()[gi];
    if (!rec.wanted(S, {})) continue;
    rec.run(S, "differential.square." + grp.name, {}, [&]() -> Outcome {
      Rng rng(cfg.seed + 100 + gi);
      ComodulePtr m = gl2_on(grp.kind);
      std::uniform_int_distribution<int> deg(0, 2);
      for (int k = 0; k < cfg.samples; ++k) {
        Cochain f = random_cochain(rng, m, deg(rng), 2, 2);
        Cochain dd = differential(differential(f));
        if (!dd.is_zero()) return failed("d(d f) != 0 for f =\n" + f.to_string(), dd.to_string());
      }
      return {};
    });
  }
}

// ---------------------------------------------------------------- comodules

Outcome axioms(const ComodulePtr& m) {
  check_coassociative(*m);
  check_counit(*m);
  return {};
}

void comodules_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "comodules";
  ComodulePtr gl2 = gl2_conjugation();
  if (rec.wanted(S, {})) rec.run(S, "axioms.gl2", {}, [&] { return axioms(gl2); });
  for (int m : cfg.grid.m) {
    Params params{{"m", m}};
    if (!rec.wanted(S, params)) continue;
    const mpz_class rank = gamma_rank(4, static_cast<unsigned long>(m));
    if (rank > cfg.caps.coefficient_rank) {
      for (const char* n : {"axioms.Gamma", "axioms.Sym", "evaluation_pairing.equivariant"})
        rec.skip(S, n, params, rank_cap_message(rank, cfg.caps.coefficient_rank));
      continue;
    }
    rec.run(S, "axioms.Gamma", params, [&] { return axioms(div_power(gl2, m)); });
    rec.run(S, "axioms.Sym", params, [&] { return axioms(sym_power(gl2, m)); });
    rec.run(S, "evaluation_pairing.equivariant", params, [&]() -> Outcome {
      check_equivariant(evaluation_pairing(gl2, m));
      return {};
    });
  }
  for (int p : cfg.grid.p)
    for (int r : cfg.grid.r) {
      Params params{{"p", p}, {"r", r}};
      if (!rec.wanted(S, params)) continue;
      ComodulePtr bar = mod_p(gl2, p);
      rec.run(S, "axioms.twist", params, [&] { return axioms(frobenius_twist(bar, r)); });
      const mpz_class rank = gamma_rank(4, power(p, r));
      if (rank > cfg.caps.coefficient_rank) {
        rec.skip(S, "twist_projection.equivariant", params, rank_cap_message(rank, cfg.caps.coefficient_rank));
        continue;
      }
      rec.run(S, "twist_projection.equivariant", params, [&]() -> Outcome {
        check_equivariant(twist_projection(bar, r));
        return {};
      });
    }
}

// ---------------------------------------------------------------- witt

void witt_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "witt";
  for (int p : cfg.grid.p) {
    if (rec.wanted(S, {{"p", p}}))
      rec.run(S, "phi.binomials", {{"p", p}}, [&]() -> Outcome {
        Polynomial f = phi(p);
        for (int k = 0; k <= p; ++k) {
          mpz_class want = (k == 0 || k == p) ? mpz_class(0) : mpz_class(binomial(p, k) / p);
          if (f.coefficient({k, p - k}) != want) return failed("coefficient of X^" + std::to_string(k), f.to_string());
        }
        return {};
      });
    for (int r : cfg.grid.r) {
      Params params{{"p", p}, {"r", r}};
      if (!rec.wanted(S, params)) continue;
      Cochain c = witt_cocycle(p, r);
      rec.run(S, "witt.cocycle", params, [&]() -> Outcome {
        auto chk = is_cocycle(c);
        return chk ? Outcome{} : failed("d c != 0", chk.df.to_string());
      });
      rec.run(S, "witt.coboundary_relation", params, [&]() -> Outcome {
        Cochain diff = c.scaled(p) - differential(ga_power_cochain(power(p, r)).scaled(-1));
        return diff.is_zero() ? Outcome{} : failed("p c != d(-X^q)", diff.to_string());
      });
      rec.run(S, "witt.mod_p", params, [&]() -> Outcome {
        Polynomial diff = reduce_mod(witt_polynomial(p, r) - phi_frobenius(p, r - 1), p);
        return diff.is_zero() ? Outcome{} : failed("c mod p != Phi(X^q', Y^q')", diff.to_string());
      });
      rec.run(S, "witt.congruence_p2", params, [&]() -> Outcome {
        return check_congruence_p2(p, r) ? Outcome{} : failed("congruence mod p^2 fails");
      });
    }
  }
}

// ---------------------------------------------------------------- nontriviality

void nontriviality_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "nontriviality";
  for (int p : cfg.grid.p) {
    Params params{{"p", p}};
    if (!rec.wanted(S, params)) continue;
    rec.run(S, "c1_mod_p.nonzero_class", params, [&]() -> Outcome {
      Cochain c = change_ring(witt_cocycle(p, 1), Ring::modulo(p));
      if (!is_cocycle(c)) return failed("c_1 mod p is not a cocycle", c.to_string());
      if (is_coboundary_Ga(c)) return failed("c_1 mod p is a coboundary", c.to_string());
      GradedCohomology h = bounded_cohomology_Ga(p, 2, p);
      return {true, {}, "H^2 in total degree " + std::to_string(p) + " has dimension " + std::to_string(h.dimension())};
    });
  }
}

// ---------------------------------------------------------------- cup

Outcome leibniz_samples(const SuiteConfig& cfg, int p) {
  Rng rng(cfg.seed + 1000 + static_cast<std::uint64_t>(p));
  GroupPtr ga = make_group(GroupKind::Ga, Ring::integers());
  ComodulePtr k = trivial_comodule(ga);
  ComodulePtr root = restrict(gl2_conjugation(), root_hom());
  const Pairing scalar = trivial_pairing(ga);
  const Pairing tens = tensor_pairing(root, root);
  std::uniform_int_distribution<int> deg(1, 2);
  for (int s = 0; s < cfg.samples; ++s) {
    const bool scalar_case = s % 2 == 0;
    const int i = deg(rng), j = deg(rng);
    // sample exponents up to p so that p-power phenomena show up
    Cochain f = random_cochain(rng, scalar_case ? k : root, i, p, 2);
    Cochain g = random_cochain(rng, scalar_case ? k : root, j, p, 2);
    const Pairing& phi = scalar_case ? scalar : tens;
    Cochain lhs = differential(cup(f, g, phi));
    Cochain rhs = cup(differential(f), g, phi) + cup(f, differential(g), phi).scaled(i % 2 == 0 ? 1 : -1);
    if (!(lhs == rhs))
      return failed("d(f u g) != df u g + (-1)^i f u dg", "f = " + f.to_string() + "\ng = " + g.to_string());
  }
  return {};
}

void cup_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "cup";
  for (int p : cfg.grid.p) {
    bool leibniz_ok = false;
    if (rec.wanted(S, {{"p", p}}))
      rec.run(S, "cup.leibniz", {{"p", p}}, [&]() -> Outcome {
        Outcome o = leibniz_samples(cfg, p);
        leibniz_ok = o.ok;
        return o;
      });
    else
      leibniz_ok = leibniz_samples(cfg, p).ok;
    for (int r : cfg.grid.r)
      for (int m : cfg.grid.m) {
        Params params{{"p", p}, {"r", r}, {"m", m}};
        if (!rec.wanted(S, params)) continue;
        if (2 * m > cfg.caps.cup_degree) {
          const std::string why = "cup degree " + std::to_string(2 * m) + " exceeds cap " + std::to_string(cfg.caps.cup_degree);
          rec.skip(S, "cup.cocycle", params, why);
          rec.skip(S, "cup.mod_p", params, why);
          continue;
        }
        const Cochain c = witt_cocycle(p, r);
        mpz_class terms;
        mpz_pow_ui(terms.get_mpz_t(), mpz_class(c.component(0).size()).get_mpz_t(), static_cast<unsigned long>(m));
        const bool direct = terms <= cfg.direct_cup_terms;
        const Ring fp = Ring::modulo(p);
        const Cochain target = cup_power(ga_two_cochain(phi_frobenius(p, r - 1), fp), m);
        if (direct) {
          std::optional<Cochain> power;
          rec.run(S, "cup.cocycle", params, [&]() -> Outcome {
            power = cup_power(c, m);
            auto chk = is_cocycle(*power);
            return chk ? Outcome{true, {}, "direct: " + terms.get_str() + " terms"}
                       : failed("d(c^m) != 0", chk.df.to_string());
          });
          rec.run(S, "cup.mod_p", params, [&]() -> Outcome {
            if (!power) power = cup_power(c, m);
            Cochain diff = change_ring(*power, fp) - target;
            return diff.is_zero() ? Outcome{true, {}, "direct"} : failed("c^m mod p != Phi^m", diff.to_string());
          });
        } else {
          rec.run(S, "cup.cocycle", params, [&]() -> Outcome {
            if (!leibniz_ok) return failed("Leibniz sample check failed, certificate unavailable");
            auto chk = is_cocycle(c);
            if (!chk) return failed("d c != 0", chk.df.to_string());
            return {true, {}, "certified: " + terms.get_str() + " terms exceed the direct budget; d c = 0 exactly and d(c^m) follows by the Leibniz rule"};
          });
          rec.run(S, "cup.mod_p", params, [&]() -> Outcome {
            Cochain diff = cup_power(change_ring(c, fp), m) - target;
            return diff.is_zero() ? Outcome{true, {}, "certified: reduced before cupping"}
                                  : failed("(c mod p)^m != Phi^m", diff.to_string());
          });
        }
      }
  }
}

// ---------------------------------------------------------------- universal

void universal_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "universal";
  const char* names[] = {"universal.cocycle", "universal.T_invariant", "universal.borel_extension",
                         "universal.projection"};
  for (int p : cfg.grid.p)
    for (int r : cfg.grid.r)
      for (int j : cfg.grid.j)
        for (int m : cfg.grid.m) {
          Params params{{"p", p}, {"r", r}, {"j", j}, {"m", m}};
          if (!rec.wanted(S, params)) continue;
          UniversalClassSpec spec{p, r, j, m};
          std::string why;
          if (spec.degree() > cfg.caps.cup_degree)
            why = "cup degree " + std::to_string(spec.degree()) + " exceeds cap " + std::to_string(cfg.caps.cup_degree);
          else if (spec.coefficient_rank() > cfg.caps.coefficient_rank)
            why = rank_cap_message(spec.coefficient_rank(), cfg.caps.coefficient_rank);
          if (!why.empty()) {
            for (const char* n : names) rec.skip(S, n, params, why);
            continue;
          }
          std::optional<Cochain> f;
          auto get = [&]() -> const Cochain& {
            if (!f) f = universal_cochain(spec);
            return *f;
          };
          rec.run(S, names[0], params, [&]() -> Outcome {
            auto chk = is_cocycle(get());
            return chk ? Outcome{} : failed("d f != 0", chk.df.to_string());
          });
          rec.run(S, names[1], params, [&]() -> Outcome {
            return is_T_invariant(get()) ? Outcome{} : failed("not T-invariant", get().to_string());
          });
          rec.run(S, names[2], params, [&]() -> Outcome {
            extend_to_borel(get(), borel_coefficients(spec));
            return {};
          });
          rec.run(S, names[3], params, [&]() -> Outcome {
            Cochain projected = project_universal_class(spec);
            Cochain diff = projected - displayed_universal_class(spec);
            if (!diff.is_zero()) return failed("projection differs from Phi^k e_alpha^[m]", diff.to_string());
            Cochain other = project_universal_class_reduced_first(spec) - projected;
            if (!other.is_zero()) return failed("reducing first changes the projection", other.to_string());
            return {};
          });
        }
}

// ---------------------------------------------------------------- pairings

void pairings_suite(Recorder& rec, const SuiteConfig& cfg) {
  const std::string S = "pairings";
  for (int p : cfg.grid.p) {
    for (int r : cfg.grid.r) {
      Params pr{{"p", p}, {"r", r}};
      const mpz_class xrank = gamma_rank(4, power(p, r));
      std::vector<int> ms;
      for (int m : cfg.grid.m)
        if (rec.wanted(S, {{"p", p}, {"r", r}, {"m", m}})) ms.push_back(m);
      const bool lattice_checks = rec.wanted(S, pr);
      if (!lattice_checks && ms.empty()) continue;
      if (xrank > cfg.caps.coefficient_rank) {
        const std::string why = rank_cap_message(xrank, cfg.caps.coefficient_rank);
        if (lattice_checks)
          for (const char* n : {"pairings.K_index", "pairings.Y_surjective", "pairings.Y_maximal"}) rec.skip(S, n, pr, why);
        for (int m : ms)
          for (const char* n : {"pairings.diagram", "pairings.diagram_p2"})
            rec.skip(S, n, {{"p", p}, {"r", r}, {"m", m}}, why);
        continue;
      }
      std::optional<PairingLattices> data;
      std::string build_error;
      try {
        data = pairing_lattices(p, r);
      } catch (const std::exception& e) {
        build_error = e.what();
      }
      auto need = [&]() -> const PairingLattices& {
        if (!data) throw std::runtime_error("lattice construction failed: " + build_error);
        return *data;
      };
      if (lattice_checks) {
        rec.run(S, "pairings.K_index", pr, [&]() -> Outcome {
          const auto& d = need();
          mpz_class want = power(p, 4), prod = 1;
          for (const auto& x : smith_invariants(d.k.basis())) prod *= x;
          if (prod != want) return failed("SNF index " + prod.get_str() + " != p^4", d.k.basis().to_string());
          for (std::size_t i = 0; i < d.k.ambient_dim(); ++i) {
            std::vector<mpz_class> v(d.k.ambient_dim());
            v[i] = p;
            if (!d.k.contains(v)) return failed("p X not inside K");
          }
          return {};
        });
        rec.run(S, "pairings.Y_surjective", pr, [&]() -> Outcome {
          const auto& d = need();
          const std::size_t rk = rank_mod(d.y_reduction.to_matrix(cfg.caps.matrix_dim), p);
          if (rk != d.v()->rank()) return failed("Y -> V^# has rank " + std::to_string(rk));
          check_equivariant(d.y_reduction);
          return {};
        });
        rec.run(S, "pairings.Y_maximal", pr, [&]() -> Outcome {
          const auto& d = need();
          const IntegerMatrix a = d.projection.to_matrix(cfg.caps.matrix_dim);
          Rng rng(cfg.seed + 2000 + 10 * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(r));
          std::uniform_int_distribution<int> small(-5, 5);
          for (int s = 0; s < cfg.samples; ++s) {
            std::vector<mpz_class> f(a.cols());
            for (std::size_t t = 0; t < a.cols(); ++t) f[t] = p * small(rng);
            for (std::size_t i = 0; i < a.rows(); ++i) {
              const int g = small(rng);
              for (std::size_t t = 0; t < a.cols(); ++t) f[t] += g * a(i, t);
            }
            if (!d.y.contains(f)) {
              std::ostringstream w;
              for (const auto& x : f) w << x << ' ';
              return failed("functional vanishing on K mod p lies outside Y", w.str());
            }
          }
          return {};
        });
      }
      for (int m : ms) {
        Params params{{"p", p}, {"r", r}, {"m", m}};
        const mpz_class grank = gamma_rank(xrank.get_ui(), static_cast<unsigned long>(m));
        if (grank > cfg.caps.coefficient_rank) {
          for (const char* n : {"pairings.diagram", "pairings.diagram_p2"})
            rec.skip(S, n, params, rank_cap_message(grank, cfg.caps.coefficient_rank));
          continue;
        }
        for (const auto& [name, ring] : {std::pair<std::string, Ring>{"pairings.diagram", Ring::integers()},
                                         std::pair<std::string, Ring>{"pairings.diagram_p2", Ring::modulo(p * p)}})
          rec.run(S, name, params, [&]() -> Outcome {
            DiagramCheck c = check_diagram(need(), m, ring);
            if (!c.left_surjective) return failed("left vertical map not surjective");
            if (!c.commutes) return failed("square does not commute over " + c.base, c.witness.value_or(""));
            return {true, {}, std::to_string(c.pairs) + " pairs over " + c.base};
          });
      }
    }
    for (int m : cfg.grid.m) {
      Params params{{"p", p}, {"m", m}};
      if (!rec.wanted(S, params)) continue;
      rec.run(S, "pairings.doubled_gl2", params, [&]() -> Outcome {
        PairingLattices d = doubled_gl2_lattices(p);
        for (const Ring& ring : {Ring::integers(), Ring::modulo(p * p)}) {
          DiagramCheck c = check_diagram(d, m, ring);
          if (!c) return failed("diagram fails for gl2 + gl2 over " + c.base, c.witness.value_or(""));
        }
        return {};
      });
    }
  }
}

// ---------------------------------------------------------------- lemma

void lemma_suite(Recorder& rec, const SuiteConfig&) {
  const std::string S = "lemma";
  if (!rec.wanted(S, {})) return;
  ComodulePtr gl2 = gl2_conjugation();
  auto generated = [&](std::size_t index, std::size_t rank) -> Outcome {
    std::vector<mpz_class> v(gl2->rank());
    if (index == kE11) v[kE11] = v[kE22] = 1;
    else v[index] = 1;
    GeneratedSubcomodule sub = generated_subcomodule(gl2, v);
    if (sub.lattice.rank() != rank)
      return failed("rank " + std::to_string(sub.lattice.rank()) + ", expected " + std::to_string(rank),
                    sub.lattice.basis().to_string());
    check_coassociative(*sub.module);
    check_counit(*sub.module);
    return {};
  };
  rec.run(S, "lemma.e_alpha", {}, [&] { return generated(kEAlpha, 3); });
  rec.run(S, "lemma.identity", {}, [&] { return generated(kE11, 1); });
}

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

RunMetadata make_metadata(const SuiteConfig& config) {
  RunMetadata meta;
  meta.version = kVersion;
  meta.timestamp = utc_timestamp();
  meta.gmp = gmp_version;
#ifdef __VERSION__
  meta.compiler = __VERSION__;
#endif
  meta.seed = config.seed;
  meta.grid = config.grid;
  meta.suites = config.suites.empty() ? suite_names() : config.suites;
  return meta;
}

VerificationReport run_suite(const SuiteConfig& config, const RecordSink& sink) {
  validate(config);
  VerificationReport report;
  report.meta = make_metadata(config);
  Recorder rec(config, report, sink);
  auto enabled = [&](const std::string& s) {
    return std::find(report.meta.suites.begin(), report.meta.suites.end(), s) != report.meta.suites.end();
  };
  using Fn = void (*)(Recorder&, const SuiteConfig&);
  const std::pair<const char*, Fn> table[] = {
      {"exactalg", exactalg_suite},   {"hopf", hopf_suite},       {"comodules", comodules_suite},
      {"witt", witt_suite},           {"nontriviality", nontriviality_suite}, {"cup", cup_suite},
      {"universal", universal_suite}, {"pairings", pairings_suite}, {"lemma", lemma_suite}};
  for (const auto& [name, fn] : table)
    if (enabled(name)) fn(rec, config);
  return report;
}

}  // namespace sl2coh::harness
