#include "sl2coh/exactalg/integer_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "sl2coh/errors.hpp"
#include "sl2coh/exactalg/scalar.hpp"

namespace sl2coh {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows,
                                       std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntegerMatrix::is_zero_row(std::size_t i) const {
  auto r = row(i);
  return std::all_of(r.begin(), r.end(), [](const mpz_class& v) { return v == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

IntegerMatrix IntegerMatrix::top_rows(std::size_t n) const {
  IntegerMatrix m(std::min(n, rows_), cols_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

void IntegerMatrix::append_row(std::span<const mpz_class> r) {
  if (r.size() != cols_) throw ShapeMismatch("append_row: length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product: inner dimensions differ");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpz_class& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << ']';
    if (i + 1 < rows_) os << '\n';
  }
  return os.str();
}

namespace {

// rows (r, s) <- [[x, y], [z, w]] * (rows r, s); the 2x2 block must be unimodular.
void combine_rows(IntegerMatrix& m, std::size_t r, std::size_t s, const mpz_class& x,
                  const mpz_class& y, const mpz_class& z, const mpz_class& w) {
  mpz_class nr, ns;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    nr = x * m(r, j) + y * m(s, j);
    ns = z * m(r, j) + w * m(s, j);
    m(r, j) = nr;
    m(s, j) = ns;
  }
}

void axpy_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  // row dst -= q * row src
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_submul(m(dst, j).get_mpz_t(), q.get_mpz_t(), m(src, j).get_mpz_t());
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteResult hnf(const IntegerMatrix& a) {
  HermiteResult res{a, IntegerMatrix::identity(a.rows()), 0, {}};
  IntegerMatrix& h = res.form;
  IntegerMatrix& u = res.transform;
  std::size_t r = 0;
  mpz_class g, s, t, zr, zs;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      if (h(r, c) == 0) {
        h.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(),
                 h(i, c).get_mpz_t());
      mpz_divexact(zr.get_mpz_t(), h(i, c).get_mpz_t(), g.get_mpz_t());
      mpz_divexact(zs.get_mpz_t(), h(r, c).get_mpz_t(), g.get_mpz_t());
      // [[s, t], [-b/g, a/g]] has determinant (s a + t b) / g = 1.
      mpz_class nzr = -zr;
      mpz_class ss = s, tt = t, zzs = zs;
      combine_rows(h, r, i, ss, tt, nzr, zzs);
      combine_rows(u, r, i, ss, tt, nzr, zzs);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    mpz_class q;
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      axpy_row(h, i, r, q);
      axpy_row(u, i, r, q);
    }
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<mpz_class> smith_invariants(const IntegerMatrix& a) {
  IntegerMatrix m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> out;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, x), m(i, y));
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry in the trailing block becomes the pivot
    auto move_min_to_pivot = [&]() {
      bool found = false;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (!found || abs(m(i, j)) < abs(m(bi, bj)))) {
            found = true;
            bi = i;
            bj = j;
          }
      if (!found) return false;
      m.swap_rows(t, bi);
      swap_cols(t, bj);
      return true;
    };
    if (!move_min_to_pivot()) break;
    while (true) {
      bool clean = true;
      mpz_class q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
        axpy_row(m, i, t, q);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t i = 0; i < rows; ++i)
          mpz_submul(m(i, j).get_mpz_t(), q.get_mpz_t(), m(i, t).get_mpz_t());
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot();
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            for (std::size_t k = 0; k < cols; ++k) m(t, k) += m(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.push_back(abs(m(t, t)));
  }
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& a) {
  HermiteResult h = hnf(a.transpose());
  const std::size_t n = a.cols();
  IntegerMatrix ker(0, n);
  for (std::size_t i = h.rank; i < n; ++i) ker.append_row(h.transform.row(i));
  if (ker.rows() == 0) return ker;
  HermiteResult reduced = hnf(ker);
  return reduced.form.top_rows(reduced.rank);
}

ModpEchelon rref_mod(const IntegerMatrix& a, const mpz_class& p) {
  if (!is_prime(p)) throw InvalidArgument("modulus " + p.get_str() + " is not prime");
  ModpEchelon e{a, {}};
  IntegerMatrix& m = e.form;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
  std::size_t r = 0;
  mpz_class inv, f;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    mpz_invert(inv.get_mpz_t(), m(r, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      m(r, j) *= inv;
      mpz_fdiv_r(m(r, j).get_mpz_t(), m(r, j).get_mpz_t(), p.get_mpz_t());
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_submul(m(i, j).get_mpz_t(), f.get_mpz_t(), m(r, j).get_mpz_t());
        mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
      }
    }
    e.pivot_columns.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank_mod(const IntegerMatrix& a, const mpz_class& p) { return rref_mod(a, p).rank(); }

IntegerMatrix kernel_mod(const IntegerMatrix& a, const mpz_class& p) {
  ModpEchelon e = rref_mod(a, p);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  IntegerMatrix ker(0, n);
  std::vector<mpz_class> v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), mpz_class(0));
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivot_columns.size(); ++k) {
      mpz_class x = -e.form(k, free);
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
      v[e.pivot_columns[k]] = x;
    }
    ker.append_row(v);
  }
  return ker;
}

}  // namespace sl2coh
