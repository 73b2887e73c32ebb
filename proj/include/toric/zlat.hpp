#pragma once

// Exact integer linear algebra: Smith normal form with transforms, lattice
// kernels, torsion of quotient groups and the invariant-factor criteria built
// on them.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/configuration.hpp"
#include "toric/errors.hpp"

namespace toric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigVec = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(const std::vector<IntVec>& cols,
                                std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows)
        fail(ErrorCode::InvalidArgument, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVec>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c)
        fail(ErrorCode::InvalidArgument, "row length mismatch");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const BigInt& x) { return x == 0; });
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorCode::InvalidArgument, "shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  BigVec apply(const BigVec& x) const {
    if (x.size() != cols_) fail(ErrorCode::InvalidArgument, "shape mismatch");
    BigVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * x[j];
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// U * M * V = D with U, V unimodular and D in Smith form.
struct SmithDecomposition {
  IntMatrix U, D, V;
  std::vector<BigInt> invariant_factors;

  std::size_t rank() const { return invariant_factors.size(); }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithDecomposition s{IntMatrix::identity(R), m, IntMatrix::identity(C), {}};
  IntMatrix& D = s.D;
  const std::size_t steps = std::min(R, C);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero |entry| of the trailing block, ties row-major
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      BigInt best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          const BigInt& x = D(i, j);
          if (x == 0) continue;
          BigInt ax = abs(x);
          if (!piv || ax < best) {
            best = ax;
            piv = {i, j};
          }
        }
      if (!piv) {
        for (std::size_t k = 0; k < t; ++k) s.invariant_factors.push_back(D(k, k));
        return s;
      }
      D.swap_rows(t, piv->first);
      s.U.swap_rows(t, piv->first);
      D.swap_cols(t, piv->second);
      s.V.swap_cols(t, piv->second);

      bool clean = true;
      const BigInt p = D(t, t);
      for (std::size_t i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        const BigInt k = -(D(i, t) / p);
        D.add_row(i, t, k);
        s.U.add_row(i, t, k);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        const BigInt k = -(D(t, j) / p);
        D.add_col(j, t, k);
        s.V.add_col(j, t, k);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // enforce the divisibility chain
      bool divides_all = true;
      for (std::size_t i = t + 1; i < R && divides_all; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (D(i, j) % p != 0) {
            D.add_row(t, i, 1);
            s.U.add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
    }
  }
  for (std::size_t k = 0; k < steps; ++k)
    if (D(k, k) != 0) s.invariant_factors.push_back(D(k, k));
  return s;
}

inline std::size_t rank(const IntMatrix& m) {
  return smith_normal_form(m).rank();
}

/// Row-style Hermite normal form of the lattice spanned by the rows; zero
/// rows are dropped. Canonical for the lattice.
inline std::vector<BigVec> hermite_rows(std::vector<BigVec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> piv;
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (!piv || abs(rows[i][c]) < abs(rows[*piv][c])))
          piv = i;
      if (!piv) break;
      std::swap(rows[r], rows[*piv]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const BigInt k = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= k * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        // reduce entries above the pivot into [0, pivot)
        BigInt k = rows[i][c] / rows[r][c];
        if (rows[i][c] - k * rows[r][c] < 0) k -= 1;
        if (k != 0)
          for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= k * rows[r][j];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

/// Lattice basis of ker_Z(M) = {x : M x = 0}, in Hermite form.
inline std::vector<BigVec> integer_kernel(const IntMatrix& m) {
  const auto s = smith_normal_form(m);
  std::vector<BigVec> basis;
  for (std::size_t j = s.rank(); j < m.cols(); ++j) {
    BigVec v(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = s.V(i, j);
    basis.push_back(std::move(v));
  }
  return hermite_rows(std::move(basis));
}

inline IntVec to_int64(const BigVec& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
      fail(ErrorCode::ResourceExceeded, "integer does not fit in 64 bits");
    r.push_back(static_cast<std::int64_t>(x));
  }
  return r;
}

/// Invariant factors > 1 of Z^m / <generators>.
inline std::vector<BigInt> torsion_invariants(const std::vector<IntVec>& gens,
                                              std::size_t m) {
  if (gens.empty()) return {};
  std::vector<BigInt> out;
  for (const auto& d : smith_normal_form(IntMatrix::from_columns(gens, m))
                           .invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

/// Free rank of Z^m / <generators>.
inline std::size_t quotient_free_rank(const std::vector<IntVec>& gens,
                                      std::size_t m) {
  if (gens.empty()) return m;
  return m - rank(IntMatrix::from_columns(gens, m));
}

/// gcd of the nonzero r x r minors, r = rank; computed as the product of the
/// invariant factors.
inline BigInt delta_r(const IntMatrix& m) {
  if (m.is_zero()) fail(ErrorCode::ZeroMatrix, "delta_r of the zero matrix");
  BigInt prod = 1;
  for (const auto& d : smith_normal_form(m).invariant_factors) prod *= d;
  return prod;
}

inline std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> ps;
  if (n < 0) n = -n;
  for (BigInt d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

struct HomogeneityResult {
  bool homogeneous = false;
  std::vector<Rational> witness;  // x_0 with <v_i, x_0> = 1 for all i
};

/// Solves <v_i, x> = 1 over Q by fraction-free elimination on [A^T | 1].
inline HomogeneityResult is_homogeneous(const PointConfiguration& config) {
  const std::size_t n = config.n(), s = config.s();
  std::vector<BigVec> rows(s, BigVec(n + 1));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = config[i][j];
    rows[i][n] = 1;
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < s; ++c) {
    std::optional<std::size_t> piv;
    for (std::size_t i = r; i < s; ++i)
      if (rows[i][c] != 0) {
        piv = i;
        break;
      }
    if (!piv) continue;
    std::swap(rows[r], rows[*piv]);
    for (std::size_t i = r + 1; i < s; ++i) {
      if (rows[i][c] == 0) continue;
      const BigInt a = rows[r][c], b = rows[i][c];
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
      BigInt g = 0;
      for (const auto& x : rows[i]) g = gcd(g, x);
      if (g > 1)
        for (auto& x : rows[i]) x /= g;
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < s; ++i)
    if (rows[i][n] != 0) return {};

  HomogeneityResult res;
  res.homogeneous = true;
  res.witness.assign(n, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    Rational acc(rows[k][n]);
    for (std::size_t j = c + 1; j < n; ++j) acc -= Rational(rows[k][j]) * res.witness[j];
    res.witness[c] = acc / Rational(rows[k][c]);
  }
  return res;
}

/// Linearly independent vectors of Z^{n+1} form a Hilbert basis iff the
/// quotient Z^{n+1}/ZB' is torsion-free.
inline bool hilbert_basis_independent(const std::vector<IntVec>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t m = vectors.front().size();
  if (rank(IntMatrix::from_columns(vectors, m)) != vectors.size())
    fail(ErrorCode::NotIndependent, "vectors are linearly dependent");
  return torsion_invariants(vectors, m).empty();
}

/// True iff q-1 is not a zero divisor of Z^{n+1}/ZB, i.e. no prime dividing
/// an invariant factor of the lifted configuration divides q-1.
inline bool saturation_equality_criterion(const PointConfiguration& config,
                                          std::uint64_t q) {
  if (q < 2) fail(ErrorCode::InvalidArgument, "field size must be >= 2");
  const auto b = config.lifted();
  const BigInt qm1 = q - 1;
  for (const auto& d : torsion_invariants(b.vectors(), b.n()))
    for (const auto& p : prime_factors(d))
      if (qm1 % p == 0) return false;
  return true;
}

}  // namespace toric
