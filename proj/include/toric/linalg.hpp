#pragma once

// Row reduction over F_q.

#include <cstdint>
#include <vector>

#include "toric/gf.hpp"

namespace toric {

/// Incrementally built row space; each stored row is monic at its pivot and
/// zero at the pivots of earlier rows.
class EchelonBasis {
 public:
  EchelonBasis(FiniteField f, std::size_t width) : f_(std::move(f)), width_(width) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<std::vector<Code>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Entry updates performed so far (rank * width per reduction).
  std::uint64_t work() const { return work_; }

  /// Reduces v in place against the stored rows.
  void reduce(std::vector<Code>& v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Code c = v[pivots_[k]];
      if (c) axpy(v, f_.neg(c), rows_[k], pivots_[k]);
    }
  }

  bool in_span(std::vector<Code> v) {
    reduce(v);
    for (Code c : v)
      if (c) return false;
    return true;
  }

  /// Adds v; false if v already lies in the span.
  bool insert(std::vector<Code> v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    const Code inv = f_.inv(v[piv]);
    if (inv != 1)
      for (std::size_t j = piv; j < width_; ++j) v[j] = f_.mul(v[j], inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

 private:
  // v += c * row, touching columns from `from` on (row is zero before it).
  void axpy(std::vector<Code>& v, Code c, const std::vector<Code>& row, std::size_t from) {
    work_ += width_ - from;
    if (f_.is_prime_field()) {
      const std::uint64_t p = f_.p();
      for (std::size_t j = from; j < width_; ++j)
        if (row[j]) v[j] = static_cast<Code>((v[j] + static_cast<std::uint64_t>(c) * row[j]) % p);
    } else {
      for (std::size_t j = from; j < width_; ++j)
        if (row[j]) v[j] = f_.add(v[j], f_.mul(c, row[j]));
    }
  }

  FiniteField f_;
  std::size_t width_;
  std::vector<std::vector<Code>> rows_;
  std::vector<std::size_t> pivots_;
  std::uint64_t work_ = 0;
};

/// Rank of a list of equal-length vectors.
inline std::size_t rank_over(const FiniteField& f, const std::vector<std::vector<Code>>& rows) {
  if (rows.empty()) return 0;
  EchelonBasis b(f, rows.front().size());
  for (const auto& r : rows) b.insert(r);
  return b.rank();
}

}  // namespace toric
