#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using IntVec = std::vector<std::int64_t>;

/// Exponent vectors v_1..v_s in Z^n of the Laurent monomials y^{v_i}.
class PointConfiguration {
 public:
  PointConfiguration() = default;

  PointConfiguration(std::size_t n, std::vector<IntVec> vectors)
      : n_(n), v_(std::move(vectors)) {
    if (v_.empty())
      fail(ErrorCode::InvalidArgument, "configuration needs at least one vector");
    for (const auto& v : v_)
      if (v.size() != n_)
        fail(ErrorCode::InvalidArgument,
             "exponent vector length differs from ambient dimension");
  }

  /// Infers n from the first vector.
  explicit PointConfiguration(const std::vector<IntVec>& vectors)
      : PointConfiguration(vectors.empty() ? 0 : vectors.front().size(), vectors) {}

  /// {e_1, ..., e_s}: parameterizes the projective torus in P^{s-1}.
  static PointConfiguration torus(std::size_t s) {
    std::vector<IntVec> v(s, IntVec(s, 0));
    for (std::size_t i = 0; i < s; ++i) v[i][i] = 1;
    return PointConfiguration(s, std::move(v));
  }

  std::size_t n() const { return n_; }
  std::size_t s() const { return v_.size(); }
  const std::vector<IntVec>& vectors() const { return v_; }
  const IntVec& operator[](std::size_t i) const { return v_[i]; }

  bool has_negative_exponent() const {
    for (const auto& v : v_)
      for (auto x : v)
        if (x < 0) return true;
    return false;
  }

  IntVec positive_part(std::size_t i) const {
    IntVec r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = v_[i][j] > 0 ? v_[i][j] : 0;
    return r;
  }

  IntVec negative_part(std::size_t i) const {
    IntVec r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = v_[i][j] < 0 ? -v_[i][j] : 0;
    return r;
  }

  /// Columns (v_i, 1).
  PointConfiguration lifted() const {
    std::vector<IntVec> w;
    w.reserve(v_.size());
    for (const auto& v : v_) {
      IntVec x = v;
      x.push_back(1);
      w.push_back(std::move(x));
    }
    return PointConfiguration(n_ + 1, std::move(w));
  }

  /// Generators v_i - v_1 of the lattice L.
  std::vector<IntVec> differences() const {
    std::vector<IntVec> d;
    for (std::size_t i = 1; i < v_.size(); ++i) {
      IntVec x(n_);
      for (std::size_t j = 0; j < n_; ++j) x[j] = v_[i][j] - v_[0][j];
      d.push_back(std::move(x));
    }
    return d;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) out += ", ";
      out += "(";
      for (std::size_t j = 0; j < n_; ++j) {
        if (j) out += ",";
        out += std::to_string(v_[i][j]);
      }
      out += ")";
    }
    return out + "}";
  }

  bool operator==(const PointConfiguration&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<IntVec> v_;
};

}  // namespace toric
