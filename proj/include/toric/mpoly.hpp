#pragma once

// Sparse multivariate polynomials over F_q with pluggable monomial orders.
// Terms are kept sorted in descending order under the ring's order.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "toric/errors.hpp"
#include "toric/gf.hpp"

namespace toric {

inline constexpr std::size_t kMaxVars = 32;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint32_t mask = 0;  // bit i set iff e[i] > 0

  static Monomial from_exponents(const std::vector<std::int64_t>& exps) {
    if (exps.size() > kMaxVars)
      fail(ErrorCode::InvalidArgument, "too many variables");
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 0xFFFF)
        fail(ErrorCode::InvalidArgument, "exponent out of range");
      m.e[i] = static_cast<std::uint16_t>(exps[i]);
    }
    m.refresh();
    return m;
  }

  static Monomial variable(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    m.refresh();
    return m;
  }

  void refresh() {
    deg = 0;
    mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      deg += e[i];
      if (e[i]) mask |= (1u << i);
    }
  }

  bool divides(const Monomial& o) const {
    if (mask & ~o.mask) return false;
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  bool coprime(const Monomial& o) const { return (mask & o.mask) == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const std::uint32_t x = std::uint32_t(e[i]) + o.e[i];
      if (x > 0xFFFF) fail(ErrorCode::ResourceExceeded, "exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(x);
    }
    r.deg = deg + o.deg;
    r.mask = mask | o.mask;
    return r;
  }

  /// this / o, assuming o divides this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    r.refresh();
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    r.refresh();
    return r;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
};

enum class OrderKind { Lex, Grevlex };

/// Product of blocks, each lex or grevlex, applied after an optional variable
/// permutation. A two-block order eliminates its front block.
class MonomialOrder {
 public:
  struct Block {
    std::size_t size;
    OrderKind kind;
    bool operator==(const Block&) const = default;
  };

  MonomialOrder() = default;
  MonomialOrder(std::vector<Block> blocks, std::vector<std::size_t> perm = {})
      : blocks_(std::move(blocks)), perm_(std::move(perm)) {}

  static MonomialOrder lex(std::size_t n) { return {{{n, OrderKind::Lex}}}; }
  static MonomialOrder grevlex(std::size_t n) {
    return {{{n, OrderKind::Grevlex}}};
  }
  /// Front block eliminated; each block ordered by `kind`.
  static MonomialOrder elimination(std::size_t front, std::size_t n,
                                   OrderKind kind = OrderKind::Grevlex) {
    return {{{front, kind}, {n - front, kind}}};
  }

  std::size_t nvars() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size;
    return n;
  }
  const std::vector<Block>& blocks() const { return blocks_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  /// Order with one extra front block of `size` variables (grevlex) and the
  /// original blocks shifted behind it. Permutations are not supported here.
  MonomialOrder with_front_block(std::size_t size) const {
    std::vector<Block> b{{size, OrderKind::Grevlex}};
    b.insert(b.end(), blocks_.begin(), blocks_.end());
    return MonomialOrder(std::move(b));
  }

  /// <0, 0, >0 like strcmp; larger means bigger in the order.
  int compare(const Monomial& a, const Monomial& b) const {
    std::size_t start = 0;
    for (const auto& blk : blocks_) {
      int c = blk.kind == OrderKind::Lex ? cmp_lex(a, b, start, blk.size)
                                         : cmp_grevlex(a, b, start, blk.size);
      if (c != 0) return c;
      start += blk.size;
    }
    return 0;
  }

  std::string describe() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += ">";
      s += blocks_[i].kind == OrderKind::Lex ? "lex" : "grevlex";
      s += "(" + std::to_string(blocks_[i].size) + ")";
    }
    return s;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  std::uint16_t at(const Monomial& m, std::size_t pos) const {
    return m.e[perm_.empty() ? pos : perm_[pos]];
  }
  int cmp_lex(const Monomial& a, const Monomial& b, std::size_t s,
              std::size_t n) const {
    for (std::size_t i = s; i < s + n; ++i) {
      const auto x = at(a, i), y = at(b, i);
      if (x != y) return x > y ? 1 : -1;
    }
    return 0;
  }
  int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t s,
                  std::size_t n) const {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = s; i < s + n; ++i) {
      da += at(a, i);
      db += at(b, i);
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = s + n; i-- > s;) {
      const auto x = at(a, i), y = at(b, i);
      if (x != y) return x < y ? 1 : -1;
    }
    return 0;
  }

  std::vector<Block> blocks_;
  std::vector<std::size_t> perm_;
};

/// Coefficient field, variable names and monomial order.
class PolyRing {
 public:
  PolyRing(FiniteField field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
    if (names_.size() > kMaxVars)
      fail(ErrorCode::ResourceExceeded,
           "ring needs " + std::to_string(names_.size()) + " variables, limit is " +
               std::to_string(kMaxVars));
    if (order_.nvars() != names_.size())
      fail(ErrorCode::InvalidArgument, "order arity differs from variable count");
  }

  static std::shared_ptr<const PolyRing> make(FiniteField field,
                                              std::vector<std::string> names,
                                              MonomialOrder order) {
    return std::make_shared<const PolyRing>(std::move(field), std::move(names),
                                            std::move(order));
  }

  /// K[t1..ts] with grevlex.
  static std::shared_ptr<const PolyRing> standard(FiniteField field, std::size_t s,
                                                  std::string_view prefix = "t") {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= s; ++i) names.push_back(std::string(prefix) + std::to_string(i));
    return make(std::move(field), std::move(names), MonomialOrder::grevlex(s));
  }

  const FiniteField& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const PolyRing& o) const {
    return this == &o || (field_.same_field(o.field_) && names_ == o.names_ &&
                          order_ == o.order_);
  }

 private:
  FiniteField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial m;
  Code c;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Code c) {
    Polynomial p(std::move(ring));
    if (c) p.t_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, Code c = 1) {
    Polynomial p(std::move(ring));
    if (c) p.t_.push_back({m, c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    return monomial(std::move(ring), Monomial::variable(i));
  }
  /// x^a - x^b (zero when a == b).
  static Polynomial binomial(RingPtr ring, const Monomial& a, const Monomial& b) {
    const FiniteField& f = ring->field();
    return from_terms(ring, {{a, 1}, {b, f.neg(1)}});
  }

  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const auto& ord = p.ring_->order();
    const auto& f = p.ring_->field();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.compare(a.m, b.m) > 0;
    });
    for (auto& t : terms) {
      if (!p.t_.empty() && p.t_.back().m == t.m) {
        p.t_.back().c = f.add(p.t_.back().c, t.c);
        if (p.t_.back().c == 0) p.t_.pop_back();
      } else if (t.c != 0) {
        p.t_.push_back(t);
      }
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const Term& lead() const { return t_.front(); }
  const Monomial& lead_monomial() const { return t_.front().m; }
  Code lead_coefficient() const { return t_.front().c; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.deg);
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.m.deg != t_.front().m.deg) return false;
    return true;
  }

  bool is_binomial() const { return t_.size() <= 2; }

  bool uses_variable(std::size_t i) const {
    for (const auto& t : t_)
      if (t.m.e[i]) return true;
    return false;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.c = field().neg(t.c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> acc;
    acc.reserve(t_.size() * o.t_.size());
    const auto& f = field();
    for (const auto& a : t_)
      for (const auto& b : o.t_) acc.push_back({a.m * b.m, f.mul(a.c, b.c)});
    return from_terms(ring_, std::move(acc));
  }

  Polynomial scaled(Code c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.t_) t.c = field().mul(t.c, c);
    return r;
  }

  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.m = t.m * m;
    return r;
  }

  /// Leading coefficient scaled to 1.
  Polynomial monic() const {
    if (is_zero() || lead_coefficient() == 1) return *this;
    return scaled(field().inv(lead_coefficient()));
  }

  /// this - c * m * g, all in one merge pass.
  Polynomial sub_scaled_shift(Code c, const Monomial& m, const Polynomial& g) const {
    const auto& f = field();
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.t_.reserve(t_.size() + g.t_.size());
    std::size_t i = 0, j = 0;
    const Code nc = f.neg(c);
    while (i < t_.size() || j < g.t_.size()) {
      if (j == g.t_.size()) {
        r.t_.push_back(t_[i++]);
        continue;
      }
      const Monomial gm = g.t_[j].m * m;
      if (i == t_.size()) {
        r.t_.push_back({gm, f.mul(nc, g.t_[j].c)});
        ++j;
        continue;
      }
      const int cmp = ord.compare(t_[i].m, gm);
      if (cmp > 0) {
        r.t_.push_back(t_[i++]);
      } else if (cmp < 0) {
        r.t_.push_back({gm, f.mul(nc, g.t_[j].c)});
        ++j;
      } else {
        const Code s = f.add(t_[i].c, f.mul(nc, g.t_[j].c));
        if (s) r.t_.push_back({gm, s});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Code evaluate(const std::vector<Code>& point) const {
    const auto& f = field();
    Code acc = 0;
    for (const auto& t : t_) {
      Code v = t.c;
      for (std::size_t i = 0; i < point.size() && v; ++i)
        if (t.m.e[i]) v = f.mul(v, f.pow(point[i], t.m.e[i]));
      acc = f.add(acc, v);
    }
    return acc;
  }

  /// Same terms placed in another ring; `var_map[i]` is the target index of
  /// source variable i (or npos when the variable must not occur).
  Polynomial mapped(RingPtr target, const std::vector<std::size_t>& var_map) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        if (!t.m.e[i]) continue;
        if (var_map[i] == npos)
          fail(ErrorCode::RingMismatch, "variable " + ring_->names()[i] +
                                            " has no image in target ring");
        m.e[var_map[i]] = t.m.e[i];
      }
      m.refresh();
      out.push_back({m, t.c});
    }
    return from_terms(std::move(target), std::move(out));
  }

  /// Re-sorted under another ring with identical variables.
  Polynomial in_ring(RingPtr target) const {
    if (target->nvars() != ring_->nvars() ||
        !target->field().same_field(ring_->field()))
      fail(ErrorCode::RingMismatch, "rings are not compatible");
    return from_terms(std::move(target), t_);
  }

  /// Removes and returns the leading term.
  Term pop_lead() {
    Term t = t_.front();
    t_.erase(t_.begin());
    return t;
  }

  /// Appends a term smaller than every present term (caller's guarantee).
  void append_smaller(const Term& t) { t_.push_back(t); }

  bool operator==(const Polynomial& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
  }

  void check_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
      fail(ErrorCode::RingMismatch, "operands live in different rings");
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  const FiniteField& field() const { return ring_->field(); }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    return sub_scaled_shift(subtract ? 1 : field().neg(1), Monomial{}, o);
  }

  RingPtr ring_;
  std::vector<Term> t_;
};

// ---------------------------------------------------------------------------
// Text form: "c*t1^a1*...*ts^as + ..." in descending order. Prime-field
// coefficients are integers in [0,p); extension coefficients are written as
// [c0,c1,...,c_{u-1}], entry i being the coordinate on x^i in F_p[x]/(f).

inline std::string coefficient_to_string(const FiniteField& f, Code c) {
  if (f.u() == 1) return std::to_string(c);
  std::string s = "[";
  for (std::uint32_t i = 0; i < f.u(); ++i) {
    if (i) s += ",";
    s += std::to_string(c % f.p());
    c /= f.p();
  }
  return s + "]";
}

inline std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += " + ";
    s += coefficient_to_string(ring.field(), t.c);
    const auto mono = monomial_to_string(ring, t.m);
    if (!mono.empty()) s += "*" + mono;
  }
  return s;
}

/// Parses the text form produced by to_string.
inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  const auto& f = ring->field();
  auto bad = [&](const std::string& why) -> Polynomial {
    fail(ErrorCode::ParseError, why + " in '" + std::string(text) + "'");
  };
  std::vector<Term> terms;
  std::string src(text);
  src.erase(std::remove_if(src.begin(), src.end(), ::isspace), src.end());
  if (src == "0") return Polynomial(ring);
  if (src.empty() || src.back() == '+') return bad("empty term");
  std::size_t pos = 0;
  while (pos < src.size()) {
    std::size_t end = src.find('+', pos);
    // '+' never appears inside [..] coefficient lists
    std::string term = src.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? src.size() : end + 1;
    if (term.empty()) return bad("empty term");
    std::vector<std::string> factors;
    std::size_t a = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= term.size(); ++i) {
      if (i < term.size() && term[i] == '[') ++depth;
      if (i < term.size() && term[i] == ']') --depth;
      if (i == term.size() || (term[i] == '*' && depth == 0)) {
        factors.push_back(term.substr(a, i - a));
        a = i + 1;
      }
    }
    Code c = 1;
    Monomial m;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const std::string& fac = factors[k];
      if (fac.empty()) return bad("empty factor");
      if (k == 0 && (std::isdigit(static_cast<unsigned char>(fac[0])) || fac[0] == '[')) {
        if (fac[0] == '[') {
          if (fac.back() != ']') return bad("unterminated coefficient");
          std::stringstream ss(fac.substr(1, fac.size() - 2));
          std::string digit;
          Code code = 0, mul = 1;
          std::uint32_t idx = 0;
          while (std::getline(ss, digit, ',')) {
            const long v = std::stol(digit);
            if (v < 0 || v >= static_cast<long>(f.p()) || idx >= f.u())
              return bad("coefficient digit out of range");
            code += static_cast<Code>(v) * mul;
            mul *= f.p();
            ++idx;
          }
          c = code;
        } else {
          const long v = std::stol(fac);
          if (v < 0 || v >= static_cast<long>(f.p())) return bad("coefficient out of range");
          c = static_cast<Code>(v);
        }
        continue;
      }
      const auto caret = fac.find('^');
      const std::string name = fac.substr(0, caret);
      const long power = caret == std::string::npos ? 1 : std::stol(fac.substr(caret + 1));
      const auto it = std::find(ring->names().begin(), ring->names().end(), name);
      if (it == ring->names().end()) return bad("unknown variable '" + name + "'");
      const std::size_t var = static_cast<std::size_t>(it - ring->names().begin());
      m.e[var] = static_cast<std::uint16_t>(m.e[var] + power);
    }
    m.refresh();
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace toric
