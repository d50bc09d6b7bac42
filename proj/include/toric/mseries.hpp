#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/error.hpp"
#include "toric/integer.hpp"
#include "toric/series.hpp"

namespace toric {

/// All monomials of total degree <= max_degree in a fixed list of variables,
/// grouped by degree. Exponent vectors are encoded in mixed radix
/// (max_degree + 1) so that the key of a product monomial is the sum of the
/// factor keys.
class MonomialLayout {
public:
  MonomialLayout(std::vector<std::string> vars, int max_degree) : vars_(std::move(vars)), max_degree_(max_degree) {
    if (max_degree < 0) throw series_error("negative truncation degree");
    const std::size_t k = vars_.size();
    std::uint64_t radix_pow = 1;
    for (std::size_t i = 0; i < k; ++i) {
      radix_pow *= static_cast<std::uint64_t>(max_degree + 1);
      if (radix_pow > (std::uint64_t{1} << 26)) throw series_error("truncation budget too large for this many variables");
    }
    index_of_key_.assign(radix_pow, -1);

    std::vector<int> e(k, 0);
    for (int d = 0; d <= max_degree; ++d) {
      degree_start_.push_back(static_cast<int>(count()));
      enumerate(e, 0, d);
    }
    degree_start_.push_back(static_cast<int>(count()));
  }

  /// Shared layout for (vars, max_degree).
  static std::shared_ptr<const MonomialLayout> get(const std::vector<std::string>& vars, int max_degree) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<std::string>, int>, std::shared_ptr<const MonomialLayout>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{vars, max_degree}];
    if (!slot) slot = std::make_shared<const MonomialLayout>(vars, max_degree);
    return slot;
  }

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t var_count() const noexcept { return vars_.size(); }
  int max_degree() const noexcept { return max_degree_; }
  std::size_t count() const noexcept { return degrees_.size(); }

  std::span<const int> exponents(std::size_t idx) const {
    return {exps_.data() + idx * vars_.size(), vars_.size()};
  }
  int degree(std::size_t idx) const { return degrees_[idx]; }
  std::uint32_t key(std::size_t idx) const { return keys_[idx]; }
  /// Index of the monomial with this key, or -1 when beyond the truncation.
  int index_of_key(std::uint64_t key) const {
    return key < index_of_key_.size() ? index_of_key_[key] : -1;
  }
  /// Monomial indices of degree d occupy [degree_begin(d), degree_begin(d + 1)).
  int degree_begin(int d) const { return degree_start_[d]; }

  /// Index of an exponent vector, or -1 if its degree exceeds the truncation.
  int index_of(std::span<const int> e) const {
    if (e.size() != vars_.size()) throw series_error("exponent tuple has the wrong length");
    int total = 0;
    std::uint64_t key = 0, radix = 1;
    for (int x : e) {
      if (x < 0) throw series_error("negative exponent");
      total += x;
      if (total > max_degree_) return -1;
      key += radix * static_cast<std::uint64_t>(x);
      radix *= static_cast<std::uint64_t>(max_degree_ + 1);
    }
    return index_of_key(key);
  }

  bool operator==(const MonomialLayout& o) const { return vars_ == o.vars_ && max_degree_ == o.max_degree_; }

private:
  void enumerate(std::vector<int>& e, std::size_t var, int remaining) {
    if (var == e.size()) {
      if (remaining == 0) add(e);
      return;
    }
    if (var + 1 == e.size()) {
      e[var] = remaining;
      add(e);
      e[var] = 0;
      return;
    }
    for (int x = remaining; x >= 0; --x) {
      e[var] = x;
      enumerate(e, var + 1, remaining - x);
    }
    e[var] = 0;
  }

  void add(const std::vector<int>& e) {
    std::uint64_t key = 0, radix = 1;
    int d = 0;
    for (int x : e) {
      key += radix * static_cast<std::uint64_t>(x);
      radix *= static_cast<std::uint64_t>(max_degree_ + 1);
      d += x;
    }
    index_of_key_[key] = static_cast<int>(count());
    keys_.push_back(static_cast<std::uint32_t>(key));
    degrees_.push_back(d);
    exps_.insert(exps_.end(), e.begin(), e.end());
  }

  std::vector<std::string> vars_;
  int max_degree_;
  std::vector<int> exps_;
  std::vector<int> degrees_;
  std::vector<std::uint32_t> keys_;
  std::vector<int> degree_start_;
  std::vector<int> index_of_key_;
};

/// Multivariate power series over the rationals, truncated at a total degree
/// shared by all variables (auxiliary ones included).
class MSeries {
public:
  MSeries(std::vector<std::string> vars, int max_degree)
      : MSeries(MonomialLayout::get(vars, max_degree)) {}
  explicit MSeries(std::shared_ptr<const MonomialLayout> layout)
      : layout_(std::move(layout)), c_(layout_->count()) {}

  static MSeries constant(std::shared_ptr<const MonomialLayout> layout, const Rational& v) {
    MSeries s(std::move(layout));
    s.c_[0] = v;
    return s;
  }

  /// c * prod vars^e
  static MSeries monomial(std::shared_ptr<const MonomialLayout> layout, std::span<const int> e,
                          const Rational& c = Rational(1)) {
    MSeries s(std::move(layout));
    const int idx = s.layout_->index_of(e);
    if (idx >= 0) s.c_[idx] = c;
    return s;
  }

  /// The variable with index i.
  static MSeries var(std::shared_ptr<const MonomialLayout> layout, std::size_t i) {
    std::vector<int> e(layout->var_count(), 0);
    e.at(i) = 1;
    return monomial(std::move(layout), e);
  }

  /// Embeds a univariate series in variable i.
  static MSeries embed(std::shared_ptr<const MonomialLayout> layout, std::size_t i, const RationalSeries& f) {
    MSeries s(std::move(layout));
    std::vector<int> e(s.layout_->var_count(), 0);
    for (int k = 0; k <= f.order() && k <= s.max_degree(); ++k) {
      e.at(i) = k;
      s.c_[s.layout_->index_of(e)] = f[k];
    }
    return s;
  }

  const std::shared_ptr<const MonomialLayout>& layout() const noexcept { return layout_; }
  int max_degree() const noexcept { return layout_->max_degree(); }
  std::size_t var_count() const noexcept { return layout_->var_count(); }

  const Rational& at_index(std::size_t idx) const { return c_.at(idx); }
  Rational& at_index(std::size_t idx) { return c_.at(idx); }

  /// Coefficient of prod vars^e; throws when e lies beyond the truncation.
  const Rational& coeff(std::span<const int> e) const {
    const int idx = layout_->index_of(e);
    if (idx < 0) throw series_error("exponent beyond the truncation degree");
    return c_[idx];
  }
  const Rational& coeff(std::initializer_list<int> e) const {
    return coeff(std::span<const int>(e.begin(), e.size()));
  }

  MSeries& operator+=(const MSeries& o) {
    same_layout(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  MSeries& operator-=(const MSeries& o) {
    same_layout(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  MSeries& operator*=(const Rational& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
  friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
  friend MSeries operator-(MSeries a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend MSeries operator*(MSeries a, const Rational& k) { return a *= k; }
  friend MSeries operator*(const Rational& k, MSeries a) { return a *= k; }
  friend MSeries operator+(MSeries a, const Rational& k) {
    a.c_[0] += k;
    return a;
  }
  friend MSeries operator+(const Rational& k, MSeries a) { return std::move(a) + k; }
  friend MSeries operator-(MSeries a, const Rational& k) {
    a.c_[0] -= k;
    return a;
  }
  friend MSeries operator-(const Rational& k, MSeries a) { return -std::move(a) + k; }

  friend MSeries operator*(const MSeries& a, const MSeries& b) {
    a.same_layout(b);
    MSeries out(a.layout_);
    const auto bnz = b.nonzero_by_degree();
    mpq_class tmp;
    const MonomialLayout& L = *a.layout_;
    const int D = L.max_degree();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      const int room = D - L.degree(i);
      for (int d = 0; d <= room; ++d) {
        for (int j : bnz[d]) {
          const int idx = L.index_of_key(std::uint64_t{L.key(i)} + L.key(j));
          mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
          mpq_add(out.c_[idx].get_mpq_t(), out.c_[idx].get_mpq_t(), tmp.get_mpq_t());
        }
      }
    }
    return out;
  }
  MSeries& operator*=(const MSeries& o) { return *this = *this * o; }

  friend bool operator==(const MSeries& a, const MSeries& b) {
    return *a.layout_ == *b.layout_ && a.c_ == b.c_;
  }

  /// Indices of nonzero coefficients, bucketed by degree.
  std::vector<std::vector<int>> nonzero_by_degree() const {
    std::vector<std::vector<int>> out(max_degree() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) out[layout_->degree(i)].push_back(static_cast<int>(i));
    }
    return out;
  }

  /// Homogeneous component of degree d.
  MSeries component(int d) const {
    MSeries out(layout_);
    if (d < 0 || d > max_degree()) return out;
    for (int i = layout_->degree_begin(d); i < layout_->degree_begin(d + 1); ++i) out.c_[i] = c_[i];
    return out;
  }

  /// Exact division by a monomial; every surviving term must be divisible.
  /// The result is truncated at max_degree - deg(monomial).
  MSeries divided_by_monomial(std::span<const int> e) const {
    int shift = 0;
    for (int x : e) shift += x;
    if (shift > max_degree()) throw series_error("monomial exceeds the truncation degree");
    MSeries out(MonomialLayout::get(layout_->vars(), max_degree() - shift));
    std::vector<int> q(var_count());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto ex = layout_->exponents(i);
      bool divisible = true;
      for (std::size_t v = 0; v < ex.size(); ++v) {
        q[v] = ex[v] - e[v];
        if (q[v] < 0) divisible = false;
      }
      if (!divisible) throw series_error("series is not divisible by the monomial");
      const int idx = out.layout_->index_of(q);
      if (idx >= 0) out.c_[idx] = c_[i];
    }
    return out;
  }

  /// Same coefficients in a layout with a smaller truncation degree.
  MSeries truncated(int max_degree) const {
    if (max_degree > this->max_degree()) throw series_error("cannot extend a truncated series");
    MSeries out(MonomialLayout::get(layout_->vars(), max_degree));
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = c_[layout_->index_of(out.layout_->exponents(i))];
    return out;
  }

  /// Coefficients keyed by exponent vector after replacing var^2 by a new
  /// variable, e.g. s^2 -> z for s = sqrt(z). Throws if an odd power of var
  /// has a nonzero coefficient. A coefficient is exact when its pre-image
  /// monomial lies within the original truncation, which holds for every key
  /// returned.
  std::map<std::vector<int>, Rational> substitute_square(std::size_t var) const {
    std::map<std::vector<int>, Rational> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const auto ex = layout_->exponents(i);
      if (ex[var] % 2 == 1) {
        if (c_[i] != 0) throw series_error("odd power of " + layout_->vars()[var] + " survives");
        continue;
      }
      std::vector<int> key(ex.begin(), ex.end());
      key[var] /= 2;
      out.emplace(std::move(key), c_[i]);
    }
    return out;
  }

private:
  void same_layout(const MSeries& o) const {
    if (!(*layout_ == *o.layout_)) throw series_error("series live in different variable/truncation layouts");
  }

  std::shared_ptr<const MonomialLayout> layout_;
  std::vector<Rational> c_;

  friend class GradedSolver;
};

/// Degree-by-degree solver for the recurrences behind inverse, sqrt and the
/// exponential family: block d of the result is a function of lower blocks.
class GradedSolver {
public:
  /// out_d += sum_{k=kmin..d} weight(k) * a_k * b_{d-k}, restricted to degree-d monomials.
  static void accumulate(const MSeries& a, const std::vector<std::vector<int>>& anz, const MSeries& b,
                         const std::vector<std::vector<int>>& bnz, int d, int kmin, bool weight_by_k,
                         MSeries& out) {
    const MonomialLayout& L = *a.layout_;
    mpq_class tmp;
    for (int k = kmin; k <= d; ++k) {
      for (int i : anz[k]) {
        for (int j : bnz[d - k]) {
          const int idx = L.index_of_key(std::uint64_t{L.key(i)} + L.key(j));
          mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
          if (weight_by_k) tmp *= k;
          mpq_add(out.c_[idx].get_mpq_t(), out.c_[idx].get_mpq_t(), tmp.get_mpq_t());
        }
      }
    }
  }

  static void record_nonzero(const MSeries& s, int d, std::vector<std::vector<int>>& nz) {
    const MonomialLayout& L = *s.layout_;
    for (int i = L.degree_begin(d); i < L.degree_begin(d + 1); ++i) {
      if (s.c_[i] != 0) nz[d].push_back(i);
    }
  }

  static void scale_block(MSeries& s, int d, const Rational& k) {
    const MonomialLayout& L = *s.layout_;
    for (int i = L.degree_begin(d); i < L.degree_begin(d + 1); ++i) s.c_[i] *= k;
  }

  static Rational& at(MSeries& s, std::size_t i) { return s.c_[i]; }
};

inline MSeries inverse(const MSeries& a) {
  const Rational& a0 = a.at_index(0);
  if (a0 == 0) throw series_error("constant term is not invertible");
  const Rational inv0 = Rational(1) / a0;
  const int D = a.max_degree();
  const auto anz = a.nonzero_by_degree();
  MSeries b(a.layout());
  std::vector<std::vector<int>> bnz(D + 1);
  GradedSolver::at(b, 0) = inv0;
  GradedSolver::record_nonzero(b, 0, bnz);
  for (int d = 1; d <= D; ++d) {
    GradedSolver::accumulate(a, anz, b, bnz, d, 1, false, b);
    GradedSolver::scale_block(b, d, -inv0);
    GradedSolver::record_nonzero(b, d, bnz);
  }
  return b;
}

inline MSeries operator/(const MSeries& num, const MSeries& den) { return num * inverse(den); }

inline MSeries sqrt(const MSeries& a) {
  if (a.at_index(0) != 1) throw series_error("sqrt requires constant term 1");
  const int D = a.max_degree();
  MSeries s(a.layout());
  std::vector<std::vector<int>> snz(D + 1);
  GradedSolver::at(s, 0) = 1;
  GradedSolver::record_nonzero(s, 0, snz);
  const MSeries neg_a = -a;
  for (int d = 1; d <= D; ++d) {
    // 2 s_d = a_d - sum_{0<k<d} s_k s_{d-k}
    GradedSolver::accumulate(s, snz, s, snz, d, 1, false, s);
    for (int i = a.layout()->degree_begin(d); i < a.layout()->degree_begin(d + 1); ++i) {
      Rational& x = GradedSolver::at(s, i);
      x = (a.at_index(i) - x) / 2;
    }
    GradedSolver::record_nonzero(s, d, snz);
  }
  return s;
}

namespace detail {
inline void require_zero_constant(const MSeries& u) {
  if (u.at_index(0) != 0) throw series_error("argument series must have zero constant term");
}
} // namespace detail

/// exp(u) for u(0) = 0, from the Euler-operator recurrence d f_d = sum_k k u_k f_{d-k}.
inline MSeries exp(const MSeries& u) {
  detail::require_zero_constant(u);
  const int D = u.max_degree();
  const auto unz = u.nonzero_by_degree();
  MSeries f(u.layout());
  std::vector<std::vector<int>> fnz(D + 1);
  GradedSolver::at(f, 0) = 1;
  GradedSolver::record_nonzero(f, 0, fnz);
  for (int d = 1; d <= D; ++d) {
    GradedSolver::accumulate(u, unz, f, fnz, d, 1, true, f);
    GradedSolver::scale_block(f, d, Rational(1, d));
    GradedSolver::record_nonzero(f, d, fnz);
  }
  return f;
}

/// (cos u, sin u) when sign = -1, (cosh u, sinh u) when sign = +1.
inline std::pair<MSeries, MSeries> circular_pair(const MSeries& u, int sign) {
  detail::require_zero_constant(u);
  const int D = u.max_degree();
  const auto unz = u.nonzero_by_degree();
  MSeries c(u.layout()), s(u.layout());
  std::vector<std::vector<int>> cnz(D + 1), snz(D + 1);
  GradedSolver::at(c, 0) = 1;
  GradedSolver::record_nonzero(c, 0, cnz);
  for (int d = 1; d <= D; ++d) {
    GradedSolver::accumulate(u, unz, s, snz, d, 1, true, c);
    GradedSolver::accumulate(u, unz, c, cnz, d, 1, true, s);
    GradedSolver::scale_block(c, d, Rational(sign, d));
    GradedSolver::scale_block(s, d, Rational(1, d));
    GradedSolver::record_nonzero(c, d, cnz);
    GradedSolver::record_nonzero(s, d, snz);
  }
  return {std::move(c), std::move(s)};
}

inline MSeries cosh(const MSeries& u) { return circular_pair(u, +1).first; }
inline MSeries sinh(const MSeries& u) { return circular_pair(u, +1).second; }
inline MSeries sech(const MSeries& u) { return inverse(cosh(u)); }
inline MSeries tanh(const MSeries& u) {
  auto [c, s] = circular_pair(u, +1);
  return s * inverse(c);
}
inline MSeries cos(const MSeries& u) { return circular_pair(u, -1).first; }
inline MSeries sin(const MSeries& u) { return circular_pair(u, -1).second; }
inline MSeries sec(const MSeries& u) { return inverse(cos(u)); }
inline MSeries tan(const MSeries& u) {
  auto [c, s] = circular_pair(u, -1);
  return s * inverse(c);
}

/// Coefficient of prod vars^e.
inline Rational egf_coeff(const MSeries& a, std::span<const int> e) { return a.coeff(e); }

/// prod(e_i!) times the coefficient of prod vars^e; throws unless integral.
inline Integer egf_extract(const MSeries& a, std::span<const int> e) {
  Rational v = a.coeff(e);
  for (int x : e) v *= Rational(factorial(x));
  if (!is_integer(v)) throw series_error("EGF coefficient " + v.get_str() + " is not an integer");
  return v.get_num();
}

inline Integer egf_extract(const MSeries& a, std::initializer_list<int> e) {
  return egf_extract(a, std::span<const int>(e.begin(), e.size()));
}

} // namespace toric
