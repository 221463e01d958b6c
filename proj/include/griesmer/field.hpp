// Exact arithmetic in GF(p^f) with integer-encoded elements, plus small
// dense matrices and row reduction over such fields.
//
// An element is the integer sum(digit_i * p^i) where (digit_0, ..., digit_{f-1})
// are the coefficients of its polynomial representative, so 0 and 1 are the
// additive and multiplicative identities in every field.
#ifndef GRIESMER_FIELD_HPP
#define GRIESMER_FIELD_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace griesmer {

// Base class for every contract violation raised by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Elem = std::int32_t;

namespace detail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns (p, f) with q = p^f and p prime, or nullopt.
inline std::optional<std::pair<int, int>> prime_power_split(long long q) {
  if (q < 2) return std::nullopt;
  long long p = q;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  int f = 0;
  long long rest = q;
  while (rest % p == 0) { rest /= p; ++f; }
  if (rest != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), f);
}

// Little-endian coefficient vectors over GF(p) for modulus bookkeeping.
using Poly = std::vector<int>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int mod_inverse(int a, int p) {
  // p prime, a != 0 mod p
  int r = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = static_cast<int>(1LL * r * base % p);
    base = static_cast<int>(1LL * base * base % p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<int>((c[i + j] + 1LL * a[i] * b[j]) % p);
  poly_trim(c);
  return c;
}

inline Poly poly_mod(Poly a, const Poly& m, int p) {
  // m need not be monic; reduce by scaling with the inverse leading coefficient.
  poly_trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = mod_inverse(m[dm], p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    const int c = static_cast<int>(1LL * a[da] * lead_inv % p);
    for (int j = 0; j <= dm; ++j) {
      const int k = da - dm + j;
      a[k] = static_cast<int>(((a[k] - 1LL * c * m[j]) % p + p) % p);
    }
    poly_trim(a);
  }
  return a;
}

inline Poly poly_powmod(Poly base, long long e, const Poly& m, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic degree-f polynomial over GF(p), coefficients little-endian with the
// leading 1 included. Irreducible iff it has no irreducible factor of degree
// <= f/2, tested with gcd(X^{p^i} - X, m); for f <= 3 this is the root test.
inline bool poly_irreducible(const Poly& m, int p) {
  const int f = static_cast<int>(m.size()) - 1;
  if (f < 1) return false;
  if (f == 1) return true;
  Poly x_power{0, 1}; // X
  for (int i = 1; i <= f / 2; ++i) {
    x_power = poly_powmod(std::move(x_power), p, m, p);
    Poly diff = x_power;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p; // X^{p^i} - X
    poly_trim(diff);
    Poly g = poly_gcd(m, diff, p);
    if (!(g.size() == 1 && g[0] != 0)) return false;
  }
  return true;
}

} // namespace detail

// Immutable description of GF(p^f); shared between every object built on it.
struct FieldSpec {
  int p = 0;
  int f = 0;
  Elem q = 0;                // p^f
  std::vector<int> modulus;  // little-endian c_0..c_f, monic, irreducible

  static constexpr Elem kTableLimit = 512;
  static constexpr Elem kDeskLimit = 1 << 20;

  bool operator==(const FieldSpec& o) const {
    return p == o.p && f == o.f && modulus == o.modulus;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  void check(Elem a) const {
    if (a < 0 || a >= q) throw error("field element " + std::to_string(a) + " out of range [0," + std::to_string(q) + ")");
  }

  Elem add(Elem a, Elem b) const {
    if (!add_tab_.empty()) return add_tab_[static_cast<size_t>(a) * q + b];
    return add_raw(a, b);
  }
  Elem neg(Elem a) const {
    if (!neg_tab_.empty()) return neg_tab_[a];
    return neg_raw(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (!mul_tab_.empty()) return mul_tab_[static_cast<size_t>(a) * q + b];
    return mul_raw(a, b);
  }
  Elem inv(Elem a) const {
    if (a == 0) throw error("inverse of zero field element");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, q - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const {
    if (e < 0) throw error("negative field exponent");
    Elem r = 1;
    Elem base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  std::vector<int> digits(Elem a) const {
    std::vector<int> d(f);
    for (int i = 0; i < f; ++i) { d[i] = a % p; a /= p; }
    return d;
  }
  Elem from_digits(const std::vector<int>& d) const {
    Elem a = 0;
    for (int i = f - 1; i >= 0; --i) a = a * p + d[i];
    return a;
  }

  // Direct polynomial arithmetic; tables delegate here during construction.
  Elem add_raw(Elem a, Elem b) const {
    Elem r = 0, w = 1;
    for (int i = 0; i < f; ++i) {
      r += w * ((a % p + b % p) % p);
      a /= p; b /= p; w *= p;
    }
    return r;
  }
  Elem neg_raw(Elem a) const {
    Elem r = 0, w = 1;
    for (int i = 0; i < f; ++i) {
      r += w * ((p - a % p) % p);
      a /= p; w *= p;
    }
    return r;
  }
  Elem mul_raw(Elem a, Elem b) const {
    std::vector<int> t(2 * f - 1, 0);
    const std::vector<int> da = digits(a), db = digits(b);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j)
        t[i + j] = static_cast<int>((t[i + j] + 1LL * da[i] * db[j]) % p);
    for (int i = 2 * f - 2; i >= f; --i) {
      const int c = t[i];
      if (c == 0) continue;
      t[i] = 0;
      for (int j = 0; j < f; ++j) // modulus is monic
        t[i - f + j] = static_cast<int>(((t[i - f + j] - 1LL * c * modulus[j]) % p + p) % p);
    }
    Elem r = 0;
    for (int i = f - 1; i >= 0; --i) r = r * p + t[i];
    return r;
  }

  void build_tables() {
    if (q > kTableLimit) return;
    add_tab_.resize(static_cast<size_t>(q) * q);
    mul_tab_.resize(static_cast<size_t>(q) * q);
    neg_tab_.resize(q);
    inv_tab_.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
      neg_tab_[a] = neg_raw(a);
      for (Elem b = 0; b < q; ++b) {
        add_tab_[static_cast<size_t>(a) * q + b] = add_raw(a, b);
        mul_tab_[static_cast<size_t>(a) * q + b] = mul_raw(a, b);
      }
    }
    for (Elem a = 1; a < q; ++a)
      for (Elem b = 1; b < q; ++b)
        if (mul_tab_[static_cast<size_t>(a) * q + b] == 1) { inv_tab_[a] = b; break; }
  }

private:
  std::vector<Elem> add_tab_, mul_tab_, neg_tab_, inv_tab_;
};

using Field = std::shared_ptr<const FieldSpec>;

namespace detail {

// Smallest monic irreducible of degree f over GF(p), ordering candidates by
// the integer encoding of their non-leading coefficients. Deterministic, so
// every run of the library agrees on the modulus for a given (p, f).
inline std::vector<int> default_modulus(int p, int f, Elem q) {
  for (Elem v = 0; v < q; ++v) {
    std::vector<int> m(f + 1, 0);
    Elem t = v;
    for (int i = 0; i < f; ++i) { m[i] = t % p; t /= p; }
    m[f] = 1;
    if (poly_irreducible(m, p)) return m;
  }
  throw error("no irreducible modulus found"); // unreachable for prime p
}

} // namespace detail

inline Field make_field(int p, int f, std::optional<std::vector<int>> modulus = std::nullopt) {
  if (p < 2 || !detail::is_prime(p)) throw error("field characteristic " + std::to_string(p) + " is not prime");
  if (f < 1) throw error("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    if (q > FieldSpec::kDeskLimit) throw error("field size p^f exceeds desk-scale limit 2^20");
  }
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->f = f;
  spec->q = static_cast<Elem>(q);
  if (modulus) {
    auto& m = *modulus;
    if (static_cast<int>(m.size()) != f + 1) throw error("modulus must list f+1 coefficients");
    for (int c : m)
      if (c < 0 || c >= p) throw error("modulus coefficient out of range [0,p)");
    if (m[f] != 1) throw error("modulus must be monic");
    if (!detail::poly_irreducible(m, p)) throw error("modulus polynomial is reducible");
    spec->modulus = m;
  } else {
    if (q > FieldSpec::kTableLimit)
      throw error("no built-in modulus for p^f > 512; pass one explicitly");
    spec->modulus = detail::default_modulus(p, f, spec->q);
  }
  spec->build_tables();
  return spec;
}

// Dense row-major matrix over a shared field.
struct FqMatrix {
  Field field;
  int rows = 0;
  int cols = 0;
  std::vector<Elem> e;

  FqMatrix() = default;
  FqMatrix(Field fld, int r, int c)
      : field(std::move(fld)), rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {
    if (r < 0 || c < 0) throw error("negative matrix shape");
  }

  Elem& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
  Elem at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }

  std::vector<Elem> row(int r) const {
    return std::vector<Elem>(e.begin() + static_cast<size_t>(r) * cols,
                             e.begin() + static_cast<size_t>(r + 1) * cols);
  }
  void set_row(int r, const std::vector<Elem>& v) {
    std::copy(v.begin(), v.end(), e.begin() + static_cast<size_t>(r) * cols);
  }

  FqMatrix transposed() const {
    FqMatrix t(field, cols, rows);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        t.at(c, r) = at(r, c);
    return t;
  }

  bool operator==(const FqMatrix& o) const {
    return rows == o.rows && cols == o.cols && e == o.e &&
           (field == o.field || (field && o.field && *field == *o.field));
  }
};

struct RrefResult {
  FqMatrix m;
  int rank = 0;
  std::vector<int> pivots; // pivot column per pivot row
};

// Reduced row echelon form; pivot choice is the topmost unused row per column,
// so the output is deterministic for a given input.
inline RrefResult rref(FqMatrix a) {
  const FieldSpec& F = *a.field;
  RrefResult res;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int piv = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    const Elem s = F.inv(a.at(r, c));
    for (int j = 0; j < a.cols; ++j) a.at(r, j) = F.mul(a.at(r, j), s);
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Elem m = a.at(i, c);
      for (int j = 0; j < a.cols; ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(m, a.at(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(a);
  return res;
}

inline int rank(const FqMatrix& a) { return rref(a).rank; }

// Solves x * A = b for a row vector x; free variables are set to zero so the
// returned solution is canonical. nullopt when the system is inconsistent.
inline std::optional<std::vector<Elem>> solve_left(const FqMatrix& A, const std::vector<Elem>& b) {
  if (static_cast<int>(b.size()) != A.cols) throw error("solve_left: shape mismatch");
  const FieldSpec& F = *A.field;
  FqMatrix aug(A.field, A.cols, A.rows + 1); // A^T | b^T
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c)
      aug.at(c, r) = A.at(r, c);
  for (int c = 0; c < A.cols; ++c) aug.at(c, A.rows) = b[c];
  RrefResult rr = rref(std::move(aug));
  std::vector<Elem> x(A.rows, 0);
  for (int i = 0; i < rr.rank; ++i) {
    const int pc = rr.pivots[i];
    if (pc == A.rows) return std::nullopt; // pivot in augmented column
    x[pc] = rr.m.at(i, A.rows);
  }
  // Verify (guards against free-column interplay).
  for (int c = 0; c < A.cols; ++c) {
    Elem s = 0;
    for (int r = 0; r < A.rows; ++r) s = F.add(s, F.mul(x[r], A.at(r, c)));
    if (s != b[c]) return std::nullopt;
  }
  return x;
}

// Basis of {x : x * A = 0}, one vector per free column of A^T, in column order.
inline std::vector<std::vector<Elem>> null_space_left(const FqMatrix& A) {
  const FieldSpec& F = *A.field;
  RrefResult rr = rref(A.transposed()); // rows act on A's row index space
  const int dim = A.rows;
  std::vector<bool> is_pivot(dim, false);
  for (int pc : rr.pivots) is_pivot[pc] = true;
  std::vector<std::vector<Elem>> basis;
  for (int free_col = 0; free_col < dim; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Elem> v(dim, 0);
    v[free_col] = 1;
    for (int i = 0; i < rr.rank; ++i)
      v[rr.pivots[i]] = F.neg(rr.m.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int weight(const std::vector<Elem>& v) {
  int w = 0;
  for (Elem x : v) w += (x != 0);
  return w;
}

inline std::vector<int> support(const std::vector<Elem>& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

// dst += lambda * src, componentwise.
inline void add_scaled(const FieldSpec& F, std::vector<Elem>& dst, const std::vector<Elem>& src, Elem lambda) {
  for (size_t i = 0; i < dst.size(); ++i)
    dst[i] = F.add(dst[i], F.mul(lambda, src[i]));
}

} // namespace griesmer

#endif // GRIESMER_FIELD_HPP
