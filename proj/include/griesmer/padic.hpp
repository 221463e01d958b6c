// p-adic bookkeeping: digit sums, binomial valuations via the carry-counting
// formula, the folded binomial sums c(r,s;1), and finite-precision Galois
// rings GR(p^N, f) with Teichmuller lifts and Schur (componentwise) products.
#ifndef GRIESMER_PADIC_HPP
#define GRIESMER_PADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

#include "griesmer/field.hpp"

namespace griesmer {

using BigInt = boost::multiprecision::cpp_int;

inline long long digit_sum(long long n, int p) {
  if (n < 0) throw error("digit_sum: negative argument");
  if (p < 2) throw error("digit_sum: base must be >= 2");
  long long s = 0;
  while (n > 0) { s += n % p; n /= p; }
  return s;
}

// nu_p(binomial(n, m)) by the digit-sum form of the carry-counting identity:
// (S_p(m) + S_p(n-m) - S_p(n)) / (p-1), which is exactly the number of
// carries when adding m and n-m in base p.
inline long long nu_binom(long long n, long long m, int p) {
  if (m < 0 || m > n) throw error("nu_binom: need 0 <= m <= n");
  if (!detail::is_prime(p)) throw error("nu_binom: p must be prime");
  const long long num = digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p);
  if (num % (p - 1) != 0) throw error("nu_binom: digit-sum identity violated");
  return num / (p - 1);
}

inline BigInt binom_exact(long long n, long long m) {
  if (m < 0 || m > n) return 0;
  m = std::min(m, n - m);
  BigInt r = 1;
  for (long long i = 1; i <= m; ++i) {
    r *= (n - m + i);
    r /= i;
  }
  return r;
}

// Exact valuation of a nonzero integer.
inline long long nu_exact(BigInt x, int p) {
  if (x == 0) throw error("nu_exact: valuation of zero");
  if (x < 0) x = -x;
  long long v = 0;
  while (x % p == 0) { x /= p; ++v; }
  return v;
}

// Carry bound, valuation form: with z = x + y, nu_p(x) = m and nu_p(z) = n >= m,
// the binomial coefficient binom(z, x) has nu_p at least n - m. The hypotheses
// are validated (errors on violation); the return value reports the bound.
inline bool carry_bound_v1(long long x, long long y, long long z, int p) {
  if (x + y != z) throw error("carry_bound_v1: z != x + y");
  if (x <= 0 || z <= 0) throw error("carry_bound_v1: need positive x and z");
  if (!detail::is_prime(p)) throw error("carry_bound_v1: p must be prime");
  long long m = 0, n = 0;
  for (long long t = x; t % p == 0; t /= p) ++m;
  for (long long t = z; t % p == 0; t /= p) ++n;
  if (n < m) throw error("carry_bound_v1: hypothesis nu_p(z) >= nu_p(x) fails");
  return nu_binom(z, x, p) >= n - m;
}

// Carry bound, digit form with split parameter n: writing x and z in base p,
// the hypotheses are x_i >= z_i for 1 <= i <= n-1 and x_0 > z_0 (digits of the
// low n-digit parts). Conclusion: adding y to x carries at least n times, i.e.
// nu_p(binom(z, x)) >= n.
inline bool carry_bound_v2(long long x, long long y, long long z, int p, int n) {
  if (x + y != z) throw error("carry_bound_v2: z != x + y");
  if (n < 1) throw error("carry_bound_v2: split parameter must be >= 1");
  if (x < 0 || z < 0) throw error("carry_bound_v2: need nonnegative x and z");
  if (!detail::is_prime(p)) throw error("carry_bound_v2: p must be prime");
  long long xt = x, zt = z;
  for (int i = 0; i < n; ++i) {
    const long long xd = xt % p, zd = zt % p;
    if (i == 0 ? !(xd > zd) : !(xd >= zd))
      throw error("carry_bound_v2: digit hypothesis fails at position " + std::to_string(i));
    xt /= p; zt /= p;
  }
  return nu_binom(z, x, p) >= n;
}

// c(r,s;1) = sum over a >= 0 of binom(rq, a(q-1)+s) while the index stays
// within [0, rq]. Exact, unbounded integers: binom(rq, i) overflows 64 bits
// already for q = 9, r = 8.
inline BigInt c_sum(int r, int s, const Field& field) {
  const long long q = field->q;
  if (r < 1 || r > q - 1 || s < 1 || s > q - 1)
    throw error("c_sum: need 1 <= r, s <= q-1");
  BigInt total = 0;
  for (long long i = s; i <= r * q; i += (q - 1))
    total += binom_exact(r * q, i);
  return total;
}

// ---------------------------------------------------------------------------
// Galois rings

// GR(p^N, f) = (Z/p^N)[X] / (m(X)) where m is the field modulus lifted to
// integer coefficients. Reducing mod p recovers GF(p^f).
struct GaloisRingSpec {
  Field base;
  int N = 0;
  long long pN = 0;

  int p() const { return base->p; }
  int f() const { return base->f; }
  Elem q() const { return base->q; }
};

// Element: f little-endian coefficients in [0, pN), packed into one int64 per
// coefficient (pN <= 2^31 is enforced so products fit in int64).
struct GrElem {
  std::vector<long long> c;
  bool operator==(const GrElem& o) const { return c == o.c; }
};

namespace detail {

inline GrElem gr_zero(const GaloisRingSpec& R) { return GrElem{std::vector<long long>(R.f(), 0)}; }

inline GrElem gr_from_coeffs(const GaloisRingSpec& R, std::vector<long long> v) {
  for (auto& x : v) x = ((x % R.pN) + R.pN) % R.pN;
  return GrElem{std::move(v)};
}

inline GrElem gr_add(const GaloisRingSpec& R, const GrElem& a, const GrElem& b) {
  GrElem r = a;
  for (int i = 0; i < R.f(); ++i) r.c[i] = (r.c[i] + b.c[i]) % R.pN;
  return r;
}

inline GrElem gr_sub(const GaloisRingSpec& R, const GrElem& a, const GrElem& b) {
  GrElem r = a;
  for (int i = 0; i < R.f(); ++i) r.c[i] = ((r.c[i] - b.c[i]) % R.pN + R.pN) % R.pN;
  return r;
}

inline GrElem gr_scale(const GaloisRingSpec& R, const GrElem& a, long long s) {
  s = ((s % R.pN) + R.pN) % R.pN;
  GrElem r = a;
  for (int i = 0; i < R.f(); ++i) r.c[i] = (r.c[i] * s) % R.pN;
  return r;
}

inline GrElem gr_mul(const GaloisRingSpec& R, const GrElem& a, const GrElem& b) {
  const int f = R.f();
  std::vector<long long> t(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < f; ++j)
      t[i + j] = (t[i + j] + a.c[i] * b.c[j]) % R.pN;
  }
  const auto& m = R.base->modulus; // monic
  for (int i = 2 * f - 2; i >= f; --i) {
    const long long c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (int j = 0; j < f; ++j)
      t[i - f + j] = ((t[i - f + j] - c * m[j]) % R.pN + R.pN) % R.pN;
  }
  t.resize(f);
  return GrElem{std::move(t)};
}

inline GrElem gr_pow(const GaloisRingSpec& R, GrElem a, long long e) {
  GrElem r = gr_zero(R);
  r.c[0] = 1;
  while (e > 0) {
    if (e & 1) r = gr_mul(R, r, a);
    a = gr_mul(R, a, a);
    e >>= 1;
  }
  return r;
}

} // namespace detail

struct Valuation {
  int value = 0;      // min over coefficients of nu_p, capped at N
  bool saturated = false; // true when every coefficient is 0 mod p^N
};

inline Valuation gr_valuation(const GaloisRingSpec& R, const GrElem& a) {
  int v = R.N;
  for (long long c : a.c) {
    if (c == 0) continue;
    int vc = 0;
    long long t = c;
    while (t % R.p() == 0) { t /= R.p(); ++vc; }
    v = std::min(v, vc);
  }
  return Valuation{v, v == R.N};
}

inline GaloisRingSpec make_galois_ring(const Field& field, int N) {
  if (N < 1) throw error("galois ring precision must be >= 1");
  GaloisRingSpec R;
  R.base = field;
  R.N = N;
  long long pn = 1;
  for (int i = 0; i < N; ++i) {
    pn *= field->p;
    if (pn > (1LL << 31)) throw error("galois ring modulus p^N exceeds 2^31");
  }
  R.pN = pn;
  return R;
}

// Teichmuller lift by Frobenius iteration y <- y^q: each step gains at least
// one p-adic digit of agreement with the true lift, so at most N iterations
// are needed; convergence is asserted.
inline GrElem teichmuller_lift(const GaloisRingSpec& R, Elem x) {
  R.base->check(x);
  const auto dig = R.base->digits(x);
  GrElem y = detail::gr_zero(R);
  for (int i = 0; i < R.f(); ++i) y.c[i] = dig[i];
  for (int it = 0; it < R.N; ++it) {
    GrElem next = detail::gr_pow(R, y, R.q());
    if (next == y) return y;
    y = next;
  }
  if (!(detail::gr_pow(R, y, R.q()) == y))
    throw error("teichmuller_lift: Frobenius iteration failed to converge");
  return y;
}

// Componentwise (Schur) vectors over a Galois ring.
using GrVector = std::vector<GrElem>;

inline GrVector teichmuller_vector(const GaloisRingSpec& R, const std::vector<Elem>& v) {
  GrVector out;
  out.reserve(v.size());
  for (Elem x : v) out.push_back(teichmuller_lift(R, x));
  return out;
}

inline GrVector schur_product(const GaloisRingSpec& R, const GrVector& a, const GrVector& b) {
  if (a.size() != b.size()) throw error("schur_product: length mismatch");
  GrVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = detail::gr_mul(R, a[i], b[i]);
  return r;
}

inline GrVector schur_power(const GaloisRingSpec& R, const GrVector& a, long long e) {
  GrVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = detail::gr_pow(R, a[i], e);
  return r;
}

inline GrElem component_sum(const GaloisRingSpec& R, const GrVector& a) {
  GrElem s = detail::gr_zero(R);
  for (const auto& x : a) s = detail::gr_add(R, s, x);
  return s;
}

// ---------------------------------------------------------------------------
// Expansion identity

// Checks, modulo pq = p^{f+1}, that for vectors x, y over GF(q) and 1 <= r <= q-1:
//
//   T(x+y)^{(r)} = X^{(r)} + Y^{(r)}
//                + sum_{i=1}^{r-1}   c(r,i) X^{(r-i)}     o Y^{(i)}
//                + sum_{i=r}^{q-1}   c(r,i) X^{(q-1+r-i)} o Y^{(i)}
//
// where X = T(x), Y = T(y), ^{(r)} is the componentwise power and o the
// componentwise product. The mixed-term coefficients are c(r,i;1) except that
// the boundary binomial binom(rq, rq) belongs to the standalone Y^{(r)} term,
// so it is peeled off the i = r coefficient before use.
inline bool expansion_check(const std::vector<Elem>& x, const std::vector<Elem>& y,
                            int r, const GaloisRingSpec& R) {
  const Field& F = R.base;
  const int q = F->q;
  if (r < 1 || r > q - 1) throw error("expansion_check: need 1 <= r <= q-1");
  if (x.size() != y.size()) throw error("expansion_check: length mismatch");
  if (R.N < F->f + 1) throw error("expansion_check: precision below nu_p(pq)");
  long long pq = 1;
  for (int i = 0; i < F->f + 1; ++i) pq *= F->p;

  std::vector<Elem> xy(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    F->check(x[i]);
    F->check(y[i]);
    xy[i] = F->add(x[i], y[i]);
  }
  const GrVector X = teichmuller_vector(R, x);
  const GrVector Y = teichmuller_vector(R, y);
  const GrVector Z = teichmuller_vector(R, xy);

  const GrVector lhs = schur_power(R, Z, r);
  GrVector rhs = schur_power(R, X, r);
  {
    const GrVector yr = schur_power(R, Y, r);
    for (size_t j = 0; j < rhs.size(); ++j) rhs[j] = detail::gr_add(R, rhs[j], yr[j]);
  }
  for (int i = 1; i <= q - 1; ++i) {
    const int xe = (i < r) ? (r - i) : (q - 1 + r - i);
    BigInt coeff = c_sum(r, i, F);
    if (i == r) coeff -= 1; // boundary binomial binom(rq, rq)
    const long long scalar = static_cast<long long>(coeff % R.pN);
    GrVector term = schur_product(R, schur_power(R, X, xe), schur_power(R, Y, i));
    for (size_t j = 0; j < rhs.size(); ++j)
      rhs[j] = detail::gr_add(R, rhs[j], detail::gr_scale(R, term[j], scalar));
  }
  for (size_t j = 0; j < rhs.size(); ++j) {
    const GrElem d = detail::gr_sub(R, lhs[j], rhs[j]);
    for (long long c : d.c)
      if (c % pq != 0) return false;
  }
  return true;
}

} // namespace griesmer

#endif // GRIESMER_PADIC_HPP
