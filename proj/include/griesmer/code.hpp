// Linear codes over GF(q) presented by full-rank generator matrices, the
// Griesmer bound, exact weight enumeration, and the derived codes used by the
// structure theory: residual, projected, and shortened codes, minimum-weight
// lifts, and supplementary subcodes.
#ifndef GRIESMER_CODE_HPP
#define GRIESMER_CODE_HPP

#include <map>
#include <numeric>
#include <optional>

#include "griesmer/field.hpp"

namespace griesmer {

// Enumeration guard: q^k must stay at or below this before any full codeword
// enumeration. Mutable so the CLI can honor the GRIESMER_GUARD environment
// variable; set it once at startup.
inline long long& enumeration_guard() {
  static long long guard = 1LL << 24;
  return guard;
}

// g_q(k, d) = sum_{i=0}^{k-1} ceil(d / q^i). Once q^i >= d every remaining
// term is 1, which also keeps the powers from overflowing.
inline long long griesmer_bound(long long q, int k, long long d) {
  if (q < 2 || k < 1 || d < 1) throw error("griesmer_bound: need q >= 2, k >= 1, d >= 1");
  long long sum = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    sum += (d + power - 1) / power;
    if (power >= d) { sum += k - 1 - i; break; }
    power *= q;
  }
  return sum;
}

class LinearCode {
public:
  LinearCode(Field field, FqMatrix gen, bool allow_zero_columns = false)
      : field_(std::move(field)), gen_(std::move(gen)) {
    if (!gen_.field || *gen_.field != *field_) throw error("LinearCode: generator field mismatch");
    if (gen_.rows < 1 || gen_.cols < 1) throw error("LinearCode: empty generator");
    for (Elem x : gen_.e) field_->check(x);
    if (rank(gen_) != gen_.rows) throw error("LinearCode: generator rows are dependent");
    if (!allow_zero_columns) {
      for (int c = 0; c < gen_.cols; ++c) {
        bool zero = true;
        for (int r = 0; r < gen_.rows && zero; ++r) zero = (gen_.at(r, c) == 0);
        if (zero) throw error("LinearCode: zero column at index " + std::to_string(c));
      }
    }
  }

  const Field& field() const { return field_; }
  const FqMatrix& gen() const { return gen_; }
  int k() const { return gen_.rows; }
  int n() const { return gen_.cols; }
  Elem q() const { return field_->q; }

  long long message_count() const {
    long long total = 1;
    for (int i = 0; i < k(); ++i) {
      total *= q();
      if (total > enumeration_guard())
        throw error("enumeration guard: q^k exceeds " + std::to_string(enumeration_guard()) +
                    " (set GRIESMER_GUARD to override)");
    }
    return total;
  }

  std::vector<Elem> codeword(const std::vector<Elem>& message) const {
    if (static_cast<int>(message.size()) != k()) throw error("codeword: message length != k");
    std::vector<Elem> w(n(), 0);
    for (int i = 0; i < k(); ++i)
      if (message[i] != 0) add_scaled(*field_, w, gen_.row(i), message[i]);
    return w;
  }

private:
  Field field_;
  FqMatrix gen_;
};

// Visits every codeword exactly once, messages in lexicographic element-
// encoding order (first coordinate most significant), reusing partial sums.
template <class Fn>
void for_each_codeword(const LinearCode& C, Fn&& fn) {
  C.message_count(); // guard
  const FieldSpec& F = *C.field();
  std::vector<Elem> message(C.k(), 0);
  std::vector<std::vector<Elem>> partial(C.k() + 1, std::vector<Elem>(C.n(), 0));
  const int k = C.k();
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      const std::vector<Elem>& msg = message;
      const std::vector<Elem>& word = partial[k];
      fn(msg, word);
      return;
    }
    for (Elem c = 0; c < F.q; ++c) {
      message[depth] = c;
      partial[depth + 1] = partial[depth];
      if (c != 0) add_scaled(F, partial[depth + 1], C.gen().row(depth), c);
      self(self, depth + 1);
    }
    message[depth] = 0;
  };
  rec(rec, 0);
}

struct WeightDistribution {
  std::map<int, long long> counts; // weight -> number of codewords, 0 included

  long long total() const {
    long long t = 0;
    for (auto& [w, c] : counts) t += c;
    return t;
  }
};

inline WeightDistribution weight_distribution(const LinearCode& C) {
  WeightDistribution wd;
  for_each_codeword(C, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
    ++wd.counts[weight(w)];
  });
  return wd;
}

inline int min_distance(const WeightDistribution& wd) {
  for (auto& [w, c] : wd.counts)
    if (w > 0) return w;
  throw error("min_distance: code has no nonzero word");
}

inline int min_distance(const LinearCode& C) { return min_distance(weight_distribution(C)); }

inline bool is_griesmer(const LinearCode& C) {
  return C.n() == griesmer_bound(C.q(), C.k(), min_distance(C));
}

struct DivisorInfo {
  long long delta = 0; // gcd of all nonzero weights
  int p_exponent = 0;  // nu_p(delta)
};

inline DivisorInfo divisor_and_exponent(const LinearCode& C, const WeightDistribution& wd) {
  long long g = 0;
  for (auto& [w, c] : wd.counts)
    if (w > 0) g = std::gcd(g, static_cast<long long>(w));
  if (g == 0) throw error("divisor_and_exponent: code has no nonzero word");
  int e = 0;
  for (long long t = g; t % C.field()->p == 0; t /= C.field()->p) ++e;
  return DivisorInfo{g, e};
}

inline DivisorInfo divisor_and_exponent(const LinearCode& C) {
  return divisor_and_exponent(C, weight_distribution(C));
}

// Lexicographically-first (in message order) codeword of minimum weight.
inline std::vector<Elem> min_weight_codeword(const LinearCode& C) {
  std::vector<Elem> best;
  int best_w = -1;
  for_each_codeword(C, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
    const int wt = weight(w);
    if (wt == 0) return;
    if (best_w < 0 || wt < best_w) { best_w = wt; best = w; }
  });
  if (best_w < 0) throw error("min_weight_codeword: no nonzero codeword");
  return best;
}

// Message solving a * gen = word, or nullopt when word is not in the code.
inline std::optional<std::vector<Elem>> message_of(const LinearCode& C, const std::vector<Elem>& word) {
  if (static_cast<int>(word.size()) != C.n()) throw error("message_of: word length != n");
  return solve_left(C.gen(), word);
}

namespace detail {

// Validates that rows form a basis of C: k codewords of full rank.
inline void require_basis(const LinearCode& C, const std::vector<std::vector<Elem>>& rows,
                          const std::string& who) {
  if (static_cast<int>(rows.size()) != C.k()) {
    throw error(who + ": expected " + std::to_string(C.k()) + " rows, got " +
                std::to_string(rows.size()));
  }
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != C.n()) throw error(who + ": row length differs from n");
    if (!message_of(C, r)) throw error(who + ": row is not a codeword");
  }
  FqMatrix m(C.field(), C.k(), C.n());
  for (int i = 0; i < C.k(); ++i) m.set_row(i, rows[i]);
  if (rank(m) != C.k()) throw error(who + ": rows do not form a basis");
}

} // namespace detail

// A derived code together with the original coordinate index kept for each of
// its columns (transient zero columns are stripped, and the map records it).
struct DerivedCode {
  LinearCode code;
  std::vector<int> columns;
};

namespace detail {

// Always-on invariant check with a user-facing message.
inline void require(bool ok, const std::string& what) {
  if (!ok) throw error(what);
}

inline DerivedCode reduce_rows_to_code(const Field& field, const FqMatrix& rows,
                                       std::vector<int> columns, const char* what) {
  RrefResult rr = rref(rows);
  if (rr.rank == 0) throw error(std::string(what) + ": derived dimension is zero");
  // Keep only nonzero columns, remembering where they came from.
  std::vector<int> keep;
  for (int c = 0; c < rows.cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rr.rank && zero; ++r) zero = (rr.m.at(r, c) == 0);
    if (!zero) keep.push_back(c);
  }
  if (keep.empty()) throw error(std::string(what) + ": derived length is zero");
  FqMatrix g(field, rr.rank, static_cast<int>(keep.size()));
  std::vector<int> col_map;
  col_map.reserve(keep.size());
  for (int j = 0; j < static_cast<int>(keep.size()); ++j) {
    for (int r = 0; r < rr.rank; ++r) g.at(r, j) = rr.m.at(r, keep[j]);
    col_map.push_back(columns[keep[j]]);
  }
  return DerivedCode{LinearCode(field, std::move(g)), std::move(col_map)};
}

} // namespace detail

// Residual code Res(C, a): puncture C on the support of the codeword a.
inline DerivedCode residual(const LinearCode& C, const std::vector<Elem>& a) {
  if (weight(a) == 0) throw error("residual: zero codeword");
  if (!message_of(C, a)) throw error("residual: word is not in the code");
  std::vector<int> keep;
  for (int c = 0; c < C.n(); ++c)
    if (a[c] == 0) keep.push_back(c);
  if (keep.empty()) throw error("residual: support covers every coordinate");
  FqMatrix rows(C.field(), C.k(), static_cast<int>(keep.size()));
  for (int r = 0; r < C.k(); ++r)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      rows.at(r, j) = C.gen().at(r, keep[j]);
  return detail::reduce_rows_to_code(C.field(), rows, keep, "residual");
}

// Projected code Proj(C, a): restrict C to the support of a.
inline DerivedCode projected(const LinearCode& C, const std::vector<Elem>& a) {
  if (weight(a) == 0) throw error("projected: zero codeword");
  if (!message_of(C, a)) throw error("projected: word is not in the code");
  const std::vector<int> keep = support(a);
  FqMatrix rows(C.field(), C.k(), static_cast<int>(keep.size()));
  for (int r = 0; r < C.k(); ++r)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      rows.at(r, j) = C.gen().at(r, keep[j]);
  return detail::reduce_rows_to_code(C.field(), rows, keep, "projected");
}

// Canonical representative of a projective point: scale so the first nonzero
// coordinate is 1. Errors on the zero vector.
inline std::vector<Elem> canonical_point(const FieldSpec& F, std::vector<Elem> v) {
  for (Elem x : v) F.check(x);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) {
      const Elem s = F.inv(v[i]);
      for (auto& x : v) x = F.mul(s, x);
      return v;
    }
  }
  throw error("canonical_point: zero vector");
}

// Shortened code C_<g>: codewords vanishing on every column spanning the
// projective point g, those columns deleted. The remaining columns cannot
// become zero columns: a column where the shortened subcode vanishes would
// itself span <g>.
inline DerivedCode shortened(const LinearCode& C, const std::vector<Elem>& point) {
  if (static_cast<int>(point.size()) != C.k()) throw error("shortened: point length != k");
  const FieldSpec& F = *C.field();
  const std::vector<Elem> target = canonical_point(F, point);
  std::vector<int> drop, keep;
  for (int c = 0; c < C.n(); ++c) {
    std::vector<Elem> col(C.k());
    for (int r = 0; r < C.k(); ++r) col[r] = C.gen().at(r, c);
    if (canonical_point(F, col) == target) drop.push_back(c); else keep.push_back(c);
  }
  if (drop.empty()) throw error("shortened: point is not a column direction");
  FqMatrix cols_at_point(C.field(), C.k(), static_cast<int>(drop.size()));
  for (int r = 0; r < C.k(); ++r)
    for (int j = 0; j < static_cast<int>(drop.size()); ++j)
      cols_at_point.at(r, j) = C.gen().at(r, drop[j]);
  const auto messages = null_space_left(cols_at_point);
  if (messages.empty()) throw error("shortened: derived dimension is zero");
  FqMatrix rows(C.field(), static_cast<int>(messages.size()), static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(messages.size()); ++i) {
    const std::vector<Elem> w = C.codeword(messages[i]);
    for (int j = 0; j < static_cast<int>(keep.size()); ++j) rows.at(i, j) = w[keep[j]];
  }
  return detail::reduce_rows_to_code(C.field(), rows, keep, "shortened");
}

// Agreement profile of the ordered pair (a, b): for each alpha in F_q^*, the
// number of coordinates with a_i = alpha * b_i != 0. Together with the weight
// of b off the support of a this partitions the support of b:
//   wt(res(b,a)) + sum_alpha A_alpha = wt(b).
struct AgreementProfile {
  std::vector<long long> counts; // index alpha-1

  long long at(Elem alpha) const { return counts.at(static_cast<size_t>(alpha) - 1); }
  long long total() const { return std::accumulate(counts.begin(), counts.end(), 0LL); }
};

inline AgreementProfile agreement_profile(const FieldSpec& F, const std::vector<Elem>& a,
                                          const std::vector<Elem>& b) {
  if (a.size() != b.size()) throw error("agreement_profile: length mismatch");
  if (weight(a) == 0) throw error("agreement_profile: first word is zero");
  AgreementProfile prof;
  prof.counts.assign(F.q - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 || b[i] == 0) continue;
    const Elem alpha = F.div(a[i], b[i]);
    ++prof.counts[alpha - 1];
  }
  return prof;
}

// Weight of b restricted to the complement of the support of a.
inline int residual_weight(const std::vector<Elem>& b, const std::vector<Elem>& a) {
  if (a.size() != b.size()) throw error("residual_weight: length mismatch");
  int w = 0;
  for (size_t i = 0; i < a.size(); ++i) w += (a[i] == 0 && b[i] != 0);
  return w;
}

struct LiftResult {
  std::vector<Elem> word;            // first minimum-weight preimage found
  int min_weight_preimage_count = 0; // how many of the q preimages have weight d
};

// Given a minimum-weight codeword a and a word cprime of Res(C, a), scans the
// q preimages b0 + lambda*a (lambda in element-encoding order) and returns the
// first one of weight d, plus the count of such preimages.
inline LiftResult lift_min_weight(const LinearCode& C, const std::vector<Elem>& a,
                                  const std::vector<Elem>& cprime) {
  const FieldSpec& F = *C.field();
  const int d = min_distance(C);
  if (weight(a) != d) throw error("lift_min_weight: word is not of minimum weight");
  std::vector<int> keep;
  for (int c = 0; c < C.n(); ++c)
    if (a[c] == 0) keep.push_back(c);
  if (static_cast<int>(cprime.size()) != static_cast<int>(keep.size()))
    throw error("lift_min_weight: residual word length mismatch");
  FqMatrix punct(C.field(), C.k(), static_cast<int>(keep.size()));
  for (int r = 0; r < C.k(); ++r)
    for (int j = 0; j < static_cast<int>(keep.size()); ++j)
      punct.at(r, j) = C.gen().at(r, keep[j]);
  const auto msg = solve_left(punct, cprime);
  if (!msg) throw error("lift_min_weight: word is not in the residual code");
  const std::vector<Elem> b0 = C.codeword(*msg);
  LiftResult res;
  for (Elem lambda = 0; lambda < F.q; ++lambda) {
    std::vector<Elem> b = b0;
    if (lambda != 0) add_scaled(F, b, a, lambda);
    if (weight(b) == d) {
      if (res.min_weight_preimage_count == 0) res.word = b;
      ++res.min_weight_preimage_count;
    }
  }
  if (res.min_weight_preimage_count == 0)
    throw error("lift_min_weight: no minimum-weight preimage (input not Griesmer?)");
  return res;
}

// Supplementary subcode: k-1 codewords spanning a [g_q(k-1,d), k-1, d] code
// C' with <a> + C' = C. Complements of <a> are enumerated deterministically
// (each has a unique basis u_i + t_i * a over a fixed completion u_2..u_k),
// and the first one passing the effective-length and min-distance test wins.
inline std::vector<std::vector<Elem>> supplementary_subcode(const LinearCode& C,
                                                            const std::vector<Elem>& a) {
  const FieldSpec& F = *C.field();
  const int k = C.k();
  if (k < 2) throw error("supplementary_subcode: need k >= 2");
  if (!is_griesmer(C)) throw error("supplementary_subcode: input is not a Griesmer code");
  const int d = min_distance(C);
  if (weight(a) != d) throw error("supplementary_subcode: word is not of minimum weight");
  const auto ma_opt = message_of(C, a);
  if (!ma_opt) throw error("supplementary_subcode: word is not in the code");
  const std::vector<Elem> ma = *ma_opt;

  // Complete ma to a message-space basis with unit vectors, greedily.
  FqMatrix basis(C.field(), 1, k);
  basis.set_row(0, ma);
  std::vector<std::vector<Elem>> units;
  for (int i = 0; i < k && static_cast<int>(units.size()) < k - 1; ++i) {
    std::vector<Elem> e(k, 0);
    e[i] = 1;
    FqMatrix trial(C.field(), basis.rows + 1, k);
    for (int r = 0; r < basis.rows; ++r) trial.set_row(r, basis.row(r));
    trial.set_row(basis.rows, e);
    if (rank(trial) == trial.rows) {
      basis = std::move(trial);
      units.push_back(e);
    }
  }

  const long long expected_len = griesmer_bound(F.q, k - 1, d);
  long long combos = 1;
  for (int i = 0; i < k - 1; ++i) combos *= F.q;
  for (long long t = 0; t < combos; ++t) {
    // t encodes (t_2..t_k) with the first coefficient most significant.
    std::vector<Elem> shift(k - 1);
    long long tt = t;
    for (int i = k - 2; i >= 0; --i) { shift[i] = static_cast<Elem>(tt % F.q); tt /= F.q; }
    FqMatrix rows(C.field(), k - 1, C.n());
    for (int i = 0; i < k - 1; ++i) {
      std::vector<Elem> m = units[i];
      add_scaled(F, m, ma, shift[i]);
      rows.set_row(i, C.codeword(m));
    }
    // Effective length: columns not identically zero on the candidate.
    int eff = 0;
    for (int c = 0; c < C.n(); ++c) {
      bool zero = true;
      for (int r = 0; r < k - 1 && zero; ++r) zero = (rows.at(r, c) == 0);
      eff += !zero;
    }
    if (eff != expected_len) continue;
    // Minimum distance of the span must be d.
    int dmin = C.n() + 1;
    long long words = 1;
    for (int i = 0; i < k - 1; ++i) words *= F.q;
    for (long long w = 1; w < words && dmin >= d; ++w) {
      long long ww = w;
      std::vector<Elem> acc(C.n(), 0);
      for (int i = 0; i < k - 1; ++i) {
        const Elem c = static_cast<Elem>(ww % F.q);
        ww /= F.q;
        if (c != 0) add_scaled(F, acc, rows.row(i), c);
      }
      dmin = std::min(dmin, weight(acc));
    }
    if (dmin != d) continue;
    std::vector<std::vector<Elem>> out;
    for (int i = 0; i < k - 1; ++i) out.push_back(rows.row(i));
    return out;
  }
  throw error("supplementary_subcode: search exhausted (is the input Griesmer?)");
}

} // namespace griesmer

#endif // GRIESMER_CODE_HPP
