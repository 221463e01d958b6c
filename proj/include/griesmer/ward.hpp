#ifndef GRIESMER_WARD_HPP
#define GRIESMER_WARD_HPP

// Exact divisibility certification through Teichmuller power sums.  For a
// basis b_1..b_k of C and an exponent tuple r = (r_1..r_k) in [0, q-1]^k,
// r != 0, with (q-1) | sum r_i, put
//   sigma(r) = sum_j T(prod_i b_i[j]^(r_i))
// in the Galois ring GR(p^N, f), the products taken in the field before
// lifting (the lift is multiplicative).  Then p^e divides every weight of C
// exactly when every such tuple satisfies
//   e (p-1) <= sum_i S_p(r_i) - f (p-1) + (p-1) nu_p(sigma(r)).
// Precision N = e + f always suffices: the valuation the condition can
// demand never exceeds e + f, so a saturated sigma passes outright.
//
// The bounded mode re-derives the same verdicts from first principles: it
// enumerates multisets of at most L pairs (scaled basis row, exponent) with
// the same digit-sum threshold per multiset.  Scalars only contribute units
// and repeated rows fold together, so the verdict must agree with the tuple
// form; the mode exists as a cross-check and is priced for small codes only.

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "griesmer/basis.hpp"
#include "griesmer/code.hpp"
#include "griesmer/field.hpp"
#include "griesmer/padic.hpp"

namespace griesmer {

struct ExponentTuple {
  std::vector<int> r;       // one exponent per basis row (folded form)
  long long digit_sum = 0;  // the digit-sum threshold the constraint used
};

struct WardCheck {
  bool holds = true;
  std::optional<ExponentTuple> violation;
  std::string detail;  // human-readable description of the violation
};

struct WardExponent {
  int exponent = 0;                      // largest certified e, at most the cap
  bool capped = false;                   // every constraint sat at or above the cap
  std::optional<ExponentTuple> binding;  // first tuple attaining the minimum
};

// Rows the divisibility check runs on by default: the certified basis for a
// Griesmer code, the generator rows otherwise.
inline std::vector<std::vector<Elem>> default_ward_basis(const LinearCode& C) {
  if (is_griesmer(C)) return construct_basis(C).rows;
  std::vector<std::vector<Elem>> rows;
  for (int i = 0; i < C.k(); ++i) rows.push_back(C.gen().row(i));
  return rows;
}

namespace detail {

struct WardContext {
  GaloisRingSpec R;
  std::vector<GrElem> teich;  // Teichmuller lift per field element
};

inline WardContext make_ward_context(const Field& field, int N) {
  WardContext ctx{make_galois_ring(field, N), {}};
  ctx.teich.reserve(field->q);
  for (Elem x = 0; x < field->q; ++x) ctx.teich.push_back(teichmuller_lift(ctx.R, x));
  return ctx;
}

// Valuation of sum_j T(values[j]).
inline Valuation lifted_sum_valuation(const WardContext& ctx, const std::vector<Elem>& values) {
  GrElem acc = gr_zero(ctx.R);
  for (const Elem v : values) acc = gr_add(ctx.R, acc, ctx.teich[v]);
  return gr_valuation(ctx.R, acc);
}

inline Valuation sigma_valuation(const WardContext& ctx, const FieldSpec& F,
                                 const std::vector<std::vector<Elem>>& rows,
                                 const std::vector<int>& r) {
  const std::size_t n = rows[0].size();
  std::vector<Elem> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem prod = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (r[i] != 0) prod = F.mul(prod, F.pow(rows[i][j], r[i]));
    }
    values[j] = prod;
  }
  return lifted_sum_valuation(ctx, values);
}

// All tuples r in [0, q-1]^k with r != 0 and (q-1) | sum r_i, in
// lexicographic order with the first coordinate most significant.  fn
// returns false to stop early.
template <class Fn>
void for_each_ward_tuple(Elem q, int k, Fn&& fn) {
  std::vector<int> r(k, 0);
  long long sum = 0;
  while (true) {
    int i = k - 1;
    while (i >= 0 && r[i] == q - 1) {
      sum -= r[i];
      r[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++r[i];
    ++sum;
    if (sum % (q - 1) == 0 && !fn(r)) return;
  }
}

inline bool tuple_passes(int p, int f, int e, long long digit_sum, const Valuation& v) {
  if (v.saturated) return true;
  return static_cast<long long>(e) * (p - 1) <=
         digit_sum - static_cast<long long>(f) * (p - 1) +
             static_cast<long long>(v.value) * (p - 1);
}

inline std::string tuple_to_string(const std::vector<int>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(r[i]);
  }
  return s + ")";
}

}  // namespace detail

// Does p^e divide every nonzero weight of C?  Exact; certified through the
// tuple criterion over the given basis rows.
inline WardCheck ward_condition(const LinearCode& C, const std::vector<std::vector<Elem>>& rows,
                                int e) {
  detail::require_basis(C, rows, "ward_condition");
  if (e < 0) throw error("ward_condition: need e >= 0");
  const FieldSpec& F = *C.field();
  C.message_count();  // the tuple count is within q^k; same enumeration guard
  const auto ctx = detail::make_ward_context(C.field(), e + F.f);

  WardCheck out;
  detail::for_each_ward_tuple(F.q, C.k(), [&](const std::vector<int>& r) {
    long long dsum = 0;
    for (const int ri : r) dsum += digit_sum(ri, F.p);
    const Valuation v = detail::sigma_valuation(ctx, F, rows, r);
    if (detail::tuple_passes(F.p, F.f, e, dsum, v)) return true;
    out.holds = false;
    out.violation = ExponentTuple{r, dsum};
    out.detail = "tuple " + detail::tuple_to_string(r) + ": digit sum " +
                 std::to_string(dsum) + ", power-sum valuation " +
                 std::to_string(v.value) + " is too small for e = " + std::to_string(e);
    return false;
  });
  return out;
}

// Largest e <= e_max with p^e dividing every nonzero weight of C.
inline WardExponent max_divisor_exponent(const LinearCode& C,
                                         const std::vector<std::vector<Elem>>& rows,
                                         int e_max) {
  detail::require_basis(C, rows, "max_divisor_exponent");
  if (e_max < 0) throw error("max_divisor_exponent: need e_max >= 0");
  const FieldSpec& F = *C.field();
  C.message_count();
  const auto ctx = detail::make_ward_context(C.field(), e_max + F.f);

  WardExponent out{e_max, true, std::nullopt};
  detail::for_each_ward_tuple(F.q, C.k(), [&](const std::vector<int>& r) {
    const Valuation v = detail::sigma_valuation(ctx, F, rows, r);
    if (v.saturated) return true;  // constraint sits at or above the cap
    long long dsum = 0;
    for (const int ri : r) dsum += digit_sum(ri, F.p);
    const long long bound =
        (dsum + static_cast<long long>(v.value - F.f) * (F.p - 1)) / (F.p - 1);
    // Nonzero congruent tuples have digit sum at least f (p-1), so the
    // constraint can never push the exponent below zero.
    detail::require(bound >= 0, "max_divisor_exponent: negative bound (internal)");
    if (bound < out.exponent) {
      out.exponent = static_cast<int>(bound);
      out.capped = false;
      out.binding = ExponentTuple{r, dsum};
    }
    return true;
  });
  return out;
}

namespace detail {

// One multiset entry for the bounded mode: the n-vector (lambda b_i)^r
// evaluated per coordinate, plus the exponent bookkeeping.
struct BoundedItem {
  int row = 0;
  Elem scale = 1;
  int exp = 1;
  long long sp = 0;               // S_p(exp)
  std::vector<Elem> powered;      // per column
};

template <class Visit>
void bounded_enumerate(const FieldSpec& F, const std::vector<std::vector<Elem>>& rows,
                       int max_len, Visit&& visit) {
  const int k = static_cast<int>(rows.size());
  const std::size_t n = rows[0].size();
  std::vector<BoundedItem> items;
  for (int i = 0; i < k; ++i) {
    for (Elem lambda = 1; lambda < F.q; ++lambda) {
      for (int r = 1; r < F.q; ++r) {
        BoundedItem it{i, lambda, r, digit_sum(r, F.p), std::vector<Elem>(n)};
        for (std::size_t j = 0; j < n; ++j) {
          it.powered[j] = F.pow(F.mul(lambda, rows[i][j]), r);
        }
        items.push_back(std::move(it));
      }
    }
  }
  // Multisets of at most max_len items: C(items + max_len, max_len) nodes.
  long double nodes = 1.0L;
  for (int m = 1; m <= max_len; ++m) {
    nodes = nodes * (items.size() + m) / m;
  }
  if (nodes > 5e6L) {
    throw error("bounded divisibility check: about " + std::to_string((long long)nodes) +
                " configurations exceed the 5e6 budget; use the tuple form instead");
  }

  std::vector<std::vector<Elem>> prods(max_len + 1, std::vector<Elem>(n, 1));
  std::vector<int> chosen;
  bool go = true;
  auto rec = [&](auto&& self, std::size_t start, int len, long long sum_r,
                 long long dsum) -> void {
    if (!go) return;
    if (len > 0 && sum_r % (F.q - 1) == 0) {
      go = visit(prods[len], chosen, dsum);
      if (!go) return;
    }
    if (len == max_len) return;
    for (std::size_t t = start; t < items.size(); ++t) {
      for (std::size_t j = 0; j < n; ++j) {
        prods[len + 1][j] = F.mul(prods[len][j], items[t].powered[j]);
      }
      chosen.push_back(static_cast<int>(t));
      self(self, t, len + 1, sum_r + items[t].exp, dsum + items[t].sp);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0, 0, 0);
}

}  // namespace detail

// Bounded-multiset form of ward_condition: same verdict derived from
// explicit multisets of scaled rows.  Only affordable for small q, k, L.
inline WardCheck ward_condition_bounded(const LinearCode& C,
                                        const std::vector<std::vector<Elem>>& rows,
                                        int e, int max_len) {
  detail::require_basis(C, rows, "ward_condition_bounded");
  if (e < 0) throw error("ward_condition_bounded: need e >= 0");
  if (max_len < C.k()) {
    throw error("ward_condition_bounded: max_len below k misses the tuple constraints");
  }
  const FieldSpec& F = *C.field();
  const auto ctx = detail::make_ward_context(C.field(), e + F.f);

  WardCheck out;
  detail::bounded_enumerate(
      F, rows, max_len,
      [&](const std::vector<Elem>& prod, const std::vector<int>& chosen, long long dsum) {
        const Valuation v = detail::lifted_sum_valuation(ctx, prod);
        if (detail::tuple_passes(F.p, F.f, e, dsum, v)) return true;
        out.holds = false;
        out.detail = "multiset of " + std::to_string(chosen.size()) +
                     " scaled rows: digit sum " + std::to_string(dsum) +
                     ", power-sum valuation " + std::to_string(v.value) +
                     " is too small for e = " + std::to_string(e);
        out.violation = ExponentTuple{std::vector<int>(chosen.begin(), chosen.end()), dsum};
        return false;
      });
  return out;
}

// Bounded-multiset form of max_divisor_exponent.
inline WardExponent max_divisor_exponent_bounded(const LinearCode& C,
                                                 const std::vector<std::vector<Elem>>& rows,
                                                 int e_max, int max_len) {
  detail::require_basis(C, rows, "max_divisor_exponent_bounded");
  if (e_max < 0) throw error("max_divisor_exponent_bounded: need e_max >= 0");
  if (max_len < C.k()) {
    throw error("max_divisor_exponent_bounded: max_len below k misses the tuple constraints");
  }
  const FieldSpec& F = *C.field();
  const auto ctx = detail::make_ward_context(C.field(), e_max + F.f);

  WardExponent out{e_max, true, std::nullopt};
  detail::bounded_enumerate(
      F, rows, max_len,
      [&](const std::vector<Elem>& prod, const std::vector<int>& chosen, long long dsum) {
        const Valuation v = detail::lifted_sum_valuation(ctx, prod);
        if (v.saturated) return true;
        const long long bound =
            (dsum + static_cast<long long>(v.value - F.f) * (F.p - 1)) / (F.p - 1);
        detail::require(bound >= 0,
                        "max_divisor_exponent_bounded: negative bound (internal)");
        if (bound < out.exponent) {
          out.exponent = static_cast<int>(bound);
          out.capped = false;
          out.binding = ExponentTuple{std::vector<int>(chosen.begin(), chosen.end()), dsum};
        }
        return true;
      });
  return out;
}

}  // namespace griesmer

#endif  // GRIESMER_WARD_HPP
