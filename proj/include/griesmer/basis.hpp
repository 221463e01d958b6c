#ifndef GRIESMER_BASIS_HPP
#define GRIESMER_BASIS_HPP

// Distinguished generator bases for Griesmer codes.  With e the largest
// exponent such that q^e divides d, a basis a_1, ..., a_k is certified when
//   * prefix(j), j <= min(e+1, k): the span of a_1..a_j has effective length
//     g_q(j, d) and every nonzero word in it has weight exactly d;
//   * omit(i): the span of the k-1 rows other than a_i has effective length
//     g_q(k-1, d) and minimum distance d;
//   * ledger(j): in basis coordinates exactly ceil(d / q^(k-1)) columns are
//     proportional to the j-th unit vector.
// verify_basis evaluates every clause and returns the certificate;
// construct_basis produces rows passing all of them, by peeling a minimum-
// weight word off the code and recursing on the residual code.

#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/field.hpp"

namespace griesmer {

struct BasisClause {
  std::string id;  // "prefix(j)", "omit(i)" or "ledger(j)"
  bool ok = true;
  std::string detail;
};

struct BasisCertificate {
  bool ok = true;
  int prefix_rows = 0;  // min(e+1, k)
  long long gamma = 0;  // ceil(d / q^(k-1))
  std::vector<BasisClause> clauses;
  std::vector<std::vector<int>> unit_columns;  // per basis row, in basis coordinates

  std::string first_failure() const {
    for (const auto& c : clauses) {
      if (!c.ok) return c.id;
    }
    return {};
  }
};

struct BasisResult {
  std::vector<std::vector<Elem>> rows;
  BasisCertificate certificate;
};

namespace detail {

// Largest e with q^e dividing d.
inline int q_adic_exponent(long long q, long long d) {
  int e = 0;
  while (d % q == 0) {
    d /= q;
    ++e;
  }
  return e;
}

// Applies fn to every nonzero word in the span of the given rows.
template <class Fn>
void for_each_span_word(const FieldSpec& F,
                        const std::vector<const std::vector<Elem>*>& rows, Fn&& fn) {
  long long combos = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) combos *= F.q;
  std::vector<Elem> acc;
  for (long long t = 1; t < combos; ++t) {
    acc.assign(rows[0]->size(), 0);
    long long tt = t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Elem c = static_cast<Elem>(tt % F.q);
      tt /= F.q;
      if (c != 0) add_scaled(F, acc, *rows[i], c);
    }
    fn(acc);
  }
}

inline int span_effective_length(const std::vector<const std::vector<Elem>*>& rows) {
  int eff = 0;
  for (std::size_t c = 0; c < rows[0]->size(); ++c) {
    bool zero = true;
    for (const auto* r : rows) zero = zero && ((*r)[c] == 0);
    eff += !zero;
  }
  return eff;
}

}  // namespace detail

inline BasisCertificate verify_basis(const LinearCode& C,
                                     const std::vector<std::vector<Elem>>& rows) {
  const FieldSpec& F = *C.field();
  const int k = C.k();
  detail::require_basis(C, rows, "verify_basis");

  const int d = min_distance(C);
  BasisCertificate cert;
  cert.prefix_rows = std::min(detail::q_adic_exponent(F.q, d) + 1, k);
  long long power = 1;  // q^(k-1), capped once it exceeds d
  for (int i = 0; i + 1 < k && power <= d; ++i) power *= F.q;
  cert.gamma = (d + power - 1) / power;

  const auto add_clause = [&cert](std::string id, bool ok, std::string detail) {
    cert.ok = cert.ok && ok;
    cert.clauses.push_back({std::move(id), ok, std::move(detail)});
  };

  for (int j = 1; j <= cert.prefix_rows; ++j) {
    std::vector<const std::vector<Elem>*> prefix;
    for (int i = 0; i < j; ++i) prefix.push_back(&rows[i]);
    const long long expected = griesmer_bound(F.q, j, d);
    const int eff = detail::span_effective_length(prefix);
    int off_weight = -1;
    detail::for_each_span_word(F, prefix, [&](const std::vector<Elem>& w) {
      const int wt = weight(w);
      if (wt != d && off_weight < 0) off_weight = wt;
    });
    std::string detail_msg;
    if (eff != expected) {
      detail_msg = "effective length " + std::to_string(eff) + ", expected " +
                   std::to_string(expected);
    } else if (off_weight >= 0) {
      detail_msg = "word of weight " + std::to_string(off_weight) +
                   " in a span expected to have constant weight " + std::to_string(d);
    }
    add_clause("prefix(" + std::to_string(j) + ")", detail_msg.empty(), detail_msg);
  }

  if (k >= 2) {
    for (int omit = 1; omit <= k; ++omit) {
      std::vector<const std::vector<Elem>*> others;
      for (int i = 0; i < k; ++i) {
        if (i != omit - 1) others.push_back(&rows[i]);
      }
      const long long expected = griesmer_bound(F.q, k - 1, d);
      const int eff = detail::span_effective_length(others);
      int dmin = C.n() + 1;
      detail::for_each_span_word(F, others, [&](const std::vector<Elem>& w) {
        dmin = std::min(dmin, weight(w));
      });
      std::string detail_msg;
      if (eff != expected) {
        detail_msg = "effective length " + std::to_string(eff) + ", expected " +
                     std::to_string(expected);
      } else if (dmin != d) {
        detail_msg = "minimum distance " + std::to_string(dmin) + ", expected " +
                     std::to_string(d);
      }
      add_clause("omit(" + std::to_string(omit) + ")", detail_msg.empty(), detail_msg);
    }
  }

  cert.unit_columns.assign(k, {});
  for (int c = 0; c < C.n(); ++c) {
    int nonzero_row = -1;
    bool multiple = false;
    for (int i = 0; i < k; ++i) {
      if (rows[i][c] != 0) {
        multiple = (nonzero_row >= 0);
        if (multiple) break;
        nonzero_row = i;
      }
    }
    if (nonzero_row >= 0 && !multiple) cert.unit_columns[nonzero_row].push_back(c);
  }
  for (int j = 1; j <= k; ++j) {
    const auto count = static_cast<long long>(cert.unit_columns[j - 1].size());
    std::string detail_msg;
    if (count != cert.gamma) {
      detail_msg = std::to_string(count) + " columns proportional to unit vector " +
                   std::to_string(j) + ", expected " + std::to_string(cert.gamma);
    }
    add_clause("ledger(" + std::to_string(j) + ")", detail_msg.empty(), detail_msg);
  }

  return cert;
}

namespace detail {

inline std::vector<std::vector<Elem>> certified_basis_rows(const LinearCode& C) {
  const FieldSpec& F = *C.field();
  const int k = C.k();
  const int d = min_distance(C);

  // Once q^(k-1) divides d the code has constant weight d, so every basis
  // satisfies the clauses; keep the generator rows.
  if (q_adic_exponent(F.q, d) >= k - 1) {
    std::vector<std::vector<Elem>> rows;
    for (int i = 0; i < k; ++i) rows.push_back(C.gen().row(i));
    return rows;
  }

  const std::vector<Elem> a1 = min_weight_codeword(C);
  const auto sup = supplementary_subcode(C, a1);

  std::vector<int> keep;
  for (int c = 0; c < C.n(); ++c) {
    if (a1[c] == 0) keep.push_back(c);
  }
  FqMatrix rgen(C.field(), k - 1, static_cast<int>(keep.size()));
  for (int i = 0; i < k - 1; ++i) {
    for (int j = 0; j < static_cast<int>(keep.size()); ++j) {
      rgen.at(i, j) = sup[i][keep[j]];
    }
  }
  const LinearCode R(C.field(), rgen);

  const int dr = (d + F.q - 1) / F.q;
  require(min_distance(R) == dr && is_griesmer(R),
          "construct_basis: peeled residual is not a Griesmer code of minimum "
          "distance ceil(d/q)");
  // Cross-check the preimage counts of a minimum-weight residual word.
  const LiftResult lift = lift_min_weight(C, a1, min_weight_codeword(R));
  if (d % F.q == 0) {
    require(lift.min_weight_preimage_count == F.q,
            "construct_basis: expected every preimage of a minimum-weight "
            "residual word to have weight d");
  } else {
    require(lift.min_weight_preimage_count >= d + F.q - static_cast<long long>(dr) * F.q,
            "construct_basis: too few minimum-weight preimages");
  }

  const auto sub = certified_basis_rows(R);
  std::vector<std::vector<Elem>> rows{a1};
  for (const auto& r : sub) {
    const auto y = solve_left(rgen, r);
    require(y.has_value(), "construct_basis: residual row left the residual code");
    std::vector<Elem> a(C.n(), 0);
    for (int i = 0; i < k - 1; ++i) {
      if ((*y)[i] != 0) add_scaled(F, a, sup[i], (*y)[i]);
    }
    rows.push_back(std::move(a));
  }
  return rows;
}

}  // namespace detail

inline BasisResult construct_basis(const LinearCode& C) {
  if (!is_griesmer(C)) throw error("construct_basis: input is not a Griesmer code");
  BasisResult result;
  result.rows = detail::certified_basis_rows(C);
  result.certificate = verify_basis(C, result.rows);
  detail::require(result.certificate.ok,
                  "construct_basis: certificate clause " +
                      result.certificate.first_failure() + " failed");
  return result;
}

}  // namespace griesmer

#endif  // GRIESMER_BASIS_HPP
