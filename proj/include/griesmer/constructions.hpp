#ifndef GRIESMER_CONSTRUCTIONS_HPP
#define GRIESMER_CONSTRUCTIONS_HPP

// Reference code families.  Every constructor re-verifies the defining
// parameters of what it built (length, dimension, weight distribution) and
// throws on mismatch, so a successfully returned code is certified.

#include <map>
#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/field.hpp"
#include "griesmer/geometry.hpp"

namespace griesmer {

namespace detail {

inline Field field_for_order(long long q) {
  const auto split = prime_power_split(q);
  if (!split) {
    throw error("field order " + std::to_string(q) + " is not a prime power");
  }
  return make_field(split->first, split->second);
}

inline void require_distribution(const LinearCode& code,
                                 const std::map<int, long long>& expected,
                                 const std::string& who) {
  require(weight_distribution(code).counts == expected,
          who + ": weight distribution differs from the defining one");
}

}  // namespace detail

// Simplex code: all points of PG(k-1, q) as columns, one each, in index
// order.  Parameters [(q^k - 1)/(q - 1), k, q^(k-1)], constant weight.
inline LinearCode simplex(Elem q, int k) {
  if (k < 1) throw error("simplex: need k >= 1, got " + std::to_string(k));
  const Field field = detail::field_for_order(q);
  const PG pg = pg_space(field, k);
  FqMatrix gen(field, k, pg->point_count());
  for (int j = 0; j < pg->point_count(); ++j) {
    for (int r = 0; r < k; ++r) gen.at(r, j) = pg->points[j][r];
  }
  LinearCode code(field, gen);

  long long weight = 1;  // q^(k-1)
  for (int i = 0; i + 1 < k; ++i) weight *= q;
  detail::require_distribution(
      code, {{0, 1}, {static_cast<int>(weight), weight * q - 1}}, "simplex");
  detail::require(is_griesmer(code), "simplex: not a Griesmer code");
  return code;
}

// First-order Reed-Muller code over GF(2): the all-ones row plus the m
// coordinate-bit rows (least significant bit first) over columns 0..2^m - 1.
// Parameters [2^m, m+1, 2^(m-1)].
inline LinearCode rm1(int m) {
  if (m < 1) throw error("rm1: need m >= 1, got " + std::to_string(m));
  if (m > 20) throw error("rm1: m = " + std::to_string(m) + " is too large");
  const Field field = make_field(2, 1);
  const int n = 1 << m;
  FqMatrix gen(field, m + 1, n);
  for (int j = 0; j < n; ++j) {
    gen.at(0, j) = 1;
    for (int b = 0; b < m; ++b) gen.at(b + 1, j) = (j >> b) & 1;
  }
  LinearCode code(field, gen);

  const int half = n / 2;
  detail::require_distribution(code, {{0, 1}, {half, 2LL * n - 2}, {n, 1}}, "rm1");
  detail::require(is_griesmer(code), "rm1: not a Griesmer code");
  return code;
}

// The [6, 3, 4] code over GF(4) whose columns are the points
// (1,0,0), (1,1,1), (1,w,w+1), (1,w+1,w), (0,0,1), (0,1,0), writing w for the
// generator of GF(4).  Weight distribution {0:1, 4:45, 6:18}.
inline LinearCode hexacode() {
  const Field field = make_field(2, 2);
  const std::vector<std::vector<Elem>> columns = {
      {1, 0, 0}, {1, 1, 1}, {1, 2, 3}, {1, 3, 2}, {0, 0, 1}, {0, 1, 0}};
  FqMatrix gen(field, 3, 6);
  for (int j = 0; j < 6; ++j) {
    for (int r = 0; r < 3; ++r) gen.at(r, j) = columns[j][r];
  }
  LinearCode code(field, gen);

  detail::require_distribution(code, {{0, 1}, {4, 45}, {6, 18}}, "hexacode");
  detail::require(is_griesmer(code), "hexacode: not a Griesmer code");
  return code;
}

// Hermitian unital code: the points (x, y, z) of PG(2, q0^2) with
// x^(q0+1) + y^(q0+1) + z^(q0+1) = 0 as columns.  Parameters
// [q0^3 + 1, 3, q0^3 - q0]; every line meets the point set in 1 or q0+1
// points, so the nonzero weights are q0^3 - q0 and q0^3.
inline LinearCode unital(Elem q0) {
  const auto split = detail::prime_power_split(q0);
  if (!split) {
    throw error("unital: order " + std::to_string(q0) + " is not a prime power");
  }
  const Field field = make_field(split->first, 2 * split->second);
  const FieldSpec& F = *field;
  const PG pg = pg_space(field, 3);
  std::vector<int> selected;
  for (int i = 0; i < pg->point_count(); ++i) {
    Elem norm_sum = 0;
    for (int r = 0; r < 3; ++r) {
      norm_sum = F.add(norm_sum, F.pow(pg->points[i][r], q0 + 1));
    }
    if (norm_sum == 0) selected.push_back(i);
  }
  const long long n = static_cast<long long>(q0) * q0 * q0 + 1;
  detail::require(static_cast<long long>(selected.size()) == n,
                  "unital: wrong point count");
  FqMatrix gen(field, 3, static_cast<int>(n));
  for (int j = 0; j < static_cast<int>(n); ++j) {
    for (int r = 0; r < 3; ++r) gen.at(r, j) = pg->points[selected[j]][r];
  }
  LinearCode code(field, gen);

  // Secant lines: (q0^3 + 1) q0^3 point pairs, (q0 + 1) q0 pairs per line.
  const long long q = F.q;
  const long long secants = static_cast<long long>(q0) * q0 * (q0 * q0 - q0 + 1);
  const long long tangents = (q * q + q + 1) - secants;
  const long long w_high = static_cast<long long>(q0) * q0 * q0;
  detail::require_distribution(code,
                               {{0, 1},
                                {static_cast<int>(w_high - q0), secants * (q - 1)},
                                {static_cast<int>(w_high), tangents * (q - 1)}},
                               "unital");
  detail::require(is_griesmer(code), "unital: not a Griesmer code");
  return code;
}

namespace detail {

// Lexicographically first monic irreducible quadratic t^2 + b t + c over
// GF(q), ordered by (b, c).
inline std::pair<Elem, Elem> first_anisotropic_quadratic(const FieldSpec& F) {
  for (Elem b = 0; b < F.q; ++b) {
    for (Elem c = 0; c < F.q; ++c) {
      bool has_root = false;
      for (Elem t = 0; t < F.q && !has_root; ++t) {
        if (F.add(F.add(F.mul(t, t), F.mul(b, t)), c) == 0) has_root = true;
      }
      if (!has_root) return {b, c};
    }
  }
  throw error("no irreducible quadratic found");  // impossible over a field
}

}  // namespace detail

// Ovoid code: the points of the elliptic quadric
// x0 x1 + x2^2 + b x2 x3 + c x3^2 = 0 in PG(3, q) as columns, with t^2+bt+c
// the first irreducible quadratic over GF(q).  Parameters [q^2 + 1, 4,
// q^2 - q]; no three of the points are collinear.
inline LinearCode ovoid(Elem q) {
  const Field field = detail::field_for_order(q);
  const FieldSpec& F = *field;
  const auto [b, c] = detail::first_anisotropic_quadratic(F);
  const PG pg = pg_space(field, 4);
  std::vector<int> selected;
  for (int i = 0; i < pg->point_count(); ++i) {
    const auto& x = pg->points[i];
    const Elem phi = F.add(F.add(F.mul(x[2], x[2]), F.mul(F.mul(b, x[2]), x[3])),
                           F.mul(c, F.mul(x[3], x[3])));
    if (F.add(F.mul(x[0], x[1]), phi) == 0) selected.push_back(i);
  }
  const long long n = static_cast<long long>(q) * q + 1;
  detail::require(static_cast<long long>(selected.size()) == n,
                  "ovoid: wrong point count");

  // No three of the points may be collinear (rank of every triple is 3).
  for (std::size_t a0 = 0; a0 < selected.size(); ++a0) {
    for (std::size_t a1 = a0 + 1; a1 < selected.size(); ++a1) {
      for (std::size_t a2 = a1 + 1; a2 < selected.size(); ++a2) {
        FqMatrix triple(field, 3, 4);
        triple.set_row(0, pg->points[selected[a0]]);
        triple.set_row(1, pg->points[selected[a1]]);
        triple.set_row(2, pg->points[selected[a2]]);
        detail::require(rank(triple) == 3, "ovoid: three points are collinear");
      }
    }
  }

  FqMatrix gen(field, 4, static_cast<int>(n));
  for (int j = 0; j < static_cast<int>(n); ++j) {
    for (int r = 0; r < 4; ++r) gen.at(r, j) = pg->points[selected[j]][r];
  }
  LinearCode code(field, gen);

  // Planes meet the quadric in 1 point (tangent) or q+1 points (conic).
  const long long planes =
      static_cast<long long>(q) * q * q + static_cast<long long>(q) * q + q + 1;
  const long long tangents = n;
  const long long conics = planes - tangents;
  detail::require_distribution(
      code,
      {{0, 1},
       {static_cast<int>(q * q - q), conics * (q - 1)},
       {static_cast<int>(q * q), tangents * (q - 1)}},
      "ovoid");
  detail::require(is_griesmer(code), "ovoid: not a Griesmer code");
  return code;
}

// Repetition code [n, 1, n] over GF(q).
inline LinearCode repetition(Elem q, int n) {
  if (n < 1) throw error("repetition: need n >= 1, got " + std::to_string(n));
  const Field field = detail::field_for_order(q);
  FqMatrix gen(field, 1, n);
  for (int j = 0; j < n; ++j) gen.at(0, j) = 1;
  LinearCode code(field, gen);
  detail::require_distribution(code, {{0, 1}, {n, q - 1LL}}, "repetition");
  detail::require(is_griesmer(code), "repetition: not a Griesmer code");
  return code;
}

// Reed-Solomon code: rows are the monomials 1, t, ..., t^(k-1) evaluated at
// the first n field elements (element order 0, 1, ..., n-1).  Parameters
// [n, k, n-k+1] with n <= q; meets the Griesmer bound.
inline LinearCode reed_solomon(Elem q, int n, int k) {
  const Field field = detail::field_for_order(q);
  if (k < 1 || n < k) {
    throw error("reed_solomon: need 1 <= k <= n, got k=" + std::to_string(k) +
                ", n=" + std::to_string(n));
  }
  if (n > q) {
    throw error("reed_solomon: need n <= q, got n=" + std::to_string(n) +
                ", q=" + std::to_string(q));
  }
  FqMatrix gen(field, k, n);
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < k; ++r) gen.at(r, j) = field->pow(j, r);
  }
  LinearCode code(field, gen);
  detail::require(min_distance(code) == n - k + 1,
                  "reed_solomon: minimum distance differs from n - k + 1");
  detail::require(is_griesmer(code), "reed_solomon: not a Griesmer code");
  return code;
}

struct NamedCode {
  std::string name;
  LinearCode code;
};

// Fixed catalogue of small certified codes used by the verification
// harnesses; every member is a Griesmer code and q^k stays small enough for
// exhaustive codeword enumeration.
inline std::vector<NamedCode> corpus() {
  std::vector<NamedCode> list;
  const auto add = [&list](std::string name, LinearCode code) {
    list.push_back({std::move(name), std::move(code)});
  };
  for (const auto& [q, k] : std::vector<std::pair<Elem, int>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    add("simplex(" + std::to_string(q) + "," + std::to_string(k) + ")", simplex(q, k));
  }
  for (int m : {2, 3, 4, 5}) {
    add("rm1(" + std::to_string(m) + ")", rm1(m));
  }
  add("hexacode", hexacode());
  add("unital(2)", unital(2));
  for (Elem q : {2, 3, 4}) {
    add("ovoid(" + std::to_string(q) + ")", ovoid(q));
  }
  add("repetition(2,4)", repetition(2, 4));
  add("repetition(3,5)", repetition(3, 5));
  add("rs(4,4,2)", reed_solomon(4, 4, 2));
  add("rs(5,5,3)", reed_solomon(5, 5, 3));
  add("rs(8,8,3)", reed_solomon(8, 8, 3));
  add("rs(9,9,3)", reed_solomon(9, 9, 3));
  return list;
}

}  // namespace griesmer

#endif  // GRIESMER_CONSTRUCTIONS_HPP
