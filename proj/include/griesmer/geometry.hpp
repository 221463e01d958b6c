#ifndef GRIESMER_GEOMETRY_HPP
#define GRIESMER_GEOMETRY_HPP

// Projective multiset view of a full-length linear code: generator columns
// read as points of PG(k-1, q) with multiplicities, hyperplane incidence
// counts, and restrictions of the multiset to a hyperplane.

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/field.hpp"

namespace griesmer {

struct PGSpace {
  Field field;
  int k = 0;  // coordinates per point; the geometry is PG(k-1, q)
  std::vector<std::vector<Elem>> points;      // canonical representatives, lex order
  std::map<std::vector<Elem>, int> position;  // canonical point -> index in points

  int point_count() const { return static_cast<int>(points.size()); }
};

using PG = std::shared_ptr<const PGSpace>;

// Canonical points of PG(k-1, q) in lexicographic order, first coordinate
// most significant; each line through the origin is represented by the
// unique vector on it whose leading nonzero entry is 1.  By duality the same
// list indexes hyperplanes: index h stands for {x : points[h] . x = 0}.
// Spaces are cached per (field, k).
inline PG pg_space(const Field& field, int k) {
  if (k < 1) {
    throw error("pg_space: need k >= 1, got " + std::to_string(k));
  }
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= field->q;
    if (total > enumeration_guard()) {
      throw error("pg_space: q^k for q=" + std::to_string(field->q) +
                  ", k=" + std::to_string(k) + " exceeds the enumeration guard (" +
                  std::to_string(enumeration_guard()) + ")");
    }
  }

  static std::map<std::tuple<int, int, std::vector<int>, int>, PG> cache;
  const auto key = std::make_tuple(field->p, field->f, field->modulus, k);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto space = std::make_shared<PGSpace>();
  space->field = field;
  space->k = k;
  const Elem q = field->q;
  std::vector<Elem> coords(k);
  for (long long v = 1; v < total; ++v) {
    long long rest = v;
    for (int i = k - 1; i >= 0; --i) {
      coords[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    int lead = 0;
    while (coords[lead] == 0) ++lead;
    if (coords[lead] != 1) continue;
    space->position.emplace(coords, space->point_count());
    space->points.push_back(coords);
  }
  assert(space->point_count() == (total - 1) / (q - 1));
  PG result = space;
  cache.emplace(key, result);
  return result;
}

// Index of the projective point spanned by v (any nonzero vector).
inline int canonical_point_index(const PG& pg, const std::vector<Elem>& v) {
  if (static_cast<int>(v.size()) != pg->k) {
    throw error("canonical_point_index: expected " + std::to_string(pg->k) +
                " coordinates, got " + std::to_string(v.size()));
  }
  const FieldSpec& F = *pg->field;
  int lead = -1;
  for (int i = 0; i < pg->k; ++i) {
    F.check(v[i]);
    if (lead < 0 && v[i] != 0) lead = i;
  }
  if (lead < 0) throw error("canonical_point_index: the zero vector spans no point");
  std::vector<Elem> c(v);
  if (c[lead] != 1) {
    const Elem scale = F.inv(c[lead]);
    for (int i = lead; i < pg->k; ++i) c[i] = F.mul(c[i], scale);
  }
  const auto it = pg->position.find(c);
  assert(it != pg->position.end());  // every canonical vector is enumerated
  return it->second;
}

namespace detail {

inline bool on_hyperplane(const FieldSpec& F, const std::vector<Elem>& h,
                          const std::vector<Elem>& x) {
  Elem s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s = F.add(s, F.mul(h[i], x[i]));
  return s == 0;
}

}  // namespace detail

// Multiset of projective points: mult[i] copies of pg->points[i].
struct PointMultiset {
  PG pg;
  std::vector<long long> mult;
  long long total = 0;
};

inline PointMultiset multiset_of(const LinearCode& code) {
  PointMultiset m;
  m.pg = pg_space(code.field(), code.k());
  m.mult.assign(m.pg->point_count(), 0);
  std::vector<Elem> column(code.k());
  for (int j = 0; j < code.n(); ++j) {
    for (int r = 0; r < code.k(); ++r) column[r] = code.gen().at(r, j);
    ++m.mult[canonical_point_index(m.pg, column)];
  }
  m.total = code.n();
  return m;
}

// M(H) for the hyperplane with point index h: points counted with multiplicity.
inline long long hyperplane_count(const PointMultiset& m, int h) {
  const auto& hv = m.pg->points.at(h);
  const FieldSpec& F = *m.pg->field;
  long long count = 0;
  for (int i = 0; i < m.pg->point_count(); ++i) {
    if (m.mult[i] != 0 && detail::on_hyperplane(F, hv, m.pg->points[i])) {
      count += m.mult[i];
    }
  }
  return count;
}

inline std::vector<long long> hyperplane_counts(const PointMultiset& m) {
  std::vector<long long> counts(m.pg->point_count());
  for (int h = 0; h < m.pg->point_count(); ++h) counts[h] = hyperplane_count(m, h);
  return counts;
}

// Maximum point multiplicity.
inline long long gamma(const PointMultiset& m) {
  long long g = 0;
  for (long long c : m.mult) g = std::max(g, c);
  return g;
}

// Number of distinct points attaining the maximum multiplicity.
inline long long endpoint_count(const PointMultiset& m) {
  const long long g = gamma(m);
  if (g == 0) return 0;
  return std::count(m.mult.begin(), m.mult.end(), g);
}

// Lower bound for endpoint_count of a [g_q(k,d), k, d] code: g_q(k, t) with
// t = d - (ceil(d / q^(k-1)) - 1) * q^(k-1), the part of d above the largest
// multiple of q^(k-1) below it.
inline long long endpoint_lower_bound(Elem q, int k, long long d) {
  if (k < 1 || d < 1) {
    throw error("endpoint_lower_bound: need k >= 1 and d >= 1");
  }
  long long power = 1;  // q^(k-1), capped once it exceeds d
  for (int i = 0; i + 1 < k && power <= d; ++i) power *= q;
  long long t = d;
  if (power <= d) {
    const long long g = (d + power - 1) / power;
    t = d - (g - 1) * power;
  }
  return griesmer_bound(q, k, t);
}

struct DivisibilityWitness {
  bool divisible = true;
  int hyperplane = -1;  // index with M(H) != |M| (mod delta), when not divisible
};

// A multiset is delta-divisible when M(H) = |M| (mod delta) for every
// hyperplane H of its ambient space.
inline DivisibilityWitness multiset_divisible(const PointMultiset& m, long long delta) {
  if (delta < 1) throw error("multiset_divisible: need delta >= 1");
  for (int h = 0; h < m.pg->point_count(); ++h) {
    if (hyperplane_count(m, h) % delta != m.total % delta) {
      return {false, h};
    }
  }
  return {true, -1};
}

// Restriction to hyperplane h in the ambient coordinates: multiplicities of
// points off the hyperplane drop to zero.
inline PointMultiset restrict_to_hyperplane(const PointMultiset& m, int h) {
  const auto& hv = m.pg->points.at(h);
  const FieldSpec& F = *m.pg->field;
  PointMultiset r;
  r.pg = m.pg;
  r.mult.assign(m.pg->point_count(), 0);
  for (int i = 0; i < m.pg->point_count(); ++i) {
    if (m.mult[i] != 0 && detail::on_hyperplane(F, hv, m.pg->points[i])) {
      r.mult[i] = m.mult[i];
      r.total += m.mult[i];
    }
  }
  return r;
}

// Restriction to hyperplane h, re-coordinatized: points on H are expressed in
// a basis of H, so the result lives in PG(k-2, q) and has hyperplanes of its
// own.  The basis comes from the null space of h and is deterministic.
inline PointMultiset restrict_rebased(const PointMultiset& m, int h) {
  const int k = m.pg->k;
  if (k < 2) {
    throw error("restrict_rebased: ambient PG(k-1, q) needs k >= 2, got k=" +
                std::to_string(k));
  }
  const Field& field = m.pg->field;
  const auto& hv = m.pg->points.at(h);

  FqMatrix normal(field, k, 1);
  for (int i = 0; i < k; ++i) normal.at(i, 0) = hv[i];
  const auto basis_rows = null_space_left(normal);
  assert(static_cast<int>(basis_rows.size()) == k - 1);
  FqMatrix basis(field, k - 1, k);
  for (int r = 0; r < k - 1; ++r) basis.set_row(r, basis_rows[r]);

  PointMultiset r;
  r.pg = pg_space(field, k - 1);
  r.mult.assign(r.pg->point_count(), 0);
  const FieldSpec& F = *field;
  for (int i = 0; i < m.pg->point_count(); ++i) {
    if (m.mult[i] == 0 || !detail::on_hyperplane(F, hv, m.pg->points[i])) continue;
    const auto coords = solve_left(basis, m.pg->points[i]);
    assert(coords.has_value());  // the basis spans H and the point lies on H
    r.mult[canonical_point_index(r.pg, *coords)] += m.mult[i];
    r.total += m.mult[i];
  }
  return r;
}

// Sorted nonzero multiplicities; equal for linearly isomorphic multisets.
inline std::vector<long long> multiplicity_spectrum(const PointMultiset& m) {
  std::vector<long long> s;
  for (long long c : m.mult) {
    if (c != 0) s.push_back(c);
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Sorted hyperplane counts; also invariant under linear isomorphism.
inline std::vector<long long> hyperplane_spectrum(const PointMultiset& m) {
  auto counts = hyperplane_counts(m);
  std::sort(counts.begin(), counts.end());
  return counts;
}

// Generator matrix with the multiset's points as columns (index order,
// repeated per multiplicity).  Fails if the points do not span.
inline LinearCode code_from_multiset(const PointMultiset& m) {
  if (m.total == 0) throw error("code_from_multiset: empty multiset");
  const Field& field = m.pg->field;
  FqMatrix gen(field, m.pg->k, static_cast<int>(m.total));
  int col = 0;
  for (int i = 0; i < m.pg->point_count(); ++i) {
    for (long long c = 0; c < m.mult[i]; ++c) {
      for (int r = 0; r < m.pg->k; ++r) gen.at(r, col) = m.pg->points[i][r];
      ++col;
    }
  }
  return LinearCode(field, gen);
}

}  // namespace griesmer

#endif  // GRIESMER_GEOMETRY_HPP
