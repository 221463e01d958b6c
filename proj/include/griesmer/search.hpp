#ifndef GRIESMER_SEARCH_HPP
#define GRIESMER_SEARCH_HPP

// Hunt for extremal codes with a conjectured-divisor blind spot.  A target
// [g_q(k,d), k, d]_q code is sought as a multiset of projective points of
// size n = g_q(k,d): multiplicities are capped at ceil(d / q^(k-1)) (every
// extremal code attains that cap and no point may exceed it), and a multiset
// is accepted exactly when no hyperplane holds more than n - d of its points
// with some hyperplane reaching n - d.  Found codes are re-verified from
// scratch and scored against the conjectured divisor; a failing verdict is
// the discovery the hunt is after.
//
// The default parameter window is the recipe regime: non-prime q >= 8,
// 4 <= k <= q-1, and f+1 <= nu_p(d) < min(f(q-2), f(k-1)).  Instances
// outside the window (useful for smoke tests) run with relax_recipe.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/geometry.hpp"
#include "griesmer/padic.hpp"
#include "griesmer/theorems.hpp"

namespace griesmer {

enum class SearchStrategy { exhaustive, random_walk };

inline SearchStrategy parse_strategy(const std::string& s) {
  if (s == "exhaustive") return SearchStrategy::exhaustive;
  if (s == "random") return SearchStrategy::random_walk;
  throw error("unknown search strategy '" + s + "' (expected exhaustive or random)");
}

struct SearchTask {
  int p = 2;
  int f = 1;
  int k = 2;
  int d = 1;
  SearchStrategy strategy = SearchStrategy::exhaustive;
  long long budget = 0;          // complete candidates to evaluate
  bool relax_recipe = false;     // lift the recipe window (not the structural checks)
  unsigned long long seed = 1;   // random strategy only
};

struct SearchFind {
  LinearCode code;
  TheoremVerdict conj1;
};

struct SearchReport {
  int n = 0;                   // target length
  long long candidates = 0;    // complete multisets evaluated
  bool completed = false;      // exhaustive strategy swept the entire space
  std::vector<SearchFind> finds;  // deduplicated by weight distribution
};

// Structural checks always apply; the recipe window only without relax.
inline Field validate_search_task(const SearchTask& t) {
  if (t.budget < 0) throw error("search: budget must be nonnegative");
  const Field field = make_field(t.p, t.f);
  const FieldSpec& F = *field;
  if (t.k < 2) throw error("search: need k >= 2");
  if (t.d < 1) throw error("search: need d >= 1");
  if (!t.relax_recipe) {
    if (F.f < 2 || F.q < 8) {
      throw error("search recipe: requires a non-prime field of order at least 8 "
                  "(relax_recipe overrides)");
    }
    if (t.k < 4 || t.k > F.q - 1) {
      throw error("search recipe: requires 4 <= k <= q-1 (relax_recipe overrides)");
    }
    const long long nu = nu_exact(BigInt(t.d), F.p);
    const long long hi = std::min<long long>(static_cast<long long>(F.f) * (F.q - 2),
                                             static_cast<long long>(F.f) * (t.k - 1));
    if (nu < F.f + 1 || nu >= hi) {
      throw error("search recipe: requires f+1 <= nu_p(d) < min(f(q-2), f(k-1)) "
                  "(relax_recipe overrides)");
    }
  }
  return field;
}

namespace detail {

struct SearchSpace {
  PG pg;
  int n = 0;          // target multiset size
  long long cap = 0;  // max points a hyperplane may hold: n - d
  int gmax = 0;       // per-point multiplicity cap
  std::vector<std::vector<int>> inc;  // point -> hyperplanes through it
};

inline SearchSpace make_search_space(const Field& field, int k, int d) {
  const FieldSpec& F = *field;
  SearchSpace s;
  s.pg = pg_space(field, k);
  const long long n = griesmer_bound(F.q, k, d);
  if (n > 20000) {
    throw error("search: target length " + std::to_string(n) + " is too large");
  }
  s.n = static_cast<int>(n);
  s.cap = n - d;
  long long power = 1;
  for (int i = 0; i < k - 1 && power < d; ++i) power *= F.q;
  s.gmax = static_cast<int>((d + power - 1) / power);
  const int P = s.pg->point_count();
  s.inc.resize(P);
  for (int pt = 0; pt < P; ++pt) {
    for (int h = 0; h < P; ++h) {
      if (on_hyperplane(F, s.pg->points[h], s.pg->points[pt])) s.inc[pt].push_back(h);
    }
  }
  return s;
}

// Exact number of multisets the exhaustive sweep would visit.
inline BigInt exhaustive_space_size(const SearchSpace& s) {
  std::vector<BigInt> ways(s.n + 1, 0);
  ways[0] = 1;
  for (int pt = 0; pt < s.pg->point_count(); ++pt) {
    std::vector<BigInt> next(s.n + 1, 0);
    for (int rem = 0; rem <= s.n; ++rem) {
      for (int m = 0; m <= s.gmax && m <= rem; ++m) next[rem] += ways[rem - m];
    }
    ways.swap(next);
  }
  return ways[s.n];
}

}  // namespace detail

inline SearchReport run_search(const SearchTask& t) {
  const Field field = validate_search_task(t);
  const detail::SearchSpace space = detail::make_search_space(field, t.k, t.d);
  const int P = space.pg->point_count();

  SearchReport report;
  report.n = space.n;

  std::vector<std::map<int, long long>> seen;  // weight distributions found
  const auto record = [&](const std::vector<long long>& mult) {
    PointMultiset ms{space.pg, mult, space.n};
    const LinearCode code = code_from_multiset(ms);
    detail::require(min_distance(code) == t.d && is_griesmer(code),
                    "search: accepted candidate failed re-verification");
    const auto wd = weight_distribution(code);
    if (std::find(seen.begin(), seen.end(), wd.counts) != seen.end()) return;
    seen.push_back(wd.counts);
    const std::string id = "find-" + std::to_string(report.finds.size() + 1);
    report.finds.push_back({code, verify_theorem(code, TheoremId::Conj1, id)});
  };

  if (static_cast<long long>(P) * space.gmax < space.n) {
    // No multiset under the multiplicity cap reaches the target size.
    report.completed = t.strategy == SearchStrategy::exhaustive;
    return report;
  }

  std::vector<long long> counts(P, 0);
  std::vector<long long> mult(P, 0);

  if (t.strategy == SearchStrategy::exhaustive) {
    const BigInt size = detail::exhaustive_space_size(space);
    if (size > 10'000'000) {
      throw error("search: about " + size.str() +
                  " candidate multisets exceed the exhaustive cap of 10^7; "
                  "use the random strategy");
    }

    bool stopped = false;
    auto rec = [&](auto&& self, int idx, int rem) -> void {
      if (stopped) return;
      if (rem == 0) {
        if (report.candidates >= t.budget) {
          stopped = true;
          return;
        }
        ++report.candidates;
        if (*std::max_element(counts.begin(), counts.end()) == space.cap) record(mult);
        return;
      }
      if (idx == P) return;
      const long long after = static_cast<long long>(P - idx - 1) * space.gmax;
      const int lo = static_cast<int>(std::max<long long>(0, rem - after));
      const int hi = std::min(space.gmax, rem);
      int applied = 0;
      bool blocked = false;
      for (int m = lo; m <= hi && !blocked; ++m) {
        while (applied < m) {
          for (const int h : space.inc[idx]) {
            if (++counts[h] > space.cap) blocked = true;
          }
          ++applied;
        }
        if (blocked) break;  // more copies only raise these counts
        mult[idx] = m;
        self(self, idx + 1, rem - m);
        if (stopped) break;
      }
      mult[idx] = 0;
      while (applied > 0) {
        for (const int h : space.inc[idx]) --counts[h];
        --applied;
      }
    };
    rec(rec, 0, space.n);
    report.completed = !stopped;
    return report;
  }

  // Random strategy: restarted hill climb on the largest hyperplane count.
  std::mt19937_64 rng(t.seed);
  std::uniform_int_distribution<int> pick(0, P - 1);
  const auto objective = [&]() { return *std::max_element(counts.begin(), counts.end()); };
  const long long stagnation_cap = 50LL * space.n;

  if (static_cast<long long>(P) * space.gmax == space.n) {
    // Saturated space: there is exactly one candidate and nothing to walk.
    if (t.budget > 0) {
      for (int pt = 0; pt < P; ++pt) {
        mult[pt] = space.gmax;
        for (const int h : space.inc[pt]) counts[h] += space.gmax;
      }
      ++report.candidates;
      if (objective() == space.cap) record(mult);
    }
    return report;
  }

  while (report.candidates < t.budget) {
    std::fill(mult.begin(), mult.end(), 0);
    std::fill(counts.begin(), counts.end(), 0);
    for (int unit = 0; unit < space.n; ++unit) {
      int pt = pick(rng);
      while (mult[pt] == space.gmax) pt = pick(rng);
      ++mult[pt];
      for (const int h : space.inc[pt]) ++counts[h];
    }
    ++report.candidates;
    long long obj = objective();
    if (obj == space.cap) {
      record(mult);
      continue;
    }

    long long stagnation = 0;
    while (report.candidates < t.budget && stagnation < stagnation_cap) {
      int from = -1;
      int to = -1;
      for (int attempt = 0; attempt < 64 && to < 0; ++attempt) {
        const int a = pick(rng);
        if (mult[a] == 0) continue;
        const int b = pick(rng);
        if (b == a || mult[b] == space.gmax) continue;
        from = a;
        to = b;
      }
      if (to < 0) break;  // no legal move found; restart from fresh
      --mult[from];
      ++mult[to];
      for (const int h : space.inc[from]) --counts[h];
      for (const int h : space.inc[to]) ++counts[h];
      ++report.candidates;
      const long long moved = objective();
      if (moved <= obj) {
        stagnation = moved < obj ? 0 : stagnation + 1;
        obj = moved;
        if (obj == space.cap) {
          record(mult);
          break;  // restart from a fresh multiset
        }
      } else {
        ++mult[from];
        --mult[to];
        for (const int h : space.inc[from]) ++counts[h];
        for (const int h : space.inc[to]) --counts[h];
        ++stagnation;
      }
    }
  }
  return report;
}

}  // namespace griesmer

#endif  // GRIESMER_SEARCH_HPP
