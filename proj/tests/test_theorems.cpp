#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/constructions.hpp"
#include "griesmer/geometry.hpp"
#include "griesmer/theorems.hpp"

using namespace griesmer;

namespace {

LinearCode from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows) {
  FqMatrix g(f, static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()));
  for (int r = 0; r < g.rows; ++r) g.set_row(r, rows[r]);
  return LinearCode(f, g);
}

const LinearCode& by_name(const std::vector<NamedCode>& all, const std::string& name) {
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const NamedCode& nc) { return nc.name == name; });
  REQUIRE(it != all.end());
  return it->code;
}

int ceil_div(int a, long long b) { return static_cast<int>((a + b - 1) / b); }

// q^e, stopping early once the value passes cap (enough for comparisons).
long long capped_power(long long q, int e, long long cap) {
  long long out = 1;
  for (int i = 0; i < e && out <= cap; ++i) out *= q;
  return out;
}

}  // namespace

TEST_CASE("theorem selections parse, expand, and reject unknowns") {
  CHECK(parse_theorem_selection("t1.2") == std::vector<TheoremId>{TheoremId::T1_2});
  CHECK(parse_theorem_selection("t1.3") ==
        std::vector<TheoremId>{TheoremId::T1_3a, TheoremId::T1_3b});
  CHECK(parse_theorem_selection("t1.2,t1.3,t1.5,t1.6,conj1") ==
        std::vector<TheoremId>{TheoremId::T1_2, TheoremId::T1_3a, TheoremId::T1_3b,
                               TheoremId::T1_5, TheoremId::T1_6, TheoremId::Conj1});
  CHECK(parse_theorem_selection("t1.3b,conj1") ==
        std::vector<TheoremId>{TheoremId::T1_3b, TheoremId::Conj1});
  CHECK_THROWS_WITH(parse_theorem_selection("t9.9"),
                    Catch::Matchers::ContainsSubstring("unknown theorem id"));
  CHECK_THROWS_WITH(parse_theorem_selection(""),
                    Catch::Matchers::ContainsSubstring("empty"));
  for (const TheoremId id : all_theorems()) {
    CHECK(parse_theorem_selection(to_string(id)).front() == id);
  }
}

TEST_CASE("pinned verdicts on named codes") {
  SECTION("ovoid over GF(3): field-power divisor") {
    const auto v = verify_theorem(ovoid(3), TheoremId::T1_5, "ovoid(3)");
    CHECK(v.applicable);
    CHECK(v.p == 3);
    CHECK(v.f == 1);
    CHECK(v.q == 3);
    CHECK(v.n == 10);
    CHECK(v.k == 4);
    CHECK(v.d == 6);
    CHECK(v.e == 1);
    CHECK(v.claimed == 3);
    CHECK(v.observed == 3);
    CHECK(v.pass);
    CHECK_FALSE(v.conjecture);
    CHECK(v.code_id == "ovoid(3)");
  }

  SECTION("hexacode: every claim, including the sharpness of the divisor") {
    const auto hexa = hexacode();

    const auto a = verify_theorem(hexa, TheoremId::T1_3a);
    CHECK(a.applicable);
    CHECK(a.claimed == 2);
    CHECK(a.observed == 2);
    CHECK(a.pass);

    const auto b = verify_theorem(hexa, TheoremId::T1_3b);
    CHECK(b.applicable);
    CHECK(b.e == 2);
    CHECK(b.claimed == 2);
    CHECK(b.pass);
    // The divisor really is 2 and not 4, so the claim cannot be improved to
    // 2^e: this code is the standard sharpness witness.
    CHECK(b.observed == 2);
    CHECK(b.observed % 4 != 0);

    const auto prime = verify_theorem(hexa, TheoremId::T1_2);
    CHECK_FALSE(prime.applicable);
    CHECK(prime.pass);
    CHECK(prime.detail.find("f = 1") != std::string::npos);

    const auto five = verify_theorem(hexa, TheoremId::T1_5);
    CHECK(five.e == 1);
    CHECK(five.claimed == 2);
    CHECK(five.pass);

    const auto six = verify_theorem(hexa, TheoremId::T1_6);
    CHECK(six.e == 2);
    CHECK(six.claimed == 1);  // exponent 2 - (f-1)(q-2) = 0
    CHECK(six.pass);

    const auto conj = verify_theorem(hexa, TheoremId::Conj1);
    CHECK(conj.conjecture);
    CHECK(conj.claimed == 2);  // exponent 2 - (f-1) = 1
    CHECK(conj.pass);
  }

  SECTION("unital over GF(4): low valuation degenerates the claims") {
    const auto u = unital(2);
    const auto a = verify_theorem(u, TheoremId::T1_3a);
    CHECK_FALSE(a.applicable);
    CHECK(a.detail.find("q | d") != std::string::npos);
    const auto b = verify_theorem(u, TheoremId::T1_3b);
    CHECK(b.applicable);
    CHECK(b.e == 1);
    CHECK(b.claimed == 1);
    CHECK(b.pass);
    const auto five = verify_theorem(u, TheoremId::T1_5);
    CHECK(five.e == 0);
    CHECK(five.claimed == 1);
    const auto conj = verify_theorem(u, TheoremId::Conj1);
    CHECK(conj.claimed == 1);
  }

  SECTION("binary first-order family: all claims coincide at full strength") {
    const auto s = simplex(2, 4);  // [15, 4, 8], constant weight 8
    for (const TheoremId id :
         {TheoremId::T1_2, TheoremId::T1_5, TheoremId::T1_6, TheoremId::Conj1}) {
      const auto v = verify_theorem(s, id);
      INFO(to_string(id));
      CHECK(v.applicable);
      CHECK(v.e == 3);
      CHECK(v.claimed == 8);
      CHECK(v.observed == 8);
      CHECK(v.pass);
    }
  }

  SECTION("coprime distance: prime-field claim degenerates but applies") {
    const auto v = verify_theorem(repetition(3, 5), TheoremId::T1_2);
    CHECK(v.applicable);
    CHECK(v.e == 0);
    CHECK(v.claimed == 1);
    CHECK(v.observed == 5);
    CHECK(v.pass);
  }

  SECTION("MDS code over GF(5): q does not divide d") {
    const auto v = verify_theorem(reed_solomon(5, 5, 3), TheoremId::T1_3a);
    CHECK_FALSE(v.applicable);
    CHECK(v.observed == 1);  // weights 3, 4, 5
  }
}

TEST_CASE("every claim passes on every corpus code") {
  const auto verdicts = run_corpus();
  CHECK(verdicts.size() == 24 * 6);

  std::map<std::string, int> applicable_count;
  for (const auto& v : verdicts) {
    INFO(v.code_id << " / " << v.theorem);
    CHECK(v.pass);
    CHECK(v.pass == (v.observed % v.claimed == 0));
    CHECK(v.conjecture == (v.theorem == "conj1"));
    CHECK_FALSE(v.code_id.empty());
    CHECK_FALSE(v.witness.has_value());
    if (v.applicable) {
      ++applicable_count[v.theorem];
    } else {
      CHECK_FALSE(v.detail.empty());
    }
  }
  CHECK(applicable_count["t1.2"] == 16);   // prime-field corpus codes
  CHECK(applicable_count["t1.3a"] == 18);  // codes with q | d
  CHECK(applicable_count["t1.3b"] == 6);   // codes over GF(4)
  CHECK(applicable_count["t1.5"] == 24);
  CHECK(applicable_count["t1.6"] == 24);
  CHECK(applicable_count["conj1"] == 24);

  // Selection narrows the run.
  const auto only = run_corpus(parse_theorem_selection("conj1"));
  CHECK(only.size() == 24);
  for (const auto& v : only) CHECK(v.conjecture);
}

TEST_CASE("claims are checked on Griesmer codes only") {
  const auto f2 = make_field(2, 1);
  const auto not_griesmer = from_rows(f2, {{1, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_WITH(verify_theorem(not_griesmer, TheoremId::T1_5),
                    Catch::Matchers::ContainsSubstring("Griesmer"));
}

TEST_CASE("residual and shortened codes keep the predicted parameters") {
  for (const auto& entry : corpus()) {
    const auto& C = entry.code;
    if (C.k() < 2) continue;
    INFO(entry.name);
    const long long q = C.field()->q;
    const int d = min_distance(C);
    const int dq = ceil_div(d, q);

    // Puncturing away a minimum-weight support drops one dimension and
    // divides the distance by q, staying extremal.
    const auto res = residual(C, min_weight_codeword(C)).code;
    CHECK(res.k() == C.k() - 1);
    CHECK(res.n() == griesmer_bound(q, C.k() - 1, dq));
    CHECK(min_distance(res) == dq);
    CHECK(is_griesmer(res));

    // Shortening at a point of maximal multiplicity keeps the distance and
    // stays extremal.
    const PointMultiset ms = multiset_of(C);
    const long long g = gamma(ms);
    int at = -1;
    for (int i = 0; i < ms.pg->point_count(); ++i) {
      if (ms.mult[i] == g) {
        at = i;
        break;
      }
    }
    REQUIRE(at >= 0);
    const auto sh = shortened(C, ms.pg->points[at]).code;
    CHECK(sh.k() == C.k() - 1);
    CHECK(sh.n() == griesmer_bound(q, C.k() - 1, d));
    CHECK(min_distance(sh) == d);
    CHECK(is_griesmer(sh));
  }
}

TEST_CASE("maximum multiplicity, projectivity, and constant weight follow the distance") {
  for (const auto& entry : corpus()) {
    INFO(entry.name);
    const auto& C = entry.code;
    const long long q = C.field()->q;
    const int d = min_distance(C);
    const long long power = capped_power(q, C.k() - 1, d);

    const PointMultiset ms = multiset_of(C);
    CHECK(gamma(ms) == ceil_div(d, std::min<long long>(power, d + 1)));
    CHECK((gamma(ms) == 1) == (d <= power));

    // Distance divisible by q^(k-1) forces a single nonzero weight, and for
    // these extremal codes the converse holds as well.
    const auto wd = weight_distribution(C);
    const bool constant = wd.counts.size() == 2;
    CHECK(constant == (power <= d && d % power == 0));
    if (constant) CHECK(wd.counts.count(d) == 1);
  }
}

TEST_CASE("endpoint counts meet the lower bound") {
  for (const auto& entry : corpus()) {
    if (entry.code.k() < 2) continue;
    INFO(entry.name);
    const PointMultiset ms = multiset_of(entry.code);
    CHECK(endpoint_count(ms) >=
          endpoint_lower_bound(entry.code.field()->q, entry.code.k(),
                               min_distance(entry.code)));
  }
}

TEST_CASE("minimum-weight lifts have the predicted counts") {
  for (const auto& entry : corpus()) {
    const auto& C = entry.code;
    if (C.k() < 2) continue;
    INFO(entry.name);
    const long long q = C.field()->q;
    const int d = min_distance(C);
    const auto a = min_weight_codeword(C);
    const auto res = residual(C, a);
    const auto lifted = lift_min_weight(C, a, min_weight_codeword(res.code));
    CHECK(lifted.min_weight_preimage_count <= q);
    if (d % q == 0) {
      CHECK(lifted.min_weight_preimage_count == q);
    } else {
      CHECK(lifted.min_weight_preimage_count >= d + q - ceil_div(d, q) * q);
    }
  }
}

TEST_CASE("residual of any low-weight word keeps full rank and the distance bound") {
  for (const auto& entry : corpus()) {
    const auto& C = entry.code;
    if (C.k() < 2) continue;
    INFO(entry.name);
    const long long q = C.field()->q;
    const int d = min_distance(C);

    std::map<int, std::vector<Elem>> first_by_weight;
    for_each_codeword(C, [&](const std::vector<Elem>&, const std::vector<Elem>& word) {
      const int w = weight(word);
      if (w > 0) first_by_weight.emplace(w, word);
    });
    for (const auto& [w, word] : first_by_weight) {
      if (static_cast<long long>(w) * (q - 1) >= q * static_cast<long long>(d)) continue;
      if (w == C.n()) continue;  // nothing left to puncture to
      const auto res = residual(C, word).code;
      CHECK(res.k() == C.k() - 1);
      CHECK(min_distance(res) >= d - w + ceil_div(w, q));
    }
  }
}

TEST_CASE("rebased hyperplane sections inherit a q-fold smaller divisor") {
  int covered = 0;
  for (const auto& entry : corpus()) {
    const auto& C = entry.code;
    const long long q = C.field()->q;
    if (C.k() < 2) continue;
    const long long delta = divisor_and_exponent(C).delta;
    if (delta % q != 0) continue;
    INFO(entry.name);
    ++covered;
    const PointMultiset ms = multiset_of(C);
    for (int h = 0; h < ms.pg->point_count(); ++h) {
      CHECK(multiset_divisible(restrict_rebased(ms, h), delta / q).divisible);
    }
  }
  CHECK(covered == 16);  // simplex, first-order, and ovoid families qualify
}

TEST_CASE("hyperplane sections match residual multisets across the corpus") {
  for (const auto& entry : corpus()) {
    const auto& C = entry.code;
    if (C.k() < 2) continue;
    INFO(entry.name);
    const PointMultiset ms = multiset_of(C);
    for (int h = 0; h < ms.pg->point_count(); ++h) {
      if (hyperplane_count(ms, h) == 0) continue;  // nothing restricts
      const std::vector<Elem> a = C.codeword(ms.pg->points[h]);
      if (weight(a) == C.n()) continue;  // residual undefined
      const PointMultiset rebased = restrict_rebased(ms, h);
      const PointMultiset res_ms = multiset_of(residual(C, a).code);
      CHECK(multiplicity_spectrum(rebased) == multiplicity_spectrum(res_ms));
      if (res_ms.pg->k == ms.pg->k - 1) {
        CHECK(hyperplane_spectrum(rebased) == hyperplane_spectrum(res_ms));
      }
    }
  }
}
