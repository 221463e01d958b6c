#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "griesmer/code.hpp"
#include "griesmer/constructions.hpp"

using namespace griesmer;

namespace {

struct GuardRestore {
  long long old_value = enumeration_guard();
  ~GuardRestore() { enumeration_guard() = old_value; }
};

LinearCode from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows,
                     bool allow_zero_columns = false) {
  FqMatrix g(f, static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()));
  for (int r = 0; r < g.rows; ++r) g.set_row(r, rows[r]);
  return LinearCode(f, g, allow_zero_columns);
}

std::vector<Elem> column_of(const LinearCode& c, int j) {
  std::vector<Elem> col(c.k());
  for (int r = 0; r < c.k(); ++r) col[r] = c.gen().at(r, j);
  return col;
}

int span_min_weight(const Field& f, const std::vector<std::vector<Elem>>& rows) {
  const FieldSpec& F = *f;
  long long combos = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) combos *= F.q;
  int best = -1;
  for (long long t = 1; t < combos; ++t) {
    long long tt = t;
    std::vector<Elem> acc(rows[0].size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Elem c = static_cast<Elem>(tt % F.q);
      tt /= F.q;
      if (c != 0) add_scaled(F, acc, rows[i], c);
    }
    const int w = weight(acc);
    if (best < 0 || w < best) best = w;
  }
  return best;
}

int effective_length(const std::vector<std::vector<Elem>>& rows) {
  int eff = 0;
  for (std::size_t c = 0; c < rows[0].size(); ++c) {
    bool zero = true;
    for (const auto& r : rows) zero = zero && (r[c] == 0);
    eff += !zero;
  }
  return eff;
}

}  // namespace

TEST_CASE("Griesmer bound: pinned values and argument checks") {
  CHECK(griesmer_bound(2, 3, 4) == 7);
  CHECK(griesmer_bound(4, 3, 4) == 6);
  CHECK(griesmer_bound(4, 3, 6) == 9);
  CHECK(griesmer_bound(2, 1, 5) == 5);
  CHECK(griesmer_bound(3, 2, 9) == 12);
  CHECK(griesmer_bound(2, 4, 8) == 15);
  CHECK(griesmer_bound(9, 3, 9) == 11);
  CHECK(griesmer_bound(2, 5, 1) == 5);
  // Once q^i reaches d the remaining terms are all 1; no overflow for huge d.
  CHECK(griesmer_bound(2, 2, 1LL << 40) == (1LL << 40) + (1LL << 39));
  CHECK(griesmer_bound(2, 64, 2) == 3 + 62);

  CHECK_THROWS_AS(griesmer_bound(1, 3, 4), error);
  CHECK_THROWS_AS(griesmer_bound(2, 0, 4), error);
  CHECK_THROWS_AS(griesmer_bound(2, 3, 0), error);
}

TEST_CASE("LinearCode constructor validation") {
  const Field f2 = make_field(2, 1);
  const Field f3 = make_field(3, 1);

  const LinearCode c = from_rows(f2, {{1, 0, 1}, {0, 1, 1}});
  CHECK(c.k() == 2);
  CHECK(c.n() == 3);
  CHECK(c.q() == 2);

  // Zero column rejected unless explicitly allowed.
  CHECK_THROWS_WITH(from_rows(f2, {{1, 0, 0}, {0, 1, 0}}),
                    Catch::Matchers::ContainsSubstring("zero column"));
  CHECK_NOTHROW(from_rows(f2, {{1, 0, 0}, {0, 1, 0}}, true));

  // Dependent rows rejected.
  CHECK_THROWS_WITH(from_rows(f2, {{1, 0, 1}, {1, 0, 1}}),
                    Catch::Matchers::ContainsSubstring("dependent"));

  // Generator built over a different field than the code's field.
  FqMatrix over_f2(f2, 1, 2);
  over_f2.at(0, 0) = 1;
  over_f2.at(0, 1) = 1;
  CHECK_THROWS_WITH(LinearCode(f3, over_f2),
                    Catch::Matchers::ContainsSubstring("field mismatch"));

  // Entries outside the field range.
  FqMatrix bad(f3, 1, 2);
  bad.at(0, 0) = 1;
  bad.at(0, 1) = 5;
  CHECK_THROWS_AS(LinearCode(f3, bad), error);
}

TEST_CASE("codeword evaluation and message order") {
  const LinearCode s22 = simplex(2, 2);
  // Columns of simplex(2,2) are the points 01, 10, 11 in lexicographic order.
  CHECK(column_of(s22, 0) == std::vector<Elem>{0, 1});
  CHECK(column_of(s22, 1) == std::vector<Elem>{1, 0});
  CHECK(column_of(s22, 2) == std::vector<Elem>{1, 1});

  std::vector<std::vector<Elem>> messages;
  for_each_codeword(s22, [&](const std::vector<Elem>& m, const std::vector<Elem>& w) {
    messages.push_back(m);
    CHECK(w == s22.codeword(m));
  });
  const std::vector<std::vector<Elem>> expected = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(messages == expected);

  CHECK_THROWS_AS(s22.codeword({1}), error);
}

TEST_CASE("weight distributions: pinned reference values") {
  CHECK(weight_distribution(simplex(2, 3)).counts ==
        std::map<int, long long>{{0, 1}, {4, 7}});
  CHECK(weight_distribution(repetition(3, 5)).counts ==
        std::map<int, long long>{{0, 1}, {5, 2}});
  CHECK(weight_distribution(hexacode()).counts ==
        std::map<int, long long>{{0, 1}, {4, 45}, {6, 18}});
  CHECK(weight_distribution(rm1(3)).counts ==
        std::map<int, long long>{{0, 1}, {4, 14}, {8, 1}});

  CHECK(min_distance(simplex(3, 3)) == 9);
  CHECK(simplex(3, 3).n() == 13);
  CHECK(is_griesmer(simplex(3, 3)));

  // Scalar orbits: every nonzero-weight count is a multiple of q - 1.
  for (const auto& code : {hexacode(), simplex(3, 2), reed_solomon(5, 5, 3)}) {
    const auto wd = weight_distribution(code);
    for (const auto& [w, count] : wd.counts) {
      if (w > 0) CHECK(count % (code.q() - 1) == 0);
    }
    CHECK(wd.total() == code.message_count());
  }
}

TEST_CASE("divisor of a code: gcd of nonzero weights and its p-part") {
  const auto check_divisor = [](const LinearCode& c, long long delta, int e) {
    const DivisorInfo info = divisor_and_exponent(c);
    CHECK(info.delta == delta);
    CHECK(info.p_exponent == e);
  };
  check_divisor(hexacode(), 2, 1);        // gcd(4, 6) = 2 over GF(4), p = 2
  check_divisor(simplex(2, 3), 4, 2);     // constant weight 4, p = 2
  check_divisor(simplex(3, 3), 9, 2);     // constant weight 9, p = 3
  check_divisor(repetition(3, 5), 5, 0);  // weight 5, coprime to p = 3
  check_divisor(reed_solomon(5, 5, 3), 1, 0);
}

TEST_CASE("agreement profiles partition supports") {
  // For nonzero words a, b and alpha != 0:
  //   wt(a - alpha b) = wt(a) + wt(b) - |common support| - A_alpha,
  // and the common support size is the sum of all A_alpha.
  for (const auto& code : {hexacode(), simplex(3, 2)}) {
    const FieldSpec& F = *code.field();
    std::vector<std::vector<Elem>> words;
    for_each_codeword(code, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
      if (weight(w) > 0) words.push_back(w);
    });
    for (const auto& a : words) {
      for (const auto& b : words) {
        const AgreementProfile prof = agreement_profile(F, a, b);
        CHECK(residual_weight(b, a) + prof.total() == weight(b));
        for (Elem alpha = 1; alpha < F.q; ++alpha) {
          std::vector<Elem> diff = a;
          add_scaled(F, diff, b, F.neg(alpha));
          CHECK(weight(diff) ==
                weight(a) + weight(b) - prof.total() - prof.at(alpha));
        }
      }
    }
  }

  const Field f2 = make_field(2, 1);
  CHECK_THROWS_AS(agreement_profile(*f2, {0, 0}, {1, 0}), error);
  CHECK_THROWS_AS(agreement_profile(*f2, {1}, {1, 0}), error);
}

TEST_CASE("residual codes: pinned instances") {
  const LinearCode hexa = hexacode();
  const std::vector<Elem> a = min_weight_codeword(hexa);
  REQUIRE(weight(a) == 4);

  const DerivedCode res = residual(hexa, a);
  CHECK(res.code.k() == 2);
  CHECK(res.code.n() == 2);
  CHECK(min_distance(res.code) == 1);  // ceil(4 / 4)
  CHECK(is_griesmer(res.code));
  // Columns map to the complement of supp(a), in order.
  std::vector<int> expected_cols;
  for (int c = 0; c < hexa.n(); ++c)
    if (a[c] == 0) expected_cols.push_back(c);
  CHECK(res.columns == expected_cols);

  const LinearCode s23 = simplex(2, 3);
  const DerivedCode res2 = residual(s23, min_weight_codeword(s23));
  CHECK(res2.code.k() == 2);
  CHECK(res2.code.n() == 3);
  CHECK(min_distance(res2.code) == 2);  // ceil(4 / 2)
  CHECK(is_griesmer(res2.code));

  CHECK_THROWS_WITH(residual(hexa, std::vector<Elem>(6, 0)),
                    Catch::Matchers::ContainsSubstring("zero codeword"));
  CHECK_THROWS_WITH(residual(hexa, {1, 0, 0, 0, 0, 0}),
                    Catch::Matchers::ContainsSubstring("not in the code"));
  // Repetition codewords cover every coordinate, leaving nothing to keep.
  const LinearCode rep = repetition(2, 4);
  CHECK_THROWS_WITH(residual(rep, {1, 1, 1, 1}),
                    Catch::Matchers::ContainsSubstring("support covers every coordinate"));
}

TEST_CASE("residual reduces dimension when the pattern forces it") {
  const Field f2 = make_field(2, 1);
  const LinearCode c = from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}});
  const DerivedCode res = residual(c, {1, 1, 0, 0});
  CHECK(res.code.k() == 1);
  CHECK(res.code.n() == 2);
  CHECK(res.columns == std::vector<int>{2, 3});
  CHECK(weight_distribution(res.code).counts ==
        std::map<int, long long>{{0, 1}, {2, 1}});
}

TEST_CASE("projected codes: pinned instances") {
  const LinearCode hexa = hexacode();

  // A full-weight word projects onto the whole code.
  std::vector<Elem> full;
  for_each_codeword(hexa, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
    if (full.empty() && weight(w) == 6) full = w;
  });
  REQUIRE(!full.empty());
  const DerivedCode proj = projected(hexa, full);
  CHECK(proj.code.k() == 3);
  CHECK(proj.code.n() == 6);
  CHECK(weight_distribution(proj.code).counts ==
        weight_distribution(hexa).counts);

  // A minimum-weight word projects onto a [4, 3] code (hyperoval points are
  // in general position).
  const std::vector<Elem> a = min_weight_codeword(hexa);
  const DerivedCode proj4 = projected(hexa, a);
  CHECK(proj4.code.k() == 3);
  CHECK(proj4.code.n() == 4);
  CHECK(proj4.columns == support(a));

  CHECK_THROWS_AS(projected(hexa, std::vector<Elem>(6, 0)), error);
}

TEST_CASE("canonical points") {
  const Field f4 = make_field(2, 2);
  CHECK(canonical_point(*f4, {2, 3, 0}) == std::vector<Elem>{1, 2, 0});
  CHECK(canonical_point(*f4, {0, 3, 1}) == std::vector<Elem>{0, 1, 2});
  CHECK(canonical_point(*f4, {1, 2, 3}) == std::vector<Elem>{1, 2, 3});
  CHECK_THROWS_WITH(canonical_point(*f4, {0, 0, 0}),
                    Catch::Matchers::ContainsSubstring("zero vector"));
}

TEST_CASE("shortened codes: pinned instances") {
  const LinearCode s23 = simplex(2, 3);
  const DerivedCode sh = shortened(s23, {1, 0, 0});
  CHECK(sh.code.k() == 2);
  CHECK(sh.code.n() == 6);
  CHECK(min_distance(sh.code) == 4);
  CHECK(is_griesmer(sh.code));  // [6, 2, 4] meets g_2(2, 4) = 6
  CHECK(weight_distribution(sh.code).counts ==
        std::map<int, long long>{{0, 1}, {4, 3}});
  // The dropped column is index 3 (the point 100 in lexicographic order).
  CHECK(sh.columns == std::vector<int>{0, 1, 2, 4, 5, 6});

  const LinearCode hexa = hexacode();
  const DerivedCode sh4 = shortened(hexa, {1, 0, 0});
  CHECK(sh4.code.k() == 2);
  CHECK(sh4.code.n() == 5);
  CHECK(min_distance(sh4.code) == 4);
  CHECK(is_griesmer(sh4.code));  // [5, 2, 4] meets g_4(2, 4) = 5

  // Scaling the point does not change the result.
  const DerivedCode sh4b = shortened(hexa, {2, 0, 0});
  CHECK(sh4b.code.gen() == sh4.code.gen());

  CHECK_THROWS_WITH(shortened(hexa, {1, 1, 0}),
                    Catch::Matchers::ContainsSubstring("not a column direction"));
  CHECK_THROWS_WITH(shortened(repetition(2, 4), {1}),
                    Catch::Matchers::ContainsSubstring("dimension is zero"));
  CHECK_THROWS_AS(shortened(hexa, {1, 0}), error);
  CHECK_THROWS_AS(shortened(hexa, {0, 0, 0}), error);

  // Multiple columns at the shortening point are all dropped.
  const LinearCode s22 = simplex(2, 2);
  const DerivedCode sh22 = shortened(s22, {1, 1});
  CHECK(sh22.code.k() == 1);
  CHECK(sh22.code.n() == 2);
  CHECK(sh22.columns == std::vector<int>{0, 1});
  CHECK(weight_distribution(sh22.code).counts ==
        std::map<int, long long>{{0, 1}, {2, 1}});
}

TEST_CASE("minimum-weight lifts and preimage counts") {
  // q | d: every preimage of a minimum-weight residual word has weight d.
  const LinearCode hexa = hexacode();
  const std::vector<Elem> a = min_weight_codeword(hexa);
  const DerivedCode res = residual(hexa, a);
  const std::vector<Elem> cprime = min_weight_codeword(res.code);
  const LiftResult lift = lift_min_weight(hexa, a, cprime);
  CHECK(lift.min_weight_preimage_count == 4);
  CHECK(weight(lift.word) == 4);
  // The lift restricts to cprime off the support of a.
  for (std::size_t j = 0; j < res.columns.size(); ++j) {
    CHECK(lift.word[res.columns[j]] == cprime[j]);
  }

  const LinearCode ov3 = ovoid(3);  // [10, 4, 6] over GF(3), q | d
  const std::vector<Elem> a3 = min_weight_codeword(ov3);
  const DerivedCode res3 = residual(ov3, a3);
  const LiftResult lift3 = lift_min_weight(ov3, a3, min_weight_codeword(res3.code));
  CHECK(lift3.min_weight_preimage_count == 3);

  // q does not divide d: at least d + q - ceil(d/q) q preimages.
  const LinearCode uni = unital(2);  // [9, 3, 6] over GF(4)
  const std::vector<Elem> au = min_weight_codeword(uni);
  const DerivedCode resu = residual(uni, au);
  const LiftResult liftu = lift_min_weight(uni, au, min_weight_codeword(resu.code));
  CHECK(liftu.min_weight_preimage_count >= 2);  // 6 + 4 - ceil(6/4) * 4

  // Error paths.
  std::vector<Elem> heavy;
  for_each_codeword(hexa, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
    if (heavy.empty() && weight(w) == 6) heavy = w;
  });
  CHECK_THROWS_WITH(lift_min_weight(hexa, heavy, cprime),
                    Catch::Matchers::ContainsSubstring("not of minimum weight"));
  CHECK_THROWS_WITH(lift_min_weight(hexa, a, {1, 1, 1}),
                    Catch::Matchers::ContainsSubstring("length mismatch"));
}

TEST_CASE("supplementary subcodes") {
  const LinearCode hexa = hexacode();
  const std::vector<Elem> a = min_weight_codeword(hexa);
  const auto rows = supplementary_subcode(hexa, a);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) CHECK(message_of(hexa, r).has_value());
  // Together with a, the rows span the code.
  FqMatrix stack(hexa.field(), 3, hexa.n());
  stack.set_row(0, a);
  stack.set_row(1, rows[0]);
  stack.set_row(2, rows[1]);
  CHECK(rank(stack) == 3);
  // The span is a [5, 2, 4] code sitting inside the hexacode.
  CHECK(effective_length(rows) == 5);
  CHECK(span_min_weight(hexa.field(), rows) == 4);

  const LinearCode s23 = simplex(2, 3);
  const auto rows2 = supplementary_subcode(s23, min_weight_codeword(s23));
  REQUIRE(rows2.size() == 2);
  CHECK(effective_length(rows2) == 6);  // g_2(2, 4)
  CHECK(span_min_weight(s23.field(), rows2) == 4);

  // Preconditions: Griesmer input, minimum-weight word.
  const Field f2 = make_field(2, 1);
  const LinearCode not_griesmer = from_rows(f2, {{1, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_WITH(supplementary_subcode(not_griesmer, {0, 1, 0}),
                    Catch::Matchers::ContainsSubstring("not a Griesmer code"));
  std::vector<Elem> heavy;
  for_each_codeword(hexa, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
    if (heavy.empty() && weight(w) == 6) heavy = w;
  });
  CHECK_THROWS_WITH(supplementary_subcode(hexa, heavy),
                    Catch::Matchers::ContainsSubstring("not of minimum weight"));
  CHECK_THROWS_WITH(supplementary_subcode(repetition(2, 4), {1, 1, 1, 1}),
                    Catch::Matchers::ContainsSubstring("need k >= 2"));
}

TEST_CASE("message recovery and minimum-weight word") {
  const LinearCode s23 = simplex(2, 3);
  const std::vector<Elem> mw = min_weight_codeword(s23);
  CHECK(weight(mw) == 4);
  // All nonzero words share the weight, so the first nonzero message wins.
  CHECK(mw == s23.codeword({0, 0, 1}));

  const LinearCode hexa = hexacode();
  for_each_codeword(hexa, [&](const std::vector<Elem>& m, const std::vector<Elem>& w) {
    const auto back = message_of(hexa, w);
    REQUIRE(back.has_value());
    CHECK(*back == m);
  });
  CHECK(!message_of(hexa, {1, 0, 0, 0, 0, 0}).has_value());
  CHECK_THROWS_AS(message_of(hexa, {1, 0}), error);
}

TEST_CASE("enumeration guard blocks oversized codes") {
  const LinearCode big = rm1(5);  // 2^6 codewords
  GuardRestore restore;
  enumeration_guard() = 32;
  CHECK_THROWS_WITH(big.message_count(),
                    Catch::Matchers::ContainsSubstring("enumeration guard"));
  CHECK_THROWS_AS(weight_distribution(big), error);
  enumeration_guard() = 64;
  CHECK(big.message_count() == 64);
}
