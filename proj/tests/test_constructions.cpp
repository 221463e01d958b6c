#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include "griesmer/constructions.hpp"

using namespace griesmer;

namespace {

std::vector<Elem> column_of(const LinearCode& c, int j) {
  std::vector<Elem> col(c.k());
  for (int r = 0; r < c.k(); ++r) col[r] = c.gen().at(r, j);
  return col;
}

void check_params(const LinearCode& c, int n, int k, int d) {
  CHECK(c.n() == n);
  CHECK(c.k() == k);
  CHECK(min_distance(c) == d);
}

}  // namespace

TEST_CASE("simplex codes") {
  check_params(simplex(2, 3), 7, 3, 4);
  check_params(simplex(4, 3), 21, 3, 16);
  check_params(simplex(5, 2), 6, 2, 5);
  CHECK(weight_distribution(simplex(3, 3)).counts ==
        std::map<int, long long>{{0, 1}, {9, 26}});

  // Columns are the canonical points in enumeration order.
  const LinearCode s32 = simplex(3, 2);
  CHECK(column_of(s32, 0) == std::vector<Elem>{0, 1});
  CHECK(column_of(s32, 1) == std::vector<Elem>{1, 0});
  CHECK(column_of(s32, 2) == std::vector<Elem>{1, 1});
  CHECK(column_of(s32, 3) == std::vector<Elem>{1, 2});

  CHECK_THROWS_WITH(simplex(6, 2),
                    Catch::Matchers::ContainsSubstring("not a prime power"));
  CHECK_THROWS_AS(simplex(2, 0), error);
}

TEST_CASE("first-order binary Reed-Muller codes") {
  check_params(rm1(3), 8, 4, 4);
  check_params(rm1(5), 32, 6, 16);
  CHECK(weight_distribution(rm1(4)).counts ==
        std::map<int, long long>{{0, 1}, {8, 30}, {16, 1}});

  // Row 0 is all ones; row 1+b carries bit b of the column index.
  const LinearCode r2 = rm1(2);
  CHECK(r2.gen().row(0) == std::vector<Elem>{1, 1, 1, 1});
  CHECK(r2.gen().row(1) == std::vector<Elem>{0, 1, 0, 1});
  CHECK(r2.gen().row(2) == std::vector<Elem>{0, 0, 1, 1});

  CHECK_THROWS_AS(rm1(0), error);
  CHECK_THROWS_AS(rm1(30), error);
}

TEST_CASE("hexacode columns and parameters") {
  const LinearCode h = hexacode();
  check_params(h, 6, 3, 4);
  CHECK(h.q() == 4);
  const std::vector<std::vector<Elem>> columns = {
      {1, 0, 0}, {1, 1, 1}, {1, 2, 3}, {1, 3, 2}, {0, 0, 1}, {0, 1, 0}};
  for (int j = 0; j < 6; ++j) CHECK(column_of(h, j) == columns[j]);
  CHECK(weight_distribution(h).counts ==
        std::map<int, long long>{{0, 1}, {4, 45}, {6, 18}});
}

TEST_CASE("Hermitian unital codes") {
  const LinearCode u = unital(2);
  check_params(u, 9, 3, 6);
  CHECK(u.q() == 4);
  CHECK(weight_distribution(u).counts ==
        std::map<int, long long>{{0, 1}, {6, 36}, {8, 27}});
  // First point (lexicographically) with x^3 + y^3 + z^3 = 0 over GF(4).
  CHECK(column_of(u, 0) == std::vector<Elem>{0, 1, 1});

  check_params(unital(3), 28, 3, 24);  // [q0^3+1, 3, q0^3-q0] for q0 = 3

  CHECK_THROWS_WITH(unital(6),
                    Catch::Matchers::ContainsSubstring("not a prime power"));
}

TEST_CASE("ovoid codes") {
  check_params(ovoid(2), 5, 4, 2);
  CHECK(weight_distribution(ovoid(2)).counts ==
        std::map<int, long long>{{0, 1}, {2, 10}, {4, 5}});

  check_params(ovoid(3), 10, 4, 6);
  CHECK(weight_distribution(ovoid(3)).counts ==
        std::map<int, long long>{{0, 1}, {6, 60}, {9, 20}});

  check_params(ovoid(4), 17, 4, 12);
  CHECK(weight_distribution(ovoid(4)).counts ==
        std::map<int, long long>{{0, 1}, {12, 204}, {16, 51}});

  // First quadric point in lexicographic order: x0 x1 + x2^2 + x2 x3 + x3^2
  // vanishes first at (0, 1, 0, 0) over GF(2).
  CHECK(column_of(ovoid(2), 0) == std::vector<Elem>{0, 1, 0, 0});

  CHECK_THROWS_WITH(ovoid(10),
                    Catch::Matchers::ContainsSubstring("not a prime power"));
}

TEST_CASE("repetition codes") {
  check_params(repetition(2, 4), 4, 1, 4);
  check_params(repetition(3, 5), 5, 1, 5);
  CHECK(weight_distribution(repetition(3, 5)).counts ==
        std::map<int, long long>{{0, 1}, {5, 2}});
  CHECK_THROWS_AS(repetition(2, 0), error);
}

TEST_CASE("Reed-Solomon codes") {
  check_params(reed_solomon(4, 4, 2), 4, 2, 3);
  check_params(reed_solomon(5, 5, 3), 5, 3, 3);
  check_params(reed_solomon(8, 8, 3), 8, 3, 6);
  check_params(reed_solomon(9, 9, 3), 9, 3, 7);
  check_params(reed_solomon(5, 4, 2), 4, 2, 3);  // shorter than the field

  // Rows are powers of the evaluation points 0, 1, ..., n-1.
  const LinearCode rs5 = reed_solomon(5, 5, 3);
  CHECK(rs5.gen().row(0) == std::vector<Elem>{1, 1, 1, 1, 1});
  CHECK(rs5.gen().row(1) == std::vector<Elem>{0, 1, 2, 3, 4});
  CHECK(rs5.gen().row(2) == std::vector<Elem>{0, 1, 4, 4, 1});
  const LinearCode rs4 = reed_solomon(4, 4, 2);
  CHECK(rs4.gen().row(1) == std::vector<Elem>{0, 1, 2, 3});

  CHECK_THROWS_WITH(reed_solomon(4, 5, 2),
                    Catch::Matchers::ContainsSubstring("n <= q"));
  CHECK_THROWS_AS(reed_solomon(4, 2, 3), error);
  CHECK_THROWS_AS(reed_solomon(6, 4, 2), error);
}

TEST_CASE("every catalogue code meets the Griesmer bound") {
  const auto list = corpus();
  CHECK(list.size() == 24);

  std::set<std::string> names;
  for (const auto& entry : list) {
    INFO(entry.name);
    names.insert(entry.name);
    CHECK(is_griesmer(entry.code));
    // Small enough for exhaustive codeword enumeration everywhere.
    CHECK(entry.code.message_count() <= 4096);
  }
  CHECK(names.size() == list.size());
  CHECK(list.front().name == "simplex(2,2)");
  CHECK(names.count("hexacode") == 1);
  CHECK(names.count("ovoid(4)") == 1);
  CHECK(names.count("rs(9,9,3)") == 1);
}

TEST_CASE("constructions are deterministic") {
  CHECK(hexacode().gen() == hexacode().gen());
  CHECK(ovoid(3).gen() == ovoid(3).gen());
  CHECK(unital(2).gen() == unital(2).gen());
  CHECK(reed_solomon(8, 8, 3).gen() == reed_solomon(8, 8, 3).gen());
}
