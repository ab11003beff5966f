#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pivotlab/klee_minty.hpp"
#include "testutil.hpp"

using namespace pivotlab;
using testutil::Q;

TEST_CASE("rank and unrank realize the reflected-code recursion") {
  for (int d = 1; d <= 10; ++d) {
    auto code = testutil::reference_gray_code(d);
    for (uint64_t k = 0; k < code.size(); ++k) {
      CHECK(gray_unrank(d, k).to_string() == code[static_cast<size_t>(k)]);
      CHECK(gray_rank(BitString::from_string(code[static_cast<size_t>(k)])) == k);
    }
  }
}

TEST_CASE("pinned anchors of the code") {
  CHECK(gray_unrank(2, 0).to_string() == "00");
  CHECK(gray_unrank(2, 1).to_string() == "01");
  CHECK(gray_unrank(2, 2).to_string() == "11");
  CHECK(gray_unrank(2, 3).to_string() == "10");
  for (int d = 1; d <= 12; ++d) {
    CHECK(gray_unrank(d, (uint64_t{1} << d) - 1) == top_of_code(d));  // last word is 1 0^{d-1}
    CHECK(gray_rank(all_zero_string(d)) == 0);
  }
  CHECK_THROWS_AS(gray_unrank(3, 8), Error);
}

TEST_CASE("succ and pred are inverse single-bit rank steps") {
  CHECK(gray_succ(BitString::from_string("010")).to_string() == "110");
  for (int d = 1; d <= 12; ++d) {
    const uint64_t total = uint64_t{1} << d;
    for (uint64_t k = 0; k < total; ++k) {
      BitString x = gray_unrank(d, k);
      if (k + 1 < total) {
        BitString s = gray_succ(x);
        CHECK(gray_rank(s) == k + 1);
        CHECK(single_flip_index(x, s) >= 1);
        CHECK(gray_pred(s) == x);
      }
    }
    CHECK_THROWS_AS(gray_succ(top_of_code(d)), Error);
    CHECK_THROWS_AS(gray_pred(all_zero_string(d)), Error);
  }
}

TEST_CASE("succ and pred run in linearly many bit operations") {
  for (int d : {64, 512, 4096}) {
    BitString x(d);
    x.set_bit(d / 2, 1);  // an interior word
    size_t ops = 0;
    gray_succ(x, &ops);
    CHECK(ops <= 2 * static_cast<size_t>(d) + 2);
    ops = 0;
    gray_pred(x, &ops);
    CHECK(ops <= 2 * static_cast<size_t>(d) + 2);
  }
}

TEST_CASE("cube instance shape and range checks") {
  KleeMintyInstance inst = km_instance(3, Q(1, 3));
  CHECK(inst.lp.m == 6);
  CHECK(inst.lp.n == 9);
  inst.lp.validate();
  CHECK_THROWS_AS(km_instance(2, Q(0)), Error);
  CHECK_THROWS_AS(km_instance(2, Q(1, 2)), Error);
  CHECK_THROWS_AS(km_instance(0, Q(1, 3)), Error);
}

TEST_CASE("vertex coordinates, pinned at d = 2, eps = 1/4") {
  KleeMintyInstance inst = km_instance(2, Q(1, 4));
  CHECK(inst.vertex_coords(BitString::from_string("00")) == RatVector{Q(0), Q(0)});
  CHECK(inst.vertex_coords(BitString::from_string("01")) == RatVector{Q(1, 4), Q(1)});
  CHECK(inst.vertex_coords(BitString::from_string("11")) == RatVector{Q(3, 4), Q(1)});
  CHECK(inst.vertex_coords(BitString::from_string("10")) == RatVector{Q(1), Q(0)});
}

TEST_CASE("objective tops out at 1 on the last word") {
  for (int d : {2, 5, 9}) {
    KleeMintyInstance inst = km_instance(d, Q(1, 3));
    CHECK(inst.vertex_objective(top_of_code(d)) == Q(1));
  }
}

TEST_CASE("increasing predicate: parity form against the coordinate comparison") {
  BitString v = BitString::from_string("010");
  CHECK(increasing(v, 1));
  CHECK_FALSE(increasing(v, 2));
  for (int i = 1; i <= 4; ++i) CHECK(increasing(all_zero_string(4), i));

  for (int d = 1; d <= 10; ++d) {
    KleeMintyInstance inst = km_instance(d, Q(1, 3));
    const uint64_t total = uint64_t{1} << d;
    for (uint64_t k = 0; k < total; ++k) {
      BitString v = gray_unrank(d, k);
      Rational obj = inst.vertex_objective(v);
      for (int i = 1; i <= d; ++i) {
        BitString w = v;
        w.set_bit(i, static_cast<uint8_t>(1 - w.bit(i)));
        CHECK(increasing(v, i) == (inst.vertex_objective(w) > obj));
      }
    }
  }
}

TEST_CASE("sorting vertices by objective recovers the code order") {
  for (int d = 1; d <= 10; ++d) {
    KleeMintyInstance inst = km_instance(d, Q(1, 3));
    const uint64_t total = uint64_t{1} << d;
    std::vector<std::pair<Rational, uint64_t>> by_objective;
    for (uint64_t k = 0; k < total; ++k)
      by_objective.emplace_back(inst.vertex_objective(gray_unrank(d, k)), k);
    auto sorted = by_objective;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (uint64_t k = 0; k < total; ++k) {
      CHECK(sorted[static_cast<size_t>(k)].second == k);
      if (k + 1 < total)
        CHECK(sorted[static_cast<size_t>(k)].first < sorted[static_cast<size_t>(k + 1)].first);
    }
  }
}

TEST_CASE("vertex bases are feasible and reproduce the coordinates") {
  for (int d = 1; d <= 7; ++d) {
    KleeMintyInstance inst = km_instance(d, Q(1, 3));
    const uint64_t total = uint64_t{1} << d;
    for (uint64_t k = 0; k < total; ++k) {
      BitString v = gray_unrank(d, k);
      Basis basis = inst.vertex_basis(v);
      RatVector x = basic_solution(inst.lp, basis);
      for (const Rational& value : x) CHECK(value >= 0);
      RatVector coords = inst.vertex_coords(v);
      // structural columns come first in the basis ordering
      for (int j = 0; j < d; ++j) CHECK(x[static_cast<size_t>(j)] == coords[static_cast<size_t>(j)]);
      CHECK(inst.basis_vertex(basis) == v);
    }
  }
  // spot-check the top dimension used by the exhaustive suites
  KleeMintyInstance inst = km_instance(12, Q(1, 3));
  for (const char* word : {"100000000000", "010101010101", "111111111111"}) {
    BitString v = BitString::from_string(word);
    Basis basis = inst.vertex_basis(v);
    RatVector x = basic_solution(inst.lp, basis);
    RatVector coords = inst.vertex_coords(v);
    for (int j = 0; j < 12; ++j) CHECK(x[static_cast<size_t>(j)] == coords[static_cast<size_t>(j)]);
  }
}

TEST_CASE("code-adjacent vertices have adjacent bases") {
  KleeMintyInstance inst = km_instance(6, Q(1, 3));
  for (uint64_t k = 0; k + 1 < (uint64_t{1} << 6); ++k) {
    Basis a = inst.vertex_basis(gray_unrank(6, k));
    Basis b = inst.vertex_basis(gray_unrank(6, k + 1));
    CHECK(adjacent(a, b));
  }
}
