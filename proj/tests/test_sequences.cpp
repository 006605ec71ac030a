#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "trinlab/sequences.hpp"

using namespace trinlab;

TEST_CASE("trinomial coefficients", "[sequences]") {
  CHECK(trinomial(4, {1, 1}) == 19);
  CHECK(trinomial(4, {1, 1}) == oracles::poly_trinomial(4, 1, 1));
  CHECK(trinomial(3, {2, 1}) == 20);
  CHECK(trinomial(3, {2, 1}) == binomial(6, 3));
  for (i64 b = -3; b <= 3; ++b) {
    for (i64 c = -3; c <= 3; ++c) CHECK(trinomial(0, {Int(b), Int(c)}) == 1);
  }
}

TEST_CASE("trinomial definitional sum matches polynomial expansion", "[sequences]") {
  for (i64 b = -3; b <= 3; ++b) {
    for (i64 c = -3; c <= 3; ++c) {
      SeqParams sp{Int(b), Int(c)};
      auto list = trinomial_list(sp, 41);
      for (i64 n = 0; n <= 40; ++n) {
        CAPTURE(n, b, c);
        Int expect = oracles::poly_trinomial(n, Int(b), Int(c));
        REQUIRE(trinomial(n, sp) == expect);
        REQUIRE(list[static_cast<std::size_t>(n)] == expect);
      }
    }
  }
}

TEST_CASE("motzkin numbers", "[sequences]") {
  Int m5 = 0;  // definitional sum with the convolution-Catalan oracle
  for (i64 k = 0; 2 * k <= 5; ++k) m5 += binomial(5, 2 * k) * oracles::catalan_conv(k);
  CHECK(m5 == 21);
  CHECK(motzkin(5, {1, 1}) == 21);
  CHECK(motzkin(2, {2, 1}) == 5);
  CHECK(motzkin(2, {2, 1}) == oracles::catalan_conv(3));
  for (i64 b = -3; b <= 3; ++b) {
    for (i64 c = -3; c <= 3; ++c) CHECK(motzkin(1, {Int(b), Int(c)}) == b);
  }
}

TEST_CASE("motzkin list matches definitional sum", "[sequences]") {
  for (i64 b = -3; b <= 3; ++b) {
    for (i64 c = -3; c <= 3; ++c) {
      SeqParams sp{Int(b), Int(c)};
      auto list = motzkin_list(sp, 31);
      for (i64 n = 0; n <= 30; ++n) {
        CAPTURE(n, b, c);
        REQUIRE(list[static_cast<std::size_t>(n)] == motzkin(n, sp));
      }
    }
  }
}

TEST_CASE("delannoy polynomial", "[sequences]") {
  CHECK(delannoy(3, Int(1)) == 63);
  CHECK(delannoy(2, Int(2)) == 37);
  CHECK(delannoy(2, Int(2)) == trinomial(2, {5, 6}));
  for (i64 n = 0; n <= 20; ++n) CHECK(delannoy(n, Int(0)) == 1);
}

TEST_CASE("delannoy equals trinomial at the unit-discriminant parameters", "[sequences]") {
  for (i64 x = -10; x <= 10; ++x) {
    SeqParams sp{Int(2 * x + 1), Int(x) * x + x};
    auto t = trinomial_list(sp, 101);
    for (i64 n = 0; n <= 100; ++n) {
      CAPTURE(n, x);
      REQUIRE(delannoy(n, Int(x)) == t[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("catalan and central binomial", "[sequences]") {
  CHECK(catalan(3) == 5);
  CHECK(central_binomial(4) == 70);
  CHECK(catalan(0) == 1);
  for (i64 n = 0; n <= 60; ++n) {
    REQUIRE(catalan(n) == oracles::catalan_conv(n));
    REQUIRE(central_binomial(n) == catalan(n) * (n + 1));
  }
}

TEST_CASE("lucas sequences", "[sequences]") {
  LucasParams fib{1, -1};
  CHECK(lucas_u(5, fib) == 5);
  Int prev = 0, cur = 1;  // direct recursion oracle
  for (i64 n = 1; n <= 30; ++n) {
    REQUIRE(lucas_u(n, fib) == cur);
    Int next = cur + prev;
    prev = cur;
    cur = next;
  }
  CHECK(lucas_u(2, {7, 3}) == 7);
  CHECK(lucas_u(0, {7, 3}) == 0);
}

TEST_CASE("euler numbers", "[sequences]") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(1) == 0);
  CHECK(euler_number(7) == 0);
  for (i64 n = 0; n <= 14; ++n) {
    CAPTURE(n);
    REQUIRE(euler_number(n) == oracles::euler_by_series(n));
  }
}

TEST_CASE("fermat quotients", "[sequences]") {
  CHECK(fermat_quotient(3) == 1);
  CHECK(fermat_quotient(5) == 3);
  CHECK(fermat_quotient(7) == 9);
  CHECK_THROWS_AS(fermat_quotient(4), std::domain_error);
  CHECK_THROWS_AS(fermat_quotient(9), std::domain_error);
  CHECK_THROWS_AS(fermat_quotient(2), std::domain_error);
}

TEST_CASE("harmonic sums in residue rings", "[sequences]") {
  ResidueRing r25(5, 2);
  CHECK(harmonic_mod(3, r25).value == 6);  // H_3 = 11/6, 11 * inv(6) = 11 * 21 = 6 (mod 25)
  CHECK(harmonic_mod(0, r25).value == 0);
  CHECK_THROWS_AS(harmonic_mod(5, r25), denominator_not_invertible);
  CHECK_THROWS_AS(harmonic2_mod(7, r25), denominator_not_invertible);
  for (i64 p : sieve_primes(99)) {
    if (p < 5) continue;
    ResidueRing ring(p, 1);
    CAPTURE(p);
    REQUIRE(harmonic2_mod(p - 1, ring).value == 0);  // Wolstenholme
  }
  // list generators agree with the scalar ops
  ResidueRing r49(7, 2);
  auto h = harmonic_list_mod(r49, 7);
  auto h2 = harmonic2_list_mod(r49, 7);
  for (i64 k = 0; k < 7; ++k) {
    REQUIRE(h[static_cast<std::size_t>(k)] == harmonic_mod(k, r49).value);
    REQUIRE(h2[static_cast<std::size_t>(k)] == harmonic2_mod(k, r49).value);
  }
}

TEST_CASE("series oracle", "[sequences]") {
  CHECK(trinomial_series({1, 1}, 6) == std::vector<Int>{1, 1, 3, 7, 19, 51});
  CHECK(trinomial_series({2, 1}, 4) == std::vector<Int>{1, 2, 6, 20});
  for (i64 b = -2; b <= 2; ++b) {
    for (i64 c = -2; c <= 2; ++c) CHECK(trinomial_series({Int(b), Int(c)}, 1) == std::vector<Int>{1});
  }
}

TEST_CASE("three-way oracle agreement on a small grid", "[sequences]") {
  for (i64 b = -3; b <= 3; ++b) {
    for (i64 c = -3; c <= 3; ++c) {
      SeqParams sp{Int(b), Int(c)};
      auto rec = trinomial_list(sp, 61);
      auto ser = trinomial_series(sp, 61);
      REQUIRE(rec == ser);
      for (i64 n : {0, 1, 7, 30, 60}) {
        REQUIRE(rec[static_cast<std::size_t>(n)] == trinomial(n, sp));
      }
    }
  }
}

TEST_CASE("parity and reflection symmetries", "[sequences]") {
  for (auto [b, c] : {std::pair<i64, i64>{1, 1}, {3, 2}, {4, -3}, {0, 5}}) {
    auto plus = trinomial_list({Int(b), Int(c)}, 101);
    auto minus = trinomial_list({Int(-b), Int(c)}, 101);
    for (i64 n = 0; n <= 100; ++n) {
      REQUIRE(minus[static_cast<std::size_t>(n)] ==
              (n % 2 == 0 ? plus[static_cast<std::size_t>(n)] : -plus[static_cast<std::size_t>(n)]));
    }
  }
  for (i64 x : {-3, -1, 0, 2, 5}) {
    for (i64 n = 0; n <= 100; ++n) {
      Int lhs = delannoy(n, Int(x));
      if (n % 2 == 1) lhs = -lhs;
      REQUIRE(lhs == delannoy(n, Int(-x - 1)));
    }
  }
}

TEST_CASE("classical specializations", "[sequences]") {
  auto t21 = trinomial_list({2, 1}, 201);
  auto m21 = motzkin_list({2, 1}, 201);
  auto d = trinomial_list({3, 2}, 201);
  for (i64 n = 0; n <= 200; ++n) {
    CAPTURE(n);
    REQUIRE(t21[static_cast<std::size_t>(n)] == central_binomial(n));
    REQUIRE(m21[static_cast<std::size_t>(n)] == catalan(n + 1));
    REQUIRE(d[static_cast<std::size_t>(n)] == delannoy(n, Int(1)));
  }
}

TEST_CASE("square discriminant reduces to a Delannoy evaluation", "[sequences]") {
  // d = b^2 - 4c = s^2 with (b/s - 1)/2 integral: T_n(b,c) = s^n D_n((b/s-1)/2)
  struct Case {
    i64 b, c, s, x;
  };
  for (Case k : {Case{3, 2, 1, 1}, Case{5, 6, 1, 2}, Case{6, 8, 2, 1}, Case{7, 12, 1, 3},
                 Case{10, 24, 2, 2}}) {
    auto t = trinomial_list({Int(k.b), Int(k.c)}, 101);
    Int spow = 1;
    for (i64 n = 0; n <= 100; ++n) {
      CAPTURE(k.b, k.c, n);
      REQUIRE(t[static_cast<std::size_t>(n)] == spow * delannoy(n, Int(k.x)));
      spow *= k.s;
    }
  }
}

TEST_CASE("residue-ring generators agree with exact values", "[sequences]") {
  for (i64 p : {3, 5, 7, 13, 97, 199}) {
    for (int e = 1; e <= 3; ++e) {
      ResidueRing ring(p, e);
      for (auto [b, c] : {std::pair<i64, i64>{1, 1}, {3, 2}, {-2, 5}, {0, -3}}) {
        std::size_t count = static_cast<std::size_t>(p) + 2;  // crosses both fallback indices
        auto tm = trinomial_list_mod(ring, ring.reduce(b), ring.reduce(c), count);
        auto mm = motzkin_list_mod(ring, ring.reduce(b), ring.reduce(c), count);
        auto te = trinomial_list({Int(b), Int(c)}, count);
        auto me = motzkin_list({Int(b), Int(c)}, count);
        for (std::size_t k = 0; k < count; ++k) {
          CAPTURE(p, e, b, c, k);
          REQUIRE(tm[k] == ring.reduce(te[k]));
          REQUIRE(mm[k] == ring.reduce(me[k]));
        }
      }
      for (i64 x : {1, -4}) {
        auto dm = delannoy_list_mod(ring, ring.reduce(x), static_cast<std::size_t>(p));
        for (i64 k = 0; k < p; ++k) {
          REQUIRE(dm[static_cast<std::size_t>(k)] == ring.reduce(delannoy(k, Int(x))));
        }
      }
      auto cb = central_binomial_list_mod(ring, static_cast<std::size_t>(p));
      auto cat = catalan_list_mod(ring, static_cast<std::size_t>(p));
      for (i64 k = 0; k < p; ++k) {
        REQUIRE(cb[static_cast<std::size_t>(k)] == ring.reduce(central_binomial(k)));
        REQUIRE(cat[static_cast<std::size_t>(k)] == ring.reduce(catalan(k)));
      }
    }
  }
}

TEST_CASE("residue delannoy accepts residue arguments", "[sequences]") {
  ResidueRing ring(11, 2);
  Residue x = mod_inv(make_residue(ring, 8));
  auto list = delannoy_list_mod(ring, x.value, 11);
  for (i64 n = 0; n < 11; ++n) {
    REQUIRE(delannoy(n, x).value == list[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("discriminants are recomputed from the parameters", "[sequences]") {
  SeqParams sp{5, 3};
  CHECK(sp.d() == 13);
  CHECK(sp.big_d() == -11);
  sp.c = 4;
  CHECK(sp.d() == 9);
  CHECK(sp.big_d() == -39);
  LucasParams lp{1, -1};
  CHECK(lp.delta() == 5);
}
