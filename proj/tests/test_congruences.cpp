#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <optional>

#include "trinlab/congruences.hpp"

using namespace trinlab;

namespace {

const CongruenceSpec& spec_by_id(const std::vector<CongruenceSpec>& regs, const std::string& id) {
  for (const auto& s : regs) {
    if (s.id == id) return s;
  }
  FAIL("missing spec " + id);
  return regs.front();
}

}  // namespace

TEST_CASE("registry contains exactly the expected entries", "[congruences]") {
  std::vector<std::string> want{
      "eq1.1",  "eq1.2",  "eq1.3",  "eq1.4",  "eq1.5",  "eq1.6",  "eq1.9",
      "eq1.13", "eq1.14", "eq1.16", "eq1.17", "eq1.21", "eq1.21pc", "eq1.22",
      "eq1.23", "eq1.24", "eq1.25", "lem2.1a", "lem2.1b", "lem2.2", "lem2.3",
      "lem2.4", "lem4.3", "aux-morley", "aux-wolstenholme2", "aux-s1-l22",
      "aux-su3-l21", "aux-su2-14", "aux-su2-15", "aux-mt", "aux-r41a",
      "aux-r41b", "aux-r41c", "rem2.1", "rem1.1b"};
  auto regs = builtin_registry();
  REQUIRE(regs.size() == want.size());
  std::map<std::string, int> seen;
  for (const auto& s : regs) ++seen[s.id];
  for (const auto& id : want) {
    CAPTURE(id);
    REQUIRE(seen[id] == 1);
  }
}

TEST_CASE("spot numeric anchors", "[congruences]") {
  auto regs = builtin_registry();

  // Sum of T_k^2 over k < 5 is 421 == 1 == (-1/5): the (b,c) = (1,1) point
  // of the squared-trinomial family.
  auto out = check_instance(spec_by_id(regs, "eq1.4"), 5, {{"b", 1}, {"c", 1}});
  CHECK(out.status == Status::pass);
  CHECK(out.lhs == 1);
  Int s421 = 0;
  for (i64 k = 0; k < 5; ++k) {
    Int t = trinomial(k, {1, 1});
    s421 += t * t;
  }
  CHECK(s421 == 421);

  // Sum of D_k^2 over k < 5 is 107189 == 4 == (2/5).
  auto out9 = check_instance(spec_by_id(regs, "eq1.9"), 5, {{"x", 1}});
  CHECK(out9.status == Status::pass);
  CHECK(out9.lhs == 4);
  Int sd = 0;
  for (i64 k = 0; k < 5; ++k) {
    Int d = delannoy(k, Int(1));
    sd += d * d;
  }
  CHECK(sd == 107189);

  // Sum of (2k+1) D_k over k < 5 is 3405 == 30 == 155 (mod 125).
  auto out16 = check_instance(spec_by_id(regs, "eq1.16"), 5, {{"m", 1}});
  CHECK(out16.status == Status::pass);
  CHECK(out16.lhs == 30);
  CHECK(out16.rhs == 30);
  Int wd = 0;
  for (i64 k = 0; k < 5; ++k) wd += (2 * k + 1) * delannoy(k, Int(1));
  CHECK(wd == 3405);

  // Morley at p = 5: 256 - 6 = 250 == 0 (mod 125).
  auto morley = check_instance(spec_by_id(regs, "aux-morley"), 5, {});
  CHECK(morley.status == Status::pass);
  CHECK(morley.lhs == 6);
  CHECK(morley.rhs == 256 % 125);
}

TEST_CASE("registry examples", "[congruences]") {
  auto regs = builtin_registry();
  auto e13 = check_instance(spec_by_id(regs, "eq1.3"), 7, {{"b", 1}, {"c", 1}});
  CHECK(e13.status == Status::pass);
  auto l23 = check_instance(spec_by_id(regs, "lem2.3"), 5, {{"A", 1}, {"B", -1}});
  CHECK(l23.status == Status::pass);
  CHECK(l23.lhs == 0);  // u_5 = 5
  CHECK(l23.rhs == 0);  // (5/5) = 0
}

TEST_CASE("run_registry driver", "[congruences]") {
  auto regs = builtin_registry();
  Grid small{-3, 3, -3, 3};

  std::vector<CongruenceSpec> only9{spec_by_id(regs, "eq1.9")};
  auto res9 = run_registry(only9, 3, 19, small);
  CHECK(!res9.empty());
  for (const auto& out : res9) {
    if (out.status != Status::skipped) REQUIRE(out.status == Status::pass);
  }

  std::vector<CongruenceSpec> only24{spec_by_id(regs, "lem2.4")};
  Grid g4{-4, 4, -4, 4};
  auto res24 = run_registry(only24, 3, 47, g4);
  for (const auto& out : res24) REQUIRE(out.status == Status::pass);

  CHECK(run_registry({}, 3, 100, small).empty());
}

TEST_CASE("skipping is exactly the side conditions", "[congruences]") {
  auto regs = builtin_registry();
  const auto& e3 = spec_by_id(regs, "eq1.3");
  for (i64 p : {3, 5, 7, 11, 13}) {
    for (i64 b = -3; b <= 3; ++b) {
      for (i64 c = -3; c <= 3; ++c) {
        auto out = check_instance(e3, p, {{"b", b}, {"c", c}});
        bool divides_d = reduce64(b * b - 4 * c, static_cast<u64>(p)) == 0;
        CAPTURE(p, b, c);
        REQUIRE((out.status == Status::skipped) == divides_d);
      }
    }
  }
  // p below the stated range is reported skipped, never dropped
  auto out22 = check_instance(spec_by_id(regs, "eq1.22"), 3, {});
  CHECK(out22.status == Status::skipped);
}

TEST_CASE("internal non-invertibility is a hard error", "[congruences]") {
  CongruenceSpec bad;
  bad.id = "bad";
  bad.e = 1;
  bad.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
    out.lhs = C.inv_big(C.p());  // a side-condition omission
    out.rhs = 0;
  };
  CHECK_THROWS_AS(check_instance(bad, 7, {}), not_invertible);
}

TEST_CASE("quotient-rule consistency for the squared family", "[congruences]") {
  // The exact integer sum behind eq1.21 is divisible by p^2 (the n = p case
  // of the n^2-divisibility identity), checked before any modular reading.
  for (i64 p : {5, 7, 11, 13, 37}) {
    for (auto [b, c] : {std::pair<i64, i64>{1, 1}, {2, 3}, {5, -3}}) {
      SeqParams sp{Int(b), Int(c)};
      Int sum = 0;
      auto t = trinomial_list(sp, static_cast<std::size_t>(p));
      Int dp = 1;
      for (i64 k = p - 1; k >= 0; --k) {
        sum += (2 * k + 1) * t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(k)] * dp;
        dp *= sp.d();
      }
      CAPTURE(p, b, c);
      REQUIRE(divides(Int(p) * p, sum));
    }
  }
}

TEST_CASE("symmetry transformation is an involution", "[congruences]") {
  // Applying T_n -> (d/p) d^n T_{p-1-n} twice returns the original residue:
  // (d/p)^2 d^(p-1) == 1 (mod p) whenever p does not divide d.
  for (i64 p : sieve_primes(99)) {
    if (p == 2) continue;
    for (i64 b = -4; b <= 4; ++b) {
      for (i64 c = -4; c <= 4; ++c) {
        i64 d = b * b - 4 * c;
        if (reduce64(d, static_cast<u64>(p)) == 0) continue;
        int jd = jacobi(d, p);
        u64 val = mulmod(static_cast<u64>(jd * jd),
                         powmod(reduce64(d, static_cast<u64>(p)), static_cast<u64>(p - 1),
                                static_cast<u64>(p)),
                         static_cast<u64>(p));
        REQUIRE(val == 1);
        ResidueRing ring(p, 1);
        auto t = trinomial_list_mod(ring, ring.reduce(b), ring.reduce(c), static_cast<std::size_t>(p));
        u64 dr = ring.reduce(d);
        u64 jl = lift_sign(jd, ring.modulus());
        for (i64 n : {i64{0}, i64{1}, p / 2, p - 1}) {
          u64 once = mulmod(mulmod(jl, powmod(dr, static_cast<u64>(n), ring.modulus()), ring.modulus()),
                            t[static_cast<std::size_t>(p - 1 - n)], ring.modulus());
          u64 twice = mulmod(
              mulmod(jl, powmod(dr, static_cast<u64>(p - 1 - n), ring.modulus()), ring.modulus()),
              once, ring.modulus());
          REQUIRE(twice == t[static_cast<std::size_t>(p - 1 - n)]);
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Soundness against exact big-integer sums: each residue-ring lhs, multiplied
// by its denominator-clearing factor, must equal the exact cleared sum
// reduced mod p^(e+j). Sequence values here come from the definitional sums,
// independent of the residue recursion fast path.
// ---------------------------------------------------------------------------

namespace {

struct ExactTwin {
  Int cleared_sum;
  Int clear_factor;
};

Int factorial(i64 n) {
  Int f = 1;
  for (i64 i = 2; i <= n; ++i) f *= i;
  return f;
}

std::optional<ExactTwin> exact_twin(const std::string& id, i64 p, const Instance& inst) {
  auto get = [&](const char* key) { return inst.at(key); };
  // Horner in ascending k: term k ends up scaled by base^(p-1-k), which is
  // exactly the denominator-cleared reading of sum term_k / base^k.
  auto tsum = [&](i64 b, i64 c, const Int& base, auto weight) {
    SeqParams sp{Int(b), Int(c)};
    Int sum = 0;
    for (i64 k = 0; k < p; ++k) sum = sum * base + weight(k, trinomial(k, sp));
    return sum;
  };

  if (id == "eq1.1") {
    i64 b = get("b"), c = get("c"), m = get("m");
    return ExactTwin{tsum(b, c, Int(m), [](i64, const Int& t) { return t; }),
                     pow_int(Int(m), static_cast<unsigned long>(p - 1))};
  }
  if (id == "eq1.2") {
    i64 b = get("b"), c = get("c"), m = get("m");
    SeqParams sp{Int(b), Int(c)};
    Int sum = 0;
    for (i64 k = 0; k < p; ++k) sum = sum * m + motzkin(k, sp);
    return ExactTwin{2 * Int(c) * sum, pow_int(Int(m), static_cast<unsigned long>(p - 1))};
  }
  if (id == "eq1.3" || id == "eq1.21" || id == "eq1.21pc" || id == "lem4.3" || id == "rem2.1" ||
      id == "eq1.22" || id == "eq1.23" || id == "eq1.24") {
    i64 b = 1, c = 1;
    if (id == "eq1.22") b = 6, c = -3;
    if (id == "eq1.23") b = 2, c = -1;
    if (id == "eq1.24") b = 2, c = -3;
    if (id == "eq1.3" || id == "eq1.21" || id == "eq1.21pc" || id == "lem4.3") {
      b = get("b");
      c = get("c");
    }
    Int base = id == "rem2.1" ? Int(9) : Int(b) * b - 4 * c;
    if (id == "eq1.22") base = 48;
    if (id == "eq1.23") base = 8;
    if (id == "eq1.24") base = 16;
    bool weighted = id == "eq1.21" || id == "eq1.21pc";
    Int sum = tsum(b, c, base, [&](i64 k, const Int& t) {
      return weighted ? Int((2 * k + 1) * t * t) : Int(t * t);
    });
    return ExactTwin{sum, pow_int(base, static_cast<unsigned long>(p - 1))};
  }
  if (id == "eq1.4") {
    i64 b = get("b"), c = get("c");
    Int w = Int(b - 2 * c) * (b - 2 * c);
    return ExactTwin{tsum(b, c * c, w, [](i64, const Int& t) { return t * t; }),
                     pow_int(w, static_cast<unsigned long>(p - 1))};
  }
  if (id == "eq1.5" || id == "eq1.6") {
    i64 b = get("b"), c = get("c");
    i64 cc = id == "eq1.5" ? c : c * c;
    Int base = id == "eq1.5" ? Int(Int(b) * b - 4 * c) : Int(Int(b - 2 * c) * (b - 2 * c));
    SeqParams sp{Int(b), Int(cc)};
    Int sum = 0;
    for (i64 k = 0; k < p; ++k) sum = sum * base + trinomial(k, sp) * motzkin(k, sp);
    return ExactTwin{sum, pow_int(base, static_cast<unsigned long>(p - 1))};
  }
  if (id == "eq1.9") {
    i64 x = get("x");
    Int sum = 0;
    for (i64 k = 0; k < p; ++k) {
      Int d = delannoy(k, Int(x));
      sum += d * d;
    }
    return ExactTwin{sum, 1};
  }
  if (id == "eq1.13" || id == "eq1.14") {
    i64 b = get("b"), c = get("c");
    Int w(b - 2 * c);
    bool idx = id == "eq1.14";
    Int sum = tsum(b, c * c, w, [&](i64 k, const Int& t) { return idx ? Int(k * t) : t; });
    Int unit = idx ? Int(12 * Int(c) * c) : Int(2 * Int(c));
    return ExactTwin{unit * sum, pow_int(w, static_cast<unsigned long>(p - 1))};
  }
  if (id == "eq1.16" || id == "eq1.17" || id == "rem1.1b") {
    i64 m = get("m");
    SeqParams sp{Int(2 * m + 1), Int(m) * m + m};
    Int sum = 0;
    for (i64 k = 0; k < p; ++k) {
      Int w = id == "eq1.17" ? Int(2 * k + 1) * (2 * k + 1) : Int(2 * k + 1);
      sum += w * trinomial(k, sp);
    }
    return ExactTwin{sum, 1};
  }
  if (id == "eq1.25") {
    Int f = factorial(p - 1);
    Int sum = 0;
    for (i64 k = 1; k < p; ++k) {
      Int d = delannoy(k, Int(1));
      Int q = exact_div(f, Int(k));
      sum += d * d * q * q;
    }
    return ExactTwin{sum, f * f};
  }
  if (id == "lem2.1a" || id == "lem2.1b") {
    i64 m = get("m");
    i64 kk = (p - 1) / 2;
    Int sum = 0;
    for (i64 k = 0; k <= kk; ++k) {
      sum = sum * m + (id == "lem2.1a" ? central_binomial(k) : catalan(k));
    }
    return ExactTwin{sum, pow_int(Int(m), static_cast<unsigned long>(kk))};
  }
  if (id == "lem2.3") {
    return ExactTwin{lucas_u(p, {Int(get("A")), Int(get("B"))}), 1};
  }
  if (id == "aux-morley") {
    return ExactTwin{binomial(p - 1, (p - 1) / 2), 1};
  }
  if (id == "aux-su3-l21") {
    i64 m = get("m");
    Int sum = 0;
    for (i64 k = 1; k < p; ++k) sum = sum * m + catalan(k);
    return ExactTwin{sum, pow_int(Int(m), static_cast<unsigned long>(p - 1))};
  }
  if (id == "aux-su2-14" || id == "aux-su2-15") {
    i64 lo = id == "aux-su2-14" ? 0 : (p + 1) / 2;
    i64 hi = id == "aux-su2-14" ? (p - 3) / 2 : p - 1;
    Int odd_prod = 1;
    for (i64 k = lo; k <= hi; ++k) odd_prod *= 2 * k + 1;
    Int sum = 0;
    for (i64 k = lo; k <= hi; ++k) {
      sum += central_binomial(k) * exact_div(odd_prod, Int(2 * k + 1)) *
             pow_int(Int(16), static_cast<unsigned long>(hi - k));
    }
    return ExactTwin{sum, odd_prod * pow_int(Int(16), static_cast<unsigned long>(hi))};
  }
  if (id == "aux-mt") {
    Int f = factorial(p - 1);
    Int sum = 0;
    for (i64 k = 1; k < p; ++k) {
      Int q = exact_div(f, Int(k));
      sum += pow_int(Int(-2), static_cast<unsigned long>(k)) * central_binomial(k) * q * q;
    }
    return ExactTwin{sum, f * f};
  }
  if (id == "aux-r41a") {
    Int sum = 0;
    for (i64 k = 1; k < p; ++k) sum += pow_int(Int(-2), static_cast<unsigned long>(k)) * catalan(k);
    return ExactTwin{sum, 1};
  }
  if (id == "aux-r41b") {
    Int f = factorial(p - 1);
    Int sum = 0, h2 = 0;
    for (i64 k = 1; k < p; ++k) {
      Int q = exact_div(f, Int(k));
      h2 += q * q;
      sum += pow_int(Int(-2), static_cast<unsigned long>(k)) * catalan(k) * h2;
    }
    return ExactTwin{sum, f * f};
  }
  return std::nullopt;  // witness-scan entries and the p^5 entry
}

}  // namespace

TEST_CASE("residue lhs agrees with cleared exact sums", "[congruences]") {
  auto regs = builtin_registry();
  // six sample bindings per free symbol, zipped into instances
  std::map<std::string, std::vector<i64>> values{
      {"b", {1, 2, -3, 5, 0, 2}}, {"c", {1, 3, 2, -3, 2, 1}}, {"m", {1, 2, -3, 6, 5, -1}},
      {"x", {-2, 1, 3, 0, 5, -4}}, {"A", {1, 3, -2, 5, 0, 1}}, {"B", {-1, 2, 5, 3, 2, -4}}};
  for (const auto& spec : regs) {
    if (spec.e + spec.j > 3) continue;
    std::vector<Instance> insts_store;
    for (std::size_t i = 0; i < 6; ++i) {
      Instance inst;
      for (const auto& sym : spec.symbols) inst[sym] = values.at(sym)[i];
      insts_store.push_back(std::move(inst));
      if (spec.symbols.empty()) break;
    }
    const std::vector<Instance>* insts = &insts_store;
    for (i64 p : {3, 5, 7, 13, 31, 47}) {
      for (const auto& inst : *insts) {
        auto outcome = check_instance(spec, p, inst);
        if (outcome.status == Status::skipped) continue;
        auto twin = exact_twin(spec.id, p, inst);
        if (!twin) continue;
        Int modulus(static_cast<unsigned long>(outcome.modulus));
        auto canon = [&](Int v) {
          v %= modulus;
          if (v < 0) v += modulus;
          return v;
        };
        Int lhs_cleared = canon(Int(static_cast<unsigned long>(outcome.lhs)) * twin->clear_factor);
        CAPTURE(spec.id, p, inst.size());
        REQUIRE(lhs_cleared == canon(twin->cleared_sum));
      }
    }
  }
}

TEST_CASE("full registry passes for small primes", "[congruences]") {
  Grid grid{-4, 4, -4, 4};
  auto outcomes = run_registry(builtin_registry(), 3, 37, grid, 2);
  std::size_t passed = 0;
  for (const auto& out : outcomes) {
    if (out.status == Status::skipped) continue;
    CAPTURE(out.spec_id, out.instance);
    REQUIRE(out.status == Status::pass);
    ++passed;
  }
  CHECK(passed > 10000);
}
