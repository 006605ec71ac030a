#pragma once

// Exact and modular arithmetic foundation: GMP-backed big integers and
// rationals, word-sized residue rings Z/p^e for odd primes p, Jacobi
// symbols, modular inverses and prime utilities.
//
// All values are immutable after construction and all functions are pure,
// so everything in this header may be used concurrently without locking.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trinlab {

using Int = mpz_class;
using Rat = mpq_class;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Thrown when a modular inverse is requested for a non-unit.
class not_invertible : public std::domain_error {
 public:
  explicit not_invertible(const std::string& what) : std::domain_error(what) {}
};

/// Thrown by harmonic sums when some denominator 1..k is not a unit.
class denominator_not_invertible : public not_invertible {
 public:
  explicit denominator_not_invertible(const std::string& what) : not_invertible(what) {}
};

inline bool divides(const Int& b, const Int& a) {
  return b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

/// Quotient a/b, defined only when b | a.
inline Int exact_div(const Int& a, const Int& b) {
  if (!divides(b, a)) {
    throw std::domain_error("exact_div: " + b.get_str() + " does not divide " + a.get_str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Binomial coefficient with integer upper index. Returns 0 for k < 0 or
/// k > n >= 0; a negative upper index uses the falling-factorial extension.
inline Int binomial(i64 n, i64 k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Int r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    Int nn(static_cast<long>(n));
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Jacobi symbol, by the binary reciprocity algorithm.
// ---------------------------------------------------------------------------

inline int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) {
    throw std::domain_error("jacobi: modulus must be odd and positive");
  }
  a %= n;
  if (a < 0) a += n;
  int sign = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

inline int jacobi(Int a, Int n) {
  if (n <= 0 || mpz_even_p(n.get_mpz_t())) {
    throw std::domain_error("jacobi: modulus must be odd and positive");
  }
  mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  int sign = 1;
  while (a != 0) {
    unsigned long twos = mpz_scan1(a.get_mpz_t(), 0);
    if (twos > 0) {
      mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), twos);
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if ((twos & 1) && (r == 3 || r == 5)) sign = -sign;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) sign = -sign;
    mpz_mod(a.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  }
  return n == 1 ? sign : 0;
}

// ---------------------------------------------------------------------------
// Word-sized modular kernel. Moduli are < 2^63 so sums never overflow and
// products fit in __int128.
// ---------------------------------------------------------------------------

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  if (s >= m) s -= m;
  return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 m) {
  a %= m;
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a);
  while (nr != 0) {
    i64 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) {
    throw not_invertible("invmod: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  }
  return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

inline u64 reduce64(i64 v, u64 m) {
  i64 r = v % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

// ---------------------------------------------------------------------------
// Primes.
// ---------------------------------------------------------------------------

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// All primes <= limit, ascending.
inline std::vector<i64> sieve_primes(i64 limit) {
  std::vector<i64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (i64 i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residue rings Z/p^e, p an odd prime, 1 <= e <= 5.
// ---------------------------------------------------------------------------

class ResidueRing {
 public:
  ResidueRing(i64 p, int e) : p_(p), e_(e) {
    if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p))) {
      throw std::invalid_argument("ResidueRing: p must be an odd prime");
    }
    if (e < 1 || e > 5) {
      throw std::invalid_argument("ResidueRing: exponent must be in 1..5");
    }
    u64 m = 1;
    for (int i = 0; i < e; ++i) {
      if (m > (u64{1} << 62) / static_cast<u64>(p)) {
        throw std::invalid_argument("ResidueRing: p^e exceeds the word-size bound");
      }
      m *= static_cast<u64>(p);
    }
    m_ = m;
  }

  i64 prime() const { return p_; }
  int exponent() const { return e_; }
  u64 modulus() const { return m_; }

  u64 reduce(i64 v) const { return reduce64(v, m_); }
  u64 reduce(const Int& v) const { return mpz_fdiv_ui(v.get_mpz_t(), m_); }

  bool operator==(const ResidueRing& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  i64 p_;
  int e_;
  u64 m_;
};

/// One element of Z/p^e in canonical form 0..p^e-1.
struct Residue {
  ResidueRing ring;
  u64 value = 0;

  friend Residue operator+(const Residue& a, const Residue& b) {
    return {a.ring, addmod(a.value, b.value, a.ring.modulus())};
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    return {a.ring, submod(a.value, b.value, a.ring.modulus())};
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    return {a.ring, mulmod(a.value, b.value, a.ring.modulus())};
  }
  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring == b.ring && a.value == b.value;
  }

  Residue pow(u64 exp) const { return {ring, powmod(value, exp, ring.modulus())}; }
};

inline Residue make_residue(const ResidueRing& ring, const Int& v) { return {ring, ring.reduce(v)}; }
inline Residue make_residue(const ResidueRing& ring, i64 v) { return {ring, ring.reduce(v)}; }

inline Residue mod_inv(const Residue& x) {
  if (x.value % static_cast<u64>(x.ring.prime()) == 0) {
    throw not_invertible("mod_inv: p divides " + std::to_string(x.value));
  }
  return {x.ring, invmod(x.value, x.ring.modulus())};
}

/// Canonical residue of a Jacobi-symbol value {-1, 0, +1}.
inline u64 lift_sign(int s, u64 m) { return s >= 0 ? static_cast<u64>(s) : m - 1; }

}  // namespace trinlab
