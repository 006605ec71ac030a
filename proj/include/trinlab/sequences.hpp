#pragma once

// Sequence generators, each with at least two independent evaluation paths:
// definitional sums, three-term recursions, and a generating-function series
// oracle. Exact evaluation works over Int; the *_list_mod generators run the
// recursions directly inside Z/p^e, falling back to definitional sums at the
// indices where the recursion divisor is a multiple of p.

#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "trinlab/arith.hpp"

namespace trinlab {

/// Parameters (b, c) for T_n(b,c) and M_n(b,c). The discriminants are
/// recomputed on demand, never stored.
struct SeqParams {
  Int b, c;
  Int d() const { return b * b - 4 * c; }       // b^2 - 4c
  Int big_d() const { return b * b - 4 * c * c; }  // b^2 - 4c^2
};

/// Parameters (A, B) for the Lucas sequence u_n(A,B).
struct LucasParams {
  Int A, B;
  Int delta() const { return A * A - 4 * B; }
};

// ---------------------------------------------------------------------------
// Exact generators.
// ---------------------------------------------------------------------------

inline Int central_binomial(i64 n) { return binomial(2 * n, n); }

inline Int catalan(i64 n) {
  if (n < 0) throw std::domain_error("catalan: index must be nonnegative");
  return exact_div(central_binomial(n), Int(n + 1));
}

/// T_n(b,c) by the definitional sum over C(n,2k)C(2k,k) b^(n-2k) c^k.
inline Int trinomial(i64 n, const SeqParams& sp) {
  if (n < 0) throw std::domain_error("trinomial: index must be nonnegative");
  Int acc = 0;
  Int coeff = 1;  // C(n,2k) C(2k,k) = n! / (k! k! (n-2k)!)
  Int bp = pow_int(sp.b, static_cast<unsigned long>(n));
  Int cp = 1;
  Int b2 = sp.b * sp.b;
  for (i64 k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      coeff *= (n - 2 * k + 2) * (n - 2 * k + 1);
      coeff = exact_div(coeff, Int(k * k));
      cp *= sp.c;
      if (sp.b != 0) {
        bp = exact_div(bp, b2);
      } else {
        bp = (2 * k == n) ? Int(1) : Int(0);
      }
    }
    acc += coeff * bp * cp;
  }
  return acc;
}

/// T_0..T_{count-1} by the recursion (n+1)T_{n+1} = (2n+1)b T_n - d n T_{n-1}.
inline std::vector<Int> trinomial_list(const SeqParams& sp, std::size_t count) {
  std::vector<Int> t;
  t.reserve(count);
  if (count == 0) return t;
  t.push_back(1);
  if (count == 1) return t;
  t.push_back(sp.b);
  Int d = sp.d();
  for (std::size_t i = 2; i < count; ++i) {
    i64 n = static_cast<i64>(i) - 1;
    Int num = (2 * n + 1) * sp.b * t[i - 1] - d * n * t[i - 2];
    t.push_back(exact_div(num, Int(n + 1)));
  }
  return t;
}

/// M_n(b,c) by the definitional sum over C(n,2k) Cat_k b^(n-2k) c^k.
inline Int motzkin(i64 n, const SeqParams& sp) {
  if (n < 0) throw std::domain_error("motzkin: index must be nonnegative");
  Int acc = 0;
  Int coeff = 1;  // C(n,2k) Cat_k = n! / (k! (k+1)! (n-2k)!)
  Int bp = pow_int(sp.b, static_cast<unsigned long>(n));
  Int cp = 1;
  Int b2 = sp.b * sp.b;
  for (i64 k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      coeff *= (n - 2 * k + 2) * (n - 2 * k + 1);
      coeff = exact_div(coeff, Int(k * (k + 1)));
      cp *= sp.c;
      if (sp.b != 0) {
        bp = exact_div(bp, b2);
      } else {
        bp = (2 * k == n) ? Int(1) : Int(0);
      }
    }
    acc += coeff * bp * cp;
  }
  return acc;
}

/// M_0..M_{count-1} by the recursion (n+3)M_{n+1} = b(2n+3)M_n - d n M_{n-1}.
inline std::vector<Int> motzkin_list(const SeqParams& sp, std::size_t count) {
  std::vector<Int> m;
  m.reserve(count);
  if (count == 0) return m;
  m.push_back(1);
  if (count == 1) return m;
  m.push_back(sp.b);
  Int d = sp.d();
  for (std::size_t i = 2; i < count; ++i) {
    i64 n = static_cast<i64>(i) - 1;
    Int num = sp.b * (2 * n + 3) * m[i - 1] - d * n * m[i - 2];
    m.push_back(exact_div(num, Int(n + 3)));
  }
  return m;
}

/// Delannoy polynomial D_n(x) = sum C(n,k) C(n+k,k) x^k.
inline Int delannoy(i64 n, const Int& x) {
  if (n < 0) throw std::domain_error("delannoy: index must be nonnegative");
  Int acc = 0;
  Int coeff = 1;  // C(n,k) C(n+k,k)
  Int xp = 1;
  for (i64 k = 0; k <= n; ++k) {
    if (k > 0) {
      coeff *= (n - k + 1) * (n + k);
      coeff = exact_div(coeff, Int(k * k));
      xp *= x;
    }
    acc += coeff * xp;
  }
  return acc;
}

/// Lucas sequence u_n(A,B): u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}.
inline Int lucas_u(i64 n, const LucasParams& lp) {
  if (n < 0) throw std::domain_error("lucas_u: index must be nonnegative");
  if (n == 0) return 0;
  Int prev = 0, cur = 1;
  for (i64 i = 1; i < n; ++i) {
    Int next = lp.A * cur - lp.B * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Euler numbers from E_0 = 1 and sum_{j<=n} C(2n,2j) E_{2j} = 0 (n >= 1).
/// Odd indices are 0 by convention.
inline Int euler_number(i64 n) {
  if (n < 0) throw std::domain_error("euler_number: index must be nonnegative");
  if (n % 2 == 1) return 0;
  static std::mutex mu;
  static std::vector<Int> evens;  // evens[j] = E_{2j}
  std::lock_guard<std::mutex> lock(mu);
  if (evens.empty()) evens.push_back(1);
  while (static_cast<i64>(evens.size()) <= n / 2) {
    i64 half = static_cast<i64>(evens.size());
    Int s = 0;
    for (i64 j = 0; j < half; ++j) s += binomial(2 * half, 2 * j) * evens[static_cast<std::size_t>(j)];
    evens.push_back(-s);
  }
  return evens[static_cast<std::size_t>(n / 2)];
}

/// Fermat quotient q_p(2) = (2^(p-1) - 1)/p for an odd prime p.
inline Int fermat_quotient(i64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<u64>(p))) {
    throw std::domain_error("fermat_quotient: p must be an odd prime");
  }
  Int num = pow_int(Int(2), static_cast<unsigned long>(p - 1)) - 1;
  return exact_div(num, Int(p));
}

/// Harmonic number H_k = sum_{0<j<=k} 1/j in Z/p^e; requires k < p.
inline Residue harmonic_mod(i64 k, const ResidueRing& ring) {
  if (k >= ring.prime()) {
    throw denominator_not_invertible("harmonic_mod: k must be smaller than p");
  }
  u64 m = ring.modulus();
  u64 acc = 0;
  for (i64 j = 1; j <= k; ++j) acc = addmod(acc, invmod(static_cast<u64>(j) % m, m), m);
  return {ring, acc};
}

/// H_k^(2) = sum_{0<j<=k} 1/j^2 in Z/p^e; requires k < p.
inline Residue harmonic2_mod(i64 k, const ResidueRing& ring) {
  if (k >= ring.prime()) {
    throw denominator_not_invertible("harmonic2_mod: k must be smaller than p");
  }
  u64 m = ring.modulus();
  u64 acc = 0;
  for (i64 j = 1; j <= k; ++j) {
    u64 inv = invmod(static_cast<u64>(j) % m, m);
    acc = addmod(acc, mulmod(inv, inv, m), m);
  }
  return {ring, acc};
}

// ---------------------------------------------------------------------------
// Generating-function oracle: the first N coefficients of
// 1/sqrt(1 - 2bx + dx^2), computed by Newton iteration on truncated power
// series over exact rationals. Coefficients must come out integral.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Rat> series_mul(const std::vector<Rat>& f, const std::vector<Rat>& g,
                                   std::size_t count) {
  std::vector<Rat> out(count, Rat(0));
  for (std::size_t i = 0; i < f.size() && i < count; ++i) {
    if (f[i] == 0) continue;
    std::size_t jmax = std::min(g.size(), count - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

}  // namespace detail

inline std::vector<Int> trinomial_series(const SeqParams& sp, std::size_t count) {
  if (count == 0) return {};
  std::vector<Rat> f = {Rat(1), Rat(-2 * sp.b), Rat(sp.d())};
  std::vector<Rat> g = {Rat(1)};  // g = f^{-1/2}; g_{k+1} = g_k (3 - f g_k^2) / 2
  std::size_t prec = 1;
  while (prec < count) {
    prec = std::min(prec * 2, count);
    auto g2 = detail::series_mul(g, g, prec);
    auto fg2 = detail::series_mul(f, g2, prec);
    std::vector<Rat> h(prec, Rat(0));
    for (std::size_t i = 0; i < prec; ++i) {
      Rat top = i == 0 ? Rat(Rat(3) - fg2[i]) : Rat(-fg2[i]);
      h[i] = top / 2;
    }
    g = detail::series_mul(g, h, prec);
  }
  std::vector<Int> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (g[i].get_den() != 1) {
      throw std::logic_error("trinomial_series: non-integral coefficient");
    }
    out.push_back(g[i].get_num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residue-ring generators. Parameters are canonical residues of the ring.
// The recursions divide by n+1 (resp. n+3); when p divides the divisor the
// value is produced by the definitional sum instead.
// ---------------------------------------------------------------------------

/// C(2k,k) mod p^e for k = 0..count-1, reduced from exact values.
inline std::vector<u64> central_binomial_list_mod(const ResidueRing& ring, std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  Int cb = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      cb *= 2 * (2 * static_cast<i64>(k) - 1);
      cb = exact_div(cb, Int(static_cast<i64>(k)));
    }
    out.push_back(ring.reduce(cb));
  }
  return out;
}

/// Cat_k mod p^e for k = 0..count-1, reduced from exact values.
inline std::vector<u64> catalan_list_mod(const ResidueRing& ring, std::size_t count) {
  std::vector<u64> out;
  out.reserve(count);
  Int cat = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      cat *= 2 * (2 * static_cast<i64>(k) - 1);
      cat = exact_div(cat, Int(static_cast<i64>(k) + 1));
    }
    out.push_back(ring.reduce(cat));
  }
  return out;
}

namespace detail {

/// T_n(b,c) mod p^e by the definitional sum; b, c are canonical residues.
inline u64 trinomial_mod_direct(const ResidueRing& ring, u64 b, u64 c, i64 n) {
  const u64 m = ring.modulus();
  Int coeff = 1;
  u64 acc = 0;
  std::vector<u64> bp(static_cast<std::size_t>(n) + 1);
  bp[0] = 1 % m;
  for (i64 i = 1; i <= n; ++i) bp[static_cast<std::size_t>(i)] = mulmod(bp[static_cast<std::size_t>(i - 1)], b, m);
  u64 cp = 1 % m;
  for (i64 k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      coeff *= (n - 2 * k + 2) * (n - 2 * k + 1);
      coeff = exact_div(coeff, Int(k * k));
      cp = mulmod(cp, c, m);
    }
    acc = addmod(acc, mulmod(ring.reduce(coeff), mulmod(bp[static_cast<std::size_t>(n - 2 * k)], cp, m), m), m);
  }
  return acc;
}

/// M_n(b,c) mod p^e by the definitional sum; b, c are canonical residues.
inline u64 motzkin_mod_direct(const ResidueRing& ring, u64 b, u64 c, i64 n) {
  const u64 m = ring.modulus();
  Int coeff = 1;
  u64 acc = 0;
  std::vector<u64> bp(static_cast<std::size_t>(n) + 1);
  bp[0] = 1 % m;
  for (i64 i = 1; i <= n; ++i) bp[static_cast<std::size_t>(i)] = mulmod(bp[static_cast<std::size_t>(i - 1)], b, m);
  u64 cp = 1 % m;
  for (i64 k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      coeff *= (n - 2 * k + 2) * (n - 2 * k + 1);
      coeff = exact_div(coeff, Int(k * (k + 1)));
      cp = mulmod(cp, c, m);
    }
    acc = addmod(acc, mulmod(ring.reduce(coeff), mulmod(bp[static_cast<std::size_t>(n - 2 * k)], cp, m), m), m);
  }
  return acc;
}

}  // namespace detail

/// Extends t (a prefix of the T_k(b,c) list mod p^e) up to count entries.
inline void extend_trinomial_list_mod(const ResidueRing& ring, u64 b, u64 c, std::vector<u64>& t,
                                      std::size_t count) {
  const u64 m = ring.modulus();
  const i64 p = ring.prime();
  const u64 d = submod(mulmod(b, b, m), mulmod(ring.reduce(4), c, m), m);
  if (t.empty() && count > 0) t.push_back(1 % m);
  if (t.size() == 1 && count > 1) t.push_back(b);
  while (t.size() < count) {
    i64 n = static_cast<i64>(t.size()) - 1;  // computing T_{n+1}
    if ((n + 1) % p == 0) {
      t.push_back(detail::trinomial_mod_direct(ring, b, c, n + 1));
    } else {
      u64 lead = mulmod(mulmod(ring.reduce(2 * n + 1), b, m), t[static_cast<std::size_t>(n)], m);
      u64 tail = mulmod(mulmod(ring.reduce(n), d, m), t[static_cast<std::size_t>(n - 1)], m);
      t.push_back(mulmod(submod(lead, tail, m), invmod(ring.reduce(n + 1), m), m));
    }
  }
}

inline std::vector<u64> trinomial_list_mod(const ResidueRing& ring, u64 b, u64 c, std::size_t count) {
  std::vector<u64> t;
  t.reserve(count);
  extend_trinomial_list_mod(ring, b, c, t, count);
  return t;
}

/// Extends m_list (a prefix of the M_k(b,c) list mod p^e) up to count entries.
inline void extend_motzkin_list_mod(const ResidueRing& ring, u64 b, u64 c, std::vector<u64>& ml,
                                    std::size_t count) {
  const u64 m = ring.modulus();
  const i64 p = ring.prime();
  const u64 d = submod(mulmod(b, b, m), mulmod(ring.reduce(4), c, m), m);
  if (ml.empty() && count > 0) ml.push_back(1 % m);
  if (ml.size() == 1 && count > 1) ml.push_back(b);
  while (ml.size() < count) {
    i64 n = static_cast<i64>(ml.size()) - 1;  // computing M_{n+1}
    if ((n + 3) % p == 0) {
      ml.push_back(detail::motzkin_mod_direct(ring, b, c, n + 1));
    } else {
      u64 lead = mulmod(mulmod(ring.reduce(2 * n + 3), b, m), ml[static_cast<std::size_t>(n)], m);
      u64 tail = mulmod(mulmod(ring.reduce(n), d, m), ml[static_cast<std::size_t>(n - 1)], m);
      ml.push_back(mulmod(submod(lead, tail, m), invmod(ring.reduce(n + 3), m), m));
    }
  }
}

inline std::vector<u64> motzkin_list_mod(const ResidueRing& ring, u64 b, u64 c, std::size_t count) {
  std::vector<u64> ml;
  ml.reserve(count);
  extend_motzkin_list_mod(ring, b, c, ml, count);
  return ml;
}

/// D_k(x) mod p^e via T_k(2x+1, x^2+x); x is a canonical residue.
inline std::vector<u64> delannoy_list_mod(const ResidueRing& ring, u64 x, std::size_t count) {
  const u64 m = ring.modulus();
  u64 b = addmod(mulmod(2 % m, x, m), 1 % m, m);
  u64 c = mulmod(x, addmod(x, 1 % m, m), m);
  return trinomial_list_mod(ring, b, c, count);
}

/// D_n(x) for a residue argument, same domain as x.
inline Residue delannoy(i64 n, const Residue& x) {
  if (n < 0) throw std::domain_error("delannoy: index must be nonnegative");
  const u64 m = x.ring.modulus();
  Int coeff = 1;
  u64 acc = 0, xp = 1 % m;
  for (i64 k = 0; k <= n; ++k) {
    if (k > 0) {
      coeff *= (n - k + 1) * (n + k);
      coeff = exact_div(coeff, Int(k * k));
      xp = mulmod(xp, x.value, m);
    }
    acc = addmod(acc, mulmod(x.ring.reduce(coeff), xp, m), m);
  }
  return {x.ring, acc};
}

/// Lucas sequence u_0..u_{count-1} mod p^e; A, B are canonical residues.
inline std::vector<u64> lucas_list_mod(const ResidueRing& ring, u64 a, u64 b, std::size_t count) {
  const u64 m = ring.modulus();
  std::vector<u64> u;
  u.reserve(count);
  if (count == 0) return u;
  u.push_back(0);
  if (count == 1) return u;
  u.push_back(1 % m);
  for (std::size_t i = 2; i < count; ++i) {
    u.push_back(submod(mulmod(a, u[i - 1], m), mulmod(b, u[i - 2], m), m));
  }
  return u;
}

/// H_0..H_{count-1} mod p^e; requires count <= p.
inline std::vector<u64> harmonic_list_mod(const ResidueRing& ring, std::size_t count) {
  if (static_cast<i64>(count) > ring.prime()) {
    throw denominator_not_invertible("harmonic_list_mod: k must stay below p");
  }
  const u64 m = ring.modulus();
  std::vector<u64> h;
  h.reserve(count);
  u64 acc = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) acc = addmod(acc, invmod(static_cast<u64>(k) % m, m), m);
    h.push_back(acc);
  }
  return h;
}

/// H^(2)_0..H^(2)_{count-1} mod p^e; requires count <= p.
inline std::vector<u64> harmonic2_list_mod(const ResidueRing& ring, std::size_t count) {
  if (static_cast<i64>(count) > ring.prime()) {
    throw denominator_not_invertible("harmonic2_list_mod: k must stay below p");
  }
  const u64 m = ring.modulus();
  std::vector<u64> h;
  h.reserve(count);
  u64 acc = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      u64 inv = invmod(static_cast<u64>(k) % m, m);
      acc = addmod(acc, mulmod(inv, inv, m), m);
    }
    h.push_back(acc);
  }
  return h;
}

}  // namespace trinlab
