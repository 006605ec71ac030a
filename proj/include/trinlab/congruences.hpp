#pragma once

// Declarative registry and execution engine for the proven congruences.
//
// Every statement of the shape "(U/p^j) S == R (mod p^e)" is checked by the
// uniform quotient rule: U*S == p^j * R (mod p^(e+j)). U is never inverted
// and p^j is never divided out; negative powers m^-k inside S are realized
// as mod_inv(m)^k, with side conditions guaranteeing invertibility. The
// reported rhs is the lifted comparison target p^j * R, so pass <=> lhs == rhs.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trinlab/sequences.hpp"
#include "trinlab/sweep.hpp"

namespace trinlab {

/// Per-(spec, prime) scratch space: sequence prefixes in Z/p^(e+j), keyed by
/// canonical residue parameters so instances sharing parameters reuse lists.
class SeqCache {
 public:
  SeqCache(i64 p, int e_small, int e_big)
      : p_(p), small_(p, e_small), big_(p, e_big) {}

  i64 p() const { return p_; }
  const ResidueRing& small() const { return small_; }
  const ResidueRing& big() const { return big_; }

  const std::vector<u64>& t_list(i64 b, i64 c, std::size_t count) {
    return t_list_res(big_.reduce(b), big_.reduce(c), count);
  }
  const std::vector<u64>& t_list_res(u64 b, u64 c, std::size_t count) {
    auto& vec = t_[{b, c}];
    if (vec.size() < count) extend_trinomial_list_mod(big_, b, c, vec, count);
    return vec;
  }
  const std::vector<u64>& m_list(i64 b, i64 c, std::size_t count) {
    u64 br = big_.reduce(b), cr = big_.reduce(c);
    auto& vec = m_[{br, cr}];
    if (vec.size() < count) extend_motzkin_list_mod(big_, br, cr, vec, count);
    return vec;
  }
  const std::vector<u64>& d_list_res(u64 x, std::size_t count) {
    auto& vec = d_[x];
    if (vec.size() < count) {
      const u64 m = big_.modulus();
      u64 b = addmod(mulmod(2 % m, x, m), 1 % m, m);
      u64 c = mulmod(x, addmod(x, 1 % m, m), m);
      extend_trinomial_list_mod(big_, b, c, vec, count);
    }
    return vec;
  }
  const std::vector<u64>& central_binoms(std::size_t count) {
    if (cb_.size() < count) cb_ = central_binomial_list_mod(big_, count);
    return cb_;
  }
  const std::vector<u64>& catalans(std::size_t count) {
    if (cat_.size() < count) cat_ = catalan_list_mod(big_, count);
    return cat_;
  }
  const std::vector<u64>& harmonics(std::size_t count) {
    if (h_.size() < count) h_ = harmonic_list_mod(big_, count);
    return h_;
  }
  const std::vector<u64>& harmonics2(std::size_t count) {
    if (h2_.size() < count) h2_ = harmonic2_list_mod(big_, count);
    return h2_;
  }
  const std::vector<u64>& lucas(i64 a, i64 b, std::size_t count) {
    u64 ar = big_.reduce(a), br = big_.reduce(b);
    auto& vec = lucas_[{ar, br}];
    if (vec.size() < count) vec = lucas_list_mod(big_, ar, br, count);
    return vec;
  }

  u64 inv_big(i64 v) const { return invmod(big_.reduce(v), big_.modulus()); }
  u64 inv_small(i64 v) const { return invmod(small_.reduce(v), small_.modulus()); }

 private:
  i64 p_;
  ResidueRing small_, big_;
  std::map<std::pair<u64, u64>, std::vector<u64>> t_, m_, lucas_;
  std::map<u64, std::vector<u64>> d_;
  std::vector<u64> cb_, cat_, h_, h2_;
};

/// One registered congruence. eval computes lhs = U*S in Z/p^(e+j) and rhs =
/// R in Z/p^e; the engine lifts rhs to p^j * R before comparing. Witness-scan
/// entries may add keys (n, k, part) to the outcome instance.
struct CongruenceSpec {
  std::string id;
  std::vector<std::string> symbols;
  std::function<std::vector<Instance>(const Grid&)> enumerate;  // optional override
  i64 min_p = 3;
  int e = 1;
  int j = 0;
  std::function<bool(i64 p, const Instance&)> applicable;  // side conditions
  std::function<void(SeqCache&, const Instance&, CheckOutcome&)> eval;

  std::vector<Instance> instances(const Grid& grid) const {
    if (enumerate) return enumerate(grid);
    return grid_instances(symbols, grid);
  }
};

namespace detail {

inline i64 geti(const Instance& inst, const char* key) { return inst.at(key); }

inline u64 upow(i64 base, int exp) {
  u64 r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<u64>(base);
  return r;
}

}  // namespace detail

/// Evaluates one (spec, p, instance) triple. A shared cache may be supplied
/// when sweeping many instances at the same prime.
inline CheckOutcome check_instance(const CongruenceSpec& spec, i64 p, const Instance& inst,
                                   SeqCache* cache = nullptr) {
  CheckOutcome out;
  out.spec_id = spec.id;
  out.instance = inst;
  out.instance["p"] = p;
  out.modulus = detail::upow(p, spec.e + spec.j);
  if (p < spec.min_p || (spec.applicable && !spec.applicable(p, inst))) {
    out.status = Status::skipped;
    return out;
  }
  std::unique_ptr<SeqCache> local;
  if (cache == nullptr) {
    local = std::make_unique<SeqCache>(p, spec.e, spec.e + spec.j);
    cache = local.get();
  }
  spec.eval(*cache, inst, out);
  out.has_values = true;
  out.rhs *= detail::upow(p, spec.j);  // lift R to Z/p^(e+j)
  out.status = out.lhs == out.rhs ? Status::pass : Status::fail;
  return out;
}

// ---------------------------------------------------------------------------
// The built-in registry.
// ---------------------------------------------------------------------------

namespace detail {

// D_n(m) parameters for the d = 1 family b = 2m+1, c = m^2+m.
inline SeqParams unit_disc_params(i64 m) { return SeqParams{Int(2 * m + 1), Int(m) * m + m}; }

}  // namespace detail

inline std::vector<CongruenceSpec> builtin_registry() {
  using detail::geti;
  std::vector<CongruenceSpec> r;

  auto divisible = [](i64 v, i64 p) { return reduce64(v, static_cast<u64>(p)) == 0; };

  // (1.1): sum T_k(b,c)/m^k == ((m-b)^2-4c / p) (mod p), p !| m.
  {
    CongruenceSpec s;
    s.id = "eq1.1";
    s.symbols = {"b", "c", "m"};
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(geti(i, "b"), geti(i, "c"), static_cast<std::size_t>(p));
      u64 im = C.inv_big(geti(i, "m"));
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(T[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, im, M);
      }
      out.lhs = acc;
      i64 t = geti(i, "m") - geti(i, "b");
      out.rhs = lift_sign(jacobi(t * t - 4 * geti(i, "c"), p), C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // (1.2): 2c sum M_k(b,c)/m^k == (m-b)^2 - ((m-b)^2-4c)((m-b)^2-4c / p) (mod p).
  {
    CongruenceSpec s;
    s.id = "eq1.2";
    s.symbols = {"b", "c", "m"};
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& Mo = C.m_list(geti(i, "b"), geti(i, "c"), static_cast<std::size_t>(p));
      u64 im = C.inv_big(geti(i, "m"));
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(Mo[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, im, M);
      }
      out.lhs = mulmod(C.big().reduce(2 * geti(i, "c")), acc, M);
      i64 t = geti(i, "m") - geti(i, "b");
      i64 a = t * t - 4 * geti(i, "c");
      out.rhs = C.small().reduce(t * t - a * jacobi(a, p));
    };
    r.push_back(std::move(s));
  }

  // (1.3): sum T_k(b,c)^2/d^k == (cd / p) (mod p), p !| d.
  {
    CongruenceSpec s;
    s.id = "eq1.3";
    s.symbols = {"b", "c"};
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 b = geti(i, "b"), c = geti(i, "c");
      return !divisible(b * b - 4 * c, p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      i64 d = b * b - 4 * c;
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c, static_cast<std::size_t>(p));
      u64 id = C.inv_big(d);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        u64 tk = T[static_cast<std::size_t>(k)];
        acc = addmod(acc, mulmod(mulmod(tk, tk, M), w, M), M);
        w = mulmod(w, id, M);
      }
      out.lhs = acc;
      out.rhs = lift_sign(jacobi(Int(c) * d, Int(p)), C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // (1.4): sum T_k(b,c^2)^2/(b-2c)^(2k) == (-c^2 / p) (mod p), b !== 2c (mod p).
  {
    CongruenceSpec s;
    s.id = "eq1.4";
    s.symbols = {"b", "c"};
    s.applicable = [divisible](i64 p, const Instance& i) {
      return !divisible(geti(i, "b") - 2 * geti(i, "c"), p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c * c, static_cast<std::size_t>(p));
      i64 w0 = b - 2 * c;
      u64 iw2 = C.inv_big(w0 * w0);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        u64 tk = T[static_cast<std::size_t>(k)];
        acc = addmod(acc, mulmod(mulmod(tk, tk, M), w, M), M);
        w = mulmod(w, iw2, M);
      }
      out.lhs = acc;
      out.rhs = lift_sign(jacobi(-Int(c) * c, Int(p)), C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // (1.5): sum T_k M_k / d^k == 0 (mod p), p !| c, p !| d.
  {
    CongruenceSpec s;
    s.id = "eq1.5";
    s.symbols = {"b", "c"};
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 b = geti(i, "b"), c = geti(i, "c");
      return !divisible(c, p) && !divisible(b * b - 4 * c, p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c, static_cast<std::size_t>(p));
      const auto& Mo = C.m_list(b, c, static_cast<std::size_t>(p));
      u64 id = C.inv_big(b * b - 4 * c);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(mulmod(T[static_cast<std::size_t>(k)], Mo[static_cast<std::size_t>(k)], M), w, M), M);
        w = mulmod(w, id, M);
      }
      out.lhs = acc;
      out.rhs = 0;
    };
    r.push_back(std::move(s));
  }

  // (1.6): sum T_k(b,c^2) M_k(b,c^2)/(b-2c)^(2k) == (4b/(b+2c)) (D / p) (mod p).
  {
    CongruenceSpec s;
    s.id = "eq1.6";
    s.symbols = {"b", "c"};
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 b = geti(i, "b"), c = geti(i, "c");
      return !divisible(c, p) && !divisible(b * b - 4 * c * c, p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c * c, static_cast<std::size_t>(p));
      const auto& Mo = C.m_list(b, c * c, static_cast<std::size_t>(p));
      i64 w0 = b - 2 * c;
      u64 iw2 = C.inv_big(w0 * w0);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(mulmod(T[static_cast<std::size_t>(k)], Mo[static_cast<std::size_t>(k)], M), w, M), M);
        w = mulmod(w, iw2, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 frac = mulmod(C.small().reduce(4 * b), C.inv_small(b + 2 * c), ms);
      out.rhs = mulmod(frac, lift_sign(jacobi(b * b - 4 * c * c, p), ms), ms);
    };
    r.push_back(std::move(s));
  }

  // (1.9): sum D_k(x)^2 == (x(x+1) / p) (mod p).
  {
    CongruenceSpec s;
    s.id = "eq1.9";
    s.symbols = {"x"};
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), x = geti(i, "x");
      const u64 M = C.big().modulus();
      const auto& D = C.d_list_res(C.big().reduce(x), static_cast<std::size_t>(p));
      u64 acc = 0;
      for (i64 k = 0; k < p; ++k) {
        u64 dk = D[static_cast<std::size_t>(k)];
        acc = addmod(acc, mulmod(dk, dk, M), M);
      }
      out.lhs = acc;
      out.rhs = lift_sign(jacobi(Int(x) * (x + 1), Int(p)), C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // (1.13): 2c sum T_k(b,c^2)/(b-2c)^k == p(-b + (b+2c)(b^2-4c^2 / p)) (mod p^2).
  {
    CongruenceSpec s;
    s.id = "eq1.13";
    s.symbols = {"b", "c"};
    s.j = 1;
    s.applicable = [divisible](i64 p, const Instance& i) {
      return !divisible(geti(i, "b") - 2 * geti(i, "c"), p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c * c, static_cast<std::size_t>(p));
      u64 iw = C.inv_big(b - 2 * c);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(T[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, iw, M);
      }
      out.lhs = mulmod(C.big().reduce(2 * c), acc, M);
      out.rhs = C.small().reduce(-b + (b + 2 * c) * jacobi(b * b - 4 * c * c, p));
    };
    r.push_back(std::move(s));
  }

  // (1.14): 12c^2 sum k T_k(b,c^2)/(b-2c)^k == p((b+2c)^2(1-(D/p)) - 4c^2) (mod p^2).
  {
    CongruenceSpec s;
    s.id = "eq1.14";
    s.symbols = {"b", "c"};
    s.j = 1;
    s.applicable = [divisible](i64 p, const Instance& i) {
      return !divisible(geti(i, "b") - 2 * geti(i, "c"), p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c * c, static_cast<std::size_t>(p));
      u64 iw = C.inv_big(b - 2 * c);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(mulmod(C.big().reduce(k), T[static_cast<std::size_t>(k)], M), w, M), M);
        w = mulmod(w, iw, M);
      }
      out.lhs = mulmod(C.big().reduce(12 * c * c), acc, M);
      i64 bp2c = b + 2 * c;
      out.rhs = C.small().reduce(bp2c * bp2c * (1 - jacobi(b * b - 4 * c * c, p)) - 4 * c * c);
    };
    r.push_back(std::move(s));
  }

  // (1.16): sum (2k+1) T_k(b,c) == p + ((b+1)/(b-1)) p (((b+1)/2)^(p-1) - 1) (mod p^3),
  // for the d = 1 family b = 2m+1, c = m^2+m with p !| 2m.
  {
    CongruenceSpec s;
    s.id = "eq1.16";
    s.symbols = {"m"};
    s.e = 3;
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), m = geti(i, "m");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(2 * m + 1, m * m + m, static_cast<std::size_t>(p));
      u64 acc = 0;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(C.big().reduce(2 * k + 1), T[static_cast<std::size_t>(k)], M), M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 pw = powmod(C.small().reduce(m + 1), static_cast<u64>(p - 1), ms);
      u64 frac = mulmod(C.small().reduce(2 * m + 2), C.inv_small(2 * m), ms);
      u64 tail = mulmod(mulmod(frac, reduce64(p, ms), ms), submod(pw, 1 % ms, ms), ms);
      out.rhs = addmod(reduce64(p, ms), tail, ms);
    };
    r.push_back(std::move(s));
  }

  // (1.17): sum (2k+1)^2 T_k(b,c) == (1/m)(-m / p) (mod p), same family.
  {
    CongruenceSpec s;
    s.id = "eq1.17";
    s.symbols = {"m"};
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), m = geti(i, "m");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(2 * m + 1, m * m + m, static_cast<std::size_t>(p));
      u64 acc = 0;
      for (i64 k = 0; k < p; ++k) {
        u64 w = C.big().reduce(2 * k + 1);
        acc = addmod(acc, mulmod(mulmod(w, w, M), T[static_cast<std::size_t>(k)], M), M);
      }
      out.lhs = acc;
      out.rhs = mulmod(C.inv_small(m), lift_sign(jacobi(-m, p), C.small().modulus()),
                       C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // (1.21): sum (2k+1) T_k^2/d^k == p^2 (1 + (b^2/c)((d/p)-1)/2) (mod p^3);
  // the p | c branch is a separate sub-entry asserting == p^2.
  auto lhs_1_21 = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
    i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
    const u64 M = C.big().modulus();
    const auto& T = C.t_list(b, c, static_cast<std::size_t>(p));
    u64 id = C.inv_big(b * b - 4 * c);
    u64 acc = 0, w = 1 % M;
    for (i64 k = 0; k < p; ++k) {
      u64 tk = T[static_cast<std::size_t>(k)];
      acc = addmod(acc, mulmod(mulmod(C.big().reduce(2 * k + 1), mulmod(tk, tk, M), M), w, M), M);
      w = mulmod(w, id, M);
    }
    out.lhs = acc;
  };
  {
    CongruenceSpec s;
    s.id = "eq1.21";
    s.symbols = {"b", "c"};
    s.j = 2;
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 b = geti(i, "b"), c = geti(i, "c");
      return c != 0 && !divisible(b * b - 4 * c, p) && !divisible(c, p);
    };
    s.eval = [lhs_1_21](SeqCache& C, const Instance& i, CheckOutcome& out) {
      lhs_1_21(C, i, out);
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 ms = C.small().modulus();
      if (jacobi(b * b - 4 * c, p) == 1) {
        out.rhs = 1 % ms;
      } else {
        out.rhs = submod(1 % ms, mulmod(C.small().reduce(b * b), C.inv_small(c), ms), ms);
      }
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "eq1.21pc";
    s.symbols = {"b", "c"};
    s.j = 2;
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 b = geti(i, "b"), c = geti(i, "c");
      return c != 0 && !divisible(b * b - 4 * c, p) && divisible(c, p);
    };
    s.eval = [lhs_1_21](SeqCache& C, const Instance& i, CheckOutcome& out) {
      lhs_1_21(C, i, out);
      out.rhs = 1 % C.small().modulus();
    };
    r.push_back(std::move(s));
  }

  // Fixed-parameter supercongruences of Theorem 1.4.
  auto squares_over_base = [](SeqCache& C, i64 b, i64 c, i64 base) {
    i64 p = C.p();
    const u64 M = C.big().modulus();
    const auto& T = C.t_list(b, c, static_cast<std::size_t>(p));
    u64 ib = C.inv_big(base);
    u64 acc = 0, w = 1 % M;
    for (i64 k = 0; k < p; ++k) {
      u64 tk = T[static_cast<std::size_t>(k)];
      acc = addmod(acc, mulmod(mulmod(tk, tk, M), w, M), M);
      w = mulmod(w, ib, M);
    }
    return acc;
  };
  {
    CongruenceSpec s;
    s.id = "eq1.22";  // sum T_k(6,-3)^2/48^k == (-1/p) + (p^2/3) E_{p-3} (mod p^3)
    s.min_p = 5;
    s.e = 3;
    s.eval = [squares_over_base](SeqCache& C, const Instance&, CheckOutcome& out) {
      out.lhs = squares_over_base(C, 6, -3, 48);
      i64 p = C.p();
      const u64 ms = C.small().modulus();
      u64 ep = C.small().reduce(euler_number(p - 3));
      u64 p2 = mulmod(reduce64(p, ms), reduce64(p, ms), ms);
      u64 tail = mulmod(mulmod(p2, C.inv_small(3), ms), ep, ms);
      out.rhs = addmod(lift_sign(jacobi(-1, p), ms), tail, ms);
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "eq1.23";  // sum T_k(2,-1)^2/8^k == (-2/p) (mod p^2)
    s.min_p = 5;
    s.e = 2;
    s.eval = [squares_over_base](SeqCache& C, const Instance&, CheckOutcome& out) {
      out.lhs = squares_over_base(C, 2, -1, 8);
      out.rhs = lift_sign(jacobi(-2, C.p()), C.small().modulus());
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "eq1.24";  // sum T_k(2,-3)^2/16^k == (p/3) (mod p^2)
    s.min_p = 5;
    s.e = 2;
    s.eval = [squares_over_base](SeqCache& C, const Instance&, CheckOutcome& out) {
      out.lhs = squares_over_base(C, 2, -3, 16);
      out.rhs = lift_sign(jacobi(C.p(), 3), C.small().modulus());
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "eq1.25";  // sum_{k=1..p-1} D_k^2/k^2 == -2 q_p(2)^2 (mod p)
    s.min_p = 5;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& D = C.t_list(3, 2, static_cast<std::size_t>(p));
      u64 acc = 0;
      for (i64 k = 1; k < p; ++k) {
        u64 dk = D[static_cast<std::size_t>(k)];
        u64 ik = invmod(reduce64(k, M), M);
        acc = addmod(acc, mulmod(mulmod(dk, dk, M), mulmod(ik, ik, M), M), M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 q = C.small().reduce(fermat_quotient(p));
      out.rhs = submod(0, mulmod(2 % ms, mulmod(q, q, ms), ms), ms);
    };
    r.push_back(std::move(s));
  }

  // Lemma 2.1: sums over k <= (p-1)/2 of C(2k,k)/m^k and Cat_k/m^k.
  {
    CongruenceSpec s;
    s.id = "lem2.1a";
    s.symbols = {"m"};
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), m = geti(i, "m");
      const u64 M = C.big().modulus();
      const auto& CB = C.central_binoms(static_cast<std::size_t>((p - 1) / 2) + 1);
      u64 im = C.inv_big(m);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k <= (p - 1) / 2; ++k) {
        acc = addmod(acc, mulmod(CB[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, im, M);
      }
      out.lhs = acc;
      out.rhs = lift_sign(jacobi(m * (m - 4), p), C.small().modulus());
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "lem2.1b";
    s.symbols = {"m"};
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), m = geti(i, "m");
      const u64 M = C.big().modulus();
      const auto& Cat = C.catalans(static_cast<std::size_t>((p - 1) / 2) + 1);
      u64 im = C.inv_big(m);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k <= (p - 1) / 2; ++k) {
        acc = addmod(acc, mulmod(Cat[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, im, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 inv2 = C.inv_small(2);
      u64 a = mulmod(C.small().reduce(m), inv2, ms);
      u64 b = mulmod(mulmod(C.small().reduce(m - 4), inv2, ms),
                     lift_sign(jacobi(m * (m - 4), p), ms), ms);
      out.rhs = submod(a, b, ms);
    };
    r.push_back(std::move(s));
  }

  // Lemma 2.2: T_n == (d/p) d^n T_{p-1-n} (mod p) for n < p when p !| d, and
  // T_n == 0 for p/2 < n < p when p | d. All n are scanned; the outcome
  // reports the first failing index, or n = 0 (resp. the first index) if all hold.
  {
    CongruenceSpec s;
    s.id = "lem2.2";
    s.symbols = {"b", "c"};
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      i64 d = b * b - 4 * c;
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c, static_cast<std::size_t>(p));
      if (reduce64(d, M) == 0) {
        i64 first = p / 2 + 1;
        out.instance["n"] = first;
        out.lhs = T[static_cast<std::size_t>(first)];
        out.rhs = 0;
        for (i64 n = first; n < p; ++n) {
          if (T[static_cast<std::size_t>(n)] != 0) {
            out.instance["n"] = n;
            out.lhs = T[static_cast<std::size_t>(n)];
            out.rhs = 0;
            return;
          }
        }
        out.instance["n"] = first;
        out.lhs = T[static_cast<std::size_t>(first)];
        out.rhs = out.lhs;
        return;
      }
      u64 jd = lift_sign(jacobi(d, p), M);
      u64 dr = C.big().reduce(d);
      u64 dn = 1 % M;
      for (i64 n = 0; n < p; ++n) {
        u64 rhs = mulmod(mulmod(jd, dn, M), T[static_cast<std::size_t>(p - 1 - n)], M);
        if (T[static_cast<std::size_t>(n)] != rhs) {
          out.instance["n"] = n;
          out.lhs = T[static_cast<std::size_t>(n)];
          out.rhs = rhs;
          return;
        }
        dn = mulmod(dn, dr, M);
      }
      out.instance["n"] = 0;
      out.lhs = T[0];
      out.rhs = mulmod(jd, T[static_cast<std::size_t>(p - 1)], M);
    };
    r.push_back(std::move(s));
  }

  // Lemma 2.3: u_p(A,B) == (A^2-4B / p) (mod p).
  {
    CongruenceSpec s;
    s.id = "lem2.3";
    s.symbols = {"A", "B"};
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), a = geti(i, "A"), b = geti(i, "B");
      const auto& U = C.lucas(a, b, static_cast<std::size_t>(p) + 1);
      out.lhs = U[static_cast<std::size_t>(p)];
      out.rhs = lift_sign(jacobi(a * a - 4 * b, p), C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // Lemma 2.4: T_p == b, T_{p+1} == b^2, T_{p-1} == (d/p) (mod p).
  // Scanned as parts 1..3 with a failing-part witness.
  {
    CongruenceSpec s;
    s.id = "lem2.4";
    s.symbols = {"b", "c"};
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(b, c, static_cast<std::size_t>(p) + 2);
      u64 br = C.big().reduce(b);
      const u64 lhs[] = {T[static_cast<std::size_t>(p)], T[static_cast<std::size_t>(p) + 1],
                         T[static_cast<std::size_t>(p) - 1]};
      const u64 rhs[] = {br, mulmod(br, br, M), lift_sign(jacobi(b * b - 4 * c, p), M)};
      for (int part = 0; part < 3; ++part) {
        if (lhs[part] != rhs[part]) {
          out.instance["part"] = part + 1;
          out.lhs = lhs[part];
          out.rhs = rhs[part];
          return;
        }
      }
      out.instance["part"] = 1;
      out.lhs = lhs[0];
      out.rhs = rhs[0];
    };
    r.push_back(std::move(s));
  }

  // Lemma 4.3: sum T_k^2/d^k == (16c/d)^((p-1)/2)
  //            + p sum_{k != (p-1)/2} C(2k,k)/((2k+1)) (-c/d)^k (mod p^3).
  {
    CongruenceSpec s;
    s.id = "lem4.3";
    s.symbols = {"b", "c"};
    s.min_p = 5;
    s.e = 3;
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 b = geti(i, "b"), c = geti(i, "c");
      return !divisible(b * b - 4 * c, p);
    };
    s.eval = [squares_over_base](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), b = geti(i, "b"), c = geti(i, "c");
      i64 d = b * b - 4 * c;
      out.lhs = squares_over_base(C, b, c, d);
      const u64 ms = C.small().modulus();
      u64 id = C.inv_small(d);
      u64 head = powmod(mulmod(C.small().reduce(16 * c), id, ms), static_cast<u64>((p - 1) / 2), ms);
      const auto& CB = C.central_binoms(static_cast<std::size_t>(p));
      u64 base = mulmod(C.small().reduce(-c), id, ms);
      u64 acc = 0, w = 1 % ms;
      for (i64 k = 0; k < p; ++k) {
        if (k != (p - 1) / 2) {
          u64 term = mulmod(CB[static_cast<std::size_t>(k)], invmod(reduce64(2 * k + 1, ms), ms), ms);
          acc = addmod(acc, mulmod(term, w, ms), ms);
        }
        w = mulmod(w, base, ms);
      }
      out.rhs = addmod(head, mulmod(reduce64(p, ms), acc, ms), ms);
    };
    r.push_back(std::move(s));
  }

  // Morley: C(p-1,(p-1)/2) == (-1)^((p-1)/2) 4^(p-1) (mod p^3).
  {
    CongruenceSpec s;
    s.id = "aux-morley";
    s.min_p = 5;
    s.e = 3;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 ms = C.small().modulus();
      out.lhs = C.small().reduce(binomial(p - 1, (p - 1) / 2));
      u64 pw = powmod(4 % ms, static_cast<u64>(p - 1), ms);
      out.rhs = ((p - 1) / 2) % 2 == 0 ? pw : submod(0, pw, ms);
    };
    r.push_back(std::move(s));
  }

  // Wolstenholme: H^(2)_{p-1} == 0 and H^(2)_{(p-1)/2} == 0 (mod p).
  {
    CongruenceSpec s;
    s.id = "aux-wolstenholme2";
    s.min_p = 5;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const auto& H2 = C.harmonics2(static_cast<std::size_t>(p));
      const u64 lhs[] = {H2[static_cast<std::size_t>(p - 1)], H2[static_cast<std::size_t>((p - 1) / 2)]};
      for (int part = 0; part < 2; ++part) {
        if (lhs[part] != 0) {
          out.instance["part"] = part + 1;
          out.lhs = lhs[part];
          out.rhs = 0;
          return;
        }
      }
      out.instance["part"] = 1;
      out.lhs = 0;
      out.rhs = 0;
    };
    r.push_back(std::move(s));
  }

  // [S1, Lemma 2.2]: C(n+k,2k) == C(2k,k)/(-16)^k (mod p^2) for n = (p-1)/2,
  // scanned over k = 0..n.
  {
    CongruenceSpec s;
    s.id = "aux-s1-l22";
    s.e = 2;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      i64 n = (p - 1) / 2;
      const u64 M = C.big().modulus();
      const auto& CB = C.central_binoms(static_cast<std::size_t>(n) + 1);
      u64 i16 = invmod(C.big().reduce(-16), M);
      u64 w = 1 % M;
      u64 first_lhs = 1 % M, first_rhs = 1 % M;
      for (i64 k = 0; k <= n; ++k) {
        u64 lhs = C.big().reduce(binomial(n + k, 2 * k));
        u64 rhs = mulmod(CB[static_cast<std::size_t>(k)], w, M);
        if (k == 0) {
          first_lhs = lhs;
          first_rhs = rhs;
        }
        if (lhs != rhs) {
          out.instance["k"] = k;
          out.lhs = lhs;
          out.rhs = rhs;
          return;
        }
        w = mulmod(w, i16, M);
      }
      out.instance["k"] = 0;
      out.lhs = first_lhs;
      out.rhs = first_rhs;
    };
    r.push_back(std::move(s));
  }

  // [Su3, Lemma 2.1]: sum_{k=1..p-1} Cat_k/m^k == ((m-4)/2)(1 - (m(m-4)/p)) (mod p).
  {
    CongruenceSpec s;
    s.id = "aux-su3-l21";
    s.symbols = {"m"};
    s.applicable = [divisible](i64 p, const Instance& i) { return !divisible(geti(i, "m"), p); };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), m = geti(i, "m");
      const u64 M = C.big().modulus();
      const auto& Cat = C.catalans(static_cast<std::size_t>(p));
      u64 im = C.inv_big(m);
      u64 acc = 0, w = im;
      for (i64 k = 1; k < p; ++k) {
        acc = addmod(acc, mulmod(Cat[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, im, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 half = mulmod(C.small().reduce(m - 4), C.inv_small(2), ms);
      out.rhs = mulmod(half, submod(1 % ms, lift_sign(jacobi(m * (m - 4), p), ms), ms), ms);
    };
    r.push_back(std::move(s));
  }

  // [Su2, (1.4)-(1.5)]: the two halves of sum C(2k,k)/((2k+1)16^k) (mod p^2).
  {
    CongruenceSpec s;
    s.id = "aux-su2-14";
    s.min_p = 5;
    s.e = 2;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& CB = C.central_binoms(static_cast<std::size_t>(p));
      u64 i16 = C.inv_big(16);
      u64 acc = 0, w = 1 % M;
      for (i64 k = 0; k <= (p - 3) / 2; ++k) {
        acc = addmod(acc, mulmod(mulmod(CB[static_cast<std::size_t>(k)], invmod(reduce64(2 * k + 1, M), M), M), w, M), M);
        w = mulmod(w, i16, M);
      }
      out.lhs = acc;
      out.rhs = 0;
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "aux-su2-15";
    s.min_p = 5;
    s.e = 2;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& CB = C.central_binoms(static_cast<std::size_t>(p));
      u64 i16 = C.inv_big(16);
      u64 acc = 0;
      u64 w = powmod(i16, static_cast<u64>((p + 1) / 2), M);
      for (i64 k = (p + 1) / 2; k < p; ++k) {
        acc = addmod(acc, mulmod(mulmod(CB[static_cast<std::size_t>(k)], invmod(reduce64(2 * k + 1, M), M), M), w, M), M);
        w = mulmod(w, i16, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 ep = C.small().reduce(euler_number(p - 3));
      out.rhs = mulmod(mulmod(reduce64(p, ms), C.inv_small(3), ms), ep, ms);
    };
    r.push_back(std::move(s));
  }

  // Mattarei-Tauraso: sum_{k=1..p-1} (-2)^k C(2k,k)/k^2 == -2 q_p(2)^2 (mod p).
  {
    CongruenceSpec s;
    s.id = "aux-mt";
    s.min_p = 5;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& CB = C.central_binoms(static_cast<std::size_t>(p));
      u64 m2 = C.big().reduce(-2);
      u64 acc = 0, w = m2;
      for (i64 k = 1; k < p; ++k) {
        u64 ik = invmod(reduce64(k, M), M);
        acc = addmod(acc, mulmod(mulmod(CB[static_cast<std::size_t>(k)], mulmod(ik, ik, M), M), w, M), M);
        w = mulmod(w, m2, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 q = C.small().reduce(fermat_quotient(p));
      out.rhs = submod(0, mulmod(2 % ms, mulmod(q, q, ms), ms), ms);
    };
    r.push_back(std::move(s));
  }

  // Remark 4.1 auxiliaries.
  {
    CongruenceSpec s;
    s.id = "aux-r41a";  // sum (-2)^k Cat_k == -4 p q_p(2) (mod p^3)
    s.min_p = 5;
    s.e = 3;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& Cat = C.catalans(static_cast<std::size_t>(p));
      u64 m2 = C.big().reduce(-2);
      u64 acc = 0, w = m2;
      for (i64 k = 1; k < p; ++k) {
        acc = addmod(acc, mulmod(Cat[static_cast<std::size_t>(k)], w, M), M);
        w = mulmod(w, m2, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 q = C.small().reduce(fermat_quotient(p));
      out.rhs = submod(0, mulmod(mulmod(4 % ms, reduce64(p, ms), ms), q, ms), ms);
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "aux-r41b";  // sum (-2)^k Cat_k H^(2)_k == 2 q_p(2)^2 (mod p)
    s.min_p = 5;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& Cat = C.catalans(static_cast<std::size_t>(p));
      const auto& H2 = C.harmonics2(static_cast<std::size_t>(p));
      u64 m2 = C.big().reduce(-2);
      u64 acc = 0, w = m2;
      for (i64 k = 1; k < p; ++k) {
        acc = addmod(acc, mulmod(mulmod(Cat[static_cast<std::size_t>(k)], H2[static_cast<std::size_t>(k)], M), w, M), M);
        w = mulmod(w, m2, M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 q = C.small().reduce(fermat_quotient(p));
      out.rhs = mulmod(2 % ms, mulmod(q, q, ms), ms);
    };
    r.push_back(std::move(s));
  }
  {
    CongruenceSpec s;
    s.id = "aux-r41c";  // sum (2k+1) D_k^2 == p^2 - 4p^3 q - 2p^4 q^2 (mod p^5)
    s.min_p = 5;
    s.e = 5;
    s.eval = [](SeqCache& C, const Instance&, CheckOutcome& out) {
      i64 p = C.p();
      const u64 M = C.big().modulus();
      const auto& D = C.t_list(3, 2, static_cast<std::size_t>(p));
      u64 acc = 0;
      for (i64 k = 0; k < p; ++k) {
        u64 dk = D[static_cast<std::size_t>(k)];
        acc = addmod(acc, mulmod(C.big().reduce(2 * k + 1), mulmod(dk, dk, M), M), M);
      }
      out.lhs = acc;
      const u64 ms = C.small().modulus();
      u64 q = C.small().reduce(fermat_quotient(p));
      u64 pr = reduce64(p, ms);
      u64 p2 = mulmod(pr, pr, ms);
      u64 p3 = mulmod(p2, pr, ms);
      u64 p4 = mulmod(p3, pr, ms);
      u64 rhs = p2;
      rhs = submod(rhs, mulmod(mulmod(4 % ms, p3, ms), q, ms), ms);
      rhs = submod(rhs, mulmod(mulmod(2 % ms, p4, ms), mulmod(q, q, ms), ms), ms);
      out.rhs = rhs;
    };
    r.push_back(std::move(s));
  }

  // Remark 2.1: sum T_k^2/9^k == (-1/p) (mod p), p > 3.
  {
    CongruenceSpec s;
    s.id = "rem2.1";
    s.min_p = 5;
    s.eval = [squares_over_base](SeqCache& C, const Instance&, CheckOutcome& out) {
      out.lhs = squares_over_base(C, 1, 1, 9);
      out.rhs = lift_sign(jacobi(-1, C.p()), C.small().modulus());
    };
    r.push_back(std::move(s));
  }

  // Remark 1.1: sum (2k+1) T_k(b,c) == p (mod p^2) when b^2-4c = 1 and p !| c.
  {
    CongruenceSpec s;
    s.id = "rem1.1b";
    s.symbols = {"m"};
    s.j = 1;
    s.applicable = [divisible](i64 p, const Instance& i) {
      i64 m = geti(i, "m");
      i64 c = m * m + m;
      return c != 0 && !divisible(c, p);
    };
    s.eval = [](SeqCache& C, const Instance& i, CheckOutcome& out) {
      i64 p = C.p(), m = geti(i, "m");
      const u64 M = C.big().modulus();
      const auto& T = C.t_list(2 * m + 1, m * m + m, static_cast<std::size_t>(p));
      u64 acc = 0;
      for (i64 k = 0; k < p; ++k) {
        acc = addmod(acc, mulmod(C.big().reduce(2 * k + 1), T[static_cast<std::size_t>(k)], M), M);
      }
      out.lhs = acc;
      out.rhs = 1 % C.small().modulus();
    };
    r.push_back(std::move(s));
  }

  return r;
}

// ---------------------------------------------------------------------------
// Sweep driver.
// ---------------------------------------------------------------------------

inline std::vector<i64> odd_primes_in(i64 pmin, i64 pmax) {
  std::vector<i64> out;
  for (i64 p : sieve_primes(pmax)) {
    if (p >= std::max<i64>(3, pmin)) out.push_back(p);
  }
  return out;
}

inline void sort_outcomes(std::vector<CheckOutcome>& outcomes) {
  std::sort(outcomes.begin(), outcomes.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
    if (a.spec_id != b.spec_id) return a.spec_id < b.spec_id;
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.instance < b.instance;
  });
}

/// Evaluates the cross product (spec, p, instance), sorted by (id, p,
/// instance). Skipped instances are reported, never dropped.
inline std::vector<CheckOutcome> run_registry(const std::vector<CongruenceSpec>& specs, i64 pmin,
                                              i64 pmax, const Grid& grid, int workers = 1) {
  auto primes = odd_primes_in(pmin, pmax);
  struct Task {
    const CongruenceSpec* spec;
    i64 p;
  };
  std::vector<Task> tasks;
  for (const auto& spec : specs) {
    for (i64 p : primes) tasks.push_back({&spec, p});
  }
  auto chunks = parallel_map<std::vector<CheckOutcome>>(
      tasks.size(), workers, [&](std::size_t idx) {
        const auto& task = tasks[idx];
        SeqCache cache(task.p, task.spec->e, task.spec->e + task.spec->j);
        std::vector<CheckOutcome> out;
        for (const auto& inst : task.spec->instances(grid)) {
          out.push_back(check_instance(*task.spec, task.p, inst, &cache));
        }
        return out;
      });
  std::vector<CheckOutcome> all;
  for (auto& chunk : chunks) {
    all.insert(all.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  sort_outcomes(all);
  return all;
}

}  // namespace trinlab
