#pragma once

// Exact identity and divisibility suite. Every case is decided over exact
// integers or rationals; identities stated with denominators are either
// multiplied through by the common denominator or compared as reduced
// rationals. No tolerances anywhere.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trinlab/sequences.hpp"
#include "trinlab/sweep.hpp"

namespace trinlab {

struct IdentityCase {
  std::string id;
  Instance instance;
  Rat lhs, rhs;
  bool pass = false;
  Int modulus = 0;  // 0 for exact equality; the divisor for divisibility cases
};

namespace detail {

inline IdentityCase make_case(std::string id, Instance inst, Rat lhs, Rat rhs) {
  IdentityCase c;
  c.id = std::move(id);
  c.instance = std::move(inst);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.lhs.canonicalize();
  c.rhs.canonicalize();
  c.pass = c.lhs == c.rhs;
  return c;
}

inline std::vector<Int> power_table(const Int& base, std::size_t count) {
  std::vector<Int> p(count);
  if (count == 0) return p;
  p[0] = 1;
  for (std::size_t i = 1; i < count; ++i) p[i] = p[i - 1] * base;
  return p;
}

}  // namespace detail

/// (1/n) sum_{k<n} (2k+1) T_k(2m+1, m^2+m)  =  sum_{k<n} C(n,k+1) C(n+k,k) m^k.
inline IdentityCase id_1_15(i64 n, i64 m) {
  if (n < 1) throw std::domain_error("id_1_15: n must be positive");
  SeqParams sp{Int(2 * m + 1), Int(m) * m + m};
  auto t = trinomial_list(sp, static_cast<std::size_t>(n));
  Int lhs = 0;
  for (i64 k = 0; k < n; ++k) lhs += (2 * k + 1) * t[static_cast<std::size_t>(k)];
  Int rhs = 0;
  Int mp = 1;
  for (i64 k = 0; k < n; ++k) {
    rhs += binomial(n, k + 1) * binomial(n + k, k) * mp;
    mp *= m;
  }
  return detail::make_case("id_1_15", {{"n", n}, {"m", m}}, Rat(lhs) / n, Rat(rhs));
}

/// b sum_{k<n} (2k+1) T_k^2 (-d)^(n-1-k)  =  n T_n T_{n-1}.
inline IdentityCase id_1_19(i64 n, const SeqParams& sp) {
  if (n < 1) throw std::domain_error("id_1_19: n must be positive");
  auto t = trinomial_list(sp, static_cast<std::size_t>(n) + 1);
  auto w = detail::power_table(-sp.d(), static_cast<std::size_t>(n));
  Int lhs = 0;
  for (i64 k = 0; k < n; ++k) {
    lhs += (2 * k + 1) * t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(k)] *
           w[static_cast<std::size_t>(n - 1 - k)];
  }
  lhs *= sp.b;
  Int rhs = n * t[static_cast<std::size_t>(n)] * t[static_cast<std::size_t>(n - 1)];
  return detail::make_case("id_1_19", {{"n", n}, {"b", sp.b.get_si()}, {"c", sp.c.get_si()}},
                           Rat(lhs), Rat(rhs));
}

/// (1/n^2) sum_{k<n} (2k+1) T_k^2 d^(n-1-k)  =  sum_{k<n} C(n-1,k) C(n+k,k) Cat_k c^k d^(n-1-k).
inline IdentityCase id_1_20(i64 n, const SeqParams& sp) {
  if (n < 1) throw std::domain_error("id_1_20: n must be positive");
  auto t = trinomial_list(sp, static_cast<std::size_t>(n));
  auto w = detail::power_table(sp.d(), static_cast<std::size_t>(n));
  Int lhs = 0;
  for (i64 k = 0; k < n; ++k) {
    lhs += (2 * k + 1) * t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(k)] *
           w[static_cast<std::size_t>(n - 1 - k)];
  }
  Int rhs = 0;
  Int coeff = 1;  // C(n-1,k) C(n+k,k) Cat_k
  Int cp = 1;
  for (i64 k = 0; k < n; ++k) {
    if (k > 0) {
      coeff *= 2 * (2 * k - 1) * (n - k) * (n + k);
      coeff = exact_div(coeff, Int(k * k * (k + 1)));
      cp *= sp.c;
    }
    rhs += coeff * cp * w[static_cast<std::size_t>(n - 1 - k)];
  }
  return detail::make_case("id_1_20", {{"n", n}, {"b", sp.b.get_si()}, {"c", sp.c.get_si()}},
                           Rat(lhs) / (Int(n) * n), Rat(rhs));
}

/// 2c sum_{k<n} T_k(b,c^2) (b-2c)^(n-1-k)  =  -n T_n(b,c^2) + (b+2c) n T_{n-1}(b,c^2).
inline IdentityCase id_3_1(i64 n, i64 b, i64 c) {
  if (n < 1) throw std::domain_error("id_3_1: n must be positive");
  SeqParams sp{Int(b), Int(c) * c};
  auto t = trinomial_list(sp, static_cast<std::size_t>(n) + 1);
  auto w = detail::power_table(Int(b - 2 * c), static_cast<std::size_t>(n));
  Int lhs = 0;
  for (i64 k = 0; k < n; ++k) lhs += t[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n - 1 - k)];
  lhs *= 2 * c;
  Int rhs = -n * t[static_cast<std::size_t>(n)] + (b + 2 * c) * n * t[static_cast<std::size_t>(n - 1)];
  return detail::make_case("id_3_1", {{"n", n}, {"b", b}, {"c", c}}, Rat(lhs), Rat(rhs));
}

/// (3/n) sum k T_k(b,c^2) (b-2c)^(n-1-k) - sum T_k(b,c^2) (b-2c)^(n-1-k)
///   =  ((b+4c) T_n(b,c^2) - (b+2c)^2 T_{n-1}(b,c^2)) / (4c^2), as exact rationals.
inline IdentityCase id_3_2(i64 n, i64 b, i64 c) {
  if (n < 1) throw std::domain_error("id_3_2: n must be positive");
  if (c == 0) throw std::domain_error("id_3_2: c must be nonzero");
  SeqParams sp{Int(b), Int(c) * c};
  auto t = trinomial_list(sp, static_cast<std::size_t>(n) + 1);
  auto w = detail::power_table(Int(b - 2 * c), static_cast<std::size_t>(n));
  Int skt = 0, st = 0;
  for (i64 k = 0; k < n; ++k) {
    const Int& term = t[static_cast<std::size_t>(k)];
    const Int& pw = w[static_cast<std::size_t>(n - 1 - k)];
    skt += k * term * pw;
    st += term * pw;
  }
  Rat lhs = Rat(3 * skt) / n - st;
  Rat rhs = Rat((b + 4 * c) * t[static_cast<std::size_t>(n)] -
                Int(b + 2 * c) * (b + 2 * c) * t[static_cast<std::size_t>(n - 1)]) /
            (4 * Int(c) * c);
  return detail::make_case("id_3_2", {{"n", n}, {"b", b}, {"c", c}}, lhs, rhs);
}

/// sum_{m<n} (2m+1)^2 C(m+k,2k)  =  (4n^2-1) ((n-k)/(2k+3)) C(n+k,2k).
inline IdentityCase id_3_3(i64 n, i64 k) {
  if (n < 1 || k < 0) throw std::domain_error("id_3_3: need n >= 1, k >= 0");
  Int lhs = 0;
  for (i64 m = 0; m < n; ++m) lhs += Int(2 * m + 1) * (2 * m + 1) * binomial(m + k, 2 * k);
  Rat rhs = Rat(Int(4) * n * n - 1) * (n - k) * binomial(n + k, 2 * k) / (2 * k + 3);
  return detail::make_case("id_3_3", {{"n", n}, {"k", k}}, Rat(lhs), rhs);
}

/// T_n(b,c)^2  =  sum_{k<=n} C(n+k,2k) C(2k,k)^2 c^k d^(n-k).
inline IdentityCase id_4_1(i64 n, const SeqParams& sp) {
  if (n < 0) throw std::domain_error("id_4_1: n must be nonnegative");
  Int tn = trinomial(n, sp);
  auto w = detail::power_table(sp.d(), static_cast<std::size_t>(n) + 1);
  Int rhs = 0;
  Int cp = 1;
  for (i64 k = 0; k <= n; ++k) {
    if (k > 0) cp *= sp.c;
    Int cb = central_binomial(k);
    rhs += binomial(n + k, 2 * k) * cb * cb * cp * w[static_cast<std::size_t>(n - k)];
  }
  return detail::make_case("id_4_1", {{"n", n}, {"b", sp.b.get_si()}, {"c", sp.c.get_si()}},
                           Rat(tn * tn), Rat(rhs));
}

/// sum_{k<=n} C(n+k,2k) C(2k,k)^2 x^k (x+1)^k  =  (sum_{k<=n} C(n,k) C(n+k,k) x^k)^2.
inline IdentityCase id_s2_thm31(i64 n, i64 x) {
  if (n < 0) throw std::domain_error("id_s2_thm31: n must be nonnegative");
  Int lhs = 0;
  Int xp = 1;
  Int base = Int(x) * (x + 1);
  for (i64 k = 0; k <= n; ++k) {
    if (k > 0) xp *= base;
    Int cb = central_binomial(k);
    lhs += binomial(n + k, 2 * k) * cb * cb * xp;
  }
  Int dn = delannoy(n, Int(x));
  return detail::make_case("id_s2_thm31", {{"n", n}, {"x", x}}, Rat(lhs), Rat(dn * dn));
}

/// sum_{m<n} (2m+1) C(m+k,2k)  =  (n(n-k)/(k+1)) C(n+k,2k).
inline IdentityCase id_4_2(i64 n, i64 k) {
  if (n < 1 || k < 0) throw std::domain_error("id_4_2: need n >= 1, k >= 0");
  Int lhs = 0;
  for (i64 m = 0; m < n; ++m) lhs += (2 * m + 1) * binomial(m + k, 2 * k);
  Rat rhs = Rat(Int(n) * (n - k)) * binomial(n + k, 2 * k) / (k + 1);
  return detail::make_case("id_4_2", {{"n", n}, {"k", k}}, Rat(lhs), rhs);
}

/// sum_{k<=m} (4k+1) C(2k,k)^2 16^(m-k)  =  (2m+1)^2 C(2m,m)^2.
inline IdentityCase id_tauraso(i64 m) {
  if (m < 0) throw std::domain_error("id_tauraso: m must be nonnegative");
  Int lhs = 0;
  auto w = detail::power_table(Int(16), static_cast<std::size_t>(m) + 1);
  for (i64 k = 0; k <= m; ++k) {
    Int cb = central_binomial(k);
    lhs += (4 * k + 1) * cb * cb * w[static_cast<std::size_t>(m - k)];
  }
  Int cm = central_binomial(m);
  Int rhs = Int(2 * m + 1) * (2 * m + 1) * cm * cm;
  return detail::make_case("id_tauraso", {{"m", m}}, Rat(lhs), Rat(rhs));
}

/// sum_{r<=2n} (-1)^r C(2n,r) / (2n+1-2r)^2  =  (-16)^n / ((2n+1)^2 C(2n,n)).
inline IdentityCase id_su2_25(i64 n) {
  if (n < 0) throw std::domain_error("id_su2_25: n must be nonnegative");
  Rat lhs = 0;
  for (i64 r = 0; r <= 2 * n; ++r) {
    Int den = Int(2 * n + 1 - 2 * r);
    Rat term = Rat(binomial(2 * n, r)) / (den * den);
    lhs += (r % 2 == 0) ? term : -term;
  }
  Int neg16 = pow_int(Int(-16), static_cast<unsigned long>(n));
  Rat rhs = Rat(neg16) / (Int(2 * n + 1) * (2 * n + 1) * central_binomial(n));
  return detail::make_case("id_su2_25", {{"n", n}}, lhs, rhs);
}

namespace detail {

inline Rat hyper_u(i64 n, i64 z) {
  Rat s = 0;
  Int zp = 1;
  for (i64 k = 0; k <= n; ++k) {
    if (k > 0) zp *= z;
    s += Rat(binomial(n + k, 2 * k) * zp) / (2 * k + 1);
  }
  return Rat(2 * n + 1) * s;
}

}  // namespace detail

/// u_n = (2n+1) sum C(n+k,2k) (-2)^k/(2k+1) and v_n likewise with (-3)^k are
/// integral with u_n = (-1)^(n(n-1)/2), v_n = ((2n+1)/3); moreover
/// u_n + u_{n+2} = 0 and v_n + v_{n+1} + v_{n+2} = 0. The reported pair is
/// the first failing claim (part 1..4), or the u-closed-form pair when all hold.
inline IdentityCase id_un_vn(i64 n) {
  if (n < 0) throw std::domain_error("id_un_vn: n must be nonnegative");
  Rat u = detail::hyper_u(n, -2), v = detail::hyper_u(n, -3);
  Rat u1 = detail::hyper_u(n + 1, -2), v1 = detail::hyper_u(n + 1, -3);
  Rat u2 = detail::hyper_u(n + 2, -2), v2 = detail::hyper_u(n + 2, -3);
  Rat u_expect = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  Rat v_expect = jacobi(2 * n + 1, 3);
  struct Claim {
    i64 part;
    Rat lhs, rhs;
  };
  const Claim claims[] = {{1, u, u_expect},
                          {2, v, v_expect},
                          {3, u + u2, Rat(0)},
                          {4, v + v1 + v2, Rat(0)}};
  for (const auto& cl : claims) {
    if (cl.lhs != cl.rhs) {
      return detail::make_case("id_un_vn", {{"n", n}, {"part", cl.part}}, cl.lhs, cl.rhs);
    }
  }
  return detail::make_case("id_un_vn", {{"n", n}, {"part", 1}}, u, u_expect);
}

/// (1/n) sum_{k<n} (2k+1) T_k 3^(n-1-k)  =  sum_{k<n} C(n-1,k) (-1)^(n-1-k) (k+1) C(2k,k).
inline IdentityCase id_remark_1_1(i64 n) {
  if (n < 1) throw std::domain_error("id_remark_1_1: n must be positive");
  SeqParams sp{1, 1};
  auto t = trinomial_list(sp, static_cast<std::size_t>(n));
  auto w = detail::power_table(Int(3), static_cast<std::size_t>(n));
  Int lhs = 0;
  for (i64 k = 0; k < n; ++k) {
    lhs += (2 * k + 1) * t[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n - 1 - k)];
  }
  Int rhs = 0;
  for (i64 k = 0; k < n; ++k) {
    Int term = binomial(n - 1, k) * (k + 1) * central_binomial(k);
    rhs += ((n - 1 - k) % 2 == 0) ? term : -term;
  }
  return detail::make_case("id_remark_1_1", {{"n", n}}, Rat(lhs) / n, Rat(rhs));
}

// ---------------------------------------------------------------------------
// Divisibility families.
// ---------------------------------------------------------------------------

/// Families: div-1.11  n  | sum T_k(b,c^2) (b-2c)^(n-1-k)
///           div-1.12  n  | 6 sum k T_k(b,c^2) (b-2c)^(n-1-k)
///           div-1.18  n  | sum (2k+1) T_k(b,c)^2 (-d)^(n-1-k)
///           div-1.20  n^2| sum (2k+1) T_k(b,c)^2 d^(n-1-k)
inline IdentityCase check_divisibility(const std::string& family, i64 n, const SeqParams& sp) {
  if (n < 1) throw std::domain_error("check_divisibility: n must be positive");
  Int sum = 0;
  Int modulus;
  if (family == "div-1.11" || family == "div-1.12") {
    SeqParams sq{sp.b, sp.c * sp.c};
    auto t = trinomial_list(sq, static_cast<std::size_t>(n));
    auto w = detail::power_table(sp.b - 2 * sp.c, static_cast<std::size_t>(n));
    for (i64 k = 0; k < n; ++k) {
      Int term = t[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n - 1 - k)];
      sum += (family == "div-1.12") ? Int(6 * k) * term : term;
    }
    modulus = n;
  } else if (family == "div-1.18" || family == "div-1.20") {
    auto t = trinomial_list(sp, static_cast<std::size_t>(n));
    Int base = (family == "div-1.18") ? Int(-sp.d()) : sp.d();
    auto w = detail::power_table(base, static_cast<std::size_t>(n));
    for (i64 k = 0; k < n; ++k) {
      sum += (2 * k + 1) * t[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(k)] *
             w[static_cast<std::size_t>(n - 1 - k)];
    }
    modulus = (family == "div-1.18") ? Int(n) : Int(n) * n;
  } else {
    throw std::invalid_argument("check_divisibility: unknown family " + family);
  }
  Int residue = sum % modulus;
  if (residue < 0) residue += modulus;
  auto c = detail::make_case(family, {{"n", n}, {"b", sp.b.get_si()}, {"c", sp.c.get_si()}},
                             Rat(residue), Rat(0));
  c.modulus = modulus;
  return c;
}

// ---------------------------------------------------------------------------
// Registry used by the verify runner.
// ---------------------------------------------------------------------------

struct IdentitySpec {
  std::string id;
  std::function<std::vector<Instance>(const Grid&)> instances;  // excludes n
  std::function<IdentityCase(i64 n, const Instance&)> eval;
};

inline std::vector<IdentitySpec> identity_registry() {
  std::vector<IdentitySpec> specs;
  auto singleton = [](const Grid&) { return std::vector<Instance>{{}}; };
  auto m_range = [](const Grid& g) { return grid_instances({"m"}, g); };
  auto bc_range = [](const Grid& g) { return grid_instances({"b", "c"}, g); };
  auto bc_nonzero_c = [](const Grid& g) {
    auto all = grid_instances({"b", "c"}, g);
    std::vector<Instance> out;
    for (auto& inst : all) {
      if (inst.at("c") != 0) out.push_back(std::move(inst));
    }
    return out;
  };
  auto x_range = [](const Grid& g) { return grid_instances({"x"}, g); };
  auto k_range = [](const Grid&) {
    std::vector<Instance> out;
    for (i64 k = 0; k <= 8; ++k) out.push_back({{"k", k}});
    return out;
  };
  auto sp_of = [](const Instance& inst) {
    return SeqParams{Int(inst.at("b")), Int(inst.at("c"))};
  };

  specs.push_back({"id_1_15", m_range,
                   [](i64 n, const Instance& i) { return id_1_15(n, i.at("m")); }});
  specs.push_back({"id_1_19", bc_range,
                   [sp_of](i64 n, const Instance& i) { return id_1_19(n, sp_of(i)); }});
  specs.push_back({"id_1_20", bc_range,
                   [sp_of](i64 n, const Instance& i) { return id_1_20(n, sp_of(i)); }});
  specs.push_back({"id_3_1", bc_range,
                   [](i64 n, const Instance& i) { return id_3_1(n, i.at("b"), i.at("c")); }});
  specs.push_back({"id_3_2", bc_nonzero_c,
                   [](i64 n, const Instance& i) { return id_3_2(n, i.at("b"), i.at("c")); }});
  specs.push_back({"id_3_3", k_range,
                   [](i64 n, const Instance& i) { return id_3_3(n, i.at("k")); }});
  specs.push_back({"id_4_1", bc_range,
                   [sp_of](i64 n, const Instance& i) { return id_4_1(n, sp_of(i)); }});
  specs.push_back({"id_4_2", k_range,
                   [](i64 n, const Instance& i) { return id_4_2(n, i.at("k")); }});
  specs.push_back({"id_s2_thm31", x_range,
                   [](i64 n, const Instance& i) { return id_s2_thm31(n, i.at("x")); }});
  specs.push_back({"id_tauraso", singleton,
                   [](i64 n, const Instance&) { return id_tauraso(n); }});
  specs.push_back({"id_su2_25", singleton,
                   [](i64 n, const Instance&) { return id_su2_25(n); }});
  specs.push_back({"id_un_vn", singleton,
                   [](i64 n, const Instance&) { return id_un_vn(n); }});
  specs.push_back({"id_remark_1_1", singleton,
                   [](i64 n, const Instance&) { return id_remark_1_1(n); }});

  auto div_points = [](const Grid&) {
    return std::vector<Instance>{{{"b", 1}, {"c", 1}},
                                 {{"b", 1}, {"c", -1}},
                                 {{"b", 3}, {"c", 2}},
                                 {{"b", 2}, {"c", 3}},
                                 {{"b", 5}, {"c", -3}}};
  };
  for (const char* fam : {"div-1.11", "div-1.12", "div-1.18", "div-1.20"}) {
    specs.push_back({fam, div_points, [fam, sp_of](i64 n, const Instance& i) {
                       return check_divisibility(fam, n, sp_of(i));
                     }});
  }
  return specs;
}

}  // namespace trinlab
