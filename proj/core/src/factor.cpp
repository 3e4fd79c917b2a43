#include "mjsing/factor.hpp"

#include <algorithm>
#include <random>

#include "mjsing/error.hpp"

namespace mjsing {
namespace {

// Polynomials over Z or Z/m, low degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

// A zero modulus means plain integer arithmetic.
Integer mod(const Integer& v, const Integer& m) {
  if (sgn(m) == 0) return v;
  Integer r = v % m;
  if (r < 0) r += m;
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return reduce(std::move(r), m);
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return reduce(std::move(r), m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

ZPoly scale(const ZPoly& a, const Integer& s, const Integer& m) {
  ZPoly r = a;
  for (auto& c : r) c *= s;
  return reduce(std::move(r), m);
}

Integer inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error("non-invertible residue");
  return r;
}

// Division by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> divmod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = reduce(a, m);
  if (deg(r) < deg(b)) return {{}, r};
  Integer inv = inverse(b.back(), m);
  ZPoly q(deg(r) - deg(b) + 1);
  for (int i = deg(r); i >= deg(b); --i) {
    Integer c = mod(r[i] * inv, m);
    if (sgn(c) == 0) continue;
    q[i - deg(b)] = c;
    for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] = mod(r[i - deg(b) + j] - c * b[j], m);
  }
  trim(q);
  trim(r);
  return {q, r};
}

ZPoly rem(const ZPoly& a, const ZPoly& b, const Integer& m) { return divmod(a, b, m).second; }

ZPoly make_monic(const ZPoly& a, const Integer& p) {
  if (a.empty()) return a;
  return scale(a, inverse(a.back(), p), p);
}

ZPoly gcd_mod(ZPoly a, ZPoly b, const Integer& p) {
  while (!b.empty()) {
    ZPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

ZPoly derivative(const ZPoly& a, const Integer& m) {
  if (a.size() <= 1) return {};
  ZPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  return reduce(std::move(d), m);
}

ZPoly powmod(ZPoly base, Integer e, const ZPoly& f, const Integer& p) {
  ZPoly result{Integer(1)};
  base = rem(base, f, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

// Extended Euclid mod p: s*a + t*b = 1 for coprime a, b.
void bezout_mod(const ZPoly& a, const ZPoly& b, const Integer& p, ZPoly& s, ZPoly& t) {
  ZPoly r0 = reduce(a, p), r1 = reduce(b, p);
  ZPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ZPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw Error("hensel: factors not coprime");
  Integer inv = inverse(r0[0], p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
}

// Factorization of a monic square-free polynomial mod an odd prime.
std::vector<ZPoly> factor_mod_p(const ZPoly& monic_f, const Integer& p, std::mt19937_64& rng) {
  std::vector<std::pair<ZPoly, int>> ddf;
  ZPoly f = monic_f;
  ZPoly x{Integer(0), Integer(1)};
  ZPoly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, p, f, p);
    ZPoly g = gcd_mod(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      ddf.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) ddf.emplace_back(f, deg(f));

  std::vector<ZPoly> out;
  for (auto& [g, d] : ddf) {
    std::vector<ZPoly> pending{g};
    while (!pending.empty()) {
      ZPoly cur = std::move(pending.back());
      pending.pop_back();
      if (deg(cur) == d) {
        out.push_back(make_monic(cur, p));
        continue;
      }
      Integer e;
      mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      for (;;) {
        ZPoly a(deg(cur));
        for (auto& c : a) c = Integer(static_cast<unsigned long>(rng() % p.get_ui()));
        trim(a);
        if (deg(a) < 1) continue;
        ZPoly b = sub(powmod(a, e, cur, p), ZPoly{Integer(1)}, p);
        ZPoly s = gcd_mod(cur, b, p);
        if (deg(s) > 0 && deg(s) < deg(cur)) {
          pending.push_back(divmod(cur, s, p).first);
          pending.push_back(s);
          break;
        }
      }
    }
  }
  return out;
}

// Lifts f = a*b (mod p), a monic, to f = a*b (mod p^k) for modulus pk.
void hensel_two(const ZPoly& f, ZPoly& a, ZPoly& b, const Integer& p, const Integer& pk) {
  ZPoly s, t;
  bezout_mod(a, b, p, s, t);
  Integer q = p;
  while (q < pk) {
    ZPoly e = sub(f, mul(a, b, 0), 0);
    for (auto& c : e) c /= q;  // exact: f = a*b mod q
    e = reduce(e, p);
    auto [quo, tau] = divmod(mul(t, e, p), a, p);
    ZPoly sigma = add(mul(s, e, p), mul(quo, b, p), p);
    Integer nq = q * p;
    a = reduce(add(a, scale(tau, q, nq), nq), nq);
    b = reduce(add(b, scale(sigma, q, nq), nq), nq);
    q = nq;
  }
}

// Lifts f = lc * prod factors (mod p) to modulus pk; factors stay monic.
void hensel_multi(const ZPoly& f, std::vector<ZPoly>& factors, std::size_t lo, std::size_t hi,
                  const Integer& p, const Integer& pk) {
  if (hi - lo == 1) {
    factors[lo] = make_monic(reduce(f, pk), pk);
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  ZPoly a{Integer(1)}, b{Integer(1)};
  for (std::size_t i = lo; i < mid; ++i) a = mul(a, factors[i], p);
  for (std::size_t i = mid; i < hi; ++i) b = mul(b, factors[i], p);
  b = scale(b, f.back(), p);
  hensel_two(f, a, b, p, pk);
  hensel_multi(a, factors, lo, mid, p, pk);
  hensel_multi(b, factors, mid, hi, p, pk);
}

// Exact division over Z; returns false if b does not divide a.
bool divides_exactly(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  ZPoly r = a;
  if (deg(r) < deg(b)) return false;
  ZPoly q(deg(r) - deg(b) + 1);
  for (int i = deg(r); i >= deg(b); --i) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r[i] / b.back();
    q[i - deg(b)] = c;
    for (int j = 0; j <= deg(b); ++j) r[i - deg(b) + j] -= c * b[j];
  }
  trim(r);
  if (!r.empty()) return false;
  trim(q);
  quotient = std::move(q);
  return true;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a)
    if (c > half) c -= m;
  trim(a);
  return a;
}

bool next_prime_candidate(Integer& p) {
  do {
    p += 2;
  } while (mpz_probab_prime_p(p.get_mpz_t(), 25) == 0);
  return true;
}

// Irreducible factors of a primitive square-free integer polynomial.
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
  if (deg(f) <= 1) return {f};
  const int n = deg(f);

  std::mt19937_64 rng(0x6d6a73696e67ULL);
  Integer p = 3;
  std::vector<ZPoly> best;
  Integer best_p = 0;
  int good_primes = 0;
  for (int tries = 0; tries < 200 && good_primes < 5; ++tries, next_prime_candidate(p)) {
    if (mpz_divisible_p(f.back().get_mpz_t(), p.get_mpz_t())) continue;
    ZPoly fp = make_monic(reduce(f, p), p);
    if (deg(gcd_mod(fp, derivative(fp, p), p)) > 0) continue;
    auto local = factor_mod_p(fp, p, rng);
    ++good_primes;
    if (best.empty() || local.size() < best.size()) {
      best = std::move(local);
      best_p = p;
    }
    if (best.size() == 1) return {f};
  }
  if (best.empty()) throw Error("factor: no suitable prime");
  p = best_p;

  // Mignotte-style bound on coefficients of any factor, times lc.
  Integer norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = (Integer(1) << n) * norm * abs(f.back());
  Integer pk = p;
  while (pk <= 2 * bound) pk *= p;

  std::vector<ZPoly> lifted = best;
  hensel_multi(f, lifted, 0, lifted.size(), p, pk);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<int> pick(pool.size(), 0);
    std::fill(pick.end() - static_cast<long>(s), pick.end(), 1);
    do {
      ZPoly cand{abs(rest.back())};
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pick[i]) cand = mul(cand, pool[i], pk);
      cand = primitive_part(symmetric(cand, pk));
      ZPoly q;
      if (divides_exactly(rest, cand, q)) {
        result.push_back(cand);
        rest = primitive_part(q);
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (!pick[i]) keep.push_back(pool[i]);
        pool = std::move(keep);
        found = true;
        break;
      }
    } while (std::next_permutation(pick.begin(), pick.end()));
    if (!found) ++s;
  }
  if (deg(rest) > 0) result.push_back(rest);
  return result;
}

UPoly to_monic_upoly(const ZPoly& z) {
  std::vector<Rational> v;
  for (auto& c : z) v.emplace_back(c);
  return UPoly(std::move(v)).monic();
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
  const auto& ca = a.poly.coeffs();
  const auto& cb = b.poly.coeffs();
  for (int i = a.poly.degree(); i >= 0; --i)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

}  // namespace

std::vector<Factor> univariate_factor(const UPoly& p) {
  if (p.is_zero()) throw Error("zero input");
  std::vector<Factor> out;
  if (p.degree() == 0) return out;
  for (auto& [s, mult] : squarefree_decomposition(p)) {
    auto zi = s.integer_coeffs();
    for (auto& g : factor_squarefree(ZPoly(zi.begin(), zi.end())))
      out.push_back({to_monic_upoly(g), mult});
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

bool is_irreducible(const UPoly& p) {
  if (p.is_zero() || p.degree() < 1) return false;
  auto f = univariate_factor(p);
  return f.size() == 1 && f[0].multiplicity == 1;
}

}  // namespace mjsing
