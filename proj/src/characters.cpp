#include "selberg/characters.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace selberg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct LocalGroup {
  std::int64_t pk = 1;       // prime power p^k
  std::int64_t p = 1;
  int k = 0;
  // cyclic components: orders and generators (1 or 2 of them; p=2, k>=3 has two)
  std::vector<std::int64_t> gen, ord;
};

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<__int128>(r) * b % m;
    b = static_cast<__int128>(b) * b % m;
    e >>= 1;
  }
  return r;
}

std::int64_t primitive_root(std::int64_t p, std::int64_t pk) {
  // primitive root mod p^k for odd p; try small g, testing mod p then lifting
  std::int64_t phi_p = p - 1;
  std::vector<std::int64_t> qs;
  std::int64_t m = phi_p;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) { qs.push_back(d); while (m % d == 0) m /= d; }
  if (m > 1) qs.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto qd : qs)
      if (pow_mod(g, phi_p / qd, p) == 1) { ok = false; break; }
    if (!ok) continue;
    if (pk == p) return g;
    // g primitive mod p^2 stays primitive mod every p^k; otherwise g+p is
    return pow_mod(g, phi_p, p * p) != 1 ? g : g + p;
  }
  throw std::logic_error("no primitive root found");
}

LocalGroup local_group(std::int64_t p, int k) {
  LocalGroup lg;
  lg.p = p; lg.k = k;
  lg.pk = 1;
  for (int i = 0; i < k; ++i) lg.pk *= p;
  if (p == 2) {
    if (k == 1) return lg;  // trivial group
    if (k == 2) { lg.gen = {3}; lg.ord = {2}; return lg; }
    lg.gen = {lg.pk - 1, 5};       // -1 and 5
    lg.ord = {2, lg.pk / 4};
    return lg;
  }
  lg.gen = {primitive_root(p, lg.pk)};
  lg.ord = {lg.pk / p * (p - 1)};
  return lg;
}

// discrete log of n in the cyclic component generated by g of order m mod pk
std::int64_t dlog(std::int64_t n, std::int64_t g, std::int64_t m, std::int64_t pk) {
  // baby-step giant-step would be overkill at the q sizes used here
  std::int64_t cur = 1;
  for (std::int64_t x = 0; x < m; ++x) {
    if (cur == n) return x;
    cur = static_cast<__int128>(cur) * g % pk;
  }
  return -1;
}

}  // namespace

std::vector<DirichletCharacter> character_group(int q) {
  if (q < 1) throw std::invalid_argument("modulus must be >= 1");

  // factor q
  std::vector<LocalGroup> locals;
  {
    std::int64_t m = q;
    for (std::int64_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        int k = 0;
        while (m % p == 0) { m /= p; ++k; }
        locals.push_back(local_group(p, k));
      }
    }
    if (m > 1) locals.push_back(local_group(m, 1));
  }

  // component structure flattened: orders of all cyclic parts
  std::vector<std::int64_t> comp_ord, comp_gen, comp_pk;
  std::vector<std::size_t> comp_local;
  for (std::size_t li = 0; li < locals.size(); ++li)
    for (std::size_t c = 0; c < locals[li].gen.size(); ++c) {
      comp_ord.push_back(locals[li].ord[c]);
      comp_gen.push_back(locals[li].gen[c]);
      comp_pk.push_back(locals[li].pk);
      comp_local.push_back(li);
    }

  std::int64_t phi = 1;
  for (auto o : comp_ord) phi *= o;

  // discrete logs of every residue coprime to q, per component (via CRT)
  std::vector<std::vector<std::int64_t>> logs(static_cast<std::size_t>(q));
  for (std::int64_t n = 0; n < q; ++n) {
    if (std::gcd(n, static_cast<std::int64_t>(q)) != 1) continue;
    std::vector<std::int64_t> lv;
    bool ok = true;
    for (std::size_t c = 0; c < comp_ord.size(); ++c) {
      std::int64_t pk = comp_pk[c], np = n % pk;
      const LocalGroup& lg = locals[comp_local[c]];
      if (lg.p == 2 && lg.k >= 3) {
        // order component of the pair {-1, 5}: write np = (-1)^e 5^x
        if (comp_gen[c] == pk - 1) {
          // e from whether np or -np lies in <5>
          std::int64_t x = dlog(np, 5, pk / 4, pk);
          lv.push_back(x >= 0 ? 0 : 1);
        } else {
          std::int64_t x = dlog(np, 5, pk / 4, pk);
          if (x < 0) x = dlog(pk - np, 5, pk / 4, pk);
          if (x < 0) { ok = false; break; }
          lv.push_back(x);
        }
      } else {
        std::int64_t x = dlog(np, comp_gen[c], comp_ord[c], pk);
        if (x < 0) { ok = false; break; }
        lv.push_back(x);
      }
    }
    if (ok) logs[static_cast<std::size_t>(n)] = std::move(lv);
  }

  // enumerate characters: exponent vector a_c in prod Z/ord_c, mixed radix,
  // least-significant component first; index 0 = principal
  std::vector<DirichletCharacter> chars;
  chars.reserve(static_cast<std::size_t>(phi));
  for (std::int64_t idx = 0; idx < phi; ++idx) {
    std::vector<std::int64_t> a(comp_ord.size());
    std::int64_t rem = idx;
    for (std::size_t c = 0; c < comp_ord.size(); ++c) {
      a[c] = rem % comp_ord[c];
      rem /= comp_ord[c];
    }

    DirichletCharacter chi;
    chi.q_ = q;
    chi.index_ = static_cast<int>(idx);

    // order = lcm over components of ord_c / gcd(a_c, ord_c)
    std::int64_t order = 1;
    for (std::size_t c = 0; c < comp_ord.size(); ++c) {
      std::int64_t oc = comp_ord[c] / std::gcd(a[c], comp_ord[c]);
      order = std::lcm(order, oc);
    }
    chi.order_ = static_cast<int>(order);

    // conductor: product of local conductors
    std::int64_t cond = 1;
    for (std::size_t li = 0; li < locals.size(); ++li) {
      const LocalGroup& lg = locals[li];
      // collect this local's exponents
      std::vector<std::int64_t> la, lo;
      for (std::size_t c = 0; c < comp_ord.size(); ++c)
        if (comp_local[c] == li) { la.push_back(a[c]); lo.push_back(comp_ord[c]); }
      if (lg.p != 2) {
        if (la.empty() || la[0] == 0) continue;  // trivial locally
        // kills 1 + p^c Z iff p^{k-c} | a
        std::int64_t v = 0, aa = la[0];
        while (aa % lg.p == 0 && v < lg.k) { aa /= lg.p; ++v; }
        cond *= static_cast<std::int64_t>(std::pow(static_cast<double>(lg.p), static_cast<double>(lg.k - v)) + 0.5);
      } else {
        if (lg.k == 1 || la.empty()) continue;
        if (lg.k == 2) {
          if (la[0] != 0) cond *= 4;
          continue;
        }
        std::int64_t e = la[0], x = la[1];  // components for {-1, 5}
        if (x == 0) {
          if (e != 0) cond *= 4;
          continue;
        }
        std::int64_t v = 0, xx = x, m5 = lg.pk / 4;
        while (xx % 2 == 0 && (m5 >> v) > 1) { xx /= 2; ++v; }
        // chi(5) has order m5 / gcd(x, m5) = 2^{k-2-v}; conductor 2^{k-v}
        std::int64_t c2 = 1;
        for (std::int64_t i = 0; i < lg.k - v; ++i) c2 *= 2;
        cond *= c2;
      }
    }
    chi.conductor_ = static_cast<int>(cond);

    chi.turns_.assign(static_cast<std::size_t>(q), -1);
    chi.values_.assign(static_cast<std::size_t>(q), Complex{0.0, 0.0});
    for (std::int64_t n = 0; n < q; ++n) {
      const auto& lv = logs[static_cast<std::size_t>(n)];
      if (lv.empty() && !(q == 1 && n == 0)) {
        if (std::gcd(n, static_cast<std::int64_t>(q)) != 1) continue;
      }
      // turn fraction: sum a_c * x_c / ord_c  (mod 1), reduced to k/order
      std::int64_t num = 0;  // numerator over common denominator 'phi_all'
      std::int64_t den = 1;
      for (std::size_t c = 0; c < comp_ord.size(); ++c) {
        std::int64_t contrib_num = a[c] * lv[c] % comp_ord[c];
        // accumulate num/den + contrib/ord_c
        num = num * comp_ord[c] + contrib_num * den;
        den *= comp_ord[c];
        std::int64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
      }
      num %= den; if (num < 0) num += den;
      // rescale to denominator 'order' (den divides order by construction)
      std::int64_t k = num * (order / den) % order;
      chi.turns_[static_cast<std::size_t>(n)] = k;
      double ang = kTwoPi * static_cast<double>(k) / static_cast<double>(order);
      chi.values_[static_cast<std::size_t>(n)] = Complex{std::cos(ang), std::sin(ang)};
    }
    if (q == 1) { chi.turns_ = {0}; chi.values_ = {Complex{1.0, 0.0}}; }
    chars.push_back(std::move(chi));
  }
  return chars;
}

DirichletCharacter character(int q, int index) {
  auto g = character_group(q);
  if (index < 0 || index >= static_cast<int>(g.size()))
    throw std::out_of_range("character index out of range");
  return g[static_cast<std::size_t>(index)];
}

DirichletCharacter DirichletCharacter::primitive_inducing() const {
  if (is_primitive()) return *this;
  for (auto& psi : character_group(conductor_)) {
    if (!psi.is_primitive() && conductor_ > 1) continue;
    bool match = true;
    for (std::int64_t n = 0; n < q_ && match; ++n) {
      if (!is_coprime(n)) continue;
      Complex d = psi(n) - (*this)(n);
      if (std::abs(d) > 1e-9) match = false;
    }
    if (match) return psi;
  }
  throw std::logic_error("no inducing primitive character found");
}

}  // namespace selberg
