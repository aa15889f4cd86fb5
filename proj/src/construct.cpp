#include "lfree/construct.hpp"

#include <cmath>

#include "lfree/error.hpp"
#include "lfree/rng.hpp"

namespace lfree {

DeletionReport random_deletion(Value n, const Signature& sig, std::uint64_t seed, const DeletionOptions& options) {
  if (sig.r() < 2) throw InvalidInput("random_deletion needs r >= 2");
  if (n < 2) throw InvalidInput("random_deletion needs n >= 2");
  const Ambient amb = Ambient::interval(n);
  const GroundSet b = behrend_set(n);
  const double logn = std::log(static_cast<double>(n));
  const double omega = 1.0 - std::log(static_cast<double>(b.size())) / logn;
  const double expo = (static_cast<double>(sig.r() - sig.sum()) - omega) / static_cast<double>(sig.product() - 1);
  const double p = 0.5 * std::pow(static_cast<double>(n), expo);
  const double goal = static_cast<double>(b.size()) * p / 4.0;

  DeletionReport rep{n, sig, seed, seed, b.size(), omega, p, GroundSet(amb), GroundSet(amb), GroundSet(amb), {}};
  const int attempts = std::max(1, options.max_attempts);
  for (int k = 0; k < attempts; ++k) {
    const std::uint64_t s = k == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(k));
    Rng rng(s);
    std::vector<Value> sampled;
    for (Value v : b.values())
      if (rng.bernoulli(p)) sampled.push_back(v);
    GroundSet sset = GroundSet::from_values(amb, sampled);
    auto maxima = obstruction_maxima(sset, sig, options.detect);
    GroundSet bad = GroundSet::from_values(amb, maxima);
    Bitset keep = sset.membership();
    keep.subtract(bad.membership());
    GroundSet result = GroundSet::from_indices(amb, keep);
    if (contains_sumset(result, sig)) throw StructuralError("deletion left an obstruction behind");
    rep.attempts.push_back({s, sset.size(), bad.size(), result.size()});
    rep.seed_used = s;
    rep.sampled = std::move(sset);
    rep.bad = std::move(bad);
    rep.result = std::move(result);
    if (static_cast<double>(rep.result.size()) > goal) break;
  }
  return rep;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t m) {
  unsigned __int128 r = 1, x = static_cast<unsigned __int128>(b % m);
  while (e > 0) {
    if (e & 1) r = r * x % static_cast<unsigned __int128>(m);
    x = x * x % static_cast<unsigned __int128>(m);
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t primitive_root(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("primitive_root needs an odd prime, got " + std::to_string(p));
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw StructuralError("no primitive root found");
}

GroundSet zp3_construction(std::int64_t p) {
  if (p < 5 || !is_prime(p)) throw InvalidInput("zp3_construction needs a prime p >= 5, got " + std::to_string(p));
  const std::int64_t g = primitive_root(p);
  std::vector<std::int64_t> pw(static_cast<std::size_t>(p - 1));
  pw[0] = 1;
  for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * g % p;
  const Ambient amb = Ambient::product({p - 1, p - 1, p - 1});
  std::vector<Element> els;
  for (std::int64_t a = 1; a <= p - 2; ++a)
    for (std::int64_t b = 1; b <= p - 2; ++b)
      for (std::int64_t c = 1; c <= p - 2; ++c)
        if ((pw[static_cast<std::size_t>(a)] + pw[static_cast<std::size_t>(b)] + pw[static_cast<std::size_t>(c)]) % p == 1)
          els.push_back(Element{a, b, c});
  return GroundSet(amb, els);
}

Value mixed_radix_value(const Element& x, const std::vector<Value>& moduli) {
  if (x.arity() != moduli.size()) throw StructuralError("element arity does not match the moduli");
  Value v = 0, place = 1;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    v += x[j] * place;
    place *= 2 * moduli[j];
  }
  return v;
}

GroundSet mixed_radix_embed(const GroundSet& a) {
  if (!a.ambient().is_product()) throw InvalidInput("mixed_radix_embed needs a product ambient");
  const auto& mod = a.ambient().moduli();
  Value bound = 1;
  for (std::size_t j = 0; j < mod.size(); ++j) bound *= (j == 0 ? 1 : 2) * mod[j];
  std::vector<Value> out;
  out.reserve(a.size());
  for (const auto& e : a.elements()) out.push_back(mixed_radix_value(e, mod));
  return GroundSet::from_values(Ambient::interval(bound, 0), out);
}

std::int64_t l222_prime(Value n) {
  std::int64_t best = 0;
  for (std::int64_t p = 5; 4 * (p - 1) * (p - 1) * (p - 1) <= n; ++p)
    if (is_prime(p)) best = p;
  if (best == 0) throw InvalidInput("integer_l222_construction needs n >= 256, got " + std::to_string(n));
  return best;
}

GroundSet integer_l222_construction(Value n) {
  const auto p = l222_prime(n);
  const auto emb = mixed_radix_embed(zp3_construction(p));
  return GroundSet::from_values(Ambient::interval(n, 0), emb.values());
}

}  // namespace lfree
