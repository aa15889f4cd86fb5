#include "lfree/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "engine.hpp"
#include "lfree/construct.hpp"
#include "lfree/error.hpp"
#include "lfree/rng.hpp"

namespace lfree {

SequencePrefix greedy_sequence(const Signature& sig, Value limit) {
  if (limit < 1) throw InvalidInput("greedy_sequence needs limit >= 1");
  SequencePrefix out{{}, sig, "greedy"};
  const Ambient amb = Ambient::interval(limit);
  detail::ShiftEngine eng(amb, sig);
  std::vector<std::size_t> set;
  for (Value c = 1; c <= limit; ++c) {
    const auto ci = static_cast<std::size_t>(c - 1);
    set.push_back(ci);
    std::vector<std::size_t> q{ci};
    bool hit = false;
    eng.run(set, &q, [&](const detail::RawDecomposition&) {
      hit = true;
      return false;
    });
    if (hit) set.pop_back();
    else out.terms.push_back(c);
  }
  return out;
}

double dyadic_alpha(const Signature& sig, double epsilon) {
  if (sig.r() < 2) throw InvalidInput("dyadic construction needs r >= 2");
  return static_cast<double>(sig.sum() - sig.r()) / static_cast<double>(sig.product() - 1) + epsilon / 2;
}

namespace {

Value pow4(int m) { return Value{1} << (2 * m); }

bool proven_signature(const Signature& sig) {
  const auto& l = sig.lengths();
  if (l.size() == 2 && l[0] == 2) return true;
  return std::all_of(l.begin(), l.end(), [](int x) { return x == 2; });
}

}  // namespace

DyadicResult dyadic_random_sequence(const Signature& sig, const DyadicParams& params, const DetectOptions& options) {
  if (!(params.epsilon > 0)) throw InvalidInput("epsilon must be > 0");
  if (params.m_min < 1 || params.m_max < params.m_min || params.m_max > 12)
    throw InvalidInput("need 1 <= m_min <= m_max <= 12");
  const double alpha = dyadic_alpha(sig, params.epsilon);
  std::ostringstream prov;
  prov << "dyadic(eps=" << params.epsilon << ",m_min=" << params.m_min << ",m_max=" << params.m_max
       << ",seed=" << params.seed << ")";
  DyadicResult res{SequencePrefix{{}, sig, prov.str()}, params, alpha, !proven_signature(sig), 0, {}};

  std::vector<Value> sampled;
  for (int m = params.m_min; m <= params.m_max; ++m) {
    DyadicBlock blk;
    blk.m = m;
    blk.lo = pow4(m + 2);
    const auto b = behrend_values(pow4(m));
    blk.behrend = b.size();
    blk.dense = static_cast<double>(b.size()) >= std::pow(4.0, m * (1 - params.epsilon / 2));
    Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(m)));
    for (Value v : b) {
      const Value nu = blk.lo + v;
      const double f = std::pow(static_cast<double>(nu), -alpha);
      blk.expected += f;
      if (rng.bernoulli(f)) {
        sampled.push_back(nu);
        ++blk.sampled;
      }
    }
    res.blocks.push_back(blk);
  }

  const Value top = pow4(params.m_max + 2) + pow4(params.m_max);
  const Ambient amb = Ambient::interval(top);
  const GroundSet s = GroundSet::from_values(amb, sampled);
  const auto summary = summarize_obstructions(s, sig, options);
  res.decompositions = summary.decompositions;
  std::vector<Value> kept;
  for (Value v : sampled) {
    auto it = summary.distinct_by_max.find(v);
    auto& blk = *std::find_if(res.blocks.begin(), res.blocks.end(),
                              [&](const DyadicBlock& b) { return v >= b.lo && v < b.lo + pow4(b.m); });
    if (it != summary.distinct_by_max.end()) {
      blk.obstructions += it->second;
      ++blk.bad;
    } else {
      ++blk.retained;
      kept.push_back(v);
    }
  }
  if (contains_sumset(GroundSet::from_values(amb, kept), sig))
    throw StructuralError("dyadic deletion left an obstruction behind");
  res.sequence.terms = std::move(kept);
  return res;
}

std::size_t counting_function(const SequencePrefix& a, Value x) {
  return static_cast<std::size_t>(std::upper_bound(a.terms.begin(), a.terms.end(), x) - a.terms.begin());
}

std::vector<double> liminf_statistic(const SequencePrefix& a, const std::vector<Value>& xs) {
  if (a.signature.r() < 2) throw InvalidInput("liminf statistic needs r >= 2");
  const double pi = static_cast<double>(a.signature.prefix_product());
  std::vector<double> out;
  out.reserve(xs.size());
  for (Value x : xs) {
    if (x <= 1) throw InvalidInput("liminf statistic needs x > 1, got " + std::to_string(x));
    const double xd = static_cast<double>(x);
    out.push_back(static_cast<double>(counting_function(a, x)) * std::pow(xd * std::log(xd), 1.0 / pi) / xd);
  }
  return out;
}

}  // namespace lfree
