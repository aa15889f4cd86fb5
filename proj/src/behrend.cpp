#include <algorithm>
#include <functional>

#include "lfree/bitset.hpp"
#include "lfree/construct.hpp"
#include "lfree/error.hpp"

namespace lfree {

namespace {

// Visits v in [0, n) whose base-b digits are all < d, with the digit norm sum(a_i^2).
void for_each_digit_bounded(Value n, Value d, Value b, const std::function<void(Value, Value)>& f) {
  int k = 1;
  Value top = 1;
  while (top <= (n - 1) / b) {
    top *= b;
    ++k;
  }
  std::function<void(int, Value, Value, Value)> rec = [&](int pos, Value place, Value prefix, Value norm) {
    if (pos < 0) {
      f(prefix, norm);
      return;
    }
    for (Value a = 0; a < d; ++a) {
      Value v = prefix + a * place;
      if (v > n - 1) break;
      rec(pos - 1, place / b, v, norm + a * a);
    }
  };
  rec(k - 1, top, 0, 0);
}

bool verify_ap3_free(const std::vector<Value>& v) {
  if (v.empty()) return true;
  Bitset member(static_cast<std::size_t>(v.back() + 1));
  for (Value x : v) member.set(static_cast<std::size_t>(x));
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      Value z = 2 * v[j] - v[i];
      if (z <= v.back() && member.test(static_cast<std::size_t>(z))) return false;
    }
  return true;
}

}  // namespace

std::vector<Value> behrend_values(Value n) {
  if (n < 1) throw InvalidInput("behrend_set needs n >= 1");
  std::vector<Value> best;
  for_each_digit_bounded(n, 2, 3, [&](Value v, Value) { best.push_back(v); });
  for (Value d = 3; (d - 1) * (d - 1) <= n; ++d) {
    const Value b = 2 * d - 1;
    std::vector<std::size_t> shell;
    for_each_digit_bounded(n, d, b, [&](Value, Value norm) {
      if (shell.size() <= static_cast<std::size_t>(norm)) shell.resize(static_cast<std::size_t>(norm) + 1, 0);
      ++shell[static_cast<std::size_t>(norm)];
    });
    auto it = std::max_element(shell.begin(), shell.end());
    if (it == shell.end() || *it <= best.size()) continue;
    const Value target = static_cast<Value>(it - shell.begin());
    best.clear();
    for_each_digit_bounded(n, d, b, [&](Value v, Value norm) {
      if (norm == target) best.push_back(v);
    });
  }
  std::sort(best.begin(), best.end());
  if (!verify_ap3_free(best)) throw StructuralError("Behrend candidate contains a 3-term progression");
  return best;
}

GroundSet behrend_set(Value n) {
  auto v = behrend_values(n);
  for (auto& x : v) ++x;
  return GroundSet::from_values(Ambient::interval(n), v);
}

}  // namespace lfree
