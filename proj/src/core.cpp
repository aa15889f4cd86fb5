#include "lfree/core.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "lfree/error.hpp"

namespace lfree {

Signature Signature::normalize(std::vector<int> lengths) {
  if (lengths.empty()) throw InvalidInput("signature must have at least one summand length");
  for (int l : lengths)
    if (l < 2) throw InvalidInput("summand lengths must be >= 2, got " + std::to_string(l));
  std::sort(lengths.begin(), lengths.end());
  return Signature(std::move(lengths));
}

std::int64_t Signature::product() const {
  std::int64_t p = 1;
  for (int l : lengths_) p *= l;
  return p;
}

std::int64_t Signature::prefix_product() const {
  std::int64_t p = 1;
  for (std::size_t i = 0; i + 1 < lengths_.size(); ++i) p *= lengths_[i];
  return p;
}

std::int64_t Signature::sum() const { return std::accumulate(lengths_.begin(), lengths_.end(), std::int64_t{0}); }

Signature Signature::tail() const {
  if (lengths_.size() < 2) throw InvalidInput("tail of a one-summand signature");
  return Signature(std::vector<int>(lengths_.begin() + 1, lengths_.end()));
}

std::string Signature::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lengths_[i]);
  }
  return s;
}

std::string Element::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s;
}

namespace {

Value floor_mod(Value a, Value m) {
  Value r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Ambient Ambient::interval(Value n, Value lo) {
  if (n < 1) throw InvalidInput("interval length must be positive");
  Ambient a;
  a.kind_ = Kind::Interval;
  a.n_ = n;
  a.lo_ = lo;
  a.card_ = static_cast<std::size_t>(n);
  return a;
}

Ambient Ambient::product(std::vector<Value> moduli) {
  if (moduli.empty()) throw InvalidInput("product ambient needs at least one modulus");
  Ambient a;
  a.kind_ = Kind::Product;
  a.n_ = 0;
  a.lo_ = 0;
  std::size_t card = 1;
  for (Value m : moduli) {
    if (m < 1) throw InvalidInput("moduli must be >= 1");
    card *= static_cast<std::size_t>(m);
  }
  a.strides_.assign(moduli.size(), 1);
  for (std::size_t i = moduli.size(); i-- > 1;) a.strides_[i - 1] = a.strides_[i] * static_cast<std::size_t>(moduli[i]);
  a.moduli_ = std::move(moduli);
  a.card_ = card;
  return a;
}

void Ambient::check_arity(const Element& e) const {
  if (e.arity() != arity())
    throw StructuralError("element arity " + std::to_string(e.arity()) + " does not match ambient arity " +
                          std::to_string(arity()));
}

bool Ambient::contains(const Element& e) const {
  if (e.arity() != arity()) return false;
  if (is_interval()) return e.value() >= lo_ && e.value() < lo_ + n_;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (e[i] < 0 || e[i] >= moduli_[i]) return false;
  return true;
}

std::size_t Ambient::index_of(const Element& e) const {
  check_arity(e);
  if (!contains(e)) throw InvalidInput("element " + e.to_string() + " outside " + describe());
  if (is_interval()) return static_cast<std::size_t>(e.value() - lo_);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) idx += static_cast<std::size_t>(e[i]) * strides_[i];
  return idx;
}

Element Ambient::element_at(std::size_t index) const {
  if (is_interval()) return Element{lo_ + static_cast<Value>(index)};
  std::vector<Value> c(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    c[i] = static_cast<Value>(index / strides_[i]);
    index %= strides_[i];
  }
  return Element(std::move(c));
}

Element Ambient::zero() const {
  if (is_interval()) return Element{0};
  return Element(std::vector<Value>(moduli_.size(), 0));
}

Element Ambient::add(const Element& a, const Element& b) const {
  check_arity(a);
  check_arity(b);
  if (is_interval()) return Element{a.value() + b.value()};
  std::vector<Value> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(a[i] + b[i], moduli_[i]);
  return Element(std::move(c));
}

Element Ambient::sub(const Element& a, const Element& b) const {
  check_arity(a);
  check_arity(b);
  if (is_interval()) return Element{a.value() - b.value()};
  std::vector<Value> c(moduli_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(a[i] - b[i], moduli_[i]);
  return Element(std::move(c));
}

Element Ambient::neg(const Element& a) const { return sub(zero(), a); }

std::size_t Ambient::add_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    std::size_t da = a / strides_[i], db = b / strides_[i];
    a %= strides_[i];
    b %= strides_[i];
    std::size_t d = da + db;
    if (d >= m) d -= m;
    out += d * strides_[i];
  }
  return out;
}

std::size_t Ambient::sub_index(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    std::size_t da = a / strides_[i], db = b / strides_[i];
    a %= strides_[i];
    b %= strides_[i];
    std::size_t d = da + m - db;
    if (d >= m) d -= m;
    out += d * strides_[i];
  }
  return out;
}

std::string Ambient::describe() const {
  if (is_interval()) {
    std::string s = "interval n=" + std::to_string(n_);
    if (lo_ != 1) s += " lo=" + std::to_string(lo_);
    return s;
  }
  std::string s = "product ";
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(moduli_[i]);
  }
  return s;
}

Element elem_add(const Element& a, const Element& b, const Ambient& ambient) { return ambient.add(a, b); }
Element elem_sub(const Element& a, const Element& b, const Ambient& ambient) { return ambient.sub(a, b); }

GroundSet::GroundSet(Ambient ambient, const std::vector<Element>& elements)
    : ambient_(std::move(ambient)), members_(ambient_.cardinality()) {
  for (const auto& e : elements) members_.set(ambient_.index_of(e));
  elements_.reserve(members_.count());
  members_.for_each([&](std::size_t i) { elements_.push_back(ambient_.element_at(i)); });
}

GroundSet GroundSet::from_values(Ambient ambient, const std::vector<Value>& values) {
  std::vector<Element> els;
  els.reserve(values.size());
  for (Value v : values) els.push_back(Element{v});
  return GroundSet(std::move(ambient), els);
}

GroundSet GroundSet::from_indices(Ambient ambient, const Bitset& members) {
  if (members.size() != ambient.cardinality()) throw StructuralError("membership bitmap size mismatch");
  GroundSet g(std::move(ambient));
  g.members_ = members;
  g.elements_.reserve(members.count());
  members.for_each([&](std::size_t i) { g.elements_.push_back(g.ambient_.element_at(i)); });
  return g;
}

std::vector<Value> GroundSet::values() const {
  std::vector<Value> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.value());
  return out;
}

std::vector<Element> SumsetWitness::sums(const Ambient& ambient) const {
  std::vector<Element> acc{offset};
  for (const auto& L : summands) {
    std::vector<Element> next;
    next.reserve(acc.size() * L.size());
    for (const auto& a : acc)
      for (const auto& l : L) next.push_back(ambient.add(a, l));
    acc = std::move(next);
  }
  return acc;
}

std::vector<Element> SumsetWitness::value_set(const Ambient& ambient) const {
  auto s = sums(ambient);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

SumsetWitness canonicalize(SumsetWitness w, const Ambient& ambient) {
  for (auto& L : w.summands) {
    if (L.empty()) continue;
    // Residue tuples compare lexicographically, integers numerically.
    const Element base = *std::min_element(L.begin(), L.end());
    for (auto& l : L) l = ambient.sub(l, base);
    std::sort(L.begin(), L.end());
    w.offset = ambient.add(w.offset, base);
  }
  return w;
}

bool witness_is_valid(const SumsetWitness& w, const GroundSet& set, const Signature& sig) {
  if (static_cast<int>(w.summands.size()) != sig.r()) return false;
  std::vector<std::size_t> sizes;
  for (const auto& L : w.summands) {
    auto sorted = L;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    sizes.push_back(L.size());
  }
  std::sort(sizes.begin(), sizes.end());
  for (int i = 0; i < sig.r(); ++i)
    if (sizes[static_cast<std::size_t>(i)] != static_cast<std::size_t>(sig[static_cast<std::size_t>(i)])) return false;
  for (const auto& s : w.sums(set.ambient()))
    if (!set.contains(s)) return false;
  return true;
}

namespace {

std::vector<Value> parse_value_list(const std::string& text) {
  std::vector<Value> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    try {
      out.push_back(std::stoll(item, &pos));
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: '" + item + "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) throw InvalidInput("not an integer: '" + item + "'");
  }
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Ambient parse_ambient_header(const std::string& line) {
  std::stringstream ss(line);
  std::string tag, kind;
  ss >> tag >> kind;
  if (kind == "interval") {
    Value n = -1, lo = 1;
    std::string kv;
    while (ss >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw InvalidInput("bad ambient header field: " + kv);
      auto key = kv.substr(0, eq);
      auto vals = parse_value_list(kv.substr(eq + 1));
      if (vals.size() != 1) throw InvalidInput("bad ambient header field: " + kv);
      if (key == "n")
        n = vals[0];
      else if (key == "lo")
        lo = vals[0];
      else
        throw InvalidInput("unknown ambient header field: " + key);
    }
    if (n < 1) throw InvalidInput("interval header needs n=<positive>");
    return Ambient::interval(n, lo);
  }
  if (kind == "product") {
    std::string rest;
    ss >> rest;
    return Ambient::product(parse_value_list(rest));
  }
  throw InvalidInput("unknown ambient kind in header: '" + line + "'");
}

}  // namespace

Element parse_element(const std::string& text, const Ambient& ambient) {
  auto vals = parse_value_list(trim(text));
  if (vals.size() != ambient.arity())
    throw StructuralError("element '" + text + "' has " + std::to_string(vals.size()) + " coordinates, ambient " +
                          ambient.describe() + " expects " + std::to_string(ambient.arity()));
  return Element(std::move(vals));
}

GroundSet read_set(std::istream& in) {
  std::string line;
  std::optional<Ambient> ambient;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (t.rfind("#ambient", 0) == 0) {
        if (ambient) throw InvalidInput("duplicate #ambient header");
        ambient = parse_ambient_header(t);
      }
      continue;
    }
    body.push_back(t);
  }
  if (!ambient) throw InvalidInput("set file lacks an '#ambient' header");
  std::vector<Element> els;
  els.reserve(body.size());
  for (const auto& b : body) els.push_back(parse_element(b, *ambient));
  return GroundSet(*ambient, els);
}

GroundSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open set file: " + path);
  return read_set(in);
}

void write_set(std::ostream& out, const GroundSet& set) {
  out << "#ambient " << set.ambient().describe() << '\n';
  for (const auto& e : set.elements()) out << e.to_string() << '\n';
}

void write_set_file(const std::string& path, const GroundSet& set) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write set file: " + path);
  write_set(out, set);
}

}  // namespace lfree
