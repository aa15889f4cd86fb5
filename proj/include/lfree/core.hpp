#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "lfree/bitset.hpp"

namespace lfree {

using Value = std::int64_t;

/// Shape (r; l1 <= ... <= lr) of the forbidden sumsets L1 + ... + Lr, |Li| = li.
class Signature {
 public:
  /// Sorts the lengths; throws InvalidInput on an empty list or any entry < 2.
  static Signature normalize(std::vector<int> lengths);

  int r() const { return static_cast<int>(lengths_.size()); }
  const std::vector<int>& lengths() const { return lengths_; }
  int operator[](std::size_t i) const { return lengths_[i]; }

  /// l1 * ... * lr
  std::int64_t product() const;
  /// l1 * ... * l(r-1); equals 1 when r == 1.
  std::int64_t prefix_product() const;
  /// l1 + ... + lr
  std::int64_t sum() const;

  /// (l2, ..., lr). Requires r >= 2.
  Signature tail() const;

  /// "2,2,3"
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  explicit Signature(std::vector<int> lengths) : lengths_(std::move(lengths)) {}
  std::vector<int> lengths_;
};

inline Signature normalize_signature(std::vector<int> lengths) { return Signature::normalize(std::move(lengths)); }

/// A member of an ambient: one integer for intervals, a residue tuple for products.
class Element {
 public:
  Element() = default;
  Element(std::initializer_list<Value> coords) : coords_(coords) {}
  explicit Element(std::vector<Value> coords) : coords_(std::move(coords)) {}

  std::size_t arity() const { return coords_.size(); }
  Value operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Value>& coords() const { return coords_; }
  /// The single coordinate of an interval element.
  Value value() const { return coords_.front(); }

  std::string to_string() const;

  friend auto operator<=>(const Element&, const Element&) = default;
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Value> coords_;
};

/// Ground structure: an integer interval [lo, lo+n) or Z_{n1} x ... x Z_{nk}.
///
/// Carrier elements are linearized to indices in [0, cardinality()):
/// value - lo for intervals, big-endian mixed radix for products, so index
/// order on a product coincides with lexicographic order of residue tuples.
class Ambient {
 public:
  enum class Kind { Interval, Product };

  static Ambient interval(Value n, Value lo = 1);
  static Ambient product(std::vector<Value> moduli);

  Kind kind() const { return kind_; }
  bool is_interval() const { return kind_ == Kind::Interval; }
  bool is_product() const { return kind_ == Kind::Product; }

  /// Interval length n (interval ambients only).
  Value n() const { return n_; }
  /// Smallest carrier value (interval ambients only).
  Value lo() const { return lo_; }
  const std::vector<Value>& moduli() const { return moduli_; }
  std::size_t arity() const { return is_interval() ? 1 : moduli_.size(); }
  std::size_t cardinality() const { return card_; }

  bool contains(const Element& e) const;
  /// Index of a carrier element; throws StructuralError on arity mismatch and
  /// InvalidInput when the element is outside the carrier.
  std::size_t index_of(const Element& e) const;
  Element element_at(std::size_t index) const;

  Element zero() const;
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;

  /// Index arithmetic on carrier indices (product ambients).
  std::size_t add_index(std::size_t a, std::size_t b) const;
  std::size_t sub_index(std::size_t a, std::size_t b) const;

  /// "interval n=16", "interval n=256 lo=0", "product 4,4,4"
  std::string describe() const;

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.lo_ == b.lo_ && a.moduli_ == b.moduli_;
  }

 private:
  void check_arity(const Element& e) const;

  Kind kind_ = Kind::Interval;
  Value n_ = 0;
  Value lo_ = 1;
  std::vector<Value> moduli_;
  std::vector<std::size_t> strides_;
  std::size_t card_ = 0;
};

Element elem_add(const Element& a, const Element& b, const Ambient& ambient);
Element elem_sub(const Element& a, const Element& b, const Ambient& ambient);

/// Finite set of carrier elements with bitmap membership over carrier indices.
class GroundSet {
 public:
  explicit GroundSet(Ambient ambient) : ambient_(std::move(ambient)), members_(ambient_.cardinality()) {}
  /// Validates carrier membership, sorts and removes duplicates.
  GroundSet(Ambient ambient, const std::vector<Element>& elements);
  static GroundSet from_values(Ambient ambient, const std::vector<Value>& values);
  static GroundSet from_indices(Ambient ambient, const Bitset& members);

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Element>& elements() const { return elements_; }
  const Bitset& membership() const { return members_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Element& e) const { return ambient_.contains(e) && members_.test(ambient_.index_of(e)); }
  /// Interval values in increasing order.
  std::vector<Value> values() const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.ambient_ == b.ambient_ && a.elements_ == b.elements_;
  }

 private:
  Ambient ambient_;
  std::vector<Element> elements_;
  Bitset members_;
};

/// Canonical decomposition offset + L1 + ... + Lr certifying a contained sumset.
struct SumsetWitness {
  Element offset;
  std::vector<std::vector<Element>> summands;

  /// All products-many sums offset + l1 + ... + lr, with multiplicity.
  std::vector<Element> sums(const Ambient& ambient) const;
  /// Distinct sums in increasing order.
  std::vector<Element> value_set(const Ambient& ambient) const;

  friend bool operator==(const SumsetWitness&, const SumsetWitness&) = default;
};

/// Moves each summand's basepoint (interval minimum, product lexicographic
/// minimum) to zero, absorbing the translation into the offset, and sorts
/// each summand. Idempotent.
SumsetWitness canonicalize(SumsetWitness w, const Ambient& ambient);

/// Checks summand sizes against the signature, distinctness inside each
/// summand, and that every sum lies in the set.
bool witness_is_valid(const SumsetWitness& w, const GroundSet& set, const Signature& sig);

// Set file format: '#ambient interval n=16' (optionally 'lo=0') or
// '#ambient product 4,4,4' header, then one element per line; other '#' lines
// are comments.
GroundSet read_set(std::istream& in);
GroundSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const GroundSet& set);
void write_set_file(const std::string& path, const GroundSet& set);
Element parse_element(const std::string& text, const Ambient& ambient);

}  // namespace lfree
