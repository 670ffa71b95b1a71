#ifndef SEMIGRAPHS_ELEMENT_SET_HPP
#define SEMIGRAPHS_ELEMENT_SET_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

namespace semigraphs {

// Elements are dense ids 0..n-1 into a semigroup's Cayley table.
using element = unsigned;

// A subset of the elements of a fixed semigroup, stored as a bitset over
// 0..n-1.  The universe size is fixed at construction; all member ids are
// below it by construction.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(element x) const { return bits_.test(x); }
  void add(element x) { bits_.set(x); }
  void remove(element x) { bits_.reset(x); }

  bool is_subset_of(const ElementSet& other) const {
    return bits_.is_subset_of(other.bits_);
  }

  bool intersects(const ElementSet& other) const {
    return bits_.intersects(other.bits_);
  }

  ElementSet& operator|=(const ElementSet& other) {
    bits_ |= other.bits_;
    return *this;
  }

  ElementSet& operator&=(const ElementSet& other) {
    bits_ &= other.bits_;
    return *this;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) {
    return a.bits_ != b.bits_;
  }

  // Members in ascending id order.
  std::vector<element> members() const {
    std::vector<element> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos;
         i = bits_.find_next(i)) {
      out.push_back(static_cast<element>(i));
    }
    return out;
  }

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace semigraphs

#endif  // SEMIGRAPHS_ELEMENT_SET_HPP
