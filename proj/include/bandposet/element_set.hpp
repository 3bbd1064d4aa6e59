#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace bandposet {

/// Elements of a finite structure are indices 0..n-1.
using Element = unsigned;

inline constexpr unsigned kMaxElements = 64;

/// A subset of {0..63} packed in one machine word.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(Element e) {
    return ElementSet(std::uint64_t{1} << e);
  }
  /// {0, ..., n-1}
  static constexpr ElementSet range(unsigned n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return std::popcount(bits_); }
  constexpr bool is_singleton() const {
    return bits_ != 0 && (bits_ & (bits_ - 1)) == 0;
  }
  /// Least member; undefined on the empty set.
  constexpr Element front() const { return std::countr_zero(bits_); }

  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr std::uint64_t bits() const { return bits_; }

  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace bandposet
