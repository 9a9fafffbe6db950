#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gss {

// Fixed-width bit vector backed by 64-bit words: the shared currency for
// vertex sets, key vectors and GF(2) matrix rows. The width is set at
// construction and binary operators require operands of equal width.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(int width) {
    if (width < 0) throw std::invalid_argument("BitVec: negative width");
    width_ = width;
    words_.assign(static_cast<size_t>((width + 63) / 64), 0);
  }

  // Low `width` bits of `mask`, width <= 64.
  static BitVec from_mask(uint64_t mask, int width) {
    if (width < 0 || width > 64)
      throw std::invalid_argument("BitVec::from_mask: width must be in [0,64]");
    if (width < 64 && width >= 0 && (width == 0 ? mask != 0 : (mask >> width) != 0))
      throw std::invalid_argument("BitVec::from_mask: mask has bits at or above width");
    BitVec v(width);
    if (width > 0) v.words_[0] = mask;
    return v;
  }

  int size() const { return width_; }

  bool get(int i) const {
    check_index(i);
    return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i, bool value = true) {
    check_index(i);
    const uint64_t bit = uint64_t{1} << (i & 63);
    if (value)
      words_[static_cast<size_t>(i) >> 6] |= bit;
    else
      words_[static_cast<size_t>(i) >> 6] &= ~bit;
  }

  void flip(int i) {
    check_index(i);
    words_[static_cast<size_t>(i) >> 6] ^= uint64_t{1} << (i & 63);
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  // GF(2) inner product: parity of |this & other|.
  bool dot(const BitVec& o) const {
    check_width(o);
    int p = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      p ^= std::popcount(words_[i] & o.words_[i]) & 1;
    return p != 0;
  }

  bool is_subset_of(const BitVec& o) const {
    check_width(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  BitVec& operator^=(const BitVec& o) {
    check_width(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    check_width(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator|=(const BitVec& o) {
    check_width(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  // Complement within the fixed width.
  BitVec complement() const {
    BitVec v(width_);
    for (size_t i = 0; i < words_.size(); ++i) v.words_[i] = ~words_[i];
    v.trim();
    return v;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  uint64_t to_mask() const {
    if (width_ > 64) throw std::logic_error("BitVec::to_mask: width exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  // Positions of set bits, ascending.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t x = words_[w];
      while (x) {
        out.push_back(static_cast<int>(w * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (int i : indices()) {
      if (s.size() > 1) s += ',';
      s += std::to_string(i);
    }
    s += '}';
    return s;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= width_) throw std::out_of_range("BitVec: bit index out of range");
  }
  void check_width(const BitVec& o) const {
    if (width_ != o.width_) throw std::invalid_argument("BitVec: width mismatch");
  }
  void trim() {
    if (width_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (width_ % 64)) - 1;
  }

  int width_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace gss
