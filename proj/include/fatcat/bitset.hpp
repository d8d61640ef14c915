#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fatcat {

/// Fixed-width dynamic bitset packed into 64-bit words. Used for incidence
/// rows/columns, extents and intents; all binary operations require equal
/// widths.
class BitSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitSet() = default;
  explicit BitSet(std::size_t size, bool value = false)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
    trim();
  }

  static BitSet full(std::size_t size) { return BitSet(size, true); }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & Word{1};
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void set(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool all() const noexcept { return count() == size_; }

  BitSet& operator&=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend BitSet operator&(BitSet a, const BitSet& b) noexcept { return a &= b; }
  friend BitSet operator|(BitSet a, const BitSet& b) noexcept { return a |= b; }

  /// Popcount of the intersection without materializing it.
  std::size_t intersection_count(const BitSet& o) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return n;
  }

  bool is_subset_of(const BitSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool is_proper_subset_of(const BitSet& o) const noexcept { return is_subset_of(o) && *this != o; }

  /// Copy restricted to members strictly below `i`.
  BitSet prefix(std::size_t i) const {
    BitSet out(size_);
    std::size_t full = i / kWordBits;
    for (std::size_t w = 0; w < full && w < words_.size(); ++w) out.words_[w] = words_[w];
    if (full < words_.size() && i % kWordBits != 0)
      out.words_[full] = words_[full] & ((Word{1} << (i % kWordBits)) - 1);
    return out;
  }

  /// Members in ascending order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        out.push_back(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  /// Lexicographic comparison of the ascending member sequences.
  static bool lex_less(const BitSet& a, const BitSet& b) noexcept {
    for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
      Word diff = a.words_[wi] ^ b.words_[wi];
      if (!diff) continue;
      std::size_t i = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
      // Both sequences agree below i. Whoever holds i is smaller, unless the
      // other sequence ends there (then the other is a proper prefix).
      if (a.test(i)) return b.has_member_after(i);
      return !a.has_member_after(i);
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const BitSet&, const BitSet&) = default;

private:
  bool has_member_after(std::size_t i) const noexcept {
    std::size_t wi = i / kWordBits;
    std::size_t bit = i % kWordBits;
    Word above = bit + 1 == kWordBits ? Word{0} : (~Word{0} << (bit + 1));
    if (words_[wi] & above) return true;
    for (std::size_t k = wi + 1; k < words_.size(); ++k)
      if (words_[k]) return true;
    return false;
  }

  void trim() noexcept {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& s) const noexcept { return s.hash(); }
};

} // namespace fatcat
