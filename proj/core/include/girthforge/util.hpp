#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace girthforge {

// Parse failure in one of the text formats. `line` is 1-based; 0 means
// the error is not tied to a specific line.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadPairsPresent : std::runtime_error {
  std::pair<int, int> witness;
  BadPairsPresent(int x, int y)
      : std::runtime_error("graph has a bad pair {" + std::to_string(x) +
                           "," + std::to_string(y) + "}"),
        witness(x, y) {}
};

struct NotUniquelyGenerated : std::runtime_error {
  std::pair<int, int> witness;
  NotUniquelyGenerated(int x, int y)
      : std::runtime_error("poset is not uniquely generated: two cover chains "
                           "between " +
                           std::to_string(x) + " and " + std::to_string(y)),
        witness(x, y) {}
};

struct ChainOfThree : std::runtime_error {
  int a, b, c;
  ChainOfThree(int a_, int b_, int c_)
      : std::runtime_error("poset has a 3-element chain " + std::to_string(a_) +
                           " < " + std::to_string(b_) + " < " +
                           std::to_string(c_)),
        a(a_), b(b_), c(c_) {}
};

struct InsufficientSurvivors : std::runtime_error {
  int survived, requested;
  InsufficientSurvivors(int survived_, int requested_)
      : std::runtime_error("only " + std::to_string(survived_) +
                           " vertices survived repair, " +
                           std::to_string(requested_) +
                           " requested; retry with a fresh seed"),
        survived(survived_), requested(requested_) {}
};

// Fixed-size-at-construction bitset over vertex ids.  Vertices are
// 1-based throughout the library; bit 0 is simply unused.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 64) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool operator==(const Bitset& o) const { return w_ == o.w_; }

  // Lowest set bit, or -1.
  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
    return -1;
  }
  int next(int after) const {
    for (int i = after + 1; i < nbits_ + 1; ) {
      uint64_t w = w_[i >> 6] >> (i & 63);
      if (w) return i + __builtin_ctzll(w);
      i = (i | 63) + 1;
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  int size_bits() const { return nbits_; }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace girthforge
