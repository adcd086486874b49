#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcmatch/error.hpp"
#include "arcmatch/gamma_seq.hpp"

namespace arcmatch {

// Rank/select directory over a word array. The words live in the owning
// container and are handed in per query; stride lets two interleaved layers
// share one buffer. Cumulative counts every 512 bits, plus the position of
// every 512th one; queries popcount at most one block.
class RankSelectIndex {
 public:
  void build(const uint64_t* words, size_t stride, int64_t nbits);

  // Ones among the first k bits, k in [0, nbits].
  int64_t rank(const uint64_t* words, size_t stride, int64_t k) const;
  // 1-based position of the k-th one, k in [1, ones].
  int64_t select(const uint64_t* words, size_t stride, int64_t k) const;

  int64_t size() const { return nbits_; }
  int64_t ones() const { return ones_; }
  int64_t metadata_bits() const {
    return 32 * static_cast<int64_t>(block_rank_.size() +
                                     select_sample_.size());
  }

 private:
  std::vector<uint32_t> block_rank_;     // ones before each 512-bit block
  std::vector<uint32_t> select_sample_;  // 0-based bit index of one #(512g+1)
  int64_t nbits_ = 0;
  int64_t ones_ = 0;
};

// Plain bitvector with O(1) rank and (amortized) O(1) select.
// Positions are 1-based, matching the rest of the library.
class BitVector {
 public:
  class Builder {
   public:
    void push_back(bool bit);
    int64_t size() const { return nbits_; }
    BitVector finish();

   private:
    std::vector<uint64_t> words_;
    int64_t nbits_ = 0;
  };

  BitVector() = default;
  static BitVector from_string(const std::string& bits);  // e.g. "0110"

  int64_t size() const { return index_.size(); }
  int64_t ones() const { return index_.ones(); }
  bool get(int64_t pos) const;             // pos in [1, size]
  int64_t rank(int64_t k) const { return index_.rank(words_.data(), 1, k); }
  int64_t select(int64_t k) const { return index_.select(words_.data(), 1, k); }

  int64_t payload_bits() const { return index_.size(); }
  int64_t metadata_bits() const { return index_.metadata_bits(); }
  std::string to_string() const;

 private:
  std::vector<uint64_t> words_;
  RankSelectIndex index_;
};

// A GammaSeq frozen into two bit layers of equal length:
//   diff layer - per entry k (taken downward from m), the drop to the next
//                entry in unary: a lone 0 for a drop of zero, else one 1 per
//                unit of drop (the first substring covers m minus the top
//                entry, which the staircase shape keeps at 0 or 1);
//   end layer  - a 1 marking the last bit of each entry's substring.
// Entry k is then m - rank(diff, select(end, m + 1 - k)). Both layers are
// at most 2m + 1 bits and sit interleaved word by word in one buffer, so an
// access touches adjacent cache lines.
class CompressedGamma {
 public:
  CompressedGamma() = default;

  int32_t m() const { return m_; }
  int32_t i1() const { return i1_; }
  int32_t i2() const { return i2_; }

  int64_t encoded_length() const { return len_; }  // bits per layer
  int64_t payload_bits() const { return 2 * len_; }
  int64_t metadata_bits() const {
    return diff_index_.metadata_bits() + end_index_.metadata_bits();
  }
  int64_t diff_ones() const { return diff_index_.ones(); }
  int64_t end_ones() const { return end_index_.ones(); }

  // Entry k of the frozen sequence, k in [1, m].
  int32_t access(int32_t k) const;
  // Sentinel-aware view mirroring GammaSeq::value (j1 in [1, m + 1]).
  int32_t value(int32_t j1) const { return j1 > m_ ? m_ : access(j1); }

  std::string diff_layer_string() const;
  std::string end_layer_string() const;

 private:
  friend CompressedGamma encode(const GammaSeq& g);
  friend GammaSeq decode(const CompressedGamma& c);

  bool diff_bit(int64_t pos) const;
  bool end_bit(int64_t pos) const;

  std::vector<uint64_t> words_;  // even words: diff layer, odd words: end layer
  RankSelectIndex diff_index_, end_index_;
  int64_t len_ = 0;
  int32_t m_ = 0, i1_ = 1, i2_ = 0;
};

// Freezes a sequence. Throws InvalidSequence when the staircase shape is
// violated (also guards the <= 2m + 1 length envelope).
CompressedGamma encode(const GammaSeq& g);

// Thaws a full sequence back out; exact inverse of encode.
GammaSeq decode(const CompressedGamma& c);

// Reader over a frozen sequence for the merge kernels.
struct CompressedGammaReader {
  const CompressedGamma* c;
  int32_t value(int32_t j1) const { return c->value(j1); }
};

}  // namespace arcmatch
