#include "arcmatch/succinct.hpp"

#include <bit>
#include <string>

namespace arcmatch {

namespace {

constexpr int64_t kBlockBits = 512;
constexpr int64_t kWordsPerBlock = kBlockBits / 64;
constexpr int64_t kSelectStep = 512;  // one position sample per this many ones

// 1-based index of the r-th set bit of word, r in [1, popcount(word)].
int nth_set_bit(uint64_t word, int64_t r) {
  for (int64_t t = 1; t < r; ++t) word &= word - 1;
  return std::countr_zero(word);
}

}  // namespace

void RankSelectIndex::build(const uint64_t* words, size_t stride,
                            int64_t nbits) {
  nbits_ = nbits;
  const int64_t nwords = (nbits + 63) >> 6;
  const int64_t nblocks = (nbits + kBlockBits - 1) / kBlockBits;
  block_rank_.assign(nblocks + 1, 0);
  select_sample_.clear();
  int64_t count = 0;
  int64_t next_sample = 1;
  for (int64_t w = 0; w < nwords; ++w) {
    if (w % kWordsPerBlock == 0) {
      block_rank_[w / kWordsPerBlock] = static_cast<uint32_t>(count);
    }
    uint64_t word = words[w * stride];
    if (w == nwords - 1 && (nbits & 63) != 0) {
      word &= (uint64_t{1} << (nbits & 63)) - 1;  // ignore tail slack
    }
    const int64_t c = std::popcount(word);
    while (next_sample <= count + c) {
      select_sample_.push_back(
          static_cast<uint32_t>(w * 64 + nth_set_bit(word, next_sample - count)));
      next_sample += kSelectStep;
    }
    count += c;
  }
  block_rank_[nblocks] = static_cast<uint32_t>(count);
  ones_ = count;
}

int64_t RankSelectIndex::rank(const uint64_t* words, size_t stride,
                              int64_t k) const {
  if (k < 0 || k > nbits_) {
    fail(ErrorKind::OutOfRange, "rank(" + std::to_string(k) + ") with " +
                                    std::to_string(nbits_) + " bits");
  }
  const int64_t block = k / kBlockBits;
  int64_t r = block_rank_[block];
  const int64_t word_of_k = k >> 6;
  for (int64_t w = block * kWordsPerBlock; w < word_of_k; ++w) {
    r += std::popcount(words[w * stride]);
  }
  const int64_t rem = k & 63;
  if (rem != 0) {
    r += std::popcount(words[word_of_k * stride] &
                       ((uint64_t{1} << rem) - 1));
  }
  return r;
}

int64_t RankSelectIndex::select(const uint64_t* words, size_t stride,
                                int64_t k) const {
  if (k < 1 || k > ones_) {
    fail(ErrorKind::NotEnoughOnes, "select(" + std::to_string(k) + ") with " +
                                       std::to_string(ones_) + " ones");
  }
  // Jump near the target via the sample, then walk whole blocks, then words.
  int64_t block = select_sample_[(k - 1) / kSelectStep] / kBlockBits;
  while (block_rank_[block + 1] < k) ++block;
  int64_t need = k - block_rank_[block];
  int64_t w = block * kWordsPerBlock;
  for (;; ++w) {
    const int64_t c = std::popcount(words[w * stride]);
    if (need <= c) break;
    need -= c;
  }
  return w * 64 + nth_set_bit(words[w * stride], need) + 1;
}

void BitVector::Builder::push_back(bool bit) {
  if ((nbits_ & 63) == 0) words_.push_back(0);
  if (bit) words_.back() |= uint64_t{1} << (nbits_ & 63);
  ++nbits_;
}

BitVector BitVector::Builder::finish() {
  BitVector out;
  out.words_ = std::move(words_);
  out.index_.build(out.words_.data(), 1, nbits_);
  words_.clear();
  nbits_ = 0;
  return out;
}

BitVector BitVector::from_string(const std::string& bits) {
  Builder b;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      fail(ErrorKind::MalformedEncoding, "bit characters must be 0 or 1");
    }
    b.push_back(c == '1');
  }
  return b.finish();
}

bool BitVector::get(int64_t pos) const {
  if (pos < 1 || pos > size()) {
    fail(ErrorKind::OutOfRange, "bit " + std::to_string(pos));
  }
  return (words_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1;
}

std::string BitVector::to_string() const {
  std::string out(size(), '0');
  for (int64_t p = 1; p <= size(); ++p) {
    if (get(p)) out[p - 1] = '1';
  }
  return out;
}

namespace {

class LayerBuilder {
 public:
  void push_back(bool bit) {
    if ((nbits_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= uint64_t{1} << (nbits_ & 63);
    ++nbits_;
  }
  int64_t size() const { return nbits_; }
  const std::vector<uint64_t>& words() const { return words_; }

 private:
  std::vector<uint64_t> words_;
  int64_t nbits_ = 0;
};

}  // namespace

CompressedGamma encode(const GammaSeq& g) {
  g.check_shape();
  const int32_t m = g.m();
  CompressedGamma out;
  out.m_ = m;
  out.i1_ = g.i1();
  out.i2_ = g.i2();
  LayerBuilder diff, end;
  // Entries taken downward from m; the virtual entry above the top is m
  // itself, so the first substring encodes m minus the top entry.
  for (int32_t k = m; k >= 1; --k) {
    const int32_t drop = g.value(k + 1) - g.value(k);
    if (drop == 0) {
      diff.push_back(false);
      end.push_back(true);
    } else {
      for (int32_t t = 0; t < drop; ++t) {
        diff.push_back(true);
        end.push_back(t == drop - 1);
      }
    }
  }
  const int64_t len = diff.size();
  if (len > 2 * m + 1) {
    fail(ErrorKind::InvalidSequence, "encoding exceeded the length envelope");
  }
  out.len_ = len;
  const int64_t nwords = (len + 63) >> 6;
  out.words_.assign(2 * std::max<int64_t>(nwords, 1), 0);
  for (int64_t w = 0; w < nwords; ++w) {
    out.words_[2 * w] = diff.words()[w];
    out.words_[2 * w + 1] = end.words()[w];
  }
  out.diff_index_.build(out.words_.data(), 2, len);
  out.end_index_.build(out.words_.data() + 1, 2, len);
  if (out.end_index_.ones() != m || out.diff_index_.ones() > m + 1) {
    fail(ErrorKind::InvalidSequence, "encoding violated the ones envelope");
  }
  return out;
}

bool CompressedGamma::diff_bit(int64_t pos) const {
  return (words_[2 * ((pos - 1) >> 6)] >> ((pos - 1) & 63)) & 1;
}

bool CompressedGamma::end_bit(int64_t pos) const {
  return (words_[2 * ((pos - 1) >> 6) + 1] >> ((pos - 1) & 63)) & 1;
}

int32_t CompressedGamma::access(int32_t k) const {
  if (k < 1 || k > m_) {
    fail(ErrorKind::OutOfRange, "entry " + std::to_string(k));
  }
  const int64_t pos = end_index_.select(words_.data() + 1, 2, m_ + 1 - k);
  const int64_t drops = diff_index_.rank(words_.data(), 2, pos);
  return m_ - static_cast<int32_t>(drops);
}

GammaSeq decode(const CompressedGamma& c) {
  const int32_t m = c.m();
  std::vector<int32_t> values(m);
  int32_t emitted = 0;
  int32_t drops = 0;
  for (int64_t pos = 1; pos <= c.encoded_length(); ++pos) {
    if (c.diff_bit(pos)) ++drops;
    if (c.end_bit(pos)) {
      if (emitted == m) {
        fail(ErrorKind::MalformedEncoding, "more substrings than entries");
      }
      values[m - 1 - emitted] = m - drops;
      ++emitted;
    }
  }
  if (emitted != m) {
    fail(ErrorKind::MalformedEncoding,
         "expected " + std::to_string(m) + " substrings, found " +
             std::to_string(emitted));
  }
  GammaSeq out(std::move(values), c.i1(), c.i2());
  out.check_shape();
  return out;
}

std::string CompressedGamma::diff_layer_string() const {
  std::string out(len_, '0');
  for (int64_t p = 1; p <= len_; ++p) {
    if (diff_bit(p)) out[p - 1] = '1';
  }
  return out;
}

std::string CompressedGamma::end_layer_string() const {
  std::string out(len_, '0');
  for (int64_t p = 1; p <= len_; ++p) {
    if (end_bit(p)) out[p - 1] = '1';
  }
  return out;
}

}  // namespace arcmatch
