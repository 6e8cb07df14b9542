#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "taurus/common.hpp"

namespace taurus {

// Fixed-length vector of per-log byte offsets. Element i is an upper bound on
// the positions in log i that the owner may depend on; 0 means "depends on
// nothing in that log". The dimension count is fixed when the engine is
// configured and never changes afterwards.
class LsnVector {
 public:
  LsnVector() : n_(0) {}
  explicit LsnVector(uint32_t n) : n_(n) {
    TAURUS_CHECK(n <= kMaxLogStreams, "LV dimension count out of range");
    elems_.fill(0);
  }
  LsnVector(std::initializer_list<uint64_t> init) : n_(0) {
    TAURUS_CHECK(init.size() <= kMaxLogStreams, "LV dimension count out of range");
    elems_.fill(0);
    for (uint64_t v : init) elems_[n_++] = v;
  }

  uint32_t dims() const { return n_; }
  uint64_t operator[](uint32_t i) const { return elems_[i]; }
  uint64_t& operator[](uint32_t i) { return elems_[i]; }
  const uint64_t* data() const { return elems_.data(); }

  bool operator==(const LsnVector& o) const {
    if (n_ != o.n_) return false;
    return std::memcmp(elems_.data(), o.elems_.data(), n_ * sizeof(uint64_t)) == 0;
  }

  // In-place element-wise join with `o`.
  void join(const LsnVector& o) {
    TAURUS_CHECK(n_ == o.n_, "LV dimension mismatch");
    for (uint32_t i = 0; i < n_; i++)
      if (o.elems_[i] > elems_[i]) elems_[i] = o.elems_[i];
  }

  void clear() { elems_.fill(0); }

  bool is_zero() const {
    for (uint32_t i = 0; i < n_; i++)
      if (elems_[i] != 0) return false;
    return true;
  }

 private:
  uint32_t n_;
  std::array<uint64_t, kMaxLogStreams> elems_;
};

inline LsnVector elem_wise_max(const LsnVector& a, const LsnVector& b) {
  TAURUS_CHECK(a.dims() == b.dims(), "LV dimension mismatch");
  LsnVector r = a;
  r.join(b);
  return r;
}

// a <= b iff every element of a is <= the matching element of b.
inline bool leq(const LsnVector& a, const LsnVector& b) {
  TAURUS_CHECK(a.dims() == b.dims(), "LV dimension mismatch");
  for (uint32_t i = 0; i < a.dims(); i++)
    if (a[i] > b[i]) return false;
  return true;
}

// Anchor-relative compressed form of an LV. Dimension j is present iff
// lv[j] > anchor[j]; absent dimensions are reconstructed from the anchor at
// decode time. The mask replaces the NaN sentinel: offsets keep their full
// 64-bit range.
struct CompressedLv {
  uint64_t mask = 0;                    // bit j set => dimension j stored
  std::array<uint64_t, kMaxLogStreams> values{};  // dense, ascending dim order

  uint32_t count() const { return static_cast<uint32_t>(__builtin_popcountll(mask)); }

  // Wire layout (little-endian): 1 byte count, 8 byte mask, count * 8 bytes of
  // offsets in ascending-dimension order. Shared verbatim by the log writer
  // and recovery.
  size_t wire_size() const { return 1 + 8 + size_t{8} * count(); }

  void encode(std::vector<std::byte>& out) const;

  // Returns bytes consumed, or 0 if the field is malformed/truncated.
  size_t decode(std::span<const std::byte> in);
};

CompressedLv compress(const LsnVector& lv, const LsnVector& lplv);

// result[j] = stored value if present else lplv[j]. `n` is the engine's
// stream count; a stored dimension >= n is a corrupt record.
struct DecompressResult {
  LsnVector lv;
  bool ok = false;
};
DecompressResult decompress(const CompressedLv& c, const LsnVector& lplv);

}  // namespace taurus
