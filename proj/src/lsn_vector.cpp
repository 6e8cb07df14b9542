#include "taurus/lsn_vector.hpp"

namespace taurus {

namespace {

void put_u64(std::vector<std::byte>& out, uint64_t v) {
  for (int i = 0; i < 8; i++) out.push_back(std::byte((v >> (8 * i)) & 0xff));
}

uint64_t get_u64(const std::byte* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; i++) v |= uint64_t(std::to_integer<uint8_t>(p[i])) << (8 * i);
  return v;
}

}  // namespace

void CompressedLv::encode(std::vector<std::byte>& out) const {
  out.push_back(std::byte(count()));
  put_u64(out, mask);
  uint32_t k = 0;
  for (uint32_t j = 0; j < kMaxLogStreams; j++)
    if (mask & (uint64_t{1} << j)) put_u64(out, values[k++]);
}

size_t CompressedLv::decode(std::span<const std::byte> in) {
  if (in.size() < 9) return 0;
  uint32_t declared = std::to_integer<uint8_t>(in[0]);
  mask = get_u64(in.data() + 1);
  uint32_t k = static_cast<uint32_t>(__builtin_popcountll(mask));
  if (k != declared) return 0;
  size_t need = 9 + size_t{8} * k;
  if (in.size() < need) return 0;
  for (uint32_t i = 0; i < k; i++) values[i] = get_u64(in.data() + 9 + 8 * i);
  return need;
}

CompressedLv compress(const LsnVector& lv, const LsnVector& lplv) {
  TAURUS_CHECK(lv.dims() == lplv.dims(), "LV dimension mismatch");
  CompressedLv c;
  uint32_t k = 0;
  for (uint32_t j = 0; j < lv.dims(); j++) {
    if (lv[j] > lplv[j]) {
      c.mask |= uint64_t{1} << j;
      c.values[k++] = lv[j];
    }
  }
  return c;
}

DecompressResult decompress(const CompressedLv& c, const LsnVector& lplv) {
  DecompressResult r;
  r.lv = lplv;
  uint32_t k = 0;
  for (uint32_t j = 0; j < kMaxLogStreams; j++) {
    if (c.mask & (uint64_t{1} << j)) {
      if (j >= lplv.dims()) return r;  // stored dimension beyond stream count
      r.lv[j] = c.values[k++];
    }
  }
  r.ok = true;
  return r;
}

}  // namespace taurus
