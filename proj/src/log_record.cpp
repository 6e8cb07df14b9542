#include "taurus/log_record.hpp"

#include <zlib.h>

namespace taurus {

void put_u32(std::vector<std::byte>& out, uint32_t v) {
  for (int i = 0; i < 4; i++) out.push_back(std::byte((v >> (8 * i)) & 0xff));
}

void put_u64(std::vector<std::byte>& out, uint64_t v) {
  for (int i = 0; i < 8; i++) out.push_back(std::byte((v >> (8 * i)) & 0xff));
}

uint32_t get_u32(const std::byte* p) {
  uint32_t v = 0;
  for (int i = 0; i < 4; i++) v |= uint32_t(std::to_integer<uint8_t>(p[i])) << (8 * i);
  return v;
}

uint64_t get_u64(const std::byte* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; i++) v |= uint64_t(std::to_integer<uint8_t>(p[i])) << (8 * i);
  return v;
}

uint32_t record_checksum(std::span<const std::byte> payload) {
  return static_cast<uint32_t>(
      crc32(0, reinterpret_cast<const Bytef*>(payload.data()), static_cast<uInt>(payload.size())));
}

void encode_data_body(const std::vector<DataWrite>& writes, std::vector<std::byte>& out) {
  put_u32(out, static_cast<uint32_t>(writes.size()));
  for (const auto& w : writes) {
    put_u32(out, w.table_id);
    put_u64(out, w.key);
    out.insert(out.end(), w.after_image.begin(), w.after_image.end());
  }
}

void encode_command_body(uint32_t proc_id, std::span<const std::byte> params,
                         std::vector<std::byte>& out) {
  put_u32(out, proc_id);
  out.insert(out.end(), params.begin(), params.end());
}

DecodedDataBody decode_data_body(std::span<const std::byte> body,
                                 const std::vector<uint32_t>& table_widths) {
  DecodedDataBody r;
  if (body.size() < 4) return r;
  uint32_t count = get_u32(body.data());
  size_t off = 4;
  for (uint32_t i = 0; i < count; i++) {
    if (body.size() - off < 12) return r;
    uint32_t table_id = get_u32(body.data() + off);
    uint64_t key = get_u64(body.data() + off + 4);
    if (table_id >= table_widths.size()) return r;
    size_t width = table_widths[table_id];
    off += 12;
    if (body.size() - off < width) return r;
    r.entries.push_back({table_id, key, off, width});
    off += width;
  }
  r.ok = (off == body.size());
  return r;
}

DecodedCommandBody decode_command_body(std::span<const std::byte> body) {
  DecodedCommandBody r;
  if (body.size() < 4) return r;
  r.proc_id = get_u32(body.data());
  r.params = body.subspan(4);
  r.ok = true;
  return r;
}

namespace {

std::vector<std::byte> frame(RecordType type, std::span<const std::byte> payload) {
  std::vector<std::byte> out;
  out.reserve(kRecordHeaderSize + payload.size());
  out.push_back(std::byte(static_cast<uint8_t>(type)));
  put_u32(out, static_cast<uint32_t>(payload.size()));
  put_u32(out, record_checksum(payload));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

}  // namespace

std::vector<std::byte> frame_txn_record(RecordType type, const CompressedLv& clv,
                                        std::span<const std::byte> body) {
  std::vector<std::byte> payload;
  payload.reserve(clv.wire_size() + body.size());
  clv.encode(payload);
  payload.insert(payload.end(), body.begin(), body.end());
  return frame(type, payload);
}

std::vector<std::byte> frame_anchor_record(const LsnVector& plv) {
  std::vector<std::byte> payload;
  payload.reserve(plv.dims() * 8);
  for (uint32_t i = 0; i < plv.dims(); i++) put_u64(payload, plv[i]);
  return frame(RecordType::kAnchor, payload);
}

std::vector<std::byte> frame_padding_record(size_t total_size) {
  TAURUS_CHECK(total_size >= kRecordHeaderSize, "padding smaller than a header");
  std::vector<std::byte> payload(total_size - kRecordHeaderSize, std::byte{0});
  return frame(RecordType::kPadding, payload);
}

std::optional<ParsedRecord> parse_record(std::span<const std::byte> in, uint64_t start_lsn) {
  if (in.size() < kRecordHeaderSize) return std::nullopt;
  uint8_t raw_type = std::to_integer<uint8_t>(in[0]);
  if (raw_type != uint8_t(RecordType::kTxnData) && raw_type != uint8_t(RecordType::kTxnCommand) &&
      raw_type != uint8_t(RecordType::kAnchor) && raw_type != uint8_t(RecordType::kPadding))
    return std::nullopt;
  uint32_t body_len = get_u32(in.data() + 1);
  uint32_t stored_sum = get_u32(in.data() + 5);
  if (in.size() - kRecordHeaderSize < body_len) return std::nullopt;
  auto payload = in.subspan(kRecordHeaderSize, body_len);
  if (record_checksum(payload) != stored_sum) return std::nullopt;

  ParsedRecord rec;
  rec.type = static_cast<RecordType>(raw_type);
  rec.start_lsn = start_lsn;
  rec.end_lsn = start_lsn + kRecordHeaderSize + body_len;
  if (rec.type == RecordType::kTxnData || rec.type == RecordType::kTxnCommand) {
    size_t used = rec.clv.decode(payload);
    if (used == 0) return std::nullopt;
    rec.body = payload.subspan(used);
  } else {
    rec.body = payload;
  }
  return rec;
}

std::optional<LsnVector> parse_anchor_body(std::span<const std::byte> body, uint32_t n) {
  if (body.size() != size_t{n} * 8) return std::nullopt;
  LsnVector plv(n);
  for (uint32_t i = 0; i < n; i++) plv[i] = get_u64(body.data() + size_t{8} * i);
  return plv;
}

}  // namespace taurus
