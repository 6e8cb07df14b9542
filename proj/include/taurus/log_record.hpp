#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taurus/lsn_vector.hpp"

namespace taurus {

// Framed, checksummed on-disk unit. Little-endian throughout.
//
//   [0]    type byte
//   [1,5)  body_len: u32, bytes following the header
//   [5,9)  checksum: crc32 over the body_len bytes after the header
//   [9,..) txn records: compressed LV field, then the data/command body
//          anchor records: full PLV, dims * 8 bytes
//          padding records: zero fill (a canceled reservation)
//
// End-LSN of a record = start offset + 9 + body_len; that end-LSN is the
// value returned to the committer.
enum class RecordType : uint8_t {
  kTxnData = 0xd1,
  kTxnCommand = 0xc2,
  kAnchor = 0xa3,
  kPadding = 0xf4,
};

inline constexpr size_t kRecordHeaderSize = 9;

struct DataWrite {
  uint32_t table_id = 0;
  uint64_t key = 0;
  std::vector<std::byte> after_image;
};

// Decoded view of one record.
struct ParsedRecord {
  RecordType type;
  uint64_t start_lsn = 0;
  uint64_t end_lsn = 0;
  CompressedLv clv;            // txn records only
  std::span<const std::byte> body;  // past the CLV field for txn records
};

uint32_t record_checksum(std::span<const std::byte> payload);

// Body builders. The CLV field is prepended by the framer, not included here.
void encode_data_body(const std::vector<DataWrite>& writes, std::vector<std::byte>& out);
void encode_command_body(uint32_t proc_id, std::span<const std::byte> params,
                         std::vector<std::byte>& out);

struct DecodedDataBody {
  // (table_id, key, image offset/len into the body span)
  struct Entry {
    uint32_t table_id;
    uint64_t key;
    size_t image_off;
    size_t image_len;
  };
  std::vector<Entry> entries;
  bool ok = false;
};
// Row widths are fixed per table; `width_of(table_id)` supplies them.
DecodedDataBody decode_data_body(std::span<const std::byte> body,
                                 const std::vector<uint32_t>& table_widths);

struct DecodedCommandBody {
  uint32_t proc_id = 0;
  std::span<const std::byte> params;
  bool ok = false;
};
DecodedCommandBody decode_command_body(std::span<const std::byte> body);

// Assembles a complete frame: header + CLV + body for txn records.
std::vector<std::byte> frame_txn_record(RecordType type, const CompressedLv& clv,
                                        std::span<const std::byte> body);
std::vector<std::byte> frame_anchor_record(const LsnVector& plv);
std::vector<std::byte> frame_padding_record(size_t total_size);

// Parses the record starting at in[0]. Returns nullopt on a torn or corrupt
// frame (short header, short body, bad checksum, bad CLV).
std::optional<ParsedRecord> parse_record(std::span<const std::byte> in, uint64_t start_lsn);

// Anchor payload -> PLV with `n` dims.
std::optional<LsnVector> parse_anchor_body(std::span<const std::byte> body, uint32_t n);

void put_u32(std::vector<std::byte>& out, uint32_t v);
void put_u64(std::vector<std::byte>& out, uint64_t v);
uint32_t get_u32(const std::byte* p);
uint64_t get_u64(const std::byte* p);

}  // namespace taurus
