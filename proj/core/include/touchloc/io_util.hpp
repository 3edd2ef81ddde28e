#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace touchloc {

// CRC-32 (IEEE 802.3, polynomial 0xEDB88320). crc32("123456789") == 0xCBF43926.
std::uint32_t crc32(const void* data, std::size_t size,
                    std::uint32_t seed = 0);

// FNV-1a 64-bit, used for content fingerprints.
std::uint64_t fnv1a(const void* data, std::size_t size,
                    std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hex64(std::uint64_t value);

// Little-endian binary append helpers (host is assumed little-endian; this is
// asserted at startup in io_util.cpp).
void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v);
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v);
void put_f32(std::vector<std::uint8_t>& out, float v);
void put_f64(std::vector<std::uint8_t>& out, double v);
void put_bytes(std::vector<std::uint8_t>& out, const void* data,
               std::size_t size);

// Bounds-checked little-endian reader.
class ByteReader {
 public:
  ByteReader(const std::uint8_t* data, std::size_t size)
      : data_(data), size_(size) {}

  std::uint32_t u32();
  std::uint64_t u64();
  float f32();
  double f64();
  std::uint16_t u16();
  void bytes(void* out, std::size_t n);
  void skip(std::size_t n);
  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return size_ - pos_; }

 private:
  void need(std::size_t n) const;
  const std::uint8_t* data_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

// Reads a whole file; throws IoError on failure.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

// Writes via a temporary file in the same directory plus an atomic rename, so
// no partial output file is ever observable.
void write_file_atomic(const std::filesystem::path& path, const void* data,
                       std::size_t size);
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& text);

// printf-style formatting into std::string.
std::string strfmt(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

}  // namespace touchloc
