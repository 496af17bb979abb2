#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <string_view>

#include "factlink/common.hpp"

namespace factlink {

namespace detail {

inline std::uint16_t to_little(std::uint16_t v) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap16(v);
  return v;
}
inline std::uint32_t to_little(std::uint32_t v) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap32(v);
  return v;
}
inline std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) return __builtin_bswap64(v);
  return v;
}

}  // namespace detail

// Little-endian binary artifact writer.
class BinaryWriter {
 public:
  explicit BinaryWriter(const std::filesystem::path& path)
      : path_(path.string()), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw ArtifactError("cannot open for writing: " + path_);
  }

  void magic(std::string_view m) { out_.write(m.data(), static_cast<std::streamsize>(m.size())); }
  void u8(std::uint8_t v) { out_.put(static_cast<char>(v)); }
  void u32(std::uint32_t v) { raw(detail::to_little(v)); }
  void u64(std::uint64_t v) { raw(detail::to_little(v)); }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }

  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

  void u32_span(std::span<const std::uint32_t> values) {
    if constexpr (std::endian::native == std::endian::little) {
      out_.write(reinterpret_cast<const char*>(values.data()),
                 static_cast<std::streamsize>(values.size() * sizeof(std::uint32_t)));
    } else {
      for (std::uint32_t v : values) u32(v);
    }
  }

  void f32_span(std::span<const float> values) {
    if constexpr (std::endian::native == std::endian::little) {
      out_.write(reinterpret_cast<const char*>(values.data()),
                 static_cast<std::streamsize>(values.size() * sizeof(float)));
    } else {
      for (float v : values) f32(v);
    }
  }

  void finish() {
    out_.flush();
    if (!out_) throw ArtifactError("write failed: " + path_);
  }

 private:
  template <typename T>
  void raw(T v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }

  std::string path_;
  std::ofstream out_;
};

// Little-endian binary artifact reader.
class BinaryReader {
 public:
  explicit BinaryReader(const std::filesystem::path& path)
      : path_(path.string()), in_(path, std::ios::binary) {
    if (!in_) throw ArtifactError("cannot open: " + path_);
  }

  void expect_magic(std::string_view m, const char* what) {
    std::string buf(m.size(), '\0');
    in_.read(buf.data(), static_cast<std::streamsize>(m.size()));
    if (!in_ || buf != m) {
      throw ArtifactError(path_ + ": not a " + std::string(what) + " artifact (bad magic)");
    }
  }

  std::uint8_t u8() {
    char c = 0;
    in_.get(c);
    check();
    return static_cast<std::uint8_t>(c);
  }
  std::uint32_t u32() { return detail::to_little(raw<std::uint32_t>()); }
  std::uint64_t u64() { return detail::to_little(raw<std::uint64_t>()); }
  float f32() { return std::bit_cast<float>(u32()); }

  std::string str() {
    std::uint32_t n = u32();
    std::string s(n, '\0');
    in_.read(s.data(), n);
    check();
    return s;
  }

  void u32_into(std::span<std::uint32_t> out) {
    in_.read(reinterpret_cast<char*>(out.data()),
             static_cast<std::streamsize>(out.size() * sizeof(std::uint32_t)));
    check();
    if constexpr (std::endian::native == std::endian::big) {
      for (auto& v : out) v = detail::to_little(v);
    }
  }

  void f32_into(std::span<float> out) {
    in_.read(reinterpret_cast<char*>(out.data()),
             static_cast<std::streamsize>(out.size() * sizeof(float)));
    check();
    if constexpr (std::endian::native == std::endian::big) {
      for (auto& v : out) {
        auto u = detail::to_little(std::bit_cast<std::uint32_t>(v));
        v = std::bit_cast<float>(u);
      }
    }
  }

 private:
  template <typename T>
  T raw() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    check();
    return v;
  }

  void check() {
    if (!in_) throw ArtifactError(path_ + ": truncated artifact");
  }

  std::string path_;
  std::ifstream in_;
};

}  // namespace factlink
