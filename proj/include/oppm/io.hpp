#pragma once

#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "oppm/core.hpp"

namespace oppm {

// Sequence files come in two flavors:
//  text   - whitespace/newline separated decimal literals
//  binary - "OPSQ", 1 byte type code (0=i32, 1=i64, 2=f64), u64 LE count,
//           then the elements packed little-endian.

enum class ElementType : std::uint8_t { i32 = 0, i64 = 1, f64 = 2 };

using AnySequence = std::variant<Sequence<std::int32_t>, Sequence<std::int64_t>, Sequence<double>>;

inline constexpr std::string_view binary_magic = "OPSQ";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <Element T>
constexpr ElementType element_type_of() noexcept {
  if constexpr (std::is_same_v<T, std::int32_t>) return ElementType::i32;
  else if constexpr (std::is_same_v<T, std::int64_t>) return ElementType::i64;
  else return ElementType::f64;
}

inline std::optional<ElementType> parse_element_type(std::string_view s) noexcept {
  if (s == "i32") return ElementType::i32;
  if (s == "i64") return ElementType::i64;
  if (s == "f64") return ElementType::f64;
  return std::nullopt;
}

namespace detail {

template <typename U>
void put_le(std::string& out, U v) {
  for (std::size_t b = 0; b < sizeof(U); ++b)
    out.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xffu));
}

template <typename U>
U get_le(std::string_view in, std::size_t at) {
  std::uint64_t v = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[at + b])) << (8 * b);
  return static_cast<U>(v);
}

template <Element T>
auto to_bits(T v) {
  if constexpr (std::is_same_v<T, double>) return std::bit_cast<std::uint64_t>(v);
  else if constexpr (std::is_same_v<T, std::int64_t>) return static_cast<std::uint64_t>(v);
  else return static_cast<std::uint32_t>(v);
}

template <Element T>
T from_bits(std::string_view in, std::size_t at) {
  if constexpr (std::is_same_v<T, double>) return std::bit_cast<double>(get_le<std::uint64_t>(in, at));
  else if constexpr (std::is_same_v<T, std::int64_t>) return static_cast<std::int64_t>(get_le<std::uint64_t>(in, at));
  else return static_cast<std::int32_t>(get_le<std::uint32_t>(in, at));
}

template <Element T>
Sequence<T> decode_binary_elements(std::string_view bytes, std::uint64_t count) {
  const std::size_t header = binary_magic.size() + 1 + 8;
  const std::size_t body = bytes.size() - header;
  if (count > body / sizeof(T) || body != count * sizeof(T))
    throw FormatError("binary sequence length does not match its element count");
  std::vector<T> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = from_bits<T>(bytes, header + i * sizeof(T));
  return Sequence<T>(std::move(v));
}

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace detail

[[nodiscard]] inline bool looks_binary(std::string_view bytes) noexcept {
  return bytes.substr(0, binary_magic.size()) == binary_magic;
}

template <Element T>
[[nodiscard]] std::string encode_binary(const Sequence<T>& s) {
  std::string out(binary_magic);
  out.push_back(static_cast<char>(element_type_of<T>()));
  detail::put_le<std::uint64_t>(out, s.size());
  for (std::size_t i = 0; i < s.size(); ++i) detail::put_le(out, detail::to_bits(s[i]));
  return out;
}

[[nodiscard]] inline AnySequence decode_binary(std::string_view bytes) {
  const std::size_t header = binary_magic.size() + 1 + 8;
  if (bytes.size() < header || !looks_binary(bytes)) throw FormatError("not an OPSQ file");
  const auto code = static_cast<unsigned char>(bytes[binary_magic.size()]);
  const auto count = detail::get_le<std::uint64_t>(bytes, binary_magic.size() + 1);
  switch (code) {
    case 0: return detail::decode_binary_elements<std::int32_t>(bytes, count);
    case 1: return detail::decode_binary_elements<std::int64_t>(bytes, count);
    case 2: return detail::decode_binary_elements<double>(bytes, count);
    default: throw FormatError("unknown element type code " + std::to_string(code));
  }
}

/// One decimal literal per element, newline separated. Doubles use the
/// shortest round-trip form.
template <Element T>
[[nodiscard]] std::string encode_text(const Sequence<T>& s) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, s[i]);
    out.append(buf, end);
    out.push_back('\n');
  }
  return out;
}

template <Element T>
[[nodiscard]] Sequence<T> decode_text(std::string_view text) {
  std::vector<T> v;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && detail::is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !detail::is_space(text[end])) ++end;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    // from_chars rejects a leading '+'.
    if (*first == '+' && last - first > 1) ++first;
    T value{};
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      throw FormatError("bad element literal '" + std::string(text.substr(pos, end - pos)) + "'");
    v.push_back(value);
    pos = end;
  }
  return Sequence<T>(std::move(v));
}

[[nodiscard]] inline AnySequence decode_text(std::string_view text, ElementType type) {
  switch (type) {
    case ElementType::i32: return decode_text<std::int32_t>(text);
    case ElementType::i64: return decode_text<std::int64_t>(text);
    case ElementType::f64: break;
  }
  return decode_text<double>(text);
}

[[nodiscard]] inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Reads either format; `text_type` selects the element domain for text files.
[[nodiscard]] inline AnySequence read_sequence_file(const std::string& path,
                                                    ElementType text_type) {
  const std::string bytes = read_file(path);
  return looks_binary(bytes) ? decode_binary(bytes) : decode_text(bytes, text_type);
}

template <Element T>
void write_sequence_file(const std::string& path, const Sequence<T>& s, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  const std::string bytes = binary ? encode_binary(s) : encode_text(s);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Converts between element domains (values are cast, not rescaled).
template <Element T>
[[nodiscard]] Sequence<T> convert(const AnySequence& any) {
  return std::visit(
      [](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Sequence<T>>) {
          return s;
        } else {
          std::vector<T> v(s.size());
          for (std::size_t i = 0; i < s.size(); ++i) v[i] = static_cast<T>(s[i]);
          return Sequence<T>(std::move(v));
        }
      },
      any);
}

}  // namespace oppm
