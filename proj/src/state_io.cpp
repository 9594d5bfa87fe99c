// Copyright 2026 The entspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "entspec/error.hpp"
#include "entspec/state.hpp"

namespace entspec {
namespace {

constexpr char kMagic[4] = {'Q', 'S', 'V', '1'};
constexpr std::size_t kHeaderBytes = 16;

void put_le(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, int bytes) {
  std::uint64_t value = 0;
  for (int i = 0; i < bytes; ++i) value |= std::uint64_t{in[offset + i]} << (8 * i);
  return value;
}

// Disk data is allowed a looser norm; rescale only when outside the
// in-memory tolerance so binary round trips stay bit-exact.
PureState finish_loaded(unsigned n, std::vector<Complex> z) {
  const double norm2 = norm_squared(z);
  const double deviation = std::abs(norm2 - 1.0);
  if (!(deviation <= kLoadNormTolerance)) {
    throw FormatError("normalization violated: sum |z_k|^2 = " + std::to_string(norm2) +
                      " (tolerance " + std::to_string(kLoadNormTolerance) + ")");
  }
  if (deviation > kNormTolerance) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex& c : z) c *= scale;
  }
  return PureState(n, std::move(z));
}

void check_loaded_qubits(std::uint64_t n) {
  if (n < 1 || n > kMaxQubits) {
    throw FormatError("qubit count " + std::to_string(n) + " outside supported range [1, " +
                      std::to_string(kMaxQubits) + "]");
  }
}

PureState decode_binary(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) throw FormatError("malformed header: file shorter than 16 bytes");
  const std::uint64_t n = get_le(bytes, 4, 4);
  const std::uint64_t count = get_le(bytes, 8, 8);
  check_loaded_qubits(n);
  const std::uint64_t expected = std::uint64_t{1} << n;
  if (count != expected) {
    throw FormatError("length mismatch: header claims " + std::to_string(count) +
                      " amplitudes but n=" + std::to_string(n) + " requires " +
                      std::to_string(expected));
  }
  const std::size_t payload = bytes.size() - kHeaderBytes;
  if (payload != 16 * count) {
    throw FormatError("length mismatch: expected " + std::to_string(16 * count) +
                      " payload bytes for " + std::to_string(count) + " amplitudes, found " +
                      std::to_string(payload));
  }
  std::vector<Complex> z(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t at = kHeaderBytes + 16 * k;
    z[k] = Complex(std::bit_cast<double>(get_le(bytes, at, 8)),
                   std::bit_cast<double>(get_le(bytes, at + 8, 8)));
  }
  return finish_loaded(static_cast<unsigned>(n), std::move(z));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  field = trim(field);
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw FormatError("line " + std::to_string(line_no) + ": cannot parse '" +
                      std::string(field) + "'");
  }
  return value;
}

PureState decode_text(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned n = 0;
  std::vector<Complex> z;
  std::vector<bool> seen;

  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      if (!line.starts_with("n=")) {
        throw FormatError("malformed header: expected 'QSV1' magic or 'n=<n>' on line " +
                          std::to_string(line_no));
      }
      const auto parsed = parse_number<std::uint64_t>(line.substr(2), line_no);
      check_loaded_qubits(parsed);
      n = static_cast<unsigned>(parsed);
      z.assign(std::size_t{1} << n, Complex{});
      seen.assign(z.size(), false);
      have_header = true;
      continue;
    }

    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos || line.find(',', c2 + 1) != std::string_view::npos) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 'index,re,im'");
    }
    const auto k = parse_number<std::uint64_t>(line.substr(0, c1), line_no);
    if (k >= z.size()) {
      throw FormatError("line " + std::to_string(line_no) + ": index " + std::to_string(k) +
                        " out of range for n=" + std::to_string(n));
    }
    if (seen[k]) {
      throw FormatError("line " + std::to_string(line_no) + ": duplicate index " +
                        std::to_string(k));
    }
    seen[k] = true;
    z[k] = Complex(parse_number<double>(line.substr(c1 + 1, c2 - c1 - 1), line_no),
                   parse_number<double>(line.substr(c2 + 1), line_no));
  }
  if (!have_header) throw FormatError("malformed header: empty state file");
  return finish_loaded(n, std::move(z));
}

} // namespace

std::vector<std::uint8_t> encode_qsv1(const PureState& state) {
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + 16 * state.dimension());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  put_le(out, state.qubits(), 4);
  put_le(out, state.dimension(), 8);
  for (const Complex& c : state.amplitudes()) {
    put_le(out, std::bit_cast<std::uint64_t>(c.real()), 8);
    put_le(out, std::bit_cast<std::uint64_t>(c.imag()), 8);
  }
  return out;
}

PureState decode_state(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) return decode_binary(bytes);
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  return decode_text(text);
}

void save_state(const PureState& state, const std::filesystem::path& path) {
  const auto bytes = encode_qsv1(state);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

PureState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return decode_state(bytes);
}

} // namespace entspec
