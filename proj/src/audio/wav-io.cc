// audio/wav-io.cc

// Copyright 2026  The voxanon Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "voxanon/audio/waveform.h"
#include "voxanon/base/errors.h"

namespace voxanon {

namespace {

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint16_t ReadLe16(const unsigned char *p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t ReadLe32(const unsigned char *p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void PutLe16(std::string *out, uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
}

void PutLe32(std::string *out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

int16_t Quantize(double x) {
  double clamped = std::clamp(x, -1.0, 1.0);
  double scaled = std::nearbyint(clamped * 32768.0);
  if (scaled > 32767.0) scaled = 32767.0;
  return static_cast<int16_t>(scaled);
}

}  // namespace

void Waveform::Validate() const {
  if (sample_rate_hz <= 0)
    throw ArgumentError("Waveform: sample rate must be positive, got " +
                        std::to_string(sample_rate_hz));
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (!std::isfinite(samples[i]))
      throw ArgumentError("Waveform: non-finite sample at index " + std::to_string(i));
}

Waveform ReadWav(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto *data = reinterpret_cast<const unsigned char *>(bytes.data());
  const std::size_t size = bytes.size();

  if (size < 12) throw IoError(path.string() + ": truncated RIFF header");
  if (std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0)
    throw FormatError(path.string() + ": not a RIFF/WAVE file");

  bool have_fmt = false;
  uint16_t channels = 0, bits = 0;
  uint32_t rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char *chunk = data + pos;
    uint32_t chunk_size = ReadLe32(chunk + 4);
    std::size_t body = pos + 8;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (chunk_size < 16 || body + chunk_size > size)
        throw IoError(path.string() + ": truncated fmt chunk");
      uint16_t format = ReadLe16(data + body);
      channels = ReadLe16(data + body + 2);
      rate = ReadLe32(data + body + 4);
      bits = ReadLe16(data + body + 14);
      if (format == kFormatExtensible) {
        if (chunk_size < 26) throw FormatError(path.string() + ": short extensible fmt chunk");
        format = ReadLe16(data + body + 24);  // first two bytes of the subformat GUID
      }
      if (format != kFormatPcm)
        throw FormatError(path.string() + ": unsupported encoding " + std::to_string(format));
      if (channels != 1)
        throw FormatError(path.string() + ": expected mono, found " +
                          std::to_string(channels) + " channels");
      if (bits != 16)
        throw FormatError(path.string() + ": expected 16-bit PCM, found " +
                          std::to_string(bits) + "-bit");
      if (rate == 0) throw FormatError(path.string() + ": zero sample rate");
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (!have_fmt) throw FormatError(path.string() + ": data chunk before fmt chunk");
      if (body + chunk_size > size) throw IoError(path.string() + ": truncated data chunk");
      if (chunk_size % 2 != 0) throw IoError(path.string() + ": odd PCM byte count");
      Waveform wave;
      wave.sample_rate_hz = static_cast<int>(rate);
      wave.samples.resize(chunk_size / 2);
      for (std::size_t i = 0; i < wave.samples.size(); ++i) {
        auto v = static_cast<int16_t>(ReadLe16(data + body + 2 * i));
        wave.samples[i] = v / 32768.0;
      }
      return wave;
    }
    pos = body + chunk_size + (chunk_size & 1u);
  }
  if (!have_fmt) throw FormatError(path.string() + ": missing fmt chunk");
  throw IoError(path.string() + ": missing data chunk");
}

void WriteWav(const Waveform &wave, const std::filesystem::path &path) {
  if (wave.sample_rate_hz <= 0) throw ArgumentError("WriteWav: invalid sample rate");
  const std::size_t n = wave.samples.size();
  if (n > (std::numeric_limits<uint32_t>::max() - 36) / 2)
    throw ArgumentError("WriteWav: waveform too long for RIFF");
  const auto data_bytes = static_cast<uint32_t>(2 * n);
  const auto rate = static_cast<uint32_t>(wave.sample_rate_hz);

  std::string out;
  out.reserve(44 + data_bytes);
  out.append("RIFF");
  PutLe32(&out, 36 + data_bytes);
  out.append("WAVEfmt ");
  PutLe32(&out, 16);
  PutLe16(&out, kFormatPcm);
  PutLe16(&out, 1);
  PutLe32(&out, rate);
  PutLe32(&out, rate * 2);
  PutLe16(&out, 2);
  PutLe16(&out, 16);
  out.append("data");
  PutLe32(&out, data_bytes);
  for (double x : wave.samples) PutLe16(&out, static_cast<uint16_t>(Quantize(x)));

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open for writing: " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw IoError("write failed: " + path.string());
}

double SnrDb(const std::vector<double> &reference, const std::vector<double> &test) {
  if (reference.size() != test.size())
    throw ArgumentError("SnrDb: length mismatch");
  double signal = 0.0, noise = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    signal += reference[i] * reference[i];
    double d = reference[i] - test[i];
    noise += d * d;
  }
  if (noise == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(signal / noise);
}

}  // namespace voxanon
