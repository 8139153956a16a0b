// voxanon/audio/waveform.h

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

#ifndef VOXANON_AUDIO_WAVEFORM_H_
#define VOXANON_AUDIO_WAVEFORM_H_

#include <filesystem>
#include <vector>

namespace voxanon {

/// Mono audio with amplitudes nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = 16000;

  std::size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate_hz;
  }
  /// Throws ArgumentError on a non-positive rate or non-finite samples.
  void Validate() const;
};

/// Reads a RIFF/WAVE file holding 16-bit signed little-endian mono PCM.
/// Samples are scaled by 1/32768.  Unsupported encodings or channel counts
/// raise FormatError; short reads raise IoError.
Waveform ReadWav(const std::filesystem::path &path);

/// Writes 16-bit PCM at the waveform's rate.  Samples are clamped to
/// [-1, 1] and quantized as round(x * 32768), saturating at 32767.
void WriteWav(const Waveform &wave, const std::filesystem::path &path);

/// 10*log10(signal energy / error energy); +inf for an exact match.
double SnrDb(const std::vector<double> &reference, const std::vector<double> &test);

}  // namespace voxanon

#endif  // VOXANON_AUDIO_WAVEFORM_H_
