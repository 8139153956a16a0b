// voxanon/harness/manifest.h

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

#ifndef VOXANON_HARNESS_MANIFEST_H_
#define VOXANON_HARNESS_MANIFEST_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace voxanon {

enum class Gender { kFemale, kMale, kUnknown };
enum class SubsetRole { kEnrollment, kTrial };

std::string_view ToString(Gender g);
std::string_view ToString(SubsetRole r);

struct ManifestRecord {
  std::string utt_id;
  std::string speaker_id;
  Gender gender = Gender::kUnknown;
  SubsetRole role = SubsetRole::kTrial;
  std::string dataset_tag;
  /// As written in the manifest (relative paths are kept relative).
  std::filesystem::path audio_path;
};

struct Manifest {
  std::vector<ManifestRecord> records;
  /// Directory that relative audio paths are resolved against.
  std::filesystem::path base_dir;

  std::filesystem::path Resolve(const ManifestRecord &rec) const;
};

/**
   Loads a tab-separated manifest with six columns:

     utt_id  speaker_id  gender(F|M|unknown)  role(enrollment|trial)  dataset_tag  audio_path

   Blank lines and lines starting with '#' are skipped.  A malformed line
   raises ParseError with its line number; a duplicate utt_id or a repeated
   audio path raises ParseError naming it.  Audio files are not opened here.
*/
Manifest LoadManifest(const std::filesystem::path &path);

/// Writes the manifest in the format LoadManifest reads.
void WriteManifest(const Manifest &manifest, const std::filesystem::path &path);

}  // namespace voxanon

#endif  // VOXANON_HARNESS_MANIFEST_H_
