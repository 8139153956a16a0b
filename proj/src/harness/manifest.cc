// harness/manifest.cc

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

#include "voxanon/harness/manifest.h"

#include <fstream>
#include <set>

#include "voxanon/base/errors.h"
#include "voxanon/base/text.h"

namespace voxanon {

std::string_view ToString(Gender g) {
  switch (g) {
    case Gender::kFemale: return "F";
    case Gender::kMale: return "M";
    case Gender::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view ToString(SubsetRole r) {
  return r == SubsetRole::kEnrollment ? "enrollment" : "trial";
}

std::filesystem::path Manifest::Resolve(const ManifestRecord &rec) const {
  if (rec.audio_path.is_absolute() || base_dir.empty()) return rec.audio_path;
  return base_dir / rec.audio_path;
}

Manifest LoadManifest(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  Manifest manifest;
  manifest.base_dir = path.parent_path();
  std::set<std::string> seen_ids, seen_paths;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = SplitTabs(line);
    if (cols.size() != 6)
      throw ParseError(path.string(), line_no,
                       "expected 6 tab-separated columns, found " + std::to_string(cols.size()));
    for (const std::string &c : cols)
      if (c.empty()) throw ParseError(path.string(), line_no, "empty column");
    ManifestRecord rec;
    rec.utt_id = cols[0];
    rec.speaker_id = cols[1];
    if (cols[2] == "F" || cols[2] == "f" || cols[2] == "female") rec.gender = Gender::kFemale;
    else if (cols[2] == "M" || cols[2] == "m" || cols[2] == "male") rec.gender = Gender::kMale;
    else if (cols[2] == "unknown" || cols[2] == "U" || cols[2] == "-") rec.gender = Gender::kUnknown;
    else throw ParseError(path.string(), line_no, "bad gender '" + cols[2] + "'");
    if (cols[3] == "enrollment" || cols[3] == "enroll") rec.role = SubsetRole::kEnrollment;
    else if (cols[3] == "trial") rec.role = SubsetRole::kTrial;
    else throw ParseError(path.string(), line_no, "bad subset role '" + cols[3] + "'");
    rec.dataset_tag = cols[4];
    rec.audio_path = cols[5];
    if (!seen_ids.insert(rec.utt_id).second)
      throw ParseError(path.string(), line_no, "duplicate utt_id '" + rec.utt_id + "'");
    if (!seen_paths.insert(cols[5]).second)
      throw ParseError(path.string(), line_no, "duplicate audio path '" + cols[5] + "'");
    manifest.records.push_back(std::move(rec));
  }
  return manifest;
}

void WriteManifest(const Manifest &manifest, const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write manifest " + path.string());
  for (const ManifestRecord &r : manifest.records)
    out << r.utt_id << '\t' << r.speaker_id << '\t' << ToString(r.gender) << '\t'
        << ToString(r.role) << '\t' << r.dataset_tag << '\t' << r.audio_path.string() << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace voxanon
