// voxanon/base/text.h

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

#ifndef VOXANON_BASE_TEXT_H_
#define VOXANON_BASE_TEXT_H_

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace voxanon {

std::vector<std::string> SplitTabs(std::string_view line);
std::vector<std::string> SplitWhitespace(std::string_view line);

/// Parses a finite double occupying the whole of `text`; throws
/// FormatError otherwise.
double ParseDouble(std::string_view text);

/// Shortest round-trippable decimal form of `v` ("%.17g" trimmed).
std::string FormatDouble(double v);

/// Fixed notation with `digits` decimals.
std::string FormatFixed(double v, int digits);

/// Calls fn(line, line_no) for each non-blank, non-'#' line of a text file,
/// with any trailing '\r' removed.  Throws IoError if the file can't be
/// opened.
void ForEachLine(const std::filesystem::path &path,
                 const std::function<void(const std::string &, std::size_t)> &fn);

}  // namespace voxanon

#endif  // VOXANON_BASE_TEXT_H_
