// Copyright 2026 The lindprep Authors
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

#pragma once

#include <iosfwd>
#include <string>

#include "lindprep/types.hpp"

namespace lindprep {

// Plain-text matrix exchange format:
//
//   dim <rows> <cols>
//   <row> <col> <re> <im>
//   ...
//
// One line per nonzero entry, full double precision, omitted entries are zero.

void write_matrix_text(std::ostream& os, const Matrix& m);
void write_matrix_text_file(const std::string& path, const Matrix& m);

Matrix read_matrix_text(std::istream& is);
Matrix read_matrix_text_file(const std::string& path);

}  // namespace lindprep
