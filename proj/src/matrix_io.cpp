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

#include "lindprep/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace lindprep {

void write_matrix_text(std::ostream& os, const Matrix& m) {
  os << "dim " << m.rows() << " " << m.cols() << "\n";
  for (int c = 0; c < m.cols(); ++c) {
    for (int r = 0; r < m.rows(); ++r) {
      Complex v = m(r, c);
      if (v == Complex(0.0, 0.0)) continue;
      os << r << " " << c << " " << format_double(v.real()) << " " << format_double(v.imag()) << "\n";
    }
  }
}

void write_matrix_text_file(const std::string& path, const Matrix& m) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open for writing: " + path);
  write_matrix_text(os, m);
  os.flush();
  if (!os) throw IoError("write failed: " + path);
}

Matrix read_matrix_text(std::istream& is) {
  std::string line;
  long rows = -1, cols = -1;
  Matrix m;
  std::vector<char> seen;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    // strip comments and blank lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "dim") {
      if (rows >= 0) throw IoError("matrix text: duplicate dim line at line " + std::to_string(line_no));
      if (!(ls >> rows >> cols) || rows < 0 || cols < 0) {
        throw IoError("matrix text: malformed dim line at line " + std::to_string(line_no));
      }
      m = Matrix::Zero(rows, cols);
      seen.assign(static_cast<std::size_t>(rows * cols), 0);
      continue;
    }
    if (rows < 0) throw IoError("matrix text: entry before dim line at line " + std::to_string(line_no));
    long r, c;
    double re, im;
    std::istringstream es(line);
    if (!(es >> r >> c >> re >> im)) {
      throw IoError("matrix text: malformed entry at line " + std::to_string(line_no));
    }
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw IoError("matrix text: index out of range at line " + std::to_string(line_no));
    }
    char& mark = seen[static_cast<std::size_t>(c * rows + r)];
    if (mark) throw IoError("matrix text: duplicate entry at line " + std::to_string(line_no));
    mark = 1;
    m(r, c) = Complex(re, im);
  }
  if (rows < 0) throw IoError("matrix text: missing dim line");
  return m;
}

Matrix read_matrix_text_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open for reading: " + path);
  return read_matrix_text(is);
}

}  // namespace lindprep
