// include/babble/tensor.hpp

// Copyright 2026  The Babble Authors

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

#ifndef BABBLE_TENSOR_HPP_
#define BABBLE_TENSOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace babble {

// Dense row-major matrix. Arithmetic is done in double; the on-disk format
// is float32 (see WriteTensor).
struct Matrix {
  int64_t rows = 0;
  int64_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int64_t r, int64_t c) : rows(r), cols(c), data(static_cast<size_t>(r * c), 0.0) {}

  double& at(int64_t r, int64_t c) { return data[static_cast<size_t>(r * cols + c)]; }
  double at(int64_t r, int64_t c) const { return data[static_cast<size_t>(r * cols + c)]; }
  double* row(int64_t r) { return data.data() + r * cols; }
  const double* row(int64_t r) const { return data.data() + r * cols; }
};

// Binary tensor file: 16-byte little-endian header
//   bytes 0..3   magic "BTF1"
//   bytes 4..7   uint32 rows
//   bytes 8..11  uint32 cols
//   bytes 12..15 uint32 reserved (0)
// followed by rows*cols float32 values, row-major, little-endian.
// Posterior grids use rows = T and cols = V+1; feature matrices rows = T and
// cols = D; flat parameter vectors rows = 1.
void WriteTensor(const std::string& path, const Matrix& m);
Matrix ReadTensor(const std::string& path);

}  // namespace babble

#endif  // BABBLE_TENSOR_HPP_
