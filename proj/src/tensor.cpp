// src/tensor.cpp

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

#include "babble/tensor.hpp"

#include <cstring>
#include <fstream>

#include "babble/error.hpp"

namespace babble {

namespace {

constexpr char kMagic[4] = {'B', 'T', 'F', '1'};

void PutU32(uint32_t v, std::string* out) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
}

uint32_t GetU32(const unsigned char* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

void PutF32(float v, std::string* out) {
  static_assert(sizeof(float) == 4, "float must be 32-bit");
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  PutU32(bits, out);
}

float GetF32(const unsigned char* p) {
  uint32_t bits = GetU32(p);
  float v;
  std::memcpy(&v, &bits, 4);
  return v;
}

}  // namespace

void WriteTensor(const std::string& path, const Matrix& m) {
  std::string buf;
  buf.reserve(16 + m.data.size() * 4);
  buf.append(kMagic, 4);
  PutU32(static_cast<uint32_t>(m.rows), &buf);
  PutU32(static_cast<uint32_t>(m.cols), &buf);
  PutU32(0, &buf);
  for (double v : m.data) PutF32(static_cast<float>(v), &buf);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot open for write: " + path);
  f.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!f) throw InputError("short write: " + path);
}

Matrix ReadTensor(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (buf.size() < 16) throw InputError("tensor file too short: " + path);
  const unsigned char* p = reinterpret_cast<const unsigned char*>(buf.data());
  if (std::memcmp(p, kMagic, 4) != 0) throw InputError("bad tensor magic: " + path);
  uint32_t rows = GetU32(p + 4);
  uint32_t cols = GetU32(p + 8);
  size_t need = 16 + static_cast<size_t>(rows) * cols * 4;
  if (buf.size() != need)
    throw InputError("tensor size mismatch in " + path + ": expected " +
                     std::to_string(need) + " bytes, got " + std::to_string(buf.size()));
  Matrix m(rows, cols);
  for (size_t i = 0; i < m.data.size(); ++i) m.data[i] = GetF32(p + 16 + i * 4);
  return m;
}

}  // namespace babble
