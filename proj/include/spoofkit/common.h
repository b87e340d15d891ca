// spoofkit/common.h

// Copyright 2026  spoofkit authors

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

#ifndef SPOOFKIT_COMMON_H_
#define SPOOFKIT_COMMON_H_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spoofkit {

// Error taxonomy; the CLI maps these to exit codes (2, 3, 4).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string &msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Deterministic RNG. All randomness in the toolkit flows from one root
/// seed; independent streams are derived with Fork() using fixed labels so
/// that adding a consumer never shifts the draws of another.
///
/// Uniform and normal variates are generated directly from the raw 64-bit
/// stream (not via std:: distributions, whose output is
/// implementation-defined), so identical seeds give identical bytes on any
/// platform.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t NextU64();
  /// Uniform in [0, 1).
  double Uniform();
  /// Uniform in [lo, hi).
  double Uniform(double lo, double hi);
  /// Uniform integer in [lo, hi] (inclusive). Requires lo <= hi.
  int64_t UniformInt(int64_t lo, int64_t hi);
  /// Standard normal via Box-Muller.
  double Normal();

  /// Derives an independent stream from (root seed, label, index) without
  /// consuming state from this stream.
  Rng Fork(std::string_view label, uint64_t index = 0) const;

  std::string SerializeState() const;
  void DeserializeState(const std::string &state);

 private:
  uint64_t root_seed_;
  std::mt19937_64 gen_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

uint64_t Fnv1aHash(std::string_view s, uint64_t basis = 1469598103934665603ULL);

// ---- small string / file helpers ----

std::vector<std::string> SplitTsvLine(const std::string &line);
std::string JoinTsv(const std::vector<std::string> &fields);
std::vector<std::string> ReadLines(const std::string &path);
void WriteTextFile(const std::string &path, const std::string &content);
bool FileExists(const std::string &path);
void EnsureDir(const std::string &path);

/// Formats a double with enough digits to round-trip (used by the TSV logs,
/// which must be bit-reproducible across runs).
std::string FormatFull(double v);
std::string FormatFixed(double v, int digits);

}  // namespace spoofkit

#endif  // SPOOFKIT_COMMON_H_
