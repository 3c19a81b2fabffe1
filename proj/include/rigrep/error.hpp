/* Copyright 2026 The rigrep Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RIGREP_ERROR_HPP_
#define RIGREP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rigrep {

/// Base of every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table failed one of the structure's laws. `law()` names the law and
/// `witness()` holds the offending element indices (one to three of them).
class AxiomViolation : public AlgebraError {
 public:
  AxiomViolation(std::string law, std::vector<std::size_t> witness,
                 const std::string& detail = {});

  const std::string& law() const { return law_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::string law_;
  std::vector<std::size_t> witness_;
};

/// Tables that are not square or contain out-of-range entries.
class MalformedTable : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotIntegral : public AlgebraError {
 public:
  explicit NotIntegral(const std::string& rig)
      : AlgebraError("rig '" + rig + "' is not integral (1 + x = 1 fails)") {}
};

class TrivialSource : public AlgebraError {
 public:
  explicit TrivialSource(const std::string& rig)
      : AlgebraError("rig '" + rig + "' is trivial (0 = 1)") {}
};

class NotBoolean : public AlgebraError {
 public:
  explicit NotBoolean(const std::string& elem)
      : AlgebraError("element '" + elem + "' has no Boolean complement") {}
};

class NotStronglyIdempotent : public AlgebraError {
 public:
  explicit NotStronglyIdempotent(const std::string& elem)
      : AlgebraError("element '" + elem + "' is not strongly idempotent") {}
};

class NotLattice : public AlgebraError {
 public:
  explicit NotLattice(const std::string& rig)
      : AlgebraError("rig '" + rig + "' is not a distributive lattice") {}
};

class NotIdempotentAddition : public AlgebraError {
 public:
  explicit NotIdempotentAddition(const std::string& rig)
      : AlgebraError("rig '" + rig + "' has non-idempotent addition") {}
};

class NotPrelinear : public AlgebraError {
 public:
  explicit NotPrelinear(const std::string& rig)
      : AlgebraError("rig '" + rig + "' is not pre-linear") {}
};

class NotMVRig : public AlgebraError {
 public:
  explicit NotMVRig(const std::string& rig)
      : AlgebraError("rig '" + rig + "' is not an MV-rig") {}
};

class NotPrime : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Raised when a map that theory guarantees cannot be constructed. Seeing it
/// means a bug in the library, not bad input.
class NoSuchFactorization : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NoLargestWitness : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NoModelFound : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Document-level problems; `where()` is a line number or field path.
class ParseError : public AlgebraError {
 public:
  ParseError(std::string where, const std::string& what)
      : AlgebraError(where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace rigrep

#endif  // RIGREP_ERROR_HPP_
