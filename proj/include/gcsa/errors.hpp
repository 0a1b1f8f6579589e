// Copyright 2026 The GCSA-NA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gcsa {

// Root of every error raised by the library. Each subclass names one failure
// mode so callers (and tests) can match on the type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GCSA_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// Field and linear algebra.
GCSA_DEFINE_ERROR(DivisionByZero);
GCSA_DEFINE_ERROR(ShapeError);
GCSA_DEFINE_ERROR(SingularMatrix);
GCSA_DEFINE_ERROR(DegeneratePoints);
GCSA_DEFINE_ERROR(NotPrime);

// Block partitioning.
GCSA_DEFINE_ERROR(PartitionError);
GCSA_DEFINE_ERROR(IndexError);
GCSA_DEFINE_ERROR(IncompleteError);

// Protocol parameters and decoding.
GCSA_DEFINE_ERROR(InvalidParameter);
GCSA_DEFINE_ERROR(FieldTooSmall);
GCSA_DEFINE_ERROR(NotDivisible);
GCSA_DEFINE_ERROR(InsufficientServers);
GCSA_DEFINE_ERROR(NotEnoughAnswers);
GCSA_DEFINE_ERROR(InternalError);

// Baseline and Strassen variants.
GCSA_DEFINE_ERROR(UnsupportedPartition);
GCSA_DEFINE_ERROR(MissingServer);
GCSA_DEFINE_ERROR(ConsistencyError);
GCSA_DEFINE_ERROR(RankError);

// Simulation front end.
GCSA_DEFINE_ERROR(IncompleteTrace);
GCSA_DEFINE_ERROR(ConfigError);

#undef GCSA_DEFINE_ERROR

}  // namespace gcsa
