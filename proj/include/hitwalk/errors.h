// Copyright 2026 The hitwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HITWALK_ERRORS_H
#define HITWALK_ERRORS_H

#include <stdexcept>
#include <string>

namespace hitwalk {

/// Broad class of a failure; the CLI maps each to its own exit code.
enum class ErrorKind {
    usage,      // bad input, violated precondition
    numerical,  // the mathematics has no finite answer or did not converge
    io,
};

/// Base of every structured error raised by the library. `name()` is the
/// stable identifier surfaced by the CLI (e.g. "InfiniteMHT").
class Error : public std::runtime_error {
   public:
    Error(std::string name, ErrorKind kind, const std::string &message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)), kind_(kind) {}

    const std::string &name() const noexcept { return name_; }
    ErrorKind kind() const noexcept { return kind_; }

   private:
    std::string name_;
    ErrorKind kind_;
};

#define HITWALK_DEFINE_ERROR(Type, Kind)                                                 \
    class Type : public Error {                                                          \
       public:                                                                           \
        explicit Type(const std::string &message) : Error(#Type, Kind, message) {}       \
    }

HITWALK_DEFINE_ERROR(DimensionMismatch, ErrorKind::usage);
HITWALK_DEFINE_ERROR(NonFiniteValue, ErrorKind::usage);
HITWALK_DEFINE_ERROR(InvalidGeometry, ErrorKind::usage);
HITWALK_DEFINE_ERROR(InvalidCoin, ErrorKind::usage);
HITWALK_DEFINE_ERROR(InvalidChannel, ErrorKind::usage);
HITWALK_DEFINE_ERROR(InvalidArgument, ErrorKind::usage);
HITWALK_DEFINE_ERROR(LatticeTooSmall, ErrorKind::usage);
HITWALK_DEFINE_ERROR(SingularMatrix, ErrorKind::numerical);
HITWALK_DEFINE_ERROR(InfiniteMHT, ErrorKind::numerical);
HITWALK_DEFINE_ERROR(NonConvergent, ErrorKind::numerical);
HITWALK_DEFINE_ERROR(CensoringTooHigh, ErrorKind::numerical);
HITWALK_DEFINE_ERROR(PoleEncountered, ErrorKind::numerical);
HITWALK_DEFINE_ERROR(IoError, ErrorKind::io);

#undef HITWALK_DEFINE_ERROR

}  // namespace hitwalk

#endif  // HITWALK_ERRORS_H
