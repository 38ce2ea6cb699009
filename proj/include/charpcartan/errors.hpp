/*
   Copyright 2026 The charpcartan Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARPCARTAN_ERRORS_HPP
#define CHARPCARTAN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charpcartan {

/// Base of every domain error. `kind()` is the stable identifier surfaced by
/// the CLI as `error.kind`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define CHARPCARTAN_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

CHARPCARTAN_DEFINE_ERROR(InvalidPrime)
CHARPCARTAN_DEFINE_ERROR(DivisionByZero)
CHARPCARTAN_DEFINE_ERROR(RingMismatch)
CHARPCARTAN_DEFINE_ERROR(InvalidRing)
CHARPCARTAN_DEFINE_ERROR(NegativeExponentOnPolynomialVariable)
CHARPCARTAN_DEFINE_ERROR(NotInFrobeniusSubring)
CHARPCARTAN_DEFINE_ERROR(NotAUnit)
CHARPCARTAN_DEFINE_ERROR(DegreeError)
CHARPCARTAN_DEFINE_ERROR(NotClosed)
CHARPCARTAN_DEFINE_ERROR(InternalCartierError)
CHARPCARTAN_DEFINE_ERROR(AlgebraMismatch)
CHARPCARTAN_DEFINE_ERROR(InvalidStructureConstants)
CHARPCARTAN_DEFINE_ERROR(LevelError)
CHARPCARTAN_DEFINE_ERROR(IntegralityFailure)
CHARPCARTAN_DEFINE_ERROR(Overflow)
CHARPCARTAN_DEFINE_ERROR(UndeclaredVariable)
CHARPCARTAN_DEFINE_ERROR(InvalidArgument)

#undef CHARPCARTAN_DEFINE_ERROR

/// Malformed expression text; `position()` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("SyntaxError", message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace charpcartan

#endif  // CHARPCARTAN_ERRORS_HPP
