#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The extropy-measures Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace extropy {

/// Broad failure class, used by the CLI to pick an exit code.
enum class ErrorCategory
{
  input,      ///< bad parameters, files, columns, samples
  numerical,  ///< quadrature, underflow, root bracketing
};

class Error : public std::runtime_error
{
public:
  Error(ErrorCategory category, std::string const &what)
    : std::runtime_error(what)
    , category_(category)
  {}

  ErrorCategory category() const noexcept
  {
    return category_;
  }

private:
  ErrorCategory category_;
};

#define EXTROPY_DEFINE_ERROR(Name, Category)                                 \
  class Name : public Error                                                  \
  {                                                                          \
  public:                                                                    \
    explicit Name(std::string const &what)                                   \
      : Error(ErrorCategory::Category, std::string(#Name ": ") + what)       \
    {}                                                                       \
  }

EXTROPY_DEFINE_ERROR(InvalidParameter, input);
EXTROPY_DEFINE_ERROR(InvalidModel, input);
EXTROPY_DEFINE_ERROR(InsufficientGrid, input);
EXTROPY_DEFINE_ERROR(FileNotFound, input);
EXTROPY_DEFINE_ERROR(MissingColumn, input);
EXTROPY_DEFINE_ERROR(TooFewObservations, input);
EXTROPY_DEFINE_ERROR(QuadratureFailure, numerical);
EXTROPY_DEFINE_ERROR(DenominatorUnderflow, numerical);
EXTROPY_DEFINE_ERROR(DegenerateSample, numerical);
EXTROPY_DEFINE_ERROR(NoBracket, numerical);
EXTROPY_DEFINE_ERROR(IoError, numerical);
EXTROPY_DEFINE_ERROR(StudyFailure, numerical);

#undef EXTROPY_DEFINE_ERROR

class ParseError : public Error
{
public:
  ParseError(std::size_t row, std::string column, std::string const &text)
    : Error(ErrorCategory::input, "ParseError: row " + std::to_string(row) + ", column '" +
                                      column + "': cannot parse '" + text + "'")
    , row_(row)
    , column_(std::move(column))
  {}

  std::size_t row() const noexcept
  {
    return row_;
  }
  std::string const &column() const noexcept
  {
    return column_;
  }

private:
  std::size_t row_;
  std::string column_;
};

}  // namespace extropy
