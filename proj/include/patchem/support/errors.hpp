//
// Project PatChem - Copyright 2026 PatChem Contributors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef PATCHEM_SUPPORT_ERRORS_HPP_
#define PATCHEM_SUPPORT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchem {

// Root of every error this library raises on purpose. Callers that want
// blanket recovery (batch runners, the CLI) catch this; everything else
// catches the specific type it can handle.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

class WidthMismatchError : public Error {
 public:
  using Error::Error;
};

class DegenerateLabelsError : public Error {
 public:
  using Error::Error;
};

class TooFewRowsError : public Error {
 public:
  using Error::Error;
};

class ColumnMismatchError : public Error {
 public:
  ColumnMismatchError(std::vector<std::string> missing,
                      std::vector<std::string> extra);

  const std::vector<std::string> &missing() const { return missing_; }
  const std::vector<std::string> &extra() const { return extra_; }

 private:
  std::vector<std::string> missing_;
  std::vector<std::string> extra_;
};

class EmptySpaceError : public Error {
 public:
  using Error::Error;
};

class SchemaVersionError : public Error {
 public:
  using Error::Error;
};

class NoValidCandidateError : public Error {
 public:
  using Error::Error;
};

class UnlabeledReportError : public Error {
 public:
  using Error::Error;
};

// CSV-level problem; line numbers are 1-based and refer to physical records.
class CsvFormatError : public Error {
 public:
  CsvFormatError(std::size_t line_no, const std::string &what)
      : Error("line " + std::to_string(line_no) + ": " + what),
        line_no_(line_no) {}

  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class DuplicateCompoundIdError : public Error {
 public:
  using Error::Error;
};

class MultipleCoresError : public Error {
 public:
  explicit MultipleCoresError(const std::string &patent_id)
      : Error("patent " + patent_id + " labels more than one core compound"),
        patent_id_(patent_id) {}

  const std::string &patent_id() const { return patent_id_; }

 private:
  std::string patent_id_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace patchem

#endif  // PATCHEM_SUPPORT_ERRORS_HPP_
