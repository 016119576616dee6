// Copyright 2026 The hqng Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqng {

/// Malformed input text. `line()` is 1-based, 0 when not line specific.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &detail)
        : ParseError(std::string(), line, detail) {}
    /// Message reads `file:line: detail`.
    ParseError(const std::string &file, std::size_t line,
               const std::string &detail)
        : std::runtime_error(compose(file, line, detail)), line_(line),
          detail_(detail) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] const std::string &detail() const { return detail_; }

  private:
    static std::string compose(const std::string &file, std::size_t line,
                               const std::string &detail) {
        std::string where = file;
        if (line != 0) {
            where += (file.empty() ? "line " : ":") + std::to_string(line);
        }
        return where.empty() ? detail : where + ": " + detail;
    }

    std::size_t line_;
    std::string detail_;
};

/// Shapes or qubit counts that do not fit together.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A size guard (dense matrices, basis enumeration) was exceeded.
class SizeLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Exact solve requested on a singular or indefinite metric.
class SingularMetricError : public std::runtime_error {
  public:
    explicit SingularMetricError(double smallest_eigenvalue)
        : std::runtime_error("metric tensor is singular or indefinite "
                             "(smallest eigenvalue " +
                             std::to_string(smallest_eigenvalue) + ")"),
          smallest_eigenvalue_(smallest_eigenvalue) {}

    [[nodiscard]] double smallest_eigenvalue() const {
        return smallest_eigenvalue_;
    }

  private:
    double smallest_eigenvalue_;
};

} // namespace hqng
