// Copyright 2026 The qtmlab Authors
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

#ifndef QTM_AMPLITUDE_H
#define QTM_AMPLITUDE_H

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qtm {

using Amplitude = std::complex<double>;

/// Default tolerance for norm and orthogonality checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// Error raised by every text-format parser in the library. `line` is 1-based
/// (0 when the input is a single expression); `column` is a 0-based byte
/// offset into that line.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, std::size_t line, std::size_t column);

    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }
    /// The message without the location prefix.
    const std::string &detail() const noexcept {
        return detail_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

/// Parses an amplitude literal.
///
/// Grammar (whitespace between tokens is ignored):
///
///     amp  ::= part | part ('+'|'-') part 'i' | part 'i'
///     part ::= ['-'] int [ '/' int | '/sqrt(' int ')' ]
///
/// Throws ParseError (line 0, column = byte offset) on malformed text,
/// division by zero, or a sqrt argument below 1.
Amplitude parse_amplitude(std::string_view text);

/// Parses the longest amplitude literal starting at `pos`. On success returns
/// the value and advances `pos` past it (and any trailing whitespace). On
/// failure returns nullopt and leaves `pos` untouched. Semantic errors
/// (zero denominator, bad sqrt argument) still throw.
std::optional<Amplitude> parse_amplitude_prefix(std::string_view text, std::size_t &pos);

/// Renders an amplitude in the literal grammar such that parsing the result
/// gives back exactly the same double-precision value. Integers, p/sqrt(r)
/// and small-denominator fractions are preferred; otherwise the exact dyadic
/// form m/2^k is used. Components below about 2^-970 in magnitude cannot be
/// written exactly with integer literals and round to the nearest multiple
/// of 2^-1023.
std::string render_amplitude(Amplitude value);

}  // namespace qtm

#endif
