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

#include "qtm/amplitude.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace qtm {

namespace {

std::string format_location(const std::string &message, std::size_t line, std::size_t column) {
    if (line == 0) {
        return "offset " + std::to_string(column) + ": " + message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

/// Recursive-descent scanner. Syntax failures are recorded (furthest position
/// wins) and reported by returning false; semantic failures throw.
struct Scanner {
    explicit Scanner(std::string_view text_in, std::size_t pos_in = 0) : text(text_in), pos(pos_in) {
    }

    std::string_view text;
    std::size_t pos = 0;
    std::size_t error_pos = 0;
    std::string error_message;

    bool fail(const std::string &message) {
        if (error_message.empty() || pos >= error_pos) {
            error_pos = pos;
            error_message = message;
        }
        return false;
    }

    void skip_space() {
        while (pos < text.size() && is_space(text[pos])) {
            ++pos;
        }
    }

    bool at(char c) const {
        return pos < text.size() && text[pos] == c;
    }

    bool eat(std::string_view token) {
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }

    bool integer(double &out) {
        std::size_t start = pos;
        while (pos < text.size() && is_digit(text[pos])) {
            ++pos;
        }
        if (start == pos) {
            return fail("expected an integer");
        }
        std::from_chars(text.data() + start, text.data() + pos, out);
        return true;
    }

    bool part(double &out) {
        std::size_t start = pos;
        bool negative = false;
        if (at('-')) {
            negative = true;
            ++pos;
            skip_space();
        }
        double numerator;
        if (!integer(numerator)) {
            pos = start;
            return false;
        }
        double value = numerator;
        std::size_t before_divisor = pos;
        skip_space();
        if (at('/')) {
            ++pos;
            skip_space();
            if (eat("sqrt")) {
                skip_space();
                if (!eat("(")) {
                    fail("expected '(' after sqrt");
                    pos = start;
                    return false;
                }
                skip_space();
                std::size_t arg_pos = pos;
                if (at('-')) {
                    throw ParseError("sqrt argument must be >= 1", 0, arg_pos);
                }
                double radicand;
                if (!integer(radicand)) {
                    pos = start;
                    return false;
                }
                if (radicand < 1) {
                    throw ParseError("sqrt argument must be >= 1", 0, arg_pos);
                }
                skip_space();
                if (!eat(")")) {
                    fail("expected ')'");
                    pos = start;
                    return false;
                }
                value = numerator / std::sqrt(radicand);
            } else {
                std::size_t denominator_pos = pos;
                double denominator;
                if (!integer(denominator)) {
                    pos = start;
                    return false;
                }
                if (denominator == 0) {
                    throw ParseError("division by zero", 0, denominator_pos);
                }
                value = numerator / denominator;
            }
        } else {
            pos = before_divisor;
        }
        out = negative ? -value : value;
        return true;
    }

    bool amplitude(Amplitude &out) {
        std::size_t start = pos;
        skip_space();
        double first;
        if (!part(first)) {
            pos = start;
            return false;
        }
        std::size_t after_first = pos;
        skip_space();
        if (at('i')) {
            ++pos;
            out = {0.0, first};
            return true;
        }
        if (at('+') || at('-')) {
            bool minus = at('-');
            ++pos;
            skip_space();
            double second;
            if (part(second)) {
                skip_space();
                if (at('i')) {
                    ++pos;
                    out = {first, minus ? -second : second};
                    return true;
                }
                fail("expected 'i' after imaginary part");
            }
        }
        pos = after_first;
        out = {first, 0.0};
        return true;
    }
};

std::string integer_digits(double value) {
    std::array<char, 512> buffer{};
    std::snprintf(buffer.data(), buffer.size(), "%.0f", value);
    return buffer.data();
}

bool reparses_exactly(const std::string &text, double value) {
    Scanner scanner(text);
    double parsed;
    return scanner.part(parsed) && scanner.pos == text.size() && parsed == value;
}

std::string render_part(double value) {
    if (value == 0) {
        return "0";
    }
    const double two_pow_53 = 9007199254740992.0;
    if (std::nearbyint(value) == value) {
        return integer_digits(value);
    }
    for (int radicand = 2; radicand <= 100; ++radicand) {
        int root = static_cast<int>(std::lround(std::sqrt(radicand)));
        if (root * root == radicand) {
            continue;
        }
        double numerator = std::nearbyint(value * std::sqrt(static_cast<double>(radicand)));
        if (numerator == 0 || std::abs(numerator) > 1000) {
            continue;
        }
        std::string candidate = integer_digits(numerator) + "/sqrt(" + std::to_string(radicand) + ")";
        if (reparses_exactly(candidate, value)) {
            return candidate;
        }
    }
    for (int denominator = 2; denominator <= 4096; ++denominator) {
        double numerator = std::nearbyint(value * denominator);
        if (numerator == 0 || std::abs(numerator) >= two_pow_53) {
            continue;
        }
        std::string candidate = integer_digits(numerator) + "/" + std::to_string(denominator);
        if (reparses_exactly(candidate, value)) {
            return candidate;
        }
    }
    // Exact dyadic form m / 2^k.
    int exponent;
    double fraction = std::frexp(value, &exponent);
    double mantissa = std::ldexp(fraction, 53);
    int scale = 53 - exponent;
    while (scale > 0 && std::fmod(mantissa, 2.0) == 0) {
        mantissa /= 2;
        --scale;
    }
    if (scale > 1023) {
        // 2^1023 is the largest power-of-two denominator the grammar can
        // express; tinier magnitudes round to the nearest multiple of 2^-1023.
        scale = 1023;
        mantissa = std::nearbyint(std::ldexp(value, scale));
        if (mantissa == 0) {
            return "0";
        }
        while (scale > 0 && std::fmod(mantissa, 2.0) == 0) {
            mantissa /= 2;
            --scale;
        }
    }
    return integer_digits(mantissa) + "/" + integer_digits(std::ldexp(1.0, scale));
}

}  // namespace

ParseError::ParseError(const std::string &message, std::size_t line, std::size_t column)
    : std::invalid_argument(format_location(message, line, column)), line_(line), column_(column), detail_(message) {
}

std::optional<Amplitude> parse_amplitude_prefix(std::string_view text, std::size_t &pos) {
    Scanner scanner(text, pos);
    Amplitude value;
    if (!scanner.amplitude(value)) {
        return std::nullopt;
    }
    scanner.skip_space();
    pos = scanner.pos;
    return value;
}

Amplitude parse_amplitude(std::string_view text) {
    Scanner scanner(text);
    Amplitude value;
    if (!scanner.amplitude(value)) {
        if (scanner.error_message.empty()) {
            throw ParseError("malformed amplitude", 0, scanner.pos);
        }
        throw ParseError(scanner.error_message, 0, scanner.error_pos);
    }
    scanner.skip_space();
    if (scanner.pos != text.size()) {
        if (!scanner.error_message.empty() && scanner.error_pos >= scanner.pos) {
            throw ParseError(scanner.error_message, 0, scanner.error_pos);
        }
        throw ParseError("unexpected trailing text", 0, scanner.pos);
    }
    return value;
}

std::string render_amplitude(Amplitude value) {
    double re = value.real();
    double im = value.imag();
    if (im == 0) {
        return render_part(re);
    }
    if (re == 0) {
        return render_part(im) + " i";
    }
    if (im < 0) {
        return render_part(re) + " - " + render_part(-im) + " i";
    }
    return render_part(re) + " + " + render_part(im) + " i";
}

}  // namespace qtm
