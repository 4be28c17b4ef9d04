/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace awgsen {

/**
 * Base-m multi-field address of a wavelength channel.
 *
 * Digits are stored most significant first: for an n-field address the
 * leading digit names the input/output group, the middle n-2 digits name
 * the port within the group, and the trailing digit selects the wavelength
 * channel on that fiber. Addresses are immutable values; every operation
 * returns a new address.
 */
class FieldAddress {
  public:
    FieldAddress(std::vector<int> digits, int base)
        : digits_(std::move(digits)), base_(base) {
        if (base_ < 1) {
            throw std::invalid_argument("address base must be >= 1");
        }
        if (digits_.empty()) {
            throw std::invalid_argument("address must have at least one field");
        }
        for (int d : digits_) {
            if (d < 0 || d >= base_) {
                throw std::out_of_range("address digit out of range for base " +
                                        std::to_string(base_));
            }
        }
    }

    int base() const { return base_; }
    int width() const { return static_cast<int>(digits_.size()); }
    const std::vector<int>& digits() const { return digits_; }
    int digit(int i) const { return digits_.at(static_cast<std::size_t>(i)); }

    /// Most significant field (the group field x_n).
    int leading() const { return digits_.front(); }
    /// Least significant field (the wavelength field x_1).
    int trailing() const { return digits_.back(); }

    /// Copy with the trailing field replaced.
    FieldAddress with_trailing(int d) const {
        if (d < 0 || d >= base_) {
            throw std::out_of_range("replacement digit out of range");
        }
        std::vector<int> ds = digits_;
        ds.back() = d;
        return FieldAddress(std::move(ds), base_);
    }

    bool operator==(const FieldAddress& other) const = default;

  private:
    std::vector<int> digits_;
    int base_;
};

/// Physical identity of a wavelength channel on one side of a stage:
/// a flat fiber index and a wavelength index into {λ_0, ..., λ_{m-1}}.
struct TwoTuple {
    std::uint64_t fiber = 0;
    int wavelength = 0;

    bool operator==(const TwoTuple&) const = default;
};

/// Positional value of the digit vector, most significant first.
/// Strictly monotone in lexicographic digit order.
inline std::uint64_t to_integer(const FieldAddress& addr) {
    std::uint64_t value = 0;
    for (int d : addr.digits()) {
        value = value * static_cast<std::uint64_t>(addr.base()) +
                static_cast<std::uint64_t>(d);
    }
    return value;
}

/// Inverse of to_integer for a fixed (base, width) shape.
inline FieldAddress from_integer(std::uint64_t value, int base, int width) {
    if (base < 1) {
        throw std::invalid_argument("address base must be >= 1");
    }
    if (width < 1) {
        throw std::invalid_argument("address width must be >= 1");
    }
    std::vector<int> digits(static_cast<std::size_t>(width), 0);
    std::uint64_t rest = value;
    for (int i = width - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] =
            static_cast<int>(rest % static_cast<std::uint64_t>(base));
        rest /= static_cast<std::uint64_t>(base);
    }
    if (rest != 0) {
        throw std::out_of_range("value does not fit in " + std::to_string(width) +
                                " base-" + std::to_string(base) + " fields");
    }
    return FieldAddress(std::move(digits), base);
}

/// Cyclic left shift by one field; applying it width() times is the identity.
inline FieldAddress rotate_left(const FieldAddress& addr) {
    std::vector<int> ds;
    ds.reserve(static_cast<std::size_t>(addr.width()));
    for (int i = 1; i < addr.width(); ++i) {
        ds.push_back(addr.digit(i));
    }
    ds.push_back(addr.digit(0));
    return FieldAddress(std::move(ds), addr.base());
}

/// Group / port / wavelength split of an n-field address:
/// p = leading field, a = value of the middle n-2 fields, q' = trailing field.
struct AddressFields {
    int group = 0;
    std::uint64_t port = 0;
    int wave = 0;
};

inline AddressFields split_fields(const FieldAddress& addr) {
    if (addr.width() < 2) {
        throw std::invalid_argument("field split needs width >= 2");
    }
    std::uint64_t port = 0;
    for (int i = 1; i + 1 < addr.width(); ++i) {
        port = port * static_cast<std::uint64_t>(addr.base()) +
               static_cast<std::uint64_t>(addr.digit(i));
    }
    return AddressFields{addr.leading(), port, addr.trailing()};
}

/// Two-tuple form of an input-side channel address: the fiber is the value
/// of the leading n-1 fields and the wavelength is [x_n + x_1] mod m.
/// A width-1 address has an empty fiber part; its group term is taken as 0,
/// so the digit itself is the wavelength on the single fiber.
inline TwoTuple field_to_tuple(const FieldAddress& addr) {
    if (addr.width() == 1) {
        return TwoTuple{0, addr.trailing()};
    }
    std::uint64_t fiber = 0;
    for (int i = 0; i + 1 < addr.width(); ++i) {
        fiber = fiber * static_cast<std::uint64_t>(addr.base()) +
                static_cast<std::uint64_t>(addr.digit(i));
    }
    return TwoTuple{fiber, (addr.leading() + addr.trailing()) % addr.base()};
}

/// Exact inverse of field_to_tuple: the trailing field is
/// [wavelength - leading] mod m.
inline FieldAddress tuple_to_field(const TwoTuple& t, int base, int width) {
    if (base < 1 || width < 1) {
        throw std::invalid_argument("bad address shape");
    }
    if (t.wavelength < 0 || t.wavelength >= base) {
        throw std::out_of_range("wavelength index out of range for base " +
                                std::to_string(base));
    }
    if (width == 1) {
        if (t.fiber != 0) {
            throw std::out_of_range("width-1 address has a single fiber");
        }
        return FieldAddress({t.wavelength}, base);
    }
    FieldAddress fiber_part = from_integer(t.fiber, base, width - 1);
    std::vector<int> ds = fiber_part.digits();
    int leading = ds.front();
    int trailing = t.wavelength - leading;
    trailing %= base;
    if (trailing < 0) {
        trailing += base;
    }
    ds.push_back(trailing);
    return FieldAddress(std::move(ds), base);
}

/// Canonical text form: concatenated digits for bases up to 10,
/// dot-separated decimal fields otherwise ("010" vs "0.1.0").
inline std::string to_text(const FieldAddress& addr) {
    std::string out;
    if (addr.base() <= 10) {
        for (int d : addr.digits()) {
            out += static_cast<char>('0' + d);
        }
    } else {
        for (int i = 0; i < addr.width(); ++i) {
            if (i > 0) {
                out += '.';
            }
            out += std::to_string(addr.digit(i));
        }
    }
    return out;
}

/// Parse the canonical text form for a known (base, width) shape.
inline FieldAddress parse_address(std::string_view text, int base, int width) {
    std::vector<int> ds;
    if (base <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("bad digit in address '" +
                                            std::string(text) + "'");
            }
            ds.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t dot = text.find('.', pos);
            std::string_view field =
                text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
            if (field.empty()) {
                throw std::invalid_argument("empty field in address '" +
                                            std::string(text) + "'");
            }
            int value = 0;
            for (char c : field) {
                if (c < '0' || c > '9') {
                    throw std::invalid_argument("bad digit in address '" +
                                                std::string(text) + "'");
                }
                value = value * 10 + (c - '0');
            }
            ds.push_back(value);
            if (dot == std::string_view::npos) {
                break;
            }
            pos = dot + 1;
        }
    }
    if (static_cast<int>(ds.size()) != width) {
        throw std::invalid_argument("address '" + std::string(text) + "' has " +
                                    std::to_string(ds.size()) + " fields, expected " +
                                    std::to_string(width));
    }
    return FieldAddress(std::move(ds), base);
}

}  // namespace awgsen
