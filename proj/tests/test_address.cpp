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
#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "awgsen/address.hpp"

namespace {

using namespace awgsen;

// Positional value computed right-to-left with an explicit weight, as an
// oracle independent of the left-to-right Horner accumulation in to_integer.
std::uint64_t positional_oracle(const std::vector<int>& digits, int base) {
    std::uint64_t value = 0;
    std::uint64_t weight = 1;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        value += static_cast<std::uint64_t>(*it) * weight;
        weight *= static_cast<std::uint64_t>(base);
    }
    return value;
}

TEST(FieldAddressTest, ToIntegerExamples) {
    EXPECT_EQ(to_integer(FieldAddress({0, 1, 1}, 3)), 4u);
    EXPECT_EQ(to_integer(FieldAddress({0, 0, 0}, 2)), 0u);
    EXPECT_EQ(positional_oracle({1, 0, 1}, 3), 10u);
    EXPECT_EQ(to_integer(FieldAddress({1, 0, 1}, 3)), 10u);
}

TEST(FieldAddressTest, FromIntegerExamples) {
    EXPECT_EQ(from_integer(4, 3, 3), FieldAddress({0, 1, 1}, 3));
    EXPECT_EQ(from_integer(0, 2, 3), FieldAddress({0, 0, 0}, 2));
    EXPECT_EQ(from_integer(10, 3, 3), FieldAddress({1, 0, 1}, 3));
}

TEST(FieldAddressTest, FromIntegerRejectsOutOfRange) {
    EXPECT_THROW(from_integer(27, 3, 3), std::out_of_range);
    EXPECT_THROW(from_integer(8, 2, 3), std::out_of_range);
    EXPECT_NO_THROW(from_integer(26, 3, 3));
}

TEST(FieldAddressTest, DigitRangeEnforced) {
    EXPECT_THROW(FieldAddress({0, 3}, 3), std::out_of_range);
    EXPECT_THROW(FieldAddress({-1, 0}, 3), std::out_of_range);
    EXPECT_THROW(FieldAddress({}, 3), std::invalid_argument);
}

TEST(FieldAddressTest, RoundTripExhaustive) {
    for (int base = 1; base <= 4; ++base) {
        for (int width = 1; width <= 4; ++width) {
            std::uint64_t count = 1;
            for (int i = 0; i < width; ++i) {
                count *= static_cast<std::uint64_t>(base);
            }
            for (std::uint64_t v = 0; v < count; ++v) {
                FieldAddress a = from_integer(v, base, width);
                EXPECT_EQ(to_integer(a), v);
                EXPECT_EQ(to_integer(a), positional_oracle(a.digits(), base));
                EXPECT_EQ(from_integer(to_integer(a), base, width), a);
            }
        }
    }
}

TEST(FieldAddressTest, IntegerOrderMatchesLexicographicOrder) {
    const int base = 3;
    const int width = 3;
    for (std::uint64_t v = 0; v + 1 < 27; ++v) {
        FieldAddress a = from_integer(v, base, width);
        FieldAddress b = from_integer(v + 1, base, width);
        EXPECT_LT(a.digits(), b.digits());  // vector's lexicographic <
    }
}

TEST(FieldAddressTest, RotateLeftExamples) {
    EXPECT_EQ(rotate_left(FieldAddress({0, 1, 0}, 2)), FieldAddress({1, 0, 0}, 2));
    EXPECT_EQ(rotate_left(FieldAddress({1, 1, 1}, 2)), FieldAddress({1, 1, 1}, 2));
    EXPECT_EQ(rotate_left(FieldAddress({2, 0, 1}, 3)), FieldAddress({0, 1, 2}, 3));
}

TEST(FieldAddressTest, RotateLeftWidthTimesIsIdentity) {
    for (int base = 2; base <= 3; ++base) {
        for (int width = 1; width <= 4; ++width) {
            std::uint64_t count = 1;
            for (int i = 0; i < width; ++i) {
                count *= static_cast<std::uint64_t>(base);
            }
            for (std::uint64_t v = 0; v < count; ++v) {
                FieldAddress a = from_integer(v, base, width);
                FieldAddress rotated = a;
                for (int i = 0; i < width; ++i) {
                    rotated = rotate_left(rotated);
                }
                EXPECT_EQ(rotated, a);
            }
        }
    }
}

TEST(FieldAddressTest, SplitFieldsExamples) {
    AddressFields f = split_fields(FieldAddress({0, 1, 0}, 3));
    EXPECT_EQ(f.group, 0);
    EXPECT_EQ(f.port, 1u);
    EXPECT_EQ(f.wave, 0);

    f = split_fields(FieldAddress({0, 0, 0}, 3));
    EXPECT_EQ(f.group, 0);
    EXPECT_EQ(f.port, 0u);
    EXPECT_EQ(f.wave, 0);

    f = split_fields(FieldAddress({2, 1, 0, 1}, 3));
    EXPECT_EQ(f.group, 2);
    EXPECT_EQ(f.port, 3u);  // middle digits 1,0 in base 3
    EXPECT_EQ(f.wave, 1);
}

TEST(FieldAddressTest, SplitFieldsNeedsTwoFields) {
    EXPECT_THROW(split_fields(FieldAddress({1}, 3)), std::invalid_argument);
}

TEST(FieldAddressTest, FieldToTupleExamples) {
    EXPECT_EQ(field_to_tuple(FieldAddress({0, 1, 0}, 3)), (TwoTuple{1, 0}));
    EXPECT_EQ(field_to_tuple(FieldAddress({0, 0, 0}, 3)), (TwoTuple{0, 0}));
    EXPECT_EQ(field_to_tuple(FieldAddress({1, 0, 1}, 3)), (TwoTuple{3, 2}));
}

TEST(FieldAddressTest, TupleToFieldExamples) {
    EXPECT_EQ(tuple_to_field(TwoTuple{1, 0}, 3, 3), FieldAddress({0, 1, 0}, 3));
    EXPECT_EQ(tuple_to_field(TwoTuple{0, 0}, 3, 4), FieldAddress({0, 0, 0, 0}, 3));
    EXPECT_EQ(tuple_to_field(TwoTuple{3, 2}, 3, 3), FieldAddress({1, 0, 1}, 3));
}

TEST(FieldAddressTest, TupleToFieldRejectsBadWavelength) {
    EXPECT_THROW(tuple_to_field(TwoTuple{0, 3}, 3, 3), std::out_of_range);
    EXPECT_THROW(tuple_to_field(TwoTuple{9, 0}, 3, 3), std::out_of_range);
}

TEST(FieldAddressTest, TupleConversionIsABijection) {
    for (int base = 2; base <= 4; ++base) {
        for (int width = 2; width <= 4; ++width) {
            std::uint64_t count = 1;
            for (int i = 0; i < width; ++i) {
                count *= static_cast<std::uint64_t>(base);
            }
            std::vector<bool> seen(count, false);
            for (std::uint64_t v = 0; v < count; ++v) {
                FieldAddress a = from_integer(v, base, width);
                TwoTuple t = field_to_tuple(a);
                EXPECT_LT(t.wavelength, base);
                std::uint64_t flat =
                    t.fiber * static_cast<std::uint64_t>(base) +
                    static_cast<std::uint64_t>(t.wavelength);
                EXPECT_FALSE(seen[flat]);  // injective over all addresses
                seen[flat] = true;
                EXPECT_EQ(tuple_to_field(t, base, width), a);
            }
        }
    }
}

TEST(FieldAddressTest, WidthOneTupleConvention) {
    // no group field: the digit is the wavelength on the single fiber
    EXPECT_EQ(field_to_tuple(FieldAddress({2}, 3)), (TwoTuple{0, 2}));
    EXPECT_EQ(tuple_to_field(TwoTuple{0, 2}, 3, 1), FieldAddress({2}, 3));
}

TEST(AddressTextTest, CanonicalConcatenatedForm) {
    EXPECT_EQ(to_text(FieldAddress({0, 1, 0}, 3)), "010");
    EXPECT_EQ(parse_address("010", 3, 3), FieldAddress({0, 1, 0}, 3));
    EXPECT_EQ(parse_address("111", 3, 3), FieldAddress({1, 1, 1}, 3));
}

TEST(AddressTextTest, DottedFormForLargeBases) {
    FieldAddress a({11, 0, 7}, 12);
    EXPECT_EQ(to_text(a), "11.0.7");
    EXPECT_EQ(parse_address("11.0.7", 12, 3), a);
}

TEST(AddressTextTest, ParseErrors) {
    EXPECT_THROW(parse_address("01", 3, 3), std::invalid_argument);
    EXPECT_THROW(parse_address("0a0", 3, 3), std::invalid_argument);
    EXPECT_THROW(parse_address("040", 3, 3), std::out_of_range);
    EXPECT_THROW(parse_address("1..2", 12, 3), std::invalid_argument);
}

}  // namespace
