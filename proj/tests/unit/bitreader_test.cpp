#include <gtest/gtest.h>

#include <vector>

#include "mp3sa/bitreader.hpp"
#include "mp3sa/error.hpp"
#include "mp3sa/rng.hpp"
#include "../support/oracles.hpp"

using namespace mp3sa;

TEST(BitReader, ReadsMsbFirst) {
    const std::vector<std::uint8_t> bytes = {0b10110010, 0xFF, 0x01};
    BitReader r(bytes);
    EXPECT_EQ(r.read(1), 1u);
    EXPECT_EQ(r.read(3), 0b011u);
    EXPECT_EQ(r.read(4), 0b0010u);
    EXPECT_EQ(r.read(12), 0xFF0u);
    EXPECT_EQ(r.remaining(), 4u);
    EXPECT_EQ(r.read(4), 1u);
    EXPECT_EQ(r.remaining(), 0u);
}

TEST(BitReader, ZeroWidthReadConsumesNothing) {
    const std::vector<std::uint8_t> bytes = {0xAB};
    BitReader r(bytes);
    EXPECT_EQ(r.read(0), 0u);
    EXPECT_EQ(r.position(), 0u);
}

TEST(BitReader, Reads32Bits) {
    const std::vector<std::uint8_t> bytes = {0xDE, 0xAD, 0xBE, 0xEF, 0x80};
    BitReader r(bytes);
    r.skip(1);
    EXPECT_EQ(r.read(32), 0xBD5B7DDFu);
}

TEST(BitReader, TruncationThrows) {
    const std::vector<std::uint8_t> bytes = {0xAB};
    BitReader r(bytes);
    r.read(5);
    try {
        r.read(4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kTruncated);
    }
    EXPECT_EQ(r.position(), 5u);
}

TEST(BitReader, LimitedLength) {
    const std::vector<std::uint8_t> bytes = {0xFF, 0xFF};
    BitReader r(bytes, 10);
    EXPECT_EQ(r.size_bits(), 10u);
    EXPECT_EQ(r.read(10), 0x3FFu);
    EXPECT_THROW(r.read(1), Error);
}

TEST(BitReader, PeekPadsWithZeros) {
    const std::vector<std::uint8_t> bytes = {0xF0};
    BitReader r(bytes);
    r.skip(6);
    EXPECT_EQ(r.peek(4), 0u);
    r.seek(2);
    EXPECT_EQ(r.peek(4), 0b1100u);
    EXPECT_EQ(r.position(), 2u);
}

// Any chunking of the stream reads the same bits as the '0'/'1' oracle.
TEST(BitReader, ChunkedReadsMatchBitString) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint8_t> bytes(1 + rng.below(40));
        for (auto& b : bytes) {
            b = static_cast<std::uint8_t>(rng.below(256));
        }
        const std::string bits = oracle::bit_string(bytes);
        BitReader r(bytes);
        std::size_t pos = 0;
        while (r.remaining() > 0) {
            const int n = static_cast<int>(std::min<std::size_t>(rng.below(33), r.remaining()));
            ASSERT_EQ(r.read(n), oracle::bits_value(bits, pos, static_cast<std::size_t>(n)));
            pos += static_cast<std::size_t>(n);
        }
    }
}

TEST(BitWriter, RoundTripsThroughReader) {
    Rng rng(11);
    BitWriter w;
    std::vector<std::pair<std::uint32_t, int>> written;
    for (int i = 0; i < 500; ++i) {
        const int n = static_cast<int>(rng.below(33));
        const std::uint32_t v = n == 32 ? static_cast<std::uint32_t>(rng.next())
                                        : static_cast<std::uint32_t>(rng.below(1ull << n));
        w.write(v, n);
        written.emplace_back(v, n);
    }
    const auto bits = w.size_bits();
    BitReader r(w.bytes(), bits);
    for (const auto& [v, n] : written) {
        ASSERT_EQ(r.read(n), v);
    }
}

TEST(BitWriter, RejectsOversizedValue) {
    BitWriter w;
    EXPECT_THROW(w.write(4, 2), Error);
}

TEST(BitWriter, AlignAndAppend) {
    BitWriter w;
    w.write(0b101, 3);
    w.align(true);
    EXPECT_EQ(w.bytes(), std::vector<std::uint8_t>{0b10111111});
    BitWriter v;
    v.write(1, 1);
    v.append(w.bytes(), 3);
    EXPECT_EQ(v.size_bits(), 4u);
    EXPECT_EQ(v.bytes()[0], 0b11010000);
}
