#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace mp3sa::huffman {

/// One codeword of a big_values table: `length` bits, right-aligned in `code`.
struct PairCode {
    std::uint32_t code;
    std::uint8_t length;
    std::uint8_t x;
    std::uint8_t y;
};

/// One codeword of a count1 table; `value` packs v, w, x, y as bits 3..0.
struct QuadCode {
    std::uint32_t code;
    std::uint8_t length;
    std::uint8_t value;
};

struct PairTable {
    int id;
    std::span<const PairCode> codes;  // empty for table 0 (all zero) and 4/14
    int linbits;
    bool usable;  // false for the unassigned tables 4 and 14
};

const std::array<PairTable, 32>& pair_tables();
/// count1table_select 0 is table A, 1 is table B.
std::span<const QuadCode> count1_table(int select);

}  // namespace mp3sa::huffman
