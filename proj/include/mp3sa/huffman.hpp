#pragma once

#include <array>

#include "mp3sa/bitreader.hpp"
#include "mp3sa/huffman_tables.hpp"

namespace mp3sa::huffman {

struct Pair {
    int x = 0;
    int y = 0;
    bool operator==(const Pair&) const = default;
};

using Quad = std::array<int, 4>;

/// Decodes one big_values pair from `table` (0..31) including linbits
/// escapes and sign bits. Table 0 consumes nothing and yields (0, 0).
/// Throws kMalformedCodeword when no codeword matches (or the table is
/// unassigned) and kTruncated when escape or sign bits run out.
Pair decode_pair(BitReader& reader, int table);

/// Decodes one count1 quadruple with its sign bits.
Quad decode_quad(BitReader& reader, int count1table_select);

/// Largest magnitude representable in a table (15 + 2^linbits - 1 with
/// escapes, otherwise the table's dimension - 1).
int max_pair_value(int table);

/// Inverse of decode_pair / decode_quad. Throws kOutOfRange for values the
/// table cannot represent.
void encode_pair(BitWriter& writer, int table, int x, int y);
void encode_quad(BitWriter& writer, int count1table_select, const Quad& values);

}  // namespace mp3sa::huffman
