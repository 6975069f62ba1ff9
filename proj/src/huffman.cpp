#include "mp3sa/huffman.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "mp3sa/error.hpp"

namespace mp3sa::huffman {
namespace {

constexpr int kRootBits = 8;

// Multi-level lookup: the root level is indexed by the next kRootBits bits;
// codewords longer than that continue in a sub-level indexed by the bits
// that follow. Symbols are indices into the source code list.
struct Entry {
    std::int32_t value = -1;  // symbol (leaf) or sub-level index
    std::uint8_t length = 0;  // bits consumed at this level
    bool leaf = false;
};

struct Level {
    int width = 0;
    std::vector<Entry> entries;
};

struct Code {
    std::uint32_t code;
    int length;
    int symbol;
};

class LookupTable {
public:
    explicit LookupTable(const std::vector<Code>& codes) {
        if (!codes.empty()) {
            build(codes);
        }
    }

    /// Returns the symbol index, consuming its codeword.
    int decode(BitReader& reader) const {
        if (levels_.empty()) {
            throw Error(ErrorCode::kMalformedCodeword, "empty table");
        }
        std::size_t level = 0;
        for (;;) {
            const Level& l = levels_[level];
            const Entry& e = l.entries[reader.peek(l.width)];
            if (e.value < 0 || e.length > reader.remaining()) {
                throw Error(ErrorCode::kMalformedCodeword, "no codeword matches");
            }
            reader.skip(e.length);
            if (e.leaf) {
                return e.value;
            }
            level = static_cast<std::size_t>(e.value);
        }
    }

private:
    // `codes` carry only the bits not yet consumed by outer levels.
    std::size_t build(const std::vector<Code>& codes) {
        int max_len = 0;
        for (const auto& c : codes) {
            max_len = std::max(max_len, c.length);
        }
        const int width = std::min(max_len, kRootBits);
        const std::size_t index = levels_.size();
        levels_.push_back({width, std::vector<Entry>(std::size_t{1} << width)});

        std::vector<std::vector<Code>> deferred(std::size_t{1} << width);
        for (const auto& c : codes) {
            if (c.length <= width) {
                const int pad = width - c.length;
                const std::uint32_t first = c.code << pad;
                for (std::uint32_t k = 0; k < (1u << pad); ++k) {
                    levels_[index].entries[first + k] = {c.symbol, static_cast<std::uint8_t>(c.length), true};
                }
            } else {
                const int rest = c.length - width;
                const std::uint32_t prefix = c.code >> rest;
                deferred[prefix].push_back({c.code & ((1u << rest) - 1u), rest, c.symbol});
            }
        }
        for (std::size_t prefix = 0; prefix < deferred.size(); ++prefix) {
            if (deferred[prefix].empty()) {
                continue;
            }
            const std::size_t sub = build(deferred[prefix]);
            levels_[index].entries[prefix] = {static_cast<std::int32_t>(sub),
                                              static_cast<std::uint8_t>(width), false};
        }
        return index;
    }

    std::vector<Level> levels_;
};

struct Decoders {
    std::array<std::unique_ptr<LookupTable>, 32> pairs;
    std::array<std::unique_ptr<LookupTable>, 2> quads;

    Decoders() {
        for (const auto& t : pair_tables()) {
            std::vector<Code> codes;
            for (std::size_t i = 0; i < t.codes.size(); ++i) {
                codes.push_back({t.codes[i].code, t.codes[i].length, static_cast<int>(i)});
            }
            pairs[static_cast<std::size_t>(t.id)] = std::make_unique<LookupTable>(codes);
        }
        for (int s = 0; s < 2; ++s) {
            std::vector<Code> codes;
            const auto table = count1_table(s);
            for (std::size_t i = 0; i < table.size(); ++i) {
                codes.push_back({table[i].code, table[i].length, static_cast<int>(i)});
            }
            quads[static_cast<std::size_t>(s)] = std::make_unique<LookupTable>(codes);
        }
    }
};

const Decoders& decoders() {
    static const Decoders instance;
    return instance;
}

const PairTable& checked_table(int table) {
    if (table < 0 || table > 31) {
        throw Error(ErrorCode::kOutOfRange, "table_select " + std::to_string(table));
    }
    const auto& t = pair_tables()[static_cast<std::size_t>(table)];
    if (!t.usable) {
        throw Error(ErrorCode::kMalformedCodeword, "table " + std::to_string(table) + " is not assigned");
    }
    return t;
}

int apply_sign(BitReader& reader, int magnitude) {
    if (magnitude != 0 && reader.read_bit()) {
        return -magnitude;
    }
    return magnitude;
}

int table_dimension(const PairTable& t) {
    int dim = 0;
    for (const auto& c : t.codes) {
        dim = std::max<int>(dim, c.x + 1);
    }
    return dim;
}

}  // namespace

Pair decode_pair(BitReader& reader, int table) {
    const auto& t = checked_table(table);
    if (t.codes.empty()) {
        return {};
    }
    const int symbol = decoders().pairs[static_cast<std::size_t>(table)]->decode(reader);
    const auto& code = t.codes[static_cast<std::size_t>(symbol)];
    int x = code.x;
    int y = code.y;
    if (t.linbits > 0 && x == 15) {
        x += static_cast<int>(reader.read(t.linbits));
    }
    x = apply_sign(reader, x);
    if (t.linbits > 0 && y == 15) {
        y += static_cast<int>(reader.read(t.linbits));
    }
    y = apply_sign(reader, y);
    return {x, y};
}

Quad decode_quad(BitReader& reader, int count1table_select) {
    if (count1table_select < 0 || count1table_select > 1) {
        throw Error(ErrorCode::kOutOfRange, "count1table_select");
    }
    const int symbol = decoders().quads[static_cast<std::size_t>(count1table_select)]->decode(reader);
    const int packed = count1_table(count1table_select)[static_cast<std::size_t>(symbol)].value;
    Quad q{};
    for (int i = 0; i < 4; ++i) {
        q[static_cast<std::size_t>(i)] = apply_sign(reader, (packed >> (3 - i)) & 1);
    }
    return q;
}

int max_pair_value(int table) {
    const auto& t = checked_table(table);
    if (t.codes.empty()) {
        return 0;
    }
    if (t.linbits > 0) {
        return 15 + static_cast<int>((1u << t.linbits) - 1u);
    }
    return table_dimension(t) - 1;
}

void encode_pair(BitWriter& writer, int table, int x, int y) {
    const auto& t = checked_table(table);
    const int limit = max_pair_value(table);
    if (std::abs(x) > limit || std::abs(y) > limit) {
        throw Error(ErrorCode::kOutOfRange, "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                                ") exceeds table " + std::to_string(table));
    }
    if (t.codes.empty()) {
        return;
    }
    const int ax = std::abs(x);
    const int ay = std::abs(y);
    const int cx = t.linbits > 0 ? std::min(ax, 15) : ax;
    const int cy = t.linbits > 0 ? std::min(ay, 15) : ay;
    const auto it = std::find_if(t.codes.begin(), t.codes.end(),
                                 [&](const PairCode& c) { return c.x == cx && c.y == cy; });
    writer.write(it->code, it->length);
    if (t.linbits > 0 && cx == 15) {
        writer.write(static_cast<std::uint32_t>(ax - 15), t.linbits);
    }
    if (ax != 0) {
        writer.write_bit(x < 0);
    }
    if (t.linbits > 0 && cy == 15) {
        writer.write(static_cast<std::uint32_t>(ay - 15), t.linbits);
    }
    if (ay != 0) {
        writer.write_bit(y < 0);
    }
}

void encode_quad(BitWriter& writer, int count1table_select, const Quad& values) {
    if (count1table_select < 0 || count1table_select > 1) {
        throw Error(ErrorCode::kOutOfRange, "count1table_select");
    }
    int packed = 0;
    for (int v : values) {
        if (std::abs(v) > 1) {
            throw Error(ErrorCode::kOutOfRange, "count1 value " + std::to_string(v));
        }
        packed = (packed << 1) | (v != 0 ? 1 : 0);
    }
    const auto table = count1_table(count1table_select);
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const QuadCode& c) { return c.value == packed; });
    writer.write(it->code, it->length);
    for (int v : values) {
        if (v != 0) {
            writer.write_bit(v < 0);
        }
    }
}

}  // namespace mp3sa::huffman
