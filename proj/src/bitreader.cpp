#include "mp3sa/bitreader.hpp"

#include <string>

#include "mp3sa/error.hpp"

namespace mp3sa {

BitReader::BitReader(std::span<const std::uint8_t> data)
    : data_(data), size_(data.size() * 8) {}

BitReader::BitReader(std::span<const std::uint8_t> data, std::size_t bit_length)
    : data_(data), size_(bit_length) {
    if (bit_length > data.size() * 8) {
        throw Error(ErrorCode::kInvalidArgument, "bit length exceeds buffer");
    }
}

std::uint32_t BitReader::peek(int n) const {
    std::uint32_t value = 0;
    std::size_t p = pos_;
    for (int i = 0; i < n; ++i, ++p) {
        std::uint32_t bit = 0;
        if (p < size_) {
            bit = (data_[p >> 3] >> (7 - (p & 7))) & 1u;
        }
        value = (value << 1) | bit;
    }
    return value;
}

std::uint32_t BitReader::read(int n) {
    if (n < 0 || n > 32) {
        throw Error(ErrorCode::kInvalidArgument, "read width " + std::to_string(n));
    }
    if (static_cast<std::size_t>(n) > remaining()) {
        throw Error(ErrorCode::kTruncated, "need " + std::to_string(n) + " bits, " +
                                               std::to_string(remaining()) + " left");
    }
    std::uint32_t value = 0;
    int left = n;
    while (left > 0) {
        const std::size_t byte = pos_ >> 3;
        const int offset = static_cast<int>(pos_ & 7);
        const int avail = 8 - offset;
        const int take = left < avail ? left : avail;
        const std::uint32_t chunk =
            (static_cast<std::uint32_t>(data_[byte]) >> (avail - take)) & ((1u << take) - 1u);
        value = (value << take) | chunk;
        pos_ += static_cast<std::size_t>(take);
        left -= take;
    }
    return value;
}

void BitReader::skip(std::size_t n) {
    if (n > remaining()) {
        throw Error(ErrorCode::kTruncated, "skip past end");
    }
    pos_ += n;
}

void BitReader::seek(std::size_t bit_position) {
    if (bit_position > size_) {
        throw Error(ErrorCode::kTruncated, "seek past end");
    }
    pos_ = bit_position;
}

void BitWriter::write(std::uint32_t value, int n) {
    if (n < 0 || n > 32) {
        throw Error(ErrorCode::kInvalidArgument, "write width " + std::to_string(n));
    }
    if (n < 32 && (value >> n) != 0) {
        throw Error(ErrorCode::kOutOfRange,
                    std::to_string(value) + " does not fit in " + std::to_string(n) + " bits");
    }
    for (int i = n - 1; i >= 0; --i) {
        if ((size_ & 7) == 0) {
            bytes_.push_back(0);
        }
        if ((value >> i) & 1u) {
            bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ & 7));
        }
        ++size_;
    }
}

void BitWriter::append(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
    BitReader reader(bytes, bit_length);
    while (reader.remaining() >= 32) {
        write(reader.read(32), 32);
    }
    const int rest = static_cast<int>(reader.remaining());
    write(reader.read(rest), rest);
}

void BitWriter::align(bool fill) {
    while ((size_ & 7) != 0) {
        write_bit(fill);
    }
}

}  // namespace mp3sa
