#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mp3sa {

/// Big-endian (MSB first) bit cursor over an immutable byte buffer. The
/// readable length may be limited to fewer bits than the buffer holds.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data);
    BitReader(std::span<const std::uint8_t> data, std::size_t bit_length);

    /// Reads n in 0..32 bits; throws Error(kTruncated) if fewer remain.
    std::uint32_t read(int n);
    bool read_bit() { return read(1) != 0; }

    /// Next n bits without advancing; bits past the end read as zero.
    std::uint32_t peek(int n) const;

    void skip(std::size_t n);
    void seek(std::size_t bit_position);

    std::size_t position() const noexcept { return pos_; }
    std::size_t size_bits() const noexcept { return size_; }
    std::size_t remaining() const noexcept { return size_ - pos_; }

private:
    std::span<const std::uint8_t> data_;
    std::size_t size_ = 0;
    std::size_t pos_ = 0;
};

/// Appends bits MSB first; the final partial byte is zero padded.
class BitWriter {
public:
    void write(std::uint32_t value, int n);
    void write_bit(bool bit) { write(bit ? 1u : 0u, 1); }
    /// Appends the first bit_length bits of another buffer.
    void append(std::span<const std::uint8_t> bytes, std::size_t bit_length);
    /// Pads with `fill` bits up to the next byte boundary.
    void align(bool fill = false);

    std::size_t size_bits() const noexcept { return size_; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

}  // namespace mp3sa
