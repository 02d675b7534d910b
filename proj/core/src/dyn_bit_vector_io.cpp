#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "cft/dyn_bit_vector.hpp"

namespace cft {

namespace {

template <class T>
void put_le(std::ostream& out, T value) {
    unsigned char bytes[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<unsigned char>(value >> (8 * i));
    out.write(reinterpret_cast<const char*>(bytes), sizeof bytes);
}

template <class T>
T get_le(std::istream& in) {
    unsigned char bytes[sizeof(T)];
    if (!in.read(reinterpret_cast<char*>(bytes), sizeof bytes)) throw std::runtime_error("bit vector file truncated");
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(bytes[i]) << (8 * i);
    return value;
}

std::uint32_t encode(TreeVariant v) {
    return (v.layout == Layout::Level ? 0x100U : 0U) | static_cast<std::uint32_t>(v.compression);
}

TreeVariant decode(std::uint32_t tag) {
    const std::uint32_t compression = tag & 0xFF;
    if ((tag >> 8) > 1 || compression > 2) throw std::runtime_error("bit vector file has an unknown backend tag");
    return {(tag >> 8) ? Layout::Level : Layout::Classical, static_cast<Compression>(compression)};
}

}  // namespace

void write_header(std::ostream& out, const BitVectorHeader& header) {
    out.write(BitVectorHeader::kMagic, sizeof BitVectorHeader::kMagic);
    put_le<std::uint32_t>(out, BitVectorHeader::kVersion);
    put_le<std::uint32_t>(out, header.block_words);
    put_le<std::uint64_t>(out, header.length);
    put_le<std::uint32_t>(out, encode(header.variant));
    put_le<std::uint32_t>(out, header.hole_log);
    if (!out) throw std::runtime_error("failed to write bit vector header");
}

BitVectorHeader read_header(std::istream& in) {
    char magic[sizeof BitVectorHeader::kMagic];
    if (!in.read(magic, sizeof magic) || std::memcmp(magic, BitVectorHeader::kMagic, sizeof magic) != 0)
        throw std::runtime_error("not a bit vector file");
    if (get_le<std::uint32_t>(in) != BitVectorHeader::kVersion)
        throw std::runtime_error("unsupported bit vector file version");
    BitVectorHeader h;
    h.block_words = get_le<std::uint32_t>(in);
    h.length = get_le<std::uint64_t>(in);
    h.variant = decode(get_le<std::uint32_t>(in));
    h.hole_log = get_le<std::uint32_t>(in);
    if (h.block_words == 0) throw std::runtime_error("bit vector file has zero block size");
    return h;
}

void write_words(std::ostream& out, std::span<const word_t> words) {
    for (word_t w : words) put_le(out, w);
    if (!out) throw std::runtime_error("failed to write bit vector words");
}

std::vector<word_t> read_words(std::istream& in, std::size_t count) {
    std::vector<word_t> words;
    words.reserve(count);
    for (std::size_t i = 0; i < count; ++i) words.push_back(get_le<word_t>(in));
    return words;
}

}  // namespace cft
