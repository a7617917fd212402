#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>

#include "csample/errors.hpp"
#include "csample/sha256.hpp"

namespace csample {

// Hash-input address. Parts are joined by single NUL bytes, so a part may be
// any NUL-free byte string (including empty) and distinct part lists always
// serialize distinctly. This serialization is a wire contract: changing it
// changes every ticket number ever produced.
class Tag {
public:
    Tag(std::initializer_list<std::string_view> parts) {
        for (std::string_view part : parts) append(part);
    }

    void append(std::string_view part) {
        if (part.find('\0') != std::string_view::npos) {
            throw InputError("tag part must not contain NUL bytes");
        }
        if (!first_) serialized_.push_back('\0');
        serialized_.append(part);
        first_ = false;
    }

    const std::string& serialized() const { return serialized_; }

    friend bool operator==(const Tag&, const Tag&) = default;

private:
    std::string serialized_;
    bool first_ = true;
};

// SHA256( serialize(tag) || 0x00 || decimal(counter) )
inline Sha256::Digest digest_block(const Tag& tag, std::uint64_t counter) {
    Sha256 h;
    h.update(tag.serialized());
    const char sep = '\0';
    h.update(&sep, 1);
    h.update(std::to_string(counter));
    return h.finish();
}

// Unbounded stream of uniform decimal digits addressed by a Tag. Digests are
// consumed byte by byte; a byte b yields the digit b % 10 when b < 250 and is
// skipped otherwise (250 = 25*10, so retained bytes map evenly onto 0..9).
// The stream is a pure function of its tag and reads are prefix-stable.
class DigitStream {
public:
    explicit DigitStream(Tag tag) : tag_(std::move(tag)) {}

    // Next `count` digits as characters '0'..'9'.
    std::string next_digits(std::size_t count) {
        std::string out;
        out.reserve(count);
        while (out.size() < count) {
            if (block_pos_ == block_.size()) {
                block_ = digest_block(tag_, block_counter_++);
                block_pos_ = 0;
            }
            std::uint8_t byte = block_[block_pos_++];
            ++bytes_consumed_;
            if (byte < kRejectionLimit) {
                out.push_back(static_cast<char>('0' + byte % 10));
            }
        }
        digits_emitted_ += out.size();
        return out;
    }

    const Tag& tag() const { return tag_; }
    std::uint64_t bytes_consumed() const { return bytes_consumed_; }
    std::uint64_t digits_emitted() const { return digits_emitted_; }

    static constexpr std::uint8_t kRejectionLimit = 250;

private:
    Tag tag_;
    std::uint64_t block_counter_ = 0;
    Sha256::Digest block_{};
    std::size_t block_pos_ = block_.size();  // empty until the first digest
    std::uint64_t bytes_consumed_ = 0;
    std::uint64_t digits_emitted_ = 0;
};

}  // namespace csample
