#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace pirlrc {

enum class FrameType : std::uint8_t { query = 0x01, answer = 0x02, error = 0x03, hello = 0x04 };

/// Wire frame: 4-byte magic "PIR1", 1-byte type, 4-byte big-endian payload
/// length, payload bytes.
struct Frame {
    FrameType type = FrameType::hello;
    std::string payload;

    bool operator==(const Frame&) const = default;
};

std::string encode_frame(const Frame& f);

/// Consumes one complete frame from the front of the buffer; returns
/// nullopt while the buffer holds only a partial frame. Throws on bad
/// magic or unknown frame type.
std::optional<Frame> try_decode_frame(std::string& buffer);

/// Blocking frame exchange over a connected socket.
void send_frame(int fd, const Frame& f);
Frame recv_frame(int fd);  // throws on truncated stream

}  // namespace pirlrc
