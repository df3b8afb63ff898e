#include "pirlrc/protocol.hpp"

#include <sys/socket.h>
#include <unistd.h>

#include <stdexcept>

namespace pirlrc {

namespace {
constexpr char kMagic[4] = {'P', 'I', 'R', '1'};
constexpr std::size_t kHeaderSize = 9;  // magic + type + length
}  // namespace

std::string encode_frame(const Frame& f) {
    std::string out(kMagic, 4);
    out.push_back(static_cast<char>(f.type));
    std::uint32_t len = static_cast<std::uint32_t>(f.payload.size());
    out.push_back(static_cast<char>((len >> 24) & 0xff));
    out.push_back(static_cast<char>((len >> 16) & 0xff));
    out.push_back(static_cast<char>((len >> 8) & 0xff));
    out.push_back(static_cast<char>(len & 0xff));
    out += f.payload;
    return out;
}

std::optional<Frame> try_decode_frame(std::string& buffer) {
    if (buffer.size() < kHeaderSize) return std::nullopt;
    if (buffer.compare(0, 4, kMagic, 4) != 0) throw std::runtime_error("bad frame magic");
    std::uint8_t type = static_cast<std::uint8_t>(buffer[4]);
    if (type < 0x01 || type > 0x04) throw std::runtime_error("unknown frame type");
    std::uint32_t len = 0;
    for (int i = 0; i < 4; ++i) len = (len << 8) | static_cast<std::uint8_t>(buffer[5 + i]);
    if (buffer.size() < kHeaderSize + len) return std::nullopt;
    Frame f{static_cast<FrameType>(type), buffer.substr(kHeaderSize, len)};
    buffer.erase(0, kHeaderSize + len);
    return f;
}

void send_frame(int fd, const Frame& f) {
    std::string bytes = encode_frame(f);
    std::size_t sent = 0;
    while (sent < bytes.size()) {
        ssize_t n = ::send(fd, bytes.data() + sent, bytes.size() - sent, 0);
        if (n <= 0) throw std::runtime_error("socket send failed");
        sent += static_cast<std::size_t>(n);
    }
}

Frame recv_frame(int fd) {
    std::string buffer;
    char chunk[4096];
    while (true) {
        if (auto f = try_decode_frame(buffer)) return *f;
        ssize_t n = ::recv(fd, chunk, sizeof(chunk), 0);
        if (n <= 0) throw std::runtime_error("truncated frame stream");
        buffer.append(chunk, static_cast<std::size_t>(n));
    }
}

}  // namespace pirlrc
