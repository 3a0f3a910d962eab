#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mqttplus/clock.hpp"

namespace mqttplus {

inline constexpr size_t kDefaultMaxPayload = 256u * 1024u * 1024u;
inline constexpr uint8_t kSubackFailure = 0x80;

enum class PacketType : uint8_t {
    Connect = 1,
    Connack = 2,
    Publish = 3,
    Puback = 4,
    Subscribe = 8,
    Suback = 9,
    Unsubscribe = 10,
    Unsuback = 11,
    Pingreq = 12,
    Pingresp = 13,
    Disconnect = 14,
};

const char* to_string(PacketType t);

struct ConnectPacket {
    std::string client_id;
    uint16_t keep_alive = 0;
    bool clean_session = true;
    // Will/auth fields are parsed for wire compatibility but otherwise unused.
    std::optional<std::string> will_topic;
    std::optional<std::string> will_message;
    uint8_t will_qos = 0;
    bool will_retain = false;
    std::optional<std::string> username;
    std::optional<std::string> password;

    bool operator==(const ConnectPacket&) const = default;
};

struct ConnackPacket {
    bool session_present = false;
    uint8_t return_code = 0;
    bool operator==(const ConnackPacket&) const = default;
};

struct PublishPacket {
    std::string topic;
    std::string payload;
    uint8_t qos = 0;
    bool retain = false;
    bool dup = false;
    uint16_t packet_id = 0;  // only meaningful when qos > 0

    bool operator==(const PublishPacket&) const = default;
};

struct PubackPacket {
    uint16_t packet_id = 0;
    bool operator==(const PubackPacket&) const = default;
};

struct SubscribeRequest {
    std::string filter;
    uint8_t qos = 0;
    bool operator==(const SubscribeRequest&) const = default;
};

struct SubscribePacket {
    uint16_t packet_id = 0;
    std::vector<SubscribeRequest> filters;
    bool operator==(const SubscribePacket&) const = default;
};

struct SubackPacket {
    uint16_t packet_id = 0;
    std::vector<uint8_t> codes;
    bool operator==(const SubackPacket&) const = default;
};

struct UnsubscribePacket {
    uint16_t packet_id = 0;
    std::vector<std::string> filters;
    bool operator==(const UnsubscribePacket&) const = default;
};

struct UnsubackPacket {
    uint16_t packet_id = 0;
    bool operator==(const UnsubackPacket&) const = default;
};

struct PingreqPacket {
    bool operator==(const PingreqPacket&) const = default;
};
struct PingrespPacket {
    bool operator==(const PingrespPacket&) const = default;
};
struct DisconnectPacket {
    bool operator==(const DisconnectPacket&) const = default;
};

using Packet = std::variant<ConnectPacket, ConnackPacket, PublishPacket, PubackPacket,
                            SubscribePacket, SubackPacket, UnsubscribePacket,
                            UnsubackPacket, PingreqPacket, PingrespPacket,
                            DisconnectPacket>;

PacketType packet_type(const Packet& p);

enum class DecodeStatus {
    Ok,
    NeedMoreBytes,
    MalformedRemainingLength,
    UnsupportedPacketType,
    ProtocolViolation,
    MalformedPacket,
};

const char* to_string(DecodeStatus s);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::NeedMoreBytes;
    std::optional<Packet> packet;
    size_t consumed = 0;

    bool ok() const { return status == DecodeStatus::Ok; }
};

/// Decodes one frame from the front of `data`. Partial frames yield
/// NeedMoreBytes with consumed == 0; errors consume nothing and the
/// connection should be dropped by the caller.
DecodeResult decode_packet(std::span<const uint8_t> data);

enum class EncodeError { OversizePayload, ProtocolViolation };

struct CodecError : std::runtime_error {
    CodecError(EncodeError k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
    EncodeError kind;
};

/// Throws CodecError on wildcard publish topics or payloads past max_payload.
std::vector<uint8_t> encode_packet(const Packet& p,
                                   size_t max_payload = kDefaultMaxPayload);

// ---------------------------------------------------------------------------
// TTL envelope: "$TTL;<ISO8601>|<inner payload>". Anything else is an
// envelope-free payload that gets the broker default.

struct TtlResult {
    std::string inner_payload;
    TimePoint deadline;
    bool had_envelope = false;
    bool malformed = false;  // marker present but timestamp unparseable
};

TtlResult strip_ttl(std::string_view payload, TimePoint now, Duration default_ttl);

/// Wraps a payload for publishers that want an explicit validity deadline.
std::string wrap_ttl(std::string_view inner, TimePoint deadline);

}  // namespace mqttplus
