#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace mqttplus {

using TimePoint = std::chrono::sys_seconds;
using Duration = std::chrono::seconds;

/// Injectable time source. The broker owns exactly one; everything that
/// needs "now" (TTL defaults, window timers, keep-alive) reads it here so
/// tests and the bench can drive time deterministically.
class Clock {
public:
    virtual ~Clock() = default;
    virtual TimePoint now() const = 0;
};

class RealClock final : public Clock {
public:
    TimePoint now() const override {
        return std::chrono::time_point_cast<std::chrono::seconds>(
            std::chrono::system_clock::now());
    }
};

class VirtualClock final : public Clock {
public:
    explicit VirtualClock(TimePoint start = TimePoint{}) : now_(start) {}

    TimePoint now() const override { return now_; }
    void advance(Duration d) { now_ += d; }
    void set(TimePoint t) { now_ = t; }

private:
    TimePoint now_;
};

/// "2018-05-24T15:36:25" (UTC, seconds precision, optional trailing 'Z').
std::optional<TimePoint> parse_timestamp(std::string_view text);
std::string format_timestamp(TimePoint t);

}  // namespace mqttplus
