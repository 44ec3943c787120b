#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fdsim/engine.hpp"
#include "fdsim/packet.hpp"
#include "fdsim/ring_buffer.hpp"
#include "fdsim/types.hpp"

namespace fdsim {

// A core's network-stack service loop. Woken by an interrupt, it drains
// its own ring strictly FIFO, one packet per 1/rate seconds, and goes
// idle when the ring empties. Service of a packet starts when it is
// popped; delivery completes one service time later.
class CoreServicer {
 public:
  using DeliveryFn = std::function<void(const Packet&, SimTime)>;

  CoreServicer(Engine& engine, RingBuffer& ring, CoreId core, double service_rate_pps,
               bool exponential_service = false)
      : engine_(engine),
        ring_(ring),
        core_(core),
        rate_(service_rate_pps),
        exponential_(exponential_service) {}

  void set_on_delivery(DeliveryFn fn) { on_delivery_ = std::move(fn); }

  // Interrupt entry point: starts the service loop unless already running.
  void start(SimTime now) {
    if (busy_) return;
    begin_service(now);
  }

  bool busy() const { return busy_; }
  CoreId core() const { return core_; }
  double service_rate() const { return rate_; }
  std::uint64_t packets_serviced() const { return serviced_; }

 private:
  void begin_service(SimTime now) {
    in_service_ = ring_.pop();
    if (!in_service_) {
      busy_ = false;
      return;
    }
    busy_ = true;
    engine_.schedule(now + service_time(), EventKind::ServiceComplete,
                     [this] { complete(); });
  }

  void complete() {
    Packet pkt = *std::move(in_service_);
    in_service_.reset();
    pkt.delivery_time = engine_.now();
    ++serviced_;
    if (on_delivery_) on_delivery_(pkt, engine_.now());
    begin_service(engine_.now());
  }

  double service_time() {
    if (exponential_) return engine_.rng("service").exponential(1.0 / rate_);
    return 1.0 / rate_;
  }

  Engine& engine_;
  RingBuffer& ring_;
  CoreId core_;
  double rate_;
  bool exponential_;
  bool busy_ = false;
  std::optional<Packet> in_service_;
  std::uint64_t serviced_ = 0;
  DeliveryFn on_delivery_;
};

}  // namespace fdsim
