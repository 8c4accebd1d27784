#pragma once

#include <cstdint>

namespace pnn {

/// Work counters.  Predicate counts are bumped inside orient()/incircle(),
/// everything else at the call sites in the query and rebuild paths.  The
/// acceptance suite reads these as the empirical stand-ins for the paper-level
/// time bounds, so they are always on (no compile-time switch).
struct Counters {
    std::uint64_t orient_calls = 0;
    std::uint64_t incircle_calls = 0;

    std::uint64_t locate_calls = 0;
    std::uint64_t jumps = 0;
    std::uint64_t jump_failures = 0;
    std::uint64_t overlay_probes = 0;
    std::uint64_t piece_probes = 0;
    std::uint64_t fallbacks = 0;

    std::uint64_t rebuild_predicates = 0;
    std::uint64_t rebuilt_sites = 0;
    std::uint64_t rebuilds = 0;

    std::uint64_t predicates() const { return orient_calls + incircle_calls; }

    Counters operator-(const Counters& o) const {
        Counters r = *this;
        r.orient_calls -= o.orient_calls;
        r.incircle_calls -= o.incircle_calls;
        r.locate_calls -= o.locate_calls;
        r.jumps -= o.jumps;
        r.jump_failures -= o.jump_failures;
        r.overlay_probes -= o.overlay_probes;
        r.piece_probes -= o.piece_probes;
        r.fallbacks -= o.fallbacks;
        r.rebuild_predicates -= o.rebuild_predicates;
        r.rebuilt_sites -= o.rebuilt_sites;
        r.rebuilds -= o.rebuilds;
        return r;
    }
};

/// Predicate-level sink for the current thread.  Pure geometric code only
/// sees this; structures install their own Counters around work they want
/// attributed to them.
Counters* counter_sink();
void set_counter_sink(Counters* c);

/// RAII scope that points the sink at `c` (may be null to mute).
class CounterScope {
  public:
    explicit CounterScope(Counters* c) : prev_(counter_sink()) { set_counter_sink(c); }
    ~CounterScope() { set_counter_sink(prev_); }
    CounterScope(const CounterScope&) = delete;
    CounterScope& operator=(const CounterScope&) = delete;

  private:
    Counters* prev_;
};

inline void count_orient() {
    if (Counters* c = counter_sink()) ++c->orient_calls;
}
inline void count_incircle() {
    if (Counters* c = counter_sink()) ++c->incircle_calls;
}

}  // namespace pnn
