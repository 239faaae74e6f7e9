#pragma once

#include <cstdint>

namespace tvg {

// Nodes, edges and time instants share one id space; ids are allocated
// monotonically so a journal replay reproduces them bit-exact.
using NodeId = std::uint64_t;
using EdgeId = std::uint64_t;

inline constexpr NodeId kInvalidId = 0;

class IdAllocator {
public:
    NodeId next() { return next_++; }

    // Fast-forwards past an externally assigned id (journal replay).
    void reserve_through(NodeId id) {
        if (id >= next_) next_ = id + 1;
    }

    NodeId peek() const { return next_; }

private:
    NodeId next_ = 1;
};

}  // namespace tvg
