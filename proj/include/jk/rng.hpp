#pragma once

#include <cstdint>

namespace jk {

/// splitmix64 stream; deterministic and cheap to fork per (seed, index).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    static Rng fork(uint64_t seed, uint64_t index) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        r.next();
        return r;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform integer in [lo, hi]
    long uniform_int(long lo, long hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

    /// uniform nonzero integer in [lo, hi]
    long nonzero_int(long lo, long hi) {
        long v;
        do {
            v = uniform_int(lo, hi);
        } while (v == 0);
        return v;
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

}  // namespace jk
