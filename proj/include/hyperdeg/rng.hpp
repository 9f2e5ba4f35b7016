#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hyperdeg {

/* splitmix64 step (Steele/Lea/Flood); used both to scramble seeds and to
   derive per-worker streams. */
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/* Worker w draws from a stream seeded with the (w+1)-th splitmix64 output of
   the master seed, so results are reproducible for a fixed (seed, workers)
   split regardless of thread scheduling. */
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint32_t worker) {
    std::uint64_t s = master_seed;
    std::uint64_t out = 0;
    for (std::uint32_t i = 0; i <= worker; ++i) out = splitmix64_next(s);
    return out;
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /* unbiased draw from [0, n) by rejection */
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n < 2) return 0;
        const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % n;
    }

    double uniform01() {
        return double(eng_() >> 11) * 0x1.0p-53;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform_below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace hyperdeg
