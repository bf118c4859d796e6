#ifndef EULERPATH_RNG_HPP
#define EULERPATH_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace eulerpath {

// splitmix64 finalizer.  Used to derive well-separated engine seeds from a
// (root seed, stream index) pair so that every sampling site draws from its
// own stream and results do not depend on evaluation order elsewhere.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// A seeded mt19937_64 plus bounded-draw helpers.  The standard distribution
// adaptors (std::uniform_int_distribution, std::shuffle) are implementation
// defined, so for byte-reproducible output across toolchains we draw raw
// 64-bit words and reduce them ourselves.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw from {0, ..., n-1} by rejection.  n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // 2^64 mod n; words under the threshold would bias the low residues.
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % n;
        }
    }

    // Fisher-Yates with the unbiased draw above.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(below(items.size()))];
    }

  private:
    std::mt19937_64 engine_;
};

// Derive the stream for (seed, index).  Distinct indices give independent
// streams; the same pair always yields the same stream.
inline RngStream make_stream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(splitmix64(seed ^ splitmix64(index * 0x9e3779b97f4a7c15ull + 1)));
}

}  // namespace eulerpath

#endif  // EULERPATH_RNG_HPP
