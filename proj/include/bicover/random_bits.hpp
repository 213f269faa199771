#ifndef BICOVER_RANDOM_BITS_HPP
#define BICOVER_RANDOM_BITS_HPP

#include <cstdint>

namespace bicover {

/// splitmix64: tiny counter-based generator with bit-exact output per seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Dispenses individual random bits and counts every bit handed out, so a
/// run's random-bit usage can be asserted exactly.
class BitSource {
public:
    explicit BitSource(std::uint64_t seed) : gen_(seed) {}

    int next_bit() {
        if (avail_ == 0) {
            buffer_ = gen_.next();
            avail_ = 64;
        }
        const int b = static_cast<int>(buffer_ & 1);
        buffer_ >>= 1;
        --avail_;
        ++bits_used_;
        return b;
    }

    std::uint64_t bits_used() const { return bits_used_; }

private:
    SplitMix64 gen_;
    std::uint64_t buffer_ = 0;
    int avail_ = 0;
    std::uint64_t bits_used_ = 0;
};

} // namespace bicover

#endif // BICOVER_RANDOM_BITS_HPP
