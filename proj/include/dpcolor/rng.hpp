#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dpcolor {

// Deterministic random source. mt19937_64 has a standard-mandated sequence and
// the bounded draw below avoids std::uniform_int_distribution, whose output is
// implementation-defined; results are therefore identical across platforms.
class RandomSource {
public:
    explicit RandomSource(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform draw from [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace dpcolor
