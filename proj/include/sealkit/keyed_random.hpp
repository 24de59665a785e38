#ifndef SEALKIT_KEYED_RANDOM_HPP
#define SEALKIT_KEYED_RANDOM_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sealkit {

// Three independent 64-bit key parts K = k1|k2|k3. k1 drives the block
// partition, k2 and k3 the two carrier permutations.
struct SecretKey {
    std::uint64_t k1 = 0;
    std::uint64_t k2 = 0;
    std::uint64_t k3 = 0;

    bool operator==(const SecretKey&) const = default;
};

// Parses 48 hexadecimal characters as three big-endian 64-bit parts.
SecretKey parse_key(const std::string& hex48);
std::string format_key(const SecretKey& key);

// splitmix64 stream. Sender and receiver reproduce identical sequences
// from equal seeds; that is the only property the scheme needs.
class KeyedStream {
public:
    explicit KeyedStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

inline KeyedStream seed_stream(std::uint64_t part) { return KeyedStream(part); }

// Uniform value in [0, n) via rejection sampling; never modulo-biased.
// Always consumes at least one draw. n = 0 is a domain error.
std::uint64_t next_below(KeyedStream& stream, std::uint64_t n);

// Fisher-Yates ordering of 0..n-1, deterministic per stream state.
std::vector<std::uint32_t> keyed_permutation(KeyedStream& stream, std::uint32_t n);

}  // namespace sealkit

#endif
