#include "sealkit/keyed_random.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace sealkit {

namespace {

std::uint64_t parse_part(const std::string& hex, std::size_t offset) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 16; ++i) {
        const char c = hex[offset + i];
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else throw std::invalid_argument("key: invalid hex character");
        v = (v << 4) | static_cast<std::uint64_t>(digit);
    }
    return v;
}

char hex_digit(std::uint64_t v) { return "0123456789abcdef"[v & 0xF]; }

}  // namespace

SecretKey parse_key(const std::string& hex48) {
    if (hex48.size() != 48) throw std::invalid_argument("key: expected 48 hex characters");
    return {parse_part(hex48, 0), parse_part(hex48, 16), parse_part(hex48, 32)};
}

std::string format_key(const SecretKey& key) {
    std::string out(48, '0');
    const std::uint64_t parts[3] = {key.k1, key.k2, key.k3};
    for (int p = 0; p < 3; ++p)
        for (int i = 0; i < 16; ++i)
            out[p * 16 + i] = hex_digit(parts[p] >> (60 - 4 * i));
    return out;
}

std::uint64_t next_below(KeyedStream& stream, std::uint64_t n) {
    if (n == 0) throw std::domain_error("next_below: n must be positive");
    if (n == 1) {
        stream.next();
        return 0;
    }
    // Reject draws at or above n * floor(2^64 / n); the remainder is unbiased.
    const unsigned __int128 full = static_cast<unsigned __int128>(1) << 64;
    const unsigned __int128 limit = (full / n) * n;
    for (;;) {
        const std::uint64_t r = stream.next();
        if (static_cast<unsigned __int128>(r) < limit) return r % n;
    }
}

std::vector<std::uint32_t> keyed_permutation(KeyedStream& stream, std::uint32_t n) {
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::uint32_t i = n; i-- > 1;) {
        const auto j = static_cast<std::uint32_t>(next_below(stream, i + 1));
        std::swap(order[i], order[j]);
    }
    return order;
}

}  // namespace sealkit
