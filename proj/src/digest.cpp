#include "qtangle/digest.hpp"

#include <cstdint>
#include <cstdio>

namespace qtangle {

std::string state_digest(const PureState& state) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const char* s) {
        for (; *s; ++s) {
            h ^= static_cast<unsigned char>(*s);
            h *= 0x100000001b3ULL;
        }
    };
    char buf[64];
    for (const cplx& a : state.amplitudes()) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g;", a.real(), a.imag());
        feed(buf);
    }
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace qtangle
