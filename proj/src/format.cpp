#include "qgs/format.hpp"

#include <cstdio>

namespace qgs {

std::string format_g12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

} // namespace qgs
