#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace shearband::log {

enum class Level { error = 0, info = 1, debug = 2 };

/// Level parsed once from SHEARBAND_LOG (error|info|debug), default error.
inline Level level() {
    static const Level lv = [] {
        const char* e = std::getenv("SHEARBAND_LOG");
        if (!e) return Level::error;
        if (std::strcmp(e, "debug") == 0) return Level::debug;
        if (std::strcmp(e, "info") == 0) return Level::info;
        return Level::error;
    }();
    return lv;
}

template <typename... Args>
void info(const char* fmt, Args... args) {
    if (level() >= Level::info) {
        std::fprintf(stderr, "[shearband] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

template <typename... Args>
void debug(const char* fmt, Args... args) {
    if (level() >= Level::debug) {
        std::fprintf(stderr, "[shearband:debug] ");
        std::fprintf(stderr, fmt, args...);
        std::fprintf(stderr, "\n");
    }
}

template <typename... Args>
void error(const char* fmt, Args... args) {
    std::fprintf(stderr, "[shearband:error] ");
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
}

}  // namespace shearband::log
