#pragma once

#include <cstdlib>
#include <iostream>
#include <string_view>

namespace coword {

// Verbosity comes from the COWORD_LOG environment variable:
// quiet | info (default) | debug.
enum class LogLevel : int { quiet = 0, info = 1, debug = 2 };

inline LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("COWORD_LOG");
        if (env == nullptr) return LogLevel::info;
        const std::string_view v(env);
        if (v == "quiet" || v == "0") return LogLevel::quiet;
        if (v == "debug" || v == "2") return LogLevel::debug;
        return LogLevel::info;
    }();
    return level;
}

inline void log_info(std::string_view msg) {
    if (static_cast<int>(log_level()) >= static_cast<int>(LogLevel::info))
        std::cerr << "[coword] " << msg << '\n';
}

inline void log_debug(std::string_view msg) {
    if (static_cast<int>(log_level()) >= static_cast<int>(LogLevel::debug))
        std::cerr << "[coword] " << msg << '\n';
}

}  // namespace coword
