#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

/// Minimal leveled logging to stderr, controlled by the IDC_LOG
/// environment variable: debug, info, warn (default), or error.
namespace idc::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

inline Level threshold() {
    static Level level = [] {
        const char* env = std::getenv("IDC_LOG");
        if (env == nullptr) return Level::Warn;
        if (std::strcmp(env, "debug") == 0) return Level::Debug;
        if (std::strcmp(env, "info") == 0) return Level::Info;
        if (std::strcmp(env, "error") == 0) return Level::Error;
        return Level::Warn;
    }();
    return level;
}

inline void write(Level level, const std::string& message) {
    if (level < threshold()) return;
    const char* tag = level == Level::Debug  ? "debug"
                      : level == Level::Info ? "info"
                      : level == Level::Warn ? "warn"
                                             : "error";
    std::fprintf(stderr, "[%s] %s\n", tag, message.c_str());
}

inline void debug(const std::string& m) { write(Level::Debug, m); }
inline void info(const std::string& m) { write(Level::Info, m); }
inline void warn(const std::string& m) { write(Level::Warn, m); }
inline void error(const std::string& m) { write(Level::Error, m); }

} // namespace idc::log
