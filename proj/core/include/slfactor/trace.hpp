#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace slf {

/// Wall-clock phase tracing to stderr, enabled by setting SLF_TRACE=1.
inline bool trace_enabled() {
    static const bool on = [] {
        const char* e = std::getenv("SLF_TRACE");
        return e && *e && *e != '0';
    }();
    return on;
}

inline double trace_now() {
    static const auto t0 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::microseconds>(
               std::chrono::steady_clock::now() - t0)
               .count() /
           1e6;
}

class TraceScope {
public:
    explicit TraceScope(std::string label) : label_(std::move(label)) {
        if (trace_enabled()) {
            start_ = std::chrono::steady_clock::now();
            std::fprintf(stderr, "[trace] [%8.3f] >> %s\n", trace_now(), label_.c_str());
        }
    }
    ~TraceScope() {
        if (trace_enabled()) {
            auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            std::fprintf(stderr, "[trace] [%8.3f] << %s (%.3f s)\n", trace_now(), label_.c_str(),
                         static_cast<double>(us) / 1e6);
        }
    }

private:
    std::string label_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace slf
