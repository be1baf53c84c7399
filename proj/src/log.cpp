#include "fractomo/log.hpp"

#include <iostream>
#include <mutex>
#include <utility>

namespace fractomo {

namespace {

std::mutex g_mutex;
LogHandler g_handler;

}  // namespace

void set_log_handler(LogHandler handler) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_handler = std::move(handler);
}

void log_notice(const std::string& message) {
    LogHandler handler;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        handler = g_handler;
    }
    if (handler) {
        handler(message);
    } else {
        std::cerr << "fractomo: " << message << "\n";
    }
}

}  // namespace fractomo
