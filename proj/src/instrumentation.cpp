#include "stuffle/instrumentation.hpp"

#include <atomic>

namespace stuffle::instrumentation {

namespace {
std::atomic<std::uint64_t> g_definitional{0};
std::atomic<std::uint64_t> g_simple{0};
}  // namespace

std::uint64_t definitional_word_products() noexcept {
    return g_definitional.load(std::memory_order_relaxed);
}

std::uint64_t closed_simple_products() noexcept {
    return g_simple.load(std::memory_order_relaxed);
}

void detail::count_definitional() noexcept {
    g_definitional.fetch_add(1, std::memory_order_relaxed);
}

void detail::count_simple() noexcept {
    g_simple.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace stuffle::instrumentation
