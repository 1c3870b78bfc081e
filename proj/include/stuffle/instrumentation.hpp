#pragma once

#include <cstdint>

namespace stuffle::instrumentation {

// Monotone counters used by the verification suites to assert which code
// path produced a result (e.g. that the general reducer bottoms out in
// closed-form simple products and never falls back to the definitional
// recursion). Safe to read and bump from multiple threads.

// Word-level products evaluated by the definitional three-term recursion.
std::uint64_t definitional_word_products() noexcept;

// Invocations of the closed-form simple product z_p^m * z_p^n.
std::uint64_t closed_simple_products() noexcept;

namespace detail {
void count_definitional() noexcept;
void count_simple() noexcept;
}  // namespace detail

}  // namespace stuffle::instrumentation
