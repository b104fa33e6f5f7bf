// Runtime-configurable limits.
//
// POLYSEQ_MAX_N in the environment overrides the default sequence length cap
// at process start; both caps can also be adjusted programmatically.

#pragma once

namespace polyseq {

inline constexpr long long kDefaultMaxSequenceLength = 1LL << 20;
inline constexpr long long kDefaultMaxCyclotomicOrder = 4096;

long long max_sequence_length();
void set_max_sequence_length(long long n);

long long max_cyclotomic_order();
void set_max_cyclotomic_order(long long n);

} // namespace polyseq
