// Copyright 2026 The ctxlem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTXLEM_NN_DECODE_HPP
#define CTXLEM_NN_DECODE_HPP

#include <cstdint>
#include <vector>

#include "ctxlem/nn/network.hpp"

namespace ctxlem::nn {

// Argmax decoding until end-of-sequence or max_len symbols; ties break
// toward the lowest symbol id. The returned ids exclude end-of-sequence.
template <typename T>
std::vector<std::int32_t> greedy_decode(const Parameters<T>& params,
                                        const std::vector<std::int32_t>& src,
                                        std::int32_t max_len);

// Beam search with beam width k. Live hypotheses all have equal length, so
// pruning k-best by cumulative log-probability equals pruning by
// length-normalized score; length normalization picks among finished
// hypotheses. The search stops once k hypotheses have finished or max_len
// is reached (remaining live hypotheses then count as finished).
// Deterministic: ties break toward the lexicographically smaller id sequence.
template <typename T>
std::vector<std::int32_t> beam_decode(const Parameters<T>& params,
                                      const std::vector<std::int32_t>& src,
                                      std::int32_t beam_width,
                                      std::int32_t max_len);

}  // namespace ctxlem::nn

#endif  // CTXLEM_NN_DECODE_HPP
