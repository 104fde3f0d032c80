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
//
// Forward and backward passes. The encoder runs both directions in both
// layers; each decoder step runs GRU transition 1 on the previous target
// embedding, scores every encoder position with additive attention, runs
// GRU transition 2 on the context vector, then a plain second-layer GRU,
// and projects to the vocabulary through the tied embedding.

#ifndef CTXLEM_NN_NETWORK_HPP
#define CTXLEM_NN_NETWORK_HPP

#include <cstdint>
#include <vector>

#include "ctxlem/nn/params.hpp"

namespace ctxlem::nn {

// Sequence cache for one GRU direction; columns are timesteps.
template <typename T>
struct GruCache {
  Matrix<T> states;    // h x L
  Matrix<T> r, z, c;   // gates, h x L
  Matrix<T> rec_cand;  // U_h * h_prev, h x L
  Matrix<T> h0;        // h x 1
  bool reverse = false;
};

template <typename T>
struct ModelCache {
  // Encoder.
  Matrix<T> src_emb;     // E x L
  GruCache<T> e1f, e1b, e2f, e2b;
  Matrix<T> h1;          // 2h x L, layer-1 states both directions
  Matrix<T> enc;         // 2h x L, attention memory
  Matrix<T> att_keys_h;  // A x L, att_keys * enc
  Matrix<T> hbar;        // 2h x 1, mean encoder state
  Matrix<T> s0, d0;      // h x 1, decoder start states

  // Decoder; columns are output steps.
  Matrix<T> dec_emb;                 // E x T, previous-symbol embeddings
  GruCache<T> t1, t2, l2;            // states: sprime / s / d
  Matrix<T> ctx;                     // 2h x T
  Matrix<T> alpha;                   // L x T attention weights
  std::vector<Matrix<T>> att_tanh;   // per step: A x L
  Matrix<T> zpre;                    // E x T
  Matrix<T> probs;                   // V x T
};

template <typename T>
struct ForwardResult {
  T loss = 0;       // mean per-target-symbol negative log-likelihood
  T loss_sum = 0;   // summed NLL
  std::int32_t n_symbols = 0;
  Matrix<T> probs;      // V x T
  Matrix<T> attention;  // L x T
};

// Teacher-forced pass. `trg` must end with the end-of-sequence id; both
// sequences must be non-empty. Pass a cache to enable backward().
template <typename T>
ForwardResult<T> forward(const Parameters<T>& params,
                         const std::vector<std::int32_t>& src,
                         const std::vector<std::int32_t>& trg,
                         ModelCache<T>* cache = nullptr);

// Accumulates into `grads` the gradient of loss_sum * loss_scale with
// respect to every parameter. Tied tensors receive contributions from all
// of their roles.
template <typename T>
void backward(const Parameters<T>& params,
              const std::vector<std::int32_t>& src,
              const std::vector<std::int32_t>& trg,
              const ModelCache<T>& cache, T loss_scale, Parameters<T>& grads);

// Encoder output reused across decode steps.
template <typename T>
struct EncodedSource {
  Matrix<T> enc;         // 2h x L
  Matrix<T> att_keys_h;  // A x L
  Matrix<T> s0, d0;      // h x 1
};

template <typename T>
EncodedSource<T> encode_source(const Parameters<T>& params,
                               const std::vector<std::int32_t>& src);

template <typename T>
struct DecodeState {
  Matrix<T> s, d;  // h x 1
};

inline constexpr std::int32_t kStartSymbol = -1;  // zero embedding

// One decoder step; returns log-probabilities over the vocabulary and
// advances `state`.
template <typename T>
Vector<T> decode_step(const Parameters<T>& params,
                      const EncodedSource<T>& source,
                      std::int32_t prev_symbol, DecodeState<T>& state);

}  // namespace ctxlem::nn

#endif  // CTXLEM_NN_NETWORK_HPP
