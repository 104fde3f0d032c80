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
// Parameter tensors for the character transducer: a 2-layer bidirectional
// GRU encoder and a 2-layer decoder whose first layer is a conditional GRU
// (transition -> additive attention -> transition). The embedding matrix is
// shared between the encoder input, the decoder input, and the output
// softmax projection (tied storage).

#ifndef CTXLEM_NN_PARAMS_HPP
#define CTXLEM_NN_PARAMS_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ctxlem::nn {

template <typename T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

struct ModelConfig {
  std::int32_t embed_dim = 64;
  std::int32_t hidden_dim = 128;
  std::int32_t context_n = 20;  // dataset context width, echoed in artifacts
  std::int32_t beam_width = 1;
  std::int32_t max_target_len = 64;
  std::uint64_t seed = 1;

  void validate() const;
};

// One GRU cell with fused gates; rows are ordered [reset; update; candidate].
template <typename T>
struct GruParams {
  Matrix<T> w_in;   // 3h x in
  Matrix<T> w_rec;  // 3h x h
  Matrix<T> bias;   // 3h x 1
};

template <typename T>
struct Parameters {
  Matrix<T> embedding;  // vocab x embed; also the output projection (tied)

  GruParams<T> enc1_fwd, enc1_bwd;  // input: embeddings
  GruParams<T> enc2_fwd, enc2_bwd;  // input: layer-1 states (2h)

  GruParams<T> dec_trans1;  // input: previous target embedding
  Matrix<T> att_query;      // A x h
  Matrix<T> att_keys;       // A x 2h
  Matrix<T> att_bias;       // A x 1
  Matrix<T> att_score;      // A x 1
  GruParams<T> dec_trans2;  // input: attention context (2h)
  GruParams<T> dec_layer2;  // input: layer-1 output (h)

  Matrix<T> init1_w, init1_b;  // decoder layer-1 start state from mean encoding
  Matrix<T> init2_w, init2_b;  // decoder layer-2 start state
  Matrix<T> pre_w, pre_b;      // hidden -> embedding-sized pre-softmax tanh
  Matrix<T> out_b;             // vocab x 1

  // Verification aid for the tied-gradient oracle: when set, the output
  // projection reads from output_embedding instead of embedding, and
  // gradients accumulate separately per role. Checkpoints are always tied.
  bool untied_output = false;
  Matrix<T> output_embedding;

  const Matrix<T>& output_matrix() const {
    return untied_output ? output_embedding : embedding;
  }

  void untie_output() {
    output_embedding = embedding;
    untied_output = true;
  }

  std::int32_t vocab_size() const {
    return static_cast<std::int32_t>(embedding.rows());
  }
  std::int32_t embed_dim() const {
    return static_cast<std::int32_t>(embedding.cols());
  }
  std::int32_t hidden_dim() const {
    return static_cast<std::int32_t>(dec_layer2.w_rec.cols());
  }

  // Visits every tensor in a fixed order. Fn: (const char* name, Matrix<T>&).
  template <typename Fn>
  void for_each(Fn&& fn) {
    auto gru = [&](const char* prefix, GruParams<T>& g) {
      fn((std::string(prefix) + ".w_in").c_str(), g.w_in);
      fn((std::string(prefix) + ".w_rec").c_str(), g.w_rec);
      fn((std::string(prefix) + ".bias").c_str(), g.bias);
    };
    fn("embedding", embedding);
    gru("enc1_fwd", enc1_fwd);
    gru("enc1_bwd", enc1_bwd);
    gru("enc2_fwd", enc2_fwd);
    gru("enc2_bwd", enc2_bwd);
    gru("dec_trans1", dec_trans1);
    fn("att_query", att_query);
    fn("att_keys", att_keys);
    fn("att_bias", att_bias);
    fn("att_score", att_score);
    gru("dec_trans2", dec_trans2);
    gru("dec_layer2", dec_layer2);
    fn("init1_w", init1_w);
    fn("init1_b", init1_b);
    fn("init2_w", init2_w);
    fn("init2_b", init2_b);
    fn("pre_w", pre_w);
    fn("pre_b", pre_b);
    fn("out_b", out_b);
    if (untied_output) fn("output_embedding", output_embedding);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    const_cast<Parameters<T>*>(this)->for_each(
        [&](const char* name, Matrix<T>& m) {
          fn(name, static_cast<const Matrix<T>&>(m));
        });
  }

  // Same shapes, all zeros; mirrors untied_output.
  Parameters<T> zeros_like() const {
    Parameters<T> out = *this;
    out.for_each([](const char*, Matrix<T>& m) { m.setZero(); });
    return out;
  }

  // Elementwise conversion (e.g. float -> double for gradient checking).
  template <typename U>
  Parameters<U> cast() const;
};

// Glorot-style uniform initialization of all weight matrices (biases zero),
// drawn from the toolkit PRNG; deterministic for a fixed (config, vocab
// size, seed).
template <typename T>
Parameters<T> init_params(const ModelConfig& config, std::int32_t vocab_size);

template <typename T>
template <typename U>
Parameters<U> Parameters<T>::cast() const {
  Parameters<U> out;
  out.untied_output = untied_output;
  auto src = const_cast<Parameters<T>*>(this);
  // Build destination by visiting both in lockstep; shapes are identical by
  // construction, so collect pointers in order.
  std::vector<Matrix<T>*> src_tensors;
  src->for_each([&](const char*, Matrix<T>& m) { src_tensors.push_back(&m); });
  std::size_t i = 0;
  out.for_each([&](const char*, Matrix<U>& m) {
    m = src_tensors[i++]->template cast<U>();
  });
  return out;
}

}  // namespace ctxlem::nn

#endif  // CTXLEM_NN_PARAMS_HPP
