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

#include "ctxlem/nn/params.hpp"

#include <cmath>

#include "ctxlem/error.hpp"
#include "ctxlem/rng.hpp"

namespace ctxlem::nn {

void ModelConfig::validate() const {
  if (embed_dim < 1 || hidden_dim < 1)
    throw InvalidArgument("model dimensions must be >= 1");
  if (max_target_len < 1)
    throw InvalidArgument("max_target_len must be >= 1");
  if (beam_width < 1) throw InvalidArgument("beam_width must be >= 1");
  if (context_n < 0) throw InvalidArgument("context_n must be >= 0");
}

namespace {

// Uniform Glorot bounds: limit = sqrt(6 / (fan_in + fan_out)) with
// fan_in = cols, fan_out = rows. Filled column-major for a stable draw order.
template <typename T>
void glorot_fill(Matrix<T>& m, Eigen::Index rows, Eigen::Index cols,
                 Rng& rng) {
  m.resize(rows, cols);
  const double limit =
      std::sqrt(6.0 / static_cast<double>(rows + cols));
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      m(r, c) = static_cast<T>((rng.real01() * 2.0 - 1.0) * limit);
    }
  }
}

template <typename T>
void zero_fill(Matrix<T>& m, Eigen::Index rows, Eigen::Index cols) {
  m.setZero(rows, cols);
}

template <typename T>
void init_gru(GruParams<T>& g, Eigen::Index in, Eigen::Index h, Rng& rng) {
  glorot_fill(g.w_in, 3 * h, in, rng);
  glorot_fill(g.w_rec, 3 * h, h, rng);
  zero_fill(g.bias, 3 * h, 1);
}

}  // namespace

template <typename T>
Parameters<T> init_params(const ModelConfig& config, std::int32_t vocab_size) {
  config.validate();
  if (vocab_size < 4)
    throw InvalidArgument("vocabulary must contain the reserved symbols");
  const Eigen::Index V = vocab_size;
  const Eigen::Index E = config.embed_dim;
  const Eigen::Index H = config.hidden_dim;
  const Eigen::Index A = H;  // attention dimensionality

  Rng rng(config.seed);
  Parameters<T> p;
  glorot_fill(p.embedding, V, E, rng);
  init_gru(p.enc1_fwd, E, H, rng);
  init_gru(p.enc1_bwd, E, H, rng);
  init_gru(p.enc2_fwd, 2 * H, H, rng);
  init_gru(p.enc2_bwd, 2 * H, H, rng);
  init_gru(p.dec_trans1, E, H, rng);
  glorot_fill(p.att_query, A, H, rng);
  glorot_fill(p.att_keys, A, 2 * H, rng);
  zero_fill(p.att_bias, A, 1);
  glorot_fill(p.att_score, A, 1, rng);
  init_gru(p.dec_trans2, 2 * H, H, rng);
  init_gru(p.dec_layer2, H, H, rng);
  glorot_fill(p.init1_w, H, 2 * H, rng);
  zero_fill(p.init1_b, H, 1);
  glorot_fill(p.init2_w, H, 2 * H, rng);
  zero_fill(p.init2_b, H, 1);
  glorot_fill(p.pre_w, E, H, rng);
  zero_fill(p.pre_b, E, 1);
  zero_fill(p.out_b, V, 1);
  return p;
}

template Parameters<float> init_params<float>(const ModelConfig&,
                                              std::int32_t);
template Parameters<double> init_params<double>(const ModelConfig&,
                                                std::int32_t);

}  // namespace ctxlem::nn
