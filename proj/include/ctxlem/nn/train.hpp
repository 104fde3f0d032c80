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
// Mini-batch training with Adam, gradient clipping, burn-in, periodic
// validation by greedy exact match on a capped development prefix, patience
// early stopping, and best-checkpoint keeping. Deterministic given the seed.

#ifndef CTXLEM_NN_TRAIN_HPP
#define CTXLEM_NN_TRAIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ctxlem/encoding.hpp"
#include "ctxlem/nn/params.hpp"

namespace ctxlem::nn {

struct Dataset {
  std::vector<std::vector<std::int32_t>> src;
  std::vector<std::vector<std::int32_t>> trg;  // end-of-sequence appended

  std::size_t size() const { return src.size(); }
};

// Converts parallel symbol lines to id sequences, appending eos to targets.
Dataset make_dataset(const std::vector<std::vector<std::string>>& src_lines,
                     const std::vector<std::vector<std::string>>& trg_lines,
                     const SymbolVocab& vocab);

struct TrainingSchedule {
  std::int32_t patience = 20;          // consecutive non-improving validations
  std::int32_t burn_in = -1;           // epochs; -1 = auto by train size
  std::int32_t validation_interval = -1;  // epochs; -1 = auto
  std::int32_t dev_validation_cap = 3000;
  std::int32_t max_epochs = 500;
  double learning_rate = 0.001;
  double clip_norm = 1.0;
  std::int32_t batch_size = 32;

  // Datasets up to 2k instances train with burn-in 20 / interval 5, larger
  // ones with 10 / 2. Explicit values win over the automatic choice.
  void resolve_auto(std::size_t train_size);

  void validate() const;
};

struct TrainResult {
  Parameters<float> params;  // best checkpoint (final params if never saved)
  double best_dev_accuracy = -1;
  std::int32_t validations = 0;
  std::int32_t epochs_run = 0;
  std::string stop_reason;  // "patience" or "max_epochs"
  std::string log;          // JSONL, one record per epoch plus a stop record
};

TrainResult train(const ModelConfig& config, Parameters<float> params,
                  const Dataset& train_set, const Dataset& dev_set,
                  TrainingSchedule schedule, std::uint64_t seed);

// Greedy exact-match accuracy of params on the first `cap` dataset entries.
double exact_match_accuracy(const Parameters<float>& params,
                            const Dataset& data, std::size_t cap,
                            std::int32_t max_target_len);

}  // namespace ctxlem::nn

#endif  // CTXLEM_NN_TRAIN_HPP
