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

#include "ctxlem/nn/decode.hpp"

#include <algorithm>
#include <memory>

#include "ctxlem/error.hpp"

namespace ctxlem::nn {
namespace {

constexpr std::int32_t kEosId = 1;

// Lowest index among maximal coefficients.
template <typename T>
std::int32_t argmax_lowest(const Vector<T>& v) {
  std::int32_t best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (v(i) > v(best)) best = static_cast<std::int32_t>(i);
  }
  return best;
}

template <typename T>
struct Hypothesis {
  std::vector<std::int32_t> symbols;
  double total = 0;             // cumulative log-probability
  std::int32_t steps = 0;       // decoder steps taken (incl. eos step)
  std::shared_ptr<DecodeState<T>> state;  // after feeding symbols
};

// Final ranking: length-normalized score, then lexicographically smaller
// symbol sequence.
template <typename T>
bool better_finished(const Hypothesis<T>& a, const Hypothesis<T>& b) {
  const double na = a.steps ? a.total / a.steps : 0;
  const double nb = b.steps ? b.total / b.steps : 0;
  if (na != nb) return na > nb;
  return a.symbols < b.symbols;
}

}  // namespace

template <typename T>
std::vector<std::int32_t> greedy_decode(const Parameters<T>& params,
                                        const std::vector<std::int32_t>& src,
                                        std::int32_t max_len) {
  EncodedSource<T> source = encode_source(params, src);
  DecodeState<T> state;
  std::vector<std::int32_t> out;
  std::int32_t prev = kStartSymbol;
  for (std::int32_t step = 0; step < max_len; ++step) {
    Vector<T> logp = decode_step(params, source, prev, state);
    const std::int32_t best = argmax_lowest(logp);
    if (best == kEosId) break;
    out.push_back(best);
    prev = best;
  }
  return out;
}

template <typename T>
std::vector<std::int32_t> beam_decode(const Parameters<T>& params,
                                      const std::vector<std::int32_t>& src,
                                      std::int32_t beam_width,
                                      std::int32_t max_len) {
  if (beam_width < 1) throw InvalidArgument("beam width must be >= 1");
  EncodedSource<T> source = encode_source(params, src);

  std::vector<Hypothesis<T>> live(1);
  live[0].state = std::make_shared<DecodeState<T>>();
  std::vector<Hypothesis<T>> finished;

  struct Candidate {
    double total;
    std::vector<std::int32_t> symbols;
    std::int32_t steps;
    std::shared_ptr<DecodeState<T>> state;
  };

  for (std::int32_t step = 0; step < max_len && !live.empty(); ++step) {
    std::vector<Candidate> candidates;
    for (Hypothesis<T>& hyp : live) {
      auto state = std::make_shared<DecodeState<T>>(*hyp.state);
      const std::int32_t prev =
          hyp.symbols.empty() ? kStartSymbol : hyp.symbols.back();
      Vector<T> logp = decode_step(params, source, prev, *state);
      for (Eigen::Index v = 0; v < logp.size(); ++v) {
        Candidate cand;
        cand.total = hyp.total + static_cast<double>(logp(v));
        cand.symbols = hyp.symbols;
        cand.symbols.push_back(static_cast<std::int32_t>(v));
        cand.steps = hyp.steps + 1;
        cand.state = state;
        candidates.push_back(std::move(cand));
      }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.total != b.total) return a.total > b.total;
                return a.symbols < b.symbols;
              });

    std::vector<Hypothesis<T>> next_live;
    for (Candidate& cand : candidates) {
      if (cand.symbols.back() == kEosId) {
        if (finished.size() < static_cast<std::size_t>(beam_width)) {
          Hypothesis<T> h;
          h.symbols = std::move(cand.symbols);
          h.symbols.pop_back();  // drop eos
          h.total = cand.total;
          h.steps = cand.steps;
          finished.push_back(std::move(h));
        }
      } else if (next_live.size() < static_cast<std::size_t>(beam_width)) {
        Hypothesis<T> h;
        h.symbols = std::move(cand.symbols);
        h.total = cand.total;
        h.steps = cand.steps;
        h.state = cand.state;
        next_live.push_back(std::move(h));
      }
      if (next_live.size() == static_cast<std::size_t>(beam_width)) break;
    }
    live = std::move(next_live);
    if (finished.size() >= static_cast<std::size_t>(beam_width)) break;
  }

  // When the cap ends the search early, live hypotheses count as finished
  // without eos; once the quota is filled they are simply dropped.
  if (finished.size() < static_cast<std::size_t>(beam_width)) {
    for (Hypothesis<T>& hyp : live) {
      hyp.state.reset();
      finished.push_back(std::move(hyp));
    }
  }
  if (finished.empty()) return {};

  const Hypothesis<T>* best = &finished[0];
  for (const Hypothesis<T>& hyp : finished) {
    if (better_finished(hyp, *best)) best = &hyp;
  }
  return best->symbols;
}

template std::vector<std::int32_t> greedy_decode<float>(
    const Parameters<float>&, const std::vector<std::int32_t>&, std::int32_t);
template std::vector<std::int32_t> greedy_decode<double>(
    const Parameters<double>&, const std::vector<std::int32_t>&, std::int32_t);
template std::vector<std::int32_t> beam_decode<float>(
    const Parameters<float>&, const std::vector<std::int32_t>&, std::int32_t,
    std::int32_t);
template std::vector<std::int32_t> beam_decode<double>(
    const Parameters<double>&, const std::vector<std::int32_t>&, std::int32_t,
    std::int32_t);

}  // namespace ctxlem::nn
