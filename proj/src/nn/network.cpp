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

#include "ctxlem/nn/network.hpp"

#include <cmath>
#include <limits>

#include "ctxlem/error.hpp"

namespace ctxlem::nn {
namespace {

template <typename T>
using Array = Eigen::Array<T, Eigen::Dynamic, 1>;

constexpr std::int32_t kEosId = 1;  // matches SymbolVocab::kEosId

template <typename T>
Vector<T> softmax(const Vector<T>& a) {
  const T m = a.maxCoeff();
  Vector<T> e = (a.array() - m).exp().matrix();
  return e / e.sum();
}

// One GRU step. wx = w_in * x + bias (3h). Gate columns and the new state
// are written into the provided cache columns.
template <typename T>
void gru_cell_forward(const GruParams<T>& g, const Vector<T>& wx,
                      const Vector<T>& h_prev, Eigen::Index t,
                      GruCache<T>& cache) {
  const Eigen::Index h = h_prev.size();
  Vector<T> u = g.w_rec * h_prev;
  Array<T> ar = wx.segment(0, h).array() + u.segment(0, h).array();
  Array<T> az = wx.segment(h, h).array() + u.segment(h, h).array();
  Array<T> r = T(1) / (T(1) + (-ar).exp());
  Array<T> z = T(1) / (T(1) + (-az).exp());
  Array<T> rec_cand = u.segment(2 * h, h).array();
  Array<T> c = (wx.segment(2 * h, h).array() + r * rec_cand).tanh();
  cache.r.col(t) = r.matrix();
  cache.z.col(t) = z.matrix();
  cache.c.col(t) = c.matrix();
  cache.rec_cand.col(t) = rec_cand.matrix();
  cache.states.col(t) =
      (z * h_prev.array() + (T(1) - z) * c).matrix();
}

// Reverse of one GRU step. Returns the gate preactivation gradients through
// the output parameters and accumulates dh_prev; dA/dU columns let callers
// batch the weight-gradient GEMMs, so this only fills them in.
template <typename T>
void gru_cell_backward_local(const GruCache<T>& cache, Eigen::Index t,
                             const Vector<T>& h_prev, const Vector<T>& dh,
                             Vector<T>& dA_col, Vector<T>& dU_col) {
  const Eigen::Index h = h_prev.size();
  Array<T> r = cache.r.col(t).array();
  Array<T> z = cache.z.col(t).array();
  Array<T> c = cache.c.col(t).array();
  Array<T> rec_cand = cache.rec_cand.col(t).array();
  Array<T> dha = dh.array();

  Array<T> dz = dha * (h_prev.array() - c);
  Array<T> dc = dha * (T(1) - z);
  Array<T> dac = dc * (T(1) - c * c);
  Array<T> dr = dac * rec_cand;
  Array<T> duc = dac * r;
  Array<T> daz = dz * z * (T(1) - z);
  Array<T> dar = dr * r * (T(1) - r);

  dA_col.segment(0, h) = dar.matrix();
  dA_col.segment(h, h) = daz.matrix();
  dA_col.segment(2 * h, h) = dac.matrix();
  dU_col.segment(0, h) = dar.matrix();
  dU_col.segment(h, h) = daz.matrix();
  dU_col.segment(2 * h, h) = duc.matrix();
}

// dh_prev contribution that does not go through w_rec.
template <typename T>
Vector<T> gru_direct_dh_prev(const GruCache<T>& cache, Eigen::Index t,
                             const Vector<T>& dh) {
  return (dh.array() * cache.z.col(t).array()).matrix();
}

template <typename T>
void run_gru(const GruParams<T>& g, const Matrix<T>& x, bool reverse,
             GruCache<T>& cache) {
  const Eigen::Index L = x.cols();
  const Eigen::Index h = g.w_rec.cols();
  cache.reverse = reverse;
  cache.states.resize(h, L);
  cache.r.resize(h, L);
  cache.z.resize(h, L);
  cache.c.resize(h, L);
  cache.rec_cand.resize(h, L);
  cache.h0 = Matrix<T>::Zero(h, 1);

  Matrix<T> wx = g.w_in * x;  // 3h x L
  wx.colwise() += g.bias.col(0);

  Vector<T> h_prev = cache.h0.col(0);
  for (Eigen::Index step = 0; step < L; ++step) {
    const Eigen::Index t = reverse ? L - 1 - step : step;
    gru_cell_forward(g, Vector<T>(wx.col(t)), h_prev, t, cache);
    h_prev = cache.states.col(t);
  }
}

// Backward over a full sequence; accumulates parameter gradients and,
// optionally, input gradients.
template <typename T>
void gru_backward(const GruParams<T>& g, const Matrix<T>& x,
                  const GruCache<T>& cache, const Matrix<T>& dstates,
                  GruParams<T>& grads, Matrix<T>* dx) {
  const Eigen::Index L = x.cols();
  const Eigen::Index h = g.w_rec.cols();
  Matrix<T> dA(3 * h, L);
  Matrix<T> dU(3 * h, L);
  Matrix<T> h_prev_all(h, L);

  Vector<T> dh_carry = Vector<T>::Zero(h);
  Vector<T> dA_col(3 * h), dU_col(3 * h);
  for (Eigen::Index step = L - 1; step >= 0; --step) {
    const Eigen::Index t = cache.reverse ? L - 1 - step : step;
    const Eigen::Index t_prev = cache.reverse ? t + 1 : t - 1;
    Vector<T> h_prev = (step == 0) ? Vector<T>(cache.h0.col(0))
                                   : Vector<T>(cache.states.col(t_prev));
    Vector<T> dh = dstates.col(t) + dh_carry;
    gru_cell_backward_local(cache, t, h_prev, dh, dA_col, dU_col);
    dA.col(t) = dA_col;
    dU.col(t) = dU_col;
    h_prev_all.col(t) = h_prev;
    dh_carry = gru_direct_dh_prev(cache, t, dh);
    dh_carry.noalias() += g.w_rec.transpose() * dU_col;
  }

  grads.w_in.noalias() += dA * x.transpose();
  grads.w_rec.noalias() += dU * h_prev_all.transpose();
  grads.bias.col(0).noalias() += dA.rowwise().sum();
  if (dx) dx->noalias() += g.w_in.transpose() * dA;
}

template <typename T>
void run_encoder(const Parameters<T>& p, const std::vector<std::int32_t>& src,
                 ModelCache<T>& c) {
  const Eigen::Index L = static_cast<Eigen::Index>(src.size());
  const Eigen::Index E = p.embed_dim();
  const Eigen::Index H = p.hidden_dim();

  c.src_emb.resize(E, L);
  for (Eigen::Index t = 0; t < L; ++t)
    c.src_emb.col(t) = p.embedding.row(src[static_cast<std::size_t>(t)]).transpose();

  run_gru(p.enc1_fwd, c.src_emb, false, c.e1f);
  run_gru(p.enc1_bwd, c.src_emb, true, c.e1b);
  c.h1.resize(2 * H, L);
  c.h1.topRows(H) = c.e1f.states;
  c.h1.bottomRows(H) = c.e1b.states;

  run_gru(p.enc2_fwd, c.h1, false, c.e2f);
  run_gru(p.enc2_bwd, c.h1, true, c.e2b);
  c.enc.resize(2 * H, L);
  c.enc.topRows(H) = c.e2f.states;
  c.enc.bottomRows(H) = c.e2b.states;

  c.att_keys_h.noalias() = p.att_keys * c.enc;
  c.hbar = c.enc.rowwise().mean();
  c.s0 = ((p.init1_w * c.hbar + p.init1_b).array().tanh()).matrix();
  c.d0 = ((p.init2_w * c.hbar + p.init2_b).array().tanh()).matrix();
}

// Additive attention for one query; returns the context vector and fills the
// per-step caches.
template <typename T>
Vector<T> attend(const Parameters<T>& p, const ModelCache<T>& c,
                 const Vector<T>& query_state, Eigen::Index i,
                 Matrix<T>& att_tanh_out, Matrix<T>& alpha_out) {
  Vector<T> q = p.att_query * query_state + p.att_bias.col(0);
  att_tanh_out = (c.att_keys_h.colwise() + q).array().tanh().matrix();
  Vector<T> scores = att_tanh_out.transpose() * p.att_score.col(0);
  Vector<T> alpha = softmax(scores);
  alpha_out.col(i) = alpha;
  return c.enc * alpha;
}

template <typename T>
void decoder_cell_sizes(GruCache<T>& cache, Eigen::Index h, Eigen::Index n) {
  cache.states.resize(h, n);
  cache.r.resize(h, n);
  cache.z.resize(h, n);
  cache.c.resize(h, n);
  cache.rec_cand.resize(h, n);
}

}  // namespace

template <typename T>
ForwardResult<T> forward(const Parameters<T>& p,
                         const std::vector<std::int32_t>& src,
                         const std::vector<std::int32_t>& trg,
                         ModelCache<T>* cache) {
  if (src.empty() || trg.empty())
    throw InvalidArgument("forward requires non-empty source and target");
  if (trg.back() != kEosId)
    throw InvalidArgument("target must end with the end-of-sequence symbol");

  ModelCache<T> local;
  ModelCache<T>& c = cache ? *cache : local;

  run_encoder(p, src, c);

  const Eigen::Index L = static_cast<Eigen::Index>(src.size());
  const Eigen::Index steps = static_cast<Eigen::Index>(trg.size());
  const Eigen::Index E = p.embed_dim();
  const Eigen::Index H = p.hidden_dim();
  const Eigen::Index V = p.vocab_size();

  c.dec_emb.setZero(E, steps);
  decoder_cell_sizes(c.t1, H, steps);
  decoder_cell_sizes(c.t2, H, steps);
  decoder_cell_sizes(c.l2, H, steps);
  c.ctx.resize(2 * H, steps);
  c.alpha.resize(L, steps);
  c.att_tanh.assign(static_cast<std::size_t>(steps), Matrix<T>());
  c.zpre.resize(E, steps);
  c.probs.resize(V, steps);

  Vector<T> s_prev = c.s0.col(0);
  Vector<T> d_prev = c.d0.col(0);
  T loss_sum = 0;
  for (Eigen::Index i = 0; i < steps; ++i) {
    if (i > 0)
      c.dec_emb.col(i) =
          p.embedding.row(trg[static_cast<std::size_t>(i - 1)]).transpose();

    Vector<T> wx1 = p.dec_trans1.w_in * c.dec_emb.col(i) + p.dec_trans1.bias.col(0);
    gru_cell_forward(p.dec_trans1, wx1, s_prev, i, c.t1);
    Vector<T> sprime = c.t1.states.col(i);

    c.ctx.col(i) = attend(p, c, sprime, i, c.att_tanh[static_cast<std::size_t>(i)],
                          c.alpha);

    Vector<T> wx2 = p.dec_trans2.w_in * c.ctx.col(i) + p.dec_trans2.bias.col(0);
    gru_cell_forward(p.dec_trans2, wx2, sprime, i, c.t2);
    Vector<T> s = c.t2.states.col(i);

    Vector<T> wx3 = p.dec_layer2.w_in * s + p.dec_layer2.bias.col(0);
    gru_cell_forward(p.dec_layer2, wx3, d_prev, i, c.l2);
    Vector<T> d = c.l2.states.col(i);

    c.zpre.col(i) = ((p.pre_w * d + p.pre_b).array().tanh()).matrix();
    Vector<T> logits = p.output_matrix() * c.zpre.col(i) + p.out_b.col(0);
    Vector<T> prob = softmax(logits);
    c.probs.col(i) = prob;
    const T pt = std::max(prob(trg[static_cast<std::size_t>(i)]),
                          std::numeric_limits<T>::min());
    loss_sum -= std::log(pt);

    s_prev = s;
    d_prev = d;
  }

  ForwardResult<T> result;
  result.loss_sum = loss_sum;
  result.n_symbols = static_cast<std::int32_t>(steps);
  result.loss = loss_sum / static_cast<T>(steps);
  result.probs = c.probs;
  result.attention = c.alpha;
  return result;
}

template <typename T>
void backward(const Parameters<T>& p, const std::vector<std::int32_t>& src,
              const std::vector<std::int32_t>& trg, const ModelCache<T>& c,
              T loss_scale, Parameters<T>& g) {
  if (g.untied_output != p.untied_output)
    throw InvalidArgument("gradient tying mode does not match parameters");

  const Eigen::Index L = static_cast<Eigen::Index>(src.size());
  const Eigen::Index steps = static_cast<Eigen::Index>(trg.size());
  const Eigen::Index E = p.embed_dim();
  const Eigen::Index H = p.hidden_dim();
  const Eigen::Index A = p.att_query.rows();

  // Output projection path, batched over steps.
  Matrix<T> dlogits = c.probs;
  for (Eigen::Index i = 0; i < steps; ++i)
    dlogits(trg[static_cast<std::size_t>(i)], i) -= T(1);
  dlogits *= loss_scale;

  g.out_b.col(0).noalias() += dlogits.rowwise().sum();
  Matrix<T>& dout_emb = g.untied_output ? g.output_embedding : g.embedding;
  dout_emb.noalias() += dlogits * c.zpre.transpose();
  Matrix<T> dzpre = p.output_matrix().transpose() * dlogits;  // E x steps
  Matrix<T> dapre =
      (dzpre.array() * (T(1) - c.zpre.array().square())).matrix();
  g.pre_w.noalias() += dapre * c.l2.states.transpose();
  g.pre_b.col(0).noalias() += dapre.rowwise().sum();
  Matrix<T> dD = p.pre_w.transpose() * dapre;  // h x steps

  // Reverse pass over decoder steps.
  Matrix<T> dH = Matrix<T>::Zero(2 * H, L);
  Matrix<T> dP = Matrix<T>::Zero(A, L);
  Vector<T> ds_carry = Vector<T>::Zero(H);
  Vector<T> dd_carry = Vector<T>::Zero(H);
  Vector<T> ds0 = Vector<T>::Zero(H);
  Vector<T> dd0 = Vector<T>::Zero(H);
  Vector<T> dA_col(3 * H), dU_col(3 * H);

  for (Eigen::Index i = steps - 1; i >= 0; --i) {
    const Vector<T> sprime = c.t1.states.col(i);
    const Vector<T> s_prev =
        (i == 0) ? Vector<T>(c.s0.col(0)) : Vector<T>(c.t2.states.col(i - 1));
    const Vector<T> d_prev =
        (i == 0) ? Vector<T>(c.d0.col(0)) : Vector<T>(c.l2.states.col(i - 1));

    // Layer-2 GRU: state d_i, input s_i.
    Vector<T> dd = dD.col(i) + dd_carry;
    gru_cell_backward_local(c.l2, i, d_prev, dd, dA_col, dU_col);
    g.dec_layer2.w_in.noalias() += dA_col * c.t2.states.col(i).transpose();
    g.dec_layer2.w_rec.noalias() += dU_col * d_prev.transpose();
    g.dec_layer2.bias.col(0) += dA_col;
    Vector<T> ds = p.dec_layer2.w_in.transpose() * dA_col;  // into s_i
    dd_carry = gru_direct_dh_prev(c.l2, i, dd);
    dd_carry.noalias() += p.dec_layer2.w_rec.transpose() * dU_col;
    if (i == 0) {
      dd0 += dd_carry;
      dd_carry.setZero();
    }

    // Transition 2: state s_i, previous state sprime, input ctx.
    ds += ds_carry;
    gru_cell_backward_local(c.t2, i, sprime, ds, dA_col, dU_col);
    g.dec_trans2.w_in.noalias() += dA_col * c.ctx.col(i).transpose();
    g.dec_trans2.w_rec.noalias() += dU_col * sprime.transpose();
    g.dec_trans2.bias.col(0) += dA_col;
    Vector<T> dctx = p.dec_trans2.w_in.transpose() * dA_col;
    Vector<T> dsprime = gru_direct_dh_prev(c.t2, i, ds);
    dsprime.noalias() += p.dec_trans2.w_rec.transpose() * dU_col;

    // Attention backward.
    {
      const Matrix<T>& tanh_q = c.att_tanh[static_cast<std::size_t>(i)];
      Vector<T> alpha = c.alpha.col(i);
      Vector<T> dalpha = c.enc.transpose() * dctx;
      dH.noalias() += dctx * alpha.transpose();
      const T inner = alpha.dot(dalpha);
      Vector<T> de = (alpha.array() * (dalpha.array() - inner)).matrix();
      g.att_score.col(0).noalias() += tanh_q * de;
      Matrix<T> du = (p.att_score.col(0) * de.transpose()).cwiseProduct(
          (T(1) - tanh_q.array().square()).matrix());
      Vector<T> du_sum = du.rowwise().sum();
      g.att_bias.col(0) += du_sum;
      g.att_query.noalias() += du_sum * sprime.transpose();
      dsprime.noalias() += p.att_query.transpose() * du_sum;
      dP += du;
    }

    // Transition 1: state sprime, previous state s_{i-1}, input dec_emb.
    gru_cell_backward_local(c.t1, i, s_prev, dsprime, dA_col, dU_col);
    g.dec_trans1.w_in.noalias() += dA_col * c.dec_emb.col(i).transpose();
    g.dec_trans1.w_rec.noalias() += dU_col * s_prev.transpose();
    g.dec_trans1.bias.col(0) += dA_col;
    if (i > 0) {
      Vector<T> demb = p.dec_trans1.w_in.transpose() * dA_col;
      g.embedding.row(trg[static_cast<std::size_t>(i - 1)]) += demb.transpose();
    }
    ds_carry = gru_direct_dh_prev(c.t1, i, dsprime);
    ds_carry.noalias() += p.dec_trans1.w_rec.transpose() * dU_col;
    if (i == 0) {
      ds0 += ds_carry;
      ds_carry.setZero();
    }
  }

  // Attention key projection.
  g.att_keys.noalias() += dP * c.enc.transpose();
  dH.noalias() += p.att_keys.transpose() * dP;

  // Decoder start states through the init layers and the mean encoding.
  Vector<T> dhbar = Vector<T>::Zero(2 * H);
  {
    Vector<T> da1 =
        (ds0.array() * (T(1) - c.s0.col(0).array().square())).matrix();
    g.init1_w.noalias() += da1 * c.hbar.transpose();
    g.init1_b.col(0) += da1;
    dhbar.noalias() += p.init1_w.transpose() * da1;
    Vector<T> da2 =
        (dd0.array() * (T(1) - c.d0.col(0).array().square())).matrix();
    g.init2_w.noalias() += da2 * c.hbar.transpose();
    g.init2_b.col(0) += da2;
    dhbar.noalias() += p.init2_w.transpose() * da2;
  }
  dH.colwise() += (dhbar / static_cast<T>(L)).eval().col(0);

  // Encoder backward: layer 2, then layer 1, then the embedding rows.
  Matrix<T> dh1 = Matrix<T>::Zero(2 * H, L);
  gru_backward(p.enc2_fwd, c.h1, c.e2f, Matrix<T>(dH.topRows(H)),
               g.enc2_fwd, &dh1);
  gru_backward(p.enc2_bwd, c.h1, c.e2b, Matrix<T>(dH.bottomRows(H)),
               g.enc2_bwd, &dh1);

  Matrix<T> dx = Matrix<T>::Zero(E, L);
  gru_backward(p.enc1_fwd, c.src_emb, c.e1f, Matrix<T>(dh1.topRows(H)),
               g.enc1_fwd, &dx);
  gru_backward(p.enc1_bwd, c.src_emb, c.e1b, Matrix<T>(dh1.bottomRows(H)),
               g.enc1_bwd, &dx);
  for (Eigen::Index t = 0; t < L; ++t)
    g.embedding.row(src[static_cast<std::size_t>(t)]) += dx.col(t).transpose();
}

template <typename T>
EncodedSource<T> encode_source(const Parameters<T>& p,
                               const std::vector<std::int32_t>& src) {
  if (src.empty()) throw InvalidArgument("cannot encode an empty source");
  ModelCache<T> c;
  run_encoder(p, src, c);
  EncodedSource<T> out;
  out.enc = std::move(c.enc);
  out.att_keys_h = std::move(c.att_keys_h);
  out.s0 = std::move(c.s0);
  out.d0 = std::move(c.d0);
  return out;
}

template <typename T>
Vector<T> decode_step(const Parameters<T>& p, const EncodedSource<T>& source,
                      std::int32_t prev_symbol, DecodeState<T>& state) {
  const Eigen::Index H = p.hidden_dim();
  const Eigen::Index L = source.enc.cols();
  if (state.s.size() == 0) {
    state.s = source.s0;
    state.d = source.d0;
  }

  Vector<T> emb = Vector<T>::Zero(p.embed_dim());
  if (prev_symbol != kStartSymbol)
    emb = p.embedding.row(prev_symbol).transpose();

  GruCache<T> scratch;
  decoder_cell_sizes(scratch, H, 1);

  Vector<T> wx1 = p.dec_trans1.w_in * emb + p.dec_trans1.bias.col(0);
  gru_cell_forward(p.dec_trans1, wx1, Vector<T>(state.s.col(0)), 0, scratch);
  Vector<T> sprime = scratch.states.col(0);

  Vector<T> q = p.att_query * sprime + p.att_bias.col(0);
  Matrix<T> tanh_q = (source.att_keys_h.colwise() + q).array().tanh().matrix();
  Vector<T> scores = tanh_q.transpose() * p.att_score.col(0);
  Vector<T> alpha = softmax(scores);
  Vector<T> ctx = source.enc * alpha;

  Vector<T> wx2 = p.dec_trans2.w_in * ctx + p.dec_trans2.bias.col(0);
  gru_cell_forward(p.dec_trans2, wx2, sprime, 0, scratch);
  Vector<T> s = scratch.states.col(0);

  Vector<T> wx3 = p.dec_layer2.w_in * s + p.dec_layer2.bias.col(0);
  gru_cell_forward(p.dec_layer2, wx3, Vector<T>(state.d.col(0)), 0, scratch);
  Vector<T> d = scratch.states.col(0);

  state.s = s;
  state.d = d;

  Vector<T> zpre = ((p.pre_w * d + p.pre_b).array().tanh()).matrix();
  Vector<T> logits = p.output_matrix() * zpre + p.out_b.col(0);
  const T m = logits.maxCoeff();
  const T logz = std::log((logits.array() - m).exp().sum()) + m;
  return (logits.array() - logz).matrix();
}

template ForwardResult<float> forward<float>(const Parameters<float>&,
                                             const std::vector<std::int32_t>&,
                                             const std::vector<std::int32_t>&,
                                             ModelCache<float>*);
template ForwardResult<double> forward<double>(
    const Parameters<double>&, const std::vector<std::int32_t>&,
    const std::vector<std::int32_t>&, ModelCache<double>*);
template void backward<float>(const Parameters<float>&,
                              const std::vector<std::int32_t>&,
                              const std::vector<std::int32_t>&,
                              const ModelCache<float>&, float,
                              Parameters<float>&);
template void backward<double>(const Parameters<double>&,
                               const std::vector<std::int32_t>&,
                               const std::vector<std::int32_t>&,
                               const ModelCache<double>&, double,
                               Parameters<double>&);
template EncodedSource<float> encode_source<float>(
    const Parameters<float>&, const std::vector<std::int32_t>&);
template EncodedSource<double> encode_source<double>(
    const Parameters<double>&, const std::vector<std::int32_t>&);
template Vector<float> decode_step<float>(const Parameters<float>&,
                                          const EncodedSource<float>&,
                                          std::int32_t, DecodeState<float>&);
template Vector<double> decode_step<double>(const Parameters<double>&,
                                            const EncodedSource<double>&,
                                            std::int32_t,
                                            DecodeState<double>&);

}  // namespace ctxlem::nn
