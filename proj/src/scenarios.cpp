#include "dcg/scenarios.hpp"

#include "dcg/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dcg {

namespace {

void check_parameter(const ParameterScenario& sc) {
  if (sc.nodes < 1 || sc.taps < 1 || sc.instants < 1)
    throw std::invalid_argument("parameter scenario: counts must be positive");
  if (!(sc.input_variance > 0.0) || !(sc.noise_variance >= 0.0))
    throw std::invalid_argument("parameter scenario: variances out of range");
}

void check_spectrum(const SpectrumScenario& sc) {
  if (sc.nodes < 1 || sc.basis_count < 1 || sc.instants < 1)
    throw std::invalid_argument("spectrum scenario: counts must be positive");
  if (sc.freq_samples <= sc.basis_count)
    throw std::invalid_argument(
        "spectrum scenario: freq_samples must exceed basis_count");
  if (sc.active_count < 1 || sc.active_count > sc.basis_count)
    throw std::invalid_argument(
        "spectrum scenario: active_count must lie in [1, basis_count]");
  if (!(sc.f_max > sc.f_min))
    throw std::invalid_argument("spectrum scenario: f_max must exceed f_min");
  if (!(sc.noise_variance >= 0.0))
    throw std::invalid_argument("spectrum scenario: noise variance out of range");
}

}  // namespace

RunData gen_parameter_data(const ParameterScenario& sc, std::uint64_t run_seed) {
  check_parameter(sc);
  GaussianSource src(run_seed);

  RunData data;
  data.nodes = sc.nodes;
  data.instants = sc.instants;
  data.dim = sc.taps;
  data.blockwise = false;

  // Draw order is fixed: w0 first, then per node all regressors, then that
  // node's noise samples.
  data.true_weights = src.circular_vector(sc.taps, 1.0);
  data.true_weights /= data.true_weights.norm();

  data.streams.resize(sc.nodes);
  for (int k = 0; k < sc.nodes; ++k) {
    NodeStream& s = data.streams[k];
    s.xs = Matrix(sc.taps, sc.instants);
    s.ds = Vector(sc.instants);
    for (int i = 0; i < sc.instants; ++i)
      s.xs.col(i) = src.circular_vector(sc.taps, sc.input_variance);
    for (int i = 0; i < sc.instants; ++i)
      s.ds(i) = data.true_weights.dot(s.xs.col(i)) + src.circular(sc.noise_variance);
  }
  return data;
}

SpectrumModel build_spectrum_model(const SpectrumScenario& sc,
                                   std::uint64_t scenario_seed) {
  check_spectrum(sc);
  SpectrumModel model;

  const double span = sc.f_max - sc.f_min;
  model.grid = RealVector(sc.freq_samples);
  for (int j = 0; j < sc.freq_samples; ++j)
    model.grid(j) = sc.f_min + j * span / sc.freq_samples;

  // Row j of the measurement matrix samples all rectangles at grid(j); the
  // rectangles partition [f_min, f_max) so each row has exactly one 1.  Both
  // families are uniform over the same span, so rectangle membership reduces
  // to exact integer arithmetic: floor((grid(j) - f_min) / width) = j*B/Nc.
  model.basis = RealMatrix::Zero(sc.freq_samples, sc.basis_count);
  for (int j = 0; j < sc.freq_samples; ++j) {
    int m = static_cast<int>((static_cast<long long>(j) * sc.basis_count) /
                             sc.freq_samples);
    m = std::clamp(m, 0, sc.basis_count - 1);
    model.basis(j, m) = 1.0;
  }

  std::vector<int> indices(sc.basis_count);
  std::iota(indices.begin(), indices.end(), 0);
  std::mt19937_64 engine(scenario_seed);
  model.active.clear();
  std::sample(indices.begin(), indices.end(), std::back_inserter(model.active),
              sc.active_count, engine);
  std::sort(model.active.begin(), model.active.end());

  model.true_weights = Vector::Zero(sc.basis_count);
  for (int m : model.active) model.true_weights(m) = Complex(1.0, 0.0);

  model.block = std::make_shared<const Matrix>(
      model.basis.transpose().cast<Complex>());
  return model;
}

RunData gen_spectrum_data(const SpectrumScenario& sc, const SpectrumModel& model,
                          std::uint64_t run_seed) {
  check_spectrum(sc);
  if (!model.block || model.basis.rows() != sc.freq_samples ||
      model.basis.cols() != sc.basis_count)
    throw std::invalid_argument("gen_spectrum_data: model does not match scenario");
  GaussianSource src(run_seed);

  RunData data;
  data.nodes = sc.nodes;
  data.instants = sc.instants;
  data.dim = sc.basis_count;
  data.blockwise = true;
  data.true_weights = model.true_weights;

  const RealVector clean = model.basis * model.true_weights.real();
  data.streams.resize(sc.nodes);
  for (int k = 0; k < sc.nodes; ++k) {
    NodeStream& s = data.streams[k];
    s.block = model.block;
    s.block_ds = Matrix(sc.freq_samples, sc.instants);
    for (int i = 0; i < sc.instants; ++i)
      for (int j = 0; j < sc.freq_samples; ++j)
        s.block_ds(j, i) = Complex(clean(j) + src.real(sc.noise_variance), 0.0);
  }
  return data;
}

RealVector psd_from_weights(const RealMatrix& basis, const Vector& w) {
  if (basis.cols() != w.size())
    throw std::invalid_argument("psd_from_weights: size mismatch");
  return basis * w.real();
}

RunData transform_run_data(const RunData& data, const Preconditioner& P) {
  if (P.kind == TransformKind::none) return data;
  if (P.dim() != data.dim)
    throw std::invalid_argument("transform_run_data: dimension mismatch");
  RunData out;
  out.nodes = data.nodes;
  out.instants = data.instants;
  out.dim = data.dim;
  out.blockwise = data.blockwise;
  out.true_weights = data.true_weights;
  out.streams.resize(data.streams.size());
  std::shared_ptr<const Matrix> shared_block;
  const Matrix* shared_src = nullptr;
  for (size_t k = 0; k < data.streams.size(); ++k) {
    const NodeStream& in = data.streams[k];
    NodeStream& s = out.streams[k];
    if (data.blockwise) {
      // Transform a shared block once and share the result the same way.
      if (in.block.get() != shared_src) {
        shared_block = std::make_shared<const Matrix>(P.T * (*in.block));
        shared_src = in.block.get();
      }
      s.block = shared_block;
      s.block_ds = in.block_ds;
    } else {
      s.xs = transform_regressors(P, in.xs);
      s.ds = in.ds;
    }
  }
  return out;
}

}  // namespace dcg
