// SPDX-License-Identifier: Apache-2.0
#include "gkdim/growth.hpp"

#include <algorithm>

namespace gkdim {

Rational UniPoly::eval(std::int64_t m) const {
  Rational r(0);
  Rational x(static_cast<long>(m));
  for (std::size_t i = c_.size(); i > 0; --i) r = r * x + c_[i - 1];
  return r;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& q = c_[k];
    if (q.is_zero()) continue;
    const bool neg = q.sign() < 0;
    Rational mag = q.abs();
    std::string mono;
    if (k == 1) mono = var;
    else if (k > 1) mono = var + "^" + std::to_string(k);
    std::string body;
    if (mono.empty()) body = mag.to_string();
    else if (mag.is_one()) body = mono;
    else body = mag.to_string() + "*" + mono;
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string GrowthReport::to_kv() const {
  std::string out;
  out += "source = " + source + "\n";
  out += "window = " + std::to_string(window) + "\n";
  if (degree.has_value()) {
    out += "degree = " + std::to_string(*degree) + "\n";
    out += "hilbert = " + (hilbert ? hilbert->to_string() : std::string("none")) + "\n";
    out += "residual = " + residual.to_string() + "\n";
    out += "stable = true\n";
  } else {
    out += "degree = unstable\n";
    out += "stable = false\n";
  }
  return out;
}

namespace {

std::vector<Rational> forward_diff(const std::vector<Rational>& v) {
  std::vector<Rational> d;
  d.reserve(v.size() > 0 ? v.size() - 1 : 0);
  for (std::size_t i = 1; i < v.size(); ++i) d.push_back(v[i] - v[i - 1]);
  return d;
}

bool tail_constant(const std::vector<Rational>& v, int window) {
  if (static_cast<int>(v.size()) < window) return false;
  for (std::size_t i = v.size() - window + 1; i < v.size(); ++i)
    if (v[i] != v[v.size() - window]) return false;
  return true;
}

bool tail_zero(const std::vector<Rational>& v, int window) {
  if (static_cast<int>(v.size()) < window) return false;
  for (std::size_t i = v.size() - window; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

std::vector<Rational> to_rationals(const DimensionSequence& seq) {
  std::vector<Rational> v;
  v.reserve(seq.dims.size());
  for (std::int64_t d : seq.dims) v.push_back(Rational(static_cast<long>(d)));
  return v;
}

}  // namespace

std::optional<int> finite_difference_degree(const DimensionSequence& seq, int window) {
  if (window < 1) throw Error(ErrorKind::Input, "window must be >= 1");
  const int len = static_cast<int>(seq.dims.size());
  if (len < window + 1)
    throw Error(ErrorKind::InsufficientData,
                "need at least window+1 = " + std::to_string(window + 1) + " entries, have " +
                    std::to_string(len));

  std::vector<Rational> level = to_rationals(seq);
  // d-th differences have len-d entries; the (d+1)-th needs `window` of them.
  for (int d = 0; d + window + 1 <= len; ++d) {
    std::vector<Rational> next = forward_diff(level);
    if (tail_constant(level, window) && tail_zero(next, window)) return d;
    level = std::move(next);
  }
  return std::nullopt;
}

UniPoly fit_hilbert_polynomial(const DimensionSequence& seq, int window) {
  std::optional<int> deg = finite_difference_degree(seq, window);
  if (!deg.has_value())
    throw Error(ErrorKind::DegreeUnstable, "sequence has no stable polynomial degree");
  const int d = *deg;
  const int len = static_cast<int>(seq.dims.size());
  if (len < d + 1)
    throw Error(ErrorKind::InsufficientData, "not enough points to interpolate");

  // Newton interpolation on the last d+1 points.
  std::vector<std::int64_t> xs(d + 1);
  std::vector<Rational> fs(d + 1);
  for (int i = 0; i <= d; ++i) {
    xs[i] = len - 1 - d + i;
    fs[i] = Rational(static_cast<long>(seq.dims[xs[i]]));
  }
  // Divided differences in place: fs[k] becomes f[x_0..x_k].
  for (int k = 1; k <= d; ++k)
    for (int i = d; i >= k; --i)
      fs[i] = (fs[i] - fs[i - 1]) / Rational(static_cast<long>(xs[i] - xs[i - k]));

  std::vector<Rational> acc{Rational(1)};  // prod_{j<k} (x - x_j), ascending coeffs
  std::vector<Rational> coeffs;
  for (int k = 0; k <= d; ++k) {
    if (static_cast<int>(coeffs.size()) < static_cast<int>(acc.size()))
      coeffs.resize(acc.size(), Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) coeffs[i] += fs[k] * acc[i];
    if (k < d) {
      // acc *= (x - xs[k])
      acc.insert(acc.begin(), Rational(0));
      for (std::size_t i = 0; i + 1 < acc.size(); ++i)
        acc[i] -= Rational(static_cast<long>(xs[k])) * acc[i + 1];
    }
  }
  return UniPoly(std::move(coeffs));
}

DimensionSequence faulhaber_cumulative(const DimensionSequence& seq) {
  DimensionSequence out;
  out.source = "cumulative(" + seq.source + ")";
  out.dims.reserve(seq.dims.size());
  std::int64_t acc = 0;
  for (std::int64_t d : seq.dims) {
    if (__builtin_add_overflow(acc, d, &acc))
      throw Error(ErrorKind::Overflow, "cumulative dimension exceeds 64 bits");
    out.dims.push_back(acc);
  }
  return out;
}

GrowthReport gk_estimate(const DimensionSequence& seq, int window) {
  if (seq.dims.size() < 6)
    throw Error(ErrorKind::InsufficientData, "gk_estimate needs at least 6 levels");
  GrowthReport report;
  report.window = window;
  report.source = seq.source;
  report.degree = finite_difference_degree(seq, window);
  if (!report.degree.has_value()) return report;

  UniPoly poly = fit_hilbert_polynomial(seq, window);
  const int d = *report.degree;
  const int len = static_cast<int>(seq.dims.size());
  // The detector certifies a single degree-d polynomial on the last
  // window+d+1 entries; verify exactness there and record the deviation.
  const int span = std::min(len, window + d + 1);
  Rational residual(0);
  for (int m = len - span; m < len; ++m) {
    Rational dev = (poly.eval(m) - Rational(static_cast<long>(seq.dims[m]))).abs();
    residual = std::max(residual, dev);
  }
  report.hilbert = std::move(poly);
  report.residual = residual;
  return report;
}

}  // namespace gkdim
