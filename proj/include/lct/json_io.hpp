#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lct/gaussian.hpp"
#include "lct/metric.hpp"
#include "lct/symplectic.hpp"

namespace lct {

using Json = nlohmann::json;

inline Json metric_to_json(const Metric& m) {
  return Json{{"plus", m.d_plus()}, {"minus", m.d_minus()}};
}

inline Metric metric_from_json(const Json& j) {
  return Metric(j.at("plus").get<int>(), j.at("minus").get<int>());
}

inline Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Mat matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix_from_json: array expected");
  const auto rows = j.size();
  const auto cols = j.at(0).size();
  Mat m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw std::invalid_argument("matrix_from_json: ragged rows");
    for (size_t k = 0; k < cols; ++k) {
      const auto& v = j.at(i).at(k);
      if (!v.is_number()) throw std::invalid_argument("matrix_from_json: non-numeric entry");
      m(i, k) = v.get<double>();
    }
  }
  if (!m.allFinite()) throw std::invalid_argument("matrix_from_json: non-finite entry");
  return m;
}

inline Json vector_to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

inline Vec vector_from_json(const Json& j) {
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j.at(i).is_number()) throw std::invalid_argument("vector_from_json: non-numeric entry");
    v(i) = j.at(i).get<double>();
  }
  if (!v.allFinite()) throw std::invalid_argument("vector_from_json: non-finite entry");
  return v;
}

inline Json lct_to_json(const LctMatrix& m) {
  return Json{{"metric", metric_to_json(m.metric)},
              {"a", matrix_to_json(m.a)},
              {"b", matrix_to_json(m.b)},
              {"c", matrix_to_json(m.c)},
              {"d", matrix_to_json(m.d)}};
}

inline LctMatrix lct_from_json(const Json& j) {
  const Metric metric = metric_from_json(j.at("metric"));
  return LctMatrix(metric, matrix_from_json(j.at("a")), matrix_from_json(j.at("b")),
                   matrix_from_json(j.at("c")), matrix_from_json(j.at("d")));
}

// GaussianState schema stores only (metric, means, X, rho); P and B are
// always derived on load, never trusted from the file.
inline Json state_to_json(const GaussianState& s) {
  return Json{{"metric", metric_to_json(s.metric)},
              {"p_means", vector_to_json(s.means.p_means)},
              {"x_means", vector_to_json(s.means.x_means)},
              {"X", matrix_to_json(s.cov.X)},
              {"rho", matrix_to_json(s.cov.rho)}};
}

inline GaussianState state_from_json(const Json& j) {
  const Metric metric = metric_from_json(j.at("metric"));
  const MeanVector means(vector_from_json(j.at("p_means")), vector_from_json(j.at("x_means")));
  return make_minimal_state(means, matrix_from_json(j.at("X")), matrix_from_json(j.at("rho")),
                            metric);
}

}  // namespace lct
