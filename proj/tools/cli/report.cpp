#include "report.hpp"

#include <stdexcept>
#include <vector>

#ifndef GL2Q_VERSION
#define GL2Q_VERSION "unknown"
#endif

namespace gl2q::cli {

using quantum::Complex;

Json dense_to_json(const quantum::CMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    data.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"format", "dense"}, {"data", std::move(data)}};
}

Json sparse_to_json(const quantum::SparseMatrix& m) {
  Json entries = Json::array();
  for (int k = 0; k < m.outerSize(); ++k) {
    for (quantum::SparseMatrix::InnerIterator it(m, k); it; ++it) {
      entries.push_back({it.row(), it.col(), it.value().real(), it.value().imag()});
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"format", "coo"}, {"entries", std::move(entries)}};
}

quantum::SparseMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  const auto format = j.at("format").get<std::string>();
  std::vector<Eigen::Triplet<Complex>> triplets;
  if (format == "dense") {
    const auto& data = j.at("data");
    if (static_cast<Eigen::Index>(data.size()) != rows) throw std::invalid_argument("matrix JSON: row count mismatch");
    for (Eigen::Index i = 0; i < rows; ++i) {
      const auto& row = data[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("matrix JSON: column count mismatch");
      for (Eigen::Index c = 0; c < cols; ++c) {
        const auto& z = row[static_cast<std::size_t>(c)];
        const Complex v(z.at(0).get<double>(), z.at(1).get<double>());
        if (v != Complex(0.0, 0.0)) triplets.emplace_back(i, c, v);
      }
    }
  } else if (format == "coo") {
    for (const auto& e : j.at("entries")) {
      triplets.emplace_back(e.at(0).get<Eigen::Index>(), e.at(1).get<Eigen::Index>(),
                            Complex(e.at(2).get<double>(), e.at(3).get<double>()));
    }
  } else {
    throw std::invalid_argument("matrix JSON: unknown format '" + format + "'");
  }
  quantum::SparseMatrix m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

Json make_report(const std::string& command) {
  Json r;
  r["tool"] = "gl2q";
  r["version"] = GL2Q_VERSION;
  r["command"] = command;
  r["inputs"] = Json::object();
  r["outputs"] = Json::object();
  r["residuals"] = Json::object();
  r["verdict"] = Json{{"pass", true}, {"tolerance", nullptr}};
  return r;
}

void set_verdict(Json& report, bool pass) { report["verdict"]["pass"] = pass; }

bool verdict_of(const Json& report) { return report.at("verdict").at("pass").get<bool>(); }

}  // namespace gl2q::cli
