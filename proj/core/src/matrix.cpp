#include "polardet/matrix.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace polardet {

std::string matrix_to_json(const ExactMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const GaussianInt& z = m.at(i, j);
      row.push_back({z.re.str(), z.im.str()});
    }
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

ExactMat matrix_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array() || doc.empty())
    throw std::invalid_argument("matrix json: expected nonempty array of rows");
  const int rows = int(doc.size());
  const int cols = int(doc[0].size());
  ExactMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || int(row.size()) != cols)
      throw std::invalid_argument("matrix json: ragged rows");
    for (int j = 0; j < cols; ++j) {
      const auto& e = row[j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw std::invalid_argument("matrix json: entry must be [\"re\",\"im\"]");
      m.at(i, j) = GaussianInt(Int(e[0].get<std::string>()),
                               Int(e[1].get<std::string>()));
    }
  }
  if (m.is_hermitian()) m.set_tag(MatTag::hermitian);
  return m;
}

}  // namespace polardet
