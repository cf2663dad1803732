#include "coxmorse/coxeter_matrix.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "coxmorse/error.hpp"

namespace coxmorse {

namespace {

std::vector<std::vector<int>> identity_bonds(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void bond(std::vector<std::vector<int>>& m, int i, int j, int value) {
  m[i][j] = value;
  m[j][i] = value;
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(std::vector<std::vector<int>> entries, std::string type_tag)
    : m_(std::move(entries)), tag_(std::move(type_tag)) {
  const auto n = m_.size();
  if (n == 0) fail(ErrorCode::InvalidMatrix, "rank must be positive");
  if (n > 32) fail(ErrorCode::InvalidMatrix, "rank above 32 is not supported");
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) fail(ErrorCode::InvalidMatrix, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i][i] != 1) fail(ErrorCode::InvalidMatrix, "diagonal entries must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m_[i][j] != m_[j][i]) fail(ErrorCode::InvalidMatrix, "matrix is not symmetric");
      if (m_[i][j] < 2) {
        fail(ErrorCode::InvalidMatrix,
             "off-diagonal entry m(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                 ") must be >= 2 (infinite bonds are not supported)");
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::from_type(std::string_view type) {
  const std::string t(type);
  std::smatch match;
  static const std::regex dihedral(R"(I2\((\d+)\))");
  static const std::regex series(R"(([A-H])(\d+))");
  if (std::regex_match(t, match, dihedral)) {
    const int m = std::stoi(match[1]);
    if (m < 2) fail(ErrorCode::InvalidMatrix, "I2(m) needs m >= 2");
    auto e = identity_bonds(2);
    bond(e, 0, 1, m);
    return CoxeterMatrix(std::move(e), t);
  }
  if (!std::regex_match(t, match, series)) fail(ErrorCode::InvalidMatrix, "unknown type '" + t + "'");
  const char family = match[1].str()[0];
  const int n = std::stoi(match[2]);
  if (n < 1 || n > 32) fail(ErrorCode::InvalidMatrix, "unsupported rank in '" + t + "'");
  auto e = identity_bonds(n);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) bond(e, i, i + 1, 3);
  };
  switch (family) {
    case 'A':
      chain(n);
      break;
    case 'B':
    case 'C':
      if (n < 2) fail(ErrorCode::InvalidMatrix, "B/C need rank >= 2");
      chain(n);
      bond(e, n - 2, n - 1, 4);
      break;
    case 'D':
      if (n < 4) fail(ErrorCode::InvalidMatrix, "D needs rank >= 4");
      chain(n - 1);
      bond(e, n - 3, n - 1, 3);
      break;
    case 'E':
      if (n < 6 || n > 8) fail(ErrorCode::InvalidMatrix, "E needs rank 6, 7 or 8");
      // Bourbaki: 1-3-4-5-6-..., 2 attached to 4.
      bond(e, 0, 2, 3);
      bond(e, 1, 3, 3);
      for (int i = 2; i + 1 < n; ++i) bond(e, i, i + 1, 3);
      break;
    case 'F':
      if (n != 4) fail(ErrorCode::InvalidMatrix, "F needs rank 4");
      chain(4);
      bond(e, 1, 2, 4);
      break;
    case 'G':
      if (n != 2) fail(ErrorCode::InvalidMatrix, "G needs rank 2");
      bond(e, 0, 1, 6);
      break;
    case 'H':
      if (n != 3 && n != 4) fail(ErrorCode::InvalidMatrix, "H needs rank 3 or 4");
      chain(n);
      bond(e, 0, 1, 5);
      break;
    default:
      fail(ErrorCode::InvalidMatrix, "unknown type '" + t + "'");
  }
  return CoxeterMatrix(std::move(e), t);
}

CoxeterMatrix CoxeterMatrix::parse(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) fail(ErrorCode::InvalidMatrix, "empty matrix file");
  auto to_int = [](const std::string& tok) {
    if (tok == "inf" || tok == "oo" || tok == "infinity") {
      fail(ErrorCode::InvalidMatrix, "infinite bonds are not supported");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidMatrix, "bad token '" + tok + "'");
    }
    if (used != tok.size()) fail(ErrorCode::InvalidMatrix, "bad token '" + tok + "'");
    return value;
  };
  const int n = to_int(tokens[0]);
  if (n <= 0) fail(ErrorCode::InvalidMatrix, "rank must be positive");
  if (tokens.size() != 1 + static_cast<std::size_t>(n) * n) {
    fail(ErrorCode::InvalidMatrix, "expected " + std::to_string(n * n) + " entries");
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int value = to_int(tokens[1 + i * n + j]);
      if (i != j && value == 0) fail(ErrorCode::InvalidMatrix, "infinite bonds are not supported");
      m[i][j] = value;
    }
  }
  return CoxeterMatrix(std::move(m), "custom");
}

CoxeterMatrix CoxeterMatrix::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidMatrix, "cannot open '" + path + "'");
  return parse(in);
}

}  // namespace coxmorse
