#include "qskein/linalg.hpp"

namespace qskein {

namespace {

// in-place reduced row echelon form; returns pivot columns
std::vector<std::size_t> rref(RMatrix& m) {
  std::vector<std::size_t> piv;
  if (m.empty()) return piv;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] = m[i][j] - f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::optional<RMatrix> invert(RMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, Rational(0));
    m[i][n + i] = Rational(1);
  }
  auto piv = rref(m);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  RMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

std::size_t dense_rank(RMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rational>> nullspace(RMatrix m) {
  std::vector<std::vector<Rational>> out;
  if (m.empty()) return out;
  const std::size_t cols = m[0].size();
  auto piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[f] = Rational(1);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -m[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

void strip_content(SparseRow& row) {
  if (row.empty()) return;
  Laurent g;
  int lo = 0;
  bool first = true;
  for (const auto& [c, x] : row) {
    g = laurent_gcd(g, x);
    lo = first ? x.low() : std::min(lo, x.low());
    first = false;
  }
  const Laurent& lead = row.rbegin()->second;
  if (lead.lead() < 0) g = -g;
  g = g.shifted(lo);
  if (g.is_one()) return;
  for (auto& [c, x] : row) x = laurent_divexact(x, g);
}

SparseRow Echelon::reduce(SparseRow row) const {
  while (!row.empty()) {
    auto lead = row.rbegin();
    auto it = rows_.find(lead->first);
    if (it == rows_.end()) break;
    const SparseRow& p = it->second;
    const Laurent& pc = p.rbegin()->second;
    Laurent rc = lead->second;
    // row <- pc*row - rc*p, after cancelling the common factor
    Laurent g = laurent_gcd(pc, rc);
    Laurent a = laurent_divexact(pc, g), b = laurent_divexact(rc, g);
    for (auto& [c, x] : row) x = x * a;
    for (const auto& [c, x] : p) {
      Laurent& slot = row[c];
      slot -= x * b;
    }
    for (auto e = row.begin(); e != row.end();) e = e->second.is_zero() ? row.erase(e) : std::next(e);
    strip_content(row);
  }
  return row;
}

bool Echelon::insert(SparseRow row) {
  for (auto e = row.begin(); e != row.end();) e = e->second.is_zero() ? row.erase(e) : std::next(e);
  row = reduce(std::move(row));
  if (row.empty()) return false;
  strip_content(row);
  int lead = row.rbegin()->first;
  rows_.emplace(lead, std::move(row));
  return true;
}

}  // namespace qskein
