#include "barytop/snf.hpp"

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace barytop {

namespace {

BigInt rounded_div(const BigInt& a, const BigInt& p) {
  BigInt q = a / p;
  BigInt r = a - q * p;
  if (abs(r) * 2 > abs(p)) q += ((r > 0) == (p > 0)) ? 1 : -1;
  return q;
}

std::vector<std::vector<BigInt>> identity(std::int64_t n) {
  std::vector<std::vector<BigInt>> I(n, std::vector<BigInt>(n, 0));
  for (std::int64_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& M, bool with_certificates) {
  const std::int64_t R = M.rows, C = M.cols;
  std::vector<std::map<std::int32_t, BigInt>> row(R);
  std::vector<std::set<std::int32_t>> colrows(C);
  for (std::int64_t c = 0; c < C; ++c) {
    for (const auto& [r, v] : M.col[c]) {
      if (v == 0) continue;
      row[r][static_cast<std::int32_t>(c)] = v;
      colrows[c].insert(r);
    }
  }
  SNFResult res;
  std::vector<std::vector<BigInt>> U, V;
  if (with_certificates) {
    U = identity(R);
    V = identity(C);
  }
  std::vector<char> row_done(R, 0), col_done(C, 0);

  using HeapEntry = std::tuple<std::uint64_t, std::int32_t, std::int32_t>;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> units;
  auto markowitz = [&](std::int32_t r, std::int32_t c) {
    return static_cast<std::uint64_t>(row[r].size() - 1) *
           static_cast<std::uint64_t>(colrows[c].size() - 1);
  };

  auto row_axpy = [&](std::int32_t r, const BigInt& q, std::int32_t pr) {
    // row r -= q * row pr
    if (q == 0) return;
    for (const auto& [c, v] : row[pr]) {
      auto it = row[r].find(c);
      if (it == row[r].end()) {
        BigInt nv = -q * v;
        if (nv != 0) {
          if (!with_certificates && (nv == 1 || nv == -1))
            units.push({0, r, c});
          row[r].emplace(c, std::move(nv));
          colrows[c].insert(r);
        }
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row[r].erase(it);
          colrows[c].erase(r);
        } else if (!with_certificates && (it->second == 1 || it->second == -1)) {
          units.push({0, r, c});
        }
      }
    }
    if (with_certificates)
      for (std::int64_t j = 0; j < R; ++j) U[r][j] -= q * U[pr][j];
  };
  auto col_axpy = [&](std::int32_t c, const BigInt& q, std::int32_t pc) {
    // col c -= q * col pc
    if (q == 0) return;
    std::vector<std::int32_t> rows_pc(colrows[pc].begin(), colrows[pc].end());
    for (std::int32_t r : rows_pc) {
      const BigInt v = row[r][pc];
      auto it = row[r].find(c);
      if (it == row[r].end()) {
        BigInt nv = -q * v;
        if (nv != 0) {
          row[r].emplace(c, std::move(nv));
          colrows[c].insert(r);
        }
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          row[r].erase(it);
          colrows[c].erase(r);
        }
      }
    }
    if (with_certificates)
      for (std::int64_t i = 0; i < C; ++i) V[i][c] -= q * V[i][pc];
  };

  // Phase 1 (no certificates): clear unit pivots in Markowitz order.  A unit
  // pivot never creates fractions, and once its column is cleared the rest of
  // its row can simply be dropped.
  std::int64_t unit_pivots = 0;
  if (!with_certificates) {
    for (std::int32_t r = 0; r < R; ++r)
      for (const auto& [c, v] : row[r])
        if (v == 1 || v == -1) units.push({markowitz(r, c), r, c});
    while (!units.empty()) {
      auto [cost, r, c] = units.top();
      units.pop();
      if (row_done[r] || col_done[c]) continue;
      auto it = row[r].find(c);
      if (it == row[r].end() || (it->second != 1 && it->second != -1)) continue;
      std::uint64_t cur = markowitz(r, c);
      if (cur > cost) {
        units.push({cur, r, c});
        continue;
      }
      const BigInt pivot = it->second;  // +-1, its own inverse
      std::vector<std::int32_t> others(colrows[c].begin(), colrows[c].end());
      for (std::int32_t r2 : others) {
        if (r2 == r) continue;
        row_axpy(r2, row[r2][c] * pivot, r);
      }
      for (const auto& [c2, v2] : row[r])
        if (c2 != c) colrows[c2].erase(r);
      row[r].clear();
      colrows[c].clear();
      row_done[r] = 1;
      col_done[c] = 1;
      ++unit_pivots;
    }
  }

  std::vector<std::pair<std::int32_t, std::int32_t>> pivot_pos;
  std::vector<BigInt> pivot_val;

  while (true) {
    // Pivot: smallest nonzero magnitude, fewest fill to break ties.
    std::int32_t bpr = -1, bpc = -1;
    BigInt best_abs;
    std::uint64_t best_score = 0;
    for (std::int32_t r = 0; r < R; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : row[r]) {
        BigInt a = abs(v);
        std::uint64_t score = markowitz(r, c);
        if (bpr < 0 || a < best_abs || (a == best_abs && score < best_score)) {
          bpr = r;
          bpc = c;
          best_abs = a;
          best_score = score;
        }
      }
    }
    if (bpr < 0) break;
    std::int32_t pr = bpr, pc = bpc;
    while (true) {
      while (colrows[pc].size() > 1) {
        auto it = colrows[pc].begin();
        std::int32_t r = (*it == pr) ? *std::next(it) : *it;
        const BigInt& p = row[pr][pc];
        BigInt q = rounded_div(row[r][pc], p);
        row_axpy(r, q, pr);
        if (row[r].count(pc)) pr = r;  // remainder is strictly smaller
      }
      bool pc_switched = false;
      while (row[pr].size() > 1) {
        auto it = row[pr].begin();
        std::int32_t c = (it->first == pc) ? std::next(it)->first : it->first;
        const BigInt& p = row[pr][pc];
        BigInt q = rounded_div(row[pr].at(c), p);
        col_axpy(c, q, pc);
        if (row[pr].count(c)) {
          pc = c;
          pc_switched = true;
        }
      }
      if (pc_switched && colrows[pc].size() > 1) continue;
      // Both cleared; enforce that the pivot divides every remaining entry.
      BigInt p = abs(row[pr][pc]);
      if (p == 1) break;
      std::int32_t fr = -1;
      for (std::int32_t r = 0; r < R && fr < 0; ++r) {
        if (row_done[r] || r == pr) continue;
        for (const auto& [c, v] : row[r]) {
          if (v % p != 0) {
            fr = r;
            break;
          }
        }
      }
      if (fr < 0) break;
      row_axpy(pr, BigInt(-1), fr);  // pull the offending row into the pivot row
    }
    if (with_certificates && row[pr][pc] < 0)
      for (std::int64_t j = 0; j < R; ++j) U[pr][j] = -U[pr][j];
    pivot_pos.emplace_back(pr, pc);
    pivot_val.push_back(abs(row[pr][pc]));
    row_done[pr] = 1;
    col_done[pc] = 1;
    row[pr].clear();
    colrows[pc].clear();
  }

  const std::int64_t n = std::min(R, C);
  res.diagonal.assign(n, 0);
  for (std::int64_t k = 0; k < unit_pivots; ++k) res.diagonal[k] = 1;
  for (std::size_t k = 0; k < pivot_val.size(); ++k)
    res.diagonal[unit_pivots + k] = pivot_val[k];
  for (std::size_t k = 1; k < pivot_val.size(); ++k)
    if (pivot_val[k] % pivot_val[k - 1] != 0)
      throw std::logic_error("smith_normal_form: divisibility chain violated");

  if (with_certificates) {
    // Permute pivots onto the leading diagonal.
    std::vector<std::int64_t> rperm, cperm;
    std::vector<char> rused(R, 0), cused(C, 0);
    for (auto [r, c] : pivot_pos) {
      rperm.push_back(r);
      cperm.push_back(c);
      rused[r] = 1;
      cused[c] = 1;
    }
    for (std::int64_t r = 0; r < R; ++r)
      if (!rused[r]) rperm.push_back(r);
    for (std::int64_t c = 0; c < C; ++c)
      if (!cused[c]) cperm.push_back(c);
    res.U.assign(R, {});
    for (std::int64_t i = 0; i < R; ++i) res.U[i] = std::move(U[rperm[i]]);
    res.V.assign(C, std::vector<BigInt>(C, 0));
    for (std::int64_t i = 0; i < C; ++i)
      for (std::int64_t j = 0; j < C; ++j) res.V[i][j] = V[i][cperm[j]];
  }
  return res;
}

}  // namespace barytop
