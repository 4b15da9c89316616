#include "toric/lp.hpp"

namespace toric {

namespace {

int sign_of(const Rat& v) { return sgn(v); }
int sign_of(double v) { return v > 1e-9 ? 1 : (v < -1e-9 ? -1 : 0); }

template <class T_>
struct Tableau {
  using Rat = T_;
  size_t m, N;
  std::vector<std::vector<Rat>> T;
  std::vector<Rat> rhs;
  std::vector<size_t> basis;
  std::vector<Rat> d;  // z = val + sum d_k x_k over nonbasic k
  Rat val;
  std::vector<bool> banned;

  static int sgn(const Rat& v) { return sign_of(v); }

  void pivot(size_t r, size_t j) {
    Rat p = T[r][j];
    if (p != Rat(1)) {
      for (size_t k = 0; k < N; ++k)
        if (sgn(T[r][k]) != 0) T[r][k] /= p;
      rhs[r] /= p;
    }
    for (size_t i = 0; i < m; ++i) {
      if (i == r || sgn(T[i][j]) == 0) continue;
      Rat f = T[i][j];
      for (size_t k = 0; k < N; ++k)
        if (sgn(T[r][k]) != 0) T[i][k] -= f * T[r][k];
      rhs[i] -= f * rhs[r];
    }
    if (sgn(d[j]) != 0) {
      Rat f = d[j];
      for (size_t k = 0; k < N; ++k)
        if (sgn(T[r][k]) != 0) d[k] -= f * T[r][k];
      val += f * rhs[r];
    }
    basis[r] = j;
  }

  // true: optimal, false: unbounded
  bool run() {
    while (true) {
      size_t enter = N;
      for (size_t k = 0; k < N; ++k)
        if (!banned[k] && sgn(d[k]) > 0) {
          enter = k;
          break;
        }
      if (enter == N) return true;
      size_t leave = m;
      Rat best;
      for (size_t i = 0; i < m; ++i) {
        if (sgn(T[i][enter]) <= 0) continue;
        Rat ratio = rhs[i] / T[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

template <class Num>
struct Solved {
  LinearProgram::Status status = LinearProgram::Status::Infeasible;
  Num value{};
  std::vector<Num> x;
};

namespace {

template <class Num>
Solved<Num> simplex_core(const std::vector<std::vector<Num>>& A, const std::vector<Num>& b,
                         const std::vector<Num>& c) {
  using Rat = Num;
  auto sgn = [](const Num& v) { return sign_of(v); };
  const size_t m = A.size(), n = c.size();
  Tableau<Num> t;
  t.m = m;
  t.N = n + m + 1;  // originals, slacks, artificial
  const size_t x0 = n + m;
  t.T.assign(m, std::vector<Rat>(t.N));
  t.rhs = b;
  t.basis.resize(m);
  t.banned.assign(t.N, false);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) t.T[i][j] = A[i][j];
    t.T[i][n + i] = 1;
    t.T[i][x0] = -1;
    t.basis[i] = n + i;
  }
  Solved<Num> res;

  size_t worst = m;
  for (size_t i = 0; i < m; ++i)
    if (sgn(b[i]) < 0 && (worst == m || b[i] < b[worst])) worst = i;
  if (worst != m) {
    t.d.assign(t.N, Rat(0));
    t.d[x0] = -1;
    t.val = 0;
    t.pivot(worst, x0);
    t.run();  // bounded above by 0
    if (sgn(t.val) < 0) return res;
    for (size_t i = 0; i < m; ++i)
      if (t.basis[i] == x0) {
        for (size_t k = 0; k < x0; ++k)
          if (sgn(t.T[i][k]) != 0) {
            t.pivot(i, k);
            break;
          }
        break;
      }
  }
  t.banned[x0] = true;
  for (size_t i = 0; i < m; ++i) t.T[i][x0] = 0;

  // phase 2 objective in terms of the current basis
  t.d.assign(t.N, Rat(0));
  for (size_t j = 0; j < n; ++j) t.d[j] = c[j];
  t.val = 0;
  for (size_t i = 0; i < m; ++i) {
    size_t bj = t.basis[i];
    if (bj >= n || sgn(c[bj]) == 0) continue;
    const Rat& cb = c[bj];
    for (size_t k = 0; k < t.N; ++k)
      if (sgn(t.T[i][k]) != 0) t.d[k] -= cb * t.T[i][k];
    t.val += cb * t.rhs[i];
  }
  if (!t.run()) {
    res.status = LinearProgram::Status::Unbounded;
    return res;
  }
  res.status = LinearProgram::Status::Optimal;
  res.value = t.val;
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < m; ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
  return res;
}

}  // namespace

LinearProgram::Result simplex_max(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                                  const std::vector<Rat>& c) {
  auto s = simplex_core<Rat>(A, b, c);
  return {s.status, s.value, s.x};
}

int LinearProgram::add_var(std::optional<Rat> lo, std::optional<Rat> hi) {
  int id = static_cast<int>(lo_.size());
  lo_.push_back(lo);
  if (hi) add_le({{id, Rat(1)}}, *hi);
  return id;
}

void LinearProgram::add_le(Terms lhs, Rat rhs) {
  rows_.push_back(std::move(lhs));
  rhs_.push_back(std::move(rhs));
}

void LinearProgram::add_ge(Terms lhs, Rat rhs) {
  for (auto& [i, a] : lhs) a = -a;
  add_le(std::move(lhs), -rhs);
}

void LinearProgram::set_objective(Terms obj) { obj_ = std::move(obj); }

template <class Num, class Conv>
Solved<Num> LinearProgram::solve_as(Conv conv) const {
  // shift bounded-below variables to x >= 0; split free ones
  const size_t nv = lo_.size();
  std::vector<int> pos(nv), neg(nv, -1);
  int cols = 0;
  for (size_t v = 0; v < nv; ++v) {
    pos[v] = cols++;
    if (!lo_[v]) neg[v] = cols++;
  }
  std::vector<std::vector<Num>> A(rows_.size(), std::vector<Num>(cols));
  std::vector<Num> b(rows_.size());
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat rhs = rhs_[r];
    for (const auto& [v, a] : rows_[r]) {
      A[r][pos[v]] += conv(a);
      if (neg[v] >= 0) A[r][neg[v]] -= conv(a);
      if (lo_[v]) rhs -= a * *lo_[v];
    }
    b[r] = conv(rhs);
  }
  std::vector<Num> c(cols);
  Rat shift = 0;
  for (const auto& [v, a] : obj_) {
    c[pos[v]] += conv(a);
    if (neg[v] >= 0) c[neg[v]] -= conv(a);
    if (lo_[v]) shift += a * *lo_[v];
  }
  Solved<Num> core = simplex_core<Num>(A, b, c);
  Solved<Num> out;
  out.status = core.status;
  if (core.status != Status::Optimal) return out;
  out.value = core.value + conv(shift);
  out.x.resize(nv);
  for (size_t v = 0; v < nv; ++v) {
    out.x[v] = core.x[pos[v]];
    if (neg[v] >= 0) out.x[v] -= core.x[neg[v]];
    if (lo_[v]) out.x[v] += conv(*lo_[v]);
  }
  return out;
}

LinearProgram::Result LinearProgram::solve() const {
  auto s = solve_as<Rat>([](const Rat& r) { return r; });
  return {s.status, s.value, s.x};
}

LinearProgram::ApproxResult LinearProgram::solve_approx() const {
  auto s = solve_as<double>([](const Rat& r) { return r.get_d(); });
  return {s.status, s.value, s.x};
}

}  // namespace toric
