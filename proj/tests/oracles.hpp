#pragma once

// Reference computations written independently of the library: plain
// integer dynamic programs and brute-force word generation. Nothing here
// calls into wpaths.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<u64>> t(n + 1, std::vector<u64>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    t[i][0] = 1;
    for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
  }
  return t[n][k];
}

// Lattice-grid count of paths (0,0) -> (n,n) staying on or above y = x.
inline u64 catalan_grid(int n) {
  std::vector<std::vector<u64>> g(n + 1, std::vector<u64>(n + 1, 0));
  g[0][0] = 1;
  for (int x = 0; x <= n; ++x) {
    for (int y = x; y <= n; ++y) {
      if (x == 0 && y == 0) continue;
      u64 v = 0;
      if (y > 0 && y - 1 >= x) v += g[x][y - 1];
      if (x > 0) v += g[x - 1][y];
      g[x][y] = v;
    }
  }
  return g[n][n];
}

// Same grid, adding diagonal steps.
inline u64 schroder_grid(int n) {
  std::vector<std::vector<u64>> g(n + 1, std::vector<u64>(n + 1, 0));
  g[0][0] = 1;
  for (int x = 0; x <= n; ++x) {
    for (int y = x; y <= n; ++y) {
      if (x == 0 && y == 0) continue;
      u64 v = 0;
      if (y > 0 && y - 1 >= x) v += g[x][y - 1];
      if (x > 0) v += g[x - 1][y];
      if (x > 0 && y > 0) v += g[x - 1][y - 1];
      g[x][y] = v;
    }
  }
  return g[n][n];
}

// Height walk: up, level, down, n steps, never negative, ending at 0.
inline u64 motzkin_walk(int n) {
  std::vector<u64> h(n + 2, 0);
  h[0] = 1;
  for (int s = 0; s < n; ++s) {
    std::vector<u64> nh(n + 2, 0);
    for (int k = 0; k <= n; ++k) {
      if (!h[k]) continue;
      nh[k] += h[k];
      nh[k + 1] += h[k];
      if (k > 0) nh[k - 1] += h[k];
    }
    h = nh;
  }
  return h[0];
}

inline u64 narayana(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) return 0;
  return binom(n, k) * binom(n, k + 1) / n;
}

// Every word over `alphabet` whose steps reach (n,n) from (0,0) with y >= x
// throughout. Steps: N (0,1), E (1,0), D (1,1), U (0,2), H (2,0).
inline void brute_words(const std::string& alphabet, int n, int x, int y, std::string& cur,
                        std::vector<std::string>& out) {
  if (x == n && y == n) {
    out.push_back(cur);
    return;
  }
  for (char c : alphabet) {
    int dx = 0, dy = 0;
    switch (c) {
      case 'N': dy = 1; break;
      case 'E': dx = 1; break;
      case 'D': dx = 1; dy = 1; break;
      case 'U': dy = 2; break;
      case 'H': dx = 2; break;
    }
    int nx = x + dx, ny = y + dy;
    if (nx > n || ny > n || ny < nx) continue;
    cur.push_back(c);
    brute_words(alphabet, n, nx, ny, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::string> brute_words(const std::string& alphabet, int n) {
  std::vector<std::string> out;
  std::string cur;
  brute_words(alphabet, n, 0, 0, cur, out);
  return out;
}

inline int count_substr(const std::string& w, const std::string& pat) {
  int c = 0;
  for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) c += w.compare(i, pat.size(), pat) == 0;
  return c;
}

// Reference sequence values from published tables.
inline const std::vector<u64> kCatalan = {1,    1,     2,     5,      14,     42,     132,
                                          429,  1430,  4862,  16796,  58786,  208012, 742900};
inline const std::vector<u64> kMotzkin = {1,   1,    2,    4,     9,     21,    51,    127,
                                          323, 835,  2188, 5798,  15511, 41835, 113634};
inline const std::vector<u64> kSchroder = {1,     2,      6,      22,      90,     394,
                                           1806,  8558,   41586,  206098,  1037718};

}  // namespace oracle
