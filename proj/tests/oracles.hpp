#pragma once

// Test-side reference computations, written independently of the library.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

// Partial self-map of {1..n}: value list, 0 = undefined.
using PMap = std::vector<int>;

inline PMap parse(const std::string& name) {
  PMap out;
  std::string body = name.substr(1, name.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item == "-" ? 0 : std::stoi(item));
  return out;
}

inline std::string show(const PMap& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] ? std::to_string(s[i]) : "-";
  }
  return out + "]";
}

// (s t)(x) = s(t(x))
inline PMap compose(const PMap& s, const PMap& t) {
  PMap out(t.size(), 0);
  for (std::size_t x = 0; x < t.size(); ++x) out[x] = t[x] ? s[t[x] - 1] : 0;
  return out;
}

inline PMap dom_id(const PMap& s) {
  PMap out(s.size(), 0);
  for (std::size_t x = 0; x < s.size(); ++x) out[x] = s[x] ? static_cast<int>(x) + 1 : 0;
  return out;
}

inline PMap ran_id(const PMap& s) {
  PMap out(s.size(), 0);
  for (int v : s) {
    if (v) out[v - 1] = v;
  }
  return out;
}

inline bool injective(const PMap& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      if (s[x] && s[x] == s[y]) return false;
    }
  }
  return true;
}

inline bool increasing(const PMap& s) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s[x] && s[x] < static_cast<int>(x) + 1) return false;
  }
  return true;
}

// Graph inclusion: s is a restriction of t.
inline bool restricts(const PMap& s, const PMap& t) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s[x] && s[x] != t[x]) return false;
  }
  return true;
}

inline std::vector<PMap> all_maps(int n) {
  std::vector<PMap> out;
  PMap s(n, 0);
  while (true) {
    out.push_back(s);
    int i = 0;
    while (i < n && s[i] == n) s[i++] = 0;
    if (i == n) break;
    ++s[i];
  }
  return out;
}

inline long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long count_partial_injections(int n) {
  long total = 0;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * binomial(n, k) * factorial(k);
  return total;
}

}  // namespace oracle
