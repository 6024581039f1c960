#include "sdl/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace sdl {
namespace {

constexpr int kUnknown = -2;

struct Shape {
  int k = 0;
  int m = 0;
  std::vector<int> dom, cod;
  std::vector<int> comp;  // m*m, -1 undefined, kUnknown while searching

  int& at(int x, int y) { return comp[static_cast<std::size_t>(x) * m + y]; }
  int at(int x, int y) const { return comp[static_cast<std::size_t>(x) * m + y]; }
};

// No violated associativity among entries known so far.
bool consistent(const Shape& s) {
  for (int a = 0; a < s.m; ++a) {
    for (int b = 0; b < s.m; ++b) {
      const int ab = s.at(a, b);
      if (ab < 0) continue;
      for (int c = 0; c < s.m; ++c) {
        const int bc = s.at(b, c);
        if (bc < 0) continue;
        const int l = s.at(ab, c);
        const int r = s.at(a, bc);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  }
  return true;
}

std::vector<int> encode(const FinCat& C, const std::vector<int>& obj, const std::vector<int>& arr) {
  // obj/arr map old index -> new index.
  const int k = C.num_objects();
  const int m = C.num_arrows();
  std::vector<int> inv(m);
  for (int a = 0; a < m; ++a) inv[arr[a]] = a;
  std::vector<int> out = {k, m};
  for (int n = 0; n < m; ++n) out.push_back(obj[C.dom(inv[n])]);
  for (int n = 0; n < m; ++n) out.push_back(obj[C.cod(inv[n])]);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int c = C.comp(inv[x], inv[y]);
      out.push_back(c < 0 ? -1 : arr[c]);
    }
  }
  return out;
}

FinCat build(const Shape& s) {
  CategoryTables t;
  for (int o = 0; o < s.k; ++o) t.objects.push_back("o" + std::to_string(o));
  for (int a = 0; a < s.m; ++a) {
    t.arrows.push_back(a < s.k ? "1_o" + std::to_string(a) : "a" + std::to_string(a - s.k + 1));
  }
  t.dom = s.dom;
  t.cod = s.cod;
  for (int o = 0; o < s.k; ++o) t.units.push_back(o);
  t.comp = s.comp;
  return make_category(std::move(t));
}

FinCat decode(const std::vector<int>& code) {
  Shape s;
  s.k = code[0];
  s.m = code[1];
  s.dom.assign(code.begin() + 2, code.begin() + 2 + s.m);
  s.cod.assign(code.begin() + 2 + s.m, code.begin() + 2 + 2 * s.m);
  s.comp.assign(code.begin() + 2 + 2 * s.m, code.end());
  return build(s);
}

}  // namespace

std::vector<int> canonical_form(const FinCat& C) {
  const int k = C.num_objects();
  const int m = C.num_arrows();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    // Units first in object order, then non-units grouped by (dom, cod).
    std::vector<int> arr(m, -1);
    for (int o = 0; o < k; ++o) arr[C.unit(o)] = perm[o];
    std::vector<std::vector<int>> groups(k * k);
    for (int a = 0; a < m; ++a) {
      if (!C.is_unit(a)) groups[perm[C.dom(a)] * k + perm[C.cod(a)]].push_back(a);
    }
    // Try every order inside each hom group.
    std::function<void(std::size_t, int)> rec = [&](std::size_t g, int next) {
      if (g == groups.size()) {
        auto code = encode(C, perm, arr);
        if (best.empty() || code < best) best = std::move(code);
        return;
      }
      auto members = groups[g];
      std::sort(members.begin(), members.end());
      do {
        for (std::size_t i = 0; i < members.size(); ++i) arr[members[i]] = next + static_cast<int>(i);
        rec(g + 1, next + static_cast<int>(members.size()));
      } while (std::next_permutation(members.begin(), members.end()));
    };
    rec(0, k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<FinCat> enumerate_categories(int max_objects, int max_arrows) {
  std::set<std::vector<int>> seen;
  for (int k = 1; k <= max_objects; ++k) {
    for (int m = k; m <= max_arrows; ++m) {
      const int q = m - k;
      std::vector<int> pairs(q, 0);  // non-decreasing hom indices dom*k+cod
      std::function<void(int, int)> assign = [&](int i, int lo) {
        if (i < q) {
          for (int p = lo; p < k * k; ++p) {
            pairs[i] = p;
            assign(i + 1, p);
          }
          return;
        }
        Shape s;
        s.k = k;
        s.m = m;
        for (int o = 0; o < k; ++o) {
          s.dom.push_back(o);
          s.cod.push_back(o);
        }
        for (int p : pairs) {
          s.dom.push_back(p / k);
          s.cod.push_back(p % k);
        }
        s.comp.assign(static_cast<std::size_t>(m) * m, -1);
        std::vector<std::pair<int, int>> cells;
        for (int x = 0; x < m; ++x) {
          for (int y = 0; y < m; ++y) {
            if (s.dom[x] != s.cod[y]) continue;
            if (x < k) {
              s.at(x, y) = y;
            } else if (y < k) {
              s.at(x, y) = x;
            } else {
              s.at(x, y) = kUnknown;
              cells.emplace_back(x, y);
            }
          }
        }
        std::function<void(std::size_t)> fill = [&](std::size_t c) {
          if (c == cells.size()) {
            seen.insert(canonical_form(build(s)));
            return;
          }
          const auto [x, y] = cells[c];
          for (int z = 0; z < m; ++z) {
            if (s.dom[z] != s.dom[y] || s.cod[z] != s.cod[x]) continue;
            s.at(x, y) = z;
            if (consistent(s)) fill(c + 1);
          }
          s.at(x, y) = kUnknown;
        };
        fill(0);
      };
      assign(0, 0);
    }
  }
  std::vector<FinCat> out;
  for (const auto& code : seen) out.push_back(decode(code));
  return out;
}

}  // namespace sdl
