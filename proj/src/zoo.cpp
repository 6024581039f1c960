#include "sdl/zoo.hpp"

namespace sdl {
namespace {

void guard(int n, int max, const char* what) {
  if (n < 1) fail(ErrorKind::Input, "BadArgument", std::string(what) + " needs n >= 1");
  if (n > max) {
    fail(ErrorKind::Size, "TooLarge", std::string(what) + " supports n <= " + std::to_string(max));
  }
}

// values[x] in 0..n with 0 meaning undefined; index = sum values[x] (n+1)^x.
std::vector<int> decode(int index, int n) {
  std::vector<int> v(n);
  for (int x = 0; x < n; ++x) {
    v[x] = index % (n + 1);
    index /= n + 1;
  }
  return v;
}

int encode(const std::vector<int>& v, int n) {
  int index = 0;
  for (int x = n - 1; x >= 0; --x) index = index * (n + 1) + v[x];
  return index;
}

std::string map_name(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (x) out += ',';
    out += v[x] ? std::to_string(v[x]) : "-";
  }
  return out + "]";
}

template <class Keep>
BiUnaryAlgebra partial_maps(int n, Keep keep) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= n + 1;
  std::vector<int> elements;
  std::vector<int> pos(total, -1);
  for (int i = 0; i < total; ++i) {
    if (keep(decode(i, n))) {
      pos[i] = static_cast<int>(elements.size());
      elements.push_back(i);
    }
  }
  const int m = static_cast<int>(elements.size());
  auto at = [&](const std::vector<int>& v) {
    const int p = pos[encode(v, n)];
    if (p < 0) fail(ErrorKind::Axiom, "NotClosed", map_name(v));
    return p;
  };
  AlgebraTables t;
  t.mult.resize(static_cast<std::size_t>(m) * m);
  t.plus.emplace();
  for (int i = 0; i < m; ++i) {
    const auto s = decode(elements[i], n);
    t.names.push_back(map_name(s));
    std::vector<int> dom(n, 0), ran(n, 0);
    for (int x = 0; x < n; ++x) {
      if (s[x]) {
        dom[x] = x + 1;
        ran[s[x] - 1] = s[x];
      }
    }
    t.star.push_back(at(dom));
    t.plus->push_back(at(ran));
    for (int j = 0; j < m; ++j) {
      const auto u = decode(elements[j], n);
      std::vector<int> su(n, 0);
      for (int x = 0; x < n; ++x) su[x] = u[x] ? s[u[x] - 1] : 0;
      t.mult[static_cast<std::size_t>(i) * m + j] = at(su);
    }
  }
  t.zero = at(std::vector<int>(n, 0));
  return make_algebra(std::move(t));
}

}  // namespace

BiUnaryAlgebra gen_pt(int n) {
  guard(n, 4, "pt");
  return partial_maps(n, [](const std::vector<int>&) { return true; });
}

BiUnaryAlgebra gen_i(int n) {
  guard(n, 4, "i");
  return partial_maps(n, [](const std::vector<int>& v) {
    for (std::size_t x = 0; x < v.size(); ++x) {
      for (std::size_t y = x + 1; y < v.size(); ++y) {
        if (v[x] && v[x] == v[y]) return false;
      }
    }
    return true;
  });
}

BiUnaryAlgebra gen_triangular(int n) {
  guard(n, 4, "triangular");
  return partial_maps(n, [](const std::vector<int>& v) {
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (v[x] && v[x] < static_cast<int>(x) + 1) return false;
    }
    return true;
  });
}

BiUnaryAlgebra gen_projections(int n) {
  guard(n, 6, "projections");
  return partial_maps(n, [](const std::vector<int>& v) {
    for (std::size_t x = 0; x < v.size(); ++x) {
      if (v[x] && v[x] != static_cast<int>(x) + 1) return false;
    }
    return true;
  });
}

FinCat gen_pair_groupoid(int n) {
  guard(n, 6, "pair-groupoid");
  CategoryTables t;
  for (int x = 1; x <= n; ++x) t.objects.push_back(std::to_string(x));
  auto arrow = [n](int y, int x) { return (x - 1) * n + (y - 1); };
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      t.arrows.push_back("a" + std::to_string(y) + std::to_string(x));
      t.dom.push_back(x - 1);
      t.cod.push_back(y - 1);
    }
  }
  for (int x = 1; x <= n; ++x) t.units.push_back(arrow(x, x));
  const int m = n * n;
  t.comp.assign(static_cast<std::size_t>(m) * m, -1);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      for (int z = 1; z <= n; ++z) {
        t.comp[static_cast<std::size_t>(arrow(z, y)) * m + arrow(y, x)] = arrow(z, x);
      }
    }
  }
  return make_category(std::move(t));
}

FinCat gen_free_arrow() {
  CategoryTables t;
  t.objects = {"1", "2"};
  t.arrows = {"1_1", "1_2", "f"};
  t.dom = {0, 1, 0};
  t.cod = {0, 1, 1};
  t.units = {0, 1};
  t.comp = {0, -1, -1,  //
            -1, 1, 2,   //
            2, -1, -1};
  return make_category(std::move(t));
}

FinCat gen_discrete(int n) {
  guard(n, 6, "discrete");
  CategoryTables t;
  t.comp.assign(static_cast<std::size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    t.objects.push_back(std::to_string(x + 1));
    t.arrows.push_back("1_" + std::to_string(x + 1));
    t.dom.push_back(x);
    t.cod.push_back(x);
    t.units.push_back(x);
    t.comp[static_cast<std::size_t>(x) * n + x] = x;
  }
  return make_category(std::move(t));
}

SemigroupMorphism inclusion_by_name(AlgebraPtr S, AlgebraPtr T) {
  std::vector<int> map;
  for (const auto& name : S->names()) {
    auto j = T->index_of(name);
    if (!j) fail(ErrorKind::Input, "BadMorphism", "no element named " + name);
    map.push_back(*j);
  }
  return make_morphism(std::move(S), std::move(T), std::move(map));
}

}  // namespace sdl
