#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "rackhopf/errors.hpp"

namespace rackhopf {

/// Permutation of {0..n-1} in image form: p[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

namespace perm {

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

/// (a*b)(i) = a(b(i)): apply b first.
inline Perm compose(Perm const& a, Perm const& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(Perm const& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm conjugate(Perm const& x, Perm const& y) {  // x y x^-1
  return compose(compose(x, y), inverse(x));
}

inline bool is_identity(Perm const& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != i) return false;
  }
  return true;
}

inline bool is_permutation(std::vector<std::uint32_t> const& a) {
  std::vector<bool> hit(a.size(), false);
  for (auto v : a) {
    if (v >= a.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

/// Permutation of n points with the given disjoint cycles (0-based points).
inline Perm from_cycles(std::size_t n, std::vector<std::vector<std::uint32_t>> const& cycles) {
  Perm p = identity(n);
  for (auto const& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) p.at(c[i]) = c[(i + 1) % c.size()];
  }
  if (!is_permutation(p)) throw ValidationError("cycles are not disjoint");
  return p;
}

inline int sign(Perm const& a) {
  std::vector<bool> seen(a.size(), false);
  int s = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

inline std::vector<std::size_t> cycle_type(Perm const& a) {
  std::vector<bool> seen(a.size(), false);
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.begin(), t.end());
  return t;
}

/// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" for identity.
inline std::string to_cycle_string(Perm const& a) {
  std::vector<bool> seen(a.size(), false);
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace perm

struct PermHash {
  std::size_t operator()(Perm const& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace rackhopf
