#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/rack/perm.hpp"
#include "rackhopf/rack/rack.hpp"

namespace rackhopf::catalog {

inline std::vector<Perm> all_permutations(std::size_t n) {
  std::vector<Perm> out;
  Perm p = perm::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Transpositions (i j), i < j, of S_n in lexicographic order.
inline Rack transpositions(std::size_t n) {
  if (n < 2) throw ValidationError("transpositions(n) needs n >= 2");
  std::vector<Perm> elems;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) elems.push_back(perm::from_cycles(n, {{i, j}}));
  }
  return Rack::conjugation(std::move(elems), "transpositions(" + std::to_string(n) + ")");
}

/// The six 4-cycles of S_4.
inline Rack four_cycles_s4() {
  std::vector<Perm> elems;
  for (auto const& p : all_permutations(4)) {
    if (perm::cycle_type(p) == std::vector<std::size_t>{4}) elems.push_back(p);
  }
  return Rack::conjugation(std::move(elems), "four_cycles_S4");
}

/// Conjugacy class of (1 2 3) in A_4: the tetrahedron rack.
inline Rack tetrahedron() {
  std::vector<Perm> a4;
  for (auto const& p : all_permutations(4)) {
    if (perm::sign(p) == 1) a4.push_back(p);
  }
  Perm c = perm::from_cycles(4, {{0, 1, 2}});
  std::vector<Perm> cls;
  for (auto const& g : a4) {
    Perm x = perm::conjugate(g, c);
    if (std::find(cls.begin(), cls.end(), x) == cls.end()) cls.push_back(x);
  }
  std::sort(cls.begin(), cls.end());
  return Rack::conjugation(std::move(cls), "tetrahedron");
}

/// Reflections i -> a - i (mod n) of the regular n-gon, a = 0..n-1.
inline std::vector<Perm> dihedral_reflections(std::size_t n) {
  std::vector<Perm> elems;
  for (std::size_t a = 0; a < n; ++a) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((a + n - i) % n);
    elems.push_back(std::move(p));
  }
  return elems;
}

inline Rack dihedral(std::size_t n) {
  if (n < 3) throw ValidationError("dihedral(n) needs n >= 3");
  return Rack::conjugation(dihedral_reflections(n), "dihedral(" + std::to_string(n) + ")");
}

/// The four reflections of the symmetry group D_4 of the square (both classes).
inline Rack reflections_d4() { return Rack::conjugation(dihedral_reflections(4), "reflections_D4"); }

/// Affine rack on Z/p: x |> y = g*y + (1-g)*x.
inline Rack affine(std::size_t p, std::size_t g) {
  if (p < 2) throw ValidationError("affine(p,g) needs p >= 2");
  if (std::gcd(g % p, p) != 1 || g % p == 1) {
    throw ValidationError("affine(p,g) needs gcd(g,p) = 1 and g != 1 mod p");
  }
  std::vector<std::vector<std::uint32_t>> t(p, std::vector<std::uint32_t>(p));
  std::size_t h = (1 + p - g % p) % p;
  for (std::size_t x = 0; x < p; ++x) {
    for (std::size_t y = 0; y < p; ++y) t[x][y] = static_cast<std::uint32_t>((g * y + h * x) % p);
  }
  return Rack::verify(std::move(t), "affine(" + std::to_string(p) + "," + std::to_string(g) + ")");
}

/// Trivial rack on k points: x |> y = y.
inline Rack abelian(std::size_t k) {
  if (k == 0) throw ValidationError("abelian(k) needs k >= 1");
  std::vector<std::vector<std::uint32_t>> t(k, std::vector<std::uint32_t>(k));
  for (auto& row : t) std::iota(row.begin(), row.end(), 0u);
  return Rack::verify(std::move(t), "abelian(" + std::to_string(k) + ")");
}

namespace detail {

inline std::vector<std::size_t> parse_args(std::string_view s, std::string const& full) {
  std::vector<std::size_t> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto tok = s.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw UnknownName(full);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Looks up a rack by name: "transpositions:4", "four_cycles_S4",
/// "tetrahedron", "dihedral:5", "affine:5,2", "reflections_D4", "abelian:2".
/// The forms "transpositions(4)" and "affine(5,2)" are accepted too.
inline Rack by_name(std::string const& name) {
  std::string n = name;
  if (!n.empty() && n.back() == ')') {
    auto open = n.find('(');
    if (open == std::string::npos) throw UnknownName(name);
    n = n.substr(0, open) + ":" + n.substr(open + 1, n.size() - open - 2);
  }
  auto colon = n.find(':');
  std::string head = n.substr(0, colon);
  std::vector<std::size_t> args;
  if (colon != std::string::npos) args = detail::parse_args(std::string_view(n).substr(colon + 1), name);
  auto want = [&](std::size_t k) {
    if (args.size() != k) throw UnknownName(name);
  };
  if (head == "transpositions") {
    want(1);
    return transpositions(args[0]);
  }
  if (head == "four_cycles_S4" || head == "B") {
    want(0);
    return four_cycles_s4();
  }
  if (head == "tetrahedron" || head == "T") {
    want(0);
    return tetrahedron();
  }
  if (head == "dihedral") {
    want(1);
    return dihedral(args[0]);
  }
  if (head == "affine") {
    want(2);
    return affine(args[0], args[1]);
  }
  if (head == "reflections_D4" || head == "D4") {
    want(0);
    return reflections_d4();
  }
  if (head == "abelian") {
    want(1);
    return abelian(args[0]);
  }
  throw UnknownName(name);
}

}  // namespace rackhopf::catalog
