#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rackhopf/errors.hpp"
#include "rackhopf/exact/smith.hpp"
#include "rackhopf/rack/rack.hpp"

namespace rackhopf {

/// A word in a free group: letter +i is generator i (1-based), -i its inverse.
using FreeWord = std::vector<int>;

namespace words {

inline FreeWord inverse(FreeWord const& w) {
  FreeWord r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

inline FreeWord free_reduce(FreeWord const& w) {
  FreeWord r;
  for (int l : w) {
    if (!r.empty() && r.back() == -l) {
      r.pop_back();
    } else {
      r.push_back(l);
    }
  }
  return r;
}

inline FreeWord cyclic_reduce(FreeWord const& w) {
  FreeWord r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a] == -r[b - 1]) {
    ++a;
    --b;
  }
  return FreeWord(r.begin() + static_cast<std::ptrdiff_t>(a), r.begin() + static_cast<std::ptrdiff_t>(b));
}

inline FreeWord concat(FreeWord a, FreeWord const& b) {
  a.insert(a.end(), b.begin(), b.end());
  return free_reduce(a);
}

/// Normal form of the normal subgroup generator w: cyclically reduced, then
/// the least rotation of w or of w^-1.
inline FreeWord canonical_relator(FreeWord const& w) {
  FreeWord c = cyclic_reduce(w);
  if (c.empty()) return c;
  FreeWord best;
  for (FreeWord const& v : {c, inverse(c)}) {
    for (std::size_t s = 0; s < v.size(); ++s) {
      FreeWord rot(v.begin() + static_cast<std::ptrdiff_t>(s), v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(s));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

/// Letters in a word: "x3" / "x3^-1" / "x3^2", or single letters a..z when
/// no x-prefixed token is present ("a b a^-1").
inline FreeWord parse(std::string const& text, std::size_t generators) {
  FreeWord out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1" || tok == "e") continue;
    std::string base = tok;
    long power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      base = tok.substr(0, caret);
      std::string p = tok.substr(caret + 1);
      char* end = nullptr;
      power = std::strtol(p.c_str(), &end, 10);
      if (p.empty() || *end != '\0' || power == 0) throw ValidationError("bad exponent in word token '" + tok + "'");
    }
    long g = 0;
    if (base.size() >= 2 && (base[0] == 'x' || base[0] == 'g')) {
      char* end = nullptr;
      g = std::strtol(base.c_str() + 1, &end, 10);
      if (*end != '\0') g = 0;
    } else if (base.size() == 1 && base[0] >= 'a' && base[0] <= 'z' && base[0] != 'e') {
      g = base[0] - 'a' + 1;
    }
    if (g <= 0 || static_cast<std::size_t>(g) > generators) {
      throw ValidationError("unknown generator in word token '" + tok + "'");
    }
    for (long i = 0; i < std::labs(power); ++i) out.push_back(power > 0 ? static_cast<int>(g) : -static_cast<int>(g));
  }
  return free_reduce(out);
}

inline std::string format(FreeWord const& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += 'x' + std::to_string(std::abs(w[i]));
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

}  // namespace words

/// Finitely presented group <x_1..x_g | relators>.
class Presentation {
 public:
  explicit Presentation(std::size_t generators = 0) : generators_(generators) {}

  std::size_t generators() const { return generators_; }
  std::vector<FreeWord> const& relators() const { return relators_; }
  std::vector<std::string> const& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

  /// Adds w freely reduced; empty words and relators already present up to
  /// rotation and inversion are skipped. Returns whether w was added.
  bool add_relator(FreeWord const& w) {
    for (int l : w) {
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generators_) {
        throw ValidationError("relator letter out of range");
      }
    }
    FreeWord r = words::free_reduce(w);
    if (r.empty()) return false;
    if (!canonical_.insert(words::canonical_relator(r)).second) return false;
    relators_.push_back(std::move(r));
    return true;
  }

  /// Canonical forms of all relators.
  std::set<FreeWord> const& canonical_relators() const { return canonical_; }

 private:
  std::size_t generators_;
  std::vector<FreeWord> relators_;
  std::set<FreeWord> canonical_;
  std::vector<std::string> labels_;
};

/// G_X = <g_x | g_x g_y = g_{x|>y} g_x>, relators g_x g_y g_x^-1 g_{x|>y}^-1.
inline Presentation enveloping_presentation(Rack const& r) {
  Presentation p(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      int gx = static_cast<int>(x) + 1, gy = static_cast<int>(y) + 1, gz = static_cast<int>(r.op(x, y)) + 1;
      p.add_relator({gx, gy, -gx, -gz});
    }
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < r.size(); ++x) labels.push_back("g" + std::to_string(x + 1));
  p.set_labels(std::move(labels));
  return p;
}

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, each dividing the next
  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

/// Exponent-sum matrix (relators x generators).
inline IntMatrix relation_matrix(Presentation const& p) {
  std::vector<std::vector<std::int64_t>> rows;
  for (auto const& w : p.relators()) {
    std::vector<std::int64_t> row(p.generators(), 0);
    for (int l : w) row[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, p.generators());
}

inline AbelianInvariants abelianization(Presentation const& p) {
  SmithForm s = smith_normal_form(relation_matrix(p));
  AbelianInvariants a;
  a.free_rank = s.free_rank;
  a.torsion = s.torsion();
  return a;
}

class RelatorFails : public ValidationError {
 public:
  explicit RelatorFails(std::size_t index)
      : ValidationError("relator " + std::to_string(index + 1) + " does not map to the identity"), index(index) {}
  std::size_t index;
};

class NotSurjective : public ValidationError {
 public:
  NotSurjective(std::size_t image, std::size_t order)
      : ValidationError("images generate a subgroup of order " + std::to_string(image) + " < " +
                        std::to_string(order)) {}
};

inline std::size_t evaluate(FreeWord const& w, FiniteGroup const& G, std::vector<std::size_t> const& images) {
  std::size_t r = G.identity();
  for (int l : w) {
    std::size_t g = images.at(static_cast<std::size_t>(std::abs(l)) - 1);
    r = G.mul(r, l > 0 ? g : G.inv(g));
  }
  return r;
}

/// A verified surjection from a finitely presented group onto a finite group.
struct PresentationHom {
  Presentation source;
  FiniteGroup target;
  std::vector<std::size_t> images;  // element index in target per generator
};

inline PresentationHom verify_quotient(Presentation const& p, FiniteGroup const& target,
                                       std::vector<std::size_t> const& images) {
  if (images.size() != p.generators()) throw ValidationError("need one image per generator");
  for (auto i : images) {
    if (i >= target.order()) throw ValidationError("generator image out of range");
  }
  for (std::size_t k = 0; k < p.relators().size(); ++k) {
    if (evaluate(p.relators()[k], target, images) != target.identity()) throw RelatorFails(k);
  }
  std::size_t img = group::generated_subgroup(target, images).size();
  if (img != target.order()) throw NotSurjective(img, target.order());
  return {p, target, images};
}

}  // namespace rackhopf
