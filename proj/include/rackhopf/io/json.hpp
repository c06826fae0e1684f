#pragma once

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rackhopf/braiding/cocycle.hpp"
#include "rackhopf/errors.hpp"
#include "rackhopf/group/presentation.hpp"
#include "rackhopf/hopf/datum.hpp"
#include "rackhopf/rack/catalog.hpp"

namespace rackhopf::io {

using Json = nlohmann::ordered_json;

inline Json read_json_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (nlohmann::json::parse_error const& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

namespace detail {

template <class T>
T get(Json const& j, char const* key, std::string const& what) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(what + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (nlohmann::json::exception const& e) {
    throw ValidationError(what + ": bad field '" + key + "': " + e.what());
  }
}

inline std::vector<std::vector<std::uint32_t>> one_based_table(std::vector<std::vector<std::int64_t>> const& t,
                                                               std::size_t n, std::string const& what) {
  std::vector<std::vector<std::uint32_t>> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (auto v : t[i]) {
      if (v < 1 || static_cast<std::size_t>(v) > n) throw ValidationError(what + ": entry out of range 1.." + std::to_string(n));
      out[i].push_back(static_cast<std::uint32_t>(v - 1));
    }
  }
  return out;
}

}  // namespace detail

/// {"n": int, "table": [[1-based]]}
inline Rack rack_from_json(Json const& j, std::string label = "file") {
  auto n = detail::get<std::size_t>(j, "n", "rack");
  auto t = detail::get<std::vector<std::vector<std::int64_t>>>(j, "table", "rack");
  if (t.size() != n) throw ValidationError("rack: table has " + std::to_string(t.size()) + " rows, expected " + std::to_string(n));
  return Rack::verify(detail::one_based_table(t, n, "rack"), std::move(label));
}

inline Json rack_to_json(Rack const& r) {
  Json t = Json::array();
  for (auto const& row : r.table()) {
    Json jr = Json::array();
    for (auto v : row) jr.push_back(v + 1);
    t.push_back(jr);
  }
  return Json{{"n", r.size()}, {"table", t}};
}

/// {"degree": k, "generators": [[1-based images]]} or {"order": n, "table": [[1-based]]}
inline FiniteGroup group_from_json(Json const& j) {
  if (j.contains("generators")) {
    auto k = detail::get<std::size_t>(j, "degree", "group");
    auto gens = detail::get<std::vector<std::vector<std::int64_t>>>(j, "generators", "group");
    std::vector<Perm> perms;
    for (auto const& row : detail::one_based_table(gens, k, "group generators")) perms.emplace_back(row.begin(), row.end());
    return FiniteGroup::from_generators(k, std::move(perms));
  }
  auto n = detail::get<std::size_t>(j, "order", "group");
  auto t = detail::get<std::vector<std::vector<std::int64_t>>>(j, "table", "group");
  if (t.size() != n) throw ValidationError("group: table size does not match order");
  return FiniteGroup::from_table(detail::one_based_table(t, n, "group table"));
}

/// {"N": int, "exp": [[ints]]}
inline Cocycle cocycle_from_json(Json const& j, std::size_t rack_size) {
  auto N = detail::get<unsigned>(j, "N", "cocycle");
  auto e = detail::get<std::vector<std::vector<std::int64_t>>>(j, "exp", "cocycle");
  if (e.size() != rack_size) throw ValidationError("cocycle: table size does not match rack size");
  return Cocycle(N, std::move(e));
}

inline Json cocycle_to_json(Cocycle const& q) { return Json{{"N", q.order()}, {"exp", q.exponents()}}; }

/// Cocycle specification: "const:-1", "const:1", "const:zeta<N>^<k>", "chi",
/// "table:<N>:<row>;<row>..." (rows comma separated), or "file:<path>".
inline Cocycle parse_cocycle(std::string const& spec, Rack const& r) {
  auto bad = [&] { return ValidationError("unrecognized cocycle '" + spec + "'"); };
  if (spec == "chi") return cocycles::chi(r);
  if (spec == "const:-1") return cocycles::minus_one(r.size());
  if (spec == "const:1") return Cocycle::constant(r.size(), 1, 0);
  if (spec.rfind("const:zeta", 0) == 0) {
    std::string rest = spec.substr(10);
    auto caret = rest.find('^');
    try {
      unsigned N = static_cast<unsigned>(std::stoul(rest.substr(0, caret)));
      std::int64_t k = caret == std::string::npos ? 1 : std::stoll(rest.substr(caret + 1));
      if (N == 0) throw bad();
      return Cocycle::constant(r.size(), N, k);
    } catch (std::logic_error const&) {
      throw bad();
    }
  }
  if (spec.rfind("table:", 0) == 0) {
    std::string rest = spec.substr(6);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw bad();
    try {
      unsigned N = static_cast<unsigned>(std::stoul(rest.substr(0, colon)));
      std::vector<std::vector<std::int64_t>> t;
      std::string rows = rest.substr(colon + 1);
      std::size_t pos = 0;
      while (pos <= rows.size()) {
        auto semi = rows.find(';', pos);
        std::string row = rows.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::vector<std::int64_t> vals;
        std::size_t p2 = 0;
        while (p2 <= row.size()) {
          auto comma = row.find(',', p2);
          vals.push_back(std::stoll(row.substr(p2, comma == std::string::npos ? std::string::npos : comma - p2)));
          if (comma == std::string::npos) break;
          p2 = comma + 1;
        }
        t.push_back(std::move(vals));
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
      if (t.size() != r.size() || N == 0) throw bad();
      return Cocycle(N, std::move(t));
    } catch (std::logic_error const&) {
      throw bad();
    }
  }
  if (spec.rfind("file:", 0) == 0) return cocycle_from_json(read_json_file(spec.substr(5)), r.size());
  throw bad();
}

/// {"generators": g, "relators": ["x1 x2 x1^-1", ...]}
inline Presentation presentation_from_json(Json const& j) {
  auto g = detail::get<std::size_t>(j, "generators", "presentation");
  Presentation p(g);
  for (auto const& s : detail::get<std::vector<std::string>>(j, "relators", "presentation")) {
    p.add_relator(words::parse(s, g));
  }
  return p;
}

inline Json presentation_to_json(Presentation const& p) {
  Json rel = Json::array();
  for (auto const& w : p.relators()) rel.push_back(words::format(w));
  return Json{{"generators", p.generators()}, {"relators", rel}};
}

/// "N k" -> (N, k)
inline std::pair<unsigned, std::int64_t> parse_root(std::string const& s) {
  std::istringstream in(s);
  long long N = 0, k = 0;
  if (!(in >> N >> k) || N <= 0) throw ValidationError("bad root of unity '" + s + "' (expected \"N k\")");
  std::string rest;
  if (in >> rest) throw ValidationError("bad root of unity '" + s + "'");
  return {static_cast<unsigned>(N), k};
}

/// {"rack": rack object or catalog name, "cocycle": object or spec string,
///  "group": group object, "deg": [permutation or 1-based element index per x],
///  "action": [[[x', "N k"] per x] per group generator]}
/// For table groups every element is a generator, so "action" has a row per element.
inline YDDatum datum_from_json(Json const& j) {
  if (!j.is_object()) throw ValidationError("datum: expected an object");
  if (!j.contains("rack")) throw ValidationError("datum: missing field 'rack'");
  Rack r = j["rack"].is_string() ? catalog::by_name(j["rack"].get<std::string>()) : rack_from_json(j["rack"]);
  if (!j.contains("cocycle")) throw ValidationError("datum: missing field 'cocycle'");
  Cocycle q = j["cocycle"].is_string() ? parse_cocycle(j["cocycle"].get<std::string>(), r)
                                        : cocycle_from_json(j["cocycle"], r.size());
  if (!j.contains("group")) throw ValidationError("datum: missing field 'group'");
  FiniteGroup G = group_from_json(j["group"]);
  if (!j.contains("deg") || !j["deg"].is_array()) throw ValidationError("datum: missing array 'deg'");
  std::vector<std::size_t> deg;
  for (auto const& e : j["deg"]) {
    if (e.is_number_integer()) {
      auto k = e.get<std::int64_t>();
      if (k < 1 || static_cast<std::size_t>(k) > G.order()) throw ValidationError("datum: deg index out of range");
      deg.push_back(static_cast<std::size_t>(k - 1));
    } else if (e.is_array()) {
      Perm p;
      for (auto const& v : e) {
        auto k = v.get<std::int64_t>();
        if (k < 1 || static_cast<std::size_t>(k) > G.degree()) throw ValidationError("datum: deg permutation out of range");
        p.push_back(static_cast<std::uint32_t>(k - 1));
      }
      deg.push_back(G.index_of(p));
    } else {
      throw ValidationError("datum: deg entries must be integers or permutations");
    }
  }
  if (!j.contains("action") || !j["action"].is_array()) throw ValidationError("datum: missing array 'action'");
  unsigned order = 1;
  std::vector<std::vector<std::pair<std::uint32_t, std::pair<unsigned, std::int64_t>>>> raw;
  for (auto const& row : j["action"]) {
    if (!row.is_array()) throw ValidationError("datum: action rows must be arrays");
    raw.emplace_back();
    for (auto const& e : row) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_string()) {
        throw ValidationError("datum: action entries must be [target, \"N k\"]");
      }
      auto t = e[0].get<std::int64_t>();
      if (t < 1 || static_cast<std::size_t>(t) > r.size()) throw ValidationError("datum: action target out of range");
      auto root = parse_root(e[1].get<std::string>());
      order = std::lcm(order, root.first);
      raw.back().push_back({static_cast<std::uint32_t>(t - 1), root});
    }
  }
  std::vector<std::vector<ActionEntry>> action;
  for (auto const& row : raw) {
    action.emplace_back();
    for (auto const& [t, root] : row) {
      auto e = rackhopf::detail::mod_floor(root.second * static_cast<std::int64_t>(order / root.first), order);
      action.back().push_back({t, static_cast<std::uint32_t>(e)});
    }
  }
  std::string label = j.value("label", std::string("file"));
  return YDDatum::from_generator_action(std::move(r), std::move(q), std::move(G), std::move(deg), action, order,
                                        std::move(label));
}

inline Json datum_to_json(YDDatum const& D) {
  FiniteGroup const& G = D.group();
  Json gens = Json::array();
  for (auto s : G.generators()) {
    Json p = Json::array();
    for (auto v : G.element(s)) p.push_back(v + 1);
    gens.push_back(p);
  }
  Json deg = Json::array();
  for (auto g : D.degrees()) {
    Json p = Json::array();
    for (auto v : G.element(g)) p.push_back(v + 1);
    deg.push_back(p);
  }
  Json action = Json::array();
  for (auto s : G.generators()) {
    Json row = Json::array();
    for (std::size_t x = 0; x < D.dimension(); ++x) {
      auto a = D.act(s, x);
      row.push_back(Json::array({a.target + 1, std::to_string(D.order()) + " " + std::to_string(a.exponent)}));
    }
    action.push_back(row);
  }
  return Json{{"label", D.label()},
              {"rack", rack_to_json(D.rack())},
              {"cocycle", cocycle_to_json(D.cocycle())},
              {"group", Json{{"degree", G.degree()}, {"generators", gens}}},
              {"deg", deg},
              {"action", action}};
}

}  // namespace rackhopf::io
