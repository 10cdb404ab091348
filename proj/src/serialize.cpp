#include "lkb/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace lkb {

namespace {

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected integer array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected integer");
    v.push_back(x.get<Coord>());
  }
  return v;
}

std::vector<Vec> vec_list_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected array of arrays");
  std::vector<Vec> out;
  for (const auto& x : j) out.push_back(vec_from_json(x));
  return out;
}

}  // namespace

Json descriptor_to_json(const GroupDescriptor& g) {
  Json j;
  j["m"] = g.rank();
  j["lattice"] = Json::array();
  for (const auto& col : g.lattice().columns()) j["lattice"].push_back(col);
  j["action"] = Json::array();
  for (const auto& row : g.action()) j["action"].push_back(row);
  j["d"] = g.twist_modulus();
  return j;
}

GroupPtr descriptor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("lattice") ||
      !j.contains("action") || !j.contains("d"))
    throw std::invalid_argument("descriptor: missing field");
  return make_group(j.at("m").get<int>(), vec_list_from_json(j.at("lattice")),
                    vec_list_from_json(j.at("action")), j.at("d").get<Coord>());
}

Json ring_element_to_json(const RingElement& e) {
  Json j;
  j["terms"] = Json::array();
  for (const auto& [g, c] : e.terms()) {
    Json t;
    t["coeff"] = to_decimal(c);
    t["v"] = g.v;
    t["c"] = g.c;
    j["terms"].push_back(std::move(t));
  }
  return j;
}

RingElement ring_element_from_json(GroupPtr ring, const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw std::invalid_argument("ring element: missing terms");
  RingElement e(ring);
  for (const auto& t : j.at("terms")) {
    if (!t.contains("coeff") || !t.contains("v") || !t.contains("c"))
      throw std::invalid_argument("ring element: bad term");
    Int coeff = parse_decimal(t.at("coeff").get<std::string>());
    GroupElement g =
        ring->normalize(vec_from_json(t.at("v")), t.at("c").get<Coord>());
    e.add_term(g, coeff);
  }
  return e;
}

Json matrix_to_json(const RepMatrix& a) {
  Json j;
  j["n"] = a.dim();
  j["ring"] = descriptor_to_json(*a.ring());
  j["keys"] = Json::array();
  for (const auto& k : a.keys()) j["keys"].push_back(k);
  j["entries"] = Json::array();
  for (const auto& [rc, e] : a.entries()) {
    Json row = Json::array();
    row.push_back(a.keys()[rc.first]);
    row.push_back(a.keys()[rc.second]);
    row.push_back(ring_element_to_json(e));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

RepMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("keys") ||
      !j.contains("entries"))
    throw std::invalid_argument("matrix: missing field");
  GroupPtr ring = descriptor_from_json(j.at("ring"));
  std::vector<BasisKey> keys;
  for (const auto& k : j.at("keys")) {
    BasisKey key;
    for (const auto& x : k) key.push_back(x.get<int>());
    keys.push_back(std::move(key));
  }
  RepMatrix a(ring, std::move(keys));
  for (const auto& ent : j.at("entries")) {
    if (!ent.is_array() || ent.size() != 3)
      throw std::invalid_argument("matrix: bad entry");
    BasisKey row, col;
    for (const auto& x : ent[0]) row.push_back(x.get<int>());
    for (const auto& x : ent[1]) col.push_back(x.get<int>());
    a.set(row, col, ring_element_from_json(ring, ent[2]));
  }
  return a;
}

namespace {

void append_power(std::string& s, const char* letter, Coord e) {
  if (e == 0) return;
  s += letter;
  if (e != 1) {
    s += "^{";
    s += std::to_string(e);
    s += "}";
  }
}

std::string monomial_to_latex(const GroupElement& g) {
  std::string s;
  if (g.v.size() == 2) {
    append_power(s, "q_1", g.v[0]);
    append_power(s, "q_2", g.v[1]);
  } else {
    for (size_t i = 0; i < g.v.size(); ++i)
      append_power(s, ("x_" + std::to_string(i + 1)).c_str(), g.v[i]);
  }
  append_power(s, "t", g.c);
  return s;
}

std::string entry_to_latex(const RingElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [g, c] : e.terms()) {
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    std::string mono = monomial_to_latex(g);
    if (a != 1 || mono.empty()) s += to_decimal(a);
    s += mono;
  }
  return s;
}

}  // namespace

std::string matrix_to_latex(const RepMatrix& a) {
  std::ostringstream out;
  out << "% basis:";
  for (const auto& k : a.keys()) {
    out << " (";
    for (size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << ")";
  }
  out << "\n\\left(\\begin{array}{*{" << a.dim() << "}{c}}\n";
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      if (c) out << " & ";
      auto it = a.entries().find(std::make_pair(r, c));
      out << (it == a.entries().end() ? "0" : entry_to_latex(it->second));
    }
    out << " \\\\\n";
  }
  out << "\\end{array}\\right)\n";
  return out.str();
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lkb
