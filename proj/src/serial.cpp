#include "kpmod/serial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kp {

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  std::vector<const std::pair<const std::vector<int>, Int>*> ts;
  for (const auto& t : p.terms) ts.push_back(&t);
  std::reverse(ts.begin(), ts.end());  // descending lex
  for (const auto* t : ts)
    terms.push_back({{"exp", t->first}, {"coeff", t->second.get_str()}});
  return {{"format", 1}, {"n", p.n}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
  MultiPoly p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    std::vector<int> exp = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exp.size()) != p.n)
      throw std::invalid_argument("poly_from_json: exponent of wrong length");
    p.add_term(exp, Int(t.at("coeff").get<std::string>()));
  }
  return p;
}

json module_to_json(const WeightModule& m) {
  // Canonical basis order: weights in lex order, stable on the input order.
  std::vector<int> order(m.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return m.weights[a] < m.weights[b]; });
  std::vector<int> pos(m.dim());
  for (int i = 0; i < m.dim(); ++i) pos[order[i]] = i;

  json weights = json::array();
  for (int i : order) weights.push_back(m.weights[i]);
  json gens = json::object();
  const auto& roots = root_pairs(m.n);
  for (size_t k = 0; k < roots.size(); ++k) {
    auto [p, q] = roots[k];
    std::vector<std::tuple<int, int, std::string>> entries;
    for (int c = 0; c < m.dim(); ++c)
      for (const auto& [r, v] : m.gens[k].col[c].ents)
        entries.emplace_back(pos[r], pos[c], rat_str(v));
    std::sort(entries.begin(), entries.end());
    json rows = json::array();
    for (const auto& [r, c, v] : entries) rows.push_back({r, c, v});
    gens["e_" + std::to_string(p) + "_" + std::to_string(q)] = rows;
  }
  json out = {{"format", 1}, {"n", m.n}, {"weights", weights}, {"gens", gens}};
  if (m.distinguished) out["distinguished"] = pos[*m.distinguished];
  return out;
}

WeightModule module_from_json(const json& j) {
  WeightModule m;
  m.n = j.at("n").get<int>();
  for (const auto& w : j.at("weights"))
    m.weights.push_back(w.get<std::vector<int>>());
  int d = m.dim();
  m.gens.assign(root_pairs(m.n).size(), SparseMat(d, d));
  for (const auto& [key, rows] : j.at("gens").items()) {
    if (key.size() < 5 || key.substr(0, 2) != "e_")
      throw std::invalid_argument("module_from_json: bad generator key");
    auto us = key.find('_', 2);
    int p = std::stoi(key.substr(2, us - 2));
    int q = std::stoi(key.substr(us + 1));
    SparseMat& g = m.gens[root_index(p, q, m.n)];
    for (const auto& e : rows) {
      int r = e.at(0).get<int>(), c = e.at(1).get<int>();
      if (r < 0 || r >= d || c < 0 || c >= d)
        throw std::invalid_argument("module_from_json: entry out of range");
      g.set(r, c, rat_parse(e.at(2).get<std::string>()));
    }
  }
  if (j.contains("distinguished")) m.distinguished = j.at("distinguished").get<int>();
  return m;
}

json morphism_to_json(const Morphism& f) {
  json entries = json::array();
  for (int c = 0; c < f.mat.cols; ++c)
    for (const auto& [r, v] : f.mat.col[c].ents)
      entries.push_back({r, c, rat_str(v)});
  return {{"format", 1},
          {"rows", f.mat.rows},
          {"cols", f.mat.cols},
          {"entries", entries}};
}

}  // namespace kp
