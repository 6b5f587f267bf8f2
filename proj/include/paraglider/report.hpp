#pragma once

// Aggregated analysis report for one input graph and its serializers.
// Reports render as line-oriented key-value text by default, or as JSON.
// Every number in a report is re-derivable from the owning module.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "certify.hpp"
#include "cover.hpp"
#include "decompose.hpp"
#include "exact.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "patterns.hpp"

namespace paraglider {

struct Report {
  int n = 0;
  int m = 0;
  ClassCheck target;            // input against the colorable class
  ClassCheck complement_class;  // complement against the decomposable class
  int omega = -1;               // -1: not computed (size guard)
  int alpha = -1;
  int chi = -1;
  bool chi_exact = false;  // true: matching identity on the complement applied
  bool has_structure = false;
  std::optional<Decomposition> decomp;
  StructureReport structure;
  Classification classification;
  bool has_coloring = false;
  std::optional<ColoringResult> coloring;
  Certificate certificate;
};

inline Report analyze(const Graph& g) {
  Report r;
  r.n = g.n();
  r.m = g.edge_count();
  r.target = check_target_class(g);
  Graph h = g.complement();
  r.complement_class = check_class_H(h);
  try {
    r.omega = brute_omega(g);
    r.alpha = brute_alpha(g);
  } catch (const SizeExceededError&) {
  }
  if (!has_induced(Pattern::ThreeK1, g)) {
    // no independent triple: complement is triangle-free, chi is exact
    r.chi = g.n() - max_matching(h).size();
    r.chi_exact = true;
  } else {
    try {
      r.chi = brute_chi_witness(g).first;
      r.chi_exact = true;
    } catch (const SizeExceededError&) {
    }
  }
  if (r.complement_class.ok) {
    r.decomp = decompose(h);
    r.structure = validate_structure(*r.decomp);
    r.classification = classify(*r.decomp);
    r.has_structure = true;
  }
  if (r.target.ok) {
    r.coloring = color_graph(g);
    r.has_coloring = true;
  }
  r.certificate = certify_conjecture(g);
  return r;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k];
  return out.str();
}

inline std::string check_text(const ClassCheck& c) {
  if (c.ok) return "yes";
  std::string s = "no (" + c.predicate;
  if (!c.witness.empty()) s += "; witness " + join_ints(c.witness);
  return s + ")";
}

}  // namespace detail

// --- key-value text ---------------------------------------------------------

inline std::string to_text(const Piece& p) {
  std::ostringstream out;
  out << p.name << "[" << p.verts.count() << "v -> " << p.parts << " parts:";
  for (int v = p.verts.first(); v != -1; v = p.verts.next(v)) out << " " << v;
  out << "]";
  return out.str();
}

inline std::string to_text(const CoverResult& c) {
  std::ostringstream out;
  out << "cover-case: " << c.case_name << "\n";
  if (c.rotation >= 0) out << "cover-rotation: " << c.rotation << "\n";
  out << "cover-size: " << c.cover.size() << "\n";
  out << "cover-bound: " << c.bound_name << " = " << c.bound_value << " (alpha="
      << c.alpha_used << (c.alpha_exact ? " exact" : " witnessed") << ")\n";
  for (const auto& p : c.pieces) out << "cover-piece: " << to_text(p) << "\n";
  out << "cover-parts:";
  for (const auto& part : c.cover.parts) {
    out << " {";
    for (std::size_t k = 0; k < part.size(); ++k) out << (k ? " " : "") << part[k];
    out << "}";
  }
  out << "\n";
  if (!c.detail.empty()) out << "cover-detail: " << c.detail << "\n";
  return out.str();
}

inline std::string to_text(const ColoringResult& c) {
  std::ostringstream out;
  out << "colors: " << c.num_colors << "\n";
  out << "chi: " << c.chi << "\n";
  out << "coloring-bound: " << c.bound_name << " = " << c.bound_value << " (omega="
      << c.omega_used << (c.omega_exact ? " exact" : " witnessed") << ")\n";
  out << "color-map:";
  for (std::size_t v = 0; v < c.color.size(); ++v) out << " " << v << ":" << c.color[v];
  out << "\n";
  return out.str();
}

inline std::string to_text(const WitnessTriple& w) {
  std::ostringstream out;
  out << "witness-largest: " << w.largest << "\n";
  out << "witness-target: " << w.target << "\n";
  out << "witness-case: " << w.case_tag << "\n";
  out << "witness-equality: " << (w.equality ? "yes" : "no") << "\n";
  if (w.equality) out << "witness-extremal: " << (w.extremal ? "yes" : "no") << "\n";
  const char* names[3] = {"witness-x", "witness-y", "witness-z"};
  for (int k = 0; k < 3; ++k) {
    out << names[k] << ":";
    for (int v = w.sets[static_cast<std::size_t>(k)].first(); v != -1;
         v = w.sets[static_cast<std::size_t>(k)].next(v))
      out << " " << v;
    out << "\n";
  }
  return out.str();
}

inline std::string to_text(const Certificate& c) {
  std::ostringstream out;
  out << "certificate-rule: " << c.rule << "\n";
  if (!c.reason.empty()) out << "certificate-reason: " << c.reason << "\n";
  for (const auto& f : c.facts) out << "certificate-fact: " << f << "\n";
  return out.str();
}

inline std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "n: " << r.n << "\n";
  out << "m: " << r.m << "\n";
  out << "target-class: " << detail::check_text(r.target) << "\n";
  out << "complement-class: " << detail::check_text(r.complement_class) << "\n";
  if (r.omega >= 0) out << "omega: " << r.omega << "\n";
  if (r.alpha >= 0) out << "alpha: " << r.alpha << "\n";
  if (r.chi >= 0)
    out << "chi: " << r.chi << (r.chi_exact ? "" : " (heuristic)") << "\n";
  if (r.has_structure) {
    std::istringstream dec(r.decomp->to_text());
    for (std::string line; std::getline(dec, line);)
      out << "decomposition-" << line << "\n";
    std::istringstream st(r.structure.to_text());
    for (std::string line; std::getline(st, line);)
      out << "property-" << line << "\n";
    out << "classification: " << class_label_name(r.classification.label) << "\n";
    if (!r.classification.detail.empty())
      out << "classification-detail: " << r.classification.detail << "\n";
  }
  if (r.has_coloring) {
    out << to_text(r.coloring->structure);
    out << to_text(*r.coloring);
  }
  out << to_text(r.certificate);
  return out.str();
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::json to_json(const VertexSet& s) {
  auto v = s.to_vector();
  return nlohmann::json(v);
}

inline nlohmann::json to_json(const ClassCheck& c) {
  nlohmann::json j;
  j["ok"] = c.ok;
  if (!c.ok) {
    j["predicate"] = c.predicate;
    j["witness"] = c.witness;
  }
  return j;
}

inline nlohmann::json to_json(const CoverResult& c) {
  nlohmann::json j;
  j["case"] = c.case_name;
  if (c.rotation >= 0) j["rotation"] = c.rotation;
  j["size"] = c.cover.size();
  j["parts"] = c.cover.parts;
  j["bound"] = c.bound_name;
  j["bound_value"] = c.bound_value;
  j["alpha_used"] = c.alpha_used;
  j["alpha_exact"] = c.alpha_exact;
  j["detail"] = c.detail;
  nlohmann::json ps = nlohmann::json::array();
  for (const auto& p : c.pieces) {
    nlohmann::json pj;
    pj["name"] = p.name;
    pj["vertices"] = to_json(p.verts);
    pj["parts"] = p.parts;
    ps.push_back(pj);
  }
  j["pieces"] = ps;
  return j;
}

inline nlohmann::json to_json(const ColoringResult& c) {
  nlohmann::json j;
  j["colors"] = c.num_colors;
  j["chi"] = c.chi;
  j["bound"] = c.bound_name;
  j["bound_value"] = c.bound_value;
  j["omega_used"] = c.omega_used;
  j["omega_exact"] = c.omega_exact;
  j["color_map"] = c.color;
  j["cover"] = to_json(c.structure);
  return j;
}

inline nlohmann::json to_json(const WitnessTriple& w) {
  nlohmann::json j;
  j["largest"] = w.largest;
  j["target"] = w.target;
  j["case"] = w.case_tag;
  j["equality"] = w.equality;
  j["extremal"] = w.extremal;
  j["sets"] = nlohmann::json::array();
  for (const auto& s : w.sets) j["sets"].push_back(to_json(s));
  return j;
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["rule"] = c.rule;
  if (!c.reason.empty()) j["reason"] = c.reason;
  j["n"] = c.n;
  j["n_even"] = c.n_even;
  j["alpha"] = c.alpha;
  j["omega"] = c.omega;
  j["chi"] = c.chi;
  j["facts"] = c.facts;
  nlohmann::json rt = nlohmann::json::array();
  for (auto [k, b] : Certificate::ramsey_table()) rt.push_back({{"k", k}, {"bound", b}});
  j["ramsey_table"] = rt;
  return j;
}

inline nlohmann::json to_json(const StructureReport& s) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : s.results) {
    nlohmann::json e;
    e["name"] = r.name;
    e["status"] = r.status == PropertyStatus::Holds
                      ? "holds"
                      : (r.status == PropertyStatus::Violated ? "violated"
                                                              : "precondition-not-met");
    if (!r.detail.empty()) e["detail"] = r.detail;
    if (!r.witness.empty()) e["witness"] = r.witness;
    j.push_back(e);
  }
  return j;
}

inline nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json j;
  j["c5"] = d.c5;
  nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
  for (int i = 0; i < 5; ++i) {
    a.push_back(to_json(d.A[static_cast<std::size_t>(i)]));
    b.push_back(to_json(d.B[static_cast<std::size_t>(i)]));
  }
  j["A"] = a;
  j["B"] = b;
  j["S2"] = to_json(d.S2);
  j["h_A"] = d.h_a();
  j["h_B"] = d.h_b();
  return j;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["target_class"] = to_json(r.target);
  j["complement_class"] = to_json(r.complement_class);
  if (r.omega >= 0) j["omega"] = r.omega;
  if (r.alpha >= 0) j["alpha"] = r.alpha;
  if (r.chi >= 0) {
    j["chi"] = r.chi;
    j["chi_exact"] = r.chi_exact;
  }
  if (r.has_structure) {
    j["decomposition"] = to_json(*r.decomp);
    j["properties"] = to_json(r.structure);
    j["classification"] = class_label_name(r.classification.label);
    if (!r.classification.detail.empty())
      j["classification_detail"] = r.classification.detail;
  }
  if (r.has_coloring) j["coloring"] = to_json(*r.coloring);
  j["certificate"] = to_json(r.certificate);
  return j;
}

}  // namespace paraglider
