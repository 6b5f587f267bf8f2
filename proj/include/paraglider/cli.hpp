#pragma once

// Command-line front end. run() is the whole program: it parses an argument
// vector (without the program name), dispatches into the library, and writes
// results to the given streams, so tests can drive it without a subprocess.
//
// Exit codes: 0 success (including negative query answers), 1 a property
// violation or class-precondition failure, 2 usage or input parse errors.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "paraglider/certify.hpp"
#include "paraglider/cover.hpp"
#include "paraglider/decompose.hpp"
#include "paraglider/errors.hpp"
#include "paraglider/exact.hpp"
#include "paraglider/families.hpp"
#include "paraglider/graph.hpp"
#include "paraglider/report.hpp"
#include "paraglider/selftest.hpp"

namespace paraglider::cli {

namespace detail {

// Usage-level problem discovered after argument parsing (unreadable file,
// bad environment variable). Maps to exit code 2.
struct UsageError {
  std::string message;
};

// The vertex cap for parsed input. PARAGLIDER_MAX_N lowers it; it can never
// raise it above the library-wide limit.
inline int vertex_cap() {
  int cap = kMaxVertices;
  if (const char* env = std::getenv("PARAGLIDER_MAX_N")) {
    std::string text(env);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(text, &used);
    } catch (const std::exception&) {
      throw UsageError{"PARAGLIDER_MAX_N is not a number: " + text};
    }
    if (used != text.size()) throw UsageError{"PARAGLIDER_MAX_N is not a number: " + text};
    if (value < 0) throw UsageError{"PARAGLIDER_MAX_N must be non-negative"};
    cap = std::min(cap, value);
  }
  return cap;
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), vertex_cap());
}

inline void write_block(std::ostream& out, const std::string& text) {
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

inline nlohmann::json odd_minor_json(int order, const std::optional<OddMinorModel>& model) {
  nlohmann::json j;
  j["order"] = order;
  j["present"] = model.has_value();
  if (model) {
    auto parts = nlohmann::json::array();
    for (const auto& p : model->parts) parts.push_back(p.to_vector());
    j["parts"] = parts;
    j["color1"] = model->color1.to_vector();
    auto links = nlohmann::json::array();
    for (const auto& [a, b, u, v] : model->links)
      links.push_back(std::vector<int>{a, b, u, v});
    j["links"] = links;
  }
  return j;
}

inline void odd_minor_text(std::ostream& out, int order,
                           const std::optional<OddMinorModel>& model) {
  out << "order " << order << '\n';
  out << "present " << (model ? "yes" : "no") << '\n';
  if (!model) return;
  for (std::size_t i = 0; i < model->parts.size(); ++i) {
    out << "part " << i << ":";
    for (int v : model->parts[i].to_vector()) out << ' ' << v;
    out << '\n';
  }
  out << "color-1:";
  for (int v : model->color1.to_vector()) out << ' ' << v;
  out << '\n';
  for (const auto& [a, b, u, v] : model->links)
    out << "link " << a << ' ' << b << ": " << u << ' ' << v << '\n';
}

struct EnumerateOutcome {
  long long scanned = 0;
  long long members = 0;
  long long checked = 0;
  long long coloring_bound = 0;
  long long clique_bound = 0;
  long long chi_identity = 0;
  std::vector<std::string> details;

  long long violations() const { return coloring_bound + clique_bound + chi_identity; }
};

// Exhaustive scan of all labelled graphs on n vertices. Filters the target
// class, then checks the colouring bound, the clique lower bound, and the
// exact-chi identity on every member. The edge-mask space is sharded across
// worker threads; results merge deterministically in shard order.
inline EnumerateOutcome enumerate_graphs(int n, bool up_to_iso, int jobs) {
  const auto space = selftest::detail::make_space(n);
  const auto para_bitmap = selftest::detail::pattern_mask_bitmap(Pattern::Paraglider);
  const std::uint32_t full = space.num_pairs == 0 ? 0u : ((1u << space.num_pairs) - 1u);

  // Bit-relabelling tables, one per vertex permutation, for the optional
  // reduction to lexicographically least representatives.
  std::vector<std::vector<int>> perm_bits;
  if (up_to_iso) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> table(static_cast<std::size_t>(space.num_pairs));
      for (int e = 0; e < space.num_pairs; ++e) {
        auto [u, v] = space.pairs[static_cast<std::size_t>(e)];
        int a = perm[static_cast<std::size_t>(u)];
        int b = perm[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        table[static_cast<std::size_t>(e)] =
            space.pair_index[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
      perm_bits.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  auto is_least_representative = [&perm_bits, &space](std::uint32_t mask) {
    for (const auto& table : perm_bits) {
      std::uint32_t image = 0;
      for (int e = 0; e < space.num_pairs; ++e)
        if (mask >> e & 1u) image |= 1u << table[static_cast<std::size_t>(e)];
      if (image < mask) return false;
    }
    return true;
  };

  auto work = [&](std::uint64_t lo, std::uint64_t hi, EnumerateOutcome& res) {
    for (std::uint64_t m = lo; m < hi; ++m) {
      const auto mask = static_cast<std::uint32_t>(m);
      ++res.scanned;
      std::uint32_t comp = full & ~mask;
      if (selftest::detail::mask_has_triangle(space, comp)) continue;
      if (n >= 5 && selftest::detail::subset_oracle_present(space, mask, 5, para_bitmap))
        continue;
      ++res.members;
      if (up_to_iso && !is_least_representative(mask)) continue;
      ++res.checked;
      Graph g = selftest::detail::graph_of(space, mask);
      ColoringResult col = color_graph(g);
      int w = brute_omega(g);
      int chi = brute_chi(g);
      auto note = [&res, mask](const char* kind) {
        if (res.details.size() < 32)
          res.details.push_back("violation " + std::string(kind) + " mask=" +
                                std::to_string(mask));
      };
      if (col.num_colors > std::max(w + 3, 2 * w - 2)) {
        ++res.coloring_bound;
        note("coloring-bound");
      }
      if (3 * w < n - 1) {
        ++res.clique_bound;
        note("clique-bound");
      }
      if (col.chi != chi ||
          theta_triangle_free(g.complement()).theta != chi) {
        ++res.chi_identity;
        note("chi-identity");
      }
    }
  };

  const std::uint64_t count = static_cast<std::uint64_t>(full) + 1;
  jobs = std::max(1, std::min({jobs, 64, static_cast<int>(count)}));
  std::vector<EnumerateOutcome> shards(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    work(0, count, shards[0]);
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < jobs; ++i) {
      std::uint64_t lo = count * static_cast<std::uint64_t>(i) / static_cast<std::uint64_t>(jobs);
      std::uint64_t hi =
          count * static_cast<std::uint64_t>(i + 1) / static_cast<std::uint64_t>(jobs);
      threads.emplace_back(work, lo, hi, std::ref(shards[static_cast<std::size_t>(i)]));
    }
    for (auto& t : threads) t.join();
  }
  EnumerateOutcome total;
  for (const auto& s : shards) {
    total.scanned += s.scanned;
    total.members += s.members;
    total.checked += s.checked;
    total.coloring_bound += s.coloring_bound;
    total.clique_bound += s.clique_bound;
    total.chi_identity += s.chi_identity;
    for (const auto& d : s.details)
      if (total.details.size() < 32) total.details.push_back(d);
  }
  return total;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"structure, clique covers, and odd clique minors for graphs whose "
               "complement is triangle-free",
               "paraglider"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  bool all_c5 = false;
  std::string family;
  int gen_s = 2;
  int gen_t = 1;
  std::uint64_t gen_seed = 1;
  int gen_n = 24;
  int enum_n = 5;
  bool up_to_iso = false;
  int jobs = std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  int minor_order = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for a graph file");
  analyze_cmd->add_option("file", path, "graph file")->required();
  analyze_cmd->add_flag("--json", json, "emit structured output");
  analyze_cmd->add_flag("--all-c5", all_c5,
                        "also print the decomposition under all ten base relabellings");

  auto* color_cmd =
      app.add_subcommand("color", "colour a member of the target class within the proven bound");
  color_cmd->add_option("file", path, "graph file")->required();
  color_cmd->add_flag("--json", json, "emit structured output");

  auto* cover_cmd =
      app.add_subcommand("cover", "clique cover of a triangle-free graph via the decomposition");
  cover_cmd->add_option("file", path, "graph file")->required();
  cover_cmd->add_flag("--json", json, "emit structured output");

  auto* witness_cmd =
      app.add_subcommand("witness", "disjoint independent sets witnessing the size bound");
  witness_cmd->add_option("file", path, "graph file")->required();
  witness_cmd->add_flag("--json", json, "emit structured output");

  auto* generate_cmd = app.add_subcommand("generate", "emit a named or random family member");
  generate_cmd->add_option("--family", family, "hstar, bhat, ht, or random")
      ->required()
      ->check(CLI::IsMember({"hstar", "bhat", "ht", "random"}));
  generate_cmd->add_option("--s", gen_s, "block size for bhat")->check(CLI::Range(1, 41));
  generate_cmd->add_option("--t", gen_t, "block size for ht")->check(CLI::Range(1, 24));
  generate_cmd->add_option("--seed", gen_seed, "seed for random");
  generate_cmd->add_option("--n", gen_n, "target order for random")->check(CLI::Range(6, 128));

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "scan all labelled graphs on n vertices for violations");
  enumerate_cmd->add_option("--n", enum_n, "number of vertices")
      ->required()
      ->check(CLI::Range(1, 7));
  enumerate_cmd->add_flag("--up-to-iso", up_to_iso,
                          "check only lexicographically least representatives");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  enumerate_cmd->add_flag("--json", json, "emit structured output");

  auto* oddminor_cmd = app.add_subcommand("oddminor", "search for an odd clique minor");
  oddminor_cmd->add_option("file", path, "graph file")->required();
  oddminor_cmd->add_option("--t", minor_order, "order of the sought minor")->required();
  oddminor_cmd->add_flag("--json", json, "emit structured output");

  auto* certify_cmd =
      app.add_subcommand("certify", "certificate that the odd-minor bound holds, if any");
  certify_cmd->add_option("file", path, "graph file")->required();
  certify_cmd->add_flag("--json", json, "emit structured output");

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  (void)selftest_cmd;

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      Graph g = detail::read_graph_file(path);
      Report r = analyze(g);
      if (json) {
        nlohmann::json j = to_json(r);
        if (all_c5 && r.has_structure) {
          auto variants = nlohmann::json::array();
          for (int rot = 0; rot < 5; ++rot)
            for (int refl = 0; refl < 2; ++refl)
              variants.push_back(to_json(r.decomp->reindexed(rot, refl != 0)));
          j["base_variants"] = variants;
        }
        out << j.dump(2) << '\n';
      } else {
        detail::write_block(out, to_text(r));
        if (all_c5 && r.has_structure)
          for (int rot = 0; rot < 5; ++rot)
            for (int refl = 0; refl < 2; ++refl) {
              out << "variant rotation=" << rot << " reflected=" << refl << '\n';
              detail::write_block(out, r.decomp->reindexed(rot, refl != 0).to_text());
            }
      }
      return 0;
    }
    if (*color_cmd) {
      Graph g = detail::read_graph_file(path);
      ColoringResult c = color_graph(g);
      if (json)
        out << to_json(c).dump(2) << '\n';
      else
        detail::write_block(out, to_text(c));
      return 0;
    }
    if (*cover_cmd) {
      Graph h = detail::read_graph_file(path);
      CoverResult c = build_cover(h);
      if (json)
        out << to_json(c).dump(2) << '\n';
      else
        detail::write_block(out, to_text(c));
      return 0;
    }
    if (*witness_cmd) {
      Graph h = detail::read_graph_file(path);
      WitnessTriple w = witness_independent_set(h);
      if (json)
        out << to_json(w).dump(2) << '\n';
      else
        detail::write_block(out, to_text(w));
      return 0;
    }
    if (*generate_cmd) {
      Graph g(0);
      if (family == "hstar") {
        g = make_hstar();
      } else if (family == "bhat") {
        g = make_bhat(gen_s);
      } else if (family == "ht") {
        g = make_ht(gen_t);
      } else {
        GenParams params;
        params.n_target = gen_n;
        g = random_class_member(gen_seed, params);
      }
      emit_graph(g, out);
      return 0;
    }
    if (*enumerate_cmd) {
      auto res = detail::enumerate_graphs(enum_n, up_to_iso, jobs);
      if (json) {
        nlohmann::json j;
        j["n"] = enum_n;
        j["scanned"] = res.scanned;
        j["members"] = res.members;
        j["checked"] = res.checked;
        j["coloring_bound_violations"] = res.coloring_bound;
        j["clique_bound_violations"] = res.clique_bound;
        j["chi_identity_violations"] = res.chi_identity;
        j["details"] = res.details;
        out << j.dump(2) << '\n';
      } else {
        out << "n " << enum_n << '\n';
        out << "scanned " << res.scanned << '\n';
        out << "members " << res.members << '\n';
        out << "checked " << res.checked << '\n';
        out << "coloring-bound-violations " << res.coloring_bound << '\n';
        out << "clique-bound-violations " << res.clique_bound << '\n';
        out << "chi-identity-violations " << res.chi_identity << '\n';
        for (const auto& d : res.details) out << d << '\n';
      }
      return res.violations() == 0 ? 0 : 1;
    }
    if (*oddminor_cmd) {
      Graph g = detail::read_graph_file(path);
      auto model = has_odd_clique_minor(g, minor_order);
      if (json)
        out << detail::odd_minor_json(minor_order, model).dump(2) << '\n';
      else
        detail::odd_minor_text(out, minor_order, model);
      return 0;
    }
    if (*certify_cmd) {
      Graph g = detail::read_graph_file(path);
      Certificate c = certify_conjecture(g);
      if (json)
        out << to_json(c).dump(2) << '\n';
      else
        detail::write_block(out, to_text(c));
      return 0;
    }
    if (*selftest_cmd) {
      auto results = selftest::run_all(out);
      return selftest::all_pass(results) ? 0 : 1;
    }
  } catch (const detail::UsageError& e) {
    err << "error: " << e.message << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SizeExceededError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace paraglider::cli
