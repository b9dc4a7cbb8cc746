#include "cli.hpp"

#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "steinberg/core.hpp"

namespace steinberg::cli {

namespace {

std::vector<int> parse_csv(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) {
    return out;
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) {
        throw DomainError("malformed integer list entry: \"" + item + "\"");
      }
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw DomainError("malformed integer list entry: \"" + item + "\"");
    }
  }
  return out;
}

PartialPermutation tau_from_word(const std::string& csv) {
  std::vector<int> word = parse_csv(csv);
  const int n = static_cast<int>(word.size());
  return PartialPermutation(n, std::move(word));
}

std::string partition_text(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

std::string partition_pair_text(const std::pair<Partition, Partition>& pr) {
  return "(" + partition_text(pr.first) + "," + partition_text(pr.second) + ")";
}

std::string tableau_text(const Tableau& t) {
  if (t.empty()) {
    return "()";
  }
  std::string out;
  for (int r = 0; r < t.num_rows(); ++r) {
    if (r > 0) {
      out += "/";
    }
    const auto& row = t.rows()[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) {
        out += " ";
      }
      out += std::to_string(row[c]);
    }
  }
  return out;
}

std::string signed_text(const SignedYoungDiagram& d) {
  if (d.empty()) {
    return "()";
  }
  std::string out;
  for (int r = 0; r < d.num_rows(); ++r) {
    if (r > 0) {
      out += "/";
    }
    out += d.rows()[static_cast<std::size_t>(r)].to_string();
  }
  return out;
}

std::string skew_text(const SkewTableau& t) {
  if (t.outer().empty()) {
    return "()";
  }
  std::string out;
  for (int r = 0; r < t.outer().num_rows(); ++r) {
    if (r > 0) {
      out += "/";
    }
    for (int c = 0; c < t.outer().row(r); ++c) {
      if (c > 0) {
        out += " ";
      }
      out += c < t.inner().row(r) ? "." : std::to_string(t.at(r, c));
    }
  }
  return out;
}

std::string word_text(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(word[i]);
  }
  return out;
}

const char* pass_text(bool ok) { return ok ? "pass" : "fail"; }

struct VerifySweep {
  int checked = 0;
  int mismatches = 0;
  int undecided = 0;
};

template <typename F>
auto with_genericity_retry(F&& probe, const OracleConfig& config)
    -> std::optional<decltype(probe(config))> {
  try {
    return probe(config);
  } catch (const GenericityError&) {
  }
  OracleConfig doubled = config;
  doubled.trials *= 2;
  try {
    return probe(doubled);
  } catch (const GenericityError&) {
    return std::nullopt;
  }
}

void sweep_phi(int n, const OracleConfig& config, VerifySweep& sweep) {
  for (const PartialPermutation& tau : enumerate_partial_permutations(n)) {
    auto expected = phi(tau);
    auto probed = with_genericity_retry(
        [&tau](const OracleConfig& c) { return phi_oracle(tau, c); }, config);
    ++sweep.checked;
    if (!probed) {
      ++sweep.undecided;
    } else if (*probed != expected) {
      ++sweep.mismatches;
    }
  }
}

void sweep_xi(int n, const OracleConfig& config, VerifySweep& sweep) {
  for (const PartialPermutation& tau : enumerate_partial_permutations(n)) {
    OrbitRep omega(tau, PartialPermutation::identity(n));
    auto expected_k = xi_k_generic(tau);
    auto expected_s = xi_s_generic(tau);
    auto probed = with_genericity_retry(
        [&omega](const OracleConfig& c) { return xi_oracle(omega, c); }, config);
    ++sweep.checked;
    if (!probed) {
      ++sweep.undecided;
    } else if (probed->xi_k != expected_k || probed->xi_s != expected_s) {
      ++sweep.mismatches;
    }
  }
}

struct FiberLine {
  Partition lambda;
  Partition mu;
  int count = 0;
  int predicted = 0;
};

std::vector<FiberLine> fiber_lines(int n) {
  std::map<std::pair<Partition, Partition>, int> swept;
  for (const PartialPermutation& tau : enumerate_partial_permutations(n)) {
    ++swept[phi(tau)];
  }
  std::vector<FiberLine> lines;
  lines.reserve(swept.size());
  for (const auto& [shapes, count] : swept) {
    int predicted = static_cast<int>(fiber_enumeration(shapes.first, shapes.second, n).size());
    lines.push_back({shapes.first, shapes.second, count, predicted});
  }
  return lines;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of partial permutations: insertion tableaux, "
               "triple and moment-map invariants, orbit catalogs, and randomized "
               "finite-field verification."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::uint64_t prime = PrimeFieldMatrix::kDefaultPrime;
  int trials = 7;
  std::uint64_t seed = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text", "markdown"}))
      ->capture_default_str();
  app.add_option("--prime", prime, "Field size for randomized probes")
      ->envname("STEINBERG_PRIME")
      ->capture_default_str();
  app.add_option("--trials", trials, "Random samples per probe")
      ->envname("STEINBERG_TRIALS")
      ->capture_default_str();
  app.add_option("--seed", seed, "Base seed for randomized probes")
      ->envname("STEINBERG_SEED")
      ->capture_default_str();

  int exit_code = 0;
  auto config = [&] { return OracleConfig{prime, trials, seed}; };
  bool json = false;
  bool markdown = false;
  app.parse_complete_callback([&] {
    json = format == "json";
    markdown = format == "markdown";
  });

  std::string rs_word;
  auto* rs_cmd = app.add_subcommand("rs", "Insertion and recording tableaux of the "
                                          "nondegenerate part of a word");
  rs_cmd->add_option("word", rs_word, "Comma-separated word, 0 for kernel")->required();
  rs_cmd->callback([&] {
    Decomposition d = decompose(tau_from_word(rs_word));
    auto [p, q] = rs_pair(d.sigma);
    if (json) {
      out << nlohmann::json{p, q}.dump() << "\n";
    } else {
      out << "RS1: " << tableau_text(p) << "\n";
      out << "RS2: " << tableau_text(q) << "\n";
    }
  });

  std::string phi_word;
  auto* phi_cmd = app.add_subcommand("phi", "Pair of partitions attached to a word");
  phi_cmd->add_option("word", phi_word, "Comma-separated word, 0 for kernel")->required();
  phi_cmd->callback([&] {
    auto shapes = phi(tau_from_word(phi_word));
    if (json) {
      out << nlohmann::json{shapes.first, shapes.second}.dump() << "\n";
    } else {
      out << partition_pair_text(shapes) << "\n";
    }
  });

  std::string triple_word;
  auto* triple_cmd = app.add_subcommand("triple", "Tableau triple attached to a word");
  triple_cmd->add_option("word", triple_word, "Comma-separated word, 0 for kernel")->required();
  triple_cmd->callback([&] {
    Triple t = triple(tau_from_word(triple_word));
    if (json) {
      out << nlohmann::json(t).dump() << "\n";
    } else {
      out << "T1: " << tableau_text(t.t1()) << "\n";
      out << "T2: " << tableau_text(t.t2()) << "\n";
      out << "nu: " << partition_text(t.nu()) << "\n";
    }
  });

  std::string untriple_json;
  auto* untriple_cmd = app.add_subcommand("untriple", "Word whose triple equals the given one");
  untriple_cmd->add_option("json", untriple_json, "Triple as {\"T1\",\"T2\",\"nu\"}")->required();
  untriple_cmd->callback([&] {
    Triple t = nlohmann::json::parse(untriple_json).get<Triple>();
    PartialPermutation tau = triple_inverse(t);
    if (json) {
      out << nlohmann::json(tau).dump() << "\n";
    } else {
      out << word_text(tau.word()) << "\n";
    }
  });

  std::string xik_word;
  auto* xik_cmd = app.add_subcommand("xi-k", "Jordan types of the two nilpotent blocks "
                                             "generically attached to a word");
  xik_cmd->add_option("word", xik_word, "Comma-separated word, 0 for kernel")->required();
  xik_cmd->callback([&] {
    auto shapes = xi_k_generic(tau_from_word(xik_word));
    if (json) {
      out << nlohmann::json{shapes.first, shapes.second}.dump() << "\n";
    } else {
      out << partition_pair_text(shapes) << "\n";
    }
  });

  std::string xis_word;
  auto* xis_cmd = app.add_subcommand("xi-s", "Signed diagram generically attached to a word");
  xis_cmd->add_option("word", xis_word, "Comma-separated word, 0 for kernel")->required();
  xis_cmd->callback([&] {
    SignedYoungDiagram d = xi_s_generic(tau_from_word(xis_word));
    if (json) {
      out << nlohmann::json(d).dump() << "\n";
    } else {
      out << signed_text(d) << "\n";
    }
  });

  std::string triangle_json;
  auto* triangle_cmd = app.add_subcommand("triangle", "Skew tableau built from two tableaux "
                                                      "and two insertion lists");
  triangle_cmd->add_option("json", triangle_json,
                           "Input as {\"T1\",\"T2\",\"ells\",\"ms\",\"n\"}")->required();
  triangle_cmd->callback([&] {
    nlohmann::json j = nlohmann::json::parse(triangle_json);
    for (const char* key : {"T1", "T2", "ells", "ms", "n"}) {
      if (!j.is_object() || !j.contains(key)) {
        throw DomainError(std::string("missing field \"") + key + "\"");
      }
    }
    SkewTableau result = triangle(j.at("T1").get<Tableau>(), j.at("T2").get<Tableau>(),
                                  j.at("ells").get<std::vector<int>>(),
                                  j.at("ms").get<std::vector<int>>(), j.at("n").get<int>());
    if (json) {
      out << nlohmann::json(result).dump() << "\n";
    } else {
      out << skew_text(result) << "\n";
    }
  });

  std::string canon_matrix_json;
  auto* canon_matrix_cmd = app.add_subcommand("canon-matrix", "Word of the triangular double "
                                                              "coset through a square matrix");
  canon_matrix_cmd->add_option("json", canon_matrix_json, "Matrix as an array of rows")
      ->required();
  canon_matrix_cmd->callback([&] {
    PrimeFieldMatrix m = matrix_from_json(nlohmann::json::parse(canon_matrix_json), prime);
    PartialPermutation tau = canonicalize_matrix(m);
    if (json) {
      out << nlohmann::json(tau).dump() << "\n";
    } else {
      out << word_text(tau.word()) << "\n";
    }
  });

  std::string canon_grass_json;
  auto* canon_grass_cmd = app.add_subcommand("canon-grass", "Orbit representative of the "
                                                            "column span of a 2n x n matrix");
  canon_grass_cmd->add_option("json", canon_grass_json, "Matrix as an array of rows")
      ->required();
  canon_grass_cmd->callback([&] {
    PrimeFieldMatrix m = matrix_from_json(nlohmann::json::parse(canon_grass_json), prime);
    OrbitRep omega = canonicalize_grassmann_point(m);
    if (json) {
      out << nlohmann::json(omega).dump() << "\n";
    } else {
      out << "tau1: " << word_text(omega.tau1().word()) << "\n";
      out << "tau2: " << word_text(omega.tau2().word()) << "\n";
    }
  });

  int orbits_n = 0;
  auto* orbits_cmd = app.add_subcommand("orbits", "All orbit representatives for rank n");
  orbits_cmd->add_option("--n", orbits_n, "Rank")->required();
  orbits_cmd->callback([&] {
    std::vector<OrbitRep> reps = enumerate_orbit_reps(orbits_n);
    if (json) {
      out << nlohmann::json(reps).dump() << "\n";
    } else if (markdown) {
      out << "| tau1 | tau2 |\n|---|---|\n";
      for (const OrbitRep& rep : reps) {
        out << "| " << word_text(rep.tau1().word()) << " | " << word_text(rep.tau2().word())
            << " |\n";
      }
    } else {
      for (const OrbitRep& rep : reps) {
        out << word_text(rep.tau1().word()) << " ; " << word_text(rep.tau2().word()) << "\n";
      }
      out << "classes: " << reps.size() << "\n";
    }
  });

  int fibers_n = 0;
  std::string fibers_lambda;
  std::string fibers_mu;
  auto* fibers_cmd = app.add_subcommand("count-fibers", "Fiber cardinalities of the partition "
                                                        "pair map, swept and predicted");
  fibers_cmd->add_option("--n", fibers_n, "Rank")->required();
  auto* lambda_opt = fibers_cmd->add_option("--lambda", fibers_lambda,
                                            "Comma-separated partition");
  auto* mu_opt = fibers_cmd->add_option("--mu", fibers_mu, "Comma-separated partition");
  fibers_cmd->callback([&] {
    if ((lambda_opt->count() > 0) != (mu_opt->count() > 0)) {
      throw DomainError("count-fibers needs both --lambda and --mu, or neither");
    }
    std::vector<FiberLine> lines = fiber_lines(fibers_n);
    if (lambda_opt->count() > 0) {
      Partition lambda{parse_csv(fibers_lambda)};
      Partition mu{parse_csv(fibers_mu)};
      int count = 0;
      for (const FiberLine& line : lines) {
        if (line.lambda == lambda && line.mu == mu) {
          count = line.count;
        }
      }
      int predicted = static_cast<int>(fiber_enumeration(lambda, mu, fibers_n).size());
      if (json) {
        out << nlohmann::json{{"n", fibers_n}, {"lambda", lambda}, {"mu", mu},
                              {"count", count}, {"predicted", predicted}}.dump() << "\n";
      } else {
        out << "lambda=" << partition_text(lambda) << " mu=" << partition_text(mu)
            << " count=" << count << " predicted=" << predicted << "\n";
      }
      return;
    }
    int total = 0;
    int predicted_total = 0;
    for (const FiberLine& line : lines) {
      total += line.count;
      predicted_total += line.predicted;
    }
    if (json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const FiberLine& line : lines) {
        rows.push_back({{"lambda", line.lambda}, {"mu", line.mu}, {"count", line.count},
                        {"predicted", line.predicted}});
      }
      out << nlohmann::json{{"n", fibers_n}, {"fibers", std::move(rows)}, {"total", total},
                            {"predicted_total", predicted_total}}.dump() << "\n";
    } else if (markdown) {
      out << "| lambda | mu | count | predicted |\n|---|---|---|---|\n";
      for (const FiberLine& line : lines) {
        out << "| " << partition_text(line.lambda) << " | " << partition_text(line.mu)
            << " | " << line.count << " | " << line.predicted << " |\n";
      }
      out << "\ntotal: " << total << ", predicted: " << predicted_total << "\n";
    } else {
      for (const FiberLine& line : lines) {
        out << "lambda=" << partition_text(line.lambda) << " mu=" << partition_text(line.mu)
            << " count=" << line.count << " predicted=" << line.predicted << "\n";
      }
      out << "total=" << total << " predicted=" << predicted_total << "\n";
    }
  });

  int verify_n = 0;
  std::string verify_what;
  auto* verify_cmd = app.add_subcommand("verify", "Check the randomized probes against the "
                                                  "combinatorial maps on every word of rank n");
  verify_cmd->add_option("--n", verify_n, "Rank")->required();
  verify_cmd->add_option("--what", verify_what, "Which maps to check")
      ->check(CLI::IsMember({"phi", "xi", "all"}))
      ->required();
  verify_cmd->callback([&] {
    VerifySweep sweep;
    if (verify_what == "phi" || verify_what == "all") {
      sweep_phi(verify_n, config(), sweep);
    }
    if (verify_what == "xi" || verify_what == "all") {
      sweep_xi(verify_n, config(), sweep);
    }
    if (json) {
      out << nlohmann::json{{"n", verify_n}, {"what", verify_what}, {"checked", sweep.checked},
                            {"mismatches", sweep.mismatches}, {"undecided", sweep.undecided}}
                 .dump()
          << "\n";
    } else {
      out << "what=" << verify_what << " n=" << verify_n << " checked=" << sweep.checked
          << " mismatches=" << sweep.mismatches << " undecided=" << sweep.undecided << "\n";
    }
    if (sweep.mismatches > 0 || sweep.undecided > 0) {
      exit_code = 2;
    }
  });

  int image_n = 0;
  auto* image_cmd = app.add_subcommand("image-components", "Moment-map images of every orbit "
                                                           "class with the structural checks");
  image_cmd->add_option("--n", image_n, "Rank")->required();
  image_cmd->callback([&] {
    ImageReport report = image_analysis(image_n, config());
    if (json) {
      out << nlohmann::json(report).dump() << "\n";
      return;
    }
    if (markdown) {
      out << "| tau1 | tau2 | method | xi_k | xi_s |\n|---|---|---|---|---|\n";
      for (const ImageClassEntry& entry : report.classes) {
        out << "| " << word_text(entry.omega.tau1().word()) << " | "
            << word_text(entry.omega.tau2().word()) << " | " << entry.method << " | "
            << (entry.xi_k ? partition_pair_text(*entry.xi_k) : std::string("undecided"))
            << " | " << (entry.xi_s ? signed_text(*entry.xi_s) : std::string("undecided"))
            << " |\n";
      }
      out << "\n";
    }
    out << "n=" << report.n << " classes=" << report.classes.size()
        << " flagged=" << report.flagged_count << "\n";
    out << "maximal:";
    for (const SignedYoungDiagram& d : report.maximal) {
      out << " " << signed_text(d);
    }
    out << "\n";
    out << "checks:"
        << " sign_prefix_square_zero=" << pass_text(report.checks.sign_prefix_square_zero)
        << " column_bound=" << pass_text(report.checks.column_bound)
        << " swap_closure=" << pass_text(report.checks.swap_closure)
        << " regular_attained=" << pass_text(report.checks.regular_attained)
        << " maximal_matches_expected=" << pass_text(report.checks.maximal_matches_expected)
        << "\n";
  });

  int table_n = 0;
  auto* table_cmd = app.add_subcommand("table", "Every word of rank n with its tableaux and "
                                                "invariants, in enumeration order");
  table_cmd->add_option("--n", table_n, "Rank")->required();
  table_cmd->callback([&] {
    std::vector<PartialPermutation> taus = enumerate_partial_permutations(table_n);
    if (json) {
      nlohmann::json rows = nlohmann::json::array();
      for (const PartialPermutation& tau : taus) {
        Decomposition d = decompose(tau);
        auto [p, q] = rs_pair(d.sigma);
        rows.push_back({{"word", tau.word()},
                        {"sigma", {{"sources", d.sigma.sources()},
                                   {"targets", d.sigma.targets()}}},
                        {"rs", {p, q}},
                        {"triple", triple(tau)},
                        {"phi", {phi(tau).first, phi(tau).second}},
                        {"xi_s", xi_s_generic(tau)}});
      }
      out << rows.dump() << "\n";
      return;
    }
    if (markdown) {
      out << "| sigma | RS1 | RS2 | T1 | T2 | nu | phi | xi_s |\n"
          << "|---|---|---|---|---|---|---|---|\n";
    }
    for (const PartialPermutation& tau : taus) {
      Decomposition d = decompose(tau);
      auto [p, q] = rs_pair(d.sigma);
      Triple t = triple(tau);
      auto shapes = phi(tau);
      SignedYoungDiagram xs = xi_s_generic(tau);
      if (markdown) {
        out << "| " << word_text(tau.word()) << " | " << tableau_text(p) << " | "
            << tableau_text(q) << " | " << tableau_text(t.t1()) << " | "
            << tableau_text(t.t2()) << " | " << partition_text(t.nu()) << " | "
            << partition_pair_text(shapes) << " | " << signed_text(xs) << " |\n";
      } else {
        out << word_text(tau.word()) << " | " << tableau_text(p) << " | " << tableau_text(q)
            << " | " << tableau_text(t.t1()) << " | " << tableau_text(t.t2()) << " | "
            << partition_text(t.nu()) << " | " << partition_pair_text(shapes) << " | "
            << signed_text(xs) << "\n";
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace steinberg::cli
