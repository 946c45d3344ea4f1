// Command-line front end: Kostka polynomials of multipartitions, their
// dominance-ordered tables, the pseudoroot table, the reduced-word
// construction, and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ks/characters.hpp"
#include "ks/io.hpp"
#include "ks/kostka.hpp"
#include "ks/suites.hpp"

namespace {

constexpr const char* kVersionText =
    "kshoji 1.0.0\n"
    "conventions:\n"
    "  pseudoroot color      = start index m reduced mod r into {1..r}\n"
    "  euler orientation     = inversion-conjugated Demazure symmetrizer,\n"
    "                          fiber exponent -mu (degree-0 slice = chi(mu))\n"
    "  canonical weight      = prod_k x_{rk} x_{r(k-1)+1}^{-1} (verified form)\n"
    "  word intervals        = cumulative dims with cyclic lift D(u+r)=D(u)+d,\n"
    "                          letters reduced mod d\n";

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << bytes;
}

int report(const ks::SuiteResult& res, const std::string& name) {
  if (res.pass) {
    std::cout << "suite " << name << ": pass (" << res.checks << " checks)\n";
    return 0;
  }
  std::cout << "suite " << name << ": FAIL\n" << res.detail;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostka polynomials of multipartitions"};
  app.set_version_flag("--version", std::string(kVersionText));
  app.require_subcommand(1);

  // kostka
  int k_r = 1, k_n = 0;
  std::string k_lambda, k_mu;
  bool k_single = false, k_json = false, k_csv = false;
  CLI::App* kostka_cmd =
      app.add_subcommand("kostka", "one Kostka polynomial");
  kostka_cmd->add_option("--r", k_r, "number of components")->required();
  kostka_cmd->add_option("--n", k_n, "rows per component")->required();
  kostka_cmd->add_option("--lambda", k_lambda, "multipartition text")->required();
  kostka_cmd->add_option("--mu", k_mu, "multipartition text")->required();
  kostka_cmd->add_flag("--single", k_single, "single grading variable");
  kostka_cmd->add_flag("--json", k_json, "JSON output");
  kostka_cmd->add_flag("--csv", k_csv, "CSV output");

  // table
  ks::TableRequest treq;
  std::string t_out;
  CLI::App* table_cmd = app.add_subcommand("table", "dominance-ordered table");
  table_cmd->add_option("--r", treq.r, "number of components")->required();
  table_cmd->add_option("--size", treq.size, "total size")->required();
  table_cmd->add_option("--n", treq.n, "rows per component (default: size)");
  table_cmd->add_option("--out", t_out, "output file (default: stdout)");
  table_cmd->add_option("--threads", treq.threads, "worker threads");
  table_cmd->add_option("--seed", treq.seed, "seed recorded in JSON output");
  table_cmd->add_flag("--json", treq.json, "JSON instead of CSV");

  // pseudoroots
  int p_r = 1, p_n = 1;
  CLI::App* roots_cmd = app.add_subcommand("pseudoroots", "root table as CSV");
  roots_cmd->add_option("--r", p_r, "number of components")->required();
  roots_cmd->add_option("--n", p_n, "rows per component")->required();

  // words
  int w_r = 1, w_standard = 0;
  std::string w_dims, w_i, w_a;
  bool w_verify = false, w_json = false;
  CLI::App* words_cmd =
      app.add_subcommand("words", "reduced-word block construction");
  words_cmd->add_option("--r", w_r, "number of vertices")->required();
  words_cmd->add_option("--dims", w_dims, "comma list d1,...,dr");
  words_cmd->add_option("--standard-flag", w_standard,
                        "use the standard flag type with N rows");
  words_cmd->add_option("--i", w_i, "vertex sequence (comma list)");
  words_cmd->add_option("--a", w_a, "jump sequence (comma list)");
  words_cmd->add_flag("--verify", w_verify, "fail unless every block is reduced");
  words_cmd->add_flag("--json", w_json, "JSON output");

  // verify
  std::string v_suite, v_mu;
  int v_r = 0, v_n = 0, v_maxdeg = 3, v_max = 5, v_box = 3;
  long long v_size = 5;
  int v_threads = 1;
  unsigned long long v_seed = 20240801ULL;
  CLI::App* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd
      ->add_option("--suite", v_suite,
                   "charge|lemma31|lemma32|cor33|triangularity|positivity|"
                   "specialization|words")
      ->required();
  verify_cmd->add_option("--r", v_r, "number of components");
  verify_cmd->add_option("--n", v_n, "rows per component");
  verify_cmd->add_option("--mu", v_mu, "multipartition text");
  verify_cmd->add_option("--max-degree", v_maxdeg, "grading truncation");
  verify_cmd->add_option("--max", v_max, "upper bound on r and N");
  verify_cmd->add_option("--box", v_box, "coordinate box bound");
  verify_cmd->add_option("--size", v_size, "total size bound");
  verify_cmd->add_option("--threads", v_threads, "worker threads");
  verify_cmd->add_option("--seed", v_seed, "seed for randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2; --help/--version exit 0
  }

  try {
    if (*kostka_cmd) {
      ks::Multipartition lambda = ks::Multipartition::parse(k_lambda, k_r, k_n);
      ks::Multipartition mu = ks::Multipartition::parse(k_mu, k_r, k_n);
      ks::KostkaEngine engine(k_r, k_n);
      ks::TPoly poly = k_single ? engine.kostka_single(lambda, mu)
                                : engine.kostka(lambda, mu).poly;
      if (k_json) {
        nlohmann::ordered_json j;
        j["lambda"] = lambda.to_text();
        j["mu"] = mu.to_text();
        j["poly"] = ks::tpoly_to_json(poly);
        std::cout << j.dump(2) << "\n";
      } else if (k_csv) {
        std::cout << '"' << lambda.to_text() << "\",\"" << mu.to_text() << "\","
                  << ks::tpoly_to_canonical(poly) << "\n";
      } else {
        std::cout << ks::tpoly_to_pretty(poly) << "\n";
      }
      return 0;
    }

    if (*table_cmd) {
      write_output(t_out, ks::render_table(treq));
      return 0;
    }

    if (*roots_cmd) {
      std::cout << ks::render_pseudoroots_csv(p_r, p_n);
      return 0;
    }

    if (*words_cmd) {
      ks::FlagType ft;
      if (w_standard > 0) {
        ft = ks::standard_flag_type(w_r, w_standard);
      } else {
        ft.r = w_r;
        if (w_dims.empty() || w_i.empty() || w_a.empty()) {
          std::cerr << "words: need --standard-flag or all of --dims/--i/--a\n";
          return 2;
        }
        ft.dims = parse_int_list(w_dims);
        ft.i_seq = parse_int_list(w_i);
        ft.a_seq = parse_int_list(w_a);
      }
      ft.validate();
      std::vector<ks::WordBlock> blocks = ks::build_word_sequence(ft);
      std::cout << ks::render_word_blocks(ft, blocks, w_json);
      if (w_standard > 0 && !w_json) {
        ks::DimsReport rep = ks::dims_check(w_r, w_standard);
        std::cout << "dims_check: pseudoroots=" << rep.pseudoroot_count
                  << " block_entries=" << rep.block_entry_count
                  << " flag_dim=" << rep.flag_dim
                  << " total_dim=" << rep.total_dim
                  << " match=" << (rep.counts_match ? "yes" : "no") << "\n";
      }
      if (w_verify) {
        int d = ft.total_dim();
        for (const ks::WordBlock& b : blocks) {
          long long want =
              static_cast<long long>(b.arc_size) * (b.arc_size + 1) / 2;
          if (static_cast<long long>(b.word.size()) != want ||
              (!b.word.empty() && !ks::is_reduced(d, b.word))) {
            std::cout << "verification FAILED at block n=" << b.n << "\n";
            return 1;
          }
        }
        std::cout << "all blocks reduced\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      if (v_suite == "charge") {
        return report(ks::charge_suite(static_cast<int>(v_size)), v_suite);
      }
      if (v_suite == "lemma31") {
        return report(ks::weight_identity_suite(v_max), v_suite);
      }
      if (v_suite == "lemma32") {
        std::vector<std::pair<int, int>> shapes;
        if (v_r > 0 && v_n > 0) {
          shapes.emplace_back(v_r, v_n);
        } else {
          for (int r = 1; r <= 3; ++r) {
            for (int n = 1; n <= 3; ++n) shapes.emplace_back(r, n);
          }
        }
        return report(ks::series_equivalence_suite(shapes, v_box, v_maxdeg),
                      v_suite);
      }
      if (v_suite == "cor33") {
        if (v_r <= 0 || v_n <= 0 || v_mu.empty()) {
          std::cerr << "cor33 needs --r, --n and --mu\n";
          return 2;
        }
        ks::Multipartition mu = ks::Multipartition::parse(v_mu, v_r, v_n);
        return report(ks::euler_decomposition_suite(mu, v_maxdeg), v_suite);
      }
      if (v_suite == "triangularity" || v_suite == "positivity" ||
          v_suite == "specialization") {
        int max_r = v_r > 0 ? v_r : 3;
        ks::TableScanResult scan =
            ks::table_scan_suite(max_r, v_size, v_threads);
        bool ok = v_suite == "triangularity"
                      ? scan.triangularity_ok && scan.constant_term_ok
                      : (v_suite == "positivity" ? scan.positivity_ok
                                                 : scan.specialization_ok);
        std::cout << "suite " << v_suite << ": " << (ok ? "pass" : "FAIL")
                  << " (" << scan.pairs_checked << " pairs, "
                  << scan.nonzero_noncomparable
                  << " nonzero non-comparable)\n";
        if (!ok) std::cout << scan.detail;
        return ok ? 0 : 1;
      }
      if (v_suite == "words") {
        return report(ks::words_suite(v_seed, 20, 3, 6),
                      v_suite + " (seed=" + std::to_string(v_seed) + ")");
      }
      std::cerr << "unknown suite " << v_suite << "\n";
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
