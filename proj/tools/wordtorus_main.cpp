// wordtorus: count, bound, construct, search and exhaustively verify extremal
// word labelings on d-dimensional discrete tori.
//
// Exit codes: 0 success, 1 domain error (guards, divisibility, bad files),
// 2 usage error. With --json every command prints a single JSON document on
// stdout and nothing else there; documents are byte-identical across reruns
// and worker counts (timing is never included).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordtorus/constructions.hpp"
#include "wordtorus/counting.hpp"
#include "wordtorus/labeling_io.hpp"
#include "wordtorus/oracle.hpp"
#include "wordtorus/search.hpp"
#include "wordtorus/spectral.hpp"
#include "wordtorus/torus.hpp"
#include "wordtorus/verify.hpp"
#include "wordtorus/version.hpp"
#include "wordtorus/word.hpp"

namespace wt = wordtorus;
using json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::string token;
  for (char c : text + ",") {
    if (c == ',' || c == 'x' || c == 'X') {
      if (!token.empty()) {
        dims.push_back(std::stoi(token));
        token.clear();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      token.push_back(c);
    } else {
      throw CLI::ValidationError("--dims", "expected forms like 8,8 or 4x4x4");
    }
  }
  if (dims.empty()) throw CLI::ValidationError("--dims", "no sides given");
  return dims;
}

json make_report(const std::string& command) {
  json j;
  j["command"] = command;
  j["version"] = wt::kVersion;
  j["schema_version"] = wt::kJsonSchemaVersion;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> labeling_rows(const wt::TorusShape& shape,
                                       const std::string& cells) {
  const int row_len = shape.dims().back();
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < cells.size(); i += static_cast<std::size_t>(row_len)) {
    rows.push_back(cells.substr(i, static_cast<std::size_t>(row_len)));
  }
  return rows;
}

json bound_to_json(const wt::SpectralBound& b) {
  json j;
  j["pair_bound"] = b.pair_bound;
  j["word_bound"] = b.word_bound;
  j["lambda_min"] = b.lambda_min;
  j["exact_case"] = b.exact_case;
  j["sharp"] = b.sharp;
  j["equality_possible"] = b.equality_possible;
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void print_wall_time(bool json_mode, const Timer& timer) {
  if (!json_mode) {
    std::cout << "wall time: " << std::fixed << std::setprecision(3)
              << timer.seconds() << " s\n"
              << std::defaultfloat;
  }
}

// ---------------------------------------------------------------------------

int run_check_word(const std::string& word_text, bool json_mode) {
  wt::Word w(word_text);
  const wt::WordVerdict v = w.verdict();
  if (json_mode) {
    json j = make_report("check-word");
    j["word"] = w.letters();
    j["r"] = w.length();
    j["all_distinct"] = v.all_distinct;
    j["parity_ok"] = v.parity_ok;
    j["pair_ok"] = v.pair_ok;
    j["offending_pair"] =
        v.offending_pair
            ? json(std::string{v.offending_pair->first, v.offending_pair->second})
            : json(nullptr);
    j["admissible"] = v.admissible;
    emit(j);
  } else {
    std::cout << "word: " << w.letters() << " (r=" << w.length() << ")\n"
              << "all_distinct: " << (v.all_distinct ? "yes" : "no") << "\n"
              << "parity_ok:    " << (v.parity_ok ? "yes" : "no") << "\n"
              << "pair_ok:      " << (v.pair_ok ? "yes" : "no");
    if (v.offending_pair) {
      std::cout << "  (offending pair " << v.offending_pair->first
                << v.offending_pair->second << ")";
    }
    std::cout << "\nadmissible:   " << (v.admissible ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_bound(const std::string& word_text, const std::vector<int>& dims, bool sharp,
              bool json_mode) {
  wt::Word w(word_text);
  wt::TorusShape shape(dims);
  wt::SpectralBound b = wt::word_bound(w, shape, sharp);
  if (json_mode) {
    json j = make_report("bound");
    j["word"] = w.letters();
    j["dims"] = dims;
    j["r"] = w.length();
    j.update(bound_to_json(b));
    emit(j);
  } else {
    std::cout << "word " << w.letters() << " on torus";
    for (int n : dims) std::cout << " " << n;
    std::cout << "\npair bound:  " << b.pair_bound << (sharp ? " (sharp)" : "")
              << "\nword bound:  " << b.word_bound << "\nlambda_min:  " << b.lambda_min
              << "\nequality possible: " << (b.equality_possible ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int run_count(const std::string& input, const std::string& word_text, bool witnesses,
              bool by_direction, bool json_mode) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot open '" << input << "'\n";
    return 1;
  }
  wt::Labeling l = wt::read_labeling(in);
  wt::Word w(word_text);
  wt::OccurrenceCount oc = wt::count_word(l, w, by_direction);

  std::string warning;
  for (int n : l.shape().dims()) {
    if (n < w.length()) {
      warning = "some side is shorter than the word; extremal claims do not apply";
      break;
    }
  }

  if (json_mode) {
    json j = make_report("count");
    j["input"] = input;
    j["word"] = w.letters();
    j["dims"] = l.shape().dims();
    j["alphabet"] = l.alphabet();
    j["count"] = oc.word_count;
    if (!warning.empty()) j["warning"] = warning;
    if (by_direction) {
      json bd = json::array();
      const auto dirs = wt::all_directions(l.shape());
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        json e;
        e["direction"] = dirs[i].steps;
        e["count"] = (*oc.by_direction)[i];
        bd.push_back(e);
      }
      j["by_direction"] = bd;
    }
    if (witnesses) {
      json ws = json::array();
      for (const auto& occ : wt::enumerate_occurrences(l, w)) {
        json e;
        e["point"] = occ.start.coords;
        e["direction"] = occ.direction.steps;
        ws.push_back(e);
      }
      j["witnesses"] = ws;
    }
    emit(j);
  } else {
    std::cout << "count(" << w.letters() << ") = " << oc.word_count << "\n";
    if (!warning.empty()) std::cout << "warning: " << warning << "\n";
    if (by_direction) {
      const auto dirs = wt::all_directions(l.shape());
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        std::cout << "  direction (";
        for (std::size_t k = 0; k < dirs[i].steps.size(); ++k) {
          std::cout << (k ? "," : "") << dirs[i].steps[k];
        }
        std::cout << "): " << (*oc.by_direction)[i] << "\n";
      }
    }
    if (witnesses) {
      for (const auto& occ : wt::enumerate_occurrences(l, w)) {
        std::cout << "  at (";
        for (std::size_t k = 0; k < occ.start.coords.size(); ++k) {
          std::cout << (k ? "," : "") << occ.start.coords[k];
        }
        std::cout << ") direction (";
        for (std::size_t k = 0; k < occ.direction.steps.size(); ++k) {
          std::cout << (k ? "," : "") << occ.direction.steps[k];
        }
        std::cout << ")\n";
      }
    }
  }
  return 0;
}

int run_spectrum(const std::vector<int>& dims, bool check, bool json_mode) {
  wt::TorusShape shape(dims);
  wt::LambdaMin lm = wt::lambda_min(shape);
  const double lambda_max = static_cast<double>(wt::pow3(shape.dim())) - 1.0;

  json j = make_report("spectrum");
  j["dims"] = dims;
  j["lambda_max"] = lambda_max;
  j["lambda_min"] = lm.value;
  j["lambda_min_frequencies"] = lm.frequencies;
  j["exact_case"] = lm.exact_case;

  if (shape.total_points() <= 10000) {
    std::vector<double> spectrum;
    spectrum.reserve(static_cast<std::size_t>(shape.total_points()));
    std::vector<int> y(static_cast<std::size_t>(shape.dim()), 0);
    bool done = false;
    while (!done) {
      spectrum.push_back(wt::eigenvalue(y, shape));
      wt::counting_detail::increment_odometer(y, shape.dims(), done);
    }
    std::sort(spectrum.begin(), spectrum.end());
    j["eigenvalues"] = spectrum;
  }

  if (check) {
    wt::EigensystemReport er = wt::verify_eigensystem(shape);
    json c;
    c["max_eigenvector_residual"] = er.max_residual;
    c["tensor_residual"] = er.tensor_residual;
    if (shape.symmetric()) c["bk_form_max_diff"] = er.bk_form_max_diff;
    c["pass"] = er.max_residual < wt::kEigenResidualTol &&
                er.tensor_residual < wt::kEigenResidualTol;
    j["check"] = c;
  }

  if (json_mode) {
    emit(j);
  } else {
    std::cout << "lambda_max = " << lambda_max << "\nlambda_min = " << lm.value
              << " attained at " << lm.frequencies.size() << " frequencies\n"
              << "exact even-side case: " << (lm.exact_case ? "yes" : "no") << "\n";
    if (check) {
      std::cout << "max eigenvector residual: " << j["check"]["max_eigenvector_residual"]
                << "\ntensor residual: " << j["check"]["tensor_residual"] << "\n"
                << "check: " << (j["check"]["pass"].get<bool>() ? "PASS" : "FAIL")
                << "\n";
    }
  }
  if (check && !j["check"]["pass"].get<bool>()) return 1;
  return 0;
}

int run_verify(const std::vector<int>& dims, std::int64_t trials, std::uint64_t seed,
               bool json_mode) {
  wt::TorusShape shape(dims);
  wt::VerifyReport r = wt::run_identity_suite(shape, trials, seed);
  if (json_mode) {
    json j = make_report("verify");
    j["dims"] = dims;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["quadratic_identity_failures"] = r.quadratic_identity_failures;
    j["subword_violations"] = r.subword_violations;
    j["parseval_max_residual"] = r.parseval_max_residual;
    j["expansion_max_residual"] = r.expansion_max_residual;
    j["eigen_max_residual"] = r.eigen_max_residual;
    j["tensor_residual"] = r.tensor_residual;
    j["pair_bound"] = r.pair_bound;
    j["sharp_pair_bound"] = r.sharp_pair_bound;
    j["sharp_strictly_below"] = r.sharp_strictly_below;
    j["all_pass"] = r.all_pass;
    emit(j);
  } else {
    auto line = [](const std::string& name, bool ok, const std::string& detail) {
      std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << detail << ")\n";
    };
    line("quadratic-form identity",
         r.quadratic_identity_failures == 0,
         std::to_string(r.quadratic_identity_failures) + " failures in " +
             std::to_string(r.trials) + " trials, exact integers");
    line("parseval", r.parseval_max_residual < wt::kParsevalTol,
         "max residual " + std::to_string(r.parseval_max_residual));
    line("spectral expansion", r.expansion_max_residual < wt::kExpansionTol,
         "max residual " + std::to_string(r.expansion_max_residual));
    line("eigenvector residuals", r.eigen_max_residual < wt::kEigenResidualTol,
         "max residual " + std::to_string(r.eigen_max_residual));
    line("tensor factorization", r.tensor_residual < wt::kEigenResidualTol,
         "max residual " + std::to_string(r.tensor_residual));
    line("subword inequality", r.subword_violations == 0,
         std::to_string(r.subword_violations) + " violations");
    if (r.sharp_strictly_below) {
      std::cout << "note: sharp pair bound " << r.sharp_pair_bound
                << " is strictly below " << r.pair_bound << "\n";
    }
    std::cout << (r.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  }
  return r.all_pass ? 0 : 1;
}

json ps_params_to_json(const wt::PSParams& p) {
  json j;
  j["axis"] = p.axis + 1;  // 1-based in every external surface
  j["parity"] = p.parity;
  j["phases"] = p.phases;
  return j;
}

int run_construct(const std::string& word_text, const std::vector<int>& dims,
                  bool family, int axis_flag, int parity,
                  const std::string& phases_text, const std::string& out,
                  bool json_mode) {
  wt::Word w(word_text);
  wt::TorusShape shape(dims);

  if (family) {
    auto members = wt::enumerate_ps_family(w, shape);
    json manifest = make_report("construct");
    manifest["word"] = w.letters();
    manifest["dims"] = dims;
    manifest["family"] = true;
    manifest["size"] = members.size();
    json arr = json::array();
    for (std::size_t i = 0; i < members.size(); ++i) {
      json e;
      e["index"] = i;
      e.update(ps_params_to_json(members[i].params));
      e["count"] = members[i].count;
      if (!out.empty()) {
        std::ostringstream name;
        name << std::setw(3) << std::setfill('0') << i << ".torus";
        e["file"] = name.str();
      } else {
        e["rows"] = labeling_rows(shape, members[i].labeling.cell_string());
      }
      arr.push_back(e);
    }
    manifest["members"] = arr;

    if (!out.empty()) {
      std::filesystem::create_directories(out);
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::ostringstream name;
        name << out << "/" << std::setw(3) << std::setfill('0') << i << ".torus";
        std::ofstream f(name.str());
        wt::write_labeling(f, members[i].labeling);
      }
      std::ofstream mf(out + "/manifest.json");
      mf << manifest.dump(2) << "\n";
    }
    if (json_mode) {
      emit(manifest);
    } else {
      std::cout << "family of " << members.size() << " labelings";
      if (!out.empty()) std::cout << " written to " << out << "/";
      std::cout << "\n";
    }
    return 0;
  }

  const int period = 2 * w.length() - 2;
  int axis = axis_flag - 1;  // flag is 1-based
  if (axis_flag == 0) {      // default: first divisible axis
    axis = -1;
    for (int a = 0; a < shape.dim(); ++a) {
      if (dims[static_cast<std::size_t>(a)] % period == 0) {
        axis = a;
        break;
      }
    }
    if (axis < 0) {
      throw std::invalid_argument("no side is divisible by " + std::to_string(period));
    }
  }

  wt::PSParams p;
  p.axis = axis;
  p.parity = parity;
  const std::size_t classes = std::size_t{1} << (shape.dim() - 1);
  if (phases_text.empty()) {
    p.phases.assign(classes, 0);
  } else {
    std::stringstream ss(phases_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.phases.push_back(std::stoi(tok));
  }

  wt::Labeling l = wt::build_ps_word(w, shape, p);
  const std::int64_t count = wt::count_word(l, w).word_count;
  wt::SpectralBound b = wt::word_bound(w, shape, false);

  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return 1;
    }
    wt::write_labeling(f, l);
  }
  if (json_mode) {
    json j = make_report("construct");
    j["word"] = w.letters();
    j["dims"] = dims;
    j.update(ps_params_to_json(p));
    j["count"] = count;
    j["word_bound"] = b.word_bound;
    j["attains"] = wt::attains_exact_bound(count, w, shape);
    if (!out.empty()) j["file"] = out;
    j["rows"] = labeling_rows(shape, l.cell_string());
    emit(j);
  } else if (out.empty()) {
    wt::write_labeling(std::cout, l);
    std::cerr << "count = " << count << " (bound " << b.word_bound << ")\n";
  } else {
    std::cout << "wrote " << out << ", count = " << count << " (bound "
              << b.word_bound << ")\n";
  }
  return 0;
}

int run_brute(const std::string& word_text, const std::vector<int>& dims, bool pairs,
              bool constrained, bool values_only, int workers, bool json_mode,
              const Timer& timer) {
  wt::TorusShape shape(dims);

  if (pairs) {
    wt::PairScanReport r = wt::brute_force_pairs(shape, workers);
    if (json_mode) {
      json j = make_report("brute");
      j["mode"] = "pairs";
      j["dims"] = dims;
      j["scanned"] = r.scanned;
      j["max_pairs"] = r.max_pairs;
      j["maximizer_count"] = r.maximizer_count;
      json ms = json::array();
      for (std::size_t i = 0; i < r.maximizer_cells.size(); ++i) {
        json e;
        e["cells"] = labeling_rows(shape, r.maximizer_cells[i]);
        if (r.maximizer_stripes[i]) {
          json s;
          s["axis"] = r.maximizer_stripes[i]->axis + 1;
          s["parity"] = r.maximizer_stripes[i]->parity;
          e["stripe"] = s;
        } else {
          e["stripe"] = nullptr;
        }
        ms.push_back(e);
      }
      j["maximizers"] = ms;
      j["all_maximizers_are_stripes"] = r.all_maximizers_are_stripes;
      j["pair_bound"] = r.bound.value;
      j["attained"] = r.attained;
      emit(j);
    } else {
      std::cout << "max #(odd->even pairs) = " << r.max_pairs << " over " << r.scanned
                << " signings; " << r.maximizer_count << " maximizers"
                << (r.all_maximizers_are_stripes ? " (all parity stripes)" : "")
                << "\nbound " << r.bound.value
                << (r.attained ? " attained" : " not attained") << "\n";
      print_wall_time(json_mode, timer);
    }
    return 0;
  }

  wt::Word w(word_text);
  if (constrained) {
    wt::ConstrainedScanReport r = wt::constrained_extremal_scan(w, shape);
    if (json_mode) {
      json j = make_report("brute");
      j["mode"] = "constrained";
      j["word"] = r.word;
      j["dims"] = dims;
      j["alphabet"] = r.alphabet;
      j["scanned"] = r.scanned;
      j["family_max"] = r.family_max;
      j["word_bound"] = r.word_bound;
      j["attainer_count"] = r.attainer_count;
      json arr = json::array();
      for (const auto& cells : r.attainer_cells) {
        arr.push_back(labeling_rows(shape, cells));
      }
      j["attainers"] = arr;
      emit(j);
    } else {
      std::cout << "constrained census: scanned " << r.scanned << ", family max "
                << r.family_max << ", bound " << r.word_bound << ", attainers "
                << r.attainer_count << "\n";
      print_wall_time(json_mode, timer);
    }
    return 0;
  }

  wt::ExtremalReport r = wt::brute_force(w, shape, values_only, workers);
  if (json_mode) {
    json j = make_report("brute");
    j["mode"] = values_only ? "values-only" : "full-argmax";
    j["word"] = r.word;
    j["dims"] = dims;
    j["alphabet"] = r.alphabet;
    j["scanned"] = r.scanned;
    j["max_count"] = r.max_count;
    j["argmax_count"] = r.argmax_count;
    j["argmax_complete"] = r.argmax_complete;
    j["argmax_sample"] = labeling_rows(shape, r.argmax_sample);
    if (r.argmax_complete) {
      json arr = json::array();
      for (const auto& cells : r.argmax_cells) arr.push_back(labeling_rows(shape, cells));
      j["argmax"] = arr;
    }
    j["bound"] = bound_to_json(r.bound);
    j["attained"] = r.attained;
    j["all_argmax_are_ps"] =
        r.all_argmax_are_ps ? json(*r.all_argmax_are_ps) : json(nullptr);
    emit(j);
  } else {
    std::cout << "max #(" << r.word << ") = " << r.max_count << " over " << r.scanned
              << " labelings; " << r.argmax_count << " maximizers\n"
              << "bound " << r.bound.word_bound
              << (r.attained ? " attained (exact)" : " not attained");
    if (r.all_argmax_are_ps) {
      std::cout << "; all maximizers "
                << (*r.all_argmax_are_ps ? "are" : "are NOT")
                << " generalized Patchell-Spiro labelings";
    }
    std::cout << "\n";
    print_wall_time(json_mode, timer);
  }
  return 0;
}

int run_search(const std::string& word_text, const std::vector<int>& dims,
               std::uint64_t seed, int restarts, int plateau, const std::string& init,
               const std::string& out, bool json_mode) {
  wt::Word w(word_text);
  wt::TorusShape shape(dims);
  wt::SearchConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  cfg.max_plateau_moves = plateau;
  cfg.init = init == "ps-truncated" ? wt::SearchConfig::Init::kPsTruncated
                                    : wt::SearchConfig::Init::kRandom;
  wt::SearchResult r = wt::local_search(w, shape, cfg);

  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write '" << out << "'\n";
      return 1;
    }
    wt::write_labeling(f, r.best);
  }

  if (json_mode) {
    json j = make_report("search");
    j["word"] = w.letters();
    j["dims"] = dims;
    j["seed"] = seed;
    j["restarts"] = restarts;
    j["max_plateau_moves"] = plateau;
    j["init"] = init;
    j["best_count"] = r.best_count;
    j["best_restart"] = r.best_restart;
    j["bound"] = bound_to_json(r.bound);
    j["gap"] = r.gap;
    std::ostringstream hash;
    hash << "0x" << std::hex << std::setw(16) << std::setfill('0') << r.trace_hash;
    j["trace_hash"] = hash.str();
    j["restart_counts"] = r.restart_counts;
    j["best"] = labeling_rows(shape, r.best.cell_string());
    if (!out.empty()) j["file"] = out;
    emit(j);
  } else {
    std::cout << "best count " << r.best_count << " (bound " << r.bound.word_bound
              << ", gap " << r.gap << ") from restart " << r.best_restart << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"word occurrences on discrete tori: counts, spectral bounds, "
               "extremal constructions, exhaustive and local search"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string word_text, dims_text, input, out, phases_text, init = "random";
  bool json_mode = false, sharp = false, witnesses = false, by_direction = false;
  bool family = false, pairs = false, constrained = false, values_only = false;
  bool check = false;
  int workers = 1, restarts = 8, plateau = 64, axis_flag = 0, parity = 0;
  std::int64_t trials = 100;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json_mode, "emit one JSON document on stdout"); };

  CLI::App* cw = app.add_subcommand("check-word", "admissibility verdict for a word");
  cw->add_option("--word", word_text, "the word")->required();
  add_json(cw);

  CLI::App* bd = app.add_subcommand("bound", "spectral upper bound for a word");
  bd->add_option("--word", word_text)->required();
  bd->add_option("--dims", dims_text, "torus sides, e.g. 8,8 or 4x4x4")->required();
  bd->add_flag("--sharp", sharp, "use the exact spectrum minimum");
  add_json(bd);

  CLI::App* ct = app.add_subcommand("count", "count occurrences in a labeling file");
  ct->add_option("--input", input, "labeling file (torus v1 format)")->required();
  ct->add_option("--word", word_text)->required();
  ct->add_flag("--witnesses", witnesses, "list all (point, direction) witnesses");
  ct->add_flag("--by-direction", by_direction, "per-direction breakdown");
  add_json(ct);

  CLI::App* sp = app.add_subcommand("spectrum", "eigenvalue multiset and extremes");
  sp->add_option("--dims", dims_text)->required();
  sp->add_flag("--check", check, "verify eigenvectors, tensor identity");
  add_json(sp);

  CLI::App* vf = app.add_subcommand("verify", "randomized cross-module identity suite");
  vf->add_option("--dims", dims_text)->required();
  vf->add_option("--trials", trials, "random labelings to test");
  vf->add_option("--seed", seed, "RNG seed");
  add_json(vf);

  CLI::App* cs = app.add_subcommand("construct", "build striped extremal labelings");
  cs->add_option("--word", word_text)->required();
  cs->add_option("--dims", dims_text)->required();
  cs->add_flag("--family", family, "emit the whole family with a manifest");
  cs->add_option("--axis", axis_flag, "striping axis, 1-based (default: first divisible)");
  cs->add_option("--parity", parity, "parity of the odd-letter hyperplanes");
  cs->add_option("--phases", phases_text, "comma list of even per-class phases");
  cs->add_option("--out", out, "output file (or directory with --family)");
  add_json(cs);

  CLI::App* br = app.add_subcommand("brute", "exhaustive scans (guarded)");
  br->add_option("--word", word_text);
  br->add_option("--dims", dims_text)->required();
  br->add_flag("--pairs", pairs, "maximize the pair count over two-colorings");
  br->add_flag("--constrained", constrained, "parity-locus constrained census");
  br->add_flag("--values-only", values_only, "skip the argmax list");
  br->add_option("--workers", workers, "worker threads (result-invariant)");
  add_json(br);

  CLI::App* se = app.add_subcommand("search", "seeded stochastic local search");
  se->add_option("--word", word_text)->required();
  se->add_option("--dims", dims_text)->required();
  se->add_option("--seed", seed, "RNG seed");
  se->add_option("--restarts", restarts);
  se->add_option("--plateau", plateau, "sideways moves tolerated per restart");
  se->add_option("--init", init)->check(CLI::IsMember({"random", "ps-truncated"}));
  se->add_option("--out", out, "write the best labeling here");
  add_json(se);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  seed_given = vf->count("--seed") > 0 || se->count("--seed") > 0;

  Timer timer;
  try {
    if (cw->parsed()) return run_check_word(word_text, json_mode);
    if (bd->parsed()) return run_bound(word_text, parse_dims(dims_text), sharp, json_mode);
    if (ct->parsed()) return run_count(input, word_text, witnesses, by_direction, json_mode);
    if (sp->parsed()) return run_spectrum(parse_dims(dims_text), check, json_mode);
    if (vf->parsed()) {
      if (json_mode && !seed_given) {
        std::cerr << "error: --seed is required with --json so runs are reproducible\n";
        return 2;
      }
      int rc = run_verify(parse_dims(dims_text), trials, seed, json_mode);
      print_wall_time(json_mode, timer);
      return rc;
    }
    if (cs->parsed()) {
      return run_construct(word_text, parse_dims(dims_text), family, axis_flag, parity,
                           phases_text, out, json_mode);
    }
    if (br->parsed()) {
      if (!pairs && word_text.empty()) {
        std::cerr << "error: brute needs --word (or --pairs)\n";
        return 2;
      }
      int rc = run_brute(word_text, parse_dims(dims_text), pairs, constrained,
                         values_only, workers, json_mode, timer);
      return rc;
    }
    if (se->parsed()) {
      if (json_mode && !seed_given) {
        std::cerr << "error: --seed is required with --json so runs are reproducible\n";
        return 2;
      }
      int rc = run_search(word_text, parse_dims(dims_text), seed, restarts, plateau,
                          init, out, json_mode);
      print_wall_time(json_mode, timer);
      return rc;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wt::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
