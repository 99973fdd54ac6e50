// stsp: evaluate words, run verification suites, decompose unipotents.
// Exit codes: 0 all pass, 1 at least one failure, 2 configuration or parse error.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stsp/stsp.hpp"

namespace {

using nlohmann::json;
using namespace stsp;

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string ring = "z";
  int rank = 3;
  std::string ideal = "1";
  std::string gamma = "max";
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  long bound = 8;
  std::vector<std::string> lemmas;
  std::string dialect = "abs";
  std::string output = "-";
  bool text = false;
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--ring", cfg.ring, "z or zmod:<m>")->capture_default_str();
  cmd->add_option("--l", cfg.rank, "rank l >= 3")->capture_default_str()->check(CLI::Range(3, 64));
  cmd->add_option("--ideal", cfg.ideal, "comma-separated generators of I")->capture_default_str();
  cmd->add_option("--gamma", cfg.gamma, "max, min, or comma-separated generators")->capture_default_str();
  cmd->add_option("--output", cfg.output, "output path, - for stdout")->capture_default_str();
}

void add_random(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--trials", cfg.trials, "draws per family")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  cmd->add_option("--bound", cfg.bound, "draws over Z lie in [-bound, bound]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

// Writes to --output or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

json record_json(const Record& r) {
  json binding = json::object();
  for (const auto& [k, v] : r.binding) binding[k] = v;
  return json{{"suite", r.suite},
              {"entry", r.entry},
              {"binding", binding},
              {"result", to_string(r.result)},
              {"exactness", to_string(r.exactness)},
              {"note", r.note}};
}

json matrix_json(const SpMatrix& m) {
  return json{{"ring", m.ring().to_string()},
              {"l", m.rank()},
              {"entries", m.entry_strings()},
              {"gram_check", gram_check(m)}};
}

FormIdeal form_of(const RunConfig& cfg) {
  Ring ring = Ring::parse(cfg.ring);
  return parse_form_ideal(ring, cfg.ideal, cfg.gamma);
}

Report run_suite(const std::string& suite, const RunConfig& cfg) {
  const FormIdeal form = form_of(cfg);
  SuiteOptions opt{cfg.trials, cfg.seed, cfg.bound};
  if (suite == "steinberg") return verify_steinberg_relations(form.ring(), cfg.rank, opt);
  if (suite == "steinberg-exhaustive") return verify_steinberg_exhaustive(form.ring(), cfg.rank);
  if (suite == "kl") return verify_kl_relations(form, cfg.rank, opt);
  if (suite == "t") return verify_t_relations(form, cfg.rank, opt);
  if (suite == "kl-vdk") return verify_kl_for_vdk(form, cfg.rank, opt);
  if (suite == "roundtrip") return verify_vdk_round_trips(form, cfg.rank, opt);
  if (suite == "catalog") {
    if (!form.gamma_is_maximal())
      for (const auto& id : cfg.lemmas)
        for (const auto& e : identity_catalog())
          if (e.id == id && e.maximal_only)
            throw ConfigError("catalog entry '" + id + "' needs Gamma = I (got " + form.to_string() + ")");
    return verify_identity_catalog(form, cfg.rank, opt, cfg.lemmas);
  }
  if (suite == "form-ideal") {
    FormIdealReport fr = validate_form_ideal(form, cfg.trials, cfg.seed, cfg.bound);
    Report rep;
    for (const auto& v : fr.violations)
      rep.add({"form-ideal", v.axiom, {{"witness", v.witness}}, Outcome::fail, Exactness::exact, ""});
    Binding b{{"checked", std::to_string(fr.checked)},
              {"exhaustive", fr.exhaustive ? "true" : "false"},
              {"violations", std::to_string(fr.total_violations)}};
    rep.add({"form-ideal", "axioms", std::move(b), fr.valid() ? Outcome::pass : Outcome::fail, Exactness::exact,
             form.to_string()});
    return rep;
  }
  throw ConfigError("unknown suite '" + suite + "'");
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  Report rep = run_suite(suite, cfg);
  Sink sink(cfg.output);
  std::uint64_t skips = 0;
  for (const auto& r : rep.records()) {
    sink.out() << record_json(r).dump() << '\n';
    if (r.result == Outcome::skip) ++skips;
  }
  sink.out().flush();
  std::cerr << suite << ": " << rep.passes() << " pass, " << rep.failures() << " fail, " << skips << " skip\n";
  return rep.passed() ? 0 : kExitFail;
}

int cmd_eval(const std::string& text, const RunConfig& cfg) {
  const FormIdeal form = form_of(cfg);
  const Ring& ring = form.ring();
  json out;
  SpMatrix m = SpMatrix::identity(ring, cfg.rank);
  if (cfg.dialect == "abs") {
    m = eval_abs_word(parse_abs_word(ring, cfg.rank, text));
  } else if (cfg.dialect == "rel") {
    RelWord w = parse_rel_word(ring, cfg.rank, text);
    m = eval_rel_word(w);
    out["admissible"] = parameters_admissible(w, form);
  } else if (cfg.dialect == "vdk") {
    VdKWord w = parse_vdk_word(ring, cfg.rank, text);
    m = vdk_eval(w);
    out["admissible"] = vdk_parameters_admissible(w, form);
  } else {
    throw ConfigError("unknown dialect '" + cfg.dialect + "' (expected abs, rel or vdk)");
  }
  out.update(matrix_json(m));
  out["dialect"] = cfg.dialect;
  Sink sink(cfg.output);
  if (cfg.text) {
    std::string rows = m.to_string();
    if (!rows.empty() && rows.back() != '\n') rows += '\n';
    sink.out() << rows << "gram_check: " << (gram_check(m) ? "true" : "false") << '\n';
  } else {
    sink.out() << out.dump() << '\n';
  }
  return 0;
}

// A matrix as a flat or nested JSON array of scalars, or a word in the chosen dialect.
SpMatrix read_matrix(const std::string& text, const RunConfig& cfg, const FormIdeal& form) {
  const Ring& ring = form.ring();
  const std::size_t first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError("bad matrix literal", e.byte > 0 ? e.byte - 1 : 0);
    }
    std::vector<Scalar> entries;
    auto take = [&](const json& x) {
      if (x.is_number_integer()) entries.push_back(ring(x.get<long>()));
      else if (x.is_string()) entries.push_back(ring.parse_scalar(x.get<std::string>()));
      else throw ConfigError("matrix entries must be integers");
    };
    for (const auto& row : j) {
      if (row.is_array())
        for (const auto& x : row) take(x);
      else
        take(row);
    }
    const std::size_t n = 2 * static_cast<std::size_t>(cfg.rank);
    if (entries.size() != n * n)
      throw ConfigError("matrix needs " + std::to_string(n * n) + " entries for l = " + std::to_string(cfg.rank) +
                        " (got " + std::to_string(entries.size()) + ")");
    return SpMatrix::from_entries(ring, cfg.rank, entries);
  }
  if (cfg.dialect == "abs") return eval_abs_word(parse_abs_word(ring, cfg.rank, text));
  if (cfg.dialect == "rel") return eval_rel_word(parse_rel_word(ring, cfg.rank, text));
  if (cfg.dialect == "vdk") return vdk_eval(parse_vdk_word(ring, cfg.rank, text));
  throw ConfigError("unknown dialect '" + cfg.dialect + "' (expected abs, rel or vdk)");
}

int cmd_decompose(const std::string& kind, const std::string& text, int pivot, const RunConfig& cfg) {
  const FormIdeal form = form_of(cfg);
  Sink sink(cfg.output);
  json out{{"kind", kind}};
  if (kind == "unipotent") {
    if (!valid_index(pivot, cfg.rank)) throw ConfigError("--pivot must lie in +-1..+-l");
    SpMatrix m = read_matrix(text, cfg, form);
    out["pivot"] = pivot;
    try {
      UnipotentNormalForm nf = recognize_unipotent_matrix(pivot, m, form);
      json coeffs = json::object();
      for (const auto& [j, a] : nf.coeffs) coeffs[std::to_string(j)] = a.to_string();
      out["alpha"] = nf.alpha.to_string();
      out["coeffs"] = coeffs;
      out["word"] = nf.rebuild(cfg.rank).to_string();
      out["rebuild_equal"] = eval_rel_word(nf.rebuild(cfg.rank)) == m;
    } catch (const RecognitionError& e) {
      out["error"] = e.what();
      out["reason"] = e.reason() == RecognitionError::Reason::not_unipotent ? "not_unipotent" : "membership";
      sink.out() << out.dump() << '\n';
      return kExitFail;
    }
  } else if (kind == "vdk") {
    VdKWord w = parse_vdk_word(form.ring(), cfg.rank, text);
    if (w.size() != 1) throw ConfigError("decompose vdk takes exactly one generator");
    VdKWord factors = vdk_unipotent_decompose(w.gens().front());
    std::vector<std::string> listed;
    for (const auto& g : factors.gens()) listed.push_back(g.to_string());
    out["factors"] = listed;
    out["admissible"] = vdk_parameters_admissible(factors, form);
    out["rebuild_equal"] = vdk_eval(factors) == vdk_eval(w);
  } else {
    throw ConfigError("unknown decomposition '" + kind + "' (expected unipotent or vdk)");
  }
  sink.out() << out.dump() << '\n';
  return out["rebuild_equal"].get<bool>() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symplectic Steinberg words, relative generators and van der Kallen presentations"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string word;
  auto* eval = app.add_subcommand("eval", "Print the image matrix of a word");
  add_common(eval, cfg);
  eval->add_option("--dialect", cfg.dialect, "abs, rel or vdk")->capture_default_str();
  eval->add_flag("--text", cfg.text, "print rows instead of JSON");
  eval->add_option("word", word, "word text; empty is the identity");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and stream JSONL records");
  add_common(verify, cfg);
  add_random(verify, cfg);
  verify->add_option("suite", suite, "steinberg, steinberg-exhaustive, kl, catalog, t, kl-vdk, roundtrip, form-ideal")
      ->required();
  verify->add_option("--lemma", cfg.lemmas, "catalog entry ids (repeatable)");

  std::string kind, input;
  int pivot = 1;
  auto* decompose = app.add_subcommand("decompose", "Unipotent normal form or vdK factor listing");
  add_common(decompose, cfg);
  decompose->add_option("--dialect", cfg.dialect, "dialect for word input")->capture_default_str();
  decompose->add_option("--pivot", pivot, "pivot index i of U_i")->capture_default_str();
  decompose->add_option("kind", kind, "unipotent or vdk")->required();
  decompose->add_option("input", input, "matrix literal, word, or vdK generator")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*eval) return cmd_eval(word, cfg);
    if (*verify) return cmd_verify(suite, cfg);
    return cmd_decompose(kind, input, pivot, cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
  } catch (const RingMismatch& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
  }
  return kExitConfig;
}
