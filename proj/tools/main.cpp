// upmorph command line: analyze, apply, decode, generate, period, witness,
// falsify. JSON on stdout, diagnostics on stderr. Exit codes: 0 success,
// 1 usage error, 2 negative domain outcome (no decode, candidate refuted,
// no fit, insufficient evidence), 3 internal invariant violation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "upmorph/algebra.hpp"
#include "upmorph/errors.hpp"
#include "upmorph/morphism.hpp"
#include "upmorph/periodicity.hpp"
#include "upmorph/stream.hpp"
#include "upmorph/witness.hpp"
#include "upmorph/word.hpp"

namespace {

using json = nlohmann::json;
using namespace upmorph;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;
constexpr int kInternal = 3;

struct UsageFailure {
  std::string message;
};

void emit(const json& j, bool pretty) {
  if (!pretty) {
    std::cout << j.dump() << "\n";
    return;
  }
  // Two-column table for flat objects; nested values stay compact JSON.
  std::size_t width = 0;
  for (const auto& item : j.items()) width = std::max(width, item.key().size());
  for (const auto& item : j.items()) {
    std::cout << item.key() << std::string(width - item.key().size() + 2, ' ')
              << (item.value().is_string() ? item.value().get<std::string>()
                                           : item.value().dump())
              << "\n";
  }
}

bool is_printable_ascii(const std::string& s) {
  for (unsigned char c : s) {
    if (c < 0x20 || c > 0x7E) return false;
  }
  return true;
}

std::string read_file(const std::string& path, const char* flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageFailure{std::string(flag) + ": cannot read file '" + path +
                       "'"};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

BinaryMorphism load_morphism(const std::string& path) {
  const std::string text = read_file(path, "--morphism");
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageFailure{std::string("--morphism: malformed JSON in '") + path +
                       "': " + e.what()};
  }
  if (!spec.is_object() || spec.size() != 2 || !spec.contains("0") ||
      !spec.contains("1") || !spec["0"].is_string() ||
      !spec["1"].is_string()) {
    throw UsageFailure{
        "--morphism: spec must be an object with exactly the string keys "
        "\"0\" and \"1\""};
  }
  BinaryMorphism h{spec["0"].get<std::string>(), spec["1"].get<std::string>()};
  if (!is_printable_ascii(h.image0) || !is_printable_ascii(h.image1)) {
    throw UsageFailure{"--morphism: image values must be printable ASCII"};
  }
  return h;
}

WordStream parse_generator(const std::string& spec) {
  try {
    if (auto named = named_stream(spec)) return *named;
    if (spec.starts_with("up:")) {
      const std::string rest = spec.substr(3);
      const std::size_t colon = rest.find(':');
      if (colon == std::string::npos) {
        throw UsageFailure{
            "--generator: expected up:PREPERIOD:PERIOD (the preperiod may "
            "be empty)"};
      }
      return WordStream::ultimately_periodic(rest.substr(0, colon),
                                             rest.substr(colon + 1));
    }
    if (spec.starts_with("morphic:")) {
      const std::string rest = spec.substr(8);
      const std::size_t colon = rest.rfind(':');
      if (colon == std::string::npos || colon + 2 != rest.size()) {
        throw UsageFailure{
            "--generator: expected morphic:FILE:SEED with a single-character "
            "seed"};
      }
      const std::string path = rest.substr(0, colon);
      const char seed = rest[colon + 1];
      json rules_json;
      try {
        rules_json = json::parse(read_file(path, "--generator"));
      } catch (const json::parse_error& e) {
        throw UsageFailure{std::string("--generator: malformed JSON in '") +
                           path + "': " + e.what()};
      }
      if (!rules_json.is_object()) {
        throw UsageFailure{
            "--generator: substitution spec must be an object mapping "
            "single-character symbols to strings"};
      }
      Substitution rules;
      for (const auto& item : rules_json.items()) {
        if (item.key().size() != 1 || !item.value().is_string() ||
            !is_printable_ascii(item.value().get<std::string>())) {
          throw UsageFailure{
              "--generator: substitution keys must be single characters and "
              "values printable ASCII strings"};
        }
        rules.rules[item.key()[0]] = item.value().get<std::string>();
      }
      return WordStream::morphic(std::move(rules), seed);
    }
    throw UsageFailure{"--generator: unknown generator '" + spec +
                       "' (expected thue-morse, fibonacci, up:Y:Z or "
                       "morphic:FILE:SEED)"};
  } catch (const DomainError& e) {
    throw UsageFailure{std::string("--generator: ") + e.what()};
  }
}

// One word-valued argument fed by exactly one of --input / --input-file /
// --generator (the latter needs -n).
struct WordSource {
  std::string inline_word;
  std::string file;
  std::string generator;
  std::uint64_t length = 0;

  CLI::Option* inline_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* generator_opt = nullptr;
  CLI::Option* length_opt = nullptr;

  void attach(CLI::App& cmd, bool with_generator = true) {
    inline_opt = cmd.add_option("--input", inline_word, "Word given inline");
    file_opt = cmd.add_option("--input-file", file,
                              "Word read from a file (one trailing newline "
                              "is ignored)");
    if (with_generator) {
      generator_opt =
          cmd.add_option("--generator", generator,
                         "Word taken from a generator: thue-morse, "
                         "fibonacci, up:Y:Z or morphic:FILE:SEED");
      length_opt = cmd.add_option("-n,--length", length,
                                  "Symbols to draw from the generator");
    }
  }

  Word resolve() const {
    const int sources = (inline_opt->count() > 0) + (file_opt->count() > 0) +
                        (generator_opt && generator_opt->count() > 0);
    if (sources != 1) {
      throw UsageFailure{
          "exactly one of --input, --input-file or --generator must be "
          "given"};
    }
    if (inline_opt->count() > 0) return inline_word;
    if (file_opt->count() > 0) {
      std::string text = read_file(file, "--input-file");
      if (text.ends_with("\n")) text.pop_back();
      if (text.ends_with("\r")) text.pop_back();
      return text;
    }
    if (length_opt->count() == 0) {
      throw UsageFailure{"--generator needs -n/--length"};
    }
    return parse_generator(generator).prefix(length);
  }
};

json root_json(const std::optional<RootDecomposition>& r) {
  if (!r) return nullptr;
  return json{{"root", r->root}, {"exponent", r->exponent}};
}

json fit_json(const UPDecomposition& d, std::size_t full_periods) {
  const UPDecomposition canonical = canonicalize_up(d);
  return json{{"preperiod", d.preperiod},
              {"period", d.period},
              {"full_periods", full_periods},
              {"canonical",
               {{"preperiod", canonical.preperiod},
                {"period", canonical.period}}}};
}

json trial_json(const FalsifyTrial& trial) {
  json j{{"trial", trial.index},
         {"arm", trial.control ? "control" : "noncommuting"},
         {"stream", trial.stream},
         {"image0", trial.morphism.image0},
         {"image1", trial.morphism.image1},
         {"as_predicted", trial.as_predicted}};
  if (trial.fit) {
    j["fit"] = {{"preperiod", trial.fit->preperiod},
                {"period", trial.fit->period}};
    j["canonical_fit"] = {{"preperiod", trial.canonical_fit->preperiod},
                          {"period", trial.canonical_fit->period}};
  } else {
    j["fit"] = nullptr;
  }
  if (trial.control) {
    j["root"] = trial.control_root;
    j["root_match"] = trial.root_match;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Binary morphisms, unique decoding, and ultimately periodic words"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");

  // analyze
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Classify a morphism: commutation, "
                                    "injectivity, primitive roots");
  std::string analyze_morphism;
  analyze_cmd->add_option("--morphism", analyze_morphism, "Morphism JSON file")
      ->required();

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "Apply a morphism to a word");
  std::string apply_morphism;
  apply_cmd->add_option("--morphism", apply_morphism, "Morphism JSON file")
      ->required();
  WordSource apply_source;
  apply_source.attach(*apply_cmd);

  // decode
  auto* decode_cmd = app.add_subcommand(
      "decode", "Recover the unique preimage under a non-commuting morphism");
  std::string decode_morphism;
  decode_cmd->add_option("--morphism", decode_morphism, "Morphism JSON file")
      ->required();
  WordSource decode_source;
  decode_source.attach(*decode_cmd);

  // generate
  auto* generate_cmd =
      app.add_subcommand("generate", "Emit a prefix of a generated word");
  std::string generate_generator;
  generate_cmd
      ->add_option("--generator", generate_generator,
                   "thue-morse, fibonacci, up:Y:Z or morphic:FILE:SEED")
      ->required();
  std::uint64_t generate_length = 0;
  generate_cmd->add_option("-n,--length", generate_length, "Symbols to emit")
      ->required();

  // period
  auto* period_cmd = app.add_subcommand(
      "period", "Search the minimal ultimately periodic fit of a word");
  WordSource period_source;
  period_source.attach(*period_cmd);
  std::uint64_t period_max_preperiod = 64;
  std::uint64_t period_max_period = 128;
  std::uint64_t period_min_reps = 3;
  period_cmd->add_option("--max-preperiod", period_max_preperiod,
                         "Largest preperiod length tried");
  period_cmd->add_option("--max-period", period_max_period,
                         "Largest period length tried");
  period_cmd->add_option("--min-reps", period_min_reps,
                         "Full period repetitions a fit must show");

  // witness
  auto* witness_cmd = app.add_subcommand(
      "witness",
      "Extract the phase trace of a morphism over a word against a "
      "candidate decomposition and classify it");
  std::string witness_morphism;
  witness_cmd->add_option("--morphism", witness_morphism, "Morphism JSON file")
      ->required();
  WordSource witness_source;
  witness_source.attach(*witness_cmd);
  std::string witness_preperiod;
  std::string witness_period;
  witness_cmd->add_option("--preperiod", witness_preperiod,
                          "Candidate preperiod of the image (default empty)");
  witness_cmd->add_option("--period", witness_period,
                          "Candidate period of the image")
      ->required();

  // falsify
  auto* falsify_cmd = app.add_subcommand(
      "falsify",
      "Random trials: non-commuting morphisms on aperiodic words should "
      "admit no periodic fit; commuting controls always should");
  FalsifyConfig falsify_config;
  falsify_cmd->add_option("--trials", falsify_config.trials, "Trials per arm")
      ->required();
  falsify_cmd
      ->add_option("--seed", falsify_config.seed,
                   "Seed driving every random choice")
      ->required();
  falsify_cmd->add_option("--prefix-length", falsify_config.prefix_length,
                          "Symbols examined per trial");
  falsify_cmd->add_option("--alphabet", falsify_config.alphabet_size,
                          "Image alphabet size (letters from 'a')");
  falsify_cmd->add_option("--max-image-len", falsify_config.max_image_length,
                          "Largest image length sampled");
  falsify_cmd->add_option("--max-preperiod", falsify_config.max_preperiod,
                          "search bound: largest preperiod");
  falsify_cmd->add_option("--max-period", falsify_config.max_period,
                          "search bound: largest period");

  // Let --pretty appear after the subcommand too.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*analyze_cmd) {
      const MorphismReport report = classify(load_morphism(analyze_morphism));
      json j{{"commuting", report.commuting},
             {"injective", report.injective},
             {"root0", root_json(report.root0)},
             {"root1", root_json(report.root1)},
             {"shared_root", report.shared_root ? json(*report.shared_root)
                                                : json(nullptr)}};
      emit(j, pretty);
      return kOk;
    }

    if (*apply_cmd) {
      const BinaryMorphism h = load_morphism(apply_morphism);
      emit(json{{"image", h.apply(apply_source.resolve())}}, pretty);
      return kOk;
    }

    if (*decode_cmd) {
      const BinaryMorphism h = load_morphism(decode_morphism);
      const Word s = decode_source.resolve();
      try {
        emit(json{{"preimage", decode(h, s)}}, pretty);
        return kOk;
      } catch (const NoDecodeError& e) {
        emit(json{{"error", "no_decode"}, {"position", e.position()}}, pretty);
        return kNegative;
      }
    }

    if (*generate_cmd) {
      const Word word =
          parse_generator(generate_generator).prefix(generate_length);
      emit(json{{"word", word}}, pretty);
      return kOk;
    }

    if (*period_cmd) {
      const Word s = period_source.resolve();
      const auto fit = search_min_up(s, period_max_preperiod,
                                     period_max_period, period_min_reps);
      if (!fit) {
        emit(json{{"fit", nullptr}}, pretty);
        return kNegative;
      }
      emit(json{{"fit", fit_json(*fit, check_up_fit(s, *fit)
                                           .full_periods_observed)}},
           pretty);
      return kOk;
    }

    if (*witness_cmd) {
      const BinaryMorphism h = load_morphism(witness_morphism);
      std::uint64_t n = witness_source.length;
      std::optional<WordStream> stream;
      if (witness_source.generator_opt->count() > 0) {
        if (witness_source.inline_opt->count() > 0 ||
            witness_source.file_opt->count() > 0) {
          throw UsageFailure{
              "exactly one of --input, --input-file or --generator must be "
              "given"};
        }
        if (witness_source.length_opt->count() == 0) {
          throw UsageFailure{"--generator needs -n/--length"};
        }
        stream = parse_generator(witness_source.generator);
      } else {
        const Word word = witness_source.resolve();
        if (witness_source.length_opt->count() == 0) n = word.size();
        stream = WordStream::explicit_word(word);
      }
      const UPDecomposition d{witness_preperiod, witness_period};
      try {
        const ExtractResult result = extract_phases(h, *stream, d, n);
        if (const auto* refuted = std::get_if<CandidateRefuted>(&result)) {
          emit(json{{"refuted",
                     {{"image_mismatch_index", refuted->image_mismatch_index}}}},
               pretty);
          return kNegative;
        }
        const PhaseTrace& t = std::get<PhaseTrace>(result);
        json blocks = json::array();
        for (const TraceBlock& step : t.blocks) {
          blocks.push_back(
              {{"block", step.block}, {"period_reps", step.period_reps}});
        }
        json j{{"trace",
                {{"anchor", t.anchor},
                 {"z1", t.z1},
                 {"z2", t.z2},
                 {"hit_count", t.hit_count},
                 {"blocks", blocks}}}};
        const TraceVerdict verdict = classify_trace(h, t);
        if (const auto* p = std::get_if<PeriodicityEvidence>(&verdict)) {
          const UPDecomposition canonical =
              canonicalize_up({p->preperiod, p->period});
          j["verdict"] = {{"kind", "periodicity_evidence"},
                          {"preperiod", p->preperiod},
                          {"period", p->period},
                          {"canonical",
                           {{"preperiod", canonical.preperiod},
                            {"period", canonical.period}}}};
        } else {
          const auto& witness = std::get<CommutationWitness>(verdict);
          j["verdict"] = {{"kind", "commutation_witness"},
                          {"block_index", witness.block_index},
                          {"block", witness.block},
                          {"next_block", witness.next_block},
                          {"image", witness.image}};
        }
        emit(j, pretty);
        return kOk;
      } catch (const InsufficientEvidenceError& e) {
        emit(json{{"error", "insufficient_evidence"}, {"hits", e.hits()}},
             pretty);
        return kNegative;
      }
    }

    if (*falsify_cmd) {
      const FalsifyReport report = falsify(falsify_config);
      const json summary{
          {"summary",
           {{"trials", report.summary.trials},
            {"noncommuting_fits", report.summary.noncommuting_fits},
            {"control_fits", report.summary.control_fits},
            {"control_root_matches", report.summary.control_root_matches},
            {"seed", report.summary.seed}}}};
      if (pretty) {
        emit(summary["summary"], true);
        return kOk;
      }
      for (const FalsifyTrial& trial : report.trials) {
        std::cout << trial_json(trial).dump() << "\n";
      }
      std::cout << summary.dump() << "\n";
      return kOk;
    }
  } catch (const UsageFailure& failure) {
    std::cerr << "error: " << failure.message << "\n";
    return kUsage;
  } catch (const InvariantViolationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StreamExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
