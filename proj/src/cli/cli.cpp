#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "jh/error.hpp"
#include "jh/invariants.hpp"
#include "jh/lattice.hpp"
#include "jh/projections.hpp"
#include "jh/search.hpp"
#include "jh/weighted.hpp"
#include "render.hpp"

namespace jh::cli {

namespace {

std::string ratio_list(const std::vector<Rational>& rs) {
  std::string s;
  for (std::size_t i = 0; i < rs.size(); ++i) s += (i ? "," : "") + rs[i].to_string();
  return s;
}

std::string number_list(std::span<const Natural> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s;
}

std::vector<Natural> parse_natural_list(const std::string& text) {
  std::vector<Natural> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ':') {
      if (i == start) throw ParseError("malformed list '" + text + "'");
      out.push_back(parse_natural(std::string_view(text).substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Natural positive(const std::string& text, const char* what) {
  const Natural n = parse_natural(text);
  if (n == 0) throw ParseError(std::string(what) + " must be positive");
  return n;
}

Scale parse_scale(const std::string& text) {
  try {
    const Chord c = parse_integer_chord(text);
    return Scale(std::vector<Natural>(c.notes().begin(), c.notes().end()));
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

// ---- analyze -------------------------------------------------------------

Document analyze_doc(const std::string& chord_text, const std::string& weights_text) {
  const Chord c = parse_integer_chord(chord_text);
  const InvariantReport r = analyze(c);
  Document doc{"analyze"};
  doc.inputs["chord"] = chord_text;
  doc.inputs["weights"] = weights_text.empty() ? nlohmann::json(nullptr) : nlohmann::json(weights_text);

  Section s{"invariants", {}, {}, true};
  std::vector<Cell> row;
  auto put = [&](const char* name, Cell cell) {
    s.columns.push_back(name);
    row.push_back(std::move(cell));
  };
  put("chord", Cell::of(render(c)));
  put("N", Cell::of(static_cast<Natural>(r.n)));
  put("GCD", Cell::of(r.gcd));
  put("LCM", Cell::of(r.lcm));
  put("CY", Cell::of(r.cy));
  put("CY2", Cell::of(cy_at_prime(c, 2)));
  put("OCY", Cell::of(odd_complexity(c)));
  put("CY3", Cell::of(cy_at_prime(c, 3)));
  put("BPCY", Cell::of(bp_complexity(c)));
  put("ESF", Cell::of(r.esf));
  put("LGCD", Cell::of(r.lgcd));
  put("LLCM", Cell::of(r.llcm));
  put("LCY", Cell::of(r.lcy));
  put("LM", Cell::of(r.lm));
  put("OTC", Cell::of(r.otc));
  put("UTC", Cell::of(r.utc));
  put("SPC", Cell::of(r.spc));
  put("SK", Cell::of(r.sk));
  if (r.ratios) {
    put("Ratios", Cell::of(ratio_list(r.ratios->ratios)));
    put("MNR", Cell::of(r.ratios->min_ratio.to_string()));
    put("MNR_cents", Cell::cents(cents(r.ratios->min_ratio)));
    put("MXR", Cell::of(r.ratios->max_ratio.to_string()));
    put("MXR_cents", Cell::cents(cents(r.ratios->max_ratio)));
    put("TR", Cell::of(r.ratios->total_ratio.to_string()));
    put("TR_cents", Cell::cents(cents(r.ratios->total_ratio)));
    put("LMNR", Cell::of(r.ratios->log_min_ratio));
    put("LMXR", Cell::of(r.ratios->log_max_ratio));
    put("LTR", Cell::of(r.ratios->log_total_ratio));
  } else {
    for (const char* name : {"Ratios", "MNR", "MNR_cents", "MXR", "MXR_cents", "TR", "TR_cents", "LMNR", "LMXR",
                             "LTR"}) {
      put(name, Cell::null());
    }
  }
  put("MNRC", Cell::of(r.coeffs.min_ratio_coeff));
  put("MXRC", Cell::of(r.coeffs.max_ratio_coeff));
  put("TRC", Cell::of(r.coeffs.total_ratio_coeff));

  if (!weights_text.empty()) {
    const WeightedChord wc(c, parse_real_list(weights_text));
    std::string shown;
    for (std::size_t i = 0; i < wc.size(); ++i) {
      std::ostringstream os;
      os << wc.weights()[i];
      shown += (i ? "," : "") + os.str();
    }
    put("weights", Cell::of(shown));
    put("SWT", Cell::of(sum_weight(wc)));
    put("WLM", Cell::of(weighted_log_midpoint(wc)));
    std::optional<double> wotc;
    if (r.cy > 1) wotc = weighted_otonality(wc);
    put("WOTC", Cell::of(wotc));
    put("WUTC", Cell::of(wotc ? std::optional<double>(-*wotc) : std::nullopt));
  }
  s.add(std::move(row));
  doc.sections.push_back(std::move(s));
  return doc;
}

// ---- project -------------------------------------------------------------

Document project_doc(const std::string& chord_text, const std::string& primes_text) {
  const Chord c = parse_integer_chord(chord_text);
  const PrimeSet p = PrimeSet::parse(primes_text);
  const auto summary = project_summary(c, p);
  Document doc{"project"};
  doc.inputs["chord"] = chord_text;
  doc.inputs["primes"] = primes_text;
  Section s{"projection", {"chord", "primes", "projected", "GCD_P", "LCM_P", "CY_P"}, {}, true};
  s.add({Cell::of(render(c)), Cell::of(p.describe()), Cell::of(render(summary.projected.values)),
         Cell::of(summary.gcd), Cell::of(summary.lcm), Cell::of(summary.cy)});
  doc.sections.push_back(std::move(s));
  return doc;
}

// ---- lattice -------------------------------------------------------------

Document lattice_doc(const std::string& modulus_text, const std::string& highlight_text, OutputFormat format) {
  if (format != OutputFormat::kDot && format != OutputFormat::kJson) {
    throw ParseError("lattice output must be dot or json");
  }
  const DivisorLattice l = complexity_space(positive(modulus_text, "lattice modulus"));
  std::vector<Natural> highlight;
  if (!highlight_text.empty()) highlight = embed_chord(l, parse_integer_chord(highlight_text));
  Document doc{"lattice"};
  doc.inputs["modulus"] = modulus_text;
  doc.inputs["highlight"] = highlight_text.empty() ? nlohmann::json(nullptr) : nlohmann::json(highlight_text);
  if (format == OutputFormat::kDot) {
    doc.raw_text = export_lattice(l, highlight, LatticeFormat::kDot);
  } else {
    doc.raw_results = nlohmann::json::parse(export_lattice(l, highlight, LatticeFormat::kJson));
  }
  return doc;
}

// ---- scale ---------------------------------------------------------------

void add_record_section(Document& doc, const Scale& input, const ScaleRecord& rec) {
  Section s{"record",
            {"scale", "N", "canonical", "OCY", "CY_per_reordering", "mCY", "MinRatio", "MinRatio_cents", "MaxRatio",
             "MaxRatio_cents"},
            {},
            true};
  s.add({Cell::of(render(input.notes())), Cell::of(static_cast<Natural>(input.pitch_classes())),
         Cell::of(render(rec.scale.notes())), Cell::of(rec.ocy), Cell::of(number_list(rec.cy_per_reordering)),
         Cell::of(rec.mcy), Cell::of(rec.min_ratio.to_string()), Cell::cents(cents(rec.min_ratio)),
         Cell::of(rec.max_ratio.to_string()), Cell::cents(cents(rec.max_ratio))});
  doc.sections.push_back(std::move(s));
}

Document scale_from_odds_doc(const std::string& odds_text) {
  std::vector<Natural> odds;
  try {
    odds = parse_natural_list(odds_text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  const Scale s = scale_from_odds(odds);
  Document doc{"scale from-odds"};
  doc.inputs["odds"] = odds_text;
  add_record_section(doc, s, scale_record(s));
  doc.sections.front().columns.insert(doc.sections.front().columns.begin() + 2, "CY");
  doc.sections.front().rows.front().insert(doc.sections.front().rows.front().begin() + 2,
                                           Cell::of(complexity(s.chord())));
  return doc;
}

Document scale_reorder_doc(const std::string& scale_text) {
  const Scale s = parse_scale(scale_text);
  Document doc{"scale reorder"};
  doc.inputs["scale"] = scale_text;
  Section sec{"reorderings", {"index", "scale", "CY", "OCY"}, {}, false};
  const auto all = all_reorderings(s);
  for (std::size_t i = 0; i < all.size(); ++i) {
    sec.add({Cell::of(static_cast<Natural>(i)), Cell::of(render(all[i].notes())),
             Cell::of(complexity(all[i].chord())), Cell::of(odd_complexity(all[i].chord()))});
  }
  doc.sections.push_back(std::move(sec));
  return doc;
}

Document scale_record_doc(const std::string& scale_text) {
  const Scale s = parse_scale(scale_text);
  Document doc{"scale record"};
  doc.inputs["scale"] = scale_text;
  add_record_section(doc, s, scale_record(s));
  return doc;
}

Document scale_split_plan_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read plan file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const Chord c = stitch_splits(parse_split_plan(buf.str()));
  Document doc{"scale split-plan"};
  doc.inputs["plan"] = path;
  const auto stats = ratio_stats(c);
  Section s{"stitched", {"scale", "N", "CY", "OCY", "Ratios", "MinRatio", "MinRatio_cents", "MaxRatio", "MaxRatio_cents"},
            {}, true};
  std::vector<Cell> row{Cell::of(render(c)), Cell::of(static_cast<Natural>(c.size())), Cell::of(complexity(c)),
                        Cell::of(odd_complexity(c))};
  if (stats) {
    row.insert(row.end(), {Cell::of(ratio_list(stats->ratios)), Cell::of(stats->min_ratio.to_string()),
                           Cell::cents(cents(stats->min_ratio)), Cell::of(stats->max_ratio.to_string()),
                           Cell::cents(cents(stats->max_ratio))});
  } else {
    row.resize(s.columns.size());
  }
  s.add(std::move(row));
  doc.sections.push_back(std::move(s));
  return doc;
}

// ---- search --------------------------------------------------------------

struct ScalesOptions {
  std::size_t n = 5;
  std::string ocy_limit = "500";
  std::string mcy_limit = "2000";
  std::optional<double> min_cents;
  std::optional<double> max_cents;
  std::optional<std::size_t> cap;
  std::optional<long long> budget_ms;
  bool no_prune = false;
};

Execution execution_for(int threads, bool serial) {
  if (serial) return Execution::serial();
  if (threads < 0) throw ParseError("--threads must be nonnegative");
  return Execution::with_threads(threads);
}

Document search_scales_doc(const ScalesOptions& o, Execution exec) {
  SearchQuery q;
  q.n = o.n;
  q.ocy_limit = positive(o.ocy_limit, "--ocy-limit");
  q.mcy_limit = positive(o.mcy_limit, "--mcy-limit");
  q.min_ratio_floor_cents = o.min_cents;
  q.max_ratio_ceiling_cents = o.max_cents;
  q.result_cap = o.cap;
  if (o.budget_ms) {
    if (*o.budget_ms < 0) throw ParseError("--time-budget must be nonnegative");
    q.time_budget = std::chrono::milliseconds(*o.budget_ms);
  }
  q.prune = !o.no_prune;
  q.validate();
  const SearchResult r = search_scales(q, exec);

  Document doc{"search scales"};
  doc.inputs = {{"n", o.n},
                {"ocy_limit", o.ocy_limit},
                {"mcy_limit", o.mcy_limit},
                {"min_ratio_cents", o.min_cents ? nlohmann::json(*o.min_cents) : nlohmann::json(nullptr)},
                {"max_ratio_cents", o.max_cents ? nlohmann::json(*o.max_cents) : nlohmann::json(nullptr)},
                {"cap", o.cap ? nlohmann::json(*o.cap) : nlohmann::json(nullptr)},
                {"time_budget_ms", o.budget_ms ? nlohmann::json(*o.budget_ms) : nlohmann::json(nullptr)},
                {"prune", q.prune}};
  Section s{"scales",
            {"scale", "N", "OCY", "mCY", "CY_per_reordering", "MinRatio", "MinRatio_cents", "MaxRatio",
             "MaxRatio_cents"},
            {},
            false};
  for (const auto& rec : r.records) {
    s.add({Cell::of(render(rec.scale.notes())), Cell::of(static_cast<Natural>(rec.scale.pitch_classes())),
           Cell::of(rec.ocy), Cell::of(rec.mcy), Cell::of(number_list(rec.cy_per_reordering)),
           Cell::of(rec.min_ratio.to_string()), Cell::cents(cents(rec.min_ratio)), Cell::of(rec.max_ratio.to_string()),
           Cell::cents(cents(rec.max_ratio))});
  }
  doc.sections.push_back(std::move(s));
  doc.notes = r.diagnostics;
  if (r.budget_exhausted) doc.notes.push_back("time budget exhausted; results are incomplete");
  if (r.truncated) doc.notes.push_back("result cap reached; later records were dropped");
  return doc;
}

Document search_triads_doc(const std::string& max_2k, std::optional<double> lo, std::optional<double> hi,
                           std::optional<std::size_t> limit, Execution exec) {
  std::optional<CentsWindow> window;
  if (lo || hi) {
    window = CentsWindow{lo.value_or(-std::numeric_limits<double>::infinity()),
                         hi.value_or(std::numeric_limits<double>::infinity())};
  }
  auto rows = search_triads_on_fifth(positive(max_2k, "--max-2k"), window, exec);
  if (limit && rows.size() > *limit) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(*limit), rows.end());
  Document doc{"search triads"};
  doc.inputs = {{"max_2k", max_2k},
                {"ratio1_min_cents", lo ? nlohmann::json(*lo) : nlohmann::json(nullptr)},
                {"ratio1_max_cents", hi ? nlohmann::json(*hi) : nlohmann::json(nullptr)},
                {"limit", limit ? nlohmann::json(*limit) : nlohmann::json(nullptr)}};
  Section s{"triads", {"2k", "m", "3k", "CY", "OTC", "Ratio1", "Ratio2", "Ratio1_cents"}, {}, false};
  for (const auto& r : rows) {
    s.add({Cell::of(r.chord[0]), Cell::of(r.chord[1]), Cell::of(r.chord[2]), Cell::of(r.cy), Cell::of(r.otc),
           Cell::of(r.ratio1.to_string()), Cell::of(r.ratio2.to_string()), Cell::cents(r.ratio1_cents)});
  }
  doc.sections.push_back(std::move(s));
  return doc;
}

Document search_quads_doc(const std::string& max_k, double floor_cents, std::optional<std::size_t> limit,
                          Execution exec) {
  auto rows = search_quads_on_octave(positive(max_k, "--max-k"), floor_cents, exec);
  if (limit && rows.size() > *limit) rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(*limit), rows.end());
  Document doc{"search quads"};
  doc.inputs = {{"max_k", max_k},
                {"min_ratio_cents", floor_cents},
                {"limit", limit ? nlohmann::json(*limit) : nlohmann::json(nullptr)}};
  Section s{"quads", {"k", "m", "n", "2k", "CY", "OCY", "BPCY", "MinRatio", "MinRatio_cents"}, {}, false};
  for (const auto& r : rows) {
    s.add({Cell::of(r.chord[0]), Cell::of(r.chord[1]), Cell::of(r.chord[2]), Cell::of(r.chord[3]), Cell::of(r.cy),
           Cell::of(r.ocy), Cell::of(r.bpcy), Cell::of(r.min_ratio.to_string()), Cell::cents(r.min_ratio_cents)});
  }
  doc.sections.push_back(std::move(s));
  return doc;
}

std::pair<Natural, Natural> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Natural v = parse_natural(text);
    return {v, v};
  }
  const Natural lo = parse_natural(std::string_view(text).substr(0, dots));
  const Natural hi = parse_natural(std::string_view(text).substr(dots + 2));
  if (lo == 0 || lo > hi) throw ParseError("range '" + text + "' must be low..high with 0 < low <= high");
  return {lo, hi};
}

Document search_pentatonic_doc(const std::string& k1_text, std::size_t pitch_classes, std::size_t cy_count,
                               bool all_rows, Execution exec) {
  const auto [lo, hi] = parse_range(k1_text);
  const auto rows = search_pentatonic_bruteforce(lo, hi, pitch_classes, exec);
  const auto shown = all_rows ? rows : first_row_per_cy(rows, cy_count);
  Document doc{"search pentatonic"};
  doc.inputs = {{"k1", k1_text}, {"pitch_classes", pitch_classes}, {"cy_count", cy_count}, {"all", all_rows}};
  Section s{"scales", {}, {}, false};
  for (std::size_t i = 1; i <= pitch_classes; ++i) s.columns.push_back("k" + std::to_string(i));
  s.columns.insert(s.columns.end(), {"2k1", "CY", "OCY", "MinRatio", "MinRatio_cents", "canonical"});
  for (const auto& r : shown) {
    std::vector<Cell> row;
    for (Natural v : r.scale.notes()) row.push_back(Cell::of(v));
    row.insert(row.end(), {Cell::of(r.cy), Cell::of(r.ocy), Cell::of(r.min_ratio.to_string()),
                           Cell::cents(r.min_ratio_cents), Cell::of(render(r.canonical.notes()))});
    s.add(std::move(row));
  }
  doc.sections.push_back(std::move(s));
  return doc;
}

// ---- enumerations --------------------------------------------------------

Document ohcn_doc(const std::string& limit_text) {
  const Natural limit = positive(limit_text, "--limit");
  if (limit > static_cast<Natural>(1'000'000'000)) throw RangeError("--limit above 10^9 is not supported");
  Document doc{"ohcn"};
  doc.inputs["limit"] = limit_text;
  Section s{"ohcn", {"n", "divisors"}, {}, false};
  for (const auto& r : ohcn_up_to(static_cast<std::uint64_t>(limit))) s.add({Cell::of(r.n), Cell::of(r.divisor_count)});
  doc.sections.push_back(std::move(s));
  return doc;
}

Document shapes_doc(const std::string& limit_text) {
  Document doc{"shapes"};
  doc.inputs["limit"] = limit_text;
  Section s{"shapes", {"first_occurrence", "exponents", "divisors"}, {}, false};
  for (const auto& shape : lattice_shapes_up_to(positive(limit_text, "--limit"))) {
    std::string e = "(";
    Natural d = 1;
    for (std::size_t i = 0; i < shape.exponents.size(); ++i) {
      e += (i ? "," : "") + std::to_string(shape.exponents[i]);
      d *= shape.exponents[i] + 1;
    }
    s.add({Cell::of(shape.first_occurrence), Cell::of(e + ")"), Cell::of(d)});
  }
  doc.sections.push_back(std::move(s));
  return doc;
}

std::string render(const Document& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable: return render_table(doc);
    case OutputFormat::kCsv: return render_csv(doc);
    case OutputFormat::kJson: return render_json(doc);
    case OutputFormat::kDot:
      if (!doc.raw_text) throw ParseError("dot output is only available for lattice");
      return *doc.raw_text;
  }
  return {};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact harmonic analysis of just-intonation chords and scales", "jharmony"};
  app.require_subcommand(1);
  std::string format_text = "table";
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--format,-f", format_text, "table, json, csv or dot")->default_str(fallback);
  };

  std::string chord_text, weights_text, primes_text, modulus_text, highlight_text, lattice_format = "dot";
  auto* analyze_cmd = app.add_subcommand("analyze", "Every invariant of a chord");
  analyze_cmd->add_option("chord", chord_text, "e.g. 4:5:6 or 1/1,5/4,3/2")->required();
  analyze_cmd->add_option("--weights", weights_text, "nonnegative weights, one per note");
  add_format(analyze_cmd, "table");

  auto* project_cmd = app.add_subcommand("project", "Project a chord onto a set of primes");
  project_cmd->add_option("chord", chord_text)->required();
  project_cmd->add_option("--primes", primes_text, "list such as 2,5, or odd, bp, all")->required();
  add_format(project_cmd, "table");

  auto* lattice_cmd = app.add_subcommand("lattice", "Divisor lattice of a complexity value");
  lattice_cmd->add_option("modulus", modulus_text)->required();
  lattice_cmd->add_option("--highlight", highlight_text, "chord to mark on the lattice");
  lattice_cmd->add_option("--format,-f", lattice_format, "dot or json");

  auto* scale_cmd = app.add_subcommand("scale", "Scale construction");
  scale_cmd->require_subcommand(1);
  std::string scale_arg;
  auto* from_odds_cmd = scale_cmd->add_subcommand("from-odds", "Build a scale from odd numbers");
  from_odds_cmd->add_option("odds", scale_arg, "e.g. 1,3,5,15")->required();
  add_format(from_odds_cmd, "table");
  auto* reorder_cmd = scale_cmd->add_subcommand("reorder", "List the rotations of a scale");
  reorder_cmd->add_option("scale", scale_arg)->required();
  add_format(reorder_cmd, "table");
  auto* split_cmd = scale_cmd->add_subcommand("split-plan", "Stitch interval splits from a plan file");
  split_cmd->add_option("plan", scale_arg)->required();
  add_format(split_cmd, "table");
  auto* record_cmd = scale_cmd->add_subcommand("record", "Complexity of every rotation of a scale");
  record_cmd->add_option("scale", scale_arg)->required();
  add_format(record_cmd, "table");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive searches");
  search_cmd->require_subcommand(1);
  int threads = 0;
  bool serial = false;
  std::optional<std::size_t> limit;
  auto add_exec = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "worker threads, 0 for all cores");
    sub->add_flag("--serial", serial, "use the single-threaded reference path");
  };
  ScalesOptions so;
  auto* scales_cmd = search_cmd->add_subcommand("scales", "Scales by odd complexity");
  scales_cmd->add_option("--n", so.n, "pitch classes");
  scales_cmd->add_option("--ocy-limit", so.ocy_limit);
  scales_cmd->add_option("--mcy-limit", so.mcy_limit);
  scales_cmd->add_option("--min-ratio-cents", so.min_cents);
  scales_cmd->add_option("--max-ratio-cents", so.max_cents);
  scales_cmd->add_option("--cap", so.cap, "keep at most this many records");
  scales_cmd->add_option("--time-budget", so.budget_ms, "milliseconds");
  scales_cmd->add_flag("--no-prune", so.no_prune, "disable the power-of-two pruning");
  add_exec(scales_cmd);
  add_format(scales_cmd, "table");

  std::string max_2k = "138";
  std::optional<double> r1_lo, r1_hi;
  auto* triads_cmd = search_cmd->add_subcommand("triads", "Triads spanning a fifth");
  triads_cmd->add_option("--max-2k", max_2k);
  triads_cmd->add_option("--ratio1-min-cents", r1_lo);
  triads_cmd->add_option("--ratio1-max-cents", r1_hi);
  triads_cmd->add_option("--limit", limit, "show at most this many rows");
  add_exec(triads_cmd);
  add_format(triads_cmd, "table");

  std::string max_k = "36";
  double quad_floor = 0.0;
  auto* quads_cmd = search_cmd->add_subcommand("quads", "Four-note chords spanning an octave");
  quads_cmd->add_option("--max-k", max_k);
  quads_cmd->add_option("--min-ratio-cents", quad_floor);
  quads_cmd->add_option("--limit", limit, "show at most this many rows");
  add_exec(quads_cmd);
  add_format(quads_cmd, "table");

  std::string k1_range = "5..21";
  std::size_t pitch_classes = 5;
  std::size_t cy_count = 10;
  bool all_rows = false;
  auto* penta_cmd = search_cmd->add_subcommand("pentatonic", "Brute force over k1");
  penta_cmd->add_option("--k1", k1_range, "range low..high");
  penta_cmd->add_option("--pitch-classes", pitch_classes);
  penta_cmd->add_option("--cy-count", cy_count, "number of distinct CY values to show");
  penta_cmd->add_flag("--all", all_rows, "show every row instead of the first per CY");
  add_exec(penta_cmd);
  add_format(penta_cmd, "table");

  std::string enum_limit;
  auto* ohcn_cmd = app.add_subcommand("ohcn", "Odd numbers with record divisor counts");
  ohcn_cmd->add_option("--limit", enum_limit)->required();
  add_format(ohcn_cmd, "table");
  auto* shapes_cmd = app.add_subcommand("shapes", "Distinct odd divisor lattice shapes");
  shapes_cmd->add_option("--limit", enum_limit)->required();
  add_format(shapes_cmd, "table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::Success&) {
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Document doc;
    OutputFormat format = parse_format(format_text);
    if (*analyze_cmd) {
      doc = analyze_doc(chord_text, weights_text);
    } else if (*project_cmd) {
      doc = project_doc(chord_text, primes_text);
    } else if (*lattice_cmd) {
      format = parse_format(lattice_format);
      doc = lattice_doc(modulus_text, highlight_text, format);
    } else if (*from_odds_cmd) {
      doc = scale_from_odds_doc(scale_arg);
    } else if (*reorder_cmd) {
      doc = scale_reorder_doc(scale_arg);
    } else if (*split_cmd) {
      doc = scale_split_plan_doc(scale_arg);
    } else if (*record_cmd) {
      doc = scale_record_doc(scale_arg);
    } else if (*scales_cmd) {
      doc = search_scales_doc(so, execution_for(threads, serial));
    } else if (*triads_cmd) {
      doc = search_triads_doc(max_2k, r1_lo, r1_hi, limit, execution_for(threads, serial));
    } else if (*quads_cmd) {
      doc = search_quads_doc(max_k, quad_floor, limit, execution_for(threads, serial));
    } else if (*penta_cmd) {
      doc = search_pentatonic_doc(k1_range, pitch_classes, cy_count, all_rows, execution_for(threads, serial));
    } else if (*ohcn_cmd) {
      doc = ohcn_doc(enum_limit);
    } else if (*shapes_cmd) {
      doc = shapes_doc(enum_limit);
    }
    const std::string text = render(doc, format);
    out << text;
    if (format != OutputFormat::kJson) {
      for (const auto& note : doc.notes) err << "note: " << note << '\n';
    }
    return kExitOk;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRange;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace jh::cli
