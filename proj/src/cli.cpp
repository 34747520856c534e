#include "kleshchev/cli.hpp"

#include "kleshchev/cache.hpp"
#include "kleshchev/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

namespace kleshchev {

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::crystal: return "crystal";
    case Subcommand::canonical: return "canonical";
    case Subcommand::decomp: return "decomp";
    case Subcommand::branch: return "branch";
    case Subcommand::verify: return "verify";
    case Subcommand::paths: return "paths";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::dot: return "dot";
    case OutputFormat::csv: return "csv";
    case OutputFormat::table: return "table";
  }
  return "?";
}

OutputFormat Invocation::effective_format() const {
  if (format) return *format;
  switch (subcommand) {
    case Subcommand::crystal: return OutputFormat::dot;
    case Subcommand::decomp: return OutputFormat::csv;
    default: return OutputFormat::table;
  }
}

namespace {

std::vector<int> parse_charge_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("--charge: '" + item + "' is not an integer");
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("--charge: expected a comma-separated list of integers");
  return out;
}

}  // namespace

Invocation parse_invocation(const std::vector<std::string>& args) {
  Invocation inv;
  CLI::App app{"Crystals, canonical bases and branching data for Kleshchev multipartitions", "kleshchev"};
  app.require_subcommand(0, 1);  // verify when omitted
  app.fallthrough();

  std::string charge_text = "0";
  std::string format_text;
  std::string convention_text = "bottom_up";
  std::string cache_text;
  app.add_option("--e", inv.e, "quantum characteristic (>= 2)")->check(CLI::Range(2, 1000));
  app.add_option("--charge", charge_text, "comma-separated charge, e.g. 0,1");
  app.add_option("--n", inv.n_max, "maximal size")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format_text, "json, dot, csv or table")
      ->check(CLI::IsMember({"json", "dot", "csv", "table"}));
  app.add_option("--convention", convention_text, "reading direction: bottom_up or top_down")
      ->check(CLI::IsMember({"bottom_up", "top_down"}));
  app.add_option("--cache-dir", cache_text, "directory for cached decomposition matrices");
  app.add_option("--vertex-cap", inv.vertex_cap, "maximal number of crystal vertices")->check(CLI::PositiveNumber);
  app.add_option("--max-n", inv.size_guard, "largest --n accepted without complaint")->check(CLI::NonNegativeNumber);
  app.add_flag("--at-one", inv.at_one, "decomp: evaluate entries at v = 1");

  const std::vector<std::pair<Subcommand, const char*>> subs{
      {Subcommand::crystal, "crystal graph of the Kleshchev component up to size n"},
      {Subcommand::canonical, "canonical basis vectors of rank n"},
      {Subcommand::decomp, "decomposition matrix of rank n"},
      {Subcommand::branch, "branching of every simple class of rank n"},
      {Subcommand::verify, "all property suites up to size n"},
      {Subcommand::paths, "path counts from the empty multipartition"}};
  for (const auto& [sub, help] : subs) {
    const Subcommand s = sub;
    app.add_subcommand(to_string(s), help)->callback([&inv, s] { inv.subcommand = s; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequest(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequest(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }

  if (inv.n_max > inv.size_guard)
    throw UsageError("--n: " + std::to_string(inv.n_max) + " exceeds the desk-scale guard " +
                     std::to_string(inv.size_guard) + " (raise it with --max-n)");
  inv.charge = parse_charge_list(charge_text);
  for (int& g : inv.charge) g = ((g % inv.e) + inv.e) % inv.e;
  if (!format_text.empty()) {
    static const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"dot", OutputFormat::dot}, {"csv", OutputFormat::csv}, {"table", OutputFormat::table}};
    inv.format = formats.at(format_text);
  }
  inv.convention = parse_reading_direction(convention_text);
  if (!cache_text.empty()) inv.cache_dir = std::filesystem::path(cache_text);

  const OutputFormat f = inv.effective_format();
  if (f == OutputFormat::dot && inv.subcommand != Subcommand::crystal)
    throw UsageError("--format: dot is only available for the crystal subcommand");
  return inv;
}

std::string provenance(const Invocation& inv) {
  return "kleshchev " + std::string(kEngineVersion) + " " + to_string(inv.subcommand) + " " +
         inv.multicharge().describe() + " n=" + std::to_string(inv.n_max);
}

namespace {

void comment_header(std::ostream& out, const Invocation& inv, const std::string& extra = {}) {
  const char* lead = inv.effective_format() == OutputFormat::dot ? "// " : "# ";
  out << lead << provenance(inv) << '\n';
  if (!extra.empty()) out << lead << extra << '\n';
}

nlohmann::json json_envelope(const Invocation& inv) {
  return nlohmann::json{{"provenance", provenance(inv)},
                        {"engine", std::string(kEngineVersion)},
                        {"e", inv.e},
                        {"charge", inv.charge},
                        {"convention", to_string(inv.convention)},
                        {"n", inv.n_max}};
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

int emit_crystal(const Invocation& inv, std::ostream& out) {
  const CrystalGraph graph = generate_crystal(inv.multicharge(), inv.n_max, inv.vertex_cap);
  switch (inv.effective_format()) {
    case OutputFormat::dot:
      comment_header(out, inv);
      write_dot(out, graph);
      break;
    case OutputFormat::csv:
      comment_header(out, inv);
      write_listing(out, graph, ',');
      break;
    case OutputFormat::table:
      comment_header(out, inv);
      write_listing(out, graph, '\t');
      break;
    case OutputFormat::json: {
      auto j = json_envelope(inv);
      j["vertices"] = nlohmann::json::array();
      for (const auto& v : graph.vertices()) {
        std::vector<int> pairing;
        for (int i = 0; i < inv.e; ++i) pairing.push_back(v.weight.pairing(i));
        j["vertices"].push_back({{"label", v.label.to_parts()},
                                 {"size", v.label.size()},
                                 {"wt_pairing", pairing},
                                 {"epsilon", v.epsilon},
                                 {"phi", v.phi}});
      }
      j["edges"] = nlohmann::json::array();
      for (const auto& edge : graph.edges())
        j["edges"].push_back({{"source", edge.source}, {"target", edge.target}, {"color", edge.color}});
      out << j.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

std::string word_text(const std::vector<MonomialStep>& word) {
  std::string s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (!s.empty()) s += ' ';
    s += "f" + std::to_string(it->residue);
    if (it->power > 1) s += "^(" + std::to_string(it->power) + ")";
  }
  return s.empty() ? "1" : s;
}

int report_shape(const CanonicalBasis& basis, const DecompositionMatrix& m, std::ostream& err) {
  auto problems = m.invariant_violations();
  for (const auto& f : basis.findings()) problems.push_back(f);
  for (const auto& p : problems) err << "violation: " << p << '\n';
  return problems.empty() ? kExitOk : kExitViolations;
}

int emit_canonical(const Invocation& inv, CanonicalAtlas& atlas, std::ostream& out, std::ostream& err) {
  const CanonicalBasis& basis = atlas.basis(inv.n_max);
  const DecompositionMatrix& m = atlas.matrix(inv.n_max);
  switch (inv.effective_format()) {
    case OutputFormat::json: {
      auto j = json_envelope(inv);
      j["elements"] = nlohmann::json::array();
      for (const auto& el : basis.elements()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [mu, c] : el.vector.sorted_terms())
          terms.push_back({{"label", mu.to_parts()}, {"coefficient", to_string(c)}});
        nlohmann::json word = nlohmann::json::array();
        for (const auto& step : el.monomial_trace) word.push_back({step.residue, step.power});
        j["elements"].push_back({{"label", el.label.to_parts()}, {"monomial", word}, {"terms", terms}});
      }
      j["findings"] = basis.findings();
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      comment_header(out, inv);
      out << "label,monomial,vector\n";
      for (const auto& el : basis.elements())
        out << csv_field(to_string(el.label)) << ',' << csv_field(word_text(el.monomial_trace)) << ','
            << csv_field(to_string(el.vector)) << '\n';
      break;
    default:
      comment_header(out, inv);
      for (const auto& el : basis.elements())
        out << "G(" << to_string(el.label) << ") = " << to_string(el.vector) << "    from "
            << word_text(el.monomial_trace) << '\n';
      break;
  }
  return report_shape(basis, m, err);
}

int emit_decomp(const Invocation& inv, CanonicalAtlas& atlas, std::ostream& out, std::ostream& err) {
  const DecompositionMatrix& m = atlas.matrix(inv.n_max);
  switch (inv.effective_format()) {
    case OutputFormat::json: {
      auto j = json_envelope(inv);
      j["matrix"] = nlohmann::json::parse(to_json_text(m));
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      comment_header(out, inv);
      write_csv(out, m, inv.at_one);
      break;
    default: {
      comment_header(out, inv);
      std::vector<std::vector<std::string>> cells;
      cells.push_back({""});
      for (const auto& c : m.columns()) cells[0].push_back(to_string(c));
      for (std::size_t r = 0; r < m.rows().size(); ++r) {
        std::vector<std::string> row{to_string(m.rows()[r])};
        for (const auto& d : m.entries()[r])
          row.push_back(d.is_zero() ? "." : inv.at_one ? d.evaluate_at_one().str() : to_string(d));
        cells.push_back(std::move(row));
      }
      std::vector<std::size_t> width(cells[0].size(), 0);
      for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c)
          out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
        out << '\n';
      }
      break;
    }
  }
  return report_shape(atlas.basis(inv.n_max), m, err);
}

int emit_branch(const Invocation& inv, CanonicalAtlas& atlas, std::ostream& out) {
  std::vector<BranchReport> reports;
  for (const auto& label : atlas.basis(inv.n_max).labels())
    for (int i = 0; i < inv.e; ++i) reports.push_back(branch_simple(label, i, atlas));
  switch (inv.effective_format()) {
    case OutputFormat::json: {
      auto j = json_envelope(inv);
      j["branching"] = nlohmann::json::parse(branch_reports_json(reports));
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      comment_header(out, inv, kBranchProxyNote);
      write_branch_csv(out, reports);
      break;
    default:
      comment_header(out, inv, kBranchProxyNote);
      write_branch_table(out, reports);
      break;
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const BranchReport& r) { return r.pass(); });
  return ok ? kExitOk : kExitViolations;
}

int emit_verify(const Invocation& inv, CanonicalAtlas& atlas, std::ostream& out) {
  VerifyLimits limits = VerifyLimits::uniform(inv.n_max);
  limits.vertex_cap = inv.vertex_cap;
  const auto results = verify_all(atlas, limits);
  if (inv.effective_format() == OutputFormat::json) {
    auto j = json_envelope(inv);
    j["suites"] = nlohmann::json::parse(suite_results_json(results));
    out << j.dump() << '\n';
  } else if (inv.effective_format() == OutputFormat::csv) {
    comment_header(out, inv);
    out << "suite,verdict,checked,failures,convention_findings\n";
    for (const auto& r : results)
      out << csv_field(r.name) << ',' << (r.passed() ? "pass" : "fail") << ',' << r.checked << ','
          << r.failure_count << ',' << r.convention_findings.size() << '\n';
  } else {
    comment_header(out, inv);
    write_suite_summary(out, results);
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
  return ok ? kExitOk : kExitViolations;
}

int emit_paths(const Invocation& inv, std::ostream& out) {
  const CrystalGraph graph = generate_crystal(inv.multicharge(), inv.n_max, inv.vertex_cap);
  const OutputFormat f = inv.effective_format();
  if (f == OutputFormat::json) {
    auto j = json_envelope(inv);
    j["paths"] = nlohmann::json::array();
    for (const auto& v : graph.vertices())
      j["paths"].push_back({{"label", v.label.to_parts()}, {"paths", count_paths(graph, v.label).str()}});
    out << j.dump() << '\n';
    return kExitOk;
  }
  comment_header(out, inv);
  const char sep = f == OutputFormat::csv ? ',' : '\t';
  out << "vertex" << sep << "size" << sep << "paths\n";
  for (const auto& v : graph.vertices()) {
    const std::string label = to_string(v.label);
    out << (f == OutputFormat::csv ? csv_field(label) : label) << sep << v.label.size() << sep
        << count_paths(graph, v.label) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
  try {
    CanonicalAtlas atlas(inv.multicharge(), inv.cache_dir);
    switch (inv.subcommand) {
      case Subcommand::crystal: return emit_crystal(inv, out);
      case Subcommand::canonical: return emit_canonical(inv, atlas, out, err);
      case Subcommand::decomp: return emit_decomp(inv, atlas, out, err);
      case Subcommand::branch: return emit_branch(inv, atlas, out);
      case Subcommand::verify: return emit_verify(inv, atlas, out);
      case Subcommand::paths: return emit_paths(inv, out);
    }
  } catch (const ResourceCapExceeded& ex) {
    err << "error: resource cap exceeded: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const CacheCorruption& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const ConventionError& ex) {
    err << "convention finding [" << to_string(inv.convention) << "]: " << ex.what() << '\n';
    return kExitViolations;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Invocation inv;
  try {
    inv = parse_invocation(args);
  } catch (const HelpRequest& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\nRun with --help for the list of flags.\n";
    return kExitUsage;
  }
  try {
    return run(inv, out, err);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace kleshchev
