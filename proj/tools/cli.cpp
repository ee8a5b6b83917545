#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "recon/enumerate.hpp"
#include "recon/graph6.hpp"
#include "recon/shadow.hpp"

namespace recon::cli {

namespace {

constexpr int kDefaultCampaignCap = 8;
constexpr int kOptInCampaignCap = 9;
constexpr int kTreeCap = 12;
// Sub-shadow anchor listing is exponential in the shadow size.
constexpr int kShadowAnchorCap = 12;

const char* kOrderNote =
    "default campaigns stop at order 8; order 9 classification is opt-in (--allow-order-9)";
const char* kDistinguishNote =
    "connective anchors are accepted only under a conservative sufficient test for being located in the deck";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json set_json(VertexSet s) {
  Json out = Json::array();
  for (int v : members(s)) out.push_back(v);
  return out;
}

std::string dotted(VertexSet s) {
  std::string out;
  for (int v : members(s)) {
    if (!out.empty()) out += '.';
    out += std::to_string(v);
  }
  return out;
}

int oracle_cap(int max_oracle) { return std::min(max_oracle, ReconstructionOracle::kDefaultMaxOrder); }

Validation validate(const Graph& g, const Certificate& c, int max_oracle) {
  if (g.order() <= oracle_cap(max_oracle)) return validate_certificate_detailed(g, c, shared_oracle());
  Validation v;
  v.predicate = c.kind != CertificateKind::unknown && check_witness(g, c);
  return v;
}

template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

OrderSummary empty_summary(int n) {
  OrderSummary s;
  s.order = n;
  for (auto c : {BalanceClass::vertex_transitive, BalanceClass::balanced_not_vt, BalanceClass::quasi_balanced,
                 BalanceClass::has_small_anchor})
    s.classes[to_string(c)] = 0;
  return s;
}

void tally(OrderSummary& s, const CampaignRow& row) {
  ++s.graphs;
  ++s.classes[to_string(row.balance)];
  ++s.kinds[to_string(row.certificate.kind)];
  if (row.certificate.kind == CertificateKind::unknown) {
    s.unknowns.push_back(row.graph6);
  } else if (!row.validation.ok()) {
    s.validation_failures.push_back(row.graph6);
  }
  if (row.balance == BalanceClass::balanced_not_vt) {
    ++s.balanced_not_vt;
    s.orbit_connective += row.orbit_leaves_connective;
    s.orbit_distinguishable += row.orbit_leaves_distinguishable;
  }
}

template <typename Certifier>
void run_order(CampaignReport& report, int n, std::vector<CanonicalKey> keys, const CampaignOptions& opt,
               Certifier&& certifier) {
  const bool oracle = n <= oracle_cap(opt.max_oracle);
  if (oracle) shared_oracle().classes(n);
  std::vector<CampaignRow> rows(keys.size());
  parallel_for(keys.size(), opt.jobs, [&](std::size_t i) {
    CampaignRow& row = rows[i];
    row.key = keys[i];
    const Graph g = row.key.graph();
    row.graph6 = write_graph6(g);
    const SubgraphCensus census(g);
    row.balance = balance_class(census);
    row.certificate = certifier(g);
    row.validation = validate(g, row.certificate, opt.max_oracle);
    if (row.balance == BalanceClass::balanced_not_vt) {
      for (VertexSet orbit : orbits(g).classes) {
        const VertexSet rest = g.vertices() & ~orbit;
        if (connective_anchor_copies(census, rest) != Verdict::connective) continue;
        row.orbit_leaves_connective = true;
        if (is_distinguishable(g, rest)) {
          row.orbit_leaves_distinguishable = true;
          break;
        }
      }
    }
  });
  OrderSummary summary = empty_summary(n);
  summary.oracle_checked = oracle;
  for (const auto& row : rows) tally(summary, row);
  report.orders.push_back(std::move(summary));
  for (auto& row : rows) report.rows.push_back(std::move(row));
}

std::string read_first_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw InputError("no graph6 line in input");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + out_path);
  file << text;
  if (!file) throw std::runtime_error("failed writing " + out_path);
}

template <typename F>
auto with_input(const std::string& path, std::istream& in, F&& f) {
  if (path.empty() || path == "-") return f(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open input file " + path);
  return f(file);
}

}  // namespace

// ---------------------------------------------------------------- records

Json witness_json(const Witness& w) {
  Json out;
  out["anchor"] = set_json(w.anchor);
  out["removed"] = set_json(w.removed);
  out["anchor_kind"] = to_string(w.anchor_kind);
  if (w.pivot >= 0) out["pivot"] = w.pivot;
  if (w.complemented) out["complemented"] = true;
  if (!w.placements.empty()) {
    Json table = Json::array();
    for (const auto& p : w.placements)
      table.push_back({{"placement", set_json(p.placement)}, {"distance", p.distance}, {"realized", p.realized}});
    out["placements"] = std::move(table);
  }
  if (!w.chain.empty()) {
    Json chain = Json::array();
    for (VertexSet s : w.chain) chain.push_back(set_json(s));
    out["chain"] = std::move(chain);
  }
  return out;
}

std::string witness_summary(const Certificate& c) {
  const Witness& w = c.witness;
  switch (c.kind) {
    case CertificateKind::vertex_transitive: return "";
    case CertificateKind::unknown: return "";
    case CertificateKind::disconnected: return w.complemented ? "complement" : "graph";
    default: break;
  }
  std::string out = "anchor=" + dotted(w.anchor) + ";removed=" + dotted(w.removed) + ";" + to_string(w.anchor_kind);
  if (w.pivot >= 0) out += ";pivot=" + std::to_string(w.pivot);
  if (!w.placements.empty()) {
    out += ";distances=";
    for (std::size_t i = 0; i < w.placements.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(w.placements[i].distance);
    }
  }
  return out;
}

Json certificate_record(const Graph& g, const Certificate& c, const Validation* v) {
  Json out;
  out["graph6"] = write_graph6(g);
  out["kind"] = to_string(c.kind);
  out["witness"] = witness_json(c.witness);
  if (v) {
    out["validated"] = v->ok() && c.kind != CertificateKind::unknown;
    out["oracle_checked"] = v->oracle_checked;
  } else {
    out["validated"] = nullptr;
  }
  return out;
}

// ---------------------------------------------------------------- analyze

Json analyze(const Graph& g, int max_oracle) {
  if (g.order() < 3) throw InputError("analyze needs a graph with at least 3 vertices");
  const int n = g.order();
  const SubgraphCensus census(g);
  const OrbitPartition parts = orbits(g);

  Json out;
  out["schema"] = "1";
  out["graph6"] = write_graph6(g);
  out["order"] = n;
  out["edges"] = g.edge_count();
  out["canonical"] = canonical_key(g).hex();

  Json orbit_list = Json::array();
  for (VertexSet o : parts.classes) orbit_list.push_back(set_json(o));
  out["orbits"] = std::move(orbit_list);
  out["vertex_transitive"] = parts.size() == 1;
  out["connected"] = is_connected(g);

  Json by_size = Json::array();
  for (int k = 1; k < n; ++k) {
    Json list = Json::array();
    for (const auto& a : census.anchors(k)) list.push_back(set_json(a.vertices));
    by_size.push_back({{"size", k}, {"anchors", std::move(list)}});
  }
  out["anchors_by_size"] = std::move(by_size);
  out["balance_class"] = to_string(balance_class(census));

  Json maximal = Json::array();
  const auto maximal_sets = maximal_anchors(census);
  for (VertexSet s : maximal_sets) maximal.push_back(set_json(s));
  out["maximal_anchors"] = std::move(maximal);

  if (parts.size() > 1) {
    Json removal = Json::array();
    for (const auto& ov : orbit_removal_anchor(g)) {
      Json item{{"orbit", set_json(ov.orbit)}, {"verdict", to_string(ov.verdict)}};
      if (ov.verdict == Verdict::connective) item["distinguishable"] = is_distinguishable(g, g.vertices() & ~ov.orbit);
      removal.push_back(std::move(item));
    }
    out["orbit_removal"] = std::move(removal);
  }

  const Certificate cert = certify(g);
  const Validation validation = validate(g, cert, max_oracle);
  out["certificate"] = certificate_record(g, cert, &validation);

  VertexSet chosen = cert.witness.anchor;
  if (chosen == 0 && !maximal_sets.empty()) chosen = maximal_sets.front();
  if (chosen != 0 && chosen != g.vertices()) {
    const BuiltShadow built = build_shadow_mapped(g, chosen);
    Json shadow;
    shadow["anchor"] = set_json(chosen);
    Json outside = Json::array();
    for (int v : built.outside) outside.push_back(v);
    shadow["outside"] = std::move(outside);
    shadow["text"] = write_shadow(built.shadow);
    Json shadow_orbit_list = Json::array();
    for (VertexSet o : shadow_orbits(built.shadow)) shadow_orbit_list.push_back(set_json(o));
    shadow["orbits"] = std::move(shadow_orbit_list);
    shadow["vertex_transitive"] = is_shadow_vertex_transitive(built.shadow);
    if (built.shadow.size() <= kShadowAnchorCap) {
      Json anchors = Json::array();
      for (VertexSet a : shadow_anchors(built.shadow)) anchors.push_back(set_json(a));
      shadow["anchors"] = std::move(anchors);
    } else {
      shadow["anchors"] = nullptr;
    }
    out["shadow"] = std::move(shadow);
  } else {
    out["shadow"] = nullptr;
  }

  if (n <= oracle_cap(max_oracle)) {
    const OracleVerdict verdict = shared_oracle().reconstruct(deck_of(g));
    Json matches = Json::array();
    for (const auto& key : verdict.matches) matches.push_back(write_graph6(key.graph()));
    out["oracle"] = {{"checked", true}, {"unique", verdict.unique()}, {"matches", std::move(matches)}};
  } else {
    out["oracle"] = {{"checked", false}, {"reason", "order above oracle limit"}};
  }
  out["notes"] = {{"distinguishability", kDistinguishNote}};
  return out;
}

// ---------------------------------------------------------------- campaigns

CampaignReport classify(int min_order, int max_order, const CampaignOptions& opt) {
  if (min_order < 3 || max_order > kOptInCampaignCap || min_order > max_order)
    throw InputError("classify orders must satisfy 3 <= min <= max <= 9");
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.campaign = "classify";
  report.min_order = min_order;
  report.max_order = max_order;
  for (int n = min_order; n <= max_order; ++n)
    run_order(report, n, graph_classes(n), opt, [](const Graph& g) { return certify(g); });
  if (opt.timing) report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignReport trees(int max_order, const CampaignOptions& opt) {
  if (max_order < 3 || max_order > kTreeCap) throw InputError("trees --max-order must lie in 3..12");
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.campaign = "trees";
  report.min_order = 3;
  report.max_order = max_order;
  for (int n = 3; n <= max_order; ++n)
    run_order(report, n, tree_classes(n), opt, [](const Graph& t) { return certify_tree(t); });
  if (opt.timing) report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string campaign_csv(const CampaignReport& report) {
  std::vector<const CampaignRow*> rows;
  for (const auto& r : report.rows) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) { return a->key < b->key; });
  std::string out = "graph6,class,certificate,witness-summary\n";
  for (const auto* r : rows) {
    out += r->graph6;
    out += ',';
    out += to_string(r->balance);
    out += ',';
    out += to_string(r->certificate.kind);
    out += ',';
    out += witness_summary(r->certificate);
    out += '\n';
  }
  return out;
}

Json campaign_json(const CampaignReport& report, bool with_rows) {
  Json out;
  out["schema"] = "1";
  out["campaign"] = report.campaign;
  out["min_order"] = report.min_order;
  out["max_order"] = report.max_order;
  if (report.campaign == "classify") out["header"] = kOrderNote;
  out["distinguishability"] = kDistinguishNote;
  Json orders = Json::array();
  for (const auto& s : report.orders) {
    Json o;
    o["order"] = s.order;
    o["graphs"] = s.graphs;
    o["classes"] = s.classes;
    o["certificate_kinds"] = s.kinds;
    o["unknown_count"] = s.unknowns.size();
    o["unknowns"] = s.unknowns;
    o["certified_fraction"] =
        s.graphs ? static_cast<double>(s.graphs - s.unknowns.size()) / static_cast<double>(s.graphs) : 0.0;
    o["oracle_checked"] = s.oracle_checked;
    o["validation_failures"] = s.validation_failures;
    if (report.campaign == "classify") {
      o["balanced_not_vt"] = {{"graphs", s.balanced_not_vt},
                              {"orbit_leaves_connective_anchor", s.orbit_connective},
                              {"orbit_leaves_distinguishable_anchor", s.orbit_distinguishable}};
    }
    orders.push_back(std::move(o));
  }
  out["orders"] = std::move(orders);
  if (report.wall_seconds >= 0) out["wall_seconds"] = report.wall_seconds;
  if (with_rows) {
    std::vector<const CampaignRow*> rows;
    for (const auto& r : report.rows) rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) { return a->key < b->key; });
    Json list = Json::array();
    for (const auto* r : rows) {
      Json rec = certificate_record(r->key.graph(), r->certificate, &r->validation);
      rec["class"] = to_string(r->balance);
      list.push_back(std::move(rec));
    }
    out["rows"] = std::move(list);
  }
  return out;
}

// ---------------------------------------------------------------- reconstruct

ReconstructResult reconstruct(const Deck& deck, int max_oracle) {
  if (deck.order() > oracle_cap(max_oracle)) {
    throw OracleRangeError("deck order " + std::to_string(deck.order()) + " exceeds the oracle limit " +
                           std::to_string(oracle_cap(max_oracle)));
  }
  ReconstructResult result;
  Json& out = result.report;
  out["schema"] = "1";
  out["order"] = deck.order();
  try {
    out["kelly_edges"] = kelly_count(graphs::complete(2), deck);
  } catch (const InconsistentDeck&) {
    out["kelly_edges"] = nullptr;
  }
  const OracleVerdict verdict = shared_oracle().reconstruct(deck);
  Json matches = Json::array();
  for (const auto& key : verdict.matches) matches.push_back(write_graph6(key.graph()));
  if (verdict.unique()) {
    out["status"] = "unique";
    result.status = kOk;
  } else if (verdict.legitimate()) {
    out["status"] = "multiple";
    result.status = kMultipleMatches;
  } else {
    out["status"] = "none";
    result.status = kIllegitimate;
  }
  out["matches"] = std::move(matches);
  return result;
}

// ---------------------------------------------------------------- command line

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anchor and shadow-graph tools for graph reconstruction", "recon"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "csv";
  int jobs = 1;
  int max_oracle = ReconstructionOracle::kDefaultMaxOrder;
  bool timing = false;
  bool seed_unused = false;
  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--out", out_path, "Write the report here instead of stdout");
    sub->add_option("--max-oracle", max_oracle, "Largest order checked by the reconstruction oracle")
        ->check(CLI::Range(3, ReconstructionOracle::kDefaultMaxOrder));
    sub->add_flag("--seed-unused", seed_unused, "Accepted for compatibility; nothing is randomised");
  };
  auto campaign_flags = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("-j,--jobs", jobs, "Parallel workers")->check(CLI::Range(1, 256));
    sub->add_flag("--timing", timing, "Include wall time (breaks byte-identical output)");
  };

  std::string input = "-";
  std::string literal;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report anchors, shadows and a certificate for one graph");
  analyze_cmd->add_option("input", input, "File whose first line is graph6 (default stdin)");
  analyze_cmd->add_option("-g,--graph6", literal, "graph6 string given directly");
  common(analyze_cmd);

  int order = 0;
  int min_order = 0;
  bool allow_nine = false;
  std::string summary_path;
  bool with_rows = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify every graph of the given order(s)");
  classify_cmd->add_option("-n,--order", order, "Largest order")->required();
  classify_cmd->add_option("--min-order", min_order, "Smallest order (defaults to --order)");
  classify_cmd->add_flag("--allow-order-9", allow_nine, "Permit order 9 (274668 graphs)");
  classify_cmd->add_option("--summary", summary_path, "Also write the JSON summary here");
  classify_cmd->add_flag("--rows", with_rows, "Include per-graph records in JSON output");
  campaign_flags(classify_cmd);

  int tree_max = 10;
  auto* trees_cmd = app.add_subcommand("trees", "Certify every free tree up to an order");
  trees_cmd->add_option("--max-order", tree_max, "Largest tree order (at most 12)");
  trees_cmd->add_option("--summary", summary_path, "Also write the JSON summary here");
  trees_cmd->add_flag("--rows", with_rows, "Include per-tree records in JSON output");
  campaign_flags(trees_cmd);

  std::string deck_path = "-";
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Find every graph with the given deck");
  reconstruct_cmd->add_option("deck", deck_path, "Deck file (default stdin)");
  common(reconstruct_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (analyze_cmd->parsed()) {
      const std::string line =
          literal.empty() ? with_input(input, in, [](std::istream& s) { return read_first_line(s); }) : literal;
      const Json report = analyze(parse_graph6(line), max_oracle);
      emit(report.dump(2) + "\n", out_path, out);
      return kOk;
    }
    if (classify_cmd->parsed() || trees_cmd->parsed()) {
      const CampaignOptions opt{jobs, max_oracle, timing};
      CampaignReport report;
      if (classify_cmd->parsed()) {
        if (min_order == 0) min_order = order;
        const int cap = allow_nine ? kOptInCampaignCap : kDefaultCampaignCap;
        if (order > cap) throw InputError("classify above order 8 needs --allow-order-9");
        report = classify(min_order, order, opt);
      } else {
        report = trees(tree_max, opt);
      }
      if (timing) err << report.campaign << ": " << report.wall_seconds << " s\n";
      const std::string body =
          format == "csv" ? campaign_csv(report) : campaign_json(report, with_rows).dump(2) + "\n";
      emit(body, out_path, out);
      if (!summary_path.empty()) emit(campaign_json(report, false).dump(2) + "\n", summary_path, out);
      return kOk;
    }
    if (reconstruct_cmd->parsed()) {
      const Deck deck = with_input(deck_path, in, [](std::istream& s) { return read_deck(s); });
      const ReconstructResult result = reconstruct(deck, max_oracle);
      emit(result.report.dump(2) + "\n", out_path, out);
      return result.status;
    }
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DeckFormatError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace recon::cli
