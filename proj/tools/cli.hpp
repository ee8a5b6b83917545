#ifndef RECON_TOOLS_CLI_HPP
#define RECON_TOOLS_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "recon/certify.hpp"

namespace recon::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kMultipleMatches = 3,
  kIllegitimate = 4,
};

/// One graph of a campaign.
struct CampaignRow {
  CanonicalKey key;
  std::string graph6;
  BalanceClass balance = BalanceClass::has_small_anchor;
  Certificate certificate;
  Validation validation;
  /// Only filled for balanced graphs that are not vertex-transitive.
  bool orbit_leaves_connective = false;
  bool orbit_leaves_distinguishable = false;
};

struct OrderSummary {
  int order = 0;
  std::size_t graphs = 0;
  std::map<std::string, std::size_t> classes;
  std::map<std::string, std::size_t> kinds;
  std::vector<std::string> unknowns;
  std::vector<std::string> validation_failures;
  bool oracle_checked = false;
  std::size_t balanced_not_vt = 0;
  std::size_t orbit_connective = 0;
  std::size_t orbit_distinguishable = 0;
};

struct CampaignReport {
  std::string campaign;
  int min_order = 0;
  int max_order = 0;
  std::vector<OrderSummary> orders;
  std::vector<CampaignRow> rows;
  double wall_seconds = -1;
};

struct CampaignOptions {
  int jobs = 1;
  /// Certificates are checked against the oracle up to this order.
  int max_oracle = ReconstructionOracle::kDefaultMaxOrder;
  bool timing = false;
};

Json witness_json(const Witness& w);
std::string witness_summary(const Certificate& c);
Json certificate_record(const Graph& g, const Certificate& c, const Validation* v);

/// Full single-graph report. Oracle steps are skipped above max_oracle.
Json analyze(const Graph& g, int max_oracle);

CampaignReport classify(int min_order, int max_order, const CampaignOptions& opt);
CampaignReport trees(int max_order, const CampaignOptions& opt);

std::string campaign_csv(const CampaignReport& report);
Json campaign_json(const CampaignReport& report, bool with_rows);

struct ReconstructResult {
  ExitCode status = kOk;
  Json report;
};
ReconstructResult reconstruct(const Deck& deck, int max_oracle);

/// Parses and runs a command line (args excludes the program name). Reports
/// go to out (or the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recon::cli

#endif  // RECON_TOOLS_CLI_HPP
