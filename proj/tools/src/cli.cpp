#include "localh/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "localh/errors.hpp"
#include "localh/local_h.hpp"
#include "localh/noncrossing.hpp"
#include "localh/permutation.hpp"
#include "localh/root_system.hpp"
#include "localh/verify.hpp"

namespace localh::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr std::pair<RecordKind, std::string_view> kKindNames[] = {
    {RecordKind::LocalH, "local_h"},       {RecordKind::Gamma, "gamma"},
    {RecordKind::HPlus, "h_plus"},         {RecordKind::NcCount, "nc_count"},
    {RecordKind::PermCount, "perm_count"}, {RecordKind::VerifyReport, "verify_report"},
    {RecordKind::Partitions, "partitions"}, {RecordKind::Perm, "perm"},
};

// Keys whose integer arrays print as polynomials in plain output.
const std::set<std::string> kPolyKeys = {"ell", "h_plus", "descent_polynomial"};
// Keys whose string arrays print one item per line.
const std::set<std::string> kListKeys = {"partitions", "orbit"};

json int_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer json_int(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

json poly_json(const IntPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(int_json(c));
  return a;
}

json gamma_json(const GammaVector& xi) {
  json a = json::array();
  for (const auto& c : xi.values()) a.push_back(int_json(c));
  return a;
}

template <typename T>
json int_array(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string tuple_text(const json& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += scalar_text(a[i]);
  }
  return s + ")";
}

std::string poly_text(const json& a) {
  std::vector<Integer> c;
  for (const auto& v : a) c.push_back(json_int(v));
  return to_string(IntPoly(std::move(c)));
}

std::string plain_verify(const json& p) {
  std::ostringstream os;
  for (const auto& c : p["checks"]) {
    os << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>() << " ("
       << c["scope"].get<std::string>() << "): " << c["anchor"].get<std::string>() << '\n';
    if (!c["detail"].get<std::string>().empty()) os << "       " << c["detail"].get<std::string>() << '\n';
  }
  os << "passed " << p["passed"].get<int>() << '/' << p["passed"].get<int>() + p["failed"].get<int>() << '\n';
  return os.str();
}

std::string plain(const OutputRecord& r) {
  if (r.kind == RecordKind::VerifyReport) return plain_verify(r.payload);
  std::ostringstream os;
  for (const auto& [key, v] : r.payload.items()) {
    if (v.is_array() && kListKeys.count(key)) {
      os << key << ":\n";
      for (const auto& item : v) os << "  " << scalar_text(item) << '\n';
    } else if (v.is_array() && kPolyKeys.count(key)) {
      os << key << ": " << poly_text(v) << '\n';
    } else if (v.is_array()) {
      os << key << ": " << tuple_text(v) << '\n';
    } else {
      os << key << ": " << scalar_text(v) << '\n';
    }
  }
  return os.str();
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_value(const json& v) {
  if (!v.is_array()) return csv_field(scalar_text(v));
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += scalar_text(v[i]);
  }
  return csv_field(s);
}

std::string csv(const OutputRecord& r) {
  std::ostringstream os;
  if (r.kind == RecordKind::VerifyReport) {
    os << "name,scope,passed,seconds,anchor,detail\n";
    for (const auto& c : r.payload["checks"])
      os << csv_value(c["name"]) << ',' << csv_value(c["scope"]) << ',' << csv_value(c["passed"]) << ','
         << csv_value(c["seconds"]) << ',' << csv_value(c["anchor"]) << ',' << csv_value(c["detail"]) << '\n';
    return os.str();
  }
  os << "kind";
  for (const auto& [key, v] : r.payload.items()) os << ',' << key;
  os << '\n' << to_string(r.kind);
  for (const auto& [key, v] : r.payload.items()) os << ',' << csv_value(v);
  os << '\n';
  return os.str();
}

struct Common {
  std::string format = "plain";
};

void add_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

std::string render(const std::vector<OutputRecord>& records, Format f) {
  std::string s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i && f == Format::Plain) s += '\n';
    s += emit(records[i], f);
  }
  return s;
}

void require_budget(int value, int limit, const std::string& what, const std::string& flag) {
  if (value > limit)
    throw BudgetExceeded(what + " " + std::to_string(value) + " exceeds the budget " + std::to_string(limit) +
                         "; raise it with " + flag);
}

std::vector<OutputRecord> local_h_records(const std::string& label, const LocalHResult& r, bool gamma) {
  std::vector<OutputRecord> out;
  out.push_back({RecordKind::LocalH,
                 json{{"type", label}, {"n", r.n()}, {"source", std::string(to_string(r.source))}, {"ell", poly_json(r.ell)}}});
  if (gamma) out.push_back({RecordKind::Gamma, json{{"type", label}, {"n", r.n()}, {"xi", gamma_json(r.xi)}}});
  return out;
}

Perm parse_any(const std::string& text, int n) {
  if (text.find(',') != std::string::npos) return parse_word(text);
  return parse_cycles(text, n);
}

json perm_stats_json(const Perm& w) {
  const auto s = stats(w);
  return json{{"word", to_string(w)},
              {"descents", int_array(s.descents)},
              {"excedances", int_array(s.excedances)},
              {"double_descents", int_array(s.double_descents)},
              {"double_excedances", int_array(s.double_excedances)},
              {"double_ascents", int_array(double_ascents(w))},
              {"lr_maxima", int_array(s.lr_maxima)},
              {"fixed_points", int_array(s.fixed_points)},
              {"run_lengths", int_array(s.run_lengths)},
              {"in_E", is_in_E(w)}};
}

}  // namespace

std::string_view to_string(RecordKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

RecordKind parse_kind(std::string_view text) {
  for (const auto& [kind, name] : kKindNames)
    if (name == text) return kind;
  throw std::invalid_argument("unknown record kind '" + std::string(text) + "'");
}

Format parse_format(std::string_view text) {
  if (text == "plain") return Format::Plain;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

std::string emit(const OutputRecord& r, Format f) {
  switch (f) {
    case Format::Json: return json{{"kind", to_string(r.kind)}, {"payload", r.payload}}.dump() + "\n";
    case Format::Csv: return csv(r);
    case Format::Plain: break;
  }
  return plain(r);
}

OutputRecord parse_record(std::string_view json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("payload") || !j["kind"].is_string() ||
      !j["payload"].is_object())
    throw std::invalid_argument("record must be an object with string 'kind' and object 'payload'");
  return {parse_kind(j["kind"].get<std::string>()), j["payload"]};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local h-vectors of cluster and barycentric subdivisions", "localh"};
  app.require_subcommand(1);

  Common cluster_c, bary_c, hplus_c, nc_c, perm_c, verify_c;

  auto* cluster = app.add_subcommand("cluster", "Local h-polynomial of a cluster subdivision");
  std::string cluster_type;
  bool cluster_gamma = false;
  int max_rank = 16;
  int threads = 0;
  cluster->add_option("--type", cluster_type, "Cartan type, e.g. A5, D6, I2(7), E8")->required();
  cluster->add_flag("--gamma", cluster_gamma, "Also print the local gamma vector");
  cluster->add_option("--max-rank", max_rank, "Largest classical rank to sweep")->capture_default_str();
  cluster->add_option("--threads", threads, "Worker threads (0: LOCALH_THREADS or hardware)");
  add_format(cluster, cluster_c);

  auto* bary = app.add_subcommand("bary", "Local h-polynomial of the barycentric subdivision");
  int bary_n = 0;
  bool bary_gamma = false;
  bool bary_interp = false;
  int bary_max = 8;
  bary->add_option("--n", bary_n, "Simplex has n vertices")->required()->check(CLI::NonNegativeNumber);
  bary->add_flag("--gamma", bary_gamma, "Also print the local gamma vector");
  bary->add_flag("--interpretations", bary_interp, "Count the three permutation models of the gamma vector");
  bary->add_option("--max-n", bary_max, "Enumeration budget")->capture_default_str();
  add_format(bary, bary_c);

  auto* hplus = app.add_subcommand("hplus", "h-polynomial of the positive cluster complex");
  std::string hplus_type;
  hplus->add_option("--type", hplus_type, "Classical Cartan type")->required();
  add_format(hplus, hplus_c);

  auto* nc = app.add_subcommand("nc", "Noncrossing partitions");
  nc->require_subcommand(1);
  auto* nc_enum = nc->add_subcommand("enumerate", "List noncrossing partitions");
  std::string nc_kind;
  int nc_n = 0;
  int nc_max = -1;
  bool nc_count_only = false;
  std::vector<std::string> nc_filters;
  nc_enum->add_option("--kind", nc_kind, "A or B")->required()->check(CLI::IsMember({"A", "B", "a", "b"}));
  nc_enum->add_option("--n", nc_n, "Ground set size")->required()->check(CLI::PositiveNumber);
  nc_enum->add_option("--filter", nc_filters, "Repeatable")
      ->check(CLI::IsMember({"no-singleton", "nested-singletons", "no-zero-block"}));
  nc_enum->add_option("--max-n", nc_max, "Enumeration budget (default 10 for A, 6 for B)");
  nc_enum->add_flag("--count-only", nc_count_only, "Print counts without the partitions");
  add_format(nc_enum, nc_c);

  auto* perm = app.add_subcommand("perm", "Permutation statistics and maps");
  perm->require_subcommand(1);
  std::string perm_arg;
  int perm_n = 0;
  int psi_index = 0;
  auto* perm_stats = perm->add_subcommand("stats", "Descents, excedances, runs, ...");
  perm_stats->add_option("word", perm_arg, "One-line word, e.g. (7,3,1,5,6,9,8,2,4)")->required();
  add_format(perm_stats, perm_c);
  auto* perm_phi = perm->add_subcommand("phi", "Foata map of a permutation given in cycle form");
  perm_phi->add_option("cycles", perm_arg, "Cycle form like \"(5 2 4)(6 1)\", or a comma-separated word")->required();
  perm_phi->add_option("--n", perm_n, "Size when the largest element is a fixed point");
  add_format(perm_phi, perm_c);
  auto* perm_orbit = perm->add_subcommand("orbit", "FSS orbit of a permutation in E_n");
  perm_orbit->add_option("word", perm_arg, "One-line word")->required();
  add_format(perm_orbit, perm_c);
  auto* perm_psi = perm->add_subcommand("psi", "Apply one FSS move");
  perm_psi->add_option("word", perm_arg, "One-line word")->required();
  perm_psi->add_option("index", psi_index, "Double ascent or double descent")->required();
  add_format(perm_psi, perm_c);

  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  std::string suite = "all";
  int verify_max = 7;
  verify->add_option("--suite", suite, "tables, oracles, series or all")
      ->check(CLI::IsMember({"tables", "oracles", "series", "all"}))
      ->capture_default_str();
  verify->add_option("--max-n", verify_max, "Largest n or rank")->capture_default_str();
  add_format(verify, verify_c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::vector<OutputRecord> records;
    Common* common = nullptr;
    int code = kExitOk;

    if (cluster->parsed()) {
      common = &cluster_c;
      const CartanType t = parse_cartan_type(cluster_type);
      if (t.is_classical()) require_budget(t.rank(), max_rank, "rank", "--max-rank");
      records = local_h_records(t.name(), local_h_cluster(t, {max_rank, threads}), cluster_gamma);
    } else if (bary->parsed()) {
      common = &bary_c;
      require_budget(bary_n, bary_max, "n", "--max-n");
      records = local_h_records("barycentric", local_h_barycentric(bary_n, bary_max), bary_gamma);
      if (bary_interp) {
        const auto c = bary_xi_counts(bary_n, bary_max);
        records.push_back({RecordKind::PermCount, json{{"n", bary_n},
                                                       {"by_runs", int_array(c.by_runs)},
                                                       {"by_excedances", int_array(c.by_excedances)},
                                                       {"by_descents", int_array(c.by_descents)},
                                                       {"no_short_run", count_no_short_run(bary_n)}}});
      }
    } else if (hplus->parsed()) {
      common = &hplus_c;
      const CartanType t = parse_cartan_type(hplus_type);
      records.push_back({RecordKind::HPlus, json{{"type", t.name()}, {"h_plus", poly_json(h_plus(t))}}});
    } else if (nc_enum->parsed()) {
      common = &nc_c;
      const bool type_b = nc_kind == "B" || nc_kind == "b";
      const int limit = nc_max >= 0 ? nc_max : (type_b ? 6 : 10);
      require_budget(nc_n, limit, "n", "--max-n");
      const auto has = [&](std::string_view f) {
        return std::find(nc_filters.begin(), nc_filters.end(), f) != nc_filters.end();
      };
      if (!type_b && has("no-zero-block")) throw std::invalid_argument("--filter no-zero-block applies to kind B only");
      json listing = json::array();
      std::vector<std::int64_t> by_blocks(static_cast<std::size_t>(nc_n) + 1, 0);
      std::int64_t count = 0;
      const auto keep = [&](int size, const std::string& text) {
        ++count;
        ++by_blocks[static_cast<std::size_t>(size)];
        if (!nc_count_only) listing.push_back(text);
      };
      if (type_b) {
        for_each_nc_b(nc_n, [&](const SetPartitionB& p) {
          if (has("no-zero-block") && p.has_zero_block()) return;
          bool any_single = false;
          bool all_nested = true;
          for (int b = 1; b <= nc_n; ++b) {
            if (!p.is_singleton(b) && !p.is_singleton(-b)) continue;
            any_single = true;
            if (p.is_singleton(b) && !is_nested_singleton(p, b)) all_nested = false;
          }
          if (has("no-singleton") && any_single) return;
          if (has("nested-singletons") && !all_nested) return;
          keep(p.pair_count(), to_string(p));
        }, limit);
      } else {
        for_each_partition_a(nc_n, [&](const SetPartitionA& p) {
          if (!is_noncrossing(p)) return;
          if (has("no-singleton") && has_singleton(p)) return;
          if (has("nested-singletons") && !all_singletons_nested(p)) return;
          keep(p.block_count(), to_string(p));
        }, limit);
      }
      const json filters = nc_filters;
      const std::string kind = type_b ? "B" : "A";
      if (!nc_count_only)
        records.push_back({RecordKind::Partitions, json{{"kind", kind}, {"n", nc_n}, {"filters", filters}, {"partitions", listing}}});
      records.push_back({RecordKind::NcCount, json{{"kind", kind},
                                                   {"n", nc_n},
                                                   {"filters", filters},
                                                   {"count", count},
                                                   {type_b ? "by_pairs" : "by_blocks", int_array(by_blocks)}}});
    } else if (perm_stats->parsed()) {
      common = &perm_c;
      records.push_back({RecordKind::Perm, perm_stats_json(parse_word(perm_arg))});
    } else if (perm_phi->parsed()) {
      common = &perm_c;
      const Perm w = parse_any(perm_arg, perm_n);
      records.push_back({RecordKind::Perm, json{{"word", to_string(w)}, {"phi", to_string(foata_phi(w))}}});
    } else if (perm_orbit->parsed()) {
      common = &perm_c;
      const Perm w = parse_word(perm_arg);
      const auto orbit = fss_orbit(w);
      IntPoly des;
      json words = json::array();
      std::string rep;
      for (const auto& u : orbit) {
        const auto s = stats(u);
        des += IntPoly::monomial(1, static_cast<int>(s.descents.size()));
        if (s.double_descents.empty()) rep = to_string(u);
        words.push_back(to_string(u));
      }
      records.push_back({RecordKind::PermCount, json{{"word", to_string(w)},
                                                     {"size", orbit.size()},
                                                     {"representative", rep},
                                                     {"descent_polynomial", poly_json(des)},
                                                     {"orbit", words}}});
    } else if (perm_psi->parsed()) {
      common = &perm_c;
      const Perm w = parse_word(perm_arg);
      records.push_back({RecordKind::Perm, json{{"word", to_string(w)}, {"index", psi_index}, {"psi", to_string(fss_move(w, psi_index))}}});
    } else if (verify->parsed()) {
      common = &verify_c;
      const auto results = run_verification({parse_suite(suite), verify_max});
      json checks = json::array();
      int passed = 0;
      for (const auto& r : results) {
        passed += r.passed ? 1 : 0;
        checks.push_back(json{{"name", r.name},
                              {"anchor", r.anchor},
                              {"scope", r.scope},
                              {"passed", r.passed},
                              {"detail", r.detail},
                              {"seconds", r.seconds}});
      }
      const int failed = static_cast<int>(results.size()) - passed;
      records.push_back({RecordKind::VerifyReport, json{{"suite", suite},
                                                        {"max_n", verify_max},
                                                        {"passed", passed},
                                                        {"failed", failed},
                                                        {"checks", checks}}});
      if (failed > 0) code = kExitVerifyFailed;
    }

    out << render(records, parse_format(common->format));
    return code;
  } catch (const BudgetExceeded& e) {
    err << "localh: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    err << "localh: internal consistency check failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "localh: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace localh::cli
