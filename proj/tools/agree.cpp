// Command-line harness for r-wise agreeing family experiments: predicate
// checks, squashing runs, closed-form constructions, exact searches and
// reproduction tables.
//
// Exit codes: 0 success / property holds, 1 a checked property fails,
// 2 usage or parse error, 3 search was cut short (inexact).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "agree/constructions.hpp"
#include "agree/json_io.hpp"
#include "agree/predicates.hpp"
#include "agree/search.hpp"
#include "agree/squash.hpp"

namespace {

using nlohmann::json;

int default_jobs() {
  if (const char* env = std::getenv("AGREE_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

agree::Family load_family(const std::string& path) {
  if (path == "-") return agree::family_from_stream(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw agree::ParseError(path + ": cannot open file");
  return agree::family_from_stream(in, path);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

agree::Mask mask_from_list(const std::vector<int>& coords, int n) {
  return agree::mask_from_coords(coords, agree::GroundSet(n));
}

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// "4" or "3..5"
IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "' (use N or LO..HI)");
  }
}

long long elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int run_check(const std::string& file, int r, int t,
              const std::vector<std::string>& required) {
  const agree::Family fam = load_family(file);

  const auto agreeing_witness = agree::find_agreeing_violation(fam, r, t);
  const auto union_witness = agree::find_union_violation(fam, r, t);
  const bool agreeing = !agreeing_witness.has_value();
  const bool nontrivial = agree::is_nontrivial(fam);
  const bool union_ok = !union_witness.has_value();
  const bool down_closed = agree::is_down_closed(fam);

  bool holds = true;
  for (const std::string& name : required) {
    if (name == "agreeing") {
      holds = holds && agreeing;
    } else if (name == "nontrivial") {
      holds = holds && nontrivial;
    } else if (name == "union") {
      holds = holds && union_ok;
    } else if (name == "down-closed") {
      holds = holds && down_closed;
    } else {
      throw std::invalid_argument("unknown predicate '" + name +
                                  "' (use agreeing, nontrivial, union, "
                                  "down-closed)");
    }
  }

  json report;
  report["n"] = fam.n();
  report["size"] = fam.size();
  report["r"] = r;
  report["t"] = t;
  report["agreeing"] = agreeing;
  report["nontrivial"] = nontrivial;
  report["union"] = union_ok;
  report["down_closed"] = down_closed;
  report["agreeing_witness"] =
      agreeing_witness ? agree::witness_to_json(*agreeing_witness, fam.ground())
                       : json(nullptr);
  report["union_witness"] =
      union_witness ? agree::witness_to_json(*union_witness, fam.ground())
                    : json(nullptr);
  report["required"] = required;
  report["holds"] = holds;
  emit(std::cout, report);
  return holds ? 0 : 1;
}

int run_squash(const std::string& file, bool keep_families, bool hex) {
  const agree::Family fam = load_family(file);
  auto [final_family, trace] = agree::squash_all(fam, keep_families);
  json out;
  out["trace"] = agree::trace_to_json(trace);
  out["final"] = agree::family_to_json(final_family, hex);
  emit(std::cout, out);
  return 0;
}

void print_construct_summary(const agree::Family& fam, std::optional<int> r,
                             std::optional<int> t) {
  std::ostringstream line;
  line << "size=" << fam.size()
       << " nontrivial=" << (agree::is_nontrivial(fam) ? "true" : "false")
       << " down_closed=" << (agree::is_down_closed(fam) ? "true" : "false");
  if (r && t) {
    line << " agreeing(r=" << *r << ",t=" << *t << ")="
         << (agree::is_r_wise_t_agreeing(fam, *r, *t) ? "true" : "false")
         << " union=" << (agree::is_r_wise_t_union(fam, *r, *t) ? "true" : "false");
  }
  std::cerr << line.str() << "\n";
}

int run_search(const agree::SearchParams& params, bool oracle) {
  const auto start = std::chrono::steady_clock::now();
  const agree::SearchResult res =
      oracle ? agree::brute_force_oracle(params) : agree::max_agreeing(params);
  json out;
  out["meta"] = {{"elapsed_ms", elapsed_ms_since(start)}};
  out["result"] = agree::search_result_to_json(res);
  emit(std::cout, out);
  return res.exact ? 0 : 3;
}

int run_table(const IntRange& nr, const IntRange& rr, const IntRange& tr,
              const std::string& format, const std::string& output, int jobs) {
  struct Row {
    int n, r, t;
    std::int64_t bound;
    int w_star;
    bool match;
    std::uint64_t nodes;
    long long elapsed_ms;
    bool exact;
  };
  std::vector<Row> rows;
  std::vector<json> skipped;
  bool all_exact = true;

  for (int n = nr.lo; n <= nr.hi; ++n) {
    for (int r = rr.lo; r <= rr.hi; ++r) {
      for (int t = tr.lo; t <= tr.hi; ++t) {
        std::string reason;
        if (r < 2) {
          reason = "requires r >= 2";
        } else if (t < 1 || t > n) {
          reason = "requires 1 <= t <= n";
        } else if (n <= r) {
          reason = "requires n > r";
        } else if (n < r + t) {
          reason = "bound undefined for n < r + t";
        } else if (n > agree::kMaxSearchCoords) {
          reason = "search limited to n <= 24";
        }
        if (!reason.empty()) {
          skipped.push_back({{"n", n}, {"r", r}, {"t", t}, {"reason", reason}});
          std::cerr << "skipping n=" << n << " r=" << r << " t=" << t << ": "
                    << reason << "\n";
          continue;
        }
        agree::SearchParams p;
        p.n = n;
        p.r = r;
        p.t = t;
        p.require_nontrivial = true;
        p.jobs = jobs;
        const auto start = std::chrono::steady_clock::now();
        const agree::SearchResult res = agree::max_agreeing(p);
        const long long ms = elapsed_ms_since(start);
        const std::int64_t bound = agree::theorem_bound(n, r, t);
        rows.push_back({n, r, t, bound, res.optimum, res.optimum == bound,
                        res.stats.nodes_explored, ms, res.exact});
        if (!res.exact) {
          all_exact = false;
          std::cerr << "inexact cell n=" << n << " r=" << r << " t=" << t
                    << "\n";
        }
      }
    }
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    file_out.open(output);
    if (!file_out) throw std::invalid_argument("cannot open output file " + output);
    out = &file_out;
  }

  if (format == "csv") {
    *out << "n,r,t,bound,w_star,match,nodes,elapsed_ms\n";
    for (const Row& row : rows) {
      *out << row.n << ',' << row.r << ',' << row.t << ',' << row.bound << ','
           << row.w_star << ',' << (row.match ? "true" : "false") << ','
           << row.nodes << ',' << row.elapsed_ms << "\n";
    }
  } else {
    json doc;
    auto& arr = doc["rows"] = json::array();
    for (const Row& row : rows) {
      arr.push_back({{"n", row.n},
                     {"r", row.r},
                     {"t", row.t},
                     {"bound", row.bound},
                     {"w_star", row.w_star},
                     {"match", row.match},
                     {"nodes", row.nodes},
                     {"elapsed_ms", row.elapsed_ms},
                     {"exact", row.exact}});
    }
    doc["skipped"] = skipped;
    emit(*out, doc);
  }
  return all_exact ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search and verification for r-wise agreeing set "
               "families on the Boolean hypercube"};
  app.require_subcommand(1);
  int exit_code = 0;

  // check
  auto* check = app.add_subcommand(
      "check", "evaluate the agreeing/nontrivial/union/down-closed "
               "predicates of a family file");
  std::string check_file;
  int check_r = 2, check_t = 1;
  std::vector<std::string> check_required = {"agreeing", "nontrivial"};
  check->add_option("family", check_file, "family JSON file ('-' for stdin)")
      ->required();
  check->add_option("-r,--arity", check_r, "tuple arity r")->required();
  check->add_option("-t,--agreement", check_t, "agreement demand t")->required();
  check->add_option("--require", check_required,
                    "predicates that drive the exit status")
      ->delimiter(',');
  check->callback([&] { exit_code = run_check(check_file, check_r, check_t,
                                              check_required); });

  // squash
  auto* squash = app.add_subcommand(
      "squash", "run the sequential squashing pass and emit its trace");
  std::string squash_file;
  bool squash_keep = false, squash_hex = false;
  squash->add_option("family", squash_file, "family JSON file ('-' for stdin)")
      ->required();
  squash->add_flag("--keep-families", squash_keep,
                   "store the full family after every step in the trace");
  squash->add_flag("--hex", squash_hex, "emit the final family in hex form");
  squash->callback(
      [&] { exit_code = run_squash(squash_file, squash_keep, squash_hex); });

  // construct
  auto* construct =
      app.add_subcommand("construct", "emit a closed-form family as JSON");
  construct->require_subcommand(1);
  bool construct_hex = false;
  construct->add_flag("--hex", construct_hex, "emit masks instead of sets");

  auto* cbd = construct->add_subcommand("brace-daykin",
                                        "all sets meeting [r+t] in at most "
                                        "one element");
  int cbd_n = 0, cbd_r = 0, cbd_t = 0;
  cbd->add_option("-n", cbd_n, "ground set size")->required();
  cbd->add_option("-r", cbd_r, "tuple arity")->required();
  cbd->add_option("-t", cbd_t, "agreement demand")->required();
  cbd->callback([&] {
    const agree::Family fam = agree::brace_daykin(cbd_n, cbd_r, cbd_t);
    print_construct_summary(fam, cbd_r, cbd_t);
    emit(std::cout, agree::family_to_json(fam, construct_hex));
  });

  auto* ctw = construct->add_subcommand(
      "twisted", "generalized extremal family, XOR-ed by a twist inside its "
                 "profile set");
  int ctw_n = 0;
  std::vector<int> ctw_profile, ctw_twist;
  std::optional<int> ctw_r, ctw_t;
  ctw->add_option("-n", ctw_n, "ground set size")->required();
  ctw->add_option("-A,--profile", ctw_profile, "profile coordinates")
      ->required()
      ->delimiter(',');
  ctw->add_option("-R,--twist", ctw_twist, "twist coordinates (subset of A)")
      ->delimiter(',');
  ctw->add_option("--check-r", ctw_r, "report the agreeing predicate for this r");
  ctw->add_option("--check-t", ctw_t, "report the agreeing predicate for this t");
  ctw->callback([&] {
    const agree::Family fam =
        agree::twisted(ctw_n, mask_from_list(ctw_profile, ctw_n),
                       mask_from_list(ctw_twist, ctw_n));
    print_construct_summary(fam, ctw_r, ctw_t);
    emit(std::cout, agree::family_to_json(fam, construct_hex));
  });

  auto* cpar = construct->add_subcommand("parity",
                                         "all sets of even cardinality");
  int cpar_n = 0;
  cpar->add_option("-n", cpar_n, "ground set size")->required();
  cpar->callback([&] {
    const agree::Family fam = agree::parity_family(cpar_n);
    print_construct_summary(fam, 2, 1);
    emit(std::cout, agree::family_to_json(fam, construct_hex));
  });

  auto* cfix = construct->add_subcommand(
      "fixed", "all sets containing the given coordinates");
  int cfix_n = 0;
  std::vector<int> cfix_coords;
  cfix->add_option("-n", cfix_n, "ground set size")->required();
  cfix->add_option("-T,--coords", cfix_coords, "fixed coordinates")
      ->required()
      ->delimiter(',');
  cfix->callback([&] {
    const agree::Family fam =
        agree::fixed_coords(cfix_n, mask_from_list(cfix_coords, cfix_n));
    print_construct_summary(fam, 2, static_cast<int>(cfix_coords.size()));
    emit(std::cout, agree::family_to_json(fam, construct_hex));
  });

  // search
  auto* search = app.add_subcommand(
      "search", "exact maximum size of an r-wise t-agreeing family");
  agree::SearchParams sp;
  bool search_oracle = false;
  std::uint64_t search_node_limit = 0;
  sp.jobs = default_jobs();
  search->add_option("-n", sp.n, "ground set size (<= 24; oracle <= 5)")
      ->required();
  search->add_option("-r", sp.r, "tuple arity")->required();
  search->add_option("-t", sp.t, "agreement demand")->required();
  search->add_flag("--nontrivial", sp.require_nontrivial,
                   "restrict to non-trivial families (empty intersection, "
                   "full union)");
  search->add_flag("--all-max", sp.enumerate_all_maximum,
                   "enumerate all maximum families up to signed permutation "
                   "(n <= 8)");
  search->add_flag("--oracle", search_oracle,
                   "use the exhaustive baseline instead of branch and bound");
  search->add_option("--jobs", sp.jobs, "worker count (1 = deterministic)");
  search->add_option("--node-limit", search_node_limit,
                     "abort after this many nodes (result marked inexact)");
  search->callback([&] {
    if (search_node_limit > 0) sp.node_limit = search_node_limit;
    exit_code = run_search(sp, search_oracle);
  });

  // table
  auto* table = app.add_subcommand(
      "table", "tabulate the search optimum against the extremal bound over "
               "parameter ranges");
  std::string table_n = "3..5", table_r = "2", table_t = "1";
  std::string table_format = "csv", table_output;
  int table_jobs = default_jobs();
  table->add_option("--n", table_n, "n range (N or LO..HI)");
  table->add_option("--r", table_r, "r range");
  table->add_option("--t", table_t, "t range");
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_option("-o,--output", table_output, "output file (default stdout)");
  table->add_option("--jobs", table_jobs, "worker count per cell");
  table->callback([&] {
    exit_code = run_table(parse_range(table_n), parse_range(table_r),
                          parse_range(table_t), table_format, table_output,
                          table_jobs);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const agree::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
