#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "chains.hpp"
#include "embedding.hpp"
#include "errors.hpp"
#include "hob_characters.hpp"
#include "reduction.hpp"
#include "serialize.hpp"
#include "sym_characters.hpp"
#include "verify.hpp"

namespace hyperbranch::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr int max_sym_degree = 12;
inline constexpr int max_hyperoct_degree = 6;
inline constexpr int max_oracle_degree = 4;
inline constexpr int max_oracle_degree_slow = 5;

struct Options
{
  std::string format = "pretty";
  std::string cache_dir;
  bool no_cache = false;
  bool quiet = false;
  bool allow_slow = false;
};

namespace detail {

inline void require_range(std::string const& what, int n, int lo, int hi)
{
  if (n < lo || n > hi)
    throw DomainError(what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "], got " + std::to_string(n));
}

inline std::optional<TableCache> open_cache(Options const& opt, std::ostream& err)
{
  if (opt.no_cache)
    return std::nullopt;
  std::string dir = opt.cache_dir;
  if (dir.empty())
    if (char const* env = std::getenv(cache_env_var))
      dir = env;
  if (dir.empty())
    return std::nullopt;
  return TableCache(dir, opt.quiet ? nullptr : &err);
}

inline TableDocument cached(Options const& opt, std::ostream& err, CacheKey const& key,
                            std::function<TableDocument()> const& compute)
{
  auto cache = open_cache(opt, err);
  if (cache)
    if (auto hit = cache->lookup(key))
      return *hit;
  TableDocument doc = compute();
  if (cache)
    cache->store(key, doc);
  return doc;
}

inline void emit(Options const& opt, std::ostream& out, TableDocument const& doc)
{
  if (opt.format == "json")
    out << to_json(doc).dump(2) << '\n';
  else if (opt.format == "csv")
    out << to_csv(doc);
  else if (opt.format == "latex")
    out << to_latex(doc);
  else
    out << to_pretty(doc);
}

inline void emit_classes(Options const& opt, std::ostream& out, std::string const& group, int n,
                         std::vector<std::pair<std::string, Integer>> const& classes)
{
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["group"] = group;
    j["n"] = n;
    j["classes"] = nlohmann::json::array();
    for (auto const& [label, order] : classes)
      j["classes"].push_back({{"label", label}, {"order", to_int64(order)}});
    out << j.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "class,order\r\n";
    for (auto const& [label, order] : classes)
      out << hyperbranch::detail::csv_field(label) << ',' << order << "\r\n";
  } else if (opt.format == "latex") {
    out << "\\begin{tabular}{|l|r|}\n\\hline\nclass & order \\\\\n\\hline\n";
    for (auto const& [label, order] : classes)
      out << label << " & " << order << " \\\\\n\\hline\n";
    out << "\\end{tabular}\n";
  } else {
    std::size_t w = 5;
    for (auto const& c : classes)
      w = std::max(w, c.first.size());
    out << group << ' ' << n << " classes\n";
    for (auto const& [label, order] : classes)
      out << label << std::string(w - label.size() + 2, ' ') << order << '\n';
  }
}

inline std::string describe(Report const& r)
{
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.check << " n=" << r.n;
  if (!r.detail.empty())
    os << " (" << r.detail << ')';
  if (r.first_mismatch)
    os << " first mismatch at [" << r.first_mismatch->row_label << ", "
       << r.first_mismatch->col_label << "]: " << r.first_mismatch->lhs << " vs "
       << r.first_mismatch->rhs;
  return os.str();
}

inline std::vector<Report> run_checks(std::string const& check, int n, Options const& opt)
{
  bool const all = check == "all";
  if (check == "oracle" || all)
    require_range("oracle N", n, 1, opt.allow_slow ? max_oracle_degree_slow : max_oracle_degree);
  ReductionContext ctx(n);
  std::vector<Report> reports;
  if (check == "eq8" || all)
    reports.push_back(verify_consistency(ctx));
  if (check == "method-b" || all)
    reports.push_back(method_b_verify(ctx));
  if (check == "orthogonality" || all)
    for (auto& r : orthogonality_reports(ctx))
      reports.push_back(std::move(r));
  if (check == "oracle" || all)
    for (auto& r : oracle_reports(ctx))
      reports.push_back(std::move(r));
  return reports;
}

} // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns 0 on success, 1 if a verification failed, 2 on usage or domain errors.
inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Character tables of S_2N and W(B_N) and the branching S_2N -> W(B_N)",
               "hyperbranch"};
  app.fallthrough();
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
    ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}));
  app.add_option("--cache-dir", opt.cache_dir,
                 std::string("Table cache directory (default: $") + cache_env_var + ")");
  app.add_flag("--no-cache", opt.no_cache, "Disable the table cache");
  app.add_flag("--quiet", opt.quiet, "Suppress warnings and verification detail");
  app.add_flag("--allow-slow", opt.allow_slow, "Allow oracle runs at N = 5");

  std::string group;
  std::string kind;
  std::string check;
  int n = 0;
  int max_n = 0;

  auto* classes = app.add_subcommand("classes", "List conjugacy classes with their orders");
  classes->add_option("--group", group)->required()->check(CLI::IsMember({"sym", "hyperoct"}));
  classes->add_option("--n", n)->required();

  auto* table = app.add_subcommand("table", "Induced or irreducible character table");
  table->add_option("--group", group)->required()->check(CLI::IsMember({"sym", "hyperoct"}));
  table->add_option("--n", n)->required();
  table->add_option("--kind", kind)->required()->check(CLI::IsMember({"induced", "irreducible"}));

  auto* branch = app.add_subcommand("branch", "Branching matrix R1 or R2 for S_2N -> W(B_N)");
  branch->add_option("--n", n)->required();
  branch->add_option("--kind", kind)->required()->check(CLI::IsMember({"irreducible", "induced"}));

  auto* fchar = app.add_subcommand("fchar", "Permutation character of S_2N on cosets of W(B_N)");
  fchar->add_option("--n", n)->required();

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("--check", check)
    ->required()
    ->check(CLI::IsMember({"eq8", "method-b", "oracle", "orthogonality", "all"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--max-n", max_n);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*classes) {
      std::vector<std::pair<std::string, Integer>> rows;
      if (group == "sym") {
        detail::require_range("sym degree", n, 1, max_sym_degree);
        for (auto const& c : sym_classes(n))
          rows.emplace_back(c.type.to_string(), c.order);
      } else {
        detail::require_range("hyperoct degree", n, 1, max_hyperoct_degree);
        for (auto const& c : hob_classes(n))
          rows.emplace_back(c.alpha.to_string(), c.order);
      }
      detail::emit_classes(opt, out, group, n, rows);
      return exit_ok;
    }

    if (*table) {
      if (group == "sym")
        detail::require_range("sym degree", n, 1, max_sym_degree);
      else
        detail::require_range("hyperoct degree", n, 1, max_hyperoct_degree);
      auto doc = detail::cached(opt, err, {group, n, kind, {}}, [&] {
        CharacterTable t;
        if (group == "sym")
          t = kind == "induced" ? sym_induced_table(n) : sym_irreducible_table(n).table;
        else
          t = kind == "induced" ? hob_induced_table(n) : hob_irreducible_table(n).table;
        return make_document(t, group, n, kind);
      });
      detail::emit(opt, out, doc);
      return exit_ok;
    }

    if (*branch) {
      detail::require_range("N", n, 1, max_hyperoct_degree);
      auto doc = detail::cached(opt, err, {"sym", n, "branching", kind}, [&] {
        ReductionContext ctx(n);
        return make_document(kind == "irreducible" ? ctx.irreducible_branching()
                                                   : ctx.induced_branching(),
                             n, kind);
      });
      detail::emit(opt, out, doc);
      return exit_ok;
    }

    if (*fchar) {
      detail::require_range("N", n, 1, max_hyperoct_degree);
      auto doc = detail::cached(opt, err, {"sym", n, "fchar", {}}, [&] {
        return make_document(permutation_character_table(n), "sym", n, "fchar");
      });
      detail::emit(opt, out, doc);
      return exit_ok;
    }

    // verify
    if (max_n == 0)
      max_n = n;
    detail::require_range("N", n, 1, max_hyperoct_degree);
    detail::require_range("--max-n", max_n, n, max_hyperoct_degree);
    std::vector<Report> reports;
    for (int k = n; k <= max_n; ++k)
      for (auto& r : detail::run_checks(check, k, opt))
        reports.push_back(std::move(r));
    bool const ok = std::all_of(reports.begin(), reports.end(), [](Report const& r) { return r.pass; });
    if (opt.format == "json") {
      auto arr = nlohmann::json::array();
      for (auto const& r : reports)
        arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
    } else if (!opt.quiet) {
      for (auto const& r : reports)
        out << detail::describe(r) << '\n';
    }
    return ok ? exit_ok : exit_check_failed;
  } catch (DomainError const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (ComputationError const& e) {
    err << "computation error: " << e.what() << '\n';
    return exit_check_failed;
  }
}

} // namespace hyperbranch::cli
