// Acceptance gate: one PASS/FAIL line per criterion, failing sub-checks
// listed underneath. Exit status is non-zero if any criterion fails.

#include <hyperbranch/cache.hpp>
#include <hyperbranch/hyperbranch.hpp>

#include <sys/resource.h>

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

using namespace hyperbranch;
namespace t = hyperbranch::testing;
namespace fs = std::filesystem;

namespace {

struct Check
{
  std::string name;
  bool pass;
  std::string detail;
};

class Criterion
{
public:
  Criterion(int id, std::string title)
  : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now())
  {}

  void check(std::string name, bool pass, std::string detail = {})
  {
    checks_.push_back({std::move(name), pass, std::move(detail)});
  }

  void report(Report const& r)
  {
    std::string detail = r.detail;
    if (r.first_mismatch)
      detail += " first mismatch [" + r.first_mismatch->row_label + ", " +
                r.first_mismatch->col_label + "]: " + r.first_mismatch->lhs.str() + " vs " +
                r.first_mismatch->rhs.str();
    check(r.check + " n=" + std::to_string(r.n), r.pass, detail);
  }

  /// Runs `body`, turning any exception into a failed check.
  void guard(std::string const& name, std::function<void()> const& body)
  {
    try {
      body();
    } catch (std::exception const& e) {
      check(name, false, std::string("threw: ") + e.what());
    }
  }

  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void time_limit(double limit, std::string const& what)
  {
    double const s = seconds();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << " s (limit " << limit << " s)";
    check(what, s < limit, os.str());
  }

  bool finish(std::ostream& out) const
  {
    bool const ok = std::all_of(checks_.begin(), checks_.end(), [](Check const& c) { return c.pass; });
    std::size_t const failed =
      std::count_if(checks_.begin(), checks_.end(), [](Check const& c) { return !c.pass; });
    out << (ok ? "PASS" : "FAIL") << "  criterion " << id_ << ": " << title_ << " ["
        << checks_.size() - failed << "/" << checks_.size() << " checks, " << std::fixed
        << std::setprecision(2) << seconds() << " s]\n";
    for (auto const& c : checks_)
      if (!c.pass)
        out << "        FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return ok;
  }

private:
  int id_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Check> checks_;
};

bool equal(IntMatrix const& a, t::Rows const& rows) { return a == t::matrix(rows); }

template<typename T>
std::string join(std::vector<T> const& v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os.str();
}

Integer odd_double_factorial(int n)
{
  Integer r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2)
    r *= k;
  return r;
}

bool criterion1()
{
  Criterion c(1, "S4 golden tables phi, Delta, X");
  c.guard("S4", [&] {
    auto const phi = sym_induced_table(4);
    auto const irr = sym_irreducible_table(phi);
    c.check("phi", equal(phi.entries, t::s4_phi));
    c.check("Delta", irr.transition.matrix() == t::lower(t::s4_delta));
    c.check("X", equal(irr.table.entries, t::s4_x));
    c.check("sign row ends in -1", irr.table.entries(4, 4) == -1);
  });
  c.time_limit(1.0, "runtime");
  return c.finish(std::cout);
}

bool criterion2()
{
  Criterion c(2, "W(B2) golden tables and orthogonality");
  c.guard("W(B2)", [&] {
    auto const ind = hob_induced_table(2);
    auto const irr = hob_irreducible_table(ind);
    c.check("class orders", ind.class_orders == std::vector<Integer>{1, 2, 1, 2, 2},
            join(ind.class_orders));
    c.check("I", equal(ind.entries, t::b2_induced));
    c.check("unitriangular factor", irr.transition.matrix() == t::lower(t::b2_transition));
    c.check("Y", equal(irr.table.entries, t::b2_y));
    c.report(row_orthonormality("Y rows", 2, irr.table));
    c.report(column_orthogonality("Y columns", 2, irr.table));
  });
  c.time_limit(1.0, "runtime");
  return c.finish(std::cout);
}

bool criterion3()
{
  Criterion c(3, "permutation character on cosets of W(BN) and modified tables");
  c.guard("coset character", [&] {
    c.check("intersection orders N=2", intersection_orders(2) == std::vector<Integer>{1, 2, 3, 0, 2},
            join(intersection_orders(2)));
    c.check("F N=2", permutation_character(2) == std::vector<Integer>{3, 1, 3, 0, 1},
            join(permutation_character(2)));
    for (int n = 2; n <= 6; ++n) {
      auto const f0 = permutation_character(n)[0];
      c.check("F(identity) N=" + std::to_string(n), f0 == odd_double_factorial(n), f0.str());
    }
    for (int n = 1; n <= 5; ++n) {
      ReductionContext ctx(n);
      auto const& x = ctx.sym_irreducible().table;
      auto const f = permutation_character(n);
      auto const w = class_weights(x);
      auto const ps = partitions(2 * n);
      bool ok = true;
      std::size_t constituents = 0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        Rational const m = inner_product(f, x.entries.row(i), w);
        ok = ok && m == Rational(ps[i].all_parts_even() ? 1 : 0);
        if (m != 0)
          ++constituents;
      }
      c.check("<F, chi> indicator N=" + std::to_string(n), ok);
      c.check("constituents = p(N) N=" + std::to_string(n),
              constituents == partitions(n).size() && constituents == even_partition_count(2 * n),
              std::to_string(constituents));
      c.report(verify_modified_factorization(ctx));
    }
    ReductionContext two(2);
    c.check("X' N=2", equal(two.modified_irreducible().entries, t::s4_x_modified));
    c.check("phi' N=2", equal(two.modified_induced().entries, t::s4_phi_modified));
  });
  return c.finish(std::cout);
}

bool criterion4()
{
  Criterion c(4, "S4 -> W(B2) reduction and the R2*T = Delta*R1 relation");
  c.guard("reduction", [&] {
    ReductionContext ctx(2);
    c.check("R1 N=2", equal(ctx.irreducible_branching().entries, t::r1_n2));
    c.check("R2 N=2", equal(ctx.induced_branching().entries, t::r2_n2));
    for (int n = 1; n <= 5; ++n)
      c.report(verify_consistency(n));
  });
  return c.finish(std::cout);
}

bool criterion5()
{
  Criterion c(5, "S6 -> W(B3) branching and chain identity");
  c.guard("S6", [&] {
    ReductionContext ctx(3);
    c.check("R1 N=3 (11x10)", equal(ctx.irreducible_branching().entries, t::r1_n3));
    c.check("W(B3)->W(B1) chain (10x2)", equal(hob_chain(3).entries, t::b3_b1));
    c.check("S6->S2 chain (11x2)", equal(weyl_chain(6, 2).entries, t::weyl_s6_s2));
    c.report(method_b_verify(ctx));
  });
  c.time_limit(5.0, "runtime N=3");
  c.guard("method B", [&] {
    for (int n = 1; n <= 4; ++n)
      c.report(method_b_verify(n));
  });
  return c.finish(std::cout);
}

bool criterion6(bool slow)
{
  Criterion c(6, std::string("brute-force oracle agreement, N=2,3") + (slow ? ",4" : " (N=4 with --slow)"));
  for (int n = 2; n <= (slow ? 4 : 3); ++n)
    c.guard("oracle N=" + std::to_string(n), [&] {
      ReductionContext ctx(n);
      auto const reports = oracle_reports(ctx);
      for (auto const& r : reports)
        c.report(r);
      c.check("oracle report count N=" + std::to_string(n), reports.size() == 4);
    });
  return c.finish(std::cout);
}

bool criterion7()
{
  Criterion c(7, "structural properties N<=5 (tables), N<=6 (counts)");
  for (int n = 1; n <= 6; ++n)
    c.guard("counts N=" + std::to_string(n), [&] {
      std::string const tag = " N=" + std::to_string(n);
      Integer sym_total = 0;
      for (auto const& k : sym_classes(2 * n))
        sym_total += k.order;
      Integer hob_total = 0;
      for (auto const& k : hob_classes(n))
        hob_total += k.order;
      c.check("S_2N class orders sum" + tag, sym_total == factorial(2 * n));
      c.check("W(BN) class orders sum" + tag, hob_total == hyperoctahedral_order(n));
    });
  for (int n = 1; n <= 5; ++n)
    c.guard("tables N=" + std::to_string(n), [&] {
      std::string const tag = " N=" + std::to_string(n);
      ReductionContext ctx(n);
      auto const& delta = ctx.sym_irreducible().transition.matrix();
      auto const& tb = ctx.hob_irreducible().transition.matrix();
      c.check("det Delta = 1, unit lower triangular" + tag,
              is_lower_unitriangular(delta) && determinant(delta) == 1);
      c.check("det T = 1, unit lower triangular" + tag,
              is_lower_unitriangular(tb) && determinant(tb) == 1);
      for (auto const& r : orthogonality_reports(ctx))
        c.report(r);

      auto const& r1 = ctx.irreducible_branching();
      auto const& r2 = ctx.induced_branching();
      c.check("R1 non-negative integers" + tag, r1.non_negative());
      std::string negatives;
      for (std::size_t i = 0; i < r2.entries.rows(); ++i)
        for (std::size_t k = 0; k < r2.entries.cols(); ++k)
          if (r2.entries(i, k) < 0 && negatives.size() < 120)
            negatives += (negatives.empty() ? "" : " ") + std::string("[") + r2.row_labels[i] + ", " +
                         r2.col_labels[k] + "]=" + r2.entries(i, k).str();
      c.check("R2 non-negative integers" + tag, r2.non_negative(), negatives);

      auto const& x = ctx.sym_irreducible().table;
      auto const& y = ctx.hob_irreducible().table;
      bool degrees = true;
      for (std::size_t i = 0; i < x.rows(); ++i) {
        Integer d = 0;
        for (std::size_t k = 0; k < y.rows(); ++k)
          d += r1.entries(i, k) * y.entries(k, 0);
        degrees = degrees && d == x.entries(i, 0);
      }
      c.check("sum R1*deg(Y) = deg(chi)" + tag, degrees);
    });
  return c.finish(std::cout);
}

void full_pipeline(Criterion& c, int n)
{
  ReductionContext ctx(n);
  (void)ctx.sym_irreducible();
  (void)ctx.hob_irreducible();
  (void)ctx.irreducible_branching();
  (void)ctx.induced_branching();
  c.report(verify_consistency(ctx));
  c.report(method_b_verify(ctx));
}

bool criterion8()
{
  Criterion c(8, "performance of the full pipeline");
  for (auto [n, limit] : {std::pair{4, 10.0}, std::pair{5, 120.0}}) {
    auto const start = std::chrono::steady_clock::now();
    c.guard("pipeline N=" + std::to_string(n), [&] { full_pipeline(c, n); });
    double const s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << s << " s (limit " << limit << " s)";
    c.check("runtime N=" + std::to_string(n), s < limit, os.str());
  }
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  long const mib = usage.ru_maxrss / 1024;
  c.check("peak memory", mib < 1024, std::to_string(mib) + " MiB");
  return c.finish(std::cout);
}

bool criterion9()
{
  Criterion c(9, "serialization round trips and cache");
  c.guard("formats", [&] {
    std::size_t count = 0;
    bool json_ok = true;
    bool grid_ok = true;
    for (int n = 1; n <= 4; ++n) {
      ReductionContext ctx(n);
      std::vector<TableDocument> docs;
      for (int m : {n, 2 * n}) {
        auto const irr = sym_irreducible_table(m);
        docs.push_back(make_document(sym_induced_table(m), "sym", m, "induced"));
        docs.push_back(make_document(irr.table, "sym", m, "irreducible"));
        docs.push_back(make_document(irr.transition, irr.table.row_labels, "sym", m));
      }
      docs.push_back(make_document(ctx.hob_induced(), "hyperoct", n, "induced"));
      docs.push_back(make_document(ctx.hob_irreducible().table, "hyperoct", n, "irreducible"));
      docs.push_back(make_document(ctx.hob_irreducible().transition,
                                   ctx.hob_irreducible().table.row_labels, "hyperoct", n));
      docs.push_back(make_document(ctx.modified_induced(), "sym", n, "modified-induced"));
      docs.push_back(make_document(ctx.modified_irreducible(), "sym", n, "modified-irreducible"));
      docs.push_back(make_document(permutation_character_table(n), "sym", n, "fchar"));
      docs.push_back(make_document(ctx.irreducible_branching(), n, "irreducible"));
      docs.push_back(make_document(ctx.induced_branching(), n, "induced"));
      for (auto const& d : docs) {
        ++count;
        auto const back = parse_document(to_json(d).dump());
        json_ok = json_ok && back == d;
        for (auto const& g : {parse_csv(to_csv(d)), parse_latex(to_latex(d))})
          grid_ok = grid_ok && g.entries == back.entries && g.row_labels == back.row_labels &&
                    g.col_labels == back.col_labels;
      }
    }
    c.check("JSON round trip (" + std::to_string(count) + " tables)", json_ok);
    c.check("CSV/LaTeX integers equal JSON", grid_ok);
  });
  c.guard("cache", [&] {
    auto const dir = fs::temp_directory_path() / "hyperbranch-acceptance-cache";
    fs::remove_all(dir);
    std::ostringstream warnings;
    TableCache cache(dir, &warnings);
    CacheKey const key{"sym", 3, "branching", "irreducible"};
    auto const doc = make_document(reduce_irreducible(3), 3, "irreducible");
    c.check("cache store", cache.store(key, doc));
    auto const hit = cache.lookup(key);
    c.check("cache round trip identity", hit && *hit == doc);
    {
      std::ofstream out(dir / key.filename(), std::ios::trunc);
      out << "{\"schema_version\": 1, \"entr";
    }
    bool const missed = !cache.lookup(key);
    bool const warned = warnings.str().find("corrupted") != std::string::npos;
    bool const restored = cache.store(key, doc) && cache.lookup(key) == doc;
    c.check("corrupted cache recovery", missed && warned && restored);
    fs::remove_all(dir);
  });
  return c.finish(std::cout);
}

} // namespace

int main(int argc, char** argv)
{
  bool slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else {
      std::cerr << "usage: acceptance [--slow]\n";
      return 2;
    }
  }
  bool ok = true;
  ok &= criterion1();
  ok &= criterion2();
  ok &= criterion3();
  ok &= criterion4();
  ok &= criterion5();
  ok &= criterion6(slow);
  ok &= criterion7();
  ok &= criterion8();
  ok &= criterion9();
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << '\n';
  return ok ? 0 : 1;
}
