#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "gwsym/closed_form.hpp"
#include "gwsym/curve_classes.hpp"
#include "gwsym/expr.hpp"
#include "gwsym/hodge.hpp"
#include "gwsym/power.hpp"

using namespace gwsym;

namespace {

FieldDesc parse_field(const std::string& s) {
  if (s == "Q") return FieldDesc::Q();
  if (s == "R") return FieldDesc::R();
  if (s.size() > 1 && s[0] == 'F') {
    std::int64_t p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw Error(ErrorKind::Domain, "bad field '" + s + "'");
      p = p * 10 + (s[i] - '0');
    }
    return FieldDesc::Fp(p);
  }
  throw Error(ErrorKind::Domain, "bad field '" + s + "' (expected Q, R or F<p>)");
}

std::string disc_str(const GWInvariants& inv) { return "<" + inv.discriminant.str() + ">"; }

std::string sig_str(const GWInvariants& inv) {
  return inv.signature ? std::to_string(*inv.signature) : "-";
}

nlohmann::json invariants_json(const GWElement& x) {
  GWInvariants inv = invariants(x);
  nlohmann::json j;
  j["rank"] = inv.rank;
  if (inv.signature)
    j["signature"] = *inv.signature;
  else
    j["signature"] = nullptr;
  j["disc"] = to_mult(inv.discriminant.rep());
  return j;
}

// RFC 4180: quote a field, doubling embedded quotes.
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

GWElement chi_by_method(const std::string& method, std::int64_t g, std::int64_t n,
                        const FieldDesc& F) {
  if (method == "closed") return chi_sym_closed(g, n, F);
  if (method == "power") return a_n(chi_curve(g, F), n);
  if (F != FieldDesc::Q())
    throw Error(ErrorKind::Domain, "the oracle computes over Q only");
  return chi_sym_hodge(static_cast<int>(g), static_cast<int>(n));
}

int run_chi(std::int64_t g, std::int64_t n, const std::string& method, const std::string& format,
            const std::string& field) {
  FieldDesc F = parse_field(field);
  GWElement x = collapse_pm(chi_by_method(method, g, n, F));
  if (format == "text") {
    std::cout << render(x) << "\n";
    if (!F.is_function_field()) {
      GWInvariants inv = invariants(x);
      std::cout << "rank " << inv.rank << "  signature " << sig_str(inv) << "  disc "
                << disc_str(inv) << "\n";
    }
    return 0;
  }
  if (format == "csv") {
    GWInvariants inv = invariants(x);
    auto pm = as_pm_counts(x);
    std::cout << "g,n,rank,sig,disc,pm_plus,pm_minus\n";
    std::cout << g << "," << n << "," << inv.rank << "," << sig_str(inv) << ","
              << inv.discriminant.str() << ",";
    if (pm)
      std::cout << pm->first << "," << pm->second;
    else
      std::cout << ",";
    std::cout << "\n";
    return 0;
  }
  nlohmann::json j;
  j["g"] = g;
  j["n"] = n;
  j["method"] = method;
  j["element"] = gw_to_json(x);
  j["invariants"] = invariants_json(x);
  auto pm = as_pm_counts(x);
  if (pm) {
    j["pm"] = {pm->first, pm->second};
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int run_verify(std::int64_t gmax, std::int64_t nmax, const std::string& format) {
  const FieldDesc Q = FieldDesc::Q();
  // The oracle sweep stops at n = 6 (and g = 4) unless GWSYM_MAX_N explicitly raises it.
  const bool env_cap = std::getenv("GWSYM_MAX_N") != nullptr;
  const std::int64_t oracle_cap = env_cap ? oracle_max_n() : std::min(6, oracle_max_n());
  bool all_ok = true;
  struct Row {
    std::int64_t g, n;
    std::string closed, oracle, power, equal;
  };
  std::vector<Row> rows;
  for (std::int64_t g = 0; g <= gmax; ++g) {
    for (std::int64_t n = 0; n <= nmax; ++n) {
      Row row{g, n, "-", "-", "-", "yes"};
      GWElement pw = collapse_pm(a_n(chi_curve(g, Q), n));
      row.power = render(pw);
      bool ok = true;
      if (n == 0) {
        ok = is_equal(pw, GWElement::unit(Q));  // a_0 = 1
      } else {
        GWElement cl = collapse_pm(chi_sym_closed(g, n, Q));
        row.closed = render(cl);
        ok = is_equal(pw, cl);
        if (n % 2 == 0 && n >= 2 && g <= 4 && n <= oracle_cap) {
          GWElement orc = collapse_pm(chi_sym_hodge(static_cast<int>(g), static_cast<int>(n)));
          row.oracle = render(orc);
          ok = ok && is_equal(orc, cl);
        }
      }
      row.equal = ok ? "yes" : "NO";
      all_ok = all_ok && ok;
      rows.push_back(std::move(row));
    }
  }
  if (format == "csv") {
    std::cout << "g,n,closed,oracle,power,equal\n";
    for (const auto& r : rows)
      std::cout << r.g << "," << r.n << "," << csv_quote(r.closed) << "," << csv_quote(r.oracle)
                << "," << csv_quote(r.power) << "," << r.equal << "\n";
  } else {
    std::size_t wc = 6, wo = 6, wp = 5;
    for (const auto& r : rows) {
      wc = std::max(wc, r.closed.size());
      wo = std::max(wo, r.oracle.size());
      wp = std::max(wp, r.power.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size() + 2, ' ');
    };
    std::cout << pad("g", 1) << pad("n", 1) << pad("closed", wc) << pad("oracle", wo)
              << pad("power", wp) << "equal\n";
    for (const auto& r : rows)
      std::cout << pad(std::to_string(r.g), 1) << pad(std::to_string(r.n), 1)
                << pad(r.closed, wc) << pad(r.oracle, wo) << pad(r.power, wp) << r.equal << "\n";
  }
  std::cout << (all_ok ? "all cells pass" : "verification FAILED") << "\n";
  return all_ok ? 0 : 1;
}

int run_power(const std::string& form, std::int64_t n, const std::string& format,
              const std::string& field) {
  FieldDesc F = parse_field(field);
  GWElement x = to_gw(parse_gw(form), F);
  GWElement r = collapse_pm(a_n(x, n));
  if (format == "json")
    std::cout << gw_to_json(r).dump() << "\n";
  else
    std::cout << render(r) << "\n";
  return 0;
}

int run_eq(const std::string& lhs, const std::string& rhs, const std::string& field) {
  FieldDesc F = parse_field(field);
  bool eq = is_equal(to_gw(parse_gw(lhs), F), to_gw(parse_gw(rhs), F));
  std::cout << (eq ? "true" : "false") << "\n";
  return eq ? 0 : 1;
}

int run_traceform(const std::vector<std::string>& polys, const std::string& format) {
  std::vector<Poly> factors;
  factors.reserve(polys.size());
  for (const auto& s : polys) factors.push_back(parse_poly_x(s));
  GWElement r = trace_form(EtaleAlgebra(std::move(factors)));
  if (format == "json")
    std::cout << gw_to_json(r).dump() << "\n";
  else
    std::cout << render(r) << "\n";
  return 0;
}

int run_specialize(const std::string& form, const std::string& format) {
  FieldDesc Qt = FieldDesc::function_field(FieldDesc::Q());
  GWElement x = to_gw(parse_gw(form, /*allow_variable=*/true), Qt);
  GWElement r = specialize_t(x);
  if (format == "json")
    std::cout << gw_to_json(r).dump() << "\n";
  else
    std::cout << render(r) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadratic Euler characteristics of symmetric powers of curves in GW(k)"};
  app.require_subcommand(1);
  int rc = 0;

  std::int64_t g = 0, n = 0;
  std::string method = "closed", format = "text", field = "Q";
  std::string form, lhs, rhs;
  std::vector<std::string> polys;

  auto* chi = app.add_subcommand("chi", "Euler characteristic of Sym^n of a genus-g curve");
  chi->add_option("--genus", g, "genus")->required()->check(CLI::NonNegativeNumber);
  chi->add_option("--sym", n, "symmetric power")->required()->check(CLI::NonNegativeNumber);
  chi->add_option("--method", method, "closed | oracle | power")
      ->check(CLI::IsMember({"closed", "oracle", "power"}));
  chi->add_option("--format", format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  chi->add_option("--field", field, "Q | R | F<p>");
  chi->callback([&]() { rc = run_chi(g, n, method, format, field); });

  std::int64_t gmax = 4, nmax = 6;
  auto* verify = app.add_subcommand("verify", "closed formula vs oracle vs power structure");
  verify->add_option("--gmax", gmax, "largest genus")->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", nmax, "largest symmetric power")->check(CLI::NonNegativeNumber);
  verify->add_option("--format", format, "text | csv")->check(CLI::IsMember({"text", "csv"}));
  verify->callback([&]() { rc = run_verify(gmax, nmax, format); });

  auto* power = app.add_subcommand("power", "power-structure coefficient a_n of a form");
  power->add_option("--form", form, "GW expression, e.g. \"2<1> - <3>\"")->required();
  power->add_option("--n", n, "coefficient index")->required()->check(CLI::NonNegativeNumber);
  power->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  power->add_option("--field", field, "Q | R | F<p>");
  power->callback([&]() { rc = run_power(form, n, format, field); });

  auto* eq = app.add_subcommand("eq", "decide equality of two forms in GW");
  eq->add_option("lhs", lhs, "left expression")->required();
  eq->add_option("rhs", rhs, "right expression")->required();
  eq->add_option("--field", field, "Q | R | F<p>");
  eq->callback([&]() { rc = run_eq(lhs, rhs, field); });

  auto* tf = app.add_subcommand("traceform", "trace form of an etale algebra");
  tf->add_option("poly", polys, "monic squarefree integer polynomials in x")->required();
  tf->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  tf->callback([&]() { rc = run_traceform(polys, format); });

  auto* sp = app.add_subcommand("specialize", "specialization GW(Q(t)) -> GW(Q) at t = 0");
  sp->add_option("--form", form, "GW expression with t-classes, e.g. \"<3*t> + <t^2>\"")
      ->required();
  sp->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  sp->callback([&]() { rc = run_specialize(form, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // normalize usage errors; keep --help at 0
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
