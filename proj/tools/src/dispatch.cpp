#include "valkit/cli/dispatch.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "valkit/valkit.hpp"

namespace valkit::cli {

namespace {

using nlohmann::json;

/// Set by a leaf subcommand: what to run and how to print it as text.
struct Action {
  std::string command;
  std::function<json()> run;
  std::function<void(const json&, std::ostream&)> text;
};

std::uint64_t budget_or(std::uint64_t fallback) {
  if (const char* env = std::getenv("HF_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "HF_BUDGET must be a non-negative integer");
    }
  }
  return fallback;
}

json digits_json(const std::vector<std::int64_t>& digits) { return json(digits); }

json valuation_json(const Valuation& v) { return v.is_infinite() ? json("inf") : json(v.value()); }

json padic_json(const PadicNumber& x) {
  return {{"value", x.to_string()},
          {"prime", x.prime()},
          {"valuation", valuation_json(x.valuation())},
          {"digits", digits_json(x.unit_digits())},
          {"precision", x.precision()},
          {"residue", x.residue()},
          {"angular_component", x.angular_component()}};
}

json laurent_json(const LaurentSeries& x) {
  json coefficients = json::array();
  for (const auto& c : x.coefficients()) coefficients.push_back(to_string(c));
  json out{{"value", x.to_string()},
           {"field", x.field().name()},
           {"valuation", valuation_json(x.valuation())},
           {"coefficients", coefficients},
           {"residue", to_string(x.residue())},
           {"angular_component", to_string(x.angular_component())}};
  out["precision"] = x.precision() ? json(*x.precision()) : json("exact");
  return out;
}

// "7/2" -> "(7/2)" so the series parser reads the whole exponent
std::string paren(const std::string& exponent) {
  if (!exponent.empty() && exponent.front() == '(') return exponent;
  return "(" + exponent + ")";
}

json hahn_json(const HahnSeries& f) {
  json out{{"value", f.to_string()}, {"group", to_string(f.group())}, {"field", f.field().name()}};
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponent", e.to_string(f.group())}, {"coefficient", to_string(c)}});
  out["terms"] = terms;
  out["cap"] = f.cap() ? json(f.cap()->to_string(f.group())) : json(nullptr);
  if (f.is_zero() && f.cap()) {
    out["valuation"] = json(nullptr);
  } else {
    const auto v = f.valuation();
    out["valuation"] = v ? json(v->to_string(f.group())) : json("inf");
    out["residue"] = to_string(f.residue());
    out["angular_component"] = to_string(f.angular_component());
  }
  return out;
}

json bigints_json(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

json certificate_json(const PadicZeroCertificate& c) {
  json coordinates = json::array();
  for (const auto& x : c.coordinates) coordinates.push_back(x.to_string());
  return {{"prime", c.prime},
          {"representatives", bigints_json(c.representatives)},
          {"coordinates", coordinates},
          {"precision", c.precision},
          {"pivot", c.pivot + 1},
          {"pivot_gradient_valuation", valuation_json(c.pivot_gradient_valuation)},
          {"value_valuation", valuation_json(c.value_valuation)},
          {"primitive", c.primitive}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_fields(const json& payload, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, value] : payload.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : payload.items()) {
    out << std::left << std::setw(static_cast<int>(width)) << key << "  " << scalar_text(value) << '\n';
  }
}

std::vector<Prime> parse_prime_list(const std::string& text) {
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    return primes_in_range(std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2)));
  }
  std::vector<Prime> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "usage error: " << message << '\n';
  return 2;
}

bool is_usage_kind(ErrorKind kind) { return kind == ErrorKind::ParseError || kind == ErrorKind::InvalidArgument; }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"valkit: exact arithmetic in valued fields"};
  app.name("valkit");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON report instead of text");
  app.set_version_flag("--version", kVersion);

  Action action;
  json inputs = json::object();

  // padic
  auto* padic = app.add_subcommand("padic", "p-adic numbers");
  padic->require_subcommand(1);
  Prime padic_prime = 0;
  int padic_prec = kDefaultPrecision;
  std::string padic_expr, padic_text;
  auto* padic_eval = padic->add_subcommand("eval", "Expand a rational expression in Q_p");
  padic_eval->add_option("--prime,-p", padic_prime, "Prime p")->required();
  padic_eval->add_option("--expr,-e", padic_expr, "Expression such as (-1) or 3/50 + 2^-3")->required();
  padic_eval->add_option("--prec", padic_prec, "Relative precision (unit digits)");
  padic_eval->callback([&] {
    inputs = {{"prime", padic_prime}, {"expr", padic_expr}, {"prec", padic_prec}};
    action = {"padic eval", [&] { return padic_json(evaluate_padic_expression(padic_expr, padic_prime, padic_prec)); },
              print_fields};
  });
  auto* padic_parse = padic->add_subcommand("parse", "Read the p^v * (d0 + d1*p + ...) form back");
  padic_parse->add_option("--text", padic_text, "Rendered p-adic value")->required();
  padic_parse->add_option("--prime,-p", padic_prime, "Prime, needed when the text is 0");
  padic_parse->callback([&] {
    inputs = {{"text", padic_text}};
    action = {"padic parse",
              [&] {
                std::optional<Prime> p;
                if (padic_prime != 0) p = padic_prime;
                return padic_json(PadicNumber::parse(padic_text, p));
              },
              print_fields};
  });

  // series
  auto* series = app.add_subcommand("series", "Laurent series over Q or F_p");
  series->require_subcommand(1);
  std::string series_field = "Q", series_expr;
  std::int64_t series_prec = kDefaultPrecision;
  auto* series_eval = series->add_subcommand("eval", "Evaluate an expression in t");
  series_eval->add_option("--field,-f", series_field, "Q or a prime p for F_p");
  series_eval->add_option("--expr,-e", series_expr, "Expression such as 1/(1 - t)")->required();
  series_eval->add_option("--prec", series_prec, "Relative precision of inverses");
  series_eval->callback([&] {
    inputs = {{"field", series_field}, {"expr", series_expr}, {"prec", series_prec}};
    action = {"series eval",
              [&] {
                return laurent_json(
                    evaluate_series_expression(series_expr, CoefficientField::parse(series_field), series_prec));
              },
              print_fields};
  });

  // hensel
  auto* hensel = app.add_subcommand("hensel", "Hensel lifting and p-adic roots");
  hensel->require_subcommand(1);
  std::string hensel_poly, hensel_x;
  Prime hensel_prime = 0;
  std::int64_t hensel_seed = 0;
  std::int64_t hensel_prec = 10;
  std::uint32_t hensel_n = 2;
  auto lift_payload = [&](const UniPoly& poly, const LiftResult& r) {
    const BigInt modulus = prime_power(hensel_prime, r.achieved_precision);
    json out{{"root", r.root.to_string()},
             {"representative", to_string(r.representative)},
             {"root_digits", digits_json(base_p_digits(r.representative, hensel_prime,
                                                       static_cast<std::size_t>(r.achieved_precision)))},
             {"valuation", valuation_json(r.root.valuation())},
             {"achieved_precision", r.achieved_precision},
             {"residue_seed", r.residue_seed},
             {"checked", poly.evaluate(r.representative) % modulus == 0}};
    return out;
  };
  auto* hensel_lift = hensel->add_subcommand("lift", "Lift a simple root mod p");
  hensel_lift->add_option("--poly", hensel_poly, "Integer polynomial in one variable")->required();
  hensel_lift->add_option("--prime,-p", hensel_prime, "Prime p")->required();
  hensel_lift->add_option("--seed", hensel_seed, "Residue root in [0, p)")->required();
  hensel_lift->add_option("--prec", hensel_prec, "Target precision");
  hensel_lift->callback([&] {
    inputs = {{"poly", hensel_poly}, {"prime", hensel_prime}, {"seed", hensel_seed}, {"prec", hensel_prec}};
    action = {"hensel lift",
              [&] {
                const UniPoly poly = parse_univariate(hensel_poly);
                return lift_payload(poly, simple_zero_lift(poly, hensel_prime, hensel_seed, hensel_prec));
              },
              print_fields};
  });
  auto* hensel_strong = hensel->add_subcommand("strong", "Root near 0 when v(P(0)) > 2 v(P'(0))");
  hensel_strong->add_option("--poly", hensel_poly, "Integer polynomial in one variable")->required();
  hensel_strong->add_option("--prime,-p", hensel_prime, "Prime p")->required();
  hensel_strong->add_option("--prec", hensel_prec, "Target precision");
  hensel_strong->callback([&] {
    inputs = {{"poly", hensel_poly}, {"prime", hensel_prime}, {"prec", hensel_prec}};
    action = {"hensel strong",
              [&] {
                const UniPoly poly = parse_univariate(hensel_poly);
                json out = lift_payload(poly, strong_zero_lift(poly, hensel_prime, hensel_prec));
                const auto c0 = poly.coefficient(0), c1 = poly.coefficient(1);
                if (c0 != 0 && c1 != 0) {
                  out["expected_valuation"] = p_adic_order(c0, hensel_prime) - p_adic_order(c1, hensel_prime);
                }
                return out;
              },
              print_fields};
  });
  auto* hensel_root = hensel->add_subcommand("root", "n-th root with valuation v(x)/n");
  hensel_root->add_option("--x", hensel_x, "Rational expression")->required();
  hensel_root->add_option("--n", hensel_n, "Root index");
  hensel_root->add_option("--prime,-p", hensel_prime, "Prime p")->required();
  hensel_root->add_option("--prec", hensel_prec, "Relative precision");
  hensel_root->callback([&] {
    inputs = {{"x", hensel_x}, {"n", hensel_n}, {"prime", hensel_prime}, {"prec", hensel_prec}};
    action = {"hensel root",
              [&] {
                const int prec = static_cast<int>(hensel_prec);
                const auto x = evaluate_padic_expression(hensel_x, hensel_prime, prec);
                const auto a = nth_root_with_valuation(x, hensel_n, prec);
                json out = padic_json(a);
                out["check"] = a.pow(hensel_n).agrees_with(x);
                return out;
              },
              print_fields};
  });
  auto* hensel_zp = hensel->add_subcommand("zp", "Membership in Z_p through its existential definition");
  hensel_zp->add_option("--a", hensel_x, "Rational expression")->required();
  hensel_zp->add_option("--prime,-p", hensel_prime, "Prime p")->required();
  hensel_zp->add_option("--prec", hensel_prec, "Relative precision");
  hensel_zp->callback([&] {
    inputs = {{"a", hensel_x}, {"prime", hensel_prime}, {"prec", hensel_prec}};
    action = {"hensel zp",
              [&] {
                const auto a = evaluate_padic_expression(hensel_x, hensel_prime, static_cast<int>(hensel_prec));
                const auto r = zp_membership_via_definability(a);
                return json{{"claimed", r.claimed},
                            {"ground_truth", r.ground_truth},
                            {"exponent", r.exponent},
                            {"z", r.z.to_string()},
                            {"witness", r.witness ? json(r.witness->to_string()) : json(nullptr)}};
              },
              print_fields};
  });

  // forms
  auto* forms = app.add_subcommand("forms", "Zeros of forms over F_p and Q_p");
  forms->require_subcommand(1);
  std::string forms_poly, forms_vector;
  Prime forms_prime = 0;
  std::int64_t forms_prec = 8;
  int forms_depth = 4;
  auto* forms_count = forms->add_subcommand("count", "Exhaustive zero count over F_p");
  forms_count->add_option("--poly", forms_poly, "Integer polynomial in x1..xn")->required();
  forms_count->add_option("--prime,-p", forms_prime, "Prime p")->required();
  forms_count->callback([&] {
    inputs = {{"poly", forms_poly}, {"prime", forms_prime}};
    action = {"forms count",
              [&] {
                const auto parsed = parse_polynomial(forms_poly);
                const auto c = count_zeros_ff(parsed.poly, forms_prime, budget_or(kDefaultEnumerationBudget));
                return json{{"variables", parsed.variables},
                            {"count", c.count},
                            {"nontrivial_zero", c.nontrivial_zero ? json(*c.nontrivial_zero) : json(nullptr)}};
              },
              print_fields};
  });
  auto* forms_cw = forms->add_subcommand("chevalley", "Check p^a | N(f) for a < n/d");
  forms_cw->add_option("--poly", forms_poly, "Integer polynomial in x1..xn")->required();
  forms_cw->add_option("--prime,-p", forms_prime, "Prime p")->required();
  forms_cw->callback([&] {
    inputs = {{"poly", forms_poly}, {"prime", forms_prime}};
    action = {"forms chevalley",
              [&] {
                const auto parsed = parse_polynomial(forms_poly);
                const auto r = chevalley_warning_check(parsed.poly, forms_prime, budget_or(kDefaultEnumerationBudget));
                return json{{"variables", parsed.variables},
                            {"degree", r.degree},
                            {"count", r.zeros.count},
                            {"exponent", r.exponent},
                            {"modulus", to_string(r.modulus)},
                            {"divisible", r.divisible},
                            {"nontrivial_zero",
                             r.zeros.nontrivial_zero ? json(*r.zeros.nontrivial_zero) : json(nullptr)},
                            {"holds", r.holds()}};
              },
              print_fields};
  });
  auto* forms_solve = forms->add_subcommand("solve", "Search for a nontrivial zero in Q_p");
  forms_solve->add_option("--form", forms_poly, "Homogeneous integer polynomial")->required();
  forms_solve->add_option("--prime,-p", forms_prime, "Prime p")->required();
  forms_solve->add_option("--prec", forms_prec, "Target precision");
  forms_solve->add_option("--depth", forms_depth, "Deepest residue level searched");
  forms_solve->callback([&] {
    inputs = {{"form", forms_poly}, {"prime", forms_prime}, {"prec", forms_prec}, {"depth", forms_depth}};
    action = {"forms solve",
              [&] {
                const Form form = parse_form(forms_poly);
                ZeroSearchOptions options;
                options.target_precision = forms_prec;
                options.depth_cap = forms_depth;
                options.budget = budget_or(options.budget);
                const auto r = padic_zero_search(form, forms_prime, options);
                if (!r.certificate) {
                  std::ostringstream msg;
                  msg << "no certificate after " << r.candidates << " candidates; levels searched "
                      << json(r.levels_searched).dump() << ", skipped " << json(r.levels_skipped).dump();
                  fail(ErrorKind::Unresolved, msg.str());
                }
                return json{{"certificate", certificate_json(*r.certificate)},
                            {"verified", verify_certificate(form.poly(), *r.certificate)},
                            {"candidates", r.candidates}};
              },
              print_fields};
  });
  auto* forms_terjanian = forms->add_subcommand("terjanian", "Check the mod-4 lemmas behind Terjanian's form");
  forms_terjanian->add_option("--vector", forms_vector, "Optional 18 comma-separated integers to reject");
  forms_terjanian->add_option("--prec", forms_prec, "2-adic precision of the vector");
  forms_terjanian->callback([&] {
    inputs = {{"vector", forms_vector}, {"prec", forms_prec}};
    action = {"forms terjanian",
              [&] {
                const auto l = terjanian_lemmas();
                json out{{"lemma_checks",
                          {{"odd_cases", l.odd_cases},
                           {"odd_cases_congruent_1_mod_4", l.odd_cases_passing},
                           {"even_cases", l.even_cases},
                           {"even_cases_divisible_by_16", l.even_cases_passing},
                           {"scaling_cases", l.scaling_cases_passing},
                           {"homogeneous_degree_4", l.homogeneous_degree_four},
                           {"passed", l.passed()}}},
                         {"G", terjanian_G().poly().to_string({"x", "y", "z"})}};
                if (!forms_vector.empty()) {
                  std::vector<BigInt> x;
                  for (const auto& s : split_list(forms_vector)) x.emplace_back(s);
                  const auto r = terjanian_reject(x, forms_prec);
                  out["rejection"] = {{"descent_steps", r.descent_steps},
                                      {"stage", r.stage},
                                      {"odd_blocks", r.odd_blocks},
                                      {"valuation", r.valuation}};
                }
                return out;
              },
              print_fields};
  });

  // hahn
  auto* hahn = app.add_subcommand("hahn", "Truncated Hahn series");
  hahn->require_subcommand(1);
  std::string hahn_group = "Q", hahn_field = "Q", hahn_a, hahn_b, hahn_cap = "8";
  auto hahn_read = [&](const std::string& text) {
    return HahnSeries::parse(text, parse_exponent_group(hahn_group), CoefficientField::parse(hahn_field));
  };
  auto add_hahn_common = [&](CLI::App* sub) {
    sub->add_option("--group,-g", hahn_group, "Exponent group: Z, Q or ZxZ");
    sub->add_option("--field,-f", hahn_field, "Q or a prime p for F_p");
  };
  for (const char* name : {"add", "mul"}) {
    auto* sub = hahn->add_subcommand(name, std::string(name == std::string("add") ? "Sum" : "Product") + " of two series");
    add_hahn_common(sub);
    sub->add_option("--a", hahn_a, "First series, e.g. 3*t^(-1/2) + 1 + O(t^5)")->required();
    sub->add_option("--b", hahn_b, "Second series")->required();
    const std::string op = name;
    sub->callback([&, op] {
      inputs = {{"group", hahn_group}, {"field", hahn_field}, {"a", hahn_a}, {"b", hahn_b}};
      action = {"hahn " + op,
                [&, op] {
                  const auto a = hahn_read(hahn_a), b = hahn_read(hahn_b);
                  return hahn_json(op == "add" ? a + b : a * b);
                },
                print_fields};
    });
  }
  auto* hahn_invert = hahn->add_subcommand("invert", "Neumann-series inverse below a cap");
  add_hahn_common(hahn_invert);
  hahn_invert->add_option("--series,--a", hahn_a, "Series to invert")->required();
  hahn_invert->add_option("--cap", hahn_cap, "Exponent below which g * g^-1 = 1, e.g. 5, 7/2 or (3,0)");
  hahn_invert->callback([&] {
    inputs = {{"group", hahn_group}, {"field", hahn_field}, {"series", hahn_a}, {"cap", hahn_cap}};
    action = {"hahn invert",
              [&] {
                const auto g = hahn_read(hahn_a);
                const auto cap = HahnSeries::parse("O(t^" + paren(hahn_cap) + ")", g.group(), g.field()).cap();
                const auto inv = g.inverse(*cap);
                json out = hahn_json(inv);
                out["product"] = (g * inv).to_string();
                return out;
              },
              print_fields};
  });
  auto* hahn_info = hahn->add_subcommand("info", "Valuation, residue and angular component");
  add_hahn_common(hahn_info);
  hahn_info->add_option("--series,--a", hahn_a, "Series")->required();
  hahn_info->callback([&] {
    inputs = {{"group", hahn_group}, {"field", hahn_field}, {"series", hahn_a}};
    action = {"hahn info", [&] { return hahn_json(hahn_read(hahn_a)); }, print_fields};
  });

  // ake
  auto* ake = app.add_subcommand("ake", "First-order sentences over Z/p^n and F_p[t]/(t^n)");
  ake->require_subcommand(1);
  std::string ake_sentence, ake_primes = "2..50", ake_ring = "zmod";
  int ake_n = 2;
  Prime ake_prime = 0;
  std::uint64_t ake_budget = kDefaultEvaluationBudget;
  auto* ake_cmp = ake->add_subcommand("compare", "Compare truth in both ring families across primes");
  ake_cmp->add_option("--sentence,-s", ake_sentence, "Sentence, e.g. \"exists x. x*x = -1\"")->required();
  ake_cmp->add_option("--n", ake_n, "Nilpotency index");
  ake_cmp->add_option("--primes", ake_primes, "Range a..b or a comma list");
  ake_cmp->add_option("--budget", ake_budget, "Assignments allowed per ring");
  ake_cmp->callback([&] {
    inputs = {{"sentence", ake_sentence}, {"n", ake_n}, {"primes", ake_primes}, {"budget", ake_budget}};
    action = {"ake compare",
              [&] {
                const auto sentence = parse_sentence(ake_sentence);
                const auto r = ake_compare(sentence, ake_n, parse_prime_list(ake_primes), budget_or(ake_budget));
                json results = json::array();
                for (const auto& row : r.rows) {
                  json item{{"p", row.prime}};
                  item["zmod"] = row.zmod ? json(*row.zmod) : json(nullptr);
                  item["trunc"] = row.trunc ? json(*row.trunc) : json(nullptr);
                  results.push_back(item);
                }
                return json{{"sentence", r.sentence},
                            {"n", r.n},
                            {"results", results},
                            {"disagreement", r.disagreement},
                            {"skipped", r.skipped},
                            {"agreement_from", r.agreement_from ? json(*r.agreement_from) : json(nullptr)}};
              },
              [](const json& payload, std::ostream& out) {
                out << "sentence: " << payload["sentence"].get<std::string>() << "   n = " << payload["n"] << '\n';
                out << std::setw(6) << "p" << std::setw(8) << "Z/p^n" << std::setw(16) << "F_p[t]/(t^n)" << '\n';
                auto cell = [](const json& v) { return v.is_null() ? std::string("skip") : v.get<bool>() ? "true" : "false"; };
                for (const auto& row : payload["results"]) {
                  out << std::setw(6) << row["p"].get<Prime>() << std::setw(8) << cell(row["zmod"]) << std::setw(16)
                      << cell(row["trunc"]) << '\n';
                }
                out << "disagreement: " << payload["disagreement"].dump() << '\n';
              }};
  });
  auto* ake_eval = ake->add_subcommand("eval", "Truth of a sentence in one ring");
  ake_eval->add_option("--sentence,-s", ake_sentence, "Sentence")->required();
  ake_eval->add_option("--ring", ake_ring, "zmod or trunc")->check(CLI::IsMember({"zmod", "trunc"}));
  ake_eval->add_option("--prime,-p", ake_prime, "Prime p")->required();
  ake_eval->add_option("--n", ake_n, "Nilpotency index");
  ake_eval->add_option("--budget", ake_budget, "Assignments allowed");
  ake_eval->callback([&] {
    inputs = {{"sentence", ake_sentence}, {"ring", ake_ring}, {"prime", ake_prime}, {"n", ake_n}, {"budget", ake_budget}};
    action = {"ake eval",
              [&] {
                const auto sentence = parse_sentence(ake_sentence);
                const auto kind = ake_ring == "zmod" ? RingKind::IntegersMod : RingKind::TruncatedPolynomials;
                const auto ring = FiniteLocalRing::make(kind, ake_prime, ake_n);
                return json{{"ring", ring.name()},
                            {"sentence", sentence.to_string()},
                            {"quantifier_depth", sentence.quantifier_depth},
                            {"value", evaluate(ring, sentence, budget_or(ake_budget))}};
              },
              print_fields};
  });

  // tree
  auto* tree = app.add_subcommand("tree", "ASCII picture of branches of Z_p");
  Prime tree_prime = 2;
  int tree_depth = 3;
  std::string tree_elements;
  tree->add_option("--prime,-p", tree_prime, "Prime p <= 5");
  tree->add_option("--depth", tree_depth, "Depth <= 6");
  tree->add_option("--elements", tree_elements, "Comma-separated p-adic integers")->required();
  tree->callback([&] {
    inputs = {{"prime", tree_prime}, {"depth", tree_depth}, {"elements", tree_elements}};
    action = {"tree",
              [&] {
                std::vector<Rational> xs;
                const auto labels = split_list(tree_elements);
                for (const auto& s : labels) xs.push_back(evaluate_rational_expression(s));
                const auto t = render_tree(tree_prime, tree_depth, xs, labels);
                json meets = json::array();
                for (const auto& m : t.meets) meets.push_back({{"a", labels[m.first]}, {"b", labels[m.second]}, {"level", m.level}});
                return json{{"diagram", t.diagram}, {"meets", meets}};
              },
              [](const json& payload, std::ostream& out) { out << payload["diagram"].get<std::string>(); }};
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (!action.run) return usage_error(err, "incomplete command");

  const auto start = std::chrono::steady_clock::now();
  json payload;
  try {
    payload = action.run();
  } catch (const Error& e) {
    const bool usage = is_usage_kind(e.kind());
    json error{{"kind", to_string(e.kind())}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      error["position"] = pe->position();
      error["expected"] = pe->expected();
    }
    if (as_json) {
      out << json{{"command", action.command}, {"inputs", inputs}, {"error", error}, {"version", kVersion}}.dump(2)
          << '\n';
    } else {
      err << (usage ? "usage error: " : "error: ") << to_string(e.kind()) << ": " << e.what() << '\n';
    }
    return usage ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  } catch (const std::out_of_range& e) {
    return usage_error(err, e.what());
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (as_json) {
    json report = payload;
    report["command"] = action.command;
    report["inputs"] = inputs;
    report["elapsed_ms"] = elapsed;
    report["version"] = kVersion;
    out << report.dump(2) << '\n';
  } else {
    action.text(payload, out);
  }
  return 0;
}

}  // namespace valkit::cli
