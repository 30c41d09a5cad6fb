#include "srq/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "srq/geometry.hpp"
#include "srq/io.hpp"
#include "srq/verify.hpp"

namespace srq::cli {

namespace {

enum class Format { pretty, json, csv };

struct CliConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double tolerance = 1e-9;
  bool json = false;
  bool csv = false;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::pretty; }
};

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

void write_csv_quaternion(std::ostream& out, const Quaternion& q) {
  out << "w,x,y,z\n"
      << format_double(q.w) << ',' << format_double(q.x) << ',' << format_double(q.y) << ','
      << format_double(q.z) << '\n';
}

void write_value(std::ostream& out, Format format, const Quaternion& value, nlohmann::json context) {
  switch (format) {
    case Format::pretty:
      out << format_quaternion(value) << '\n';
      break;
    case Format::json:
      context["value"] = quaternion_to_json(value);
      write_json(out, context);
      break;
    case Format::csv:
      write_csv_quaternion(out, value);
      break;
  }
}

void write_polynomial(std::ostream& out, Format format, const RegularPolynomial& f) {
  switch (format) {
    case Format::pretty:
      out << format_polynomial(f) << '\n';
      break;
    case Format::json: {
      nlohmann::json j = polynomial_to_json(f);
      j["expr"] = format_polynomial(f);
      write_json(out, j);
      break;
    }
    case Format::csv:
      out << "power,w,x,y,z\n";
      for (std::size_t n = 0; n < f.size(); ++n) {
        const Quaternion a = f[n];
        out << n << ',' << format_double(a.w) << ',' << format_double(a.x) << ',' << format_double(a.y)
            << ',' << format_double(a.z) << '\n';
      }
      break;
  }
}

QuotientSide parse_side(const std::string& side) {
  return side == "right" ? QuotientSide::right : QuotientSide::left;
}

void write_reports(std::ostream& out, Format format, const std::vector<verify::VerificationReport>& reports,
                   const nlohmann::json& document) {
  switch (format) {
    case Format::json:
      write_json(out, document);
      break;
    case Format::csv:
      out << "suite,property,samples,violations,worst_margin\n";
      for (const auto& r : reports) {
        for (const auto& p : r.properties) {
          out << r.suite << ',' << p.name << ',' << p.samples << ',' << p.violations << ','
              << (p.has_margin ? format_double(p.worst_margin) : std::string()) << '\n';
        }
      }
      break;
    case Format::pretty:
      for (const auto& r : reports) {
        out << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.properties.size()
            << " properties, worst margin " << format_double(r.worst_margin()) << ")\n";
        for (const auto& p : r.properties) {
          if (!p.pass()) out << "  " << p.name << ": " << p.violations << " violations\n";
        }
      }
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slice regular quaternionic functions: evaluation, transformations and verification", "srq"};
  app.require_subcommand(1);

  CliConfig config;
  app.add_option("--seed", config.seed, "Seed for randomized suites")->envname("SRQ_SEED");
  app.add_option("--samples", config.samples, "Samples per suite")->check(CLI::PositiveNumber);
  app.add_option("--tol", config.tolerance, "Inequality tolerance")->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", config.json, "JSON output");
  app.add_flag("--csv", config.csv, "CSV output")->excludes(json_flag);

  std::function<int()> action;
  auto subcommand = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  // eval
  std::string f_text;
  std::string g_text;
  std::string den_text;
  std::string side = "left";
  std::string point_text;
  auto* eval = subcommand("eval", "Evaluate a polynomial, or den^{-*} * f, at a point");
  eval->add_option("--f", f_text, "Polynomial in q")->required();
  eval->add_option("--den", den_text, "Optional denominator polynomial");
  eval->add_option("--side", side, "Quotient side")->check(CLI::IsMember({"left", "right"}));
  eval->add_option("q", point_text, "Quaternion")->required();
  eval->callback([&] {
    action = [&] {
      const RegularPolynomial f = parse_polynomial(f_text);
      const Quaternion q = parse_quaternion(point_text);
      Quaternion value;
      if (den_text.empty()) {
        value = evaluate(f, q);
      } else {
        value = evaluate(RegularQuotient(parse_polynomial(den_text), f, parse_side(side)), q);
      }
      write_value(out, config.format(), value, {{"q", quaternion_to_json(q)}});
      return kOk;
    };
  });

  // star
  auto* star = subcommand("star", "Star product f * g");
  star->add_option("--f", f_text, "Left factor")->required();
  star->add_option("--g", g_text, "Right factor")->required();
  star->callback([&] {
    action = [&] {
      write_polynomial(out, config.format(), parse_polynomial(f_text) * parse_polynomial(g_text));
      return kOk;
    };
  });

  // quotient
  std::string num_text;
  auto* quotient = subcommand("quotient", "Regular quotient den^{-*} * num (or num * den^{-*})");
  quotient->add_option("--den", den_text, "Denominator")->required();
  quotient->add_option("--num", num_text, "Numerator")->required();
  quotient->add_option("--side", side, "Quotient side")->check(CLI::IsMember({"left", "right"}));
  quotient->add_option("--at", point_text, "Evaluate at this point");
  quotient->callback([&] {
    action = [&] {
      const RegularQuotient r(parse_polynomial(den_text), parse_polynomial(num_text), parse_side(side));
      if (!point_text.empty()) {
        const Quaternion q = parse_quaternion(point_text);
        write_value(out, config.format(), evaluate(r, q), {{"q", quaternion_to_json(q)}});
        return kOk;
      }
      switch (config.format()) {
        case Format::json: {
          nlohmann::json j = quotient_to_json(r);
          j["pole"] = polynomial_to_json(r.pole_polynomial());
          j["numerator"] = polynomial_to_json(r.reduced_numerator());
          write_json(out, j);
          break;
        }
        default:
          out << "(" << format_polynomial(r.pole_polynomial()) << ")^{-1} (" << format_polynomial(r.reduced_numerator())
              << ")\n";
          break;
      }
      return kOk;
    };
  });

  // mobius
  std::string q0_text;
  std::string u_text = "1";
  bool classical = false;
  auto* mobius = subcommand("mobius", "Regular Moebius transformation (1 - q conj q0)^{-*} * (q - q0) u");
  mobius->add_option("q0", q0_text, "Center in the ball")->required();
  mobius->add_option("q", point_text, "Point")->required();
  mobius->add_option("--u", u_text, "Unit quaternion");
  mobius->add_flag("--classical", classical, "Pointwise (1 - q conj q0)^{-1} (q - q0) u instead");
  mobius->callback([&] {
    action = [&] {
      const Quaternion q0 = parse_quaternion(q0_text);
      const Quaternion q = parse_quaternion(point_text);
      const Quaternion u = parse_quaternion(u_text);
      require_in_ball(q0, "q0");
      if (std::abs(u.norm() - 1.0) > 1e-12) throw Error(ErrorCode::OutsideBall, "u must be a unit quaternion");
      const Quaternion value = classical ? pointwise_moebius(q0, q) * u : regular_moebius(q0, u, q);
      write_value(out, config.format(), value,
                  {{"q0", quaternion_to_json(q0)}, {"u", quaternion_to_json(u)}, {"q", quaternion_to_json(q)},
                   {"twist", quaternion_to_json(twist_map(q0, q))}});
      return kOk;
    };
  });

  // distance
  std::string p_text;
  auto* dist = subcommand("distance", "Poincare distance in the unit ball");
  dist->add_option("p", p_text, "First point")->required();
  dist->add_option("q", point_text, "Second point")->required();
  dist->callback([&] {
    action = [&] {
      const Quaternion p = parse_quaternion(p_text);
      const Quaternion q = parse_quaternion(point_text);
      const double d = poincare_distance(p, q);
      switch (config.format()) {
        case Format::pretty:
          out << format_double(d) << '\n';
          break;
        case Format::json:
          write_json(out, {{"p", quaternion_to_json(p)}, {"q", quaternion_to_json(q)}, {"distance", d}});
          break;
        case Format::csv:
          out << "distance\n" << format_double(d) << '\n';
          break;
      }
      return kOk;
    };
  });

  // expand
  std::size_t n_max = 2;
  bool use_moebius = false;
  auto* expand = subcommand("expand", "Spherical expansion coefficients A_0 .. A_{2n+1}");
  auto* expand_f = expand->add_option("--f", f_text, "Polynomial in q");
  expand->add_flag("--mobius", use_moebius, "Closed forms for the regular Moebius map centered at q0")
      ->excludes(expand_f);
  expand->add_option("--q0", q0_text, "Center")->required();
  expand->add_option("--n", n_max, "Number of coefficient pairs minus one");
  expand->callback([&] {
    action = [&]() -> int {
      if (!use_moebius && f_text.empty()) throw Error(ErrorCode::Parse, "expand needs --f or --mobius");
      const Quaternion q0 = parse_quaternion(q0_text);
      const SphericalExpansion e = use_moebius ? moebius_expansion_coefficients(q0, n_max)
                                               : spherical_expansion(parse_polynomial(f_text), q0, n_max);
      switch (config.format()) {
        case Format::pretty:
          for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
            out << "A_" << k << " = " << format_quaternion(e.coefficients[k]) << '\n';
          }
          break;
        case Format::json: {
          nlohmann::json coeffs = nlohmann::json::array();
          for (const auto& a : e.coefficients) coeffs.push_back(quaternion_to_json(a));
          write_json(out, {{"center", quaternion_to_json(q0)}, {"coefficients", coeffs}});
          break;
        }
        case Format::csv:
          out << "index,w,x,y,z\n";
          for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
            const Quaternion& a = e.coefficients[k];
            out << k << ',' << format_double(a.w) << ',' << format_double(a.x) << ',' << format_double(a.y)
                << ',' << format_double(a.z) << '\n';
          }
          break;
      }
      return kOk;
    };
  });

  // verify
  std::string suite = "all";
  auto* verify_cmd = subcommand("verify", "Run a verification suite, or all of them");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'");
  verify_cmd->callback([&] {
    action = [&]() -> int {
      verify::Config vc;
      vc.seed = config.seed;
      vc.samples = config.samples;
      vc.tolerance = config.tolerance;
      if (suite == "all") {
        const auto report = verify::run_all(vc);
        write_reports(out, config.format(), report.suites, report.to_json());
        return report.pass() ? kOk : kDomainError;
      }
      const auto names = verify::suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        err << "unknown suite '" << suite << "'\n";
        return kUsageError;
      }
      const auto report = verify::run_suite(suite, vc);
      write_reports(out, config.format(), {report}, report.to_json());
      return report.pass() ? kOk : kDomainError;
    };
  });

  // normal-form
  std::string matrix_text;
  std::array<std::string, 4> entries{"1", "0", "0", "1"};
  auto* nf = subcommand("normal-form", "Normal form (q0, u) of a matrix of Sp(1,1)");
  auto* matrix_opt = nf->add_option("--matrix", matrix_text, "Matrix JSON {\"a\",\"c\",\"b\",\"d\"}");
  nf->add_option("--a", entries[0], "Entry a")->excludes(matrix_opt);
  nf->add_option("--c", entries[1], "Entry c")->excludes(matrix_opt);
  nf->add_option("--b", entries[2], "Entry b")->excludes(matrix_opt);
  nf->add_option("--d", entries[3], "Entry d")->excludes(matrix_opt);
  nf->callback([&] {
    action = [&] {
      QuaternionMatrix2 m;
      if (!matrix_text.empty()) {
        m = matrix_from_json(nlohmann::json::parse(matrix_text));
      } else {
        m = {parse_quaternion(entries[0]), parse_quaternion(entries[1]), parse_quaternion(entries[2]),
             parse_quaternion(entries[3])};
      }
      const MoebiusNormalForm n = normal_form(m);
      switch (config.format()) {
        case Format::pretty:
          out << "q0 = " << format_quaternion(n.q0) << "\nu = " << format_quaternion(n.u) << '\n';
          break;
        case Format::json:
          write_json(out, {{"q0", quaternion_to_json(n.q0)}, {"u", quaternion_to_json(n.u)}});
          break;
        case Format::csv:
          out << "name,w,x,y,z\n";
          for (const auto& [name, v] : {std::pair{"q0", n.q0}, std::pair{"u", n.u}}) {
            out << name << ',' << format_double(v.w) << ',' << format_double(v.x) << ',' << format_double(v.y)
                << ',' << format_double(v.z) << '\n';
          }
          break;
      }
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::Parse ? kUsageError : kDomainError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: Parse: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace srq::cli
