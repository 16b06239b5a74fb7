#include "cstar/cli.hpp"

#include "cstar/gelfand.hpp"
#include "cstar/ideals.hpp"
#include "cstar/interchange.hpp"
#include "cstar/spectral.hpp"
#include "cstar/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace cstar::cli {
namespace {

using nlohmann::json;

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json points_json(const SpectrumSet& s) {
  json pts = json::array();
  for (const Complex& z : s.points()) pts.push_back(complex_json(z));
  return pts;
}

std::string set_text(const SpectrumSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + format_complex(s[i]);
  return out + "}";
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidDocument, "cannot open input '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::optional<Element> load_element(const RunConfig& config) {
  if (config.document) return parse_document(*config.document);
  if (config.input_path) return parse_document(read_input(*config.input_path));
  return std::nullopt;
}

const Element& require(const std::optional<Element>& a) {
  if (!a) throw Error(ErrorCode::InvalidDocument, "this command needs --input or --doc");
  return *a;
}

int cmd_spectrum(const RunConfig& cfg, const Element& a, std::ostream& out) {
  const SpectrumSet sigma = spectrum(a, cfg.tol);
  if (cfg.format == OutputFormat::Text) {
    out << set_text(sigma) << '\n';
  } else {
    out << json{{"command", "spectrum"},
                {"instance", a.algebra().describe()},
                {"merge_tol", cfg.tol},
                {"points", points_json(sigma)}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& cfg, const Element& a, std::ostream& out) {
  const ClassificationReport r = classify_element(a, cfg.tol);
  struct Row {
    const char* name;
    const char* region;
    const ClassFlag& flag;
  };
  const Row rows[] = {{"self_adjoint", "R", r.self_adjoint},
                      {"unitary", "S1", r.unitary},
                      {"projection", "{0,1}", r.projection},
                      {"positive", "R+ u {0}", r.positive}};
  bool violated = false;
  for (const Row& row : rows) {
    const bool contained = row.flag.holds && row.flag.spectrum_contained;
    violated = violated || (row.flag.holds && !row.flag.spectrum_contained);
    if (cfg.format == OutputFormat::Text) {
      out << std::left << std::setw(13) << row.name << (row.flag.holds ? "yes" : "no ") << "  defect "
          << sci(row.flag.defect);
      if (row.flag.holds) {
        out << "  sigma in " << row.region << ": " << (contained ? "yes" : "NO") << " (distance "
            << sci(row.flag.spectrum_distance) << ")";
      }
      out << '\n';
    } else {
      json rec{{"command", "classify"},
               {"flag", row.name},
               {"holds", row.flag.holds},
               {"defect", row.flag.defect},
               {"region", row.region},
               {"spectrum_distance", row.flag.spectrum_distance},
               {"contained", contained}};
      out << rec.dump() << '\n';
    }
  }
  if (cfg.format == OutputFormat::Text) {
    if (r.positivity_witness) out << "positivity witness b = " << write_document(*r.positivity_witness) << '\n';
    if (r.positivity_offender) out << "not positive: character value " << format_complex(*r.positivity_offender) << '\n';
    out << "sigma = " << set_text(spectrum(a)) << '\n';
  }
  return violated ? kExitLawFailed : kExitOk;
}

std::function<Complex(Complex)> named_function(const std::string& name) {
  static const std::map<std::string, std::function<Complex(Complex)>> table{
      {"exp", [](Complex z) { return std::exp(z); }},
      {"log",
       [](Complex z) {
         if (z == Complex(0.0, 0.0)) throw std::domain_error("log(0)");
         return std::log(z);
       }},
      {"sqrt", [](Complex z) { return std::sqrt(z); }},
      {"conj", [](Complex z) { return std::conj(z); }},
      {"abs", [](Complex z) { return Complex(std::abs(z), 0.0); }},
      {"inv",
       [](Complex z) {
         if (z == Complex(0.0, 0.0)) throw std::domain_error("1/0");
         return 1.0 / z;
       }},
      {"square", [](Complex z) { return z * z; }},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::DomainError, "unknown function '" + name + "'");
  return it->second;
}

int cmd_calculus(const RunConfig& cfg, const Element& a, std::ostream& out) {
  std::string label;
  Element result = a;
  if (cfg.function) {
    label = *cfg.function;
    result = apply_function(named_function(*cfg.function), a);
  } else if (!cfg.poly.empty()) {
    std::vector<Complex> coeffs(cfg.poly.begin(), cfg.poly.end());
    label = "poly";
    result = apply_polynomial(coeffs, a);
  } else {
    throw Error(ErrorCode::DomainError, "calculus needs --fn or --poly");
  }
  const SpectrumSet sigma = spectrum(result, cfg.tol);
  if (cfg.format == OutputFormat::Text) {
    out << "result = " << write_document(result) << '\n' << "sigma = " << set_text(sigma) << '\n';
  } else {
    out << json{{"command", "calculus"},
                {"function", label},
                {"document", json::parse(write_document(result))},
                {"spectrum", points_json(sigma)}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_quotient(const RunConfig& cfg, const Element& a, std::ostream& out) {
  const Algebra& alg = a.algebra();
  Ideal ideal = Ideal::whole(alg);
  if (alg.is_function_algebra()) {
    ideal = ideal_from_closed_set(alg, cfg.subset);
  } else {
    std::vector<std::size_t> idx;
    for (const auto& s : cfg.subset) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != s.size() || s.empty()) throw Error(ErrorCode::InvalidSubset, "'" + s + "' is not a character index");
      idx.push_back(v);
    }
    ideal = ideal_from_closed_set(alg, idx);
  }
  const QuotientResult q = quotient(ideal);
  const Element cls = q.projection(a);
  const double qnorm = q.quotient.quotient_norm(a);
  const FiniteSpace& rep = q.quotient.representative_space();
  if (cfg.format == OutputFormat::Text) {
    out << "dim A/I = " << q.quotient.dimension() << '\n' << "[a] = {";
    for (std::size_t k = 0; k < cls.size(); ++k) out << (k ? ", " : "") << rep.label(k) << ": " << format_complex(cls[k]);
    out << "}\n" << "||a + I|| = " << format_complex(qnorm) << '\n';
  } else {
    json values = json::array();
    for (std::size_t k = 0; k < cls.size(); ++k) values.push_back(complex_json(cls[k]));
    out << json{{"command", "quotient"},
                {"dimension", q.quotient.dimension()},
                {"points", rep.points()},
                {"values", values},
                {"quotient_norm", qnorm}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_characters(const RunConfig& cfg, const Element& a, std::ostream& out) {
  const CharacterSpace hat = characters(a.algebra());
  for (const Character& phi : hat.characters()) {
    const Complex v = evaluate_character(phi, a);
    if (cfg.format == OutputFormat::Text) {
      out << phi.index() << "  " << phi.label() << "  phi(a) = " << format_complex(v) << '\n';
    } else {
      out << json{{"command", "characters"}, {"index", phi.index()}, {"label", phi.label()}, {"value", complex_json(v)}}
                 .dump()
          << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, const std::optional<Element>& input, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.max_size = cfg.max_size;
  opt.tol = cfg.tol;
  const LawReport report = run_verification(opt, input);
  std::size_t failed = 0;
  for (const LawRecord& r : report) {
    failed += r.pass ? 0 : 1;
    if (cfg.format == OutputFormat::Text) {
      out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(34) << r.law << " defect " << sci(r.defect) << "  "
          << r.instance << '\n';
    } else {
      out << json{{"law", r.law}, {"instance", r.instance}, {"defect", r.defect}, {"pass", r.pass}}.dump() << '\n';
    }
  }
  if (cfg.format == OutputFormat::Text) {
    out << (report.size() - failed) << "/" << report.size() << " laws hold\n";
  }
  return failed == 0 ? kExitOk : kExitLawFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.tol > 0.0) || config.max_size < 1) {
    err << "error: --tol must be positive and --max-size at least 1\n";
    return kExitInvalidInput;
  }
  std::optional<Element> input;
  try {
    input = load_element(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    switch (config.command) {
      case Command::Spectrum: return cmd_spectrum(config, require(input), out);
      case Command::Classify: return cmd_classify(config, require(input), out);
      case Command::Calculus: return cmd_calculus(config, require(input), out);
      case Command::Quotient: return cmd_quotient(config, require(input), out);
      case Command::Characters: return cmd_characters(config, require(input), out);
      case Command::Verify: break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    return cmd_verify(config, input, out);
  } catch (const Error& e) {
    // A throw inside the suite means a construction the theory guarantees failed.
    err << "law failure: " << e.what() << '\n';
    return kExitLawFailed;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations and law checks for finite commutative C*-algebras", "cstar"};
  RunConfig cfg;
  const std::map<std::string, Command> commands{{"spectrum", Command::Spectrum},     {"classify", Command::Classify},
                                                {"calculus", Command::Calculus},     {"quotient", Command::Quotient},
                                                {"characters", Command::Characters}, {"verify", Command::Verify}};
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::Text},
                                                    {"structured", OutputFormat::Structured}};
  std::string format = "text";

  app.add_option("command", cfg.command, "spectrum | classify | calculus | quotient | characters | verify")
      ->required()
      ->transform(CLI::CheckedTransformer(commands));
  app.add_option("--input", cfg.input_path, "Input document path ('-' for stdin)");
  app.add_option("--doc", cfg.document, "Inline input document");
  app.add_option("--tol", cfg.tol, "Tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed for verify")->capture_default_str();
  app.add_option("--max-size", cfg.max_size, "Largest instance size for verify")->capture_default_str();
  app.add_option("--format", format, "text | structured")->check(CLI::IsMember(formats))->capture_default_str();
  app.add_option("--fn", cfg.function, "calculus: exp, log, sqrt, conj, abs, inv, square");
  app.add_option("--poly", cfg.poly, "calculus: real coefficients, constant term first")->delimiter(',');
  app.add_option("--subset", cfg.subset, "quotient: zero set as point labels or character indices")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  cfg.format = formats.at(format);
  return run(cfg, out, err);
}

}  // namespace cstar::cli
