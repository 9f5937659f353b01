#include "blockroots/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "blockroots/decoupler.hpp"
#include "blockroots/io.hpp"
#include "blockroots/pipeline.hpp"
#include "blockroots/qd.hpp"
#include "blockroots/transforms.hpp"

namespace blockroots::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string absolute(const std::string& path) { return fs::absolute(path).lexically_normal().string(); }

void write_manifest(const fs::path& out, const std::string& command, const std::vector<std::string>& args,
                    const std::string& input, const json& config, std::uint64_t seed) {
  io::write_json_file(out / "manifest.json", json{{"tool", "blockroots"},
                                                  {"tool_version", kToolVersion},
                                                  {"command", command},
                                                  {"args", args},
                                                  {"input", input},
                                                  {"config", config},
                                                  {"seed", seed},
                                                  {"timestamp", timestamp_utc()}});
}

json error_json(const Error& e) {
  json j{{"code", std::string(to_string(e.code()))}, {"message", e.detail()}};
  if (e.index()) j["index"] = *e.index();
  return j;
}

int exit_for(const Error& e) { return is_input_error(e.code()) ? kInputError : kNumericalError; }

void write_csv(const fs::path& path, const std::vector<TraceRow>& rows) {
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  write_trace_csv(os, rows);
}

std::string number_arg(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty complex value");
  auto to_double = [&](const std::string& part, double if_bare) {
    if (part.empty() || part == "+") return if_bare;
    if (part == "-") return -if_bare;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse complex value '" + text + "'");
    }
    if (used != part.size()) throw Error(ErrorCode::InvalidArgument, "cannot parse complex value '" + text + "'");
    return v;
  };
  if (s.back() != 'i' && s.back() != 'j') return {to_double(s, 0.0), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, to_double(s, 1.0)};
  return {to_double(s.substr(0, split), 0.0), to_double(s.substr(split), 1.0)};
}

struct FactorizeOptions {
  std::string input;
  std::string method = "pipeline";
  std::string refine = "newton-horner";
  std::size_t max_iter = 500;
  std::size_t qd_sweeps = 200;
  double qd_tol = 1e-10;
  double eta = 1e-8;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool solvents = false;
  std::string out;
};

std::vector<std::string> canonical_args(const FactorizeOptions& o) {
  std::vector<std::string> a{"factorize", absolute(o.input), "--method=" + o.method, "--refine=" + o.refine,
                             "--max-iter=" + std::to_string(o.max_iter), "--qd-sweeps=" + std::to_string(o.qd_sweeps),
                             "--qd-tol=" + number_arg(o.qd_tol), "--eta=" + number_arg(o.eta),
                             "--tol=" + number_arg(o.tol), "--seed=" + std::to_string(o.seed)};
  if (o.solvents) a.push_back("--solvents");
  return a;
}

int cmd_factorize(const FactorizeOptions& o, std::ostream& out, std::ostream& err) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  const json config{{"method", o.method}, {"refine", o.refine},   {"max_iter", o.max_iter},
                    {"qd_sweeps", o.qd_sweeps}, {"qd_tol", o.qd_tol}, {"eta", o.eta},
                    {"tol", o.tol},           {"solvents", o.solvents}};
  write_manifest(dir, "factorize", canonical_args(o), absolute(o.input), config, o.seed);

  const MatrixPolynomial p = io::read_polynomial_file(o.input);
  PipelineConfig cfg;
  cfg.qd.max_iterations = o.qd_sweeps;
  cfg.qd.e_tol = o.qd_tol;
  cfg.iter.max_iterations = o.max_iter;
  cfg.iter.eta = o.eta;
  cfg.iter.residual_tol = o.tol;
  cfg.iter.seed = o.seed;
  cfg.verify_tol = o.tol;
  const auto refine = parse_refine_method(o.refine);
  if (!refine) throw Error(ErrorCode::InvalidArgument, "unknown refine method " + o.refine);
  cfg.refine_method = *refine;

  json report{{"command", "factorize"}, {"method", o.method}, {"status", "ok"}};
  std::vector<TraceRow> rows;
  std::optional<SpectralFactorChain> chain;
  std::vector<std::string> warnings;
  bool converged = true;
  int code = kOk;
  try {
    if (o.method == "qd") {
      const QDRun run = qd_iterate(p, cfg.qd);
      rows = trace_rows("qd", run.trace);
      chain = run.chain();
      report["qd"] = {{"sweeps", run.tableau.iteration},
                      {"converged", run.trace.converged},
                      {"max_rel_e", run.trace.max_rel_e.back()},
                      {"conventions", run.trace.conventions}};
      if (run.status != QDStatus::Converged) {
        converged = false;
        throw Error(ErrorCode::NoConvergence, "Q.D. did not converge in " + std::to_string(run.tableau.iteration) +
                                                  " sweeps; factors.json holds the last Q-row");
      }
    } else {
      FactorizeResult r;
      if (o.method == "pipeline") {
        r = full_factorize(p, cfg);
      } else {
        const auto m = parse_refine_method(o.method);
        if (!m) throw Error(ErrorCode::InvalidArgument, "unknown method " + o.method);
        r = factorize_by_extraction(p, *m, cfg.iter, cfg.deflation_gate);
      }
      if (r.qd) {
        rows = trace_rows("qd", r.qd->trace);
        report["qd"] = {{"sweeps", r.qd->tableau.iteration},
                        {"converged", r.qd->trace.converged},
                        {"max_rel_e", r.qd->trace.max_rel_e.back()},
                        {"conventions", r.qd->trace.conventions}};
      }
      json stages = json::array();
      for (const auto& st : r.stages) {
        const auto more = trace_rows(st.stage, st.trace);
        rows.insert(rows.end(), more.begin(), more.end());
        stages.push_back({{"stage", st.stage},
                          {"method", st.trace.method},
                          {"iterations", st.trace.steps()},
                          {"converged", st.trace.converged},
                          {"final_residual", st.trace.residuals.back()}});
      }
      report["stages"] = stages;
      warnings = r.report.warnings;
      chain = std::move(r.chain);
    }
  } catch (const IterationError& e) {
    const auto more = trace_rows("failed", e.trace());
    rows.insert(rows.end(), more.begin(), more.end());
    report["status"] = "error";
    report["error"] = error_json(e);
    code = exit_for(e);
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = error_json(e);
    code = exit_for(e);
    err << "error: " << e.what() << '\n';
  }

  if (chain) {
    io::write_json_file(dir / "factors.json", io::chain_to_json(*chain, p, converged && code == kOk));
    VerificationReport v = verify(p, *chain);
    v.warnings.insert(v.warnings.begin(), warnings.begin(), warnings.end());
    if (code == kOk && o.solvents) {
      try {
        const auto right = chain_to_right_solvents(p, *chain);
        const auto left = chain_to_left_solvents(p, *chain);
        io::write_json_file(dir / "solvents_right.json", io::solvents_to_json(right.set, p));
        io::write_json_file(dir / "solvents_left.json", io::solvents_to_json(left.set, p));
        v.right_solvent_residuals = right.residuals;
        v.left_solvent_residuals = left.residuals;
        v.right_completeness = is_complete_set(p, right.set);
        v.left_completeness = is_complete_set(p, left.set);
      } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = error_json(e);
        code = exit_for(e);
        err << "error: solvent transforms: " << e.what() << '\n';
      }
    }
    report["verification"] = io::report_to_json(v);
  }
  io::write_json_file(dir / "report.json", report);
  write_csv(dir / "trace.csv", rows);
  if (code == kOk) out << "wrote " << dir.string() << '\n';
  return code;
}

struct ConvertOptions {
  std::string input;
  std::string direction;
  std::string poly;
  std::string out;
};

int cmd_convert(const ConvertOptions& o, std::ostream& out, std::ostream& err) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  std::vector<std::string> args{"convert", absolute(o.input), "--direction=" + o.direction};
  if (!o.poly.empty()) args.push_back("--poly=" + absolute(o.poly));
  write_manifest(dir, "convert", args, absolute(o.input), json{{"direction", o.direction}, {"poly", o.poly}}, 0);

  const json in = io::read_json_file(o.input);
  const MatrixPolynomial p = !o.poly.empty()            ? io::read_polynomial_file(o.poly)
                             : in.contains("polynomial") ? io::polynomial_from_json(in["polynomial"])
                                                         : throw Error(ErrorCode::InvalidArgument,
                                                                       "input has no embedded polynomial; pass --poly");
  json report{{"command", "convert"}, {"direction", o.direction}, {"status", "ok"}};
  int code = kOk;
  try {
    if (o.direction == "chain-to-right" || o.direction == "chain-to-left") {
      const SpectralFactorChain chain = io::chain_from_json(in);
      const bool right = o.direction == "chain-to-right";
      const SolventSetResult r = right ? chain_to_right_solvents(p, chain) : chain_to_left_solvents(p, chain);
      io::write_json_file(dir / (right ? "solvents_right.json" : "solvents_left.json"), io::solvents_to_json(r.set, p));
      report["verification"] = io::report_to_json(verify(p, r.set));
      report["system_conditions"] = r.system_conditions;
    } else if (o.direction == "right-to-left") {
      const SolventSet s = io::solvents_from_json(in);
      if (s.side != Side::Right) throw Error(ErrorCode::InvalidArgument, "right-to-left needs a right solvent set");
      SolventSet left{Side::Left, {}, true};
      json transformers = json::array();
      for (const auto& r : s.solvents) {
        const TransformResult t = right_to_left_solvent(p, r);
        left.solvents.push_back(t.output);
        transformers.push_back(io::matrix_to_json(t.transformer));
      }
      io::write_json_file(dir / "solvents_left.json", io::solvents_to_json(left, p));
      report["verification"] = io::report_to_json(verify(p, left));
      report["transformers"] = transformers;
    } else if (o.direction == "right-to-chain" || o.direction == "left-to-chain") {
      const SolventSet s = io::solvents_from_json(in);
      const ChainResult c = o.direction == "right-to-chain" ? right_solvents_to_chain(p, s) : left_solvents_to_chain(p, s);
      io::write_json_file(dir / "factors.json", io::chain_to_json(c.chain, p));
      report["verification"] = io::report_to_json(verify(p, c.chain));
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown direction " + o.direction);
    }
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = error_json(e);
    code = exit_for(e);
    err << "error: " << e.what() << '\n';
  }
  io::write_json_file(dir / "report.json", report);
  if (code == kOk) out << "wrote " << dir.string() << '\n';
  return code;
}

struct DecoupleOptions {
  std::string input;
  std::vector<double> modes;
  std::vector<std::string> eval{"0"};
  std::string tc;
  std::string refine = "newton-horner";
  std::size_t qd_sweeps = 200;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_decouple(const DecoupleOptions& o, std::ostream& out, std::ostream& err) {
  const fs::path dir(o.out);
  fs::create_directories(dir);
  std::vector<std::string> args{"decouple", absolute(o.input)};
  std::string modes_arg = "--modes=";
  for (std::size_t i = 0; i < o.modes.size(); ++i) modes_arg += (i ? "," : "") + number_arg(o.modes[i]);
  args.push_back(modes_arg);
  std::string eval_arg = "--eval=";
  for (std::size_t i = 0; i < o.eval.size(); ++i) eval_arg += (i ? "," : "") + o.eval[i];
  args.push_back(eval_arg);
  if (!o.tc.empty()) args.push_back("--tc=" + absolute(o.tc));
  args.push_back("--refine=" + o.refine);
  args.push_back("--qd-sweeps=" + std::to_string(o.qd_sweeps));
  args.push_back("--seed=" + std::to_string(o.seed));
  write_manifest(dir, "decouple", args, absolute(o.input),
                 json{{"modes", o.modes}, {"eval", o.eval}, {"tc", o.tc}, {"refine", o.refine}, {"qd_sweeps", o.qd_sweeps}},
                 o.seed);

  const MFDSystem sys = io::mfd_from_json(io::read_json_file(o.input));
  const std::size_t m = sys.denominator.order();
  const std::size_t blocks = sys.denominator.degree() - sys.numerator.degree();
  if (o.modes.size() != m * blocks) {
    throw Error(ErrorCode::InvalidArgument, "--modes needs " + std::to_string(m * blocks) + " values (" +
                                                std::to_string(blocks) + " diagonal blocks of size " + std::to_string(m) + ")");
  }
  std::vector<Matrix> modes;
  for (std::size_t b = 0; b < blocks; ++b) {
    Matrix j(m, m);
    for (std::size_t r = 0; r < m; ++r) j(r, r) = o.modes[b * m + r];
    modes.push_back(std::move(j));
  }
  std::vector<std::complex<double>> points;
  for (const auto& s : o.eval) points.push_back(parse_complex(s));

  DecouplingOptions opts;
  const auto refine = parse_refine_method(o.refine);
  if (!refine) throw Error(ErrorCode::InvalidArgument, "unknown refine method " + o.refine);
  opts.pipeline.refine_method = *refine;
  opts.pipeline.qd.max_iterations = o.qd_sweeps;
  opts.pipeline.iter.seed = o.seed;
  if (!o.tc.empty()) opts.tc = io::square_matrix_from_json(io::read_json_file(o.tc), "T_c");

  json report{{"command", "decouple"}, {"status", "ok"}};
  int code = kOk;
  try {
    const DecouplingResult res = design_decoupling(sys, modes, opts);
    json blocks_json = json::array();
    for (const auto& kb : res.kc_blocks) blocks_json.push_back(io::matrix_to_json(kb));
    json qd_json = json::array();
    for (const auto& q : res.qd) qd_json.push_back(io::matrix_to_json(q));
    json zeros = json::array();
    for (const auto& z : res.numerator_chain.factors) zeros.push_back(io::matrix_to_json(z));
    json desired = json::array();
    for (const auto& q : res.desired_chain.factors) desired.push_back(io::matrix_to_json(q));
    json d{{"format_version", io::kFormatVersion},
           {"kind", "decoupling"},
           {"F", io::matrix_to_json(res.f)},
           {"numerator_zeros", zeros},
           {"numerator_zeros_ordering", "rightmost_first"},
           {"Qd", qd_json},
           {"desired_chain", desired},
           {"desired_chain_ordering", "rightmost_first"},
           {"Kc_blocks", blocks_json},
           {"Kc", io::matrix_to_json(res.kc)},
           {"warnings", res.warnings}};
    if (res.k) d["K"] = io::matrix_to_json(*res.k);
    io::write_json_file(dir / "decoupling.json", d);
    io::write_json_file(dir / "desired_denominator.json", io::polynomial_to_json(res.dd));

    std::ofstream csv(dir / "closed_loop.csv");
    csv << "lambda_re,lambda_im,row,col,closed_re,closed_im,target_re,target_im\n";
    double worst = 0.0;
    for (const auto& lam : points) {
      const ClosedLoopPoint pt = closed_loop_eval(sys, res, lam);
      worst = std::max(worst, pt.error);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
          csv << number_arg(lam.real()) << ',' << number_arg(lam.imag()) << ',' << r << ',' << c << ','
              << number_arg(pt.closed(r, c).real()) << ',' << number_arg(pt.closed(r, c).imag()) << ','
              << number_arg(pt.target(r, c).real()) << ',' << number_arg(pt.target(r, c).imag()) << '\n';
        }
      }
    }
    report["closed_loop_max_error"] = worst;
    report["numerator_verification"] = io::report_to_json(res.numerator_report);
    report["warnings"] = res.warnings;
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = error_json(e);
    code = exit_for(e);
    err << "error: " << e.what() << '\n';
  }
  io::write_json_file(dir / "report.json", report);
  if (code == kOk) out << "wrote " << dir.string() << '\n';
  return code;
}

struct VerifyOptions {
  std::string input;
  std::string against;
  double tol = 1e-8;
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const MatrixPolynomial p = io::read_polynomial_file(o.input);
  const json a = io::read_json_file(o.against);
  VerificationReport v;
  if (a.is_object() && a.value("kind", "") == "solvent_set") {
    v = verify(p, io::solvents_from_json(a));
  } else {
    v = verify(p, io::chain_from_json(a));
  }
  const bool ok = v.passed(o.tol);
  json report{{"command", "verify"}, {"passed", ok}, {"tol", o.tol}, {"verification", io::report_to_json(v)}};
  if (!o.out.empty()) {
    const fs::path dir(o.out);
    fs::create_directories(dir);
    write_manifest(dir, "verify",
                   {"verify", absolute(o.input), "--against=" + absolute(o.against), "--tol=" + number_arg(o.tol)},
                   absolute(o.input), json{{"against", o.against}, {"tol", o.tol}}, 0);
    io::write_json_file(dir / "report.json", report);
  }
  out << report.dump(2) << '\n';
  return ok ? kOk : kNumericalError;
}

int cmd_replay(const std::string& manifest, const std::string& out_override, std::ostream& out, std::ostream& err) {
  const json m = io::read_json_file(manifest);
  if (!m.contains("args") || !m["args"].is_array() || m["args"].empty()) {
    throw Error(ErrorCode::ParseError, "manifest has no args");
  }
  std::vector<std::string> args = m["args"].get<std::vector<std::string>>();
  if (args.front() == "replay") throw Error(ErrorCode::InvalidArgument, "cannot replay a replay");
  const std::string dir = out_override.empty() ? fs::path(manifest).parent_path().string() : out_override;
  args.push_back("--out=" + dir);
  return run(args, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral factors and solvents of monic matrix polynomials", "blockroots"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  FactorizeOptions fo;
  auto* fac = app.add_subcommand("factorize", "Factorize a polynomial into a spectral factor chain");
  fac->add_option("input", fo.input, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  fac->add_option("--method", fo.method, "qd | horner | newton-horner | two-stage | two-stage-delta | pipeline")
      ->check(CLI::IsMember({"qd", "horner", "newton-horner", "two-stage", "two-stage-delta", "pipeline"}));
  fac->add_option("--refine", fo.refine, "Refinement method used by the pipeline")
      ->check(CLI::IsMember({"horner", "newton-horner", "two-stage", "two-stage-delta"}));
  fac->add_option("--max-iter", fo.max_iter, "Iteration cap per extracted factor")->check(CLI::PositiveNumber);
  fac->add_option("--qd-sweeps", fo.qd_sweeps, "Q.D. sweep budget")->check(CLI::PositiveNumber);
  fac->add_option("--qd-tol", fo.qd_tol, "Q.D. relative E-norm tolerance")->check(CLI::PositiveNumber);
  fac->add_option("--eta", fo.eta, "Step-size stop threshold in percent")->check(CLI::PositiveNumber);
  fac->add_option("--tol", fo.tol, "Relative residual tolerance")->check(CLI::PositiveNumber);
  fac->add_option("--seed", fo.seed, "Seed for default-guess jitter and multi-start");
  fac->add_flag("--solvents", fo.solvents, "Also write right and left solvent sets");
  fac->add_option("--out", fo.out, "Output directory")->required();

  ConvertOptions co;
  auto* conv = app.add_subcommand("convert", "Convert between factor chains and solvent sets");
  conv->add_option("input", co.input, "factors.json or solvents_*.json")->required()->check(CLI::ExistingFile);
  conv->add_option("--direction", co.direction, "Conversion direction")
      ->required()
      ->check(CLI::IsMember({"chain-to-right", "chain-to-left", "right-to-left", "right-to-chain", "left-to-chain"}));
  conv->add_option("--poly", co.poly, "Polynomial file (defaults to the one embedded in the input)")
      ->check(CLI::ExistingFile);
  conv->add_option("--out", co.out, "Output directory")->required();

  DecoupleOptions dopt;
  auto* dec = app.add_subcommand("decouple", "Block decoupling of a matrix-fraction system");
  dec->add_option("input", dopt.input, "MFD JSON file")->required()->check(CLI::ExistingFile);
  dec->add_option("--modes", dopt.modes, "Diagonal mode entries, m per block")->required()->delimiter(',');
  dec->add_option("--eval", dopt.eval, "Closed-loop evaluation points, e.g. 0,1,2+1i")->delimiter(',');
  dec->add_option("--tc", dopt.tc, "JSON matrix T_c; writes K = Kc T_c")->check(CLI::ExistingFile);
  dec->add_option("--refine", dopt.refine, "Refinement method for the numerator")
      ->check(CLI::IsMember({"horner", "newton-horner", "two-stage", "two-stage-delta"}));
  dec->add_option("--qd-sweeps", dopt.qd_sweeps, "Q.D. sweep budget for the numerator")->check(CLI::PositiveNumber);
  dec->add_option("--seed", dopt.seed, "Seed for the multi-start fallback");
  dec->add_option("--out", dopt.out, "Output directory")->required();

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Verify a chain or solvent set against a polynomial");
  ver->add_option("input", vo.input, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
  ver->add_option("--against", vo.against, "factors.json or solvents_*.json")->required()->check(CLI::ExistingFile);
  ver->add_option("--tol", vo.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  ver->add_option("--out", vo.out, "Optional output directory for report.json");

  std::string manifest;
  std::string replay_out;
  auto* rep = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  rep->add_option("manifest", manifest, "manifest.json")->required()->check(CLI::ExistingFile);
  rep->add_option("--out", replay_out, "Output directory (defaults to the manifest's directory)");

  std::vector<std::string> argv_store{"blockroots"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*fac) return cmd_factorize(fo, out, err);
    if (*conv) return cmd_convert(co, out, err);
    if (*dec) return cmd_decouple(dopt, out, err);
    if (*ver) return cmd_verify(vo, out);
    if (*rep) return cmd_replay(manifest, replay_out, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace blockroots::cli
