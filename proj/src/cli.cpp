#include "nuframe/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nuframe/errors.hpp"
#include "nuframe/fixtures.hpp"
#include "nuframe/gamma.hpp"

namespace nuframe::cli {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kTextDigits = 9;
constexpr int kDefaultCounterexampleN = 2;
constexpr int kDefaultCounterexampleR = 1;
constexpr double kDefaultCounterexampleA0 = 1.0;

constexpr const char* kSchemaHelp =
    "System files are JSON objects:\n"
    "  {\"lattice\": {\"N\": int, \"r\": int}, \"n\": int,\n"
    "   \"envelopes\": [[{\"s\": 0|1, \"l\": int, \"matrix\": [[{\"re\": x, \"im\": y}, ...], ...]}, ...], ...]\n"
    "   | \"envelopes_spectral\": [{\"lattice\", \"n\", \"refinement\": K, \"cells\": [matrix, ...]}, ...],\n"
    "   \"companions\": {name: signal, ...} (optional)}\n"
    "A signal is a sequence {\"lattice\", \"n\", \"entries\": [...]} or a step spectrum {..., \"cells\": [...]}.\n";

struct Input {
  std::string path;
  std::string hash;
};

// Everything a subcommand needs besides its own flags.
struct Context {
  std::ostream& out;
  std::ostream& err;
  std::vector<Input> inputs;
  unsigned threads = 0;

  io::Json load(const std::string& path) {
    const std::string text = io::read_text_file(path);
    inputs.push_back({path, io::fnv1a64_hex(text)});
    try {
      return io::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
  }

  io::Json provenance(const std::string& subcommand, const io::Json& params, const io::Json& tolerances) const {
    io::Json p;
    p["tool"] = "nuframe";
    p["version"] = kVersion;
    p["subcommand"] = subcommand;
    p["parameters"] = params;
    p["tolerances"] = tolerances;
    io::Json in = io::Json::array();
    for (const auto& i : inputs) {
      io::Json e;
      e["path"] = i.path;
      e["fnv1a64"] = i.hash;
      in.push_back(std::move(e));
    }
    p["inputs"] = std::move(in);
    return p;
  }

  void emit(const std::string& path, const io::Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (path == "-")
      out << text;
    else
      io::write_text_file(path, text);
  }
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss << std::setprecision(kTextDigits) << v;
  return ss.str();
}

std::string fmt(Complex z) {
  std::ostringstream ss;
  ss << std::setprecision(kTextDigits) << z.real() << (std::signbit(z.imag()) ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return ss.str();
}

void print_matrix(std::ostream& out, const CMatrix& m, const std::string& indent = "  ") {
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    out << indent << "[";
    for (Eigen::Index b = 0; b < m.cols(); ++b) out << (b ? ", " : "") << fmt(m(a, b));
    out << "]\n";
  }
}

void csv_matrix(std::ostream& out, const std::string& label, const CMatrix& m) {
  out << std::setprecision(17);
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = 0; b < m.cols(); ++b)
      out << label << "," << a << "," << b << "," << m(a, b).real() << "," << m(a, b).imag() << "\n";
}

io::SystemDocument load_system(Context& ctx, const std::string& path) {
  return io::system_document_from_json(ctx.load(path));
}

io::Signal resolve_signal(Context& ctx, const io::SystemDocument& doc, const std::string& spec) {
  if (auto it = doc.companions.find(spec); it != doc.companions.end()) return it->second;
  return io::signal_from_json(ctx.load(spec));
}

std::string form_name(const FrameSystem& sys) { return sys.is_spectral() ? "step_spectrum" : "sequence"; }

// ---- info ------------------------------------------------------------------

struct InfoOpts {
  std::string system;
  std::string json;
};

int cmd_info(Context& ctx, const InfoOpts& o) {
  const io::SystemDocument doc = load_system(ctx, o.system);
  const FrameSystem& sys = doc.system;
  const int N = sys.lattice().N();
  const bool feas = feasibility(sys.p(), sys.n(), N);
  io::Json r;
  r["lattice"] = io::to_json(sys.lattice());
  r["n"] = sys.n();
  r["p"] = sys.p();
  r["form"] = form_name(sys);
  r["feasible"] = feas;
  r["rows_2p"] = 2 * sys.p();
  r["columns_4Nn2"] = 4 * N * sys.n() * sys.n();
  io::Json support = io::Json::array();
  if (sys.is_spectral())
    for (const auto& S : sys.spectral_envelopes()) support.push_back(S.refinement());
  else
    for (const auto& f : sys.time_envelopes()) support.push_back(f.support_size());
  r[sys.is_spectral() ? "refinements" : "support_sizes"] = std::move(support);
  io::Json names = io::Json::array();
  for (const auto& [name, sig] : doc.companions) names.push_back(name);
  r["companions"] = std::move(names);
  if (!o.json.empty()) {
    r["provenance"] = ctx.provenance("info", io::Json::object(), io::Json::object());
    ctx.emit(o.json, r);
  }
  if (o.json != "-") {
    ctx.out << "lattice     N=" << N << " r=" << sys.lattice().r() << "\n"
            << "n           " << sys.n() << "\n"
            << "p           " << sys.p() << "\n"
            << "form        " << form_name(sys) << "\n"
            << "feasible    " << (feas ? "yes" : "no") << " (2p=" << 2 * sys.p()
            << ", 4Nn^2=" << 4 * N * sys.n() * sys.n() << ")\n";
    for (const auto& [name, sig] : doc.companions) ctx.out << "companion   " << name << "\n";
  }
  return kOk;
}

// ---- fourier ---------------------------------------------------------------

struct FourierOpts {
  std::string input;
  double x = 0.0;
  std::optional<int> envelope;
  std::string signal;
  std::string json;
};

int cmd_fourier(Context& ctx, const FourierOpts& o) {
  const io::Json j = ctx.load(o.input);
  CMatrix value;
  std::string label;
  if (o.envelope || !o.signal.empty() || j.contains("envelopes") || j.contains("envelopes_spectral")) {
    const io::SystemDocument doc = io::system_document_from_json(j);
    if (!o.signal.empty()) {
      const io::Signal s = resolve_signal(ctx, doc, o.signal);
      value = std::visit(
          [&](const auto& v) -> CMatrix {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, MatrixSeq>)
              return fourier_eval(v, o.x);
            else
              return v.eval(o.x);
          },
          s);
      label = o.signal;
    } else {
      const int je = o.envelope.value_or(0);
      if (je < 0 || je >= doc.system.p()) throw Error(ErrorCode::ShapeMismatch, "envelope index out of range");
      value = doc.system.envelope_spectrum(je, o.x);
      label = "envelope " + std::to_string(je);
    }
  } else {
    const io::Signal s = io::signal_from_json(j);
    if (const auto* f = std::get_if<MatrixSeq>(&s))
      value = fourier_eval(*f, o.x);
    else
      value = std::get<SpectrumStep>(s).eval(o.x);
    label = "signal";
  }
  if (!o.json.empty()) {
    io::Json r;
    r["x"] = o.x;
    r["label"] = label;
    r["value"] = io::to_json(value);
    r["frobenius_norm"] = matrix_frobenius_norm(value);
    io::Json params;
    params["x"] = o.x;
    r["provenance"] = ctx.provenance("fourier", params, io::Json::object());
    ctx.emit(o.json, r);
  }
  if (o.json != "-") {
    ctx.out << "F(" << label << ")(" << fmt(o.x) << ") =\n";
    print_matrix(ctx.out, value);
    ctx.out << "frobenius norm " << fmt(matrix_frobenius_norm(value)) << "\n";
  }
  return kOk;
}

// ---- bessel ----------------------------------------------------------------

struct BesselOpts {
  std::string system;
  int grid = 1024;
  std::optional<double> b0;
  std::string json;
};

int cmd_bessel(Context& ctx, const BesselOpts& o) {
  const io::SystemDocument doc = load_system(ctx, o.system);
  const FrameSystem& sys = doc.system;
  const SupNormEstimate sup = envelope_sup_norm(sys, o.grid);
  std::optional<double> bound;
  if (sup.value > 0.0) bound = bessel_sufficient_bound(sys.p(), sys.n(), sup.value);
  std::optional<NecessaryBounds> nec;
  if (o.b0) nec = bessel_necessary_bounds(sys.lattice().N(), *o.b0);
  if (!o.json.empty()) {
    io::Json r;
    io::Json s;
    s["value"] = sup.value;
    s["j_at_max"] = sup.j_at_max;
    s["x_at_max"] = sup.x_at_max;
    s["grid"] = sup.grid;
    r["envelope_sup"] = std::move(s);
    r["sufficient_bound"] = bound ? io::Json(*bound) : io::Json(nullptr);
    if (nec) {
      io::Json n;
      n["b0"] = *o.b0;
      n["proof_constant"] = nec->proof_constant;
      n["stated_constant"] = nec->stated_constant;
      r["necessary"] = std::move(n);
    }
    io::Json params;
    params["grid"] = o.grid;
    r["provenance"] = ctx.provenance("bessel", params, io::Json::object());
    ctx.emit(o.json, r);
  }
  if (o.json != "-") {
    ctx.out << "envelope sup     " << fmt(sup.value) << " (envelope " << sup.j_at_max << ", x=" << fmt(sup.x_at_max)
            << ", grid " << sup.grid << ")\n";
    ctx.out << "bessel bound     " << (bound ? fmt(*bound) : std::string("n/a (zero envelopes)")) << "\n";
    if (nec)
      ctx.out << "necessary bound  " << fmt(nec->proof_constant) << " (proof), " << fmt(nec->stated_constant)
              << " (stated)\n";
  }
  return kOk;
}

// ---- gamma -----------------------------------------------------------------

struct GammaOpts {
  std::string system;
  double x = 0.0;
  std::string format = "text";
  std::optional<int> m;
  std::optional<int> k;
  bool check_identity = false;
  std::string signal;
  int nodes = 64;
  double tolerance = 1e-9;
  std::string json;
};

int cmd_gamma(Context& ctx, const GammaOpts& o) {
  const io::SystemDocument doc = load_system(ctx, o.system);
  const FrameSystem& sys = doc.system;
  const int n = sys.n();
  std::vector<std::pair<int, int>> blocks;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k)
      if ((!o.m || *o.m == m) && (!o.k || *o.k == k)) blocks.emplace_back(m, k);
  if (blocks.empty()) throw Error(ErrorCode::ShapeMismatch, "no (m,k) block matches the selection");

  const CMatrix T = stacked_operator(sys, o.x);
  const Eigen::VectorXd sv = singular_values(T);

  std::optional<double> residual;
  if (o.check_identity) {
    MatrixSeq f = sys.is_spectral() ? MatrixSeq(sys.lattice(), n) : sys.time_envelopes().front();
    if (!o.signal.empty()) {
      const io::Signal s = resolve_signal(ctx, doc, o.signal);
      if (!std::holds_alternative<MatrixSeq>(s))
        throw Error(ErrorCode::InvalidInput, "identity check needs a sequence signal");
      f = std::get<MatrixSeq>(s);
    }
    residual = identity_residual(sys, f, o.nodes);
  }

  if (o.format == "csv") {
    ctx.out << "object,row,col,re,im\n";
    for (auto [m, k] : blocks) {
      const std::string tag = std::to_string(m) + "_" + std::to_string(k);
      csv_matrix(ctx.out, "gamma_" + tag, gamma_matrix(sys, m, k, o.x));
      csv_matrix(ctx.out, "gram_" + tag, gamma_gram(sys, m, k, m, k, o.x));
    }
    for (Eigen::Index i = 0; i < sv.size(); ++i) ctx.out << "singular," << i << ",0," << sv(i) << ",0\n";
    if (residual) ctx.out << "identity_residual,0,0," << *residual << ",0\n";
  } else if (o.format == "text") {
    for (auto [m, k] : blocks) {
      ctx.out << "Gamma_" << m << k << "(" << fmt(o.x) << ") =\n";
      print_matrix(ctx.out, gamma_matrix(sys, m, k, o.x));
      ctx.out << "Gram_" << m << k << " =\n";
      print_matrix(ctx.out, gamma_gram(sys, m, k, m, k, o.x));
    }
    ctx.out << "singular values of T:";
    for (Eigen::Index i = 0; i < sv.size(); ++i) ctx.out << " " << fmt(sv(i));
    ctx.out << "\n";
    if (residual)
      ctx.out << "identity residual " << fmt(*residual) << (*residual <= o.tolerance ? " (ok)" : " (FAILED)") << "\n";
  } else {
    throw Error(ErrorCode::InvalidInput, "--format must be text or csv");
  }

  if (!o.json.empty()) {
    io::Json r;
    r["x"] = o.x;
    io::Json bl = io::Json::array();
    for (auto [m, k] : blocks) {
      io::Json b;
      b["m"] = m;
      b["k"] = k;
      b["gamma"] = io::to_json(gamma_matrix(sys, m, k, o.x));
      b["gram"] = io::to_json(CMatrix(gamma_gram(sys, m, k, m, k, o.x)));
      bl.push_back(std::move(b));
    }
    r["blocks"] = std::move(bl);
    io::Json s = io::Json::array();
    for (Eigen::Index i = 0; i < sv.size(); ++i) s.push_back(sv(i));
    r["singular_values"] = std::move(s);
    r["identity_residual"] = residual ? io::Json(*residual) : io::Json(nullptr);
    io::Json params;
    params["x"] = o.x;
    params["nodes"] = o.nodes;
    io::Json tol;
    tol["identity"] = o.tolerance;
    r["provenance"] = ctx.provenance("gamma", params, tol);
    ctx.emit(o.json, r);
  }
  if (residual && *residual > o.tolerance) return kUsage;
  return kOk;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsOpts {
  std::string system;
  int grid = 1024;
  int refine = 0;
  double lower_tol = 1e-10;
  std::string csv;
  std::string json;
};

int cmd_bounds(Context& ctx, const BoundsOpts& o) {
  const io::SystemDocument doc = load_system(ctx, o.system);
  FrameBoundsReport rep = frame_bounds_gamma_refined(doc.system, o.grid, o.refine, ctx.threads);
  if (rep.feasible) rep.verdict = rep.a_est < o.lower_tol ? Verdict::BesselOnly : Verdict::Frame;

  if (!o.csv.empty()) {
    std::ostringstream ss;
    ss << "x,sigma_min_sq_over_4N,sigma_max_sq_over_4N\n" << std::setprecision(17);
    for (std::size_t i = 0; i < rep.grid_x.size(); ++i)
      ss << rep.grid_x[i] << "," << rep.sigma_min_curve[i] << "," << rep.sigma_max_curve[i] << "\n";
    if (o.csv == "-")
      ctx.out << ss.str();
    else
      io::write_text_file(o.csv, ss.str());
  }
  if (!o.json.empty()) {
    io::Json r = io::to_json(rep, false);
    io::Json params;
    params["grid"] = o.grid;
    params["refine"] = o.refine;
    io::Json tol;
    tol["bessel_only_below"] = o.lower_tol;
    tol["eigenvalue_zero_relative"] = 1e-12;
    r["provenance"] = ctx.provenance("bounds", params, tol);
    ctx.emit(o.json, r);
  }
  if (o.json != "-" && o.csv != "-") {
    ctx.out << "verdict   " << verdict_name(rep.verdict) << "\n"
            << "feasible  " << (rep.feasible ? "yes" : "no") << "\n"
            << "a_est     " << fmt(rep.a_est) << " (x=" << fmt(rep.x_at_min) << ")\n"
            << "b_est     " << fmt(rep.b_est) << " (x=" << fmt(rep.x_at_max) << ")\n"
            << "grid      " << rep.grid << "\n";
    for (const auto& lv : rep.levels)
      ctx.out << "  level M=" << lv.grid << "  a=" << fmt(lv.a_est) << "  b=" << fmt(lv.b_est) << "\n";
  }
  switch (rep.verdict) {
    case Verdict::Frame: return kOk;
    case Verdict::BesselOnly: return kBesselOnly;
    case Verdict::RankDeficient: return kRankDeficient;
  }
  return kOk;
}

// ---- framesum --------------------------------------------------------------

struct FrameSumOpts {
  std::string system;
  std::string signal;
  int window = -1;
  std::string json;
};

int cmd_framesum(Context& ctx, const FrameSumOpts& o) {
  const io::SystemDocument doc = load_system(ctx, o.system);
  const io::Signal s = resolve_signal(ctx, doc, o.signal);
  io::Json r;
  double value = 0.0;
  double norm2 = 0.0;
  std::optional<TruncatedSum> trunc;
  if (const auto* f = std::get_if<MatrixSeq>(&s)) {
    value = frame_sum(doc.system, *f);
    norm2 = f->norm_squared();
    r["method"] = "exact_overlap";
  } else {
    const auto& F = std::get<SpectrumStep>(s);
    norm2 = F.norm_squared();
    if (o.window >= 0) {
      trunc = frame_sum_spectral_truncated(doc.system, F, o.window);
      value = trunc->value;
      r["method"] = "truncated";
      r["tail_bound"] = trunc->tail_bound;
      r["window"] = trunc->window;
    } else {
      value = frame_sum_spectral(doc.system, F);
      r["method"] = "coset_folding";
    }
  }
  r["frame_sum"] = value;
  r["signal_norm_squared"] = norm2;
  r["ratio"] = norm2 > 0.0 ? io::Json(value / norm2) : io::Json(nullptr);
  if (!o.json.empty()) {
    io::Json params;
    params["signal"] = o.signal;
    params["window"] = o.window;
    r["provenance"] = ctx.provenance("framesum", params, io::Json::object());
    ctx.emit(o.json, r);
  }
  if (o.json != "-") {
    ctx.out << "frame sum      " << fmt(value) << "\n"
            << "signal norm^2  " << fmt(norm2) << "\n";
    if (norm2 > 0.0) ctx.out << "ratio          " << fmt(value / norm2) << "\n";
    if (trunc) ctx.out << "tail bound     " << fmt(trunc->tail_bound) << " (|l| <= " << trunc->window << ")\n";
  }
  return kOk;
}

// ---- perturb ---------------------------------------------------------------

struct PerturbOpts {
  std::string f;
  std::string g;
  std::string mode = "absolute";
  double a0 = 0.0;
  double b0 = 0.0;
  int grid = 4096;
  std::string json;
};

int cmd_perturb(Context& ctx, const PerturbOpts& o) {
  const io::SystemDocument F = load_system(ctx, o.f);
  const io::SystemDocument G = load_system(ctx, o.g);
  PerturbReport rep;
  if (o.mode == "absolute")
    rep = check_absolute(F.system, G.system, o.a0, o.b0, o.grid);
  else if (o.mode == "relative")
    rep = check_relative(F.system, G.system, o.a0, o.b0, o.grid);
  else
    throw Error(ErrorCode::InvalidInput, "--mode must be absolute or relative");
  if (!o.json.empty()) {
    io::Json r = io::to_json(rep);
    io::Json params;
    params["mode"] = o.mode;
    params["a0"] = o.a0;
    params["b0"] = o.b0;
    params["grid"] = o.grid;
    r["provenance"] = ctx.provenance("perturb", params, io::Json::object());
    ctx.emit(o.json, r);
  }
  if (o.json != "-") {
    ctx.out << "mode              " << perturb_mode_name(rep.mode) << "\n"
            << "epsilon           " << fmt(rep.epsilon_measured) << " (envelope " << rep.j_at_max
            << ", x=" << fmt(rep.x_at_max) << ")\n"
            << "condition value   " << fmt(rep.condition_value) << " vs a0=" << fmt(rep.a0) << "\n"
            << "condition holds   " << (rep.condition_holds ? "yes" : "no") << "\n"
            << "eps below value   " << (rep.epsilon_below_condition ? "yes" : "no") << "\n";
    if (rep.condition_holds)
      ctx.out << "perturbed bounds  [" << fmt(rep.new_lower) << ", " << fmt(rep.new_upper) << "]\n";
  }
  return rep.condition_holds ? kOk : kPerturbFailed;
}

// ---- examples --------------------------------------------------------------

int cmd_examples_list(Context& ctx) {
  for (const auto& name : fixtures::names()) ctx.out << name << "\n";
  return kOk;
}

int cmd_examples_export(Context& ctx, const std::string& name, const std::string& out) {
  const io::SystemDocument doc = fixture_document(name);
  ctx.emit(out, io::to_json(doc));
  return kOk;
}

}  // namespace

const char* version() noexcept { return kVersion; }

io::SystemDocument fixture_document(const std::string& name) {
  if (name == "exam1") return {fixtures::exam1(), {}};
  if (name == "exam1-perturbed") return {fixtures::exam1_perturbed(), {}};
  if (name == "onb") return {fixtures::onb_fixture(), {}};
  if (name == "counterexample") {
    fixtures::Counterexample c =
        fixtures::counterexample(kDefaultCounterexampleN, kDefaultCounterexampleR, kDefaultCounterexampleA0);
    io::SystemDocument doc{c.system, {}};
    doc.companions.emplace("test_spectrum", c.test_spectrum);
    return doc;
  }
  throw Error(ErrorCode::InvalidInput, "unknown fixture \"" + name + "\"");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frame bounds and perturbation audits for matrix-valued spectral-lattice systems", "nuframe"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  Context ctx{out, err, {}, 0};
  app.add_option("--threads", ctx.threads, "worker threads (0 = NUFRAME_THREADS or hardware)");

  std::function<int()> action;

  InfoOpts info;
  auto* c_info = app.add_subcommand("info", "summarize a system file");
  c_info->add_option("system", info.system, "system JSON")->required();
  c_info->add_option("--json", info.json, "write JSON report ('-' for stdout)");
  c_info->callback([&] { action = [&] { return cmd_info(ctx, info); }; });

  FourierOpts four;
  auto* c_four = app.add_subcommand("fourier", "evaluate a Fourier transform at x");
  c_four->add_option("input", four.input, "signal or system JSON")->required();
  c_four->add_option("--x", four.x, "frequency")->required();
  c_four->add_option("--envelope", four.envelope, "envelope index (system input)")->check(CLI::NonNegativeNumber);
  c_four->add_option("--signal", four.signal, "companion name or signal JSON (system input)");
  c_four->add_option("--json", four.json, "write JSON report ('-' for stdout)");
  c_four->callback([&] { action = [&] { return cmd_fourier(ctx, four); }; });

  BesselOpts bes;
  auto* c_bes = app.add_subcommand("bessel", "envelope sup norm and Bessel bounds");
  c_bes->add_option("system", bes.system, "system JSON")->required();
  c_bes->add_option("--grid", bes.grid, "sample points per Omega branch")->check(CLI::Range(2, 1 << 24));
  c_bes->add_option("--b0", bes.b0, "upper bound for the necessary-condition constants")->check(CLI::PositiveNumber);
  c_bes->add_option("--json", bes.json, "write JSON report ('-' for stdout)");
  c_bes->callback([&] { action = [&] { return cmd_bessel(ctx, bes); }; });

  GammaOpts gam;
  auto* c_gam = app.add_subcommand("gamma", "Gamma matrices, Grams and singular values at x");
  c_gam->add_option("system", gam.system, "system JSON")->required();
  c_gam->add_option("--x", gam.x, "point in [0, 1/4N)")->required();
  c_gam->add_option("--format", gam.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
  c_gam->add_option("--m", gam.m, "row index filter")->check(CLI::NonNegativeNumber);
  c_gam->add_option("--k", gam.k, "column index filter")->check(CLI::NonNegativeNumber);
  c_gam->add_flag("--check-identity", gam.check_identity, "verify the quadrature identity");
  c_gam->add_option("--signal", gam.signal, "companion name or signal JSON for the identity check");
  c_gam->add_option("--nodes", gam.nodes, "Gauss-Legendre nodes")->check(CLI::Range(1, 4096));
  c_gam->add_option("--tolerance", gam.tolerance, "identity residual tolerance")->check(CLI::PositiveNumber);
  c_gam->add_option("--json", gam.json, "write JSON report ('-' for stdout)");
  c_gam->callback([&] { action = [&] { return cmd_gamma(ctx, gam); }; });

  BoundsOpts bnd;
  auto* c_bnd = app.add_subcommand("bounds", "frame bound estimates from the Gamma sweep");
  c_bnd->add_option("system", bnd.system, "system JSON")->required();
  c_bnd->add_option("--grid", bnd.grid, "midpoints on [0, 1/4N)")->check(CLI::Range(8, 1 << 22));
  c_bnd->add_option("--refine", bnd.refine, "grid doublings")->check(CLI::Range(0, 12));
  c_bnd->add_option("--lower-tol", bnd.lower_tol, "a_est below this is bessel_only")->check(CLI::PositiveNumber);
  c_bnd->add_option("--csv", bnd.csv, "write the sigma curves ('-' for stdout)");
  c_bnd->add_option("--json", bnd.json, "write JSON report ('-' for stdout)");
  c_bnd->callback([&] { action = [&] { return cmd_bounds(ctx, bnd); }; });

  FrameSumOpts fs;
  auto* c_fs = app.add_subcommand("framesum", "frame sum of a signal");
  c_fs->add_option("system", fs.system, "system JSON")->required();
  c_fs->add_option("--signal", fs.signal, "companion name or signal JSON")->required();
  c_fs->add_option("--window", fs.window, "truncate step-spectrum sums to |l| <= window")->check(CLI::Range(1, 1 << 20));
  c_fs->add_option("--json", fs.json, "write JSON report ('-' for stdout)");
  c_fs->callback([&] { action = [&] { return cmd_framesum(ctx, fs); }; });

  PerturbOpts per;
  auto* c_per = app.add_subcommand("perturb", "perturbation audit of F by G");
  c_per->add_option("F", per.f, "unperturbed system JSON")->required();
  c_per->add_option("G", per.g, "perturbed system JSON")->required();
  c_per->add_option("--mode", per.mode, "absolute or relative")->check(CLI::IsMember({"absolute", "relative"}));
  c_per->add_option("--a0", per.a0, "lower frame bound of F")->required()->check(CLI::PositiveNumber);
  c_per->add_option("--b0", per.b0, "upper frame bound of F")->required()->check(CLI::PositiveNumber);
  c_per->add_option("--grid", per.grid, "sample points per Omega branch")->check(CLI::Range(2, 1 << 24));
  c_per->add_option("--json", per.json, "write JSON report ('-' for stdout)");
  c_per->callback([&] { action = [&] { return cmd_perturb(ctx, per); }; });

  auto* c_ex = app.add_subcommand("examples", "built-in fixtures");
  c_ex->require_subcommand(1);
  auto* c_list = c_ex->add_subcommand("list", "list fixture names");
  c_list->callback([&] { action = [&] { return cmd_examples_list(ctx); }; });
  std::string ex_name;
  std::string ex_out = "-";
  auto* c_exp = c_ex->add_subcommand("export", "write a fixture as JSON");
  c_exp->add_option("name", ex_name, "fixture name")->required()->check(CLI::IsMember(fixtures::names()));
  c_exp->add_option("--out", ex_out, "output path ('-' for stdout)");
  c_exp->callback([&] { action = [&] { return cmd_examples_export(ctx, ex_name, ex_out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kSchemaHelp;
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help() << kSchemaHelp;
    return kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.code() == ErrorCode::InvalidInput) err << kSchemaHelp;
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace nuframe::cli
