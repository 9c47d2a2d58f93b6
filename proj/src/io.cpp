#include "nuframe/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nuframe/errors.hpp"

namespace nuframe::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("field \"") + what + "\" has the wrong type");
  }
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string("field \"") + what + "\" must be an integer");
  return as<int>(j, what);
}

Json entries_json(const MatrixSeq& f) {
  Json arr = Json::array();
  for (const auto& [pt, m] : f.entries()) {
    Json e;
    e["s"] = pt.s;
    e["l"] = pt.l;
    e["matrix"] = to_json(m);
    arr.push_back(std::move(e));
  }
  return arr;
}

MatrixSeq entries_from_json(const SpectralLattice& L, int n, const Json& arr) {
  if (!arr.is_array()) bad("\"entries\" must be an array");
  MatrixSeq f(L, n);
  for (const auto& e : arr) {
    LatticePoint pt{as_int(field(e, "s"), "s"), as<std::int64_t>(field(e, "l"), "l")};
    if (pt.s != 0 && pt.s != 1) bad("\"s\" must be 0 or 1");
    f.accumulate(pt, matrix_from_json(field(e, "matrix"), n));
  }
  return f;
}

Json doubles(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double d : v) arr.push_back(d);
  return arr;
}

}  // namespace

Json to_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json to_json(const SpectralLattice& L) {
  Json j;
  j["N"] = L.N();
  j["r"] = L.r();
  return j;
}

Json to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index a = 0; a < m.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(to_json(m(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MatrixSeq& f) {
  Json j;
  j["lattice"] = to_json(f.lattice());
  j["n"] = f.n();
  j["entries"] = entries_json(f);
  return j;
}

Json to_json(const SpectrumStep& S) {
  Json j;
  j["lattice"] = to_json(S.lattice());
  j["n"] = S.n();
  j["refinement"] = S.refinement();
  Json cells = Json::array();
  for (std::size_t c = 0; c < S.cell_count(); ++c) cells.push_back(to_json(S.value(c)));
  j["cells"] = std::move(cells);
  return j;
}

Json to_json(const FrameSystem& sys) {
  Json j;
  j["lattice"] = to_json(sys.lattice());
  j["n"] = sys.n();
  if (sys.is_spectral()) {
    Json arr = Json::array();
    for (const auto& S : sys.spectral_envelopes()) arr.push_back(to_json(S));
    j["envelopes_spectral"] = std::move(arr);
  } else {
    Json arr = Json::array();
    for (const auto& f : sys.time_envelopes()) arr.push_back(entries_json(f));
    j["envelopes"] = std::move(arr);
  }
  return j;
}

Json to_json(const Signal& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

Json to_json(const SystemDocument& doc) {
  Json j = to_json(doc.system);
  if (!doc.companions.empty()) {
    Json c;
    for (const auto& [name, sig] : doc.companions) c[name] = to_json(sig);
    j["companions"] = std::move(c);
  }
  return j;
}

Json to_json(const FrameBoundsReport& r, bool include_curves) {
  Json j;
  j["a_est"] = r.a_est;
  j["b_est"] = r.b_est;
  j["feasible"] = r.feasible;
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["grid"] = r.grid;
  j["x_at_min"] = r.x_at_min;
  j["x_at_max"] = r.x_at_max;
  Json sup;
  sup["value"] = r.envelope_sup.value;
  sup["j_at_max"] = r.envelope_sup.j_at_max;
  sup["x_at_max"] = r.envelope_sup.x_at_max;
  sup["grid"] = r.envelope_sup.grid;
  j["envelope_sup"] = std::move(sup);
  Json levels = Json::array();
  for (const auto& lv : r.levels) {
    Json l;
    l["grid"] = lv.grid;
    l["a_est"] = lv.a_est;
    l["b_est"] = lv.b_est;
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  if (include_curves) {
    Json curves;
    curves["x"] = doubles(r.grid_x);
    curves["sigma_min_sq_over_4N"] = doubles(r.sigma_min_curve);
    curves["sigma_max_sq_over_4N"] = doubles(r.sigma_max_curve);
    j["curves"] = std::move(curves);
  }
  return j;
}

Json to_json(const PerturbReport& r) {
  Json j;
  j["mode"] = std::string(perturb_mode_name(r.mode));
  j["a0"] = r.a0;
  j["b0"] = r.b0;
  j["p"] = r.p;
  j["n"] = r.n;
  j["N"] = r.N;
  j["epsilon_measured"] = r.epsilon_measured;
  j["j_at_max"] = r.j_at_max;
  j["x_at_max"] = r.x_at_max;
  j["epsilon_per_envelope"] = doubles(r.epsilon_per_envelope);
  j["condition_value"] = r.condition_value;
  j["condition_holds"] = r.condition_holds;
  j["epsilon_below_condition"] = r.epsilon_below_condition;
  j["new_lower"] = r.new_lower;
  j["new_upper"] = r.new_upper;
  j["grid"] = r.grid;
  return j;
}

SpectralLattice lattice_from_json(const Json& j) {
  return make_lattice(as_int(field(j, "N"), "N"), as_int(field(j, "r"), "r"));
}

CMatrix matrix_from_json(const Json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) bad("matrix must have n rows");
  CMatrix m(n, n);
  for (int a = 0; a < n; ++a) {
    const Json& row = j[a];
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("matrix must have n columns");
    for (int b = 0; b < n; ++b) {
      const Json& z = row[b];
      if (!field(z, "re").is_number() || !field(z, "im").is_number()) bad("complex parts must be numbers");
      m(a, b) = Complex(z["re"].get<double>(), z["im"].get<double>());
    }
  }
  return m;
}

MatrixSeq matrix_seq_from_json(const Json& j) {
  SpectralLattice L = lattice_from_json(field(j, "lattice"));
  int n = as_int(field(j, "n"), "n");
  if (n < 1) bad("\"n\" must be positive");
  return entries_from_json(L, n, field(j, "entries"));
}

SpectrumStep spectrum_step_from_json(const Json& j) {
  SpectralLattice L = lattice_from_json(field(j, "lattice"));
  int n = as_int(field(j, "n"), "n");
  if (n < 1) bad("\"n\" must be positive");
  int K = as_int(field(j, "refinement"), "refinement");
  const Json& cells = field(j, "cells");
  if (!cells.is_array()) bad("\"cells\" must be an array");
  std::vector<CMatrix> values;
  values.reserve(cells.size());
  for (const auto& c : cells) values.push_back(matrix_from_json(c, n));
  return SpectrumStep(L, n, K, std::move(values));
}

FrameSystem frame_system_from_json(const Json& j) {
  SpectralLattice L = lattice_from_json(field(j, "lattice"));
  int n = as_int(field(j, "n"), "n");
  if (n < 1) bad("\"n\" must be positive");
  const bool time = j.contains("envelopes");
  const bool spectral = j.contains("envelopes_spectral");
  if (time == spectral) bad("exactly one of \"envelopes\" and \"envelopes_spectral\" is required");
  if (time) {
    const Json& arr = j["envelopes"];
    if (!arr.is_array()) bad("\"envelopes\" must be an array");
    std::vector<MatrixSeq> envs;
    for (const auto& e : arr) {
      if (e.is_object()) {
        MatrixSeq f = matrix_seq_from_json(e);
        if (!(f.lattice() == L) || f.n() != n) throw Error(ErrorCode::MixedLattice, "envelope differs from system");
        envs.push_back(std::move(f));
      } else {
        envs.push_back(entries_from_json(L, n, e));
      }
    }
    return FrameSystem(std::move(envs));
  }
  const Json& arr = j["envelopes_spectral"];
  if (!arr.is_array()) bad("\"envelopes_spectral\" must be an array");
  std::vector<SpectrumStep> envs;
  for (const auto& e : arr) {
    SpectrumStep S = spectrum_step_from_json(e);
    if (!(S.lattice() == L) || S.n() != n) throw Error(ErrorCode::MixedLattice, "envelope differs from system");
    envs.push_back(std::move(S));
  }
  return FrameSystem(std::move(envs));
}

Signal signal_from_json(const Json& j) {
  if (j.is_object() && j.contains("entries")) return matrix_seq_from_json(j);
  if (j.is_object() && j.contains("cells")) return spectrum_step_from_json(j);
  bad("signal needs \"entries\" or \"cells\"");
}

SystemDocument system_document_from_json(const Json& j) {
  SystemDocument doc{frame_system_from_json(j), {}};
  if (auto it = j.find("companions"); it != j.end()) {
    if (!it->is_object()) bad("\"companions\" must be an object");
    for (const auto& [name, value] : it->items()) doc.companions.emplace(name, signal_from_json(value));
  }
  return doc;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) bad("cannot write " + path);
  out << content;
  if (!out) bad("write failed for " + path);
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nuframe::io
