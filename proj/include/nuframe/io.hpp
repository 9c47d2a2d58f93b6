#pragma once

// JSON schema for lattices, sequences, step spectra, systems and reports.
// Complex numbers are {"re": x, "im": y}; doubles are written with round-trip precision.

#include <map>
#include <string>
#include <variant>

#include "json.hpp"
#include "nuframe/bounds.hpp"
#include "nuframe/perturb.hpp"

namespace nuframe::io {

using Json = nlohmann::ordered_json;

Json to_json(const SpectralLattice& L);
Json to_json(const CMatrix& m);
Json to_json(const MatrixSeq& f);
Json to_json(const SpectrumStep& S);
Json to_json(const FrameSystem& sys);
Json to_json(const FrameBoundsReport& r, bool include_curves = true);
Json to_json(const PerturbReport& r);
Json to_json(Complex z);

SpectralLattice lattice_from_json(const Json& j);
CMatrix matrix_from_json(const Json& j, int n);
MatrixSeq matrix_seq_from_json(const Json& j);
SpectrumStep spectrum_step_from_json(const Json& j);
FrameSystem frame_system_from_json(const Json& j);

using Signal = std::variant<MatrixSeq, SpectrumStep>;

/// A system file: the system plus optional named companion signals.
struct SystemDocument {
  FrameSystem system;
  std::map<std::string, Signal> companions;
};

Json to_json(const SystemDocument& doc);
SystemDocument system_document_from_json(const Json& j);

/// A bare MatrixSeq ("entries") or SpectrumStep ("cells").
Signal signal_from_json(const Json& j);
Json to_json(const Signal& s);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace nuframe::io
