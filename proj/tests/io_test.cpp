#include <gtest/gtest.h>

#include <random>

#include "nuframe/errors.hpp"
#include "nuframe/fixtures.hpp"
#include "nuframe/io.hpp"
#include "oracles.hpp"

using namespace nuframe;
using io::Json;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    io::system_document_from_json(Json::parse(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::DomainError;
}

}  // namespace

TEST(Io, LatticeFragment) {
  EXPECT_EQ(io::to_json(make_lattice(2, 1)).dump(), R"({"N":2,"r":1})");
  EXPECT_EQ(io::lattice_from_json(Json::parse(R"({"N": 5, "r": 3})")), make_lattice(5, 3));
  try {
    io::lattice_from_json(Json::parse(R"({"N": 2, "r": 2})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(error_code_name(e.code()), "E_LATTICE");
  }
}

TEST(Io, ComplexAndMatrix) {
  EXPECT_EQ(io::to_json(Complex(0.5, -2.0)).dump(), R"({"re":0.5,"im":-2.0})");
  CMatrix m(2, 2);
  m << Complex(1, 2), Complex(0.1, 0), Complex(-3, 1e-300), Complex(0, 0);
  EXPECT_EQ(io::matrix_from_json(io::to_json(m), 2), m);
  EXPECT_THROW(io::matrix_from_json(io::to_json(m), 3), Error);
}

TEST(Io, MatrixSeqRoundTripRandom) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    const MatrixSeq f = oracle::random_seq(rng, make_lattice(3, 1), 1 + t % 3);
    EXPECT_EQ(io::matrix_seq_from_json(Json::parse(io::to_json(f).dump())), f);
  }
}

TEST(Io, SpectrumStepRoundTrip) {
  std::mt19937_64 rng(73);
  SpectrumStep S(make_lattice(2, 1), 2, 3);
  for (std::size_t c = 0; c < S.cell_count(); ++c) S.set_value(c, oracle::random_matrix(rng, 2));
  const Json j = io::to_json(S);
  EXPECT_EQ(j["cells"].size(), 24u);
  EXPECT_EQ(io::spectrum_step_from_json(Json::parse(j.dump())), S);
  EXPECT_TRUE(std::holds_alternative<SpectrumStep>(io::signal_from_json(j)));
}

TEST(Io, SystemAcceptsFullEnvelopeObjects) {
  const FrameSystem sys = fixtures::exam1();
  Json j = io::to_json(sys);
  Json full = Json::array();
  for (const auto& e : sys.time_envelopes()) full.push_back(io::to_json(e));
  j["envelopes"] = full;
  EXPECT_EQ(io::frame_system_from_json(j), sys);
}

TEST(Io, RejectsMalformedInput) {
  EXPECT_EQ(code_of(R"({"n": 1})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 1, "r": 1}, "n": 1})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 1, "r": 1}, "n": 1, "envelopes": [[]]})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 1, "r": 1}, "n": "two", "envelopes": []})"), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 1, "r": 1}, "n": 1,
                        "envelopes": [[{"s": 2, "l": 0, "matrix": [[{"re": 1, "im": 0}]]}]]})"),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 1, "r": 1}, "n": 1,
                        "envelopes": [[{"s": 0, "l": 0, "matrix": [[{"re": "x", "im": 0}]]}]]})"),
            ErrorCode::InvalidInput);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 4, "r": 2}, "n": 1, "envelopes": []})"), ErrorCode::RejectedParameters);
  EXPECT_EQ(code_of(R"({"lattice": {"N": 1, "r": 1}, "n": 1,
                        "envelopes_spectral": [{"lattice": {"N": 1, "r": 1}, "n": 1, "refinement": 1,
                                                 "cells": [[[{"re": 1, "im": 0}]]]}]})"),
            ErrorCode::ShapeMismatch);
  EXPECT_THROW(io::signal_from_json(Json::parse("[1, 2]")), Error);
}

TEST(Io, CompanionsRoundTrip) {
  const auto ce = fixtures::counterexample(3, 1, 2.0);
  io::SystemDocument doc{ce.system, {}};
  doc.companions.emplace("t", ce.test_spectrum);
  doc.companions.emplace("d", MatrixSeq(ce.system.lattice(), 2, {{LatticePoint{1, -4}, CMatrix::Identity(2, 2)}}));
  const Json j = io::to_json(doc);
  const io::SystemDocument back = io::system_document_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.system, doc.system);
  EXPECT_EQ(back.companions, doc.companions);
}

TEST(Io, Fnv1a) {
  EXPECT_EQ(io::fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a64_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(io::fnv1a64_hex("foobar"), "85944171f73967e8");
}

TEST(Io, ReportsAreDeterministic) {
  const FrameSystem sys = fixtures::onb_fixture();
  const std::string a = io::to_json(frame_bounds_gamma(sys, 64, 1)).dump();
  const std::string b = io::to_json(frame_bounds_gamma(sys, 64, 3)).dump();
  EXPECT_EQ(a, b);
}

TEST(Io, FileErrors) {
  EXPECT_THROW(io::read_text_file("/nonexistent/file.json"), Error);
  EXPECT_THROW(io::write_text_file("/nonexistent/dir/out.json", "x"), Error);
}
