#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "upmorph/algebra.hpp"
#include "upmorph/errors.hpp"
#include "upmorph/morphism.hpp"
#include "upmorph/periodicity.hpp"
#include "upmorph/stream.hpp"
#include "upmorph/witness.hpp"
#include "upmorph/word.hpp"

namespace py = pybind11;
using namespace upmorph;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Binary morphisms, unique decoding, and ultimately periodic words";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<RangeError>(m, "RangeError", base);
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<NoDecodeError>(m, "NoDecodeError", base);
  py::register_exception<StreamExhaustedError>(m, "StreamExhaustedError",
                                               base);
  py::register_exception<InsufficientEvidenceError>(
      m, "InsufficientEvidenceError", base);
  py::register_exception<InvariantViolationError>(m, "InvariantViolationError",
                                                  base);

  m.def("factor", &factor, py::arg("word"), py::arg("i"), py::arg("j"),
        "The factor word[i,j], 1-based and inclusive");
  m.def("power", &power, py::arg("word"), py::arg("count"));

  py::class_<Substitution>(m, "Substitution")
      .def(py::init([](std::map<char, Word> rules) {
             return Substitution{std::move(rules)};
           }),
           py::arg("rules"))
      .def("apply", &Substitution::apply, py::arg("word"));

  py::class_<WordStream>(m, "WordStream")
      .def_static("morphic", &WordStream::morphic, py::arg("rules"),
                  py::arg("seed"))
      .def_static("ultimately_periodic", &WordStream::ultimately_periodic,
                  py::arg("preperiod"), py::arg("period"))
      .def_static("explicit_word", &WordStream::explicit_word, py::arg("word"))
      .def("prefix", &WordStream::prefix, py::arg("count"));

  m.def("thue_morse", &thue_morse);
  m.def("fibonacci", &fibonacci);
  m.def("named_stream", &named_stream, py::arg("name"));

  py::class_<RootDecomposition>(m, "RootDecomposition")
      .def_readonly("root", &RootDecomposition::root)
      .def_readonly("exponent", &RootDecomposition::exponent)
      .def("__repr__", [](const RootDecomposition& r) {
        return "RootDecomposition(root='" + r.root +
               "', exponent=" + std::to_string(r.exponent) + ")";
      });

  m.def("commutes", &commutes, py::arg("u"), py::arg("v"));
  m.def("primitive_root", &primitive_root, py::arg("word"));
  m.def("common_root", &common_root, py::arg("u"), py::arg("v"));

  py::class_<BinaryMorphism>(m, "BinaryMorphism")
      .def(py::init<Word, Word>(), py::arg("image0"), py::arg("image1"))
      .def_readwrite("image0", &BinaryMorphism::image0)
      .def_readwrite("image1", &BinaryMorphism::image1)
      .def("apply", &BinaryMorphism::apply, py::arg("word"))
      .def("__repr__", [](const BinaryMorphism& h) {
        return "BinaryMorphism(image0='" + h.image0 + "', image1='" +
               h.image1 + "')";
      });

  py::class_<MorphismReport>(m, "MorphismReport")
      .def_readonly("commuting", &MorphismReport::commuting)
      .def_readonly("injective", &MorphismReport::injective)
      .def_readonly("root0", &MorphismReport::root0)
      .def_readonly("root1", &MorphismReport::root1)
      .def_readonly("shared_root", &MorphismReport::shared_root);

  m.def("classify", &classify, py::arg("morphism"));
  m.def("decode", &decode, py::arg("morphism"), py::arg("image"));

  py::class_<UPDecomposition>(m, "UPDecomposition")
      .def(py::init<Word, Word>(), py::arg("preperiod"), py::arg("period"))
      .def_readwrite("preperiod", &UPDecomposition::preperiod)
      .def_readwrite("period", &UPDecomposition::period)
      .def("__eq__",
           [](const UPDecomposition& a, const UPDecomposition& b) {
             return a == b;
           })
      .def("__repr__", [](const UPDecomposition& d) {
        return "UPDecomposition(preperiod='" + d.preperiod + "', period='" +
               d.period + "')";
      });

  py::class_<FitVerdict>(m, "FitVerdict")
      .def_readonly("fits", &FitVerdict::fits)
      .def_readonly("mismatch_index", &FitVerdict::mismatch_index)
      .def_readonly("full_periods_observed",
                    &FitVerdict::full_periods_observed);

  m.def("check_up_fit", &check_up_fit, py::arg("word"),
        py::arg("decomposition"));
  m.def("search_min_up", &search_min_up, py::arg("word"),
        py::arg("max_preperiod"), py::arg("max_period"),
        py::arg("min_full_periods"));
  m.def("canonicalize_up", &canonicalize_up, py::arg("decomposition"));
  m.def("up_prefix", &up_prefix, py::arg("decomposition"), py::arg("count"));

  py::class_<TraceBlock>(m, "TraceBlock")
      .def_readonly("block", &TraceBlock::block)
      .def_readonly("period_reps", &TraceBlock::period_reps);

  py::class_<PhaseTrace>(m, "PhaseTrace")
      .def_readonly("z1", &PhaseTrace::z1)
      .def_readonly("z2", &PhaseTrace::z2)
      .def_readonly("anchor", &PhaseTrace::anchor)
      .def_readonly("blocks", &PhaseTrace::blocks)
      .def_readonly("hit_count", &PhaseTrace::hit_count);

  py::class_<PeriodicityEvidence>(m, "PeriodicityEvidence")
      .def_readonly("preperiod", &PeriodicityEvidence::preperiod)
      .def_readonly("period", &PeriodicityEvidence::period);

  py::class_<CommutationWitness>(m, "CommutationWitness")
      .def_readonly("block_index", &CommutationWitness::block_index)
      .def_readonly("block", &CommutationWitness::block)
      .def_readonly("next_block", &CommutationWitness::next_block)
      .def_readonly("image", &CommutationWitness::image);

  py::class_<CandidateRefuted>(m, "CandidateRefuted")
      .def_readonly("image_mismatch_index",
                    &CandidateRefuted::image_mismatch_index);

  m.def("extract_phases", &extract_phases, py::arg("morphism"),
        py::arg("stream"), py::arg("decomposition"), py::arg("count"));
  m.def("classify_trace", &classify_trace, py::arg("morphism"),
        py::arg("trace"));

  py::class_<FalsifyConfig>(m, "FalsifyConfig")
      .def(py::init<>())
      .def_readwrite("trials", &FalsifyConfig::trials)
      .def_readwrite("prefix_length", &FalsifyConfig::prefix_length)
      .def_readwrite("alphabet_size", &FalsifyConfig::alphabet_size)
      .def_readwrite("max_image_length", &FalsifyConfig::max_image_length)
      .def_readwrite("max_preperiod", &FalsifyConfig::max_preperiod)
      .def_readwrite("max_period", &FalsifyConfig::max_period)
      .def_readwrite("seed", &FalsifyConfig::seed);

  py::class_<FalsifyTrial>(m, "FalsifyTrial")
      .def_readonly("index", &FalsifyTrial::index)
      .def_readonly("control", &FalsifyTrial::control)
      .def_readonly("stream", &FalsifyTrial::stream)
      .def_readonly("morphism", &FalsifyTrial::morphism)
      .def_readonly("control_root", &FalsifyTrial::control_root)
      .def_readonly("fit", &FalsifyTrial::fit)
      .def_readonly("canonical_fit", &FalsifyTrial::canonical_fit)
      .def_readonly("root_match", &FalsifyTrial::root_match)
      .def_readonly("as_predicted", &FalsifyTrial::as_predicted);

  py::class_<FalsifySummary>(m, "FalsifySummary")
      .def_readonly("trials", &FalsifySummary::trials)
      .def_readonly("noncommuting_fits", &FalsifySummary::noncommuting_fits)
      .def_readonly("control_fits", &FalsifySummary::control_fits)
      .def_readonly("control_root_matches",
                    &FalsifySummary::control_root_matches)
      .def_readonly("seed", &FalsifySummary::seed);

  py::class_<FalsifyReport>(m, "FalsifyReport")
      .def_readonly("trials", &FalsifyReport::trials)
      .def_readonly("summary", &FalsifyReport::summary);

  m.def("falsify", &falsify, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
}
