#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <nlohmann/json.hpp>

#include "eqcmm/eqcmm_model.hpp"
#include "eqcmm/ensembles.hpp"
#include "eqcmm/experiments.hpp"
#include "eqcmm/gram_schmidt.hpp"
#include "eqcmm/memory.hpp"
#include "eqcmm/serialization.hpp"
#include "eqcmm/state.hpp"

namespace py = pybind11;
using namespace eqcmm;

PYBIND11_MODULE(_eqcmm, m) {
  m.doc() = "Quantum-inspired correlation matrix memories: outer-product "
            "training, Gram-Schmidt key orthogonalisation and the combined "
            "crosstalk-free memory.";

  auto base = py::register_exception<Error>(m, "EqcmmError");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ZeroVectorError>(m, "ZeroVectorError", base.ptr());
  py::register_exception<EnergyError>(m, "EnergyError", base.ptr());
  py::register_exception<DegenerateSetError>(m, "DegenerateSetError", base.ptr());
  py::register_exception<SingularSolveError>(m, "SingularSolveError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());

  // ---- states -------------------------------------------------------
  py::class_<BlochAngles>(m, "BlochAngles")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readwrite("theta", &BlochAngles::theta)
      .def_readwrite("phi", &BlochAngles::phi);

  m.def("bloch_to_state",
        [](double theta, double phi) {
          return bloch_to_state(BlochAngles{theta, phi});
        },
        py::arg("theta"), py::arg("phi"),
        "Qubit [cos(theta/2), sin(theta/2) e^{i phi}] for a Bloch point.");
  m.def("inner", &inner, py::arg("a"), py::arg("b"),
        "<a|b>, conjugate-linear in the first argument.");
  m.def("energy", &energy, py::arg("v"));
  m.def("normalize", &normalize, py::arg("v"));
  m.def("cosine", &cosine, py::arg("a"), py::arg("b"));
  m.def("outer", &outer, py::arg("y"), py::arg("x"), "|y><x|");

  // ---- orthogonalisation --------------------------------------------
  py::enum_<GSMode>(m, "GSMode")
      .value("Classical", GSMode::Classical)
      .value("Modified", GSMode::Modified);

  py::class_<GSFactors>(m, "GSFactors")
      .def_readonly("Z", &GSFactors::Z)
      .def_readonly("R", &GSFactors::R)
      .def_readonly("rank", &GSFactors::rank)
      .def_readonly("dropped", &GSFactors::dropped)
      .def_readonly("tol", &GSFactors::tol);

  m.def("gram_schmidt", &gram_schmidt, py::arg("keys"),
        py::arg("mode") = GSMode::Modified, py::arg("tol") = kDefaultTol,
        py::arg("reorthogonalize") = false);
  m.def("orthonormality_residual",
        py::overload_cast<const ComplexMatrix&>(&orthonormality_residual),
        py::arg("Z"));
  m.def("orthonormality_residual",
        py::overload_cast<const std::vector<StateVector>&>(
            &orthonormality_residual),
        py::arg("keys"));
  m.def("reconstruct", &reconstruct, py::arg("factors"));

  // ---- plain memory --------------------------------------------------
  py::class_<TrainingPair>(m, "TrainingPair")
      .def(py::init<StateVector, StateVector>(), py::arg("key"),
           py::arg("memorized"))
      .def_readwrite("key", &TrainingPair::key)
      .def_readwrite("memorized", &TrainingPair::memorized);

  py::class_<MemoryMatrix>(m, "MemoryMatrix")
      .def_static("zero", &MemoryMatrix::zero, py::arg("m_out"), py::arg("m_in"))
      .def_readonly("M", &MemoryMatrix::M)
      .def_readonly("pairs_trained", &MemoryMatrix::pairs_trained);

  py::class_<RecallDiagnostics>(m, "RecallDiagnostics")
      .def_readonly("response", &RecallDiagnostics::response)
      .def_readonly("signal", &RecallDiagnostics::signal)
      .def_readonly("noise", &RecallDiagnostics::noise)
      .def_readonly("noise_norm", &RecallDiagnostics::noise_norm)
      .def_readonly("response_cosine", &RecallDiagnostics::response_cosine);

  py::enum_<CapacityStatus>(m, "CapacityStatus")
      .value("WithinCapacity", CapacityStatus::WithinCapacity)
      .value("RankDeficient", CapacityStatus::RankDeficient);

  py::class_<CapacityVerdict>(m, "CapacityVerdict")
      .def_readonly("status", &CapacityVerdict::status)
      .def_readonly("m", &CapacityVerdict::m)
      .def_readonly("q", &CapacityVerdict::q)
      .def_readonly("keys_rank", &CapacityVerdict::keys_rank);

  m.def("train_batch", &train_batch, py::arg("pairs"),
        py::arg("require_unit_energy") = false);
  m.def("train_step", &train_step, py::arg("memory"), py::arg("pair"),
        py::arg("require_unit_energy") = false);
  m.def("recall",
        py::overload_cast<const MemoryMatrix&, const StateVector&>(&recall),
        py::arg("memory"), py::arg("stimulus"));
  m.def("decompose_recall", &decompose_recall, py::arg("pairs"), py::arg("j"),
        py::arg("require_unit_energy") = true,
        "Signal/noise split of recalling the j-th stored key (1-based).");
  m.def("crosstalk_matrix", &crosstalk_matrix, py::arg("keys"));
  m.def("capacity_check", &capacity_check, py::arg("m"), py::arg("q"),
        py::arg("keys_rank"));

  // ---- orthogonalised memory ----------------------------------------
  py::enum_<QueryMode>(m, "QueryMode")
      .value("ZQuery", QueryMode::ZQuery)
      .value("XQuery", QueryMode::XQuery)
      .value("RawX", QueryMode::RawX);

  py::class_<EqcmmModel>(m, "EqcmmModel")
      .def_readonly("factors", &EqcmmModel::factors)
      .def_readonly("Y", &EqcmmModel::Y)
      .def_readonly("memory_z", &EqcmmModel::memory_z)
      .def_readonly("key_index", &EqcmmModel::key_index)
      .def_property_readonly("dim_in", &EqcmmModel::dim_in)
      .def_property_readonly("dim_out", &EqcmmModel::dim_out)
      .def_property_readonly("pairs", &EqcmmModel::pairs);

  m.def("fit", &fit, py::arg("pairs"), py::arg("mode") = GSMode::Modified,
        py::arg("tol") = kDefaultTol);
  m.def("recall_z", &recall_z, py::arg("model"), py::arg("z"));
  m.def("recall_x", &recall_x, py::arg("model"), py::arg("x"));
  m.def("recall_raw", &recall_raw, py::arg("model"), py::arg("x"));
  m.def("recall",
        py::overload_cast<const EqcmmModel&, const StateVector&, QueryMode>(
            &recall),
        py::arg("model"), py::arg("stimulus"),
        py::arg("mode") = QueryMode::XQuery);

  // ---- ensembles ------------------------------------------------------
  py::enum_<EnsembleKind>(m, "EnsembleKind")
      .value("HaarRandom", EnsembleKind::HaarRandom)
      .value("BlochQubit", EnsembleKind::BlochQubit)
      .value("Bipolar", EnsembleKind::Bipolar)
      .value("Perturbed", EnsembleKind::Perturbed);

  py::class_<EnsembleSpec>(m, "EnsembleSpec")
      .def(py::init([](EnsembleKind kind, int dim, int count, double noise_eps) {
             return EnsembleSpec{kind, dim, count, noise_eps};
           }),
           py::arg("kind"), py::arg("dim"), py::arg("count"),
           py::arg("noise_eps") = 0.0)
      .def_readwrite("kind", &EnsembleSpec::kind)
      .def_readwrite("dim", &EnsembleSpec::dim)
      .def_readwrite("count", &EnsembleSpec::count)
      .def_readwrite("noise_eps", &EnsembleSpec::noise_eps);

  m.def("generate",
        [](const EnsembleSpec& spec, std::uint64_t seed) {
          return generate(spec, Seed{seed});
        },
        py::arg("spec"), py::arg("seed"));
  m.def("coherence", &coherence, py::arg("keys"));
  m.def("perturb",
        [](const StateVector& base, double eps, std::uint64_t seed,
           std::uint64_t index) { return perturb(base, eps, Seed{seed}, index); },
        py::arg("base"), py::arg("eps"), py::arg("seed"), py::arg("index") = 0);

  // ---- experiments ----------------------------------------------------
  py::enum_<Method>(m, "Method")
      .value("Qcmm", Method::Qcmm)
      .value("EqcmmX", Method::EqcmmX)
      .value("EqcmmZ", Method::EqcmmZ)
      .value("EqcmmRaw", Method::EqcmmRaw)
      .value("PinvOracle", Method::PinvOracle);

  py::class_<SweepConfig>(m, "SweepConfig")
      .def(py::init([](int dim, std::vector<int> q_values, EnsembleKind kind,
                       int trials, std::uint64_t seed, double tol,
                       std::vector<Method> methods, double stimulus_noise_eps,
                       double ensemble_noise_eps) {
             SweepConfig c;
             c.dim = dim;
             c.q_values = std::move(q_values);
             c.kind = kind;
             c.trials = trials;
             c.seed = Seed{seed};
             c.tol = tol;
             c.methods = std::move(methods);
             c.stimulus_noise_eps = stimulus_noise_eps;
             c.ensemble_noise_eps = ensemble_noise_eps;
             return c;
           }),
           py::arg("dim"), py::arg("q_values"),
           py::arg("kind") = EnsembleKind::HaarRandom, py::arg("trials") = 1,
           py::arg("seed") = 0, py::arg("tol") = kDefaultTol,
           py::arg("methods") =
               std::vector<Method>{Method::Qcmm, Method::EqcmmX,
                                   Method::EqcmmZ, Method::EqcmmRaw,
                                   Method::PinvOracle},
           py::arg("stimulus_noise_eps") = 0.0,
           py::arg("ensemble_noise_eps") = 0.1);

  py::class_<ReportRow>(m, "ReportRow")
      .def_readonly("m", &ReportRow::m)
      .def_readonly("q", &ReportRow::q)
      .def_readonly("method", &ReportRow::method)
      .def_readonly("mean_err", &ReportRow::mean_err)
      .def_readonly("max_err", &ReportRow::max_err)
      .def_readonly("mean_cos", &ReportRow::mean_cos)
      .def_readonly("mean_noise", &ReportRow::mean_noise)
      .def_readonly("coherence", &ReportRow::coherence)
      .def_readonly("rank", &ReportRow::rank)
      .def_readonly("wall_ms", &ReportRow::wall_ms);

  py::class_<ExperimentReport>(m, "ExperimentReport")
      .def_readonly("rows", &ExperimentReport::rows);

  m.def("run_sweep", &run_sweep, py::arg("config"));
  m.def("to_csv", &to_csv, py::arg("report"));
  m.def("parse_csv", &parse_csv, py::arg("text"));
  m.def("emit_csv", &emit_csv, py::arg("report"), py::arg("path"));
  m.def("to_svg", &to_svg, py::arg("report"));
  m.def("emit_plot", &emit_plot, py::arg("report"), py::arg("path"));

  // ---- model files ----------------------------------------------------
  m.def("save_model",
        [](const EqcmmModel& model, const std::filesystem::path& path) {
          save_json(model_to_json(model), path);
        },
        py::arg("model"), py::arg("path"));
  m.def("load_model",
        [](const std::filesystem::path& path) {
          return model_from_json(load_json(path));
        },
        py::arg("path"));
  m.def("save_memory",
        [](const MemoryMatrix& memory, const std::filesystem::path& path) {
          save_json(memory_to_json(memory), path);
        },
        py::arg("memory"), py::arg("path"));
  m.def("load_memory",
        [](const std::filesystem::path& path) {
          return memory_from_json(load_json(path));
        },
        py::arg("path"));

  m.attr("__version__") = "0.1.0";
}
