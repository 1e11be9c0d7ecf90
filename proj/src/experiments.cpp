#include "eqcmm/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "eqcmm/eqcmm_model.hpp"
#include "eqcmm/memory.hpp"

namespace eqcmm {

std::string method_name(Method m) {
  switch (m) {
    case Method::Qcmm:
      return "qcmm";
    case Method::EqcmmX:
      return "eqcmm_x";
    case Method::EqcmmZ:
      return "eqcmm_z";
    case Method::EqcmmRaw:
      return "eqcmm_raw";
    case Method::PinvOracle:
      return "pinv_oracle";
  }
  throw DomainError("method_name: unknown method");
}

Method parse_method(const std::string& name) {
  if (name == "qcmm") return Method::Qcmm;
  if (name == "eqcmm_x") return Method::EqcmmX;
  if (name == "eqcmm_z") return Method::EqcmmZ;
  if (name == "eqcmm_raw") return Method::EqcmmRaw;
  if (name == "pinv_oracle") return Method::PinvOracle;
  throw DomainError("parse_method: unknown method '" + name + "'");
}

namespace {

void validate(const SweepConfig& config) {
  if (config.dim < 1) {
    throw DomainError("run_sweep: dim must be >= 1");
  }
  if (config.q_values.empty()) {
    throw DomainError("run_sweep: q_values must be nonempty");
  }
  for (int q : config.q_values) {
    if (q < 1) {
      throw DomainError("run_sweep: every q must be >= 1");
    }
  }
  if (config.trials < 1) {
    throw DomainError("run_sweep: trials must be >= 1");
  }
  if (!(config.tol > 0.0)) {
    throw DomainError("run_sweep: tol must be positive");
  }
  if (!(config.stimulus_noise_eps >= 0.0) ||
      !(config.ensemble_noise_eps >= 0.0)) {
    throw DomainError("run_sweep: noise eps must be >= 0");
  }
}

double safe_abs_cosine(const StateVector& a, const StateVector& b) {
  if (energy(a) <= kEpsZero || energy(b) <= kEpsZero) {
    return 0.0;
  }
  return std::abs(cosine(a, b));
}

struct Accum {
  double sum_err = 0.0;
  double max_err = 0.0;
  double sum_cos = 0.0;
  double sum_noise = 0.0;
  double sum_coherence = 0.0;
  long recalls = 0;
  int trials_done = 0;
  int min_rank = std::numeric_limits<int>::max();
  double wall_ms = 0.0;
};

}  // namespace

ExperimentReport run_sweep(const SweepConfig& config) {
  validate(config);
  using clock = std::chrono::steady_clock;

  ExperimentReport report;
  for (std::size_t ci = 0; ci < config.q_values.size(); ++ci) {
    const int q = config.q_values[ci];
    std::vector<Accum> acc(config.methods.size());

    for (int trial = 0; trial < config.trials; ++trial) {
      const std::uint64_t cell =
          static_cast<std::uint64_t>(ci) * config.trials + trial;

      EnsembleSpec key_spec;
      key_spec.kind = config.kind;
      key_spec.dim = config.dim;
      key_spec.count = q;
      key_spec.noise_eps =
          config.kind == EnsembleKind::Perturbed ? config.ensemble_noise_eps : 0.0;
      EnsembleSpec mem_spec;
      mem_spec.kind = EnsembleKind::HaarRandom;
      mem_spec.dim = config.dim;
      mem_spec.count = q;

      const auto keys = generate(key_spec, derive_seed(config.seed, "sweep-keys", cell));
      const auto mems = generate(mem_spec, derive_seed(config.seed, "sweep-memorized", cell));
      std::vector<TrainingPair> pairs(q);
      for (int k = 0; k < q; ++k) {
        pairs[k] = TrainingPair{keys[k], mems[k]};
      }
      const double coh = q >= 2 ? coherence(keys) : 0.0;
      const Seed stim_seed = derive_seed(config.seed, "sweep-stimulus", cell);

      EqcmmModel model;
      try {
        model = fit(pairs, GSMode::Modified, config.tol);
      } catch (const Error& e) {
        std::cerr << "WARNING: skipping q=" << q << " trial " << trial << ": "
                  << e.what() << "\n";
        continue;
      }

      for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
        const Method method = config.methods[mi];
        Accum& a = acc[mi];

        MemoryMatrix plain;
        Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod;
        if (method == Method::Qcmm) {
          plain = train_batch(pairs);
        } else if (method == Method::PinvOracle) {
          ComplexMatrix X(config.dim, q);
          for (int k = 0; k < q; ++k) {
            X.col(k) = keys[k];
          }
          cod.compute(X);
        }
        std::function<StateVector(const StateVector&)> respond;
        switch (method) {
          case Method::Qcmm:
            respond = [&](const StateVector& v) { return recall(plain, v); };
            break;
          case Method::EqcmmX:
            respond = [&](const StateVector& v) { return recall_x(model, v); };
            break;
          case Method::EqcmmZ:
            respond = [&](const StateVector& v) { return recall_z(model, v); };
            break;
          case Method::EqcmmRaw:
            respond = [&](const StateVector& v) { return recall_raw(model, v); };
            break;
          case Method::PinvOracle:
            respond = [&](const StateVector& v) {
              return StateVector(model.Y * cod.solve(v));
            };
            break;
        }

        for (int j = 0; j < q; ++j) {
          StateVector stored;
          if (method == Method::EqcmmZ) {
            if (model.key_index[j] == 0) {
              continue;  // dropped pair, not present in the z-memory
            }
            stored = model.factors.Z.col(model.key_index[j] - 1);
          } else {
            stored = keys[j];
          }
          const StateVector& expected = mems[j];

          const auto t0 = clock::now();
          const StateVector resp_clean = respond(stored);
          StateVector resp = resp_clean;
          if (config.stimulus_noise_eps > 0.0) {
            resp = respond(perturb(stored, config.stimulus_noise_eps,
                                   stim_seed, static_cast<std::uint64_t>(j)));
          }
          a.wall_ms += std::chrono::duration<double, std::milli>(clock::now() - t0).count();

          const double err = std::sqrt(energy(resp - expected));
          a.sum_err += err;
          a.max_err = std::max(a.max_err, err);
          a.sum_cos += safe_abs_cosine(resp, expected);
          if (method == Method::Qcmm) {
            a.sum_noise += std::sqrt(
                energy(resp_clean - inner(stored, stored) * expected));
          } else {
            a.sum_noise += std::sqrt(energy(resp_clean - expected));
          }
          a.recalls += 1;
        }
        a.sum_coherence += coh;
        a.min_rank = std::min(a.min_rank, model.factors.rank);
        a.trials_done += 1;
      }
    }

    for (std::size_t mi = 0; mi < config.methods.size(); ++mi) {
      const Accum& a = acc[mi];
      ReportRow row;
      row.m = config.dim;
      row.q = q;
      row.method = config.methods[mi];
      if (a.recalls > 0) {
        row.mean_err = a.sum_err / a.recalls;
        row.max_err = a.max_err;
        row.mean_cos = a.sum_cos / a.recalls;
        row.mean_noise = a.sum_noise / a.recalls;
      }
      row.coherence = a.trials_done > 0 ? a.sum_coherence / a.trials_done : 0.0;
      row.rank = a.trials_done > 0 ? a.min_rank : 0;
      row.wall_ms = a.wall_ms;
      report.rows.push_back(row);
    }
  }
  return report;
}

namespace {

constexpr char kCsvHeader[] =
    "m,q,method,mean_err,max_err,mean_cos,mean_noise,coherence,rank,wall_ms";

std::string real9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

}  // namespace

std::string to_csv(const ExperimentReport& report) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const ReportRow& r : report.rows) {
    out += std::to_string(r.m) + ',' + std::to_string(r.q) + ',' +
           method_name(r.method) + ',' + real9(r.mean_err) + ',' +
           real9(r.max_err) + ',' + real9(r.mean_cos) + ',' +
           real9(r.mean_noise) + ',' + real9(r.coherence) + ',' +
           std::to_string(r.rank) + ',' + real9(r.wall_ms) + '\n';
  }
  return out;
}

ExperimentReport parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw DomainError("parse_csv: bad header line");
  }
  ExperimentReport report;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) {
      fields.push_back(field);
    }
    if (fields.size() != 10) {
      throw DomainError("parse_csv: expected 10 fields, got " +
                        std::to_string(fields.size()));
    }
    ReportRow r;
    try {
      r.m = std::stoi(fields[0]);
      r.q = std::stoi(fields[1]);
      r.method = parse_method(fields[2]);
      r.mean_err = std::stod(fields[3]);
      r.max_err = std::stod(fields[4]);
      r.mean_cos = std::stod(fields[5]);
      r.mean_noise = std::stod(fields[6]);
      r.coherence = std::stod(fields[7]);
      r.rank = std::stoi(fields[8]);
      r.wall_ms = std::stod(fields[9]);
    } catch (const std::exception& e) {
      throw DomainError(std::string("parse_csv: bad field: ") + e.what());
    }
    report.rows.push_back(r);
  }
  return report;
}

void emit_csv(const ExperimentReport& report,
              const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("emit_csv: cannot open '" + path.string() + "' for writing");
  }
  out << to_csv(report);
  if (!out.flush()) {
    throw IoError("emit_csv: write to '" + path.string() + "' failed");
  }
}

namespace {

constexpr double kErrFloor = 1e-16;  // log-scale clamp

const char* method_color(Method m) {
  switch (m) {
    case Method::Qcmm:
      return "#1f77b4";
    case Method::EqcmmX:
      return "#2ca02c";
    case Method::EqcmmZ:
      return "#9467bd";
    case Method::EqcmmRaw:
      return "#ff7f0e";
    case Method::PinvOracle:
      return "#d62728";
  }
  return "#000000";
}

std::string num2(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string num3g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

}  // namespace

std::string to_svg(const ExperimentReport& report) {
  constexpr double kW = 860, kH = 540;
  constexpr double kLeft = 70, kRight = 660, kTop = 40, kBottom = 490;

  // per-method series ordered by load
  std::map<Method, std::vector<std::pair<double, double>>> series;
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const ReportRow& r : report.rows) {
    const double load = static_cast<double>(r.q) / r.m;
    const double e = std::log10(std::max(r.mean_err, kErrFloor));
    series[r.method].emplace_back(load, e);
    xmin = std::min(xmin, load);
    xmax = std::max(xmax, load);
    ymin = std::min(ymin, e);
    ymax = std::max(ymax, e);
  }
  if (series.empty()) {
    xmin = 0.0;
    xmax = 1.0;
    ymin = -16.0;
    ymax = 0.0;
  }
  if (xmax - xmin < 1e-12) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  ymin = std::floor(ymin);
  ymax = std::ceil(ymax);
  if (ymax - ymin < 1.0) {
    ymax = ymin + 1.0;
  }
  for (auto& [method, pts] : series) {
    std::sort(pts.begin(), pts.end());
  }

  auto sx = [&](double x) {
    return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft);
  };
  auto sy = [&](double y) {
    return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num2(kW) + "\" height=\"" + num2(kH) + "\">\n";
  svg += "<text x=\"" + num2(kLeft) + "\" y=\"24\" font-family=\"sans-serif\" "
         "font-size=\"15\">mean recall error vs load q/m</text>\n";
  svg += "<line x1=\"" + num2(kLeft) + "\" y1=\"" + num2(kBottom) + "\" x2=\"" +
         num2(kRight) + "\" y2=\"" + num2(kBottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + num2(kLeft) + "\" y1=\"" + num2(kTop) + "\" x2=\"" +
         num2(kLeft) + "\" y2=\"" + num2(kBottom) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (double decade = ymin; decade <= ymax + 1e-9; decade += 1.0) {
    svg += "<text x=\"8\" y=\"" + num2(sy(decade) + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\">1e" +
           ((decade >= 0) ? "+" : "") + num3g(decade) + "</text>\n";
  }
  std::vector<double> xticks;
  for (const auto& [method, pts] : series) {
    for (const auto& [load, e] : pts) {
      xticks.push_back(load);
    }
  }
  std::sort(xticks.begin(), xticks.end());
  xticks.erase(std::unique(xticks.begin(), xticks.end()), xticks.end());
  for (double t : xticks) {
    svg += "<text x=\"" + num2(sx(t) - 8) + "\" y=\"" + num2(kBottom + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + num3g(t) +
           "</text>\n";
  }

  double legend_y = kTop + 10;
  for (const auto& [method, pts] : series) {
    std::string points;
    for (const auto& [load, e] : pts) {
      points += num2(sx(load)) + "," + num2(sy(e)) + " ";
    }
    if (!points.empty()) {
      points.pop_back();
    }
    svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
           method_color(method) + "\" stroke-width=\"1.5\"/>\n";
    svg += "<rect x=\"" + num2(kRight + 16) + "\" y=\"" + num2(legend_y - 10) +
           "\" width=\"12\" height=\"12\" fill=\"" + method_color(method) +
           "\"/>\n";
    svg += "<text x=\"" + num2(kRight + 34) + "\" y=\"" + num2(legend_y) +
           "\" font-family=\"sans-serif\" font-size=\"12\">" +
           method_name(method) + "</text>\n";
    legend_y += 20;
  }
  svg += "</svg>\n";
  return svg;
}

void emit_plot(const ExperimentReport& report,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("emit_plot: cannot open '" + path.string() + "' for writing");
  }
  out << to_svg(report);
  if (!out.flush()) {
    throw IoError("emit_plot: write to '" + path.string() + "' failed");
  }
}

}  // namespace eqcmm
