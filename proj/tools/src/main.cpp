#include <casimir/constants.hpp>
#include <casimir/decomposition.hpp>
#include <casimir/parallel.hpp>

#include "csv.hpp"
#include "run_config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace casimir;
using namespace casimir_cli;

constexpr const char* kVersion = "0.1.0";

struct StagedFlags {
  std::optional<std::string> model, table, tail, out, config;
  std::optional<double> omega_p, gamma, temperature, a_single, rel_tol, abs_tol;
  std::optional<int> max_subdivisions;
  std::optional<std::string> a_grid;
};

void add_common_options(CLI::App* cmd, StagedFlags& s) {
  cmd->add_option("--config", s.config, "JSON config file (flags override it)");
  cmd->add_option("--model", s.model, "dielectric model: drude|plasma|tabulated");
  cmd->add_option("--omega-p", s.omega_p, "plasma frequency, rad/s");
  cmd->add_option("--gamma", s.gamma, "relaxation parameter, rad/s");
  cmd->add_option("--table", s.table, "optical table file (tabulated model)");
  cmd->add_option("--tail", s.tail, "low-frequency extrapolation: drude|plasma");
  cmd->add_option("--T", s.temperature, "temperature, K");
  cmd->add_option("--a", s.a_single, "plate separation, m");
  cmd->add_option("--a-grid", s.a_grid, "separation grid start:stop:count[:log]");
  cmd->add_option("--rel-tol", s.rel_tol, "relative tolerance for sums/integrals");
  cmd->add_option("--abs-tol", s.abs_tol, "absolute tolerance, Pa");
  cmd->add_option("--max-subdivisions", s.max_subdivisions,
                  "adaptive quadrature subdivision budget");
  cmd->add_option("--out", s.out, "output CSV path ('-' = stdout)");
}

RunConfig resolve(const StagedFlags& s) {
  RunConfig cfg;  // built-in Au defaults
  if (s.config) cfg.apply_config_file(*s.config);
  if (s.model) cfg.model = *s.model;
  if (s.omega_p) cfg.omega_p = *s.omega_p;
  if (s.gamma) cfg.gamma = *s.gamma;
  if (s.table) cfg.table_path = *s.table;
  if (s.tail) cfg.tail = *s.tail;
  if (s.temperature) cfg.temperature = *s.temperature;
  if (s.a_single) cfg.a_single = *s.a_single;
  if (s.a_grid) cfg.a_grid = parse_grid(*s.a_grid);
  if (s.rel_tol) cfg.quad.rel_tol = *s.rel_tol;
  if (s.abs_tol) cfg.quad.abs_tol = *s.abs_tol;
  if (s.max_subdivisions) cfg.quad.max_subdivisions = *s.max_subdivisions;
  if (s.out) cfg.out = *s.out;
  validate(cfg.quad);
  return cfg;
}

void stamp(CsvDoc& doc, const std::string& command, const RunConfig& cfg,
           const DielectricModel& model) {
  doc.meta("casimir", command);
  doc.meta("version", kVersion);
  doc.meta("model", model.describe());
  doc.meta("T_K", format_sci(cfg.temperature));
  doc.meta("a_grid_m", cfg.describe_grid());
  doc.meta("rel_tol", format_sci(cfg.quad.rel_tol));
  doc.meta("abs_tol_Pa", format_sci(cfg.quad.abs_tol));
  doc.meta("max_subdivisions", std::to_string(cfg.quad.max_subdivisions));
}

int cmd_pressure(const StagedFlags& flags) {
  const RunConfig cfg = resolve(flags);
  const DielectricModel model = cfg.make_model();
  const std::vector<double> grid = cfg.separations();

  struct Row {
    double tm, te, err;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(grid.size(), [&](size_t i) {
    const GeometryThermal g{grid[i], cfg.temperature};
    const PolarizedPressure tm = pressure_polarized(model, Polarization::TM, g, cfg.quad);
    const PolarizedPressure te = pressure_polarized(model, Polarization::TE, g, cfg.quad);
    rows[i] = {tm.value, te.value,
               std::sqrt(tm.est_error * tm.est_error + te.est_error * te.est_error)};
  });

  CsvDoc doc;
  stamp(doc, "pressure", cfg, model);
  doc.columns({"a_m", "P_total_Pa", "P_TM_Pa", "P_TE_Pa", "est_error_Pa"});
  for (size_t i = 0; i < grid.size(); ++i) {
    doc.row({grid[i], rows[i].tm + rows[i].te, rows[i].tm, rows[i].te, rows[i].err});
  }
  doc.write(cfg.out);
  return 0;
}

int cmd_decompose(const StagedFlags& flags) {
  const RunConfig cfg = resolve(flags);
  const DielectricModel model = cfg.make_model();
  const std::vector<double> grid = cfg.separations();
  const std::vector<SweepRow> rows = sweep(model, grid, cfg.temperature, cfg.quad);

  CsvDoc doc;
  stamp(doc, "decompose", cfg, model);
  doc.columns({"a_m", "tm_prop_Pa", "tm_evan_Pa", "te_prop_Pa", "te_evan_Pa",
               "total_Pa", "ratio_to_classical", "est_error_Pa"});
  for (const SweepRow& r : rows) {
    doc.row({r.separation, r.components.tm_prop, r.components.tm_evan,
             r.components.te_prop, r.components.te_evan, r.components.total,
             r.ratio_to_classical, r.components.est_error});
  }
  doc.write(cfg.out);
  return 0;
}

int cmd_kk(const StagedFlags& flags, const std::string& xi_grid_text,
           bool junction_check) {
  RunConfig cfg = resolve(flags);
  if (cfg.table_path.empty()) {
    throw ValidationError("kk requires --table <path>");
  }
  cfg.model = "tabulated";
  const DielectricModel model = cfg.make_model();
  const GridSpec xi_grid =
      parse_grid(xi_grid_text.empty() ? "1e13:1e17:20:log" : xi_grid_text);

  const std::vector<double> xs = xi_grid.points();
  std::vector<double> eps(xs.size());
  std::vector<double> junction(xs.size(), 0.0);
  const OpticalTable* table = model.table();
  const Extrapolation tail = model.zero_frequency_tail();
  parallel_for(xs.size(), [&](size_t i) {
    eps[i] = model.eval_imag(xs[i]);
    if (junction_check) {
      junction[i] = kk_junction_sensitivity(*table, tail, xs[i]);
    }
  });

  CsvDoc doc;
  doc.meta("casimir", "kk");
  doc.meta("version", kVersion);
  doc.meta("model", model.describe());
  doc.meta("xi_grid_rad_s", xi_grid.str());
  if (junction_check) {
    doc.meta("note", "junction_sensitivity: relative change of eps(i xi) when the "
                     "tail/table switch moves up by one sample");
    doc.columns({"xi_rad_s", "eps_imag_axis", "junction_sensitivity"});
    for (size_t i = 0; i < xs.size(); ++i) doc.row({xs[i], eps[i], junction[i]});
  } else {
    doc.columns({"xi_rad_s", "eps_imag_axis"});
    for (size_t i = 0; i < xs.size(); ++i) doc.row({xs[i], eps[i]});
  }
  doc.write(cfg.out);
  return 0;
}

std::string table_label(const std::string& path) {
  std::ifstream in(path);
  std::string head(4096, '\0');
  in.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<size_t>(std::max<std::streamsize>(in.gcount(), 0)));
  std::transform(head.begin(), head.end(), head.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (head.find("synthetic") != std::string::npos ||
      path.find("synthetic") != std::string::npos) {
    return "synthetic-data self-check";
  }
  return "user-data";
}

void write_gnuplot(const std::filesystem::path& dir, const std::string& name,
                   const std::string& body) {
  const std::filesystem::path p = dir / name;
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw ValidationError("cannot open plot script: " + p.string());
  out << body;
}

int cmd_figures(const StagedFlags& flags, int points) {
  RunConfig cfg = resolve(flags);
  if (points < 1) throw ValidationError("figures: --points must be >= 1");
  const std::filesystem::path dir = cfg.out.empty() ? "figures" : cfg.out;
  std::filesystem::create_directories(dir);

  GridSpec grid;
  if (cfg.a_grid) {
    grid = *cfg.a_grid;
  } else {
    grid = GridSpec{0.5e-6, 4e-6, points, false};
  }
  cfg.a_grid = grid;  // stamp the grid actually swept
  const std::vector<double> as = grid.points();
  const double T = cfg.temperature;
  const DielectricModel drude = DielectricModel::drude(cfg.omega_p, cfg.gamma);
  const DielectricModel plasma = DielectricModel::plasma(cfg.omega_p);

  struct Totals {
    double tm_d, te_d, tm_p, te_p;
  };
  std::vector<Totals> totals(as.size());
  parallel_for(as.size(), [&](size_t i) {
    const GeometryThermal g{as[i], T};
    totals[i] = {pressure_polarized(drude, Polarization::TM, g, cfg.quad).value,
                 pressure_polarized(drude, Polarization::TE, g, cfg.quad).value,
                 pressure_polarized(plasma, Polarization::TM, g, cfg.quad).value,
                 pressure_polarized(plasma, Polarization::TE, g, cfg.quad).value};
  });

  auto base_cfg = cfg;
  {
    CsvDoc f1;
    stamp(f1, "figures fig1", base_cfg, drude);
    f1.columns({"a_m", "ratio_drude", "ratio_plasma"});
    CsvDoc f3;
    stamp(f3, "figures fig3", base_cfg, drude);
    f3.meta("note", "delta_tm is the magnitude of the Drude-vs-plasma TM deviation");
    f3.columns({"a_m", "tm_ratio_drude", "tm_ratio_plasma", "delta_tm"});
    for (size_t i = 0; i < as.size(); ++i) {
      const GeometryThermal g{as[i], T};
      const double pd0 = classical_limit(ModelKind::Drude, g);
      f1.row({as[i], (totals[i].tm_d + totals[i].te_d) / pd0,
              (totals[i].tm_p + totals[i].te_p) / pd0});
      f3.row({as[i], totals[i].tm_d / pd0, totals[i].tm_p / pd0,
              std::abs(relative_deviation_models(totals[i].tm_d, totals[i].tm_p))});
    }
    f1.write((dir / "fig1.csv").string());
    f3.write((dir / "fig3.csv").string());
  }

  {
    const std::vector<SweepRow> rows = sweep(drude, as, T, cfg.quad);
    CsvDoc f45;
    stamp(f45, "figures fig45", base_cfg, drude);
    f45.meta("note", "channels normalized to the Drude classical limit P_D0");
    f45.columns({"a_m", "tm_prop_drude", "tm_evan_drude", "tm_total_drude",
                 "tm_total_plasma", "te_prop_drude", "te_evan_drude",
                 "te_total_drude", "te_total_plasma"});
    for (size_t i = 0; i < as.size(); ++i) {
      const GeometryThermal g{as[i], T};
      const double pd0 = classical_limit(ModelKind::Drude, g);
      const PressureComponents& comp = rows[i].components;
      f45.row({as[i], comp.tm_prop / pd0, comp.tm_evan / pd0, comp.tm_total / pd0,
               totals[i].tm_p / pd0, comp.te_prop / pd0, comp.te_evan / pd0,
               comp.te_total / pd0, totals[i].te_p / pd0});
    }
    f45.write((dir / "fig45.csv").string());
  }

  if (!cfg.table_path.empty()) {
    RunConfig tab_cfg = cfg;
    tab_cfg.model = "tabulated";
    tab_cfg.tail = "drude";
    const DielectricModel core_d = tab_cfg.make_model();
    tab_cfg.tail = "plasma";
    const DielectricModel core_p = tab_cfg.make_model();

    std::vector<std::array<double, 2>> dev(as.size());
    parallel_for(as.size(), [&](size_t i) {
      const GeometryThermal g{as[i], T};
      const double pcd = pressure_polarized(core_d, Polarization::TM, g, cfg.quad).value +
                         pressure_polarized(core_d, Polarization::TE, g, cfg.quad).value;
      const double pcp = pressure_polarized(core_p, Polarization::TM, g, cfg.quad).value +
                         pressure_polarized(core_p, Polarization::TE, g, cfg.quad).value;
      dev[i] = {relative_deviation_models(totals[i].tm_d + totals[i].te_d, pcd),
                relative_deviation_models(totals[i].tm_p + totals[i].te_p, pcp)};
    });
    CsvDoc f2;
    stamp(f2, "figures fig2", base_cfg, core_d);
    f2.meta("mode", table_label(cfg.table_path));
    f2.columns({"a_m", "delta_drude", "delta_plasma"});
    for (size_t i = 0; i < as.size(); ++i) f2.row({as[i], dev[i][0], dev[i][1]});
    f2.write((dir / "fig2.csv").string());
  }

  write_gnuplot(dir, "fig1.gp",
                "set datafile separator ','\n"
                "set xlabel 'a (um)'\n"
                "set ylabel 'P / P_D^0'\n"
                "plot 'fig1.csv' using ($1*1e6):2 with lines title 'Drude', \\\n"
                "      'fig1.csv' using ($1*1e6):3 with lines title 'plasma'\n");
  write_gnuplot(dir, "fig3.gp",
                "set datafile separator ','\n"
                "set xlabel 'a (um)'\n"
                "set ylabel 'delta P_TM'\n"
                "plot 'fig3.csv' using ($1*1e6):4 with lines title '|delta P_TM|'\n");
  write_gnuplot(dir, "fig45.gp",
                "set datafile separator ','\n"
                "set xlabel 'a (um)'\n"
                "set ylabel 'P / P_D^0'\n"
                "plot 'fig45.csv' using ($1*1e6):2 with lines title 'TM prop (Drude)', \\\n"
                "     'fig45.csv' using ($1*1e6):3 with lines title 'TM evan (Drude)', \\\n"
                "     'fig45.csv' using ($1*1e6):6 with lines title 'TE prop (Drude)', \\\n"
                "     'fig45.csv' using ($1*1e6):7 with lines title 'TE evan (Drude)', \\\n"
                "     'fig45.csv' using ($1*1e6):8 with lines title 'TE total (Drude)', \\\n"
                "     'fig45.csv' using ($1*1e6):9 with lines title 'TE total (plasma)'\n");
  if (!cfg.table_path.empty()) {
    write_gnuplot(dir, "fig2.gp",
                  "set datafile separator ','\n"
                  "set xlabel 'a (um)'\n"
                  "set ylabel 'delta P'\n"
                  "plot 'fig2.csv' using ($1*1e6):2 with lines title 'Drude vs data', \\\n"
                  "     'fig2.csv' using ($1*1e6):3 with lines title 'plasma vs data'\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir pressure between parallel metallic plates: Lifshitz "
               "theory with TM/TE x propagating/evanescent decomposition"};
  app.require_subcommand(1);

  StagedFlags pressure_flags, decompose_flags, sweep_flags, kk_flags, figures_flags;
  std::string xi_grid_text;
  int figure_points = 12;

  CLI::App* pressure = app.add_subcommand(
      "pressure", "total pressure P, P_TM, P_TE over a separation grid");
  add_common_options(pressure, pressure_flags);

  CLI::App* decompose = app.add_subcommand(
      "decompose", "four-channel TM/TE x propagating/evanescent decomposition");
  add_common_options(decompose, decompose_flags);

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "decomposition sweep over a separation grid (same schema as decompose)");
  add_common_options(sweep_cmd, sweep_flags);

  CLI::App* kk = app.add_subcommand(
      "kk", "Kramers-Kronig permittivity on the imaginary axis from an optical table");
  add_common_options(kk, kk_flags);
  kk->add_option("--xi-grid", xi_grid_text, "xi grid start:stop:count[:log]");
  bool junction_check = false;
  kk->add_flag("--junction-check", junction_check,
               "report the tail/table junction sensitivity per xi");

  CLI::App* figures = app.add_subcommand(
      "figures", "CSV + gnuplot scripts for the pressure-ratio and channel figures");
  add_common_options(figures, figures_flags);
  figures->add_option("--points", figure_points, "separation grid size");

  try {
    app.parse(argc, argv);
    if (pressure->parsed()) return cmd_pressure(pressure_flags);
    if (decompose->parsed()) return cmd_decompose(decompose_flags);
    if (sweep_cmd->parsed()) return cmd_decompose(sweep_flags);
    if (kk->parsed()) return cmd_kk(kk_flags, xi_grid_text, junction_check);
    if (figures->parsed()) return cmd_figures(figures_flags, figure_points);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const casimir::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const casimir::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const casimir::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const casimir::CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
