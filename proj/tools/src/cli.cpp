#include "majorana_cli/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "majorana/majorana.hpp"

namespace majorana::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading stdin");
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  if (file.bad()) throw IoError("failed reading '" + path + "'");
  return buf.str();
}

void write_output(const std::string& payload, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
    out.flush();
    if (!out) throw IoError("failed writing output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << payload;
  file.close();
  if (!file) throw IoError("failed writing '" + path + "'");
}

struct Options {
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string output;

  std::string input;
  std::string hamiltonian;
  bool angles = false;
  int n_theta = 64;
  int n_phi = 128;
  int upto = -1;
  int two_s = -1;
  int M = 1;
  int restarts = 16;
  bool scan = false;
  double t = 1.0;
  double dt_max = 0.0;
};

RootOptions root_options(const Options& o) {
  if (!(o.tol > 0.0)) throw InvalidArgument("--tol must be > 0");
  RootOptions r;
  r.residual_tol = o.tol;
  return r;
}

std::string cmd_stars(const Options& o, std::istream& in) {
  const SpinState state = spin_state_from_json(read_input(o.input, in));
  return to_json(constellation_from_state(state, root_options(o)), o.angles);
}

std::string cmd_state(const Options& o, std::istream& in) {
  return to_json(state_from_constellation(constellation_from_json(read_input(o.input, in))));
}

std::string cmd_qgrid(const Options& o, std::istream& in) {
  const SpinState state = spin_state_from_json(read_input(o.input, in));
  return to_csv(q_grid(state, o.n_theta, o.n_phi));
}

std::string cmd_multipoles(const Options& o, std::istream& in) {
  const SpinState state = spin_state_from_json(read_input(o.input, in));
  if (o.upto != -1 && (o.upto < 0 || o.upto > state.two_s())) throw RangeError("--upto outside 0..2S");
  return to_json(multipoles(state), o.upto);
}

std::string cmd_kings(const Options& o) {
  if (o.two_s < 0) throw InvalidArgument("--twoS must be >= 0");
  const SpinLabel label(o.two_s);
  SearchConfig config;
  config.M = o.M;
  config.restarts = o.restarts;
  config.seed = o.seed;
  if (o.scan) {
    std::vector<KingResult> runs;
    const int order = max_unpolarized_order(label, config, config.zero_tol, &runs);
    if (runs.empty()) throw RangeError("no multipole order to search for twoS = 0");
    return to_json(order > 0 ? runs[static_cast<std::size_t>(order - 1)] : runs.front());
  }
  return to_json(minimize(label, config));
}

std::string cmd_evolve(const Options& o, std::istream& in) {
  if (o.input == "-" && o.hamiltonian == "-") throw InvalidArgument("only one input may come from stdin");
  const SpinState state = spin_state_from_json(read_input(o.input, in));
  const Hamiltonian h = hamiltonian_from_json(read_input(o.hamiltonian, in), state.label());
  if (!(o.t >= 0.0)) throw InvalidArgument("--t must be >= 0");
  if (o.dt_max < 0.0) throw InvalidArgument("--dtmax must be > 0");
  EvolveOptions eo;
  eo.dt_max = o.dt_max;
  eo.roots = root_options(o);
  return to_jsonl(evolve(state, h, o.t, eo));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorana stellar representation toolkit", "majorana"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized commands");
  app.add_option("--tol", o.tol, "Root residual tolerance");
  app.add_option("--output,-o", o.output, "Write the payload to this file");

  auto* stars = app.add_subcommand("stars", "State JSON -> constellation JSON");
  stars->add_option("state", o.input, "State file or -")->required();
  stars->add_flag("--angles", o.angles, "Emit [theta, phi] pairs");

  auto* state = app.add_subcommand("state", "Constellation JSON -> state JSON");
  state->add_option("constellation", o.input, "Constellation file or -")->required();

  auto* qgrid = app.add_subcommand("qgrid", "Husimi Q on a Gauss-Legendre x uniform grid, CSV");
  qgrid->add_option("state", o.input, "State file or -")->required();
  qgrid->add_option("--ntheta", o.n_theta, "Nodes in theta")->capture_default_str();
  qgrid->add_option("--nphi", o.n_phi, "Nodes in phi")->capture_default_str();

  auto* mult = app.add_subcommand("multipoles", "State multipoles, lengths and cumulatives");
  mult->add_option("state", o.input, "State file or -")->required();
  mult->add_option("--upto", o.upto, "Highest order written");

  auto* kings = app.add_subcommand("kings", "Minimize A_M over constellations");
  kings->add_option("--twoS", o.two_s, "Twice the spin")->required();
  kings->add_option("--M", o.M, "Multipole order")->capture_default_str();
  kings->add_option("--restarts", o.restarts, "Random restarts")->capture_default_str();
  kings->add_flag("--max-order", o.scan, "Search upward for the largest unpolarizable order (ignores --M)");

  auto* evolve_cmd = app.add_subcommand("evolve", "Integrate the star equations of motion, JSONL");
  evolve_cmd->add_option("state", o.input, "State file or -")->required();
  evolve_cmd->add_option("hamiltonian", o.hamiltonian, "Hamiltonian file or -")->required();
  evolve_cmd->add_option("--t", o.t, "Final time")->capture_default_str();
  evolve_cmd->add_option("--dtmax", o.dt_max, "Largest step and snapshot spacing (default 0.01/||H||)");

  std::vector<std::string> argv_storage{"majorana"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    std::string payload;
    if (stars->parsed()) {
      payload = cmd_stars(o, in);
    } else if (state->parsed()) {
      payload = cmd_state(o, in);
    } else if (qgrid->parsed()) {
      payload = cmd_qgrid(o, in);
    } else if (mult->parsed()) {
      payload = cmd_multipoles(o, in);
    } else if (kings->parsed()) {
      payload = cmd_kings(o);
    } else {
      payload = cmd_evolve(o, in);
    }
    write_output(payload, o.output, out);
    return kOk;
  } catch (const IoError& e) {
    err << "majorana: I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const InvalidArgument& e) {
    err << "majorana: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NumericalError& e) {
    err << "majorana: numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "majorana: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace majorana::cli
