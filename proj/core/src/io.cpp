#include "majorana/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "majorana/errors.hpp"

namespace majorana {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidArgument("complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int two_s_from(const json& doc) {
  const auto it = doc.find("twoS");
  if (it == doc.end() || !it->is_number_integer()) throw InvalidArgument("missing integer field 'twoS'");
  const int v = it->get<int>();
  if (v < 0) throw InvalidArgument("twoS must be >= 0");
  return v;
}

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw InvalidArgument("expected a JSON object");
  const auto it = doc.find(name);
  if (it == doc.end()) throw InvalidArgument(std::string("missing field '") + name + "'");
  return *it;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON content: ") + e.what());
  }
}

}  // namespace

std::string to_json(const SpinState& state) {
  json amps = json::array();
  for (const cplx& a : state.amplitudes()) amps.push_back(complex_json(a));
  return json{{"twoS", state.two_s()}, {"amplitudes", amps}}.dump() + "\n";
}

SpinState spin_state_from_json(std::string_view text) {
  const json doc = parse(text);
  return guarded([&] {
    const SpinLabel label(two_s_from(doc));
    const json& amps = field(doc, "amplitudes");
    if (!amps.is_array()) throw InvalidArgument("'amplitudes' must be an array");
    std::vector<cplx> a;
    for (const json& x : amps) a.push_back(complex_from(x));
    return SpinState(label, std::move(a));
  });
}

std::string to_json(const Constellation& constellation, bool angles) {
  json doc{{"twoS", constellation.label().two_s()}};
  if (angles) {
    json stars = json::array();
    for (const SpherePoint& p : constellation.sphere_points()) stars.push_back(json::array({p.theta(), p.phi()}));
    doc["stars"] = stars;
  } else {
    json roots = json::array();
    for (const cplx& z : constellation.finite_roots()) roots.push_back(complex_json(z));
    doc["roots"] = roots;
    doc["infinity_count"] = constellation.infinity_count();
  }
  return doc.dump() + "\n";
}

Constellation constellation_from_json(std::string_view text) {
  const json doc = parse(text);
  return guarded([&] {
    if (!doc.is_object()) throw InvalidArgument("expected a JSON object");
    if (doc.contains("stars")) {
      const json& stars = doc["stars"];
      if (!stars.is_array()) throw InvalidArgument("'stars' must be an array");
      std::vector<SpherePoint> pts;
      for (const json& s : stars) {
        if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number()) {
          throw InvalidArgument("stars must be [theta, phi] pairs");
        }
        const double theta = s[0].get<double>(), phi = s[1].get<double>();
        if (!std::isfinite(theta) || !std::isfinite(phi)) throw InvalidArgument("star angles must be finite");
        pts.emplace_back(theta, phi);
      }
      const int two_s = doc.contains("twoS") ? two_s_from(doc) : static_cast<int>(pts.size());
      if (two_s != static_cast<int>(pts.size())) throw InvalidArgument("star count differs from twoS");
      return Constellation::from_stars(SpinLabel(two_s), pts);
    }
    const SpinLabel label(two_s_from(doc));
    const json& roots = field(doc, "roots");
    if (!roots.is_array()) throw InvalidArgument("'roots' must be an array");
    std::vector<cplx> r;
    for (const json& x : roots) r.push_back(complex_from(x));
    const json& inf = field(doc, "infinity_count");
    if (!inf.is_number_integer()) throw InvalidArgument("'infinity_count' must be an integer");
    return Constellation(label, std::move(r), inf.get<int>());
  });
}

std::string to_json(const MultipoleSpectrum& spectrum, int upto) {
  const int top = upto < 0 ? spectrum.max_order() : std::min(upto, spectrum.max_order());
  json rho = json::array();
  json w = json::array();
  json a = json::array();
  for (int K = 0; K <= top; ++K) {
    for (int q = -K; q <= K; ++q) {
      const cplx c = spectrum.rho(K, q);
      rho.push_back({{"K", K}, {"q", q}, {"re", c.real()}, {"im", c.imag()}});
    }
    w.push_back(spectrum.lengths()[static_cast<std::size_t>(K)]);
    if (K >= 1) a.push_back(spectrum.cumulative()[static_cast<std::size_t>(K - 1)]);
  }
  return json{{"twoS", spectrum.label().two_s()}, {"rho", rho}, {"w", w}, {"A", a}}.dump() + "\n";
}

std::string to_json(const KingResult& result) {
  json doc{{"twoS", result.constellation.label().two_s()},
           {"M", result.M},
           {"objective", result.objective},
           {"unpolarized_order", result.unpolarized_order},
           {"constellation", json::parse(to_json(result.constellation))},
           {"restarts_converged", result.restarts_converged},
           {"converged", result.converged},
           {"history", result.history}};
  return doc.dump() + "\n";
}

std::string to_jsonl(const StarTrajectory& trajectory) {
  std::string out;
  for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
    const Constellation& c = trajectory.snapshots[i];
    json roots = json::array();
    for (const cplx& z : c.finite_roots()) roots.push_back(complex_json(z));
    out += json{{"t", trajectory.times[i]},
                {"roots", roots},
                {"infinity_count", c.infinity_count()},
                {"fallback", static_cast<bool>(trajectory.fallback[i])}}
               .dump();
    out += '\n';
  }
  return out;
}

Hamiltonian hamiltonian_from_json(std::string_view text, std::optional<SpinLabel> label) {
  const json doc = parse(text);
  return guarded([&] {
    if (!doc.is_object()) throw InvalidArgument("expected a JSON object");
    std::optional<SpinLabel> own;
    if (doc.contains("twoS")) own = SpinLabel(two_s_from(doc));
    if (own && label && *own != *label) throw LabelMismatch("Hamiltonian twoS differs from the state");
    if (doc.contains("builtin")) {
      const SpinLabel l = own ? *own : (label ? *label : throw InvalidArgument("builtin Hamiltonian needs twoS"));
      const json& name = doc["builtin"];
      if (!name.is_string()) throw InvalidArgument("'builtin' must be a string");
      double coupling = 1.0;
      if (doc.contains("coupling")) {
        if (!doc["coupling"].is_number()) throw InvalidArgument("'coupling' must be a number");
        coupling = doc["coupling"].get<double>();
      }
      return Hamiltonian::builtin(l, name.get<std::string>(), coupling);
    }
    if (!own) throw InvalidArgument("matrix Hamiltonian needs twoS");
    const json& rows = field(doc, "matrix");
    const int d = own->dimension();
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) throw InvalidArgument("matrix must have 2S+1 rows");
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i) {
      const json& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != d) throw InvalidArgument("matrix must have 2S+1 columns");
      for (int j = 0; j < d; ++j) m(i, j) = complex_from(row[static_cast<std::size_t>(j)]);
    }
    return Hamiltonian(*own, std::move(m));
  });
}

std::string to_csv(const QGrid& grid) {
  std::string out = "theta,phi,Q\n";
  char buf[96];
  for (std::size_t i = 0; i < grid.theta_nodes.size(); ++i) {
    for (std::size_t j = 0; j < grid.phi_nodes.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.theta_nodes[i], grid.phi_nodes[j],
                    grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      out += buf;
    }
  }
  return out;
}

}  // namespace majorana
